#include "growth/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace growth {

namespace {

using Coeffs = std::vector<mpz_class>;  // dense, ascending degree

void trim(Coeffs& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

void strip_content(Coeffs& c) {
    mpz_class g = 0;
    for (const auto& v : c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
    if (g <= 1) return;
    for (auto& v : c) v /= g;
}

// p(x) -> p(x+1), in place
void taylor_shift1(Coeffs& c) {
    const int n = static_cast<int>(c.size());
    for (int i = 0; i < n - 1; ++i)
        for (int j = n - 2; j >= i; --j) c[j] += c[j + 1];
}

int sign_variations(const Coeffs& c) {
    int v = 0, last = 0;
    for (const auto& x : c) {
        int s = sgn(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// Descartes bound for the number of roots in the open interval (0,1):
// variations of (1+x)^n q(1/(1+x)).
int var01(const Coeffs& q) {
    Coeffs t(q.rbegin(), q.rend());
    taylor_shift1(t);
    return sign_variations(t);
}

// left half: 2^n q(x/2)
Coeffs left_half(const Coeffs& q) {
    Coeffs l(q);
    const int n = static_cast<int>(l.size()) - 1;
    mpz_class f = 1;
    for (int i = n - 1; i >= 0; --i) {
        f <<= 1;
        l[i] *= f;
    }
    strip_content(l);
    return l;
}

// q has an exact root at 1/2 iff the right half has constant term 0.
// Deflating keeps the halves free of endpoint roots.
void deflate_root0(Coeffs& c) {
    c.erase(c.begin());
    trim(c);
}

void deflate_root1(Coeffs& c) {
    // synthetic division by (x - 1)
    Coeffs q(c.size() - 1);
    mpz_class carry = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 1; --i) {
        carry += c[i];
        q[i - 1] = carry;
    }
    c = std::move(q);
    trim(c);
}

struct Isolator {
    mpq_class eps;

    // Exactly one root of q lies in (0,1) and neither endpoint is a root
    // (split-point roots are deflated before recursing), so a plain sign
    // bisection on q is safe.  Transforms only ever rescale by positive
    // factors or divide out (t) / (t-1), which at most flips both endpoint
    // signs together, so the bracket certificate survives in the original
    // polynomial.
    RootInterval refine_local(const Coeffs& qc, const mpq_class& a, const mpq_class& b) const {
        ZPoly q{std::vector<mpz_class>(qc)};
        mpq_class tlo = 0, thi = 1;
        const int slo = q.sign_at(tlo);
        auto global = [&](const mpq_class& t) -> mpq_class { return a + (b - a) * t; };
        while ((b - a) * (thi - tlo) >
               eps * std::max(mpq_class(1), mpq_class(abs(global(thi))))) {
            mpq_class tm = (tlo + thi) / 2;
            int sm = q.sign_at(tm);
            if (sm == 0) {
                mpq_class root = global(tm);
                return RootInterval{root, root, true};
            }
            if (sm == slo) tlo = tm;
            else thi = tm;
        }
        return RootInterval{global(tlo), global(thi), false};
    }

    // all roots in (a,b), q mapped so that (a,b) <-> (0,1)
    void isolate01(Coeffs q, const mpq_class& a, const mpq_class& b,
                   std::vector<RootInterval>& out, int depth) const {
        if (depth > 4000) throw std::logic_error("root isolation depth exceeded");
        const int v = var01(q);
        if (v == 0) return;
        if (v == 1) {
            out.push_back(refine_local(q, a, b));
            return;
        }
        const mpq_class mid = (a + b) / 2;
        Coeffs l = left_half(q);
        Coeffs r = l;
        taylor_shift1(r);
        strip_content(r);
        bool mid_root = !r.empty() && r.front() == 0;
        if (mid_root) {
            deflate_root0(r);
            deflate_root1(l);
        }
        isolate01(std::move(l), a, mid, out, depth + 1);
        if (mid_root) out.push_back(RootInterval{mid, mid, true});
        isolate01(std::move(r), mid, b, out, depth + 1);
    }

    // the largest root in (a,b), exploring the right half first
    std::optional<RootInterval> max01(Coeffs q, const mpq_class& a, const mpq_class& b,
                                      int depth) const {
        if (depth > 4000) throw std::logic_error("root isolation depth exceeded");
        const int v = var01(q);
        if (v == 0) return std::nullopt;
        if (v == 1) return refine_local(q, a, b);
        const mpq_class mid = (a + b) / 2;
        Coeffs l = left_half(q);
        Coeffs r = l;
        taylor_shift1(r);
        strip_content(r);
        bool mid_root = !r.empty() && r.front() == 0;
        if (mid_root) {
            deflate_root0(r);
            deflate_root1(l);
        }
        if (auto hi = max01(std::move(r), mid, b, depth + 1)) return hi;
        if (mid_root) return RootInterval{mid, mid, true};
        return max01(std::move(l), a, mid, depth + 1);
    }
};

// strict upper bound 2^e on the absolute value of any root
int root_bound_exp(const Coeffs& c) {
    mpz_class m = 0;
    for (std::size_t k = 0; k + 1 < c.size(); ++k) m = std::max(m, mpz_class(abs(c[k])));
    mpz_class lead = abs(c.back());
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), m.get_mpz_t(), lead.get_mpz_t());
    q += 2;
    return static_cast<int>(mpz_sizeinbase(q.get_mpz_t(), 2));
}

// maps roots of p in (0, 2^e) onto (0,1)
Coeffs scale_to_unit(const ZPoly& p, int e) {
    Coeffs c = p.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) c[k] <<= static_cast<unsigned>(e * k);
    strip_content(c);
    return c;
}

ZPoly mirrored(const ZPoly& p) {
    Coeffs c = p.coeffs();
    for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
    return ZPoly(std::move(c));
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const ZPoly& p, const mpq_class& eps) {
    if (p.is_zero()) throw std::domain_error("isolate_real_roots: zero polynomial");
    ZPoly sf = square_free_part(p.primitive_part()).primitive_part();
    std::vector<RootInterval> out;
    if (sf.degree() < 1) return out;

    bool zero_root = sf.coeff(0) == 0;
    if (zero_root) {
        Coeffs c = sf.coeffs();
        while (!c.empty() && c.front() == 0) c.erase(c.begin());
        sf = ZPoly(std::move(c));
    }

    Isolator iso{eps};
    const int e = root_bound_exp(sf.coeffs());
    const mpq_class bound = mpq_class(mpz_class(1) << e);

    ZPoly neg = mirrored(sf);
    std::vector<RootInterval> negs;
    Isolator iso_neg{eps};
    iso_neg.isolate01(scale_to_unit(neg, e), 0, bound, negs, 0);
    for (auto it = negs.rbegin(); it != negs.rend(); ++it)
        out.push_back(RootInterval{-it->hi, -it->lo, it->exact});

    if (zero_root) out.push_back(RootInterval{0, 0, true});
    iso.isolate01(scale_to_unit(sf, e), 0, bound, out, 0);
    return out;
}

std::optional<RootInterval> max_real_root(const ZPoly& p, const mpq_class& eps) {
    if (p.is_zero()) throw std::domain_error("max_real_root: zero polynomial");
    ZPoly sf = square_free_part(p.primitive_part()).primitive_part();
    if (sf.degree() < 1) return std::nullopt;

    bool zero_root = sf.coeff(0) == 0;
    if (zero_root) {
        Coeffs c = sf.coeffs();
        while (!c.empty() && c.front() == 0) c.erase(c.begin());
        sf = ZPoly(std::move(c));
    }

    const int e = root_bound_exp(sf.coeffs());
    const mpq_class bound = mpq_class(mpz_class(1) << e);
    Isolator iso{eps};
    if (auto r = iso.max01(scale_to_unit(sf, e), 0, bound, 0)) return r;
    if (zero_root) return RootInterval{0, 0, true};

    // no positive root: the largest root is minus the smallest positive root
    // of p(-x); reuse full isolation on that side
    ZPoly neg = mirrored(sf);
    std::vector<RootInterval> negs;
    Isolator iso_neg{eps};
    iso_neg.isolate01(scale_to_unit(neg, e), 0, bound, negs, 0);
    if (negs.empty()) return std::nullopt;
    const RootInterval& first = negs.front();
    return RootInterval{-first.hi, -first.lo, first.exact};
}

}  // namespace growth
