#include "growth/zpoly.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace growth {

ZPoly ZPoly::monomial(int deg, mpz_class v) {
    std::vector<mpz_class> c(deg + 1, 0);
    c[deg] = std::move(v);
    return ZPoly(std::move(c));
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] = a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
    return ZPoly(std::move(c));
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) {
    std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] = a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] -= b.c_[k];
    return ZPoly(std::move(c));
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZPoly();
    std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    }
    return ZPoly(std::move(c));
}

ZPoly ZPoly::operator-() const {
    std::vector<mpz_class> c(c_);
    for (auto& v : c) v = -v;
    return ZPoly(std::move(c));
}

ZPoly ZPoly::scaled(const mpz_class& v) const {
    if (v == 0) return ZPoly();
    std::vector<mpz_class> c(c_);
    for (auto& x : c) x *= v;
    return ZPoly(std::move(c));
}

ZPoly ZPoly::derivative() const {
    if (c_.size() <= 1) return ZPoly();
    std::vector<mpz_class> c(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) c[k - 1] = mpz_class(k) * c_[k];
    return ZPoly(std::move(c));
}

mpz_class ZPoly::content() const {
    mpz_class g = 0;
    for (const auto& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly ZPoly::primitive_part() const {
    if (is_zero()) return ZPoly();
    mpz_class g = content();
    std::vector<mpz_class> c(c_);
    for (auto& v : c) v /= g;
    return ZPoly(std::move(c));
}

mpz_class ZPoly::eval(const mpz_class& x) const {
    mpz_class r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

int ZPoly::sign_at(const mpq_class& x) const {
    // sign of sum a_k p^k q^(n-k) with x = p/q in lowest terms
    if (is_zero()) return 0;
    const mpz_class& p = x.get_num();
    const mpz_class& q = x.get_den();
    mpz_class r = 0;
    mpz_class ppow = 1;
    std::vector<mpz_class> qpows(c_.size());
    qpows[0] = 1;
    for (std::size_t k = 1; k < c_.size(); ++k) qpows[k] = qpows[k - 1] * q;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        r += c_[k] * ppow * qpows[c_.size() - 1 - k];
        ppow *= p;
    }
    return sgn(r);
}

std::string ZPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        if (c_[k] == 0) continue;
        if (!first) out << (c_[k] < 0 ? " - " : " + ");
        else if (c_[k] < 0) out << "-";
        first = false;
        mpz_class mag = abs(c_[k]);
        if (mag != 1 || k == 0) out << mag.get_str();
        if (k > 0) {
            if (mag != 1) out << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

ZPoly exact_div(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
    if (a.is_zero()) return ZPoly();
    if (a.degree() < b.degree()) throw std::domain_error("exact_div: not divisible");
    std::vector<mpz_class> rem(a.coeffs());
    std::vector<mpz_class> q(a.degree() - b.degree() + 1, 0);
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        mpz_class top = rem[k + b.degree()];
        if (top == 0) continue;
        mpz_class qk, r;
        mpz_tdiv_qr(qk.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), b.lead().get_mpz_t());
        if (r != 0) throw std::domain_error("exact_div: not divisible");
        q[k] = qk;
        for (int j = 0; j <= b.degree(); ++j) rem[k + j] -= qk * b.coeffs()[j];
    }
    for (const auto& v : rem)
        if (v != 0) throw std::domain_error("exact_div: nonzero remainder");
    return ZPoly(std::move(q));
}

namespace {

// lc(b)^(deg a - deg b + 1) * a mod b, computed without fractions.
ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a;
    int e = a.degree() - b.degree() + 1;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        ZPoly t = ZPoly::monomial(r.degree() - b.degree(), r.lead()) * b;
        r = r.scaled(b.lead()) - t;
        --e;
    }
    if (e > 0) {
        mpz_class f;
        mpz_pow_ui(f.get_mpz_t(), b.lead().get_mpz_t(), e);
        r = r.scaled(f);
    }
    return r;
}

}  // namespace

ZPoly zpoly_gcd(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() && b.is_zero()) return ZPoly();
    if (a.is_zero()) return b.primitive_part().lead() < 0 ? -b.primitive_part() : b.primitive_part();
    if (b.is_zero()) return a.primitive_part().lead() < 0 ? -a.primitive_part() : a.primitive_part();
    mpz_class cont;
    mpz_gcd(cont.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    ZPoly f = a.primitive_part();
    ZPoly g = b.primitive_part();
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        ZPoly r = pseudo_rem(f, g).primitive_part();
        f = std::move(g);
        g = std::move(r);
    }
    ZPoly out = f.primitive_part().scaled(cont);
    if (out.lead() < 0) out = -out;
    return out;
}

ZPoly square_free_part(const ZPoly& p) {
    if (p.is_zero() || p.degree() == 0) return p;
    ZPoly g = zpoly_gcd(p, p.derivative());
    if (g.degree() == 0) return p;
    return exact_div(p, g);
}

SPoly SPoly::derivative_s() const {
    if (c_.size() <= 1) return SPoly();
    std::vector<ZPoly> c(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
        c[k - 1] = c_[k].scaled(mpz_class(k));
    return SPoly(std::move(c));
}

ZPoly SPoly::eval_z(const mpz_class& z0) const {
    std::vector<mpz_class> c(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) c[k] = c_[k].eval(z0);
    return ZPoly(std::move(c));
}

std::string SPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        if (c_[k].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        out << "(" << c_[k].str() << ")";
        if (k > 0) {
            out << "*s";
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

SPoly clear_denominator(const BiPoly& w) {
    int max_s = 1;
    for (const auto& [m, c] : w.terms()) {
        if (m.x - m.y < -1)
            throw std::domain_error("clear_denominator: term with x-degree < y-degree - 1");
        max_s = std::max(max_s, m.x - m.y + 1);
    }
    int max_z = w.max_ydeg();
    std::vector<std::vector<mpz_class>> grid(max_s + 1, std::vector<mpz_class>(max_z + 1, 0));
    grid[1][0] = 1;
    for (const auto& [m, c] : w.terms()) grid[m.x - m.y + 1][m.y] -= c;
    std::vector<ZPoly> coeffs;
    coeffs.reserve(grid.size());
    for (auto& row : grid) coeffs.emplace_back(std::move(row));
    return SPoly(std::move(coeffs));
}

namespace {

ZPoly zpoly_pow(const ZPoly& p, int e) {
    ZPoly r = ZPoly::constant(1);
    for (int k = 0; k < e; ++k) r = r * p;
    return r;
}

// Pseudo-remainder in s over Z[z].
SPoly spoly_pseudo_rem(const SPoly& a, const SPoly& b) {
    std::vector<ZPoly> r(a.coeffs());
    auto deg = [&]() {
        int d = static_cast<int>(r.size()) - 1;
        while (d >= 0 && r[d].is_zero()) --d;
        return d;
    };
    const int db = b.degree();
    int e = a.degree() - db + 1;
    int dr = deg();
    while (dr >= db) {
        ZPoly top = r[dr];
        for (int k = 0; k <= dr; ++k) r[k] = r[k] * b.lead();
        for (int k = 0; k <= db; ++k) r[dr - db + k] = r[dr - db + k] - top * b.coeffs()[k];
        --e;
        dr = deg();
    }
    SPoly out{std::vector<ZPoly>(r.begin(), r.begin() + (dr + 1))};
    if (e > 0) {
        ZPoly f = zpoly_pow(b.lead(), e);
        std::vector<ZPoly> c(out.coeffs());
        for (auto& v : c) v = v * f;
        out = SPoly(std::move(c));
    }
    return out;
}

SPoly spoly_exact_div(const SPoly& a, const ZPoly& d) {
    std::vector<ZPoly> c(a.coeffs());
    for (auto& v : c)
        if (!v.is_zero()) v = exact_div(v, d);
    return SPoly(std::move(c));
}

}  // namespace

// Subresultant polynomial remainder sequence (Brown/Collins); coefficients
// stay in Z[z] throughout, all divisions exact.
ZPoly resultant_s(const SPoly& f, const SPoly& g) {
    if (f.is_zero() || g.is_zero()) return ZPoly();
    SPoly a = f, b = g;
    int sign = 1;
    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
        std::swap(a, b);
    }
    if (b.degree() == 0) {
        ZPoly out = zpoly_pow(b.lead(), a.degree());
        return sign < 0 ? -out : out;
    }
    ZPoly gcoef = ZPoly::constant(1);
    ZPoly h = ZPoly::constant(1);
    while (true) {
        const int da = a.degree(), db = b.degree();
        const int delta = da - db;
        if ((da & 1) && (db & 1)) sign = -sign;
        SPoly r = spoly_pseudo_rem(a, b);
        if (r.is_zero()) return ZPoly();  // common factor in s
        a = b;
        b = spoly_exact_div(r, gcoef * zpoly_pow(h, delta));
        gcoef = a.lead();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = gcoef;
        } else {
            h = exact_div(zpoly_pow(gcoef, delta), zpoly_pow(h, delta - 1));
        }
        if (b.degree() <= 0) break;
    }
    if (b.is_zero()) return ZPoly();
    const int p = a.degree();
    ZPoly num = zpoly_pow(b.lead(), p);
    ZPoly out = p <= 1 ? num : exact_div(num, zpoly_pow(h, p - 1));
    return sign < 0 ? -out : out;
}

namespace {

// Fraction-free determinant; entries and all divisions stay in Z[z].
ZPoly bareiss_det(std::vector<std::vector<ZPoly>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return ZPoly::constant(1);
    int sign = 1;
    ZPoly prev = ZPoly::constant(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) { pivot = i; break; }
            if (pivot < 0) return ZPoly();
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                ZPoly t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = t.is_zero() ? ZPoly() : exact_div(t, prev);
            }
            m[i][k] = ZPoly();
        }
        prev = m[k][k];
        if (prev.is_zero()) return ZPoly();
    }
    return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

std::vector<std::vector<ZPoly>> sylvester_matrix(const SPoly& f, const SPoly& g) {
    const int m = f.degree(), n = g.degree();
    std::vector<std::vector<ZPoly>> mat(m + n, std::vector<ZPoly>(m + n));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) mat[r][r + (m - k)] = f.coeff(k);
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) mat[n + r][r + (n - k)] = g.coeff(k);
    return mat;
}

mpz_class bareiss_det_int(std::vector<std::vector<mpz_class>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    int sign = 1;
    mpz_class prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) { pivot = i; break; }
            if (pivot < 0) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
        if (prev == 0) return 0;
    }
    return sign < 0 ? mpz_class(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

}  // namespace

ZPoly resultant_s_sylvester(const SPoly& f, const SPoly& g) {
    if (f.is_zero() || g.is_zero()) return ZPoly();
    if (f.degree() == 0 && g.degree() == 0) return ZPoly::constant(1);
    return bareiss_det(sylvester_matrix(f, g));
}

ZPoly discriminant_in_s(const SPoly& d) {
    const int m = d.degree();
    if (m < 2) throw std::domain_error("discriminant_in_s: degree in s must be >= 2");
    ZPoly res = resultant_s(d, d.derivative_s());
    if (res.is_zero()) return ZPoly();
    ZPoly out = exact_div(res, d.lead());
    return (m % 4 == 2 || m % 4 == 3) ? -out : out;  // (-1)^(m(m-1)/2)
}

ZPoly discriminant_in_s_interp(const SPoly& d) {
    const int m = d.degree();
    if (m < 2) throw std::domain_error("discriminant_in_s: degree in s must be >= 2");
    int dz = 0;
    for (const auto& c : d.coeffs()) dz = std::max(dz, c.degree());
    const int bound = (2 * m - 1) * dz;

    // Values of the fixed-shape Sylvester determinant at integer points;
    // evaluation commutes with the determinant, so leading-coefficient
    // drops at special points are harmless.
    SPoly ds = d.derivative_s();
    std::vector<mpz_class> xs, ys;
    for (int k = 0; k <= bound; ++k) {
        mpz_class x = (k % 2 == 0) ? mpz_class(k / 2) : mpz_class(-(k / 2 + 1));
        std::vector<std::vector<mpz_class>> mat(2 * m - 1, std::vector<mpz_class>(2 * m - 1, 0));
        for (int r = 0; r < m - 1; ++r)
            for (int k2 = 0; k2 <= m; ++k2) mat[r][r + (m - k2)] = d.coeff(k2).eval(x);
        for (int r = 0; r < m; ++r)
            for (int k2 = 0; k2 <= m - 1; ++k2) mat[m - 1 + r][r + (m - 1 - k2)] = ds.coeff(k2).eval(x);
        xs.push_back(x);
        ys.push_back(bareiss_det_int(std::move(mat)));
    }

    // Newton interpolation over exact rationals.
    const int n = static_cast<int>(xs.size());
    std::vector<mpq_class> coef(n);
    for (int k = 0; k < n; ++k) coef[k] = mpq_class(ys[k]);
    for (int j = 1; j < n; ++j)
        for (int k = n - 1; k >= j; --k) {
            coef[k] = (coef[k] - coef[k - 1]) / mpq_class(xs[k] - xs[k - j]);
            coef[k].canonicalize();
        }
    // expand Newton form
    std::vector<mpq_class> poly{coef[n - 1]};
    for (int k = n - 2; k >= 0; --k) {
        poly.insert(poly.begin(), mpq_class(0));
        for (std::size_t j = 0; j + 1 < poly.size(); ++j) poly[j] -= mpq_class(xs[k]) * poly[j + 1];
        poly[0] += coef[k];
    }
    std::vector<mpz_class> zc(poly.size());
    for (std::size_t k = 0; k < poly.size(); ++k) {
        mpq_class v = poly[k];
        v.canonicalize();
        if (v.get_den() != 1)
            throw std::logic_error("discriminant interpolation produced a non-integer");
        zc[k] = v.get_num();
    }
    ZPoly res(std::move(zc));
    if (res.is_zero()) return ZPoly();
    ZPoly out = exact_div(res, d.lead());
    return (m % 4 == 2 || m % 4 == 3) ? -out : out;
}

bool proportional(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    if (a.degree() != b.degree()) return false;
    const ZPoly pa = a.primitive_part();
    const ZPoly pb = b.primitive_part();
    return pa == pb || pa == -pb;
}

std::string zpoly_to_json(const ZPoly& p) {
    nlohmann::ordered_json j;
    j["format"] = 1;
    j["vars"] = {"z"};
    j["terms"] = nlohmann::ordered_json::array();
    for (int k = 0; k <= p.degree(); ++k) {
        if (p.coeff(k) == 0) continue;
        nlohmann::ordered_json t;
        t["z"] = k;
        t["c"] = p.coeff(k).get_str();
        j["terms"].push_back(std::move(t));
    }
    return j.dump(2) + "\n";
}

ZPoly zpoly_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::vector<mpz_class> c;
    for (const auto& t : j.at("terms")) {
        int k = t.at("z").get<int>();
        if (static_cast<int>(c.size()) <= k) c.resize(k + 1, 0);
        c[k] = mpz_class(t.at("c").get<std::string>());
    }
    return ZPoly(std::move(c));
}

}  // namespace growth
