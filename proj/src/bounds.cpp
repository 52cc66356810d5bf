#include "growth/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace growth {

std::string decimal_string(const mpq_class& v, int digits) {
    if (v < 0) return "-" + decimal_string(-v, digits);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    mpz_class n = v.get_num() * scale / v.get_den();  // truncates toward zero
    mpz_class ip = n / scale, fp = n % scale;
    if (digits == 0) return ip.get_str();
    std::string frac = fp.get_str();
    frac.insert(frac.begin(), digits - frac.size(), '0');
    return ip.get_str() + "." + frac;
}

namespace {

// Known lower bounds give a sanity floor for every upper bound; falling
// under it means the branch-point selection went wrong.
void check_floor(const BoundResult& r) {
    if (r.direction != "upper") return;
    if (r.d == 2 && r.value < 3) throw std::logic_error("2D upper bound below 3");
    if (r.d == 3 && r.value < 6) throw std::logic_error("3D upper bound below 6");
}

mpz_class binom(unsigned n, unsigned k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

mpq_class pow_q(const mpq_class& b, int e) {
    mpq_class r = 1;
    for (int k = 0; k < e; ++k) r *= b;
    return r;
}

}  // namespace

mpq_class e_enclosure_mid() {
    // sum_{k<=40} 1/k! underestimates e by less than 2/40!
    mpq_class s = 0;
    mpz_class fact = 1;
    for (int k = 0; k <= 40; ++k) {
        if (k > 0) fact *= k;
        s += mpq_class(1, fact);
    }
    return s + mpq_class(1, fact);  // midpoint of [s, s + 2/40!]
}

BoundResult eden_bound(int d) {
    if (d < 2) throw std::invalid_argument("eden_bound: d must be >= 2");
    mpz_class num, den;
    mpz_ui_pow_ui(num.get_mpz_t(), 2 * d - 1, 2 * d - 1);
    mpz_ui_pow_ui(den.get_mpz_t(), 2 * d - 2, 2 * d - 2);
    BoundResult r;
    r.method = "eden";
    r.direction = "upper";
    r.d = d;
    r.value = mpq_class(num, den);
    r.value.canonicalize();
    r.exact_form = r.value.get_num().get_str() + "/" + r.value.get_den().get_str();
    check_floor(r);
    return r;
}

BoundResult closed_form_2d() {
    // 2(1 + sqrt 2), via exact bisection on x^2 - 2
    mpq_class lo = 1, hi = 2;
    for (int k = 0; k < 60; ++k) {
        mpq_class mid = (lo + hi) / 2;
        (mid * mid < 2 ? lo : hi) = mid;
    }
    BoundResult r;
    r.method = "closed2d";
    r.direction = "upper";
    r.d = 2;
    r.value = 2 + (lo + hi);
    r.root = RootInterval{2 + 2 * lo, 2 + 2 * hi, false};  // root of x^2 - 4x - 4
    r.discriminant = ZPoly({std::vector<mpz_class>{-4, -4, 1}});
    check_floor(r);
    return r;
}

BiPoly general_weight_formula(int d) {
    if (d < 2) throw std::invalid_argument("general_weight_formula: d must be >= 2");
    const unsigned a = 2 * (d - 1);
    BiPoly w;
    for (unsigned j = 0; j <= a; ++j) w.add_term(j, 1, binom(a, j));
    w.add_term(2, 1, 1);
    return w;
}

mpq_class multinomial_rate(int d, const mpq_class& b) {
    const int a = 2 * (d - 1);
    const mpz_class az = a;
    mpq_class f = mpq_class(1) / b + 1 + b * mpq_class(binom(a, 2) + 1, az * az);
    mpz_class apow = az * az;
    for (int j = 3; j <= a; ++j) {
        apow *= az;
        f += pow_q(b, j - 1) * mpq_class(binom(a, j), apow);
    }
    return mpq_class(a) * f;
}

BoundResult multinomial_bound(int d) {
    if (d < 3) throw std::invalid_argument("multinomial_bound: d must be >= 3 (use closed_form_2d)");
    const int a = 2 * (d - 1);
    const mpz_class az = a;

    // f'(b) = -1/b^2 + (C(a,2)+1)/a^2 + sum_{j>=3} (j-1) b^(j-2) C(a,j)/a^j,
    // strictly increasing, so the minimum is the unique sign change.
    auto fprime_sign = [&](const mpq_class& b) {
        mpq_class s = mpq_class(binom(a, 2) + 1, az * az) - mpq_class(1) / (b * b);
        mpz_class apow = az * az;
        for (int j = 3; j <= a; ++j) {
            apow *= az;
            s += mpq_class(j - 1) * pow_q(b, j - 2) * mpq_class(binom(a, j), apow);
        }
        return sgn(s);
    };

    mpq_class lo = mpq_class(1, 256), hi = 8;
    while (fprime_sign(hi) <= 0) hi *= 2;
    for (int k = 0; k < 90; ++k) {
        mpq_class mid = (lo + hi) / 2;
        (fprime_sign(mid) < 0 ? lo : hi) = mid;
    }
    const mpq_class b0 = (lo + hi) / 2;

    BoundResult r;
    r.method = "multinomial_b";
    r.direction = "upper";
    r.d = d;
    r.b0 = b0;
    r.f_b0 = multinomial_rate(d, b0) / a;
    r.value = multinomial_rate(d, b0);
    check_floor(r);
    return r;
}

BoundResult general_bound(int d) {
    if (d < 2) throw std::invalid_argument("general_bound: d must be >= 2");
    const int a = 2 * (d - 1);
    BoundResult r;
    r.method = "general_d";
    r.direction = "upper";
    r.d = d;
    r.value = a * e_enclosure_mid() + mpq_class(1, a);
    check_floor(r);
    return r;
}

BoundResult diagonal_radius_bound(const BiPoly& w, int d, int level, int precision) {
    SPoly den = clear_denominator(w);
    ZPoly dis = discriminant_in_s(den);
    if (dis.is_zero())
        throw std::runtime_error("diagonal_radius_bound: vanishing discriminant");
    auto root = max_real_root(dis, mpq_class(1, mpz_class("10000000000000")));  // 1e-13 relative
    if (!root || root->hi <= 0)
        throw std::runtime_error("diagonal_radius_bound: no positive branch point");
    BoundResult r;
    r.method = "diagonal_radius";
    r.direction = "upper";
    r.d = d;
    r.level = level;
    r.precision = precision;
    r.value = 2 / (root->lo + root->hi);
    r.root = *root;
    r.discriminant = std::move(dis);
    check_floor(r);
    return r;
}

BoundResult ratio_estimate(const BiPoly& w, int d, int n) {
    if (n < 10) throw std::invalid_argument("ratio_estimate: n must be >= 10");
    std::vector<mpz_class> diag = series_diagonal(w, n);
    const mpz_class& c = diag[n];
    if (c <= 0) throw std::runtime_error("ratio_estimate: empty diagonal");
    signed long exp2;
    double mant = mpz_get_d_2exp(&exp2, c.get_mpz_t());
    double value = std::exp((std::log(mant) + static_cast<double>(exp2) * std::log(2.0)) / n);
    BoundResult r;
    r.method = "ratio_estimate";
    r.direction = "estimate";
    r.d = d;
    r.level = n;
    r.value = mpq_class(value);
    return r;
}

BoundResult lower_bound_from_count(int d, int n, const mpz_class& count) {
    if (count <= 0 || n < 1 || d < 1)
        throw std::invalid_argument("lower_bound_from_count: positive inputs required");
    const mpz_class target = d * count;
    BoundResult exact;
    exact.method = "lower_count";
    exact.direction = "lower";
    exact.d = d;
    exact.level = n;
    mpz_class iroot;
    if (mpz_root(iroot.get_mpz_t(), target.get_mpz_t(), n)) {
        exact.value = iroot;  // target is a perfect n-th power
        exact.exact_form = iroot.get_str();
        return exact;
    }
    // dyadic bisection on x^n = target
    mpq_class lo = 0, hi = target + 1;
    for (int k = 0; k < 140 && hi - lo > mpq_class(1, mpz_class("1000000000000")); ++k) {
        mpq_class mid = (lo + hi) / 2;
        (pow_q(mid, n) < target ? lo : hi) = mid;
    }
    BoundResult r;
    r.method = "lower_count";
    r.direction = "lower";
    r.d = d;
    r.level = n;
    r.value = (lo + hi) / 2;
    return r;
}

}  // namespace growth
