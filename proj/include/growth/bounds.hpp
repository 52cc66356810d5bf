#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "growth/bipoly.hpp"
#include "growth/roots.hpp"
#include "growth/zpoly.hpp"

// Numeric growth-constant bounds: the bit-string counting bound, the
// closed-form multinomial bounds, and the branch-point bound computed from
// a weight polynomial's diagonal series.  All values are exact rationals
// (enclosures tight far below the printed precision); floating point only
// appears in the coefficient-ratio estimate, which is labeled an estimate
// and never a bound.

namespace growth {

// Fixed-point rendering with `digits` decimals, truncated toward zero.
std::string decimal_string(const mpq_class& v, int digits);

struct BoundResult {
    std::string method;
    std::string direction;  // "upper" | "lower" | "estimate"
    int d = 0;
    int level = -1;  // i for iterated weight sums, n for count-based values
    mpq_class value;
    int precision = 9;
    std::string exact_form;  // "p/q" when the value itself is rational

    std::optional<mpq_class> b0;      // minimizer certificate
    std::optional<mpq_class> f_b0;
    std::optional<RootInterval> root;  // branch-point certificate
    ZPoly discriminant;

    std::string printed() const { return decimal_string(value, precision); }
};

// (2d-1)^(2d-1) / (2d-2)^(2d-2), exact.
BoundResult eden_bound(int d);

// 2(1+sqrt 2); satisfies x^2 - 4x - 4 = 0.
BoundResult closed_form_2d();

// y((1+x)^(2(d-1)) + x^2), the level-1 weight sum in dimension d.
BiPoly general_weight_formula(int d);

// a * f_d(b) at rational b, where a = 2(d-1) and
// f_d(b) = 1/b + 1 + b(C(a,2)+1)/a^2 + sum_{j=3..a} b^(j-1) C(a,j) / a^j.
mpq_class multinomial_rate(int d, const mpq_class& b);

// min_b a * f_d(b), minimized exactly by bisecting f_d'; d >= 3.
BoundResult multinomial_bound(int d);

// (2d-2) e + 1/(2d-2).
BoundResult general_bound(int d);

// 1 / (largest real root of the discriminant of the cleared denominator).
// Throws std::runtime_error when no positive branch point exists.
BoundResult diagonal_radius_bound(const BiPoly& w, int d, int level, int precision = 9);

// c(n,n)^(1/n) from the diagonal series; an estimate, not a bound. n >= 10.
BoundResult ratio_estimate(const BiPoly& w, int d, int n);

// (d * count)^(1/n).
BoundResult lower_bound_from_count(int d, int n, const mpz_class& count);

// Rational enclosure of e, error below 1e-40.
mpq_class e_enclosure_mid();

}  // namespace growth
