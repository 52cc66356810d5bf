#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "growth/bipoly.hpp"

// Exact univariate integer polynomials in z (dense), polynomials in s over
// Z[z], and the resultant/discriminant machinery used to locate the branch
// point of a diagonal series.

namespace growth {

// Dense coefficient vector, index = degree.  Normalized: no trailing zeros
// (the zero polynomial is the empty vector).
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }
    static ZPoly constant(mpz_class v) { return ZPoly(std::vector<mpz_class>{std::move(v)}); }
    static ZPoly monomial(int deg, mpz_class v);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const mpz_class& lead() const { return c_.back(); }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    mpz_class coeff(int k) const {
        return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : mpz_class(0);
    }

    friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }
    ZPoly operator-() const;
    ZPoly scaled(const mpz_class& v) const;

    ZPoly derivative() const;
    mpz_class content() const;          // gcd of coefficients, >= 0
    ZPoly primitive_part() const;       // this / content, sign preserved
    mpz_class eval(const mpz_class& x) const;
    int sign_at(const mpq_class& x) const;  // sign of p(x)

    std::string str(const std::string& var = "z") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpz_class> c_;
};

// q such that a == b * q; throws std::domain_error when the division is not
// exact.
ZPoly exact_div(const ZPoly& a, const ZPoly& b);

// gcd via the primitive polynomial remainder sequence; result is primitive
// with positive leading coefficient.
ZPoly zpoly_gcd(const ZPoly& a, const ZPoly& b);

// p divided by gcd(p, p'): same real roots, all simple.
ZPoly square_free_part(const ZPoly& p);

// Polynomial in s with Z[z] coefficients, index = s-degree.
class SPoly {
public:
    SPoly() = default;
    explicit SPoly(std::vector<ZPoly> coeffs) : c_(std::move(coeffs)) { trim(); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const ZPoly& lead() const { return c_.back(); }
    const std::vector<ZPoly>& coeffs() const { return c_; }
    ZPoly coeff(int k) const {
        return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : ZPoly();
    }
    SPoly derivative_s() const;

    // Evaluation z -> z0, giving an integer polynomial in s.
    ZPoly eval_z(const mpz_class& z0) const;

    std::string str() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<ZPoly> c_;
};

// D(s,z) = s * (1 - W(s, z/s)) = s - sum c_ab z^b s^(a-b+1).  Every twig
// weight term satisfies a - b >= -1, so this is a polynomial; otherwise a
// std::domain_error is thrown.
SPoly clear_denominator(const BiPoly& w);

// Resultant of f and g with respect to s, exact over Z[z], via the
// subresultant polynomial remainder sequence.
ZPoly resultant_s(const SPoly& f, const SPoly& g);

// The same resultant as a Bareiss determinant of the Sylvester matrix;
// independent code path used to cross-check resultant_s.
ZPoly resultant_s_sylvester(const SPoly& f, const SPoly& g);

// disc(D) = (-1)^(m(m-1)/2) * Res_s(D, dD/ds) / lc_s(D), m = deg_s(D).
// Exact; requires deg_s(D) >= 2.
ZPoly discriminant_in_s(const SPoly& d);

// Same value computed through integer evaluation of the Sylvester
// determinant at interpolation points; cross-check path.
ZPoly discriminant_in_s_interp(const SPoly& d);

// True when a and b agree up to a nonzero rational factor.
bool proportional(const ZPoly& a, const ZPoly& b);

// Polynomial JSON with vars ["z"].
std::string zpoly_to_json(const ZPoly& p);
ZPoly zpoly_from_json(const std::string& text);

}  // namespace growth
