#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

// Sparse bivariate polynomials in (x, y) with arbitrary-precision integer
// coefficients.  Terms iterate in canonical order: y-degree, then x-degree.

namespace growth {

struct BiMono {
    int x = 0;
    int y = 0;
    friend bool operator<(const BiMono& a, const BiMono& b) {
        if (a.y != b.y) return a.y < b.y;
        return a.x < b.x;
    }
    friend bool operator==(const BiMono& a, const BiMono& b) {
        return a.x == b.x && a.y == b.y;
    }
};

class BiPoly {
public:
    BiPoly() = default;

    static BiPoly monomial(int xdeg, int ydeg, mpz_class coeff = 1) {
        BiPoly p;
        p.add_term(xdeg, ydeg, std::move(coeff));
        return p;
    }

    void add_term(int xdeg, int ydeg, const mpz_class& coeff) {
        if (coeff == 0) return;
        auto key = BiMono{xdeg, ydeg};
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const std::map<BiMono, mpz_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    mpz_class coeff(int xdeg, int ydeg) const {
        auto it = terms_.find(BiMono{xdeg, ydeg});
        return it == terms_.end() ? mpz_class(0) : it->second;
    }

    mpz_class eval_ones() const {
        mpz_class s = 0;
        for (const auto& [m, c] : terms_) s += c;
        return s;
    }

    int max_xdeg() const;
    int max_ydeg() const;

    BiPoly& operator+=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { a += b; return a; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

    // Drops terms with x-degree > nx or y-degree > ny.
    BiPoly truncated(int nx, int ny) const;

    // Human-readable form like "2*x^2*y + y", highest y then x first.
    std::string str() const;

private:
    std::map<BiMono, mpz_class> terms_;
};

// Diagonal coefficients c(n,n) of x * sum_k W^k for n = 0..n_max.
// Requires W(0,0) = 0 so the geometric series is well defined.
std::vector<mpz_class> series_diagonal(const BiPoly& w, int n_max);

// Polynomial JSON: {"format":1,"vars":["x","y"],
//   "terms":[{"x":a,"y":b,"c":"<decimal>"}]} in canonical term order.
std::string bipoly_to_json(const BiPoly& p);
BiPoly bipoly_from_json(const std::string& text);

}  // namespace growth
