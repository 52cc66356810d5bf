#include "growth/bipoly.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace growth {

int BiPoly::max_xdeg() const {
    int m = 0;
    for (const auto& [k, c] : terms_) m = std::max(m, k.x);
    return m;
}

int BiPoly::max_ydeg() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.y;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.x, k.y, c);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            r.add_term(ka.x + kb.x, ka.y + kb.y, ca * cb);
    return r;
}

BiPoly BiPoly::truncated(int nx, int ny) const {
    BiPoly r;
    for (const auto& [k, c] : terms_)
        if (k.x <= nx && k.y <= ny) r.add_term(k.x, k.y, c);
    return r;
}

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, c] = *it;
        if (!first) out << (c < 0 ? " - " : " + ");
        else if (c < 0) out << "-";
        first = false;
        mpz_class mag = abs(c);
        bool has_var = k.x > 0 || k.y > 0;
        if (mag != 1 || !has_var) out << mag.get_str();
        if (k.x > 0) {
            if (mag != 1) out << "*";
            out << "x";
            if (k.x > 1) out << "^" << k.x;
        }
        if (k.y > 0) {
            if (mag != 1 || k.x > 0) out << "*";
            out << "y";
            if (k.y > 1) out << "^" << k.y;
        }
    }
    return out.str();
}

std::vector<mpz_class> series_diagonal(const BiPoly& w, int n_max) {
    if (w.coeff(0, 0) != 0)
        throw std::invalid_argument("series_diagonal: W(0,0) must vanish");

    // y-graded slices of W: w_slices[j] = dense x-coefficients of [y^j] W.
    const int wy = w.max_ydeg();
    std::vector<std::vector<mpz_class>> w_slices(wy + 1);
    for (const auto& [k, c] : w.terms()) {
        if (k.x > n_max || k.y > n_max) continue;
        auto& slice = w_slices[k.y];
        if (static_cast<int>(slice.size()) <= k.x) slice.resize(k.x + 1);
        slice[k.x] = c;
    }

    // S = sum_k W^k satisfies S = 1 + W*S; its y^m slice only needs slices
    // of lower y-degree, so one pass over m = 0..n_max suffices.
    std::vector<std::vector<mpz_class>> s(n_max + 1);
    s[0].assign(n_max + 1, 0);
    s[0][0] = 1;
    for (int m = 1; m <= n_max; ++m) {
        s[m].assign(n_max + 1, 0);
        for (int j = 1; j <= std::min(m, wy); ++j) {
            const auto& ws = w_slices[j];
            const auto& sm = s[m - j];
            for (int xw = 0; xw < static_cast<int>(ws.size()); ++xw) {
                if (ws[xw] == 0) continue;
                for (int xs = 0; xs + xw <= n_max; ++xs) {
                    if (sm[xs] != 0) s[m][xs + xw] += ws[xw] * sm[xs];
                }
            }
        }
    }

    // diagonal of x*S: c(n,n) = [x^(n-1) y^n] S
    std::vector<mpz_class> diag(n_max + 1);
    diag[0] = 0;
    for (int n = 1; n <= n_max; ++n) diag[n] = s[n][n - 1];
    return diag;
}

std::string bipoly_to_json(const BiPoly& p) {
    nlohmann::ordered_json j;
    j["format"] = 1;
    j["vars"] = {"x", "y"};
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [k, c] : p.terms()) {
        nlohmann::ordered_json t;
        t["x"] = k.x;
        t["y"] = k.y;
        t["c"] = c.get_str();
        j["terms"].push_back(std::move(t));
    }
    return j.dump(2) + "\n";
}

BiPoly bipoly_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    BiPoly p;
    for (const auto& t : j.at("terms"))
        p.add_term(t.at("x").get<int>(), t.at("y").get<int>(),
                   mpz_class(t.at("c").get<std::string>()));
    return p;
}

}  // namespace growth
