// Acceptance suite: recomputes every pinned result at desk scale and prints
// one PASS/FAIL line per criterion.  Exit code is the number of failures.

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "growth/bounds.hpp"
#include "growth/enumerate.hpp"
#include "growth/oracle.hpp"
#include "growth/twigs.hpp"

using namespace growth;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what) {
    std::printf("%-4s criterion %2d: %s\n", ok ? "PASS" : "FAIL", criterion, what.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

mpq_class parse_decimal(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) return mpq_class(mpz_class(s));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, s.size() - dot - 1);
    mpq_class v(mpz_class(digits, 10), scale);
    v.canonicalize();
    return v;
}

bool near(const mpq_class& value, const std::string& expected, const mpq_class& tol) {
    mpq_class diff = value - parse_decimal(expected);
    if (diff < 0) diff = -diff;
    return diff <= tol;
}

const mpq_class kTol9(1, 1000000000);

std::string data_path(const std::string& rel) {
    return std::string(GROWTH_DATA_DIR) + "/" + rel;
}

struct Row {
    int i;
    mpz_class count;
    std::string bound;
};

std::vector<Row> load_rows(const std::string& file, int max_i) {
    std::ifstream in(data_path(file));
    if (!in) throw std::runtime_error("missing fixture " + file);
    std::vector<Row> rows;
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string f0, f1, f2;
        std::getline(ls, f0, ',');
        std::getline(ls, f1, ',');
        std::getline(ls, f2, ',');
        Row r{std::stoi(f0), mpz_class(f1), f2};
        if (r.i <= max_i) rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace

int main() {
    // Shared heavy computation: 2D weight sums for levels 1..12.
    std::vector<WeightSum> w2(13);
    for (int i = 1; i <= 12; ++i) w2[i] = build_weight_sum(2, i, 0);
    std::vector<BoundResult> b2(13);
    for (int i = 1; i <= 12; ++i) b2[i] = diagonal_radius_bound(w2[i].weights, 2, i);

    // 1. level counts and bounds in 2D
    {
        auto rows = load_rows("reference/counts_2d.csv", 12);
        bool ok = rows.size() == 12;
        std::string detail;
        for (const auto& row : rows) {
            bool row_ok = w2[row.i].count == row.count && near(b2[row.i].value, row.bound, kTol9);
            if (!row_ok) detail += " i=" + std::to_string(row.i);
            ok = ok && row_ok;
        }
        ok = ok && near(b2[12].value, "4.627069746", kTol9);
        report(1, ok, "2D levels 1..12: counts exact, bounds to 1e-9" +
                          (detail.empty() ? "" : " (failing:" + detail + ")"));
    }

    // 2. weight polynomials match the pinned expansions
    {
        std::ifstream in(data_path("reference/weights_2d.json"));
        auto j = nlohmann::json::parse(in);
        bool ok = true;
        for (const auto& entry : j.at("levels")) {
            const int i = entry.at("i").get<int>();
            BiPoly expected;
            for (const auto& t : entry.at("terms"))
                expected.add_term(t.at("x").get<int>(), t.at("y").get<int>(),
                                  mpz_class(t.at("c").get<std::string>()));
            ok = ok && i <= 12 && w2[i].weights == expected;
        }
        report(2, ok, "2D weight polynomials levels 1..12 match the pinned expansions");
    }

    // 3. level counts and bounds in 3D
    {
        auto rows = load_rows("reference/counts_3d.csv", 5);
        bool ok = rows.size() == 5;
        std::string detail;
        for (const auto& row : rows) {
            WeightSum w = build_weight_sum(3, row.i, 0);
            BoundResult b = diagonal_radius_bound(w.weights, 3, row.i);
            bool row_ok = w.count == row.count && near(b.value, row.bound, kTol9);
            if (row.i == 5) row_ok = row_ok && near(b.value, "9.573610717", kTol9);
            if (!row_ok) detail += " i=" + std::to_string(row.i);
            ok = ok && row_ok;
        }
        report(3, ok, "3D levels 1..5: counts exact, bounds to 1e-9" +
                          (detail.empty() ? "" : " (failing:" + detail + ")"));
    }

    // 4. closed-form bounds
    {
        bool ok = true;
        ok = ok && near(closed_form_2d().value, "4.828427124", kTol9);
        BoundResult m3 = multinomial_bound(3);
        ok = ok && near(m3.value, "9.807295572", mpq_class(1, 100000000));
        ok = ok && m3.b0 && near(*m3.b0, "1.274306378", mpq_class(1, 1000000));
        ok = ok && near(multinomial_bound(4).value, "15.1284", mpq_class(5, 10000));
        ok = ok && eden_bound(2).value == mpq_class(27, 4);
        ok = ok && eden_bound(3).value == mpq_class(3125, 256);
        mpq_class ge = general_bound(3).value - 4 * e_enclosure_mid() - mpq_class(1, 4);
        if (ge < 0) ge = -ge;
        ok = ok && ge <= kTol9 &&
             std::abs(general_bound(3).value.get_d() - (4 * std::exp(1.0) + 0.25)) <= 1e-9;
        report(4, ok, "closed forms: 2(1+sqrt2), minimized multinomial (d=3,4), exact "
                      "counting bounds, (2d-2)e + 1/(2d-2)");
    }

    // 5. worked branch-point example at level 1
    {
        SPoly den = clear_denominator(w2[1].weights);
        ZPoly dis = discriminant_in_s(den);
        bool ok = den.degree() == 2;
        ZPoly expected(std::vector<mpz_class>{1, -4, -4});
        ok = ok && proportional(dis, expected);
        auto root = max_real_root(dis, mpq_class(1, mpz_class("10000000000000")));
        // (sqrt 2 - 1)/2 = 0.20710678118654752...
        ok = ok && root && near(root->mid(), "0.207106781186", mpq_class(1, mpz_class("100000000000")));
        mpq_class diff = b2[1].value - closed_form_2d().value;
        if (diff < 0) diff = -diff;
        ok = ok && diff <= kTol9;
        report(5, ok, "level-1 denominator is quadratic, discriminant ~ 1-4z-4z^2, "
                      "branch point (sqrt2-1)/2, inverse equals the closed form");
    }

    // 6. dominance over the brute-force counts
    {
        auto diag = series_diagonal(w2[1].weights, 10);
        CountTable t = count_fixed<2>(10);
        bool ok = diag[1] == 1 && diag[2] == 4 && diag[3] == 18;
        for (int n = 1; n <= 10; ++n) ok = ok && t.at(n) <= diag[n];
        report(6, ok, "A_2(n) <= c1(n,n) for n <= 10; c1 spot values 1, 4, 18");
    }

    // 7. monotone improvement and the 2D plateau
    {
        bool ok = true;
        for (int i = 2; i <= 12; ++i) ok = ok && b2[i].value <= b2[i - 1].value;
        mpq_class prev;
        for (int i = 1; i <= 5; ++i) {
            BoundResult b = diagonal_radius_bound(build_weight_sum(3, i, 0).weights, 3, i);
            if (i > 1) ok = ok && b.value <= prev;
            prev = b.value;
        }
        for (int i = 1; i <= 3; ++i) ok = ok && near(b2[i].value, "4.828427124", kTol9);
        report(7, ok, "bounds non-increasing in both dimensions; 2D levels 1-3 plateau "
                      "at 4.828427124");
    }

    // 8. ratio sanity
    {
        bool ok = true;
        mpq_class prev = 0;
        for (int n : {50, 100, 150, 200}) {
            BoundResult r = ratio_estimate(w2[1].weights, 2, n);
            ok = ok && r.value >= prev;
            prev = r.value;
        }
        // within 5% below the closed form at n = 200
        ok = ok && prev < parse_decimal("4.828428");
        ok = ok && prev > parse_decimal("4.828427") * mpq_class(95, 100);
        report(8, ok, "c1(n,n)^(1/n) monotone over {50,100,150,200} and within 5% below "
                      "4.828427 at n=200");
    }

    // 9. structural properties
    {
        bool ok = true;
        std::set<std::vector<int>> seen2;
        long long animals2 = 0;
        for (int n = 1; n <= 8; ++n) {
            enumerate_fixed<2>(n, [&](const Animal<2>& a) {
                ++animals2;
                auto seq = encode_twigs<2>(a);
                ok = ok && decode_twigs<2>(seq) == a;
                ok = ok && sequence_weight<2>(seq) == Mono{n, n};
                ok = ok && seen2.insert(seq).second;
            });
        }
        std::set<std::vector<int>> seen3;
        for (int n = 1; n <= 5; ++n) {
            enumerate_fixed<3>(n, [&](const Animal<3>& a) {
                auto seq = encode_twigs<3>(a);
                ok = ok && decode_twigs<3>(seq) == a;
                ok = ok && sequence_weight<3>(seq) == Mono{n, n};
                ok = ok && seen3.insert(seq).second;
            });
        }
        WeightSum w_1 = build_weight_sum(2, 8, 1);
        WeightSum w_4 = build_weight_sum(2, 8, 4);
        WeightSum w_8 = build_weight_sum(2, 8, 8);
        ok = ok && w_1.weights == w_4.weights && w_4.weights == w_8.weights;
        WeightSum v_1 = build_weight_sum(3, 4, 1);
        WeightSum v_4 = build_weight_sum(3, 4, 4);
        WeightSum v_8 = build_weight_sum(3, 4, 8);
        ok = ok && v_1.weights == v_4.weights && v_4.weights == v_8.weights;
        auto census = closed_twig_census(2, 4);
        ok = ok && census[1] == 1 && census[2] == 2 && census[3] == 6;
        ok = ok && w2[4].count == 409;
        report(9, ok, "round trip + injectivity + weight identity (2D size<=8, 3D size<=5); "
                      "worker counts 1/4/8 bit-identical; census 1,2,6; level-4 count 409");
    }

    // 10. lower-bound utility
    {
        BoundResult b = lower_bound_from_count(3, 19, mpz_class("651459315795897"));
        report(10, near(b.value, "6.3795", mpq_class(5, 10000)),
               "(3 A_3(19))^(1/19) = 6.3795 to 5e-4");
    }

    std::printf("%d criteria failed\n", failures);
    return failures;
}
