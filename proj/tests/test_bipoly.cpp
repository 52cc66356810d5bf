#include <doctest.h>

#include "growth/bipoly.hpp"
#include "growth/bounds.hpp"

using namespace growth;

namespace {

BiPoly one_plus_x() {
    BiPoly p;
    p.add_term(0, 0, 1);
    p.add_term(1, 0, 1);
    return p;
}

}  // namespace

TEST_CASE("arithmetic basics") {
    BiPoly sq = one_plus_x() * one_plus_x();
    CHECK(sq.coeff(0, 0) == 1);
    CHECK(sq.coeff(1, 0) == 2);
    CHECK(sq.coeff(2, 0) == 1);
    CHECK(sq.term_count() == 3);

    BiPoly p = one_plus_x();
    CHECK(p + BiPoly() == p);

    SUBCASE("cancellation removes terms") {
        BiPoly q = p;
        q.add_term(1, 0, -1);
        CHECK(q.term_count() == 1);
    }
}

TEST_CASE("square of the level-1 weight sum") {
    BiPoly w1 = general_weight_formula(2);
    BiPoly sq = w1 * w1;
    BiPoly expected;  // y^2 (4x^4 + 8x^3 + 8x^2 + 4x + 1)
    expected.add_term(4, 2, 4);
    expected.add_term(3, 2, 8);
    expected.add_term(2, 2, 8);
    expected.add_term(1, 2, 4);
    expected.add_term(0, 2, 1);
    CHECK(sq == expected);
    CHECK(sq.truncated(2, 2).term_count() == 3);
    CHECK(sq.truncated(10, 1).is_zero());
}

TEST_CASE("canonical term order is y-degree then x-degree") {
    BiPoly p;
    p.add_term(2, 0, 1);
    p.add_term(0, 1, 1);
    p.add_term(1, 0, 1);
    std::vector<BiMono> keys;
    for (const auto& [m, c] : p.terms()) keys.push_back(m);
    REQUIRE(keys.size() == 3);
    CHECK(keys[0] == BiMono{1, 0});
    CHECK(keys[1] == BiMono{2, 0});
    CHECK(keys[2] == BiMono{0, 1});
}

TEST_CASE("diagonal series") {
    BiPoly w1 = general_weight_formula(2);
    auto diag = series_diagonal(w1, 5);
    REQUIRE(diag.size() == 6);
    CHECK(diag[0] == 0);
    CHECK(diag[1] == 1);
    CHECK(diag[2] == 4);
    CHECK(diag[3] == 18);
    CHECK(diag[4] == 80);

    SUBCASE("a constant term is rejected") {
        CHECK_THROWS_AS(series_diagonal(one_plus_x(), 4), std::invalid_argument);
    }
}

TEST_CASE("polynomial JSON round trip") {
    BiPoly w1 = general_weight_formula(2);
    std::string text = bipoly_to_json(w1);
    CHECK(bipoly_from_json(text) == w1);
    CHECK(text.find("\"vars\": [\n    \"x\",\n    \"y\"\n  ]") != std::string::npos);
    CHECK(text == bipoly_to_json(w1));  // byte stable
}

TEST_CASE("printer") {
    CHECK(general_weight_formula(2).str() == "2*x^2*y + 2*x*y + y");
    CHECK(BiPoly().str() == "0");
}
