#include <doctest.h>

#include <cmath>

#include "growth/bounds.hpp"
#include "growth/enumerate.hpp"
#include "growth/oracle.hpp"

using namespace growth;

namespace {

bool within(const mpq_class& v, double want, double tol) {
    return std::abs(v.get_d() - want) <= tol;
}

}  // namespace

TEST_CASE("decimal rendering truncates toward zero") {
    CHECK(decimal_string(mpq_class(27, 4), 9) == "6.750000000");
    CHECK(decimal_string(mpq_class(2, 3), 4) == "0.6666");
    CHECK(decimal_string(mpq_class(5), 0) == "5");
}

TEST_CASE("bit-string counting bound") {
    BoundResult b2 = eden_bound(2);
    CHECK(b2.exact_form == "27/4");
    CHECK(b2.printed() == "6.750000000");
    BoundResult b3 = eden_bound(3);
    CHECK(b3.exact_form == "3125/256");
    CHECK(within(b3.value, 12.20703125, 1e-12));
    CHECK_THROWS_AS(eden_bound(1), std::invalid_argument);

    SUBCASE("always below (2d-1)e") {
        const mpq_class e = e_enclosure_mid();
        for (int d = 2; d <= 10; ++d) CHECK(eden_bound(d).value < (2 * d - 1) * e);
    }
}

TEST_CASE("closed-form 2D bound") {
    BoundResult b = closed_form_2d();
    CHECK(b.printed() == "4.828427124");
    // algebraic certificate: x^2 - 4x - 4 = 0
    mpq_class res = b.value * b.value - 4 * b.value - 4;
    CHECK(within(res, 0.0, 1e-9));
    // equals the branch-point bound of the level-1 weights
    BoundResult diag = diagonal_radius_bound(general_weight_formula(2), 2, 1);
    mpq_class diff = b.value - diag.value;
    CHECK(within(diff, 0.0, 1e-9));
}

TEST_CASE("general weight formula") {
    CHECK(general_weight_formula(2).str() == "2*x^2*y + 2*x*y + y");
    CHECK(general_weight_formula(3).str() == "x^4*y + 4*x^3*y + 7*x^2*y + 4*x*y + y");
    for (int d = 2; d <= 8; ++d) {
        mpz_class expected = (mpz_class(1) << (2 * (d - 1))) + 1;
        CHECK(general_weight_formula(d).eval_ones() == expected);
    }
    CHECK_THROWS_AS(general_weight_formula(1), std::invalid_argument);
}

TEST_CASE("multinomial minimization bound") {
    BoundResult b3 = multinomial_bound(3);
    CHECK(within(b3.value, 9.807295572, 1e-8));
    REQUIRE(b3.b0);
    CHECK(within(*b3.b0, 1.274306378, 1e-6));
    CHECK(within(*b3.f_b0, 2.451823893, 1e-8));

    CHECK(multinomial_rate(3, 1) == mpq_class(641, 64));

    BoundResult b4 = multinomial_bound(4);
    CHECK(within(b4.value, 15.1284, 5e-4));

    CHECK_THROWS_AS(multinomial_bound(2), std::invalid_argument);

    SUBCASE("the minimizing b beats every nearby rational b") {
        for (int k = -3; k <= 3; ++k) {
            mpq_class b = *b3.b0 + mpq_class(k, 10);
            if (b <= 0) continue;
            CHECK(b3.value <= multinomial_rate(3, b) + mpq_class(1, 1000000000));
        }
    }
}

TEST_CASE("general-dimension closed form") {
    const double e = std::exp(1.0);
    CHECK(within(general_bound(3).value, 4 * e + 0.25, 1e-9));
    CHECK(within(general_bound(2).value, 2 * e + 0.5, 1e-9));
    for (int d = 2; d <= 10; ++d)
        CHECK(general_bound(d).value < (2 * d - 1) * e_enclosure_mid());
    CHECK_THROWS_AS(general_bound(1), std::invalid_argument);
}

TEST_CASE("branch-point bound on computed weight sums") {
    WeightSum w5 = build_weight_sum(2, 5, 0);
    BoundResult b5 = diagonal_radius_bound(w5.weights, 2, 5);
    CHECK(b5.printed() == "4.765532996");
    REQUIRE(b5.root);
    CHECK(b5.root->lo > 0);
    CHECK(!b5.discriminant.is_zero());

    BoundResult b31 = diagonal_radius_bound(general_weight_formula(3), 3, 1);
    CHECK(within(b31.value, 9.807295572, 1e-8));
}

TEST_CASE("coefficient-ratio estimate") {
    BiPoly w1 = general_weight_formula(2);
    BoundResult r100 = ratio_estimate(w1, 2, 100);
    CHECK(r100.direction == "estimate");
    CHECK(r100.value > mpq_class(45, 10));
    CHECK(r100.value < mpq_class(48285, 10000));
    BoundResult r200 = ratio_estimate(w1, 2, 200);
    CHECK(r200.value > r100.value);
    CHECK(r200.value < closed_form_2d().value);
    BoundResult r3 = ratio_estimate(general_weight_formula(3), 3, 60);
    CHECK(r3.value < multinomial_bound(3).value);
    CHECK_THROWS_AS(ratio_estimate(w1, 2, 5), std::invalid_argument);
}

TEST_CASE("lower bound from counts") {
    BoundResult b = lower_bound_from_count(3, 19, mpz_class("651459315795897"));
    CHECK(b.direction == "lower");
    CHECK(within(b.value, 6.3795, 5e-4));
    CHECK(lower_bound_from_count(2, 1, 1).value == 2);
    CountTable t = count_fixed<2>(10);
    BoundResult b10 = lower_bound_from_count(2, 10, t.at(10));
    CHECK(b10.value < mpq_class(4828428, 1000000));
    CHECK_THROWS_AS(lower_bound_from_count(2, 1, 0), std::invalid_argument);
}

TEST_CASE("consistency ladder in three dimensions") {
    BoundResult ratio = ratio_estimate(general_weight_formula(3), 3, 60);
    BoundResult diag = diagonal_radius_bound(general_weight_formula(3), 3, 1);
    BoundResult multi = multinomial_bound(3);
    BoundResult gen = general_bound(3);
    BoundResult eden = eden_bound(3);
    CHECK(ratio.value < diag.value);
    CHECK(diag.value <= multi.value + mpq_class(1, 100000000));
    CHECK(multi.value <= gen.value);
    CHECK(gen.value <= eden.value);
}
