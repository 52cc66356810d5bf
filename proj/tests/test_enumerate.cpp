#include <doctest.h>

#include <random>

#include "growth/enumerate.hpp"
#include "growth/oracle.hpp"
#include "growth/twigs.hpp"

using namespace growth;

namespace {

int id2(const char* name) { return TwigSet<2>::instance().id_by_name(name); }

Configuration<2> grow(std::initializer_list<const char*> names) {
    Configuration<2> cfg = Configuration<2>::seed();
    for (const char* name : names) {
        auto next = extend<2>(cfg, id2(name));
        REQUIRE(next);
        cfg = std::move(*next);
    }
    return cfg;
}

}  // namespace

TEST_CASE("extend examples") {
    SUBCASE("the seed with a white-free twig becomes a one-cell leaf") {
        Configuration<2> leaf = grow({"L1"});
        CHECK(leaf.dead_count() == 1);
        CHECK(leaf.open_count() == 0);
        CHECK(leaf.wx == 0);  // weight x^0 y^1 times the sequence prefix x
        CHECK(leaf.wy == 1);
    }

    SUBCASE("L5 * L1 * L1 closes with three dead cells") {
        Configuration<2> cfg = grow({"L5", "L1", "L1"});
        CHECK(cfg.dead_count() == 3);
        CHECK(cfg.open_count() == 0);
    }

    SUBCASE("all six three-dead closures exist") {
        for (auto seq : {std::initializer_list<const char*>{"L2", "L2", "L1"},
                         {"L2", "L4", "L1"},
                         {"L3", "L1", "L1"},
                         {"L4", "L2", "L1"},
                         {"L4", "L4", "L1"},
                         {"L5", "L1", "L1"}}) {
            Configuration<2> cfg = grow(seq);
            CHECK(cfg.dead_count() == 3);
            CHECK(cfg.open_count() == 0);
        }
    }

    SUBCASE("the documented level-4 rejection") {
        Configuration<2> cfg = grow({"L3", "L2", "L4"});
        CHECK(!extend<2>(cfg, id2("L4")));
        CHECK(!extend<2>(cfg, id2("L5")));
        CHECK(extend<2>(cfg, id2("L1")));
        CHECK(extend<2>(cfg, id2("L2")));
        CHECK(extend<2>(cfg, id2("L3")));
    }

    SUBCASE("extending a closed configuration violates the contract") {
        Configuration<2> leaf = grow({"L1"});
        CHECK_THROWS_AS(extend<2>(leaf, id2("L1")), std::logic_error);
    }

    SUBCASE("weight bookkeeping matches dead and open counts") {
        std::mt19937 rng(3);
        for (int trial = 0; trial < 200; ++trial) {
            Configuration<2> cfg = Configuration<2>::seed();
            for (int step = 0; step < 12 && cfg.open_count() > 0; ++step) {
                auto next = extend<2>(cfg, static_cast<int>(rng() % 5));
                if (!next) continue;
                cfg = std::move(*next);
                REQUIRE(cfg.wx == cfg.dead_count() + cfg.open_count() - 1);
                REQUIRE(cfg.wy == cfg.dead_count());
                for (const auto& f : cfg.forbidden) {
                    REQUIRE(!std::binary_search(cfg.dead.begin(), cfg.dead.end(), f,
                                                lex_less<2>));
                }
            }
        }
    }
}

TEST_CASE("condition star") {
    Configuration<2> seed = Configuration<2>::seed();
    CHECK(condition_star<2>(seed, {}));  // a white-free placement never overlaps
    Configuration<2> cfg = grow({"L2"});
    CHECK(!condition_star<2>(cfg, {Cell<2>{0, 0}}));  // dead cell
    CHECK(!condition_star<2>(cfg, {Cell<2>{0, 1}}));  // open cell
    CHECK(!condition_star<2>(cfg, {Cell<2>{1, 0}}));  // forbidden cell
    CHECK(condition_star<2>(cfg, {Cell<2>{-1, 0}}));
}

TEST_CASE("weight sums match the known level data") {
    WeightSum w1 = build_weight_sum(2, 1, 2);
    BiPoly expected;
    expected.add_term(0, 1, 1);
    expected.add_term(1, 1, 2);
    expected.add_term(2, 1, 2);
    CHECK(w1.weights == expected);
    CHECK(w1.count == 5);

    CHECK(build_weight_sum(2, 4, 2).count == 409);
    CHECK(build_weight_sum(3, 3, 2).count == 3745);
    CHECK_THROWS_AS(build_weight_sum(2, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_weight_sum(4, 1, 1), std::invalid_argument);
}

TEST_CASE("count equals the weight polynomial at (1,1)") {
    for (int i = 1; i <= 6; ++i) {
        WeightSum w = build_weight_sum(2, i, 0);
        CHECK(w.count == w.weights.eval_ones());
        for (const auto& [m, c] : w.weights.terms()) CHECK(c > 0);
    }
}

TEST_CASE("closed twigs persist across levels") {
    std::vector<WeightSum> w;
    for (int i = 1; i <= 6; ++i) w.push_back(build_weight_sum(2, i, 0));
    for (int i = 2; i <= 6; ++i) {
        for (int j = 1; j < i; ++j) {
            // the y^j slice of W_i is the closed part of level j+1
            for (const auto& [m, c] : w[i - 1].weights.terms()) {
                if (m.y == j) CHECK(c == w[j].weights.coeff(m.x, m.y));
            }
        }
    }
}

TEST_CASE("kernel equals the serial reference") {
    for (int i = 1; i <= 6; ++i) {
        WeightSum ref = build_weight_sum_reference(2, i);
        WeightSum ker = build_weight_sum(2, i, 3);
        CHECK(ref.weights == ker.weights);
    }
    for (int i = 1; i <= 3; ++i) {
        WeightSum ref = build_weight_sum_reference(3, i);
        WeightSum ker = build_weight_sum(3, i, 3);
        CHECK(ref.weights == ker.weights);
    }
}

TEST_CASE("worker count does not change the result") {
    WeightSum base = build_weight_sum(2, 6, 1);
    for (int workers : {2, 4, 8}) {
        WeightSum w = build_weight_sum(2, 6, workers);
        CHECK(w.weights == base.weights);
    }
    WeightSum base3 = build_weight_sum(3, 3, 1);
    for (int workers : {4, 8}) CHECK(build_weight_sum(3, 3, workers).weights == base3.weights);
}

TEST_CASE("level counts dominate the animal counts") {
    CountTable t = count_fixed<2>(6);
    for (int i = 1; i <= 6; ++i) CHECK(t.at(i) <= build_weight_sum(2, i, 0).count);
}

TEST_CASE("closed twig census") {
    auto census2 = closed_twig_census(2, 4);
    CHECK(census2[1] == 1);
    CHECK(census2[2] == 2);
    CHECK(census2[3] == 6);
    CHECK(census2[4] == 20);
    auto census3 = closed_twig_census(3, 3);
    CHECK(census3[1] == 1);
    CHECK(census3[2] == 4);
    CHECK(census3[3] == 23);
}

TEST_CASE("extension budget") {
    EnumLimits limits;
    limits.node_budget = 50;
    limits.heartbeat = 0;
    CHECK_THROWS_AS(build_weight_sum(2, 8, 2, limits), budget_exceeded);
    CHECK_THROWS_AS(build_weight_sum_reference(2, 8, limits), budget_exceeded);
}
