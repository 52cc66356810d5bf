#include <doctest.h>

#include <fstream>
#include <sstream>

#include "growth/enumerate.hpp"
#include "growth/oracle.hpp"

using namespace growth;

namespace {

std::vector<mpz_class> read_fixture(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::string line;
    std::getline(in, line);  // header
    std::vector<mpz_class> counts;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        counts.emplace_back(line.substr(line.find(',') + 1));
    }
    return counts;
}

}  // namespace

TEST_CASE("hand-checked small counts") {
    CountTable t2 = count_fixed<2>(4);
    CHECK(t2.at(1) == 1);
    CHECK(t2.at(2) == 2);
    CHECK(t2.at(3) == 6);  // two straight, four bent
    CountTable t3 = count_fixed<3>(2);
    CHECK(t3.at(1) == 1);
    CHECK(t3.at(2) == 3);  // one per axis
}

TEST_CASE("counts are strictly increasing") {
    CountTable t = count_fixed<2>(9);
    for (int n = 2; n <= 9; ++n) CHECK(t.at(n) > t.at(n - 1));
}

TEST_CASE("streaming and counting agree") {
    for (int n = 1; n <= 7; ++n) {
        long long streamed = 0;
        enumerate_fixed<2>(n, [&](const Animal<2>& a) {
            REQUIRE(a.size() == n);
            REQUIRE(a.cells().front() == Cell<2>{0, 0});  // normalized
            ++streamed;
        });
        CHECK(mpz_class(static_cast<long>(streamed)) == count_fixed<2>(n).at(n));
    }
    for (int n = 1; n <= 5; ++n) {
        long long streamed = 0;
        enumerate_fixed<3>(n, [&](const Animal<3>&) { ++streamed; });
        CHECK(mpz_class(static_cast<long>(streamed)) == count_fixed<3>(n).at(n));
    }
}

TEST_CASE("frozen count fixtures") {
    auto a2 = read_fixture(std::string(GROWTH_DATA_DIR) + "/oracle/a2.csv");
    CountTable t2 = count_fixed<2>(static_cast<int>(a2.size()));
    for (std::size_t k = 0; k < a2.size(); ++k) CHECK(t2.counts[k] == a2[k]);

    auto a3 = read_fixture(std::string(GROWTH_DATA_DIR) + "/oracle/a3.csv");
    CountTable t3 = count_fixed<3>(static_cast<int>(a3.size()));
    for (std::size_t k = 0; k < a3.size(); ++k) CHECK(t3.counts[k] == a3[k]);
}

TEST_CASE("superadditivity spot checks") {
    CountTable t = count_fixed<2>(12);
    for (int n = 1; n <= 6; ++n)
        for (int m = n; n + m <= 12; ++m) CHECK(t.at(n) * t.at(m) <= t.at(n + m));
}

TEST_CASE("budget error") {
    CHECK_THROWS_AS(count_fixed<2>(12, 100), budget_exceeded);
}
