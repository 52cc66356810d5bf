#pragma once

#include <gmpxx.h>

#include <functional>
#include <vector>

#include "growth/animal.hpp"

// Independent brute-force enumeration of fixed polyominoes and polycubes,
// used as ground truth for round-trip, injectivity and dominance tests.
// Canonical-root backtracking: the root is the lex-smallest cell and growth
// is restricted to lex-greater cells, so every translation class is reached
// exactly once.

namespace growth {

struct CountTable {
    int d = 0;
    std::vector<mpz_class> counts;  // counts[k-1] = A_d(k)

    const mpz_class& at(int n) const { return counts.at(n - 1); }
};

template <int D>
CountTable count_fixed(int n_max, std::uint64_t node_budget = 0);

template <int D>
void enumerate_fixed(int n, const std::function<void(const Animal<D>&)>& emit,
                     std::uint64_t node_budget = 0);

CountTable count_fixed_d(int d, int n_max);

extern template CountTable count_fixed<2>(int, std::uint64_t);
extern template CountTable count_fixed<3>(int, std::uint64_t);
extern template void enumerate_fixed<2>(int, const std::function<void(const Animal<2>&)>&, std::uint64_t);
extern template void enumerate_fixed<3>(int, const std::function<void(const Animal<3>&)>&, std::uint64_t);

}  // namespace growth
