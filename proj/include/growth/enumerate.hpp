#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "growth/bipoly.hpp"
#include "growth/twigs.hpp"

// Growing twig configurations from the single-open-cell seed and
// accumulating the weight polynomial W_i over all twigs with exactly i
// dead cells (or fewer dead cells and no open cells).

namespace growth {

// Reference configuration with explicit parts; the parallel kernel uses a
// packed representation internally and is checked against this one.
template <int D>
struct Configuration {
    std::vector<Cell<D>> dead;       // lex sorted
    std::vector<Cell<D>> forbidden;  // lex sorted
    std::deque<std::pair<Cell<D>, Orient>> queue;
    int wx = 0;  // weight x-degree: dead + open - 1
    int wy = 0;  // weight y-degree: dead

    static Configuration seed() {
        Configuration cfg;
        cfg.queue.emplace_back(Cell<D>{}, OrientTable<D>::instance().id());
        return cfg;
    }

    bool blocked(const Cell<D>& c) const;  // dead, open or forbidden
    int dead_count() const { return static_cast<int>(dead.size()); }
    int open_count() const { return static_cast<int>(queue.size()); }
};

// First clause of the placement condition: no placed cell other than the
// root may overlap a cell of the configuration (dead or open) or a cell
// marked forbidden.  The printed second clause (placed forbidden cells vs.
// configuration cells) is not enforced; see decode/encode round trips and
// the level-4 census for why the relaxed test is the complete one.
template <int D>
bool condition_star(const Configuration<D>& cfg, const std::vector<Cell<D>>& placed_whites);

// Places twig_id over the oldest open cell.  Returns the extended
// configuration, or nullopt when condition_star rejects the placement.
// Calling with an empty queue is a contract violation.
template <int D>
std::optional<Configuration<D>> extend(const Configuration<D>& cfg, int twig_id);

struct budget_exceeded : std::runtime_error {
    std::uint64_t extensions;
    explicit budget_exceeded(std::uint64_t n)
        : std::runtime_error("extension budget exceeded"), extensions(n) {}
};

struct EnumLimits {
    std::uint64_t node_budget;   // attempted twig placements
    std::uint64_t heartbeat;     // progress note interval, 0 = silent
    EnumLimits();
};

// Default 10^9 extensions; the GROWTHBOUND_BUDGET environment variable
// overrides it.
std::uint64_t default_node_budget();

struct WeightSum {
    BiPoly weights;            // W_i
    mpz_class count;           // |C_i| = W_i(1,1)
    std::uint64_t extensions;  // attempted twig placements
};

// Depth-first traversal of the twig tree, deterministically parallel:
// subtrees rooted at a fixed depth are distributed over OpenMP workers and
// per-subtree accumulators are merged in tree order, so the result is
// identical for any worker count.  workers = 0 means all available.
WeightSum build_weight_sum(int d, int level, int workers, const EnumLimits& limits = EnumLimits());

// Serial replay over the reference configuration type; used to check the
// kernel.
WeightSum build_weight_sum_reference(int d, int level, const EnumLimits& limits = EnumLimits());

// Closed twigs (no open cells) bucketed by dead-cell count 1..upto.
std::map<int, mpz_class> closed_twig_census(int d, int upto);

extern template struct Configuration<2>;
extern template struct Configuration<3>;

}  // namespace growth
