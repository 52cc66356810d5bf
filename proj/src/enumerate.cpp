#include "growth/enumerate.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>

namespace growth {

namespace {

template <int D>
bool sorted_contains(const std::vector<Cell<D>>& v, const Cell<D>& c) {
    return std::binary_search(v.begin(), v.end(), c, lex_less<D>);
}

template <int D>
void sorted_insert(std::vector<Cell<D>>& v, const Cell<D>& c) {
    v.insert(std::upper_bound(v.begin(), v.end(), c, lex_less<D>), c);
}

}  // namespace

template <int D>
bool Configuration<D>::blocked(const Cell<D>& c) const {
    if (sorted_contains<D>(dead, c) || sorted_contains<D>(forbidden, c)) return true;
    for (const auto& [qc, qo] : queue)
        if (qc == c) return true;
    return false;
}

template <int D>
bool condition_star(const Configuration<D>& cfg, const std::vector<Cell<D>>& placed_whites) {
    for (const auto& w : placed_whites)
        if (cfg.blocked(w)) return false;
    return true;
}

template <int D>
std::optional<Configuration<D>> extend(const Configuration<D>& cfg, int twig_id) {
    if (cfg.queue.empty())
        throw std::logic_error("extend: configuration has no open cell");
    const Twig<D>& twig = TwigSet<D>::instance().twig(twig_id);
    const auto& ot = OrientTable<D>::instance();
    const auto [u, g] = cfg.queue.front();

    std::vector<Cell<D>> placed;
    placed.reserve(twig.whites.size());
    for (const auto& w : twig.whites)
        placed.push_back(add<D>(u, apply_orient<D>(g, w.offset)));
    if (!condition_star<D>(cfg, placed)) return std::nullopt;

    Configuration<D> next = cfg;
    next.queue.pop_front();
    sorted_insert<D>(next.dead, u);
    for (std::size_t k = 0; k < placed.size(); ++k)
        next.queue.emplace_back(placed[k], ot.compose(g, twig.whites[k].orient));
    for (const auto& f : twig.forbidden) {
        Cell<D> cell = add<D>(u, apply_orient<D>(g, f));
        // A forbidden mark landing on an existing cell carries no new
        // information; keeping it out preserves dead/forbidden disjointness.
        if (!next.blocked(cell)) sorted_insert<D>(next.forbidden, cell);
    }
    next.wx = cfg.wx + twig.xdeg();
    next.wy = cfg.wy + 1;
    return next;
}

template struct Configuration<2>;
template struct Configuration<3>;
template bool condition_star<2>(const Configuration<2>&, const std::vector<Cell<2>>&);
template bool condition_star<3>(const Configuration<3>&, const std::vector<Cell<3>>&);
template std::optional<Configuration<2>> extend<2>(const Configuration<2>&, int);
template std::optional<Configuration<3>> extend<3>(const Configuration<3>&, int);

std::uint64_t default_node_budget() {
    if (const char* env = std::getenv("GROWTHBOUND_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 1'000'000'000ULL;
}

EnumLimits::EnumLimits() : node_budget(default_node_budget()), heartbeat(10'000'000) {}

namespace {

// ---- serial reference ------------------------------------------------

template <int D>
void reference_walk(const Configuration<D>& cfg, int level, BiPoly& acc,
                    std::uint64_t& extensions, const EnumLimits& limits) {
    if (cfg.open_count() == 0 || cfg.dead_count() == level) {
        acc.add_term(cfg.wx, cfg.wy, 1);
        return;
    }
    const int twig_count = TwigSet<D>::instance().count();
    for (int t = 0; t < twig_count; ++t) {
        if (++extensions > limits.node_budget) throw budget_exceeded(extensions);
        if (auto next = extend<D>(cfg, t))
            reference_walk<D>(*next, level, acc, extensions, limits);
    }
}

template <int D>
WeightSum reference_run(int level, const EnumLimits& limits) {
    if (level < 1) throw std::invalid_argument("level must be >= 1");
    WeightSum out;
    out.extensions = 0;
    reference_walk<D>(Configuration<D>::seed(), level, out.weights, out.extensions, limits);
    out.count = out.weights.eval_ones();
    return out;
}

// ---- packed parallel kernel -------------------------------------------

// Coordinates stay within +-(level+2), so a cell packs into one word with
// 16 bits per axis.
template <int D>
std::uint64_t pack_cell(const Cell<D>& c) {
    std::uint64_t k = 0;
    for (int i = 0; i < D; ++i)
        k |= (static_cast<std::uint64_t>(c[i] + 0x4000) & 0xffff) << (16 * i);
    return k;
}

// Mutable search state with undo, one per worker.  `blocked` is the sorted
// union of dead, open and forbidden cells: exactly the set condition-star
// tests placed whites against, and cells never leave it along a branch.
template <int D>
struct PackedState {
    std::vector<std::uint64_t> blocked;           // sorted
    std::vector<std::pair<Cell<D>, Orient>> queue;  // FIFO via head index
    std::size_t head = 0;
    int dead = 0;
    int whites = 0;  // live open cells

    struct Frame {
        std::size_t queue_size;
        std::uint64_t inserted[6];
        int n_inserted;
    };

    bool contains(std::uint64_t key) const {
        return std::binary_search(blocked.begin(), blocked.end(), key);
    }

    void insert(std::uint64_t key) {
        blocked.insert(std::upper_bound(blocked.begin(), blocked.end(), key), key);
    }

    void erase(std::uint64_t key) {
        auto it = std::lower_bound(blocked.begin(), blocked.end(), key);
        blocked.erase(it);
    }

    static PackedState seed() {
        PackedState st;
        st.queue.emplace_back(Cell<D>{}, OrientTable<D>::instance().id());
        st.blocked.push_back(pack_cell<D>(Cell<D>{}));
        st.whites = 1;
        return st;
    }

    // Attempts to place twig t over the oldest open cell; returns true and
    // fills `frame` for undo() on success.
    bool apply(const Twig<D>& twig, Frame& frame) {
        const auto& ot = OrientTable<D>::instance();
        const auto [u, g] = queue[head];
        Cell<D> placed[4 + 1];
        std::uint64_t keys[4 + 1];
        const int nw = static_cast<int>(twig.whites.size());
        for (int k = 0; k < nw; ++k) {
            placed[k] = add<D>(u, apply_orient<D>(g, twig.whites[k].offset));
            keys[k] = pack_cell<D>(placed[k]);
            if (contains(keys[k])) return false;
            for (int j = 0; j < k; ++j)
                if (keys[j] == keys[k]) return false;
        }
        frame.queue_size = queue.size();
        frame.n_inserted = 0;
        for (int k = 0; k < nw; ++k) {
            insert(keys[k]);
            frame.inserted[frame.n_inserted++] = keys[k];
            queue.emplace_back(placed[k], ot.compose(g, twig.whites[k].orient));
        }
        for (const auto& f : twig.forbidden) {
            std::uint64_t key = pack_cell<D>(add<D>(u, apply_orient<D>(g, f)));
            if (!contains(key)) {
                insert(key);
                frame.inserted[frame.n_inserted++] = key;
            }
        }
        ++head;
        ++dead;
        whites += nw - 1;
        return true;
    }

    void undo(const Frame& frame, int nw) {
        --head;
        --dead;
        whites -= nw - 1;
        for (int k = 0; k < frame.n_inserted; ++k) erase(frame.inserted[k]);
        queue.resize(frame.queue_size);
    }
};

// Per-subtree weight accumulator: dense (a, b) -> count grid.  Counts are
// bounded by the extension budget, so 64-bit slots cannot overflow.
struct DenseAcc {
    int max_x = 0, max_y = 0;
    std::vector<std::uint64_t> n;

    DenseAcc(int mx, int my) : max_x(mx), max_y(my), n((mx + 1) * (my + 1), 0) {}
    void add(int x, int y) { ++n[x * (max_y + 1) + y]; }
    void merge_into(BiPoly& poly) const {
        for (int x = 0; x <= max_x; ++x)
            for (int y = 0; y <= max_y; ++y)
                if (auto v = n[x * (max_y + 1) + y])
                    poly.add_term(x, y, mpz_class(static_cast<unsigned long>(v)));
    }
};

struct Progress {
    std::atomic<std::uint64_t> extensions{0};
    std::atomic<bool> over_budget{false};
    std::uint64_t budget;
    std::uint64_t heartbeat;
    int d, level;

    // Batched to keep the hot loop free of contended atomics.
    bool charge(std::uint64_t batch) {
        std::uint64_t before = extensions.fetch_add(batch, std::memory_order_relaxed);
        std::uint64_t after = before + batch;
        if (heartbeat && before / heartbeat != after / heartbeat) {
            std::fprintf(stderr, "growthbound: d=%d i=%d progress %llu extensions\n",
                         d, level, static_cast<unsigned long long>(after));
        }
        if (after > budget) {
            over_budget.store(true, std::memory_order_relaxed);
            return false;
        }
        return true;
    }
};

constexpr std::uint64_t kChargeBatch = 1 << 14;

template <int D>
void kernel_walk(PackedState<D>& st, int level, int wx, DenseAcc& acc,
                 std::uint64_t& local_ext, Progress& progress) {
    if (st.whites == 0 || st.dead == level) {
        acc.add(wx, st.dead);
        return;
    }
    const auto& twigs = TwigSet<D>::instance().twigs();
    typename PackedState<D>::Frame frame;
    for (const auto& twig : twigs) {
        if (++local_ext >= kChargeBatch) {
            if (!progress.charge(local_ext)) return;
            local_ext = 0;
        }
        if (progress.over_budget.load(std::memory_order_relaxed)) return;
        if (st.apply(twig, frame)) {
            kernel_walk<D>(st, level, wx + twig.xdeg(), acc, local_ext, progress);
            st.undo(frame, twig.xdeg());
        }
    }
}

// Expands the tree breadth-first until every unfinished configuration has
// `depth` dead cells; completed configurations are credited immediately.
// Returns the frontier states paired with their accumulated weight
// x-degrees, in deterministic tree order.
template <int D>
struct Frontier {
    std::vector<PackedState<D>> states;
    std::vector<int> wx;
};

template <int D>
Frontier<D> make_frontier(int depth, int level, DenseAcc& done, std::uint64_t& extensions) {
    Frontier<D> frontier;
    frontier.states.push_back(PackedState<D>::seed());
    frontier.wx.push_back(0);
    for (int layer = 0; layer < depth; ++layer) {
        Frontier<D> next;
        const auto& twigs = TwigSet<D>::instance().twigs();
        for (std::size_t idx = 0; idx < frontier.states.size(); ++idx) {
            PackedState<D>& st = frontier.states[idx];
            if (st.whites == 0 || st.dead == level) {
                done.add(frontier.wx[idx], st.dead);
                continue;
            }
            typename PackedState<D>::Frame frame;
            for (const auto& twig : twigs) {
                ++extensions;
                if (st.apply(twig, frame)) {
                    next.states.push_back(st);
                    next.wx.push_back(frontier.wx[idx] + twig.xdeg());
                    st.undo(frame, twig.xdeg());
                }
            }
        }
        frontier = std::move(next);
    }
    return frontier;
}

template <int D>
WeightSum kernel_run(int level, int workers, const EnumLimits& limits) {
    if (level < 1) throw std::invalid_argument("level must be >= 1");
    if (workers <= 0) workers = omp_get_max_threads();

    const int max_x = 2 * (D - 1) * level + 1;
    Progress progress;
    progress.budget = limits.node_budget;
    progress.heartbeat = limits.heartbeat;
    progress.d = D;
    progress.level = level;

    DenseAcc done(max_x, level);
    std::uint64_t setup_ext = 0;
    const int frontier_depth = std::min(level - 1, D == 2 ? 5 : 3);
    Frontier<D> frontier = make_frontier<D>(frontier_depth, level, done, setup_ext);
    progress.extensions.store(setup_ext);

    const long long n_slots = static_cast<long long>(frontier.states.size());
    std::vector<DenseAcc> slot(n_slots, DenseAcc(max_x, level));
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (long long idx = 0; idx < n_slots; ++idx) {
        if (progress.over_budget.load(std::memory_order_relaxed)) continue;
        PackedState<D> st = frontier.states[idx];
        std::uint64_t local_ext = 0;
        kernel_walk<D>(st, level, frontier.wx[idx], slot[idx], local_ext, progress);
        progress.charge(local_ext);
    }

    if (progress.over_budget.load())
        throw budget_exceeded(progress.extensions.load());

    WeightSum out;
    done.merge_into(out.weights);
    for (const auto& acc : slot) acc.merge_into(out.weights);
    out.count = out.weights.eval_ones();
    out.extensions = progress.extensions.load();
    return out;
}

}  // namespace

WeightSum build_weight_sum(int d, int level, int workers, const EnumLimits& limits) {
    if (d == 2) return kernel_run<2>(level, workers, limits);
    if (d == 3) return kernel_run<3>(level, workers, limits);
    throw std::invalid_argument("dimension must be 2 or 3");
}

WeightSum build_weight_sum_reference(int d, int level, const EnumLimits& limits) {
    if (d == 2) return reference_run<2>(level, limits);
    if (d == 3) return reference_run<3>(level, limits);
    throw std::invalid_argument("dimension must be 2 or 3");
}

std::map<int, mpz_class> closed_twig_census(int d, int upto) {
    if (upto < 1) throw std::invalid_argument("upto must be >= 1");
    WeightSum w = build_weight_sum(d, upto, 0);
    // A closed twig with k dead cells contributes x^(k-1) y^k, and no open
    // twig can share that monomial (open means x-degree >= dead count).
    std::map<int, mpz_class> census;
    for (int k = 1; k <= upto; ++k) census[k] = w.weights.coeff(k - 1, k);
    return census;
}

}  // namespace growth
