#include "growth/oracle.hpp"

#include <unordered_set>

#include "growth/enumerate.hpp"  // budget_exceeded, default_node_budget

namespace growth {

namespace {

template <int D>
std::uint64_t pack(const Cell<D>& c) {
    std::uint64_t k = 0;
    for (int i = 0; i < D; ++i)
        k |= (static_cast<std::uint64_t>(c[i] + 0x4000) & 0xffff) << (16 * i);
    return k;
}

template <int D>
struct Walker {
    int n_max = 0;
    std::uint64_t budget = 0;
    std::uint64_t nodes = 0;
    std::vector<mpz_class> counts;
    std::vector<Cell<D>> cells;
    std::unordered_set<std::uint64_t> reached;
    const std::function<void(const Animal<D>&)>* emit = nullptr;
    int emit_size = 0;

    void run() {
        const Cell<D> origin{};
        reached.insert(pack<D>(origin));
        std::vector<Cell<D>> untried{origin};
        grow(std::move(untried), 0);
    }

    void grow(std::vector<Cell<D>> untried, int size) {
        while (!untried.empty()) {
            if (++nodes > budget) throw budget_exceeded(nodes);
            Cell<D> c = untried.back();
            untried.pop_back();
            cells.push_back(c);
            counts[size] += 1;
            if (emit && size + 1 == emit_size) (*emit)(Animal<D>(cells));
            if (size + 1 < n_max) {
                std::vector<Cell<D>> next = untried;
                std::vector<std::uint64_t> marked_here;
                for (const auto& nb : face_neighbors<D>(c)) {
                    if (!lex_less<D>(Cell<D>{}, nb)) continue;  // root stays lex-smallest
                    std::uint64_t key = pack<D>(nb);
                    if (reached.insert(key).second) {
                        marked_here.push_back(key);
                        next.push_back(nb);
                    }
                }
                grow(std::move(next), size + 1);
                for (std::uint64_t key : marked_here) reached.erase(key);
            }
            cells.pop_back();
        }
    }
};

}  // namespace

template <int D>
CountTable count_fixed(int n_max, std::uint64_t node_budget) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    Walker<D> w;
    w.n_max = n_max;
    w.budget = node_budget ? node_budget : default_node_budget();
    w.counts.assign(n_max, 0);
    w.run();
    CountTable out;
    out.d = D;
    out.counts = std::move(w.counts);
    return out;
}

template <int D>
void enumerate_fixed(int n, const std::function<void(const Animal<D>&)>& emit,
                     std::uint64_t node_budget) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    Walker<D> w;
    w.n_max = n;
    w.budget = node_budget ? node_budget : default_node_budget();
    w.counts.assign(n, 0);
    w.emit = &emit;
    w.emit_size = n;
    w.run();
}

CountTable count_fixed_d(int d, int n_max) {
    if (d == 2) return count_fixed<2>(n_max);
    if (d == 3) return count_fixed<3>(n_max);
    throw std::invalid_argument("dimension must be 2 or 3");
}

template CountTable count_fixed<2>(int, std::uint64_t);
template CountTable count_fixed<3>(int, std::uint64_t);
template void enumerate_fixed<2>(int, const std::function<void(const Animal<2>&)>&, std::uint64_t);
template void enumerate_fixed<3>(int, const std::function<void(const Animal<3>&)>&, std::uint64_t);

}  // namespace growth
