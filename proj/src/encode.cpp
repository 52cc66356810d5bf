#include "growth/twigs.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "growth/enumerate.hpp"

namespace growth {

namespace {

template <int D>
struct CellLess {
    bool operator()(const Cell<D>& a, const Cell<D>& b) const { return lex_less<D>(a, b); }
};

}  // namespace

// Breadth-first construction: dequeue the oldest open cell with its context
// orientation, read the statuses of its probe cells, and pick the matching
// twig.  A probe counts as white only if it is a cell of the animal not yet
// discovered; a cell can be discovered and labeled only once.
template <int D>
std::vector<int> encode_twigs(const Animal<D>& a) {
    const TwigSet<D>& set = TwigSet<D>::instance();
    const auto& ot = OrientTable<D>::instance();

    std::set<Cell<D>, CellLess<D>> discovered;
    std::set<Cell<D>, CellLess<D>> asserted_empty;
    std::deque<std::pair<Cell<D>, Orient>> queue;

    const Cell<D> root{};  // animals are normalized, lex-min at origin
    queue.emplace_back(root, ot.id());
    discovered.insert(root);

    std::vector<int> seq;
    seq.reserve(a.size());
    while (!queue.empty()) {
        const auto [u, g] = queue.front();
        queue.pop_front();

        unsigned mask = 0;
        const auto& probes = set.probes();
        for (std::size_t k = 0; k < probes.size(); ++k) {
            Cell<D> cell = add<D>(u, apply_orient<D>(g, probes[k]));
            if (a.contains(cell) && !discovered.count(cell)) mask |= 1u << k;
        }
        bool diag_white = false;
        if (mask == 1u) {
            Cell<D> cell = add<D>(u, apply_orient<D>(g, set.diagonal()));
            diag_white = a.contains(cell) && !discovered.count(cell);
        }

        const int id = set.select(mask, diag_white);
        const Twig<D>& twig = set.twig(id);
        for (const auto& w : twig.whites) {
            Cell<D> cell = add<D>(u, apply_orient<D>(g, w.offset));
            if (asserted_empty.count(cell))
                throw std::logic_error("encode: white cell was asserted empty earlier");
            discovered.insert(cell);
            queue.emplace_back(cell, ot.compose(g, w.orient));
        }
        for (const auto& f : twig.forbidden) {
            Cell<D> cell = add<D>(u, apply_orient<D>(g, f));
            if (a.contains(cell) && !discovered.count(cell))
                throw std::logic_error("encode: asserting an undiscovered animal cell empty");
            if (!a.contains(cell)) asserted_empty.insert(cell);
        }
        seq.push_back(id);
    }

    if (static_cast<int>(discovered.size()) != a.size() ||
        static_cast<int>(seq.size()) != a.size())
        throw std::logic_error("encode: traversal did not cover the animal");
    return seq;
}

template <int D>
Animal<D> decode_twigs(const std::vector<int>& seq) {
    Configuration<D> cfg = Configuration<D>::seed();
    for (std::size_t k = 0; k < seq.size(); ++k) {
        if (seq[k] < 0 || seq[k] >= TwigSet<D>::instance().count())
            throw invalid_sequence(static_cast<int>(k), "unknown twig id");
        if (cfg.queue.empty())
            throw invalid_sequence(static_cast<int>(k), "queue exhausted before the sequence");
        auto next = extend<D>(cfg, seq[k]);
        if (!next)
            throw invalid_sequence(static_cast<int>(k), "placed cell overlaps the configuration");
        cfg = std::move(*next);
    }
    if (!cfg.queue.empty())
        throw invalid_sequence(static_cast<int>(seq.size()), "open cells remain after the sequence");
    return Animal<D>(std::vector<Cell<D>>(cfg.dead.begin(), cfg.dead.end()));
}

template <int D>
Mono sequence_weight(const std::vector<int>& seq) {
    const TwigSet<D>& set = TwigSet<D>::instance();
    Mono m{1, 0};
    for (int id : seq) {
        m.xdeg += set.twig(id).xdeg();
        m.ydeg += 1;
    }
    return m;
}

template <int D>
std::string sequence_to_string(const std::vector<int>& seq) {
    const TwigSet<D>& set = TwigSet<D>::instance();
    std::string out;
    for (std::size_t k = 0; k < seq.size(); ++k) {
        if (k) out += " ";
        out += set.twig(seq[k]).name;
    }
    return out;
}

template <int D>
std::vector<int> sequence_from_string(const std::string& text) {
    const TwigSet<D>& set = TwigSet<D>::instance();
    std::istringstream in(text);
    std::vector<int> seq;
    std::string name;
    while (in >> name) seq.push_back(set.id_by_name(name));
    return seq;
}

template std::vector<int> encode_twigs<2>(const Animal<2>&);
template std::vector<int> encode_twigs<3>(const Animal<3>&);
template Animal<2> decode_twigs<2>(const std::vector<int>&);
template Animal<3> decode_twigs<3>(const std::vector<int>&);
template Mono sequence_weight<2>(const std::vector<int>&);
template Mono sequence_weight<3>(const std::vector<int>&);
template std::string sequence_to_string<2>(const std::vector<int>&);
template std::string sequence_to_string<3>(const std::vector<int>&);
template std::vector<int> sequence_from_string<2>(const std::string&);
template std::vector<int> sequence_from_string<3>(const std::string&);

// The bit-string encoding: breadth-first over the adjacency graph, three
// bits per visited cell for the edges other than the incoming one, in the
// order straight / clockwise / counterclockwise.  The root's incoming edge
// is fixed to come from below and its left neighbor is skipped as well;
// both are outside the animal for the lex-smallest cell, so the string has
// length 3n-1 with n-1 ones.
std::string eden_encode(const Animal<2>& a) {
    auto cw = [](const Cell<2>& d) { return Cell<2>{d[1], -d[0]}; };
    auto ccw = [](const Cell<2>& d) { return Cell<2>{-d[1], d[0]}; };

    std::set<Cell<2>, CellLess<2>> labeled;
    std::deque<std::pair<Cell<2>, Cell<2>>> queue;  // cell, incoming direction
    const Cell<2> root{};
    const Cell<2> up{0, 1};
    labeled.insert(root);
    queue.emplace_back(root, up);

    std::string bits;
    bool at_root = true;
    while (!queue.empty()) {
        const auto [u, din] = queue.front();
        queue.pop_front();
        const Cell<2> dirs[3] = {din, cw(din), ccw(din)};
        const int n_probes = at_root ? 2 : 3;  // root: skip the known-empty left
        for (int k = 0; k < n_probes; ++k) {
            Cell<2> cell = add<2>(u, dirs[k]);
            if (a.contains(cell) && !labeled.count(cell)) {
                bits += '1';
                labeled.insert(cell);
                queue.emplace_back(cell, dirs[k]);
            } else {
                bits += '0';
            }
        }
        at_root = false;
    }
    return bits;
}

}  // namespace growth
