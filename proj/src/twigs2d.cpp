#include "growth/twigs.hpp"

namespace growth {

namespace {

// A context orientation is pinned by where it sends the canonical context's
// cross center (the face neighbor on the primary lex axis) and its attached
// extra cell: g(e_primary) = -center, g(e_secondary) = -extra.
Transform<2> solve_orient(const Cell<2>& center, const Cell<2>& extra) {
    Transform<2> t;
    const Cell<2> cols[2] = {{-extra[0], -extra[1]}, {-center[0], -center[1]}};
    for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) {
            if (cols[j][k] != 0) {
                t.perm[j] = static_cast<std::int8_t>(k);
                t.sign[j] = static_cast<std::int8_t>(cols[j][k]);
            }
        }
    }
    return t;
}

}  // namespace

// The five canonical twigs.  Probe a = (0,1) is the neighbor on the primary
// lex axis; its lone occupancy is the case that needs the diagonal c = (1,1)
// encoded so that a's context is complete when a is dequeued.  Each white's
// orientation is the unique one whose context cells all have their statuses
// determined at that white's dequeue time:
//   a-white: context centered on the root with c attached,
//   b-white and c-white: context centered on their known occupied neighbor.
template <>
TwigSet<2>::TwigSet() {
    const auto& ot = OrientTable<2>::instance();
    const Cell<2> a{0, 1}, b{1, 0}, c{1, 1}, o{0, 0};

    probes_ = {a, b};
    diagonal_ = c;
    context_ = {{-1, 0}, {-1, -1}, {0, -1}, {1, -1}};

    const TwigWhite<2> wa{a, ot.index_of(solve_orient(sub<2>(o, a), sub<2>(c, a)))};
    const TwigWhite<2> wb{b, ot.index_of(solve_orient(sub<2>(o, b), sub<2>(Cell<2>{1, -1}, b)))};
    const TwigWhite<2> wc{c, ot.index_of(solve_orient(sub<2>(a, c), sub<2>(b, c)))};

    twigs_ = {
        {"L1", {}, {a, b}},
        {"L2", {wa}, {b, c}},
        {"L3", {wa, wc}, {b}},
        {"L4", {wb}, {a}},
        {"L5", {wb, wa}, {}},
    };

    by_mask_.assign(4, -1);
    by_mask_[0b00] = 0;  // L1
    by_mask_[0b10] = 3;  // L4: b alone
    by_mask_[0b11] = 4;  // L5
    split_plain_ = 1;    // L2: a alone, diagonal empty
    split_diag_ = 2;     // L3: a alone, diagonal claimed
}

}  // namespace growth
