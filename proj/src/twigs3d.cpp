#include "growth/twigs.hpp"

namespace growth {

namespace {

// g(e1) = -center, g(e2) = -extra, g(e3) = s * (remaining axis).
// center is the white's face neighbor carrying the context cross, extra the
// attached cell completing it; s is the free sign of the off-cross axis pair.
Transform<3> solve_orient(const Cell<3>& center, const Cell<3>& extra, int s) {
    Transform<3> t;
    const Cell<3> cols[2] = {{-center[0], -center[1], -center[2]},
                             {-extra[0], -extra[1], -extra[2]}};
    bool used[3] = {false, false, false};
    for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 3; ++k) {
            if (cols[j][k] != 0) {
                t.perm[j] = static_cast<std::int8_t>(k);
                t.sign[j] = static_cast<std::int8_t>(cols[j][k]);
                used[k] = true;
            }
        }
    }
    for (int k = 0; k < 3; ++k) {
        if (!used[k]) {
            t.perm[2] = static_cast<std::int8_t>(k);
            t.sign[2] = static_cast<std::int8_t>(s);
        }
    }
    return t;
}

}  // namespace

// The seventeen 3D twigs: one per occupancy pattern of the four probed
// neighbors of the root, plus the extra twig for the pattern where the
// primary-axis neighbor a is occupied alone and the diagonal c = (1,1,0)
// must be encoded as well.
//
// Context orientations per white, by the same completeness rule as in 2D:
//   b and the off-plane whites center their context cross on the root;
//   a centers its cross on the root with the attached cell supplied by the
//   diagonal (when encoded) or by the probe of an earlier white;
//   c centers its cross on a.
// Whites enter the queue in the order (0,0,1), b, (0,0,-1), a, c; this
// order and the off-plane stabilizer signs are pinned by the level counts
// (273 / 3745 / 51113 / 693725), which no other variant reproduces.
template <>
TwigSet<3>::TwigSet() {
    const auto& ot = OrientTable<3>::instance();
    const Cell<3> o{0, 0, 0};
    const Cell<3> a{1, 0, 0}, b{0, 1, 0}, pp{0, 0, 1}, pm{0, 0, -1}, c{1, 1, 0};

    probes_ = {a, b, pp, pm};
    diagonal_ = c;
    context_ = {{0, -1, 0}, {-1, -1, 0}, {-1, 0, 0}, {-1, 1, 0}, {-1, 0, 1}, {-1, 0, -1}};

    const TwigWhite<3> wb{b, ot.index_of(solve_orient(sub<3>(o, b), sub<3>(Cell<3>{-1, 1, 0}, b), 1))};
    const TwigWhite<3> wpp{pp, ot.index_of(solve_orient(sub<3>(o, pp), sub<3>(Cell<3>{-1, 0, 1}, pp), -1))};
    const TwigWhite<3> wpm{pm, ot.index_of(solve_orient(sub<3>(o, pm), sub<3>(Cell<3>{-1, 0, -1}, pm), 1))};
    const TwigWhite<3> wc{c, ot.index_of(solve_orient(sub<3>(a, c), sub<3>(b, c), 1))};
    // a's attached cell: the diagonal c, or the second probe of the earliest
    // preceding white (b probes c itself; an off-plane white probes the cell
    // straight above a in its plane).
    const TwigWhite<3> wa_c{a, ot.index_of(solve_orient(sub<3>(o, a), sub<3>(c, a), 1))};
    const TwigWhite<3> wa_pp{a, ot.index_of(solve_orient(sub<3>(o, a), Cell<3>{0, 0, 1}, 1))};
    const TwigWhite<3> wa_pm{a, ot.index_of(solve_orient(sub<3>(o, a), Cell<3>{0, 0, -1}, 1))};

    auto make = [&](unsigned mask, bool diag) {
        Twig<3> t;
        if (mask & 0b0100) t.whites.push_back(wpp);
        if (mask & 0b0010) t.whites.push_back(wb);
        if (mask & 0b1000) t.whites.push_back(wpm);
        if (mask & 0b0001) {
            if (mask & 0b0100) t.whites.push_back(wa_pp);
            else if (mask & 0b0010) t.whites.push_back(wa_c);
            else if (mask & 0b1000) t.whites.push_back(wa_pm);
            else t.whites.push_back(wa_c);
        }
        if (diag) t.whites.push_back(wc);
        for (unsigned k = 0; k < 4; ++k)
            if (!(mask & (1u << k))) t.forbidden.push_back(probes_[k]);
        if (mask == 0b0001 && !diag) t.forbidden.push_back(c);
        return t;
    };

    by_mask_.assign(16, -1);
    auto put = [&](unsigned mask, bool diag) {
        Twig<3> t = make(mask, diag);
        t.name = "T" + std::to_string(twigs_.size() + 1);
        if (mask == 0b0001) (diag ? split_diag_ : split_plain_) = static_cast<int>(twigs_.size());
        else by_mask_[mask] = static_cast<int>(twigs_.size());
        twigs_.push_back(std::move(t));
    };

    put(0b0000, false);
    put(0b0001, false);
    put(0b0010, false);
    put(0b0100, false);
    put(0b1000, false);
    put(0b0001, true);
    for (unsigned mask : {0b0011u, 0b0101u, 0b0110u, 0b1001u, 0b1010u, 0b1100u}) put(mask, false);
    for (unsigned mask : {0b0111u, 0b1011u, 0b1101u, 0b1110u}) put(mask, false);
    put(0b1111, false);
}

std::vector<Cell<3>> plus_l_context(const Cell<3>& u, Orient o) {
    std::vector<Cell<3>> out;
    for (const auto& c : TwigSet<3>::instance().context())
        out.push_back(add<3>(u, apply_orient<3>(o, c)));
    return out;
}

}  // namespace growth
