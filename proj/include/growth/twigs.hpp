#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "growth/animal.hpp"
#include "growth/geom.hpp"

// The canonical twig sets: five twigs in 2D, seventeen in 3D.
//
// A twig is a local building block rooted at a black cell placed over the
// open cell being processed.  It lists the white (open) cells it adds, each
// with the context orientation the breadth-first construction assigns to
// it, and the probe cells it asserts empty (forbidden).
//
// Canonical frame: the root sits at the origin carrying the identity
// context.  In 2D the context is the L-shaped 4-set {left, below-left,
// below, below-right}; the probed neighbors are a = (0,1), b = (1,0) and,
// when a alone is occupied, the diagonal c = (1,1).  In 3D the context is
// the 6-cell set returned by plus_l_context and the probes gain the two
// off-plane neighbors (0,0,+-1); the diagonal becomes c = (1,1,0).

namespace growth {

template <int D>
struct TwigWhite {
    Cell<D> offset;
    Orient orient;  // context orientation in the canonical frame
};

template <int D>
struct Twig {
    std::string name;
    std::vector<TwigWhite<D>> whites;   // queue insertion order
    std::vector<Cell<D>> forbidden;
    int xdeg() const { return static_cast<int>(whites.size()); }  // weight x^xdeg * y
};

template <int D>
class TwigSet {
public:
    static const TwigSet& instance() {
        static const TwigSet set;
        return set;
    }

    const std::vector<Twig<D>>& twigs() const { return twigs_; }
    int count() const { return static_cast<int>(twigs_.size()); }
    const Twig<D>& twig(int id) const { return twigs_[id]; }

    int id_by_name(const std::string& name) const {
        for (int k = 0; k < count(); ++k)
            if (twigs_[k].name == name) return k;
        throw std::out_of_range("unknown twig name: " + name);
    }

    // Probe offsets in the canonical frame; probe 0 is the one whose
    // lone occupancy forces the extra diagonal encoding.
    const std::vector<Cell<D>>& probes() const { return probes_; }
    const Cell<D>& diagonal() const { return diagonal_; }

    // Root context cells in the canonical frame (4 in 2D, 6 in 3D).
    const std::vector<Cell<D>>& context() const { return context_; }

    // Twig selected when exactly the probes in `mask` are claimed white;
    // for the ambiguous mask (probe 0 alone) `diag_white` decides.
    int select(unsigned mask, bool diag_white) const {
        if (mask == 1u) return diag_white ? split_diag_ : split_plain_;
        return by_mask_[mask];
    }

private:
    TwigSet();
    std::vector<Twig<D>> twigs_;
    std::vector<Cell<D>> probes_;
    std::vector<Cell<D>> context_;
    Cell<D> diagonal_{};
    std::vector<int> by_mask_;
    int split_plain_ = -1;  // probe-0-only, diagonal empty
    int split_diag_ = -1;   // probe-0-only, diagonal claimed
};

template <> TwigSet<2>::TwigSet();
template <> TwigSet<3>::TwigSet();

// The 6-cell context of an open 3D cell under a context orientation.
std::vector<Cell<3>> plus_l_context(const Cell<3>& u, Orient o);

// --- Encoding -------------------------------------------------------------

struct invalid_sequence : std::runtime_error {
    int step;  // 0-based index of the failing twig, or sequence length
    invalid_sequence(int s, const std::string& what)
        : std::runtime_error(what), step(s) {}
};

// Breadth-first twig encoding of an animal.  Inverse pair:
// decode_twigs(encode_twigs(P)) == P, and encode is injective.
template <int D>
std::vector<int> encode_twigs(const Animal<D>& a);

// Replays a twig sequence; throws invalid_sequence if a placed cell
// overlaps a dead, open or forbidden cell or if the queue does not empty
// exactly at the last twig.
template <int D>
Animal<D> decode_twigs(const std::vector<int>& seq);

// Weight monomial x^a y^b of a sequence: a = 1 + sum of white counts
// (the empty sequence has weight x), b = sequence length.
struct Mono {
    int xdeg = 0;
    int ydeg = 0;
    bool operator==(const Mono&) const = default;
};

template <int D>
Mono sequence_weight(const std::vector<int>& seq);

template <int D>
std::string sequence_to_string(const std::vector<int>& seq);

template <int D>
std::vector<int> sequence_from_string(const std::string& text);

// The older breadth-first bit-string encoding: length 3n-1 with exactly
// n-1 ones for an n-cell polyomino.
std::string eden_encode(const Animal<2>& a);

}  // namespace growth
