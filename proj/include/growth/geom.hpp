#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <vector>

// Lattice cells and the signed-permutation transforms used to place
// twigs in their assigned context orientations.

namespace growth {

template <int D>
using Cell = std::array<std::int64_t, D>;

template <int D>
Cell<D> add(const Cell<D>& a, const Cell<D>& b) {
    Cell<D> r;
    for (int k = 0; k < D; ++k) r[k] = a[k] + b[k];
    return r;
}

template <int D>
Cell<D> sub(const Cell<D>& a, const Cell<D>& b) {
    Cell<D> r;
    for (int k = 0; k < D; ++k) r[k] = a[k] - b[k];
    return r;
}

template <int D>
std::int64_t l1_dist(const Cell<D>& a, const Cell<D>& b) {
    std::int64_t s = 0;
    for (int k = 0; k < D; ++k) s += std::llabs(a[k] - b[k]);
    return s;
}

// Comparison axis order: (y, x) in two dimensions, (x1, x2, x3) in three.
// The first differing coordinate in this order decides.
template <int D>
constexpr std::array<int, D> lex_axes();

template <>
constexpr std::array<int, 2> lex_axes<2>() { return {1, 0}; }

template <>
constexpr std::array<int, 3> lex_axes<3>() { return {0, 1, 2}; }

template <int D>
int lex_compare(const Cell<D>& a, const Cell<D>& b) {
    for (int axis : lex_axes<D>()) {
        if (a[axis] != b[axis]) return a[axis] < b[axis] ? -1 : 1;
    }
    return 0;
}

template <int D>
bool lex_less(const Cell<D>& a, const Cell<D>& b) {
    return lex_compare<D>(a, b) < 0;
}

// A signed permutation of the axes: axis j maps to axis perm[j] with
// sign sign[j], i.e. g(e_j) = sign[j] * e_{ perm[j] }.
template <int D>
struct Transform {
    std::array<std::int8_t, D> perm{};
    std::array<std::int8_t, D> sign{};

    static Transform identity() {
        Transform t;
        for (int k = 0; k < D; ++k) { t.perm[k] = static_cast<std::int8_t>(k); t.sign[k] = 1; }
        return t;
    }

    Cell<D> apply(const Cell<D>& c) const {
        Cell<D> r{};
        for (int k = 0; k < D; ++k) r[perm[k]] = sign[k] * c[k];
        return r;
    }

    // (a.compose(b))(v) == a(b(v))
    Transform compose(const Transform& b) const {
        Transform r;
        for (int k = 0; k < D; ++k) {
            r.perm[k] = perm[b.perm[k]];
            r.sign[k] = static_cast<std::int8_t>(b.sign[k] * sign[b.perm[k]]);
        }
        return r;
    }

    Transform inverse() const {
        Transform r;
        for (int k = 0; k < D; ++k) {
            r.perm[perm[k]] = static_cast<std::int8_t>(k);
            r.sign[perm[k]] = sign[k];
        }
        return r;
    }

    bool operator==(const Transform& o) const { return perm == o.perm && sign == o.sign; }
};

// Every signed permutation, enumerated once per dimension (8 in 2D, 48
// in 3D).  Orientations are stored as indices into this table; composition
// and inversion are table lookups.
using Orient = std::uint8_t;

template <int D>
class OrientTable {
public:
    static const OrientTable& instance();

    int size() const { return static_cast<int>(transforms_.size()); }
    const Transform<D>& transform(Orient o) const { return transforms_[o]; }
    Orient id() const { return id_; }
    Orient compose(Orient a, Orient b) const { return compose_[a * size() + b]; }
    Orient inverse(Orient a) const { return inverse_[a]; }
    Orient index_of(const Transform<D>& t) const;

private:
    OrientTable();
    std::vector<Transform<D>> transforms_;
    std::vector<Orient> compose_;
    std::vector<Orient> inverse_;
    Orient id_ = 0;
};

template <int D>
Cell<D> apply_orient(Orient o, const Cell<D>& c) {
    return OrientTable<D>::instance().transform(o).apply(c);
}

extern template class OrientTable<2>;
extern template class OrientTable<3>;

}  // namespace growth
