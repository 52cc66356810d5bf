#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "growth/geom.hpp"

// Polyominoes (D=2) and polycubes (D=3): nonempty facet-connected cell
// sets counted up to translation.  Stored translation-normalized with the
// lexicographically smallest cell at the origin, cells in lex order.

namespace growth {

struct invalid_animal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <int D>
class Animal {
public:
    // Normalizes translation and checks connectivity; throws invalid_animal
    // on an empty, duplicated or disconnected cell set.
    explicit Animal(std::vector<Cell<D>> cells);

    const std::vector<Cell<D>>& cells() const { return cells_; }
    int size() const { return static_cast<int>(cells_.size()); }
    bool contains(const Cell<D>& c) const;

    bool operator==(const Animal& o) const { return cells_ == o.cells_; }
    bool operator<(const Animal& o) const { return cells_ < o.cells_; }

private:
    std::vector<Cell<D>> cells_;  // lex sorted, lex-min at origin
};

template <int D>
std::vector<Cell<D>> face_neighbors(const Cell<D>& c);

// Text format: one cell per line, "x y" (or "x y z") as decimal integers.
// Blank lines and lines starting with '#' are skipped on input.
template <int D>
Animal<D> read_animal(std::istream& in);

template <int D>
void write_animal(std::ostream& out, const Animal<D>& a);

extern template class Animal<2>;
extern template class Animal<3>;

}  // namespace growth
