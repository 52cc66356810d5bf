#include "growth/animal.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace growth {

template <int D>
Animal<D>::Animal(std::vector<Cell<D>> cells) : cells_(std::move(cells)) {
    if (cells_.empty()) throw invalid_animal("empty cell set");
    std::sort(cells_.begin(), cells_.end(), lex_less<D>);
    if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end())
        throw invalid_animal("duplicate cell");
    const Cell<D> base = cells_.front();
    for (auto& c : cells_) c = sub<D>(c, base);

    // flood fill from the root over face adjacency
    std::vector<char> seen(cells_.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const Cell<D> cur = cells_[stack.back()];
        stack.pop_back();
        for (const auto& nb : face_neighbors<D>(cur)) {
            auto it = std::lower_bound(cells_.begin(), cells_.end(), nb, lex_less<D>);
            if (it != cells_.end() && *it == nb) {
                std::size_t idx = static_cast<std::size_t>(it - cells_.begin());
                if (!seen[idx]) { seen[idx] = 1; ++reached; stack.push_back(idx); }
            }
        }
    }
    if (reached != cells_.size()) throw invalid_animal("disconnected cell set");
}

template <int D>
bool Animal<D>::contains(const Cell<D>& c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c, lex_less<D>);
}

template <int D>
std::vector<Cell<D>> face_neighbors(const Cell<D>& c) {
    std::vector<Cell<D>> out;
    out.reserve(2 * D);
    for (int k = 0; k < D; ++k) {
        for (int s : {-1, 1}) {
            Cell<D> n = c;
            n[k] += s;
            out.push_back(n);
        }
    }
    return out;
}

template <int D>
Animal<D> read_animal(std::istream& in) {
    std::vector<Cell<D>> cells;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        Cell<D> c{};
        for (int k = 0; k < D; ++k) {
            if (!(ls >> c[k])) throw invalid_animal("bad cell line: " + line);
        }
        std::int64_t extra;
        if (ls >> extra) throw invalid_animal("too many coordinates: " + line);
        cells.push_back(c);
    }
    return Animal<D>(std::move(cells));
}

template <int D>
void write_animal(std::ostream& out, const Animal<D>& a) {
    for (const auto& c : a.cells()) {
        for (int k = 0; k < D; ++k) out << (k ? " " : "") << c[k];
        out << "\n";
    }
}

template class Animal<2>;
template class Animal<3>;
template std::vector<Cell<2>> face_neighbors<2>(const Cell<2>&);
template std::vector<Cell<3>> face_neighbors<3>(const Cell<3>&);
template Animal<2> read_animal<2>(std::istream&);
template Animal<3> read_animal<3>(std::istream&);
template void write_animal<2>(std::ostream&, const Animal<2>&);
template void write_animal<3>(std::ostream&, const Animal<3>&);

}  // namespace growth
