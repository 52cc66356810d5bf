#include "growth/geom.hpp"

#include <algorithm>
#include <stdexcept>

namespace growth {

template <int D>
OrientTable<D>::OrientTable() {
    std::array<int, D> axes{};
    for (int k = 0; k < D; ++k) axes[k] = k;
    do {
        for (int bits = 0; bits < (1 << D); ++bits) {
            Transform<D> t;
            for (int k = 0; k < D; ++k) {
                t.perm[k] = static_cast<std::int8_t>(axes[k]);
                t.sign[k] = (bits >> k) & 1 ? -1 : 1;
            }
            transforms_.push_back(t);
        }
    } while (std::next_permutation(axes.begin(), axes.end()));

    const int n = size();
    id_ = index_of(Transform<D>::identity());
    compose_.resize(n * n);
    inverse_.resize(n);
    for (int a = 0; a < n; ++a) {
        inverse_[a] = index_of(transforms_[a].inverse());
        for (int b = 0; b < n; ++b)
            compose_[a * n + b] = index_of(transforms_[a].compose(transforms_[b]));
    }
}

template <int D>
Orient OrientTable<D>::index_of(const Transform<D>& t) const {
    for (int k = 0; k < size(); ++k)
        if (transforms_[k] == t) return static_cast<Orient>(k);
    throw std::logic_error("transform not in orientation table");
}

template <int D>
const OrientTable<D>& OrientTable<D>::instance() {
    static const OrientTable<D> table;
    return table;
}

template class OrientTable<2>;
template class OrientTable<3>;

}  // namespace growth
