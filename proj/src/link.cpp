#include "hdx/link.hpp"

#include <stdexcept>

namespace hdx {

Link build_link(const SimplicialComplex& X, const WeightFunction& m, const Simplex& tau) {
    int k = tau.dim();
    if (!X.contains(tau))
        throw std::invalid_argument("link base " + to_string(tau) + " is not in the complex");
    if (k > X.dimension() - 1)
        throw std::invalid_argument("link of a top-dimensional simplex is empty");

    // Top faces of X_tau come from the n-simplices containing tau.
    std::vector<std::vector<int>> link_tops;
    for (const Simplex& s : X.simplices(X.dimension()))
        if (s.contains(tau))
            link_tops.push_back(s.difference(tau).vertices());
    if (link_tops.empty())
        throw std::logic_error("purity violation: no top coface of " + to_string(tau));

    Link link;
    link.base = tau;
    link.complex = build_complex(link_tops);

    // m_tau(eta) = m(tau u eta): every level is a direct parent lookup.
    int link_n = link.complex.dimension();
    link.parent_index.resize(link_n + 2);
    std::vector<std::vector<double>> values(link_n + 2);
    for (int l = -1; l <= link_n; ++l) {
        auto& idx_map = link.parent_index[l + 1];
        auto& level_values = values[l + 1];
        idx_map.reserve(link.complex.count(l));
        level_values.reserve(link.complex.count(l));
        for (const Simplex& eta : link.complex.simplices(l)) {
            int parent = X.index_of(tau.disjoint_union(eta));
            if (parent < 0)
                throw std::logic_error("link face missing in parent complex");
            idx_map.push_back(parent);
            level_values.push_back(m.at(k + 1 + l, parent));
        }
    }
    link.weights = weight_from_values(std::move(values));
    return link;
}

} // namespace hdx
