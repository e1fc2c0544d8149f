#pragma once

#include <vector>

#include "hdx/complex.hpp"
#include "hdx/weights.hpp"

namespace hdx {

/// The link X_tau of a simplex tau, with the induced weight
/// m_tau(eta) = m(tau u eta). Link vertices keep their original ids, so
/// side membership and set restrictions carry over from the parent.
///
/// parent_index maps each link simplex eta to the index of tau u eta in the
/// parent complex, which is what localization needs.
struct Link {
    Simplex base;
    SimplicialComplex complex;
    WeightFunction weights;
    std::vector<std::vector<int>> parent_index; // [l+1][link idx] -> parent idx at level dim(tau)+1+l

    int parent_level(int link_level) const { return base.dim() + 1 + link_level; }
};

/// Builds X_tau; throws if tau is not in X or tau is top-dimensional.
/// tau = empty simplex reproduces X itself.
Link build_link(const SimplicialComplex& X, const WeightFunction& m, const Simplex& tau);

} // namespace hdx
