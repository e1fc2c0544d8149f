#pragma once

#include <span>
#include <vector>

#include "hdx/complex.hpp"

namespace hdx {

/// A balanced weight function: one positive value per stored simplex of
/// every dimension, with m(tau) equal to the sum over the cofaces of tau.
/// Indexed exactly like the owning complex. Immutable after construction.
class WeightFunction {
public:
    WeightFunction() = default;

    double at(int k, int idx) const { return values_[k + 1][idx]; }
    const std::vector<double>& level(int k) const { return values_[k + 1]; }
    int levels() const { return static_cast<int>(values_.size()); }

    friend WeightFunction weight_from_top(const SimplicialComplex& X,
                                          std::span<const double> top_weights);
    friend WeightFunction weight_from_values(std::vector<std::vector<double>> values);

private:
    std::vector<std::vector<double>> values_; // [k+1][idx]
};

/// Wraps already-computed per-level values (used for induced link weights,
/// where every value is a direct lookup in the parent).
WeightFunction weight_from_values(std::vector<std::vector<double>> values);

/// The homogeneous weight: 1 on every top simplex, so that
/// m(tau) = (n-k)! * #{ sigma in X(n) : tau is a face of sigma }.
WeightFunction homogeneous_weight(const SimplicialComplex& X);

/// Fills all lower-dimensional weights from the given per-top-simplex
/// values by the balance recursion. Throws on non-positive input.
WeightFunction weight_from_top(const SimplicialComplex& X,
                               std::span<const double> top_weights);

/// m(X(k)) = sum of the weights of all k-simplices.
double total_weight(const SimplicialComplex& X, const WeightFunction& m, int k);

/// m(U) for U given as indices into level k; empty U yields 0.
double weight_of_set(const SimplicialComplex& X, const WeightFunction& m, int k,
                     std::span<const int> simplex_indices);

/// m(U) for a set of vertex ids; throws if some id is not a vertex of X.
double weight_of_vertices(const SimplicialComplex& X, const WeightFunction& m,
                          std::span<const int> vertex_ids);

/// Largest relative balance residual
/// |m(tau) - sum_cofaces m(sigma)| / m(tau) over all tau of dimension < n.
double balance_residual(const SimplicialComplex& X, const WeightFunction& m);

} // namespace hdx
