#pragma once

#include <span>

#include <Eigen/Dense>

#include "hdx/complex.hpp"
#include "hdx/link.hpp"
#include "hdx/rng.hpp"
#include "hdx/weights.hpp"

namespace hdx {

/// A real-valued function on X(k), stored in the complex's simplex order.
struct Cochain {
    int level = 0;
    Eigen::VectorXd values;
};

Cochain zero_cochain(const SimplicialComplex& X, int k);
Cochain constant_cochain(const SimplicialComplex& X, int k, double value);
/// Indicator of a set of level-k simplex indices.
Cochain indicator(const SimplicialComplex& X, int k, std::span<const int> simplex_indices);
/// Indicator of X(U_0, ..., U_k).
Cochain spanning_indicator(const SimplicialComplex& X,
                           const std::vector<std::vector<int>>& parts);
Cochain random_cochain(const SimplicialComplex& X, int k, Rng& rng);

/// <phi, psi> = sum_sigma m(sigma) phi(sigma) psi(sigma). Levels must match.
double inner_product(const SimplicialComplex& X, const WeightFunction& m,
                     const Cochain& phi, const Cochain& psi);
double norm(const SimplicialComplex& X, const WeightFunction& m, const Cochain& phi);

/// The signless differential: (d phi)(sigma) = sum over the k-faces of sigma.
Cochain differential(const SimplicialComplex& X, const Cochain& phi);

/// Its adjoint in the weighted inner product:
/// (d* psi)(tau) = sum over cofaces sigma of (m(sigma)/m(tau)) psi(sigma).
Cochain codifferential(const SimplicialComplex& X, const WeightFunction& m,
                       const Cochain& psi);

/// phi_tau(eta) = phi(tau u eta), a cochain on the link.
Cochain localize(const Link& link, const Cochain& phi);

} // namespace hdx
