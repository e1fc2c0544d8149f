#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hdx/cochain.hpp"
#include "hdx/complex.hpp"
#include "hdx/partite.hpp"
#include "hdx/weights.hpp"

namespace hdx {

/// A dense operator between cochain levels, tagged with its adjointness
/// with respect to the weighted inner product. Matrices act on coordinate
/// vectors in the complex's simplex order; shape is
/// |X(codomain)| x |X(domain)|.
struct LinearOperatorHandle {
    int domain_level = 0;
    int codomain_level = 0;
    bool self_adjoint = false;
    Eigen::MatrixXd matrix;

    Cochain apply(const Cochain& phi) const;
};

/// Mixed-tolerance entrywise comparison used for all operator identities:
/// |a - b| <= tol * (1 + |a| + |b|). Returns the largest scaled deviation.
double operator_deviation(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

LinearOperatorHandle differential_matrix(const SimplicialComplex& X, int k);
LinearOperatorHandle codifferential_matrix(const SimplicialComplex& X,
                                           const WeightFunction& m, int k);

/// Lazy upper random walk M+_k on X(k), 0 <= k <= n-1.
LinearOperatorHandle upper_walk(const SimplicialComplex& X, const WeightFunction& m, int k);
/// Lazy lower random walk M-_k on X(k), 0 <= k <= n.
LinearOperatorHandle lower_walk(const SimplicialComplex& X, const WeightFunction& m, int k);
/// Non-lazy upper walk (M')+_k = ((k+2) M+_k - I) / (k+1).
LinearOperatorHandle nonlazy_upper_walk(const SimplicialComplex& X,
                                        const WeightFunction& m, int k);

/// The scalar M-_0 phi = sum_v (m(v)/m(X(0))) phi(v); M-_0 applied to a
/// 0-cochain is the constant cochain with this value.
double mean_value(const SimplicialComplex& X, const WeightFunction& m, const Cochain& phi);

/// Diagonal 0/1 projection onto cochains supported on X(U_0, ..., U_k).
LinearOperatorHandle set_projection(const SimplicialComplex& X,
                                    const std::vector<std::vector<int>>& parts);

/// M^{-,p}_0: the orthogonal projection onto span{chi_S0, ..., chi_Sn}.
LinearOperatorHandle partite_projection(const SimplicialComplex& X, const WeightFunction& m,
                                        const PartiteStructure& partite);

/// Builds d*_k d_k and d_{k-1} d*_{k-1} and checks them entrywise against
/// (k+2) M+_k and (k+1) M-_k. Throws when the identities fail beyond the
/// mixed 1e-10 tolerance.
std::pair<LinearOperatorHandle, LinearOperatorHandle>
compose_check_dstar_d(const SimplicialComplex& X, const WeightFunction& m, int k);

} // namespace hdx
