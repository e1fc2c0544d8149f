#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "hdx/complex.hpp"

namespace hdx {

/// An embedding of the vertex set into R^n (one point per vertex id).
struct PointMap {
    int dim = 0;
    std::unordered_map<int, Eigen::VectorXd> coords;

    const Eigen::VectorXd& at(int vertex_id) const;
};

/// Closed-hull membership: does x lie in conv{ points }? Decided through
/// barycentric coordinates with the given tolerance; affinely dependent
/// point sets fall back to a Caratheodory subset search, so degenerate
/// images still contribute their lower-dimensional hulls.
bool point_in_hull(const std::vector<Eigen::VectorXd>& points, const Eigen::VectorXd& x,
                   double tol = 1e-9);

/// x in the image of the n-simplex sigma under the affine extension of f.
bool point_in_image(const SimplicialComplex& X, const Simplex& sigma, const PointMap& f,
                    const Eigen::VectorXd& x, double tol = 1e-9);

/// Number of n-simplices whose closed image contains x.
int depth(const SimplicialComplex& X, const PointMap& f, const Eigen::VectorXd& x);

struct OverlapReport {
    Eigen::VectorXd witness;
    int depth = 0;
    double overlap = 0; // depth / |X(n)|
    std::string method; // "exact-2d" | "sampled"
    bool degenerate_flagged = false;
    std::optional<double> bound; // theoretical lower bound, when requested
};

/// Planar max-depth by evaluating the arrangement of triangle edges: every
/// candidate point (image vertices and pairwise edge intersections) is
/// nudged into each of its incident open cells, where depth is constant.
/// Near-collinear image triples are perturbed by 1e-9 and flagged.
OverlapReport overlap_exact_2d(const SimplicialComplex& X, const PointMap& f);

/// Sampled lower bound for any dimension: max depth over uniform samples of
/// the image bounding box plus every simplex-image centroid.
OverlapReport overlap_sampled(const SimplicialComplex& X, const PointMap& f,
                              int num_points, std::uint64_t seed);

enum class OverlapVariant { NonPartite, Partite };

/// The overlap lower bounds:
///   non-partite: n! P_n ((P_n/(n+1))^n - (n+1) C_n lambda)
///   partite:     P_n (P_n^n - C^p_n lambda)
/// with P_n the Pach selection constant, supplied by the caller.
double overlap_bound(double lambda, int n, double pach_constant, OverlapVariant variant);

} // namespace hdx
