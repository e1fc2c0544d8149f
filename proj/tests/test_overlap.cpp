#include <doctest.h>

#include <cmath>

#include "hdx/generators.hpp"
#include "hdx/overlap.hpp"
#include "hdx/rng.hpp"
#include "test_helpers.hpp"

using namespace hdx;
using namespace hdx::testing;

namespace {

PointMap planar_map(std::initializer_list<std::pair<int, std::pair<double, double>>> pts) {
    PointMap f;
    f.dim = 2;
    for (const auto& [id, xy] : pts)
        f.coords[id] = Eigen::Vector2d(xy.first, xy.second);
    return f;
}

PointMap random_planar_map(const SimplicialComplex& X, Rng& rng) {
    PointMap f;
    f.dim = 2;
    for (int v : X.vertex_ids())
        f.coords[v] = Eigen::Vector2d(rng.uniform(), rng.uniform());
    return f;
}

// A convex quadrilateral whose centroid avoids both diagonals.
PointMap generic_quadrilateral() {
    return planar_map({{0, {0.0, 0.0}}, {1, {3.0, 0.0}}, {2, {4.0, 2.0}}, {3, {0.0, 1.0}}});
}

} // namespace

TEST_CASE("barycentric membership in a triangle") {
    std::vector<Eigen::VectorXd> tri{Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 0),
                                     Eigen::Vector2d(0, 1)};
    CHECK(point_in_hull(tri, Eigen::Vector2d(0.25, 0.25)));
    CHECK_FALSE(point_in_hull(tri, Eigen::Vector2d(1, 1)));
    CHECK(point_in_hull(tri, Eigen::Vector2d(0.5, 0.0))); // closed hull
    CHECK(point_in_hull(tri, Eigen::Vector2d(0, 0)));
}

TEST_CASE("degenerate images keep their lower-dimensional hulls") {
    std::vector<Eigen::VectorXd> flat{Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 1),
                                      Eigen::Vector2d(2, 2)};
    CHECK(point_in_hull(flat, Eigen::Vector2d(1.5, 1.5)));
    CHECK_FALSE(point_in_hull(flat, Eigen::Vector2d(1.0, 1.2)));
    CHECK_FALSE(point_in_hull(flat, Eigen::Vector2d(2.5, 2.5)));
}

TEST_CASE("depth counts covering simplices") {
    SimplicialComplex tri = single_triangle();
    PointMap f = planar_map({{0, {0, 0}}, {1, {1, 0}}, {2, {0, 1}}});
    CHECK(depth(tri, f, Eigen::Vector2d(0.2, 0.2)) == 1);
    CHECK(depth(tri, f, Eigen::Vector2d(2, 2)) == 0);

    SimplicialComplex pair = build_complex({{0, 1, 2}, {3, 4, 5}});
    PointMap g = planar_map({{0, {0, 0}}, {1, {1, 0}}, {2, {0, 1}},
                             {3, {5, 5}}, {4, {6, 5}}, {5, {5, 6}}});
    CHECK(depth(pair, g, Eigen::Vector2d(0.2, 0.2)) == 1);
    CHECK(depth(pair, g, Eigen::Vector2d(5.2, 5.2)) == 1);
    CHECK(depth(pair, g, Eigen::Vector2d(3, 3)) == 0);

    // All four triangles on a convex quadrilateral share depth 2 generically.
    SimplicialComplex K4 = complete_complex(4, 2);
    PointMap quad = generic_quadrilateral();
    CHECK(depth(K4, quad, Eigen::Vector2d(7.0 / 4, 3.0 / 4)) == 2);
}

TEST_CASE("exact planar overlap of a single embedded triangle") {
    SimplicialComplex tri = single_triangle();
    PointMap f = planar_map({{0, {0, 0}}, {1, {1, 0}}, {2, {0, 1}}});
    OverlapReport report = overlap_exact_2d(tri, f);
    CHECK(report.depth == 1);
    CHECK(report.overlap == doctest::Approx(1.0));
    CHECK(report.method == "exact-2d");
    CHECK_FALSE(report.degenerate_flagged);
}

TEST_CASE("exact planar overlap of the complete 4-vertex complex") {
    SimplicialComplex K4 = complete_complex(4, 2);
    OverlapReport report = overlap_exact_2d(K4, generic_quadrilateral());
    CHECK(report.depth == 2);
    CHECK(report.overlap == doctest::Approx(0.5));
    CHECK(depth(K4, generic_quadrilateral(), report.witness) >= 2);
}

TEST_CASE("exact planar overlap rejects the wrong dimension") {
    SimplicialComplex edge = complete_complex(2, 1);
    PointMap f = planar_map({{0, {0, 0}}, {1, {1, 0}}});
    CHECK_THROWS(overlap_exact_2d(edge, f));
}

TEST_CASE("collinear images are perturbed and flagged") {
    SimplicialComplex tri = single_triangle();
    PointMap flat = planar_map({{0, {0, 0}}, {1, {1, 1}}, {2, {2, 2}}});
    OverlapReport report = overlap_exact_2d(tri, flat);
    CHECK(report.degenerate_flagged);
    CHECK(report.depth >= 0); // no crash; the perturbed image is generic
}

TEST_CASE("sampled overlap always reaches the centroids") {
    SimplicialComplex tri = single_triangle();
    PointMap f = planar_map({{0, {0, 0}}, {1, {1, 0}}, {2, {0, 1}}});
    OverlapReport none = overlap_sampled(tri, f, 0, 1);
    CHECK(none.depth >= 1);

    // Works in any dimension: one tetrahedron in R^3.
    SimplicialComplex tet = complete_complex(4, 3);
    PointMap g;
    g.dim = 3;
    g.coords[0] = Eigen::Vector3d(0, 0, 0);
    g.coords[1] = Eigen::Vector3d(1, 0, 0);
    g.coords[2] = Eigen::Vector3d(0, 1, 0);
    g.coords[3] = Eigen::Vector3d(0, 0, 1);
    OverlapReport r3 = overlap_sampled(tet, g, 200, 9);
    CHECK(r3.depth == 1);
    CHECK(r3.overlap == doctest::Approx(1.0));
}

TEST_CASE("sampled depth never exceeds the exact planar depth") {
    Rng rng(99);
    for (int instance = 0; instance < 10; ++instance) {
        SimplicialComplex X =
            (instance % 2 == 0) ? complete_complex(5, 2) : random_pure_complex(6, 2, 0.7, instance + 1);
        PointMap f = random_planar_map(X, rng);
        OverlapReport exact = overlap_exact_2d(X, f);
        OverlapReport sampled = overlap_sampled(X, f, 10000, instance * 7 + 1);
        CAPTURE(instance);
        CHECK(sampled.depth <= exact.depth);
        CHECK(sampled.depth >= 1);
    }
}

TEST_CASE("exact depth counts are affine invariants") {
    Eigen::Matrix2d A;
    A << 2.0, 0.3, -0.4, 1.5;
    Eigen::Vector2d b(0.7, -1.1);

    Rng rng(123);
    std::vector<std::pair<SimplicialComplex, PointMap>> instances;
    instances.emplace_back(complete_complex(4, 2), generic_quadrilateral());
    for (int i = 0; i < 4; ++i) {
        SimplicialComplex X = complete_complex(5, 2);
        instances.emplace_back(X, random_planar_map(X, rng));
    }

    for (auto& [X, f] : instances) {
        PointMap mapped;
        mapped.dim = 2;
        for (const auto& [id, p] : f.coords)
            mapped.coords[id] = A * Eigen::Vector2d(p) + b;
        OverlapReport before = overlap_exact_2d(X, f);
        OverlapReport after = overlap_exact_2d(X, mapped);
        CHECK(before.depth == after.depth);
    }
}

TEST_CASE("overlap lower-bound formulas") {
    CHECK(overlap_bound(0.0, 2, 0.5, OverlapVariant::Partite) ==
          doctest::Approx(std::pow(0.5, 3)));
    CHECK(overlap_bound(0.1, 1, 0.5, OverlapVariant::Partite) ==
          doctest::Approx(0.5 * (0.5 - 2 * 0.1)));
    CHECK(overlap_bound(0.0, 2, 0.3, OverlapVariant::NonPartite) ==
          doctest::Approx(2 * 0.3 * std::pow(0.3 / 3, 2)));
    CHECK(overlap_bound(0.01, 2, 0.3, OverlapVariant::NonPartite) ==
          doctest::Approx(2 * 0.3 * (std::pow(0.1, 2) - 3 * 5 * 0.01)));
    CHECK_THROWS(overlap_bound(0.1, 2, 0.0, OverlapVariant::Partite));
    CHECK_THROWS(overlap_bound(0.1, 2, 1.5, OverlapVariant::Partite));
}

TEST_CASE("point map lookups fail loudly") {
    SimplicialComplex tri = single_triangle();
    PointMap f = planar_map({{0, {0, 0}}, {1, {1, 0}}});
    CHECK_THROWS(depth(tri, f, Eigen::Vector2d(0, 0)));
}
