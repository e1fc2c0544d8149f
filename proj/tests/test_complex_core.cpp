#include <doctest.h>

#include <cmath>

#include "hdx/complex.hpp"
#include "hdx/generators.hpp"
#include "hdx/link.hpp"
#include "hdx/partite.hpp"
#include "hdx/weights.hpp"
#include "test_helpers.hpp"

using namespace hdx;
using namespace hdx::testing;

namespace {
double factorial(int n) {
    double f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}
} // namespace

TEST_CASE("build_complex counts faces per dimension") {
    SimplicialComplex tri = single_triangle();
    CHECK(tri.dimension() == 2);
    CHECK(tri.count(2) == 1);
    CHECK(tri.count(1) == 3);
    CHECK(tri.count(0) == 3);
    CHECK(tri.count(-1) == 1);

    SimplicialComplex two = two_triangles_shared_edge();
    CHECK(two.count(2) == 2);
    CHECK(two.count(1) == 5);
    CHECK(two.count(0) == 4);

    SimplicialComplex tetra = tetrahedron_boundary();
    CHECK(tetra.count(2) == 4);
    CHECK(tetra.count(1) == 6);
    CHECK(tetra.count(0) == 4);
}

TEST_CASE("build_complex rejects malformed input") {
    CHECK_THROWS(build_complex({{0, 1, 2}, {3, 4}}));
    CHECK_THROWS(build_complex({{0, 1, 2}, {2, 1, 0}})); // duplicate after sorting
    CHECK_THROWS(build_complex({{0, 1, 1}}));
    CHECK_THROWS(build_complex({}));
}

TEST_CASE("homogeneous weight on the single triangle") {
    SimplicialComplex tri = single_triangle();
    WeightFunction m = homogeneous_weight(tri);
    CHECK(m.at(2, 0) == doctest::Approx(1.0));
    for (int i = 0; i < 3; ++i)
        CHECK(m.at(1, i) == doctest::Approx(1.0));
    for (int i = 0; i < 3; ++i)
        CHECK(m.at(0, i) == doctest::Approx(2.0));
    CHECK(m.at(-1, 0) == doctest::Approx(6.0));
}

TEST_CASE("homogeneous weight counts cofaces") {
    SimplicialComplex two = two_triangles_shared_edge();
    WeightFunction m = homogeneous_weight(two);
    CHECK(m.at(1, two.index_of(Simplex::of({1, 2}))) == doctest::Approx(2.0));
    CHECK(m.at(1, two.index_of(Simplex::of({0, 1}))) == doctest::Approx(1.0));
    CHECK(m.at(0, two.index_of(Simplex::of({1}))) == doctest::Approx(4.0));

    SimplicialComplex tetra = tetrahedron_boundary();
    WeightFunction mh = homogeneous_weight(tetra);
    for (int i = 0; i < 4; ++i)
        CHECK(mh.at(0, i) == doctest::Approx(6.0)); // 2! * 3 triangles per vertex
}

TEST_CASE("weight_from_top scales and localizes per component") {
    SimplicialComplex tri = single_triangle();
    std::vector<double> w{2.0};
    WeightFunction m = weight_from_top(tri, w);
    for (int i = 0; i < 3; ++i)
        CHECK(m.at(1, i) == doctest::Approx(2.0));
    for (int i = 0; i < 3; ++i)
        CHECK(m.at(0, i) == doctest::Approx(4.0));
    CHECK(m.at(-1, 0) == doctest::Approx(12.0));

    SimplicialComplex pair = build_complex({{0, 1, 2}, {3, 4, 5}});
    std::vector<double> weights(2);
    weights[pair.index_of(Simplex::of({0, 1, 2}))] = 1.0;
    weights[pair.index_of(Simplex::of({3, 4, 5}))] = 3.0;
    WeightFunction mp = weight_from_top(pair, weights);
    CHECK(mp.at(0, pair.index_of(Simplex::of({0}))) == doctest::Approx(2.0));
    CHECK(mp.at(0, pair.index_of(Simplex::of({4}))) == doctest::Approx(6.0));

    SimplicialComplex tetra = tetrahedron_boundary();
    std::vector<double> ones(4, 1.0);
    WeightFunction ma = weight_from_top(tetra, ones);
    WeightFunction mb = homogeneous_weight(tetra);
    for (int k = -1; k <= 2; ++k)
        for (int i = 0; i < tetra.count(k); ++i)
            CHECK(ma.at(k, i) == doctest::Approx(mb.at(k, i)));

    std::vector<double> bad{1.0, 0.0, 1.0, 1.0};
    CHECK_THROWS(weight_from_top(tetra, bad));
}

TEST_CASE("total weight ratio identity") {
    SimplicialComplex tri = single_triangle();
    WeightFunction m = homogeneous_weight(tri);
    CHECK(total_weight(tri, m, 0) == doctest::Approx(6.0));
    CHECK(total_weight(tri, m, 0) == doctest::Approx(6.0 * total_weight(tri, m, 2)));

    SimplicialComplex tetra = tetrahedron_boundary();
    WeightFunction mt = homogeneous_weight(tetra);
    CHECK(total_weight(tetra, mt, 0) == doctest::Approx(24.0));
    CHECK(total_weight(tetra, mt, 2) == doctest::Approx(4.0));

    std::vector<int> one_vertex{tri.index_of(Simplex::of({0}))};
    CHECK(weight_of_set(tri, m, 0, one_vertex) == doctest::Approx(2.0));
    CHECK(weight_of_set(tri, m, 0, std::vector<int>{}) == doctest::Approx(0.0));
}

TEST_CASE("weight identities hold on the standard pool") {
    for (const auto& entry : standard_pool()) {
        CAPTURE(entry.name);
        const SimplicialComplex& X = entry.complex;
        const WeightFunction& m = entry.weights;
        int n = X.dimension();

        CHECK(balance_residual(X, m) < 1e-12);

        // 1/(n-k)! m(tau) = sum of the top cofaces' weights over tau.
        for (int k = -1; k <= n; ++k) {
            for (int i = 0; i < X.count(k); ++i) {
                const Simplex& tau = X.simplex(k, i);
                double sum = 0;
                for (const Simplex& top : X.simplices(n))
                    if (top.contains(tau))
                        sum += m.at(n, X.index_of(top));
                CHECK(m.at(k, i) / factorial(n - k) == doctest::Approx(sum).epsilon(1e-10));
            }
        }

        // 1/(l-k)! m(tau) = sum over the l-cofaces, for every k < l.
        for (int k = -1; k <= n; ++k)
            for (int l = k + 1; l <= n; ++l)
                for (int i = 0; i < X.count(k); ++i) {
                    const Simplex& tau = X.simplex(k, i);
                    double sum = 0;
                    for (const Simplex& sig : X.simplices(l))
                        if (sig.contains(tau))
                            sum += m.at(l, X.index_of(sig));
                    CHECK(m.at(k, i) / factorial(l - k) ==
                          doctest::Approx(sum).epsilon(1e-10));
                }

        // m(X(k)) = (l+1)!/(k+1)! m(X(l)).
        for (int k = -1; k <= n; ++k)
            for (int l = k + 1; l <= n; ++l)
                CHECK(total_weight(X, m, k) ==
                      doctest::Approx(factorial(l + 1) / factorial(k + 1) *
                                      total_weight(X, m, l))
                          .epsilon(1e-10));
    }
}

TEST_CASE("links of the single triangle and the tetrahedron boundary") {
    SimplicialComplex tri = single_triangle();
    WeightFunction m = homogeneous_weight(tri);

    Link l0 = build_link(tri, m, Simplex::of({0}));
    CHECK(l0.complex.dimension() == 1);
    CHECK(l0.complex.count(1) == 1);
    CHECK(l0.complex.contains(Simplex::of({1, 2})));
    CHECK(l0.weights.at(1, 0) == doctest::Approx(1.0)); // m({0,1,2})

    Link lempty = build_link(tri, m, Simplex());
    CHECK(lempty.complex.count(2) == 1);
    CHECK(lempty.complex.count(0) == 3);
    for (int k = -1; k <= 2; ++k)
        for (int i = 0; i < tri.count(k); ++i)
            CHECK(lempty.weights.at(k, i) == doctest::Approx(m.at(k, i)));

    SimplicialComplex tetra = tetrahedron_boundary();
    WeightFunction mt = homogeneous_weight(tetra);
    Link lv = build_link(tetra, mt, Simplex::of({0}));
    CHECK(lv.complex.dimension() == 1);
    CHECK(lv.complex.count(0) == 3);
    CHECK(lv.complex.count(1) == 3); // 3-cycle on {1,2,3}
    CHECK(balance_residual(lv.complex, lv.weights) < 1e-12);

    CHECK_THROWS(build_link(tri, m, Simplex::of({0, 1, 2}))); // top simplex
    CHECK_THROWS(build_link(tri, m, Simplex::of({7})));
}

TEST_CASE("link weights stay balanced across the pool") {
    for (const auto& entry : standard_pool()) {
        CAPTURE(entry.name);
        const SimplicialComplex& X = entry.complex;
        for (int k = -1; k <= X.dimension() - 1; ++k)
            for (const Simplex& tau : X.simplices(k)) {
                Link link = build_link(X, entry.weights, tau);
                CHECK(balance_residual(link.complex, link.weights) < 1e-12);
            }
    }
}

TEST_CASE("simplices_spanning enumerates transversal simplices") {
    SimplicialComplex tri = single_triangle();
    auto edges = simplices_spanning(tri, {{0}, {1}});
    REQUIRE(edges.size() == 1);
    CHECK(tri.simplex(1, edges[0]) == Simplex::of({0, 1}));

    auto tris = simplices_spanning(tri, {{0}, {1}, {2}});
    REQUIRE(tris.size() == 1);

    SimplicialComplex tetra = tetrahedron_boundary();
    auto spanning = simplices_spanning(tetra, {{0, 1}, {2}, {3}});
    REQUIRE(spanning.size() == 2);
    CHECK(tetra.simplex(2, spanning[0]) == Simplex::of({0, 2, 3}));
    CHECK(tetra.simplex(2, spanning[1]) == Simplex::of({1, 2, 3}));

    CHECK_THROWS(simplices_spanning(tetra, {{0, 1}, {1, 2}}));
}

TEST_CASE("detect_partite recovers sides and rejects odd structure") {
    std::vector<int> sides{2, 2, 2};
    SimplicialComplex cp = complete_partite(sides);
    auto ps = detect_partite(cp);
    REQUIRE(ps.has_value());
    REQUIRE(ps->side_count() == 3);
    // Sides recovered up to relabeling; vertex 0 and 1 share a side, etc.
    for (int v = 0; v < 6; v += 2)
        CHECK(ps->side_of.at(v) == ps->side_of.at(v + 1));

    auto tri_ps = detect_partite(single_triangle());
    REQUIRE(tri_ps.has_value());
    for (const auto& side : tri_ps->sides)
        CHECK(side.size() == 1);

    CHECK_FALSE(detect_partite(tetrahedron_boundary()).has_value());

    SimplicialComplex disconnected = build_complex({{0, 1, 2}, {3, 4, 5}});
    CHECK_THROWS(detect_partite(disconnected));
}

TEST_CASE("check_regularity reports K and per-side constants") {
    SimplicialComplex tetra = tetrahedron_boundary();
    WeightFunction mt = homogeneous_weight(tetra);
    Regularity r = check_regularity(tetra, mt);
    REQUIRE(r.simplex_count.has_value());
    CHECK(*r.simplex_count == 3);

    std::vector<int> sides{2, 2, 2};
    SimplicialComplex cp = complete_partite(sides);
    WeightFunction mc = homogeneous_weight(cp);
    auto ps = detect_partite(cp);
    Regularity rp = check_regularity(cp, mc, &*ps);
    REQUIRE(rp.per_side.has_value());
    for (long long k : *rp.per_side)
        CHECK(k == 4);

    SimplicialComplex two = two_triangles_shared_edge();
    WeightFunction m2 = homogeneous_weight(two);
    Regularity r2 = check_regularity(two, m2);
    CHECK_FALSE(r2.simplex_count.has_value());
}

TEST_CASE("partite weight identities") {
    // Side-restricted coface sums (m(tau) or m(tau)/(n-k)) and
    // m(S_i) = m(X(0))/(n+1).
    std::vector<int> sizes{2, 3, 2};
    SimplicialComplex X = complete_partite(sizes);
    WeightFunction m = homogeneous_weight(X);
    auto ps = detect_partite(X);
    REQUIRE(ps.has_value());
    int n = X.dimension();

    for (int i = 0; i < ps->side_count(); ++i)
        CHECK(weight_of_vertices(X, m, ps->sides[i]) ==
              doctest::Approx(total_weight(X, m, 0) / (n + 1)).epsilon(1e-12));

    for (int k = -1; k <= n - 1; ++k)
        for (int ti = 0; ti < X.count(k); ++ti) {
            const Simplex& tau = X.simplex(k, ti);
            for (int i = 0; i < ps->side_count(); ++i) {
                double sum = 0;
                for (int ci : X.cofaces(k, ti)) {
                    const Simplex& sigma = X.simplex(k + 1, ci);
                    bool touches = false;
                    for (int v : sigma.vertices())
                        if (ps->side_of.at(v) == i)
                            touches = true;
                    if (touches)
                        sum += m.at(k + 1, ci);
                }
                bool tau_touches = false;
                for (int v : tau.vertices())
                    if (ps->side_of.at(v) == i)
                        tau_touches = true;
                double expected = tau_touches ? m.at(k, ti) : m.at(k, ti) / (n - k);
                CHECK(sum == doctest::Approx(expected).epsilon(1e-12));
            }
        }
}

TEST_CASE("n = 0 complexes are accepted by the core") {
    SimplicialComplex X = build_complex({{0}, {1}, {2}});
    CHECK(X.dimension() == 0);
    CHECK(X.count(0) == 3);
    WeightFunction m = homogeneous_weight(X);
    CHECK(m.at(-1, 0) == doctest::Approx(3.0));
}
