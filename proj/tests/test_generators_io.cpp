#include <doctest.h>

#include <sstream>

#include "hdx/generators.hpp"
#include "hdx/io.hpp"
#include "hdx/partite.hpp"
#include "test_helpers.hpp"

using namespace hdx;
using namespace hdx::testing;

TEST_CASE("complete complexes") {
    SimplicialComplex tri = complete_complex(3, 2);
    CHECK(tri.count(2) == 1);

    SimplicialComplex k4 = complete_complex(4, 2);
    CHECK(k4.count(2) == 4);
    Regularity r4 = check_regularity(k4, homogeneous_weight(k4));
    REQUIRE(r4.simplex_count.has_value());
    CHECK(*r4.simplex_count == 3);

    SimplicialComplex k6 = complete_complex(6, 2);
    CHECK(k6.count(2) == 20);
    Regularity r6 = check_regularity(k6, homogeneous_weight(k6));
    CHECK(*r6.simplex_count == 10);

    CHECK_THROWS(complete_complex(2, 2));
}

TEST_CASE("complete partite complexes") {
    std::vector<int> ones{1, 1, 1};
    CHECK(complete_partite(ones).count(2) == 1);

    std::vector<int> s222{2, 2, 2};
    SimplicialComplex X = complete_partite(s222);
    CHECK(X.count(2) == 8);
    auto ps = detect_partite(X);
    REQUIRE(ps.has_value());
    Regularity r = check_regularity(X, homogeneous_weight(X), &*ps);
    REQUIRE(r.per_side.has_value());
    for (long long k : *r.per_side)
        CHECK(k == 4);

    std::vector<int> s22{2, 2};
    SimplicialComplex k22 = complete_partite(s22);
    CHECK(k22.dimension() == 1);
    CHECK(k22.count(1) == 4);
}

TEST_CASE("random pure complexes satisfy the standing assumptions") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        SimplicialComplex X = random_pure_complex(8, 2, 0.72, seed);
        CHECK(X.dimension() == 2);
        CHECK(all_links_connected(X));
        CHECK(balance_residual(X, homogeneous_weight(X)) < 1e-12);
    }
    // p = 1 keeps everything.
    SimplicialComplex full = random_pure_complex(6, 2, 1.0, 5);
    CHECK(full.count(2) == 20);
    // Tiny p exhausts the retries.
    CHECK_THROWS(random_pure_complex(8, 2, 1e-6, 1, 20));
    CHECK_THROWS(random_pure_complex(8, 2, 0.0, 1));
}

TEST_CASE("complex files round-trip") {
    SimplicialComplex X = complete_partite(std::vector<int>{2, 2});
    std::ostringstream out;
    write_complex_file(out, X);
    std::istringstream in(out.str());
    ComplexFile file = read_complex_file(in);
    CHECK(file.n == 1);
    CHECK(file.tops.size() == 4);
    SimplicialComplex Y = file.build();
    CHECK(Y.count(1) == X.count(1));
    CHECK_FALSE(file.any_weights);

    std::istringstream weighted("dim 2\n0 1 2 w 2.5\n1 2 3\n");
    ComplexFile wf = read_complex_file(weighted);
    CHECK(wf.any_weights);
    SimplicialComplex Z = wf.build();
    WeightFunction m = wf.weights(Z);
    CHECK(m.at(2, Z.index_of(Simplex::of({0, 1, 2}))) == doctest::Approx(2.5));
    CHECK(m.at(2, Z.index_of(Simplex::of({1, 2, 3}))) == doctest::Approx(1.0));
    CHECK(m.at(1, Z.index_of(Simplex::of({1, 2}))) == doctest::Approx(3.5));
}

TEST_CASE("complex file parse errors") {
    std::istringstream missing_header("0 1 2\n");
    CHECK_THROWS(read_complex_file(missing_header));
    std::istringstream wrong_arity("dim 2\n0 1\n");
    CHECK_THROWS(read_complex_file(wrong_arity));
    std::istringstream bad_id("dim 1\n0 x\n");
    CHECK_THROWS(read_complex_file(bad_id));
    std::istringstream bad_weight("dim 1\n0 1 w -3\n");
    CHECK_THROWS(read_complex_file(bad_weight));
    std::istringstream empty("");
    CHECK_THROWS(read_complex_file(empty));
}

TEST_CASE("vertex set files") {
    std::istringstream in("0 1 2\nempty\n3 4\n# comment\n\n5\n");
    auto sets = read_vertex_sets(in);
    REQUIRE(sets.size() == 4);
    CHECK(sets[0] == std::vector<int>{0, 1, 2});
    CHECK(sets[1].empty());
    CHECK(sets[2] == std::vector<int>{3, 4});
    CHECK(sets[3] == std::vector<int>{5});
}

TEST_CASE("point map files") {
    std::istringstream in("0 0.0 0.0\n1 1.0 0.0\n2 0.5 0.25\n");
    PointMap f = read_point_map(in);
    CHECK(f.dim == 2);
    CHECK(f.at(2).y() == doctest::Approx(0.25));

    std::istringstream mixed("0 0.0 0.0\n1 1.0\n");
    CHECK_THROWS(read_point_map(mixed));
    std::istringstream dup("0 0.0 0.0\n0 1.0 1.0\n");
    CHECK_THROWS(read_point_map(dup));
}
