// Acceptance suite: end-to-end checks of the library's headline guarantees
// on desk-scale complexes. Prints one PASS/FAIL line per criterion and
// exits nonzero when anything fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hdx/garland.hpp"
#include "hdx/generators.hpp"
#include "hdx/mixing.hpp"
#include "hdx/overlap.hpp"
#include "hdx/rng.hpp"
#include "hdx/spectral.hpp"

using namespace hdx;

namespace {

int failures = 0;

void report(int id, const std::string& title, bool passed, const std::string& detail = "") {
    std::printf("[%s] criterion %d: %s%s%s\n", passed ? "PASS" : "FAIL", id, title.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!passed)
        ++failures;
}

double factorial(int n) {
    double f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

struct Instance {
    std::string name;
    SimplicialComplex X;
    WeightFunction m;
};

std::vector<Instance> weight_pool() {
    std::vector<Instance> pool;
    auto add = [&](std::string name, SimplicialComplex X) {
        WeightFunction m = homogeneous_weight(X);
        pool.push_back({std::move(name), std::move(X), std::move(m)});
    };
    add("complete(6,2)", complete_complex(6, 2));
    std::vector<int> sides{2, 2, 2};
    add("partite(2,2,2)", complete_partite(sides));
    add("tetra-boundary", simplex_boundary(2));
    for (std::uint64_t seed = 1; seed <= 20; ++seed)
        add("random(seed=" + std::to_string(seed) + ")", random_pure_complex(8, 2, 0.72, seed));
    return pool;
}

std::vector<Instance> operator_pool() {
    std::vector<Instance> pool = weight_pool();
    auto add = [&](std::string name, SimplicialComplex X) {
        WeightFunction m = homogeneous_weight(X);
        pool.push_back({std::move(name), std::move(X), std::move(m)});
    };
    add("triangle", complete_complex(3, 2));
    add("complete(8,1)", complete_complex(8, 1));
    add("complete(6,3)", complete_complex(6, 3));
    return pool;
}

std::vector<std::vector<int>> random_disjoint_sets(const SimplicialComplex& X, Rng& rng) {
    int n = X.dimension();
    std::vector<std::vector<int>> sets(n + 1);
    for (int v : X.vertex_ids()) {
        int pick = static_cast<int>(rng.below(n + 2));
        if (pick <= n)
            sets[pick].push_back(v);
    }
    return sets;
}

// ---- criterion 1: weight identities -----------------------------------

void criterion_weights() {
    auto start = std::chrono::steady_clock::now();
    double worst = 0;
    std::string where;
    auto track = [&](double residual, const std::string& name) {
        if (residual > worst) {
            worst = residual;
            where = name;
        }
    };

    for (const Instance& inst : weight_pool()) {
        const SimplicialComplex& X = inst.X;
        const WeightFunction& m = inst.m;
        int n = X.dimension();
        track(balance_residual(X, m), inst.name + " balance");

        for (int k = -1; k <= n; ++k)
            for (int i = 0; i < X.count(k); ++i) {
                const Simplex& tau = X.simplex(k, i);
                double top_sum = 0;
                for (const Simplex& top : X.simplices(n))
                    if (top.contains(tau))
                        top_sum += m.at(n, X.index_of(top));
                double lhs = m.at(k, i) / factorial(n - k);
                track(std::abs(lhs - top_sum) / std::abs(lhs), inst.name + " top-coface sum");
            }

        for (int k = -1; k <= n; ++k)
            for (int l = k + 1; l <= n; ++l) {
                for (int i = 0; i < X.count(k); ++i) {
                    const Simplex& tau = X.simplex(k, i);
                    double sum = 0;
                    for (const Simplex& sig : X.simplices(l))
                        if (sig.contains(tau))
                            sum += m.at(l, X.index_of(sig));
                    double lhs = m.at(k, i) / factorial(l - k);
                    track(std::abs(lhs - sum) / std::abs(lhs), inst.name + " l-coface sum");
                }
                double lhs = total_weight(X, m, k);
                double rhs = factorial(l + 1) / factorial(k + 1) * total_weight(X, m, l);
                track(std::abs(lhs - rhs) / std::abs(lhs), inst.name + " level ratio");
            }
    }

    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = worst < 1e-10 && elapsed < 5.0;
    char detail[160];
    std::snprintf(detail, sizeof(detail), "max residual %.3g (%s), %.2fs", worst, where.c_str(),
                  elapsed);
    report(1, "weight identities on 23 complexes", ok, detail);
}

// ---- criterion 2: operator identities ----------------------------------

void criterion_operators() {
    double worst_identity = 0, worst_row = 0;
    for (const Instance& inst : operator_pool()) {
        const SimplicialComplex& X = inst.X;
        const WeightFunction& m = inst.m;
        int n = X.dimension();
        for (int k = 0; k <= n - 1; ++k) {
            LinearOperatorHandle up{k, k, true,
                                    codifferential_matrix(X, m, k).matrix *
                                        differential_matrix(X, k).matrix};
            LinearOperatorHandle down{k, k, true,
                                      differential_matrix(X, k - 1).matrix *
                                          codifferential_matrix(X, m, k - 1).matrix};
            worst_identity = std::max(
                worst_identity,
                operator_deviation(up.matrix, ((k + 2) * upper_walk(X, m, k).matrix).eval()));
            worst_identity = std::max(
                worst_identity,
                operator_deviation(down.matrix, ((k + 1) * lower_walk(X, m, k).matrix).eval()));
        }
        for (int k = 0; k <= n; ++k) {
            std::vector<Eigen::MatrixXd> walks;
            if (k <= n - 1) {
                walks.push_back(upper_walk(X, m, k).matrix);
                walks.push_back(nonlazy_upper_walk(X, m, k).matrix);
            }
            walks.push_back(lower_walk(X, m, k).matrix);
            for (const auto& w : walks)
                for (Eigen::Index i = 0; i < w.rows(); ++i)
                    worst_row = std::max(worst_row, std::abs(w.row(i).sum() - 1.0));
        }
    }
    bool ok = worst_identity < 1e-10 && worst_row < 1e-12;
    char detail[120];
    std::snprintf(detail, sizeof(detail), "operator dev %.3g, row-sum dev %.3g", worst_identity,
                  worst_row);
    report(2, "d*d = (k+2)M+ and dd* = (k+1)M-, stochastic rows", ok, detail);
}

// ---- criterion 3: garland suite ----------------------------------------

void criterion_garland() {
    std::vector<Instance> pool;
    auto add = [&](std::string name, SimplicialComplex X) {
        WeightFunction m = homogeneous_weight(X);
        pool.push_back({std::move(name), std::move(X), std::move(m)});
    };
    add("triangle", complete_complex(3, 2));
    add("tetra-boundary", simplex_boundary(2));
    add("complete(6,2)", complete_complex(6, 2));
    std::vector<int> sides{2, 2, 2};
    add("partite(2,2,2)", complete_partite(sides));
    add("complete(5,3)", complete_complex(5, 3));
    add("random(8,2)", random_pure_complex(8, 2, 0.72, 3));
    add("random(7,3)", random_pure_complex(7, 3, 0.85, 5));

    double worst = 0;
    std::string where;
    for (const Instance& inst : pool) {
        int n = inst.X.dimension();
        for (int k = 0; k <= n; ++k) {
            IdentityReport loc =
                verify_localization_identities(inst.X, inst.m, k, 100, 1000 + k);
            for (const auto& line : loc.lines)
                if (line.max_residual > worst) {
                    worst = line.max_residual;
                    where = inst.name + " k=" + std::to_string(k) + " " + line.name;
                }
            if (k <= n - 1) {
                IdentityReport dec =
                    verify_garland_decomposition(inst.X, inst.m, k, 100, 2000 + k);
                if (dec.lines[0].max_residual > worst) {
                    worst = dec.lines[0].max_residual;
                    where = inst.name + " k=" + std::to_string(k) + " decomposition";
                }
            }
        }
    }
    bool ok = worst < 1e-9;
    char detail[160];
    std::snprintf(detail, sizeof(detail), "max residual %.3g (%s)", worst, where.c_str());
    report(3, "localization and d*d-dd* decomposition, 100 random pairs", ok, detail);
}

// ---- criterion 4: exchange and telescoping ------------------------------

void criterion_exchange() {
    double worst_exact = 0, worst_tele = 0;
    bool bottom_example_ok = true;

    SimplicialComplex tri = complete_complex(3, 2);
    WeightFunction mtri = homogeneous_weight(tri);
    double bottom = bottom_product_value(tri, mtri, {{0}, {1}, {2}});
    bottom_example_ok = std::abs(bottom - 2.0 / 9) < 1e-10;

    std::vector<Instance> pool;
    auto add = [&](std::string name, SimplicialComplex X) {
        WeightFunction m = homogeneous_weight(X);
        pool.push_back({std::move(name), std::move(X), std::move(m)});
    };
    add("triangle", complete_complex(3, 2));
    add("tetra-boundary", simplex_boundary(2));
    add("complete(6,2)", complete_complex(6, 2));
    std::vector<int> sides{2, 2, 2};
    add("partite(2,2,2)", complete_partite(sides));

    Rng rng(44);
    for (const Instance& inst : pool) {
        SpectralReport spectra = link_spectral_report(inst.X, inst.m);
        for (int rep = 0; rep < 10; ++rep) {
            auto parts = random_disjoint_sets(inst.X, rng);
            for (int k = 0; k <= inst.X.dimension() - 1; ++k) {
                ExchangeReport ex = verify_exchange_lemmas(inst.X, inst.m, parts, k);
                for (const auto& line : ex.lines)
                    if (line.applicable)
                        worst_exact = std::max(worst_exact, line.residual);
            }
            bottom_product_value(inst.X, inst.m, parts); // throws beyond 1e-10
            MixingReport mix = verify_mixing(inst.X, inst.m, spectra, parts);
            worst_tele = std::max(worst_tele, mix.telescoping_residual);
        }
    }
    bool ok = bottom_example_ok && worst_exact < 1e-10 && worst_tele < 1e-9;
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "bottom(triangle)=2/9 %s, exchange %.3g, telescoping %.3g",
                  bottom_example_ok ? "ok" : "WRONG", worst_exact, worst_tele);
    report(4, "restriction lemmas, bottom product, telescoping", ok, detail);
}

// ---- criterion 5: constants ---------------------------------------------

void criterion_constants() {
    bool ok = constant_C(1) == 1 && constant_C(2) == 5 && constant_C(3) == 20 &&
              constant_C_partite(1) == 2 && constant_C_partite(2) == 62;
    report(5, "C_n = 1, 5, 20 and partite 2, 62", ok);
}

// ---- criterion 6: non-partite mixing ------------------------------------

void criterion_mixing() {
    bool all_hold = true;
    double worst_slack = 0;
    Rng rng(777);
    for (int N : {4, 5, 6}) {
        SimplicialComplex X = complete_complex(N, 2);
        WeightFunction m = homogeneous_weight(X);
        SpectralReport spectra = link_spectral_report(X, m);
        for (int rep = 0; rep < 100; ++rep) {
            auto parts = random_disjoint_sets(X, rng);
            MixingReport report_ = verify_mixing(X, m, spectra, parts);
            all_hold = all_hold && report_.holds && report_.hypothesis_verified &&
                       report_.regular_form && report_.regular_form->holds;
            worst_slack = std::min(worst_slack, report_.slack);
        }
    }

    // n = 1 specialization: the classical expander mixing lemma on K_8.
    bool classical_ok = constant_C(1) == 1;
    SimplicialComplex K8 = complete_complex(8, 1);
    WeightFunction m8 = homogeneous_weight(K8);
    SpectralReport spectra8 = link_spectral_report(K8, m8);
    for (int rep = 0; rep < 100; ++rep) {
        auto parts = random_disjoint_sets(K8, rng);
        MixingReport r = verify_mixing(K8, m8, spectra8, parts);
        if (!r.regular_form) {
            classical_ok = false;
            continue;
        }
        double edges = static_cast<double>(simplices_spanning(K8, r.sets).size());
        double u0 = static_cast<double>(r.sets[0].size());
        double u1 = static_cast<double>(r.sets[1].size());
        double lhs = std::abs(edges - 7.0 / 8 * u0 * u1);
        double rhs = spectra8.lambda_two_sided() * 7.0 * std::sqrt(u0 * u1);
        classical_ok = classical_ok && r.holds && lhs <= rhs + 1e-9 &&
                       std::abs(r.regular_form->count_lhs - lhs) < 1e-9;
    }

    report(6, "mixing on complete(4..6,2) x100 and the n=1 classical form",
           all_hold && classical_ok);
}

// ---- criterion 7: partite exactness --------------------------------------

void criterion_partite_mixing() {
    bool ok = true;
    double worst_lambda = 0, worst_diff = 0;
    Rng rng(4242);
    for (int size : {2, 3}) {
        std::vector<int> sides(3, size);
        SimplicialComplex X = complete_partite(sides);
        WeightFunction m = homogeneous_weight(X);
        auto ps = detect_partite(X);
        if (!ps) {
            ok = false;
            continue;
        }
        SpectralReport spectra = link_spectral_report(X, m);
        worst_lambda = std::max(worst_lambda, std::abs(spectra.lambda_one_sided()));
        for (int rep = 0; rep < 200; ++rep) {
            std::vector<std::vector<int>> parts(ps->side_count());
            for (int i = 0; i < ps->side_count(); ++i)
                for (int v : ps->sides[i])
                    if (rng.uniform() < 0.5)
                        parts[i].push_back(v);
            MixingReport r = verify_partite_mixing(X, m, *ps, spectra, parts);
            worst_diff = std::max(worst_diff, r.lhs);
            ok = ok && r.ok;
        }
    }
    ok = ok && worst_lambda < 1e-9 && worst_diff < 1e-9;
    char detail[120];
    std::snprintf(detail, sizeof(detail), "lambda %.3g, max difference %.3g", worst_lambda,
                  worst_diff);
    report(7, "partite mixing collapses to equality at lambda = 0", ok, detail);
}

// ---- criterion 8: spectral descent ---------------------------------------

void criterion_descent() {
    bool ok = threshold_for_target(0.5, 2) == 1.0 / 3;
    for (const Instance& inst : operator_pool()) {
        if (inst.X.dimension() < 2)
            continue;
        DescentReport r = verify_descent(inst.X, inst.m);
        ok = ok && r.ok;
    }
    report(8, "mu_k <= mu_{k+1}/(1-mu_{k+1}) on all test complexes", ok);
}

// ---- criterion 9: overlap -------------------------------------------------

void criterion_overlap() {
    PointMap tri_map;
    tri_map.dim = 2;
    tri_map.coords[0] = Eigen::Vector2d(0, 0);
    tri_map.coords[1] = Eigen::Vector2d(1, 0);
    tri_map.coords[2] = Eigen::Vector2d(0, 1);
    SimplicialComplex tri = complete_complex(3, 2);
    OverlapReport single = overlap_exact_2d(tri, tri_map);
    bool single_ok = single.depth == 1 && single.overlap == 1.0;

    SimplicialComplex K4 = complete_complex(4, 2);
    PointMap quad;
    quad.dim = 2;
    quad.coords[0] = Eigen::Vector2d(0, 0);
    quad.coords[1] = Eigen::Vector2d(3, 0);
    quad.coords[2] = Eigen::Vector2d(4, 2);
    quad.coords[3] = Eigen::Vector2d(0, 1);
    OverlapReport four = overlap_exact_2d(K4, quad);
    bool four_ok = four.depth == 2 && std::abs(four.overlap - 0.5) < 1e-15;

    bool sample_ok = true;
    Rng rng(31);
    for (int instance = 0; instance < 50; ++instance) {
        SimplicialComplex X = (instance % 2 == 0)
                                  ? complete_complex(5, 2)
                                  : random_pure_complex(6, 2, 0.7, 100 + instance);
        PointMap f;
        f.dim = 2;
        for (int v : X.vertex_ids())
            f.coords[v] = Eigen::Vector2d(rng.uniform(), rng.uniform());
        OverlapReport exact = overlap_exact_2d(X, f);
        OverlapReport sampled = overlap_sampled(X, f, 10000, 500 + instance);
        sample_ok = sample_ok && sampled.depth <= exact.depth && sampled.depth >= 1;
    }

    // Affine invariance of the exact depth count.
    Eigen::Matrix2d A;
    A << 2.0, 0.3, -0.4, 1.5;
    Eigen::Vector2d b(0.7, -1.1);
    bool affine_ok = true;
    for (int instance = 0; instance < 5; ++instance) {
        SimplicialComplex X = complete_complex(5, 2);
        PointMap f;
        f.dim = 2;
        for (int v : X.vertex_ids())
            f.coords[v] = Eigen::Vector2d(rng.uniform(), rng.uniform());
        PointMap g;
        g.dim = 2;
        for (const auto& [id, point] : f.coords)
            g.coords[id] = A * Eigen::Vector2d(point) + b;
        affine_ok = affine_ok && overlap_exact_2d(X, f).depth == overlap_exact_2d(X, g).depth;
    }
    affine_ok = affine_ok && [&] {
        PointMap g;
        g.dim = 2;
        for (const auto& [id, point] : quad.coords)
            g.coords[id] = A * Eigen::Vector2d(point) + b;
        return overlap_exact_2d(K4, g).depth == four.depth;
    }();

    bool ok = single_ok && four_ok && sample_ok && affine_ok;
    char detail[160];
    std::snprintf(detail, sizeof(detail), "single %s, quad %s, sampled<=exact %s, affine %s",
                  single_ok ? "ok" : "FAIL", four_ok ? "ok" : "FAIL",
                  sample_ok ? "ok" : "FAIL", affine_ok ? "ok" : "FAIL");
    report(9, "planar overlap values, sampling bound, affine invariance", ok, detail);
}

// ---- criterion 10: partite spectrum structure ------------------------------

void criterion_partite_spectrum() {
    bool eig_ok = true, symmetry_ok = true;
    std::vector<std::vector<int>> families{{2, 2, 2}, {3, 3, 3}, {2, 2, 2, 2}};
    for (const auto& sides : families) {
        SimplicialComplex X = complete_partite(sides);
        WeightFunction m = homogeneous_weight(X);
        auto ps = detect_partite(X);
        if (!ps) {
            eig_ok = false;
            continue;
        }
        int n = X.dimension();
        LinearOperatorHandle walk = nonlazy_upper_walk(X, m, 0);
        for (int i = 0; i < ps->side_count(); ++i) {
            Eigen::VectorXd phi(X.count(0));
            for (int idx = 0; idx < X.count(0); ++idx)
                phi[idx] = (ps->side_of.at(X.simplex(0, idx).vertices()[0]) == i) ? n : -1.0;
            Eigen::VectorXd image = walk.matrix * phi;
            eig_ok = eig_ok && (image + phi / n).cwiseAbs().maxCoeff() < 1e-9;
        }

        SpectralReport spectra = link_spectral_report(X, m);
        for (const LinkSpectrum& link : spectra.links) {
            if (!link.partite || link.partite_nontrivial.empty())
                continue;
            int link_n = spectra.n - link.k;
            double lambda = link.partite_nontrivial.back();
            double kappa = link.partite_nontrivial.front();
            symmetry_ok = symmetry_ok && kappa >= -link_n * lambda - 1e-9 &&
                          kappa <= -lambda / link_n + 1e-9;
        }
    }
    report(10, "partite trivial eigenfunctions and spectrum symmetry", eig_ok && symmetry_ok);
}

} // namespace

int main() {
    auto start = std::chrono::steady_clock::now();
    criterion_weights();
    criterion_operators();
    criterion_garland();
    criterion_exchange();
    criterion_constants();
    criterion_mixing();
    criterion_partite_mixing();
    criterion_descent();
    criterion_overlap();
    criterion_partite_spectrum();
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d/10 criteria passed in %.2fs\n", 10 - failures, elapsed);
    return failures == 0 ? 0 : 1;
}
