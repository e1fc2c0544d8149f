// Command-line front door: generation, spectra, identity suites, mixing,
// descent and overlap runs on complex files.
//
// Exit codes: 0 all requested checks pass, 1 some assertion failed,
// 2 usage or input errors.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hdx/garland.hpp"
#include "hdx/generators.hpp"
#include "hdx/io.hpp"
#include "hdx/mixing.hpp"
#include "hdx/overlap.hpp"
#include "hdx/rng.hpp"
#include "hdx/spectral.hpp"

namespace {

struct Output {
    bool machine = false;
    std::vector<std::pair<std::string, std::string>> kv;

    void put(const std::string& key, const std::string& value) { kv.emplace_back(key, value); }
    void put(const std::string& key, double value) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.12g", value);
        kv.emplace_back(key, buf);
    }
    void put(const std::string& key, bool value) { kv.emplace_back(key, value ? "true" : "false"); }
    void put(const std::string& key, long long value) { kv.emplace_back(key, std::to_string(value)); }
    void put(const std::string& key, int value) { kv.emplace_back(key, std::to_string(value)); }

    void human(const std::string& line) {
        if (!machine)
            std::cout << line << "\n";
    }

    // Machine mode: one KEY=VALUE line per result, sorted by key so runs
    // with identical inputs are byte-identical.
    void flush() {
        if (!machine)
            return;
        std::stable_sort(kv.begin(), kv.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [k, v] : kv)
            std::cout << k << "=" << v << "\n";
    }
};

std::string tag(int i, const char* prefix) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%s%03d", prefix, i);
    return buf;
}

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

struct ToleranceOptions {
    double exact = 1e-10; // operator/scalar identities
    double loose = 1e-9;  // randomized residuals and inequality slack
};

std::vector<std::vector<int>> random_disjoint_sets(const hdx::SimplicialComplex& X,
                                                   hdx::Rng& rng) {
    int n = X.dimension();
    std::vector<std::vector<int>> sets(n + 1);
    for (int v : X.vertex_ids()) {
        int pick = static_cast<int>(rng.below(n + 2));
        if (pick <= n)
            sets[pick].push_back(v);
    }
    return sets;
}

std::vector<std::vector<int>> random_side_subsets(const hdx::PartiteStructure& ps,
                                                  hdx::Rng& rng) {
    std::vector<std::vector<int>> sets(ps.side_count());
    for (int i = 0; i < ps.side_count(); ++i)
        for (int v : ps.sides[i])
            if (rng.uniform() < 0.5)
                sets[i].push_back(v);
    return sets;
}

int run_generate(const std::string& family, int N, int n, const std::vector<int>& sides,
                 double p, std::uint64_t seed, int max_retries, const std::string& out_path) {
    hdx::SimplicialComplex X;
    if (family == "complete") {
        X = hdx::complete_complex(N, n);
    } else if (family == "complete-partite") {
        if (sides.empty())
            throw CLI::ValidationError("--sides is required for complete-partite");
        X = hdx::complete_partite(sides);
    } else if (family == "single-simplex") {
        X = hdx::complete_complex(n + 1, n);
    } else if (family == "random") {
        X = hdx::random_pure_complex(N, n, p, seed, max_retries);
    } else {
        throw CLI::ValidationError("unknown family " + family);
    }

    if (out_path.empty()) {
        hdx::write_complex_file(std::cout, X);
    } else {
        std::ofstream out(out_path);
        if (!out)
            throw std::runtime_error("cannot write " + out_path);
        hdx::write_complex_file(out, X);
    }
    return 0;
}

int run_spectra(const std::string& complex_path, bool dump_operators, Output& out) {
    hdx::ComplexFile file = hdx::read_complex_file(complex_path);
    hdx::SimplicialComplex X = file.build();
    hdx::WeightFunction m = file.weights(X);
    hdx::SpectralReport report = hdx::link_spectral_report(X, m);

    for (std::size_t i = 0; i < report.links.size(); ++i) {
        const hdx::LinkSpectrum& link = report.links[i];
        std::string base = tag(static_cast<int>(i), "LINK");
        if (!link.nontrivial.empty()) {
            out.put(base + "_MIN", link.nontrivial.front());
            out.put(base + "_MAX", link.nontrivial.back());
        }
        out.human("link of " + hdx::to_string(link.tau) + " (k=" + std::to_string(link.k) +
                  ", dim " + std::to_string(report.n - link.k) + "): nontrivial in [" +
                  (link.nontrivial.empty() ? "-" : format_double(link.nontrivial.front())) + ", " +
                  (link.nontrivial.empty() ? "-" : format_double(link.nontrivial.back())) + "]" +
                  (link.partite ? " (partite)" : ""));
        if (link.partite && !link.partite_nontrivial.empty()) {
            out.put(base + "_PARTITE_MIN", link.partite_nontrivial.front());
            out.put(base + "_PARTITE_MAX", link.partite_nontrivial.back());
        }
    }
    for (int k = 0; k < report.n; ++k) {
        out.put("MU_" + std::to_string(k), report.mu[k]);
        out.put("NU_" + std::to_string(k), report.nu[k]);
        out.human("mu_" + std::to_string(k) + " = " + format_double(report.mu[k]) + ", nu_" +
                  std::to_string(k) + " = " + format_double(report.nu[k]));
    }
    out.put("LAMBDA_TWO_SIDED", report.lambda_two_sided());
    out.put("LAMBDA_ONE_SIDED", report.lambda_one_sided());
    out.human("lambda (two-sided) = " + format_double(report.lambda_two_sided()));
    out.human("lambda (one-sided) = " + format_double(report.lambda_one_sided()));

    if (dump_operators && !out.machine) {
        for (int k = 0; k <= X.dimension() - 1; ++k) {
            std::cout << "M+_" << k << " =\n" << hdx::upper_walk(X, m, k).matrix << "\n";
            std::cout << "(M')+_" << k << " =\n"
                      << hdx::nonlazy_upper_walk(X, m, k).matrix << "\n";
        }
        for (int k = 0; k <= X.dimension(); ++k)
            std::cout << "M-_" << k << " =\n" << hdx::lower_walk(X, m, k).matrix << "\n";
    }
    return 0;
}

int run_verify(const std::string& complex_path, const std::string& suite, int level, int trials,
               std::uint64_t seed, const std::string& sets_path, const ToleranceOptions& tol,
               Output& out) {
    hdx::ComplexFile file = hdx::read_complex_file(complex_path);
    hdx::SimplicialComplex X = file.build();
    hdx::WeightFunction m = file.weights(X);
    int n = X.dimension();
    bool all_ok = true;

    auto note = [&](const std::string& key, double residual, double bound) {
        bool ok = residual <= bound;
        all_ok = all_ok && ok;
        out.put(key, residual);
        out.human((ok ? "  ok   " : "  FAIL ") + key + " residual " + format_double(residual));
        return ok;
    };

    if (suite == "weights" || suite == "all") {
        out.human("[weights]");
        note("BALANCE_RESIDUAL", hdx::balance_residual(X, m), 1e-12);
        double worst_ratio = 0;
        for (int k = -1; k <= n; ++k)
            for (int l = k + 1; l <= n; ++l) {
                double lhs = hdx::total_weight(X, m, k);
                double factor = 1;
                for (int i = k + 2; i <= l + 1; ++i)
                    factor *= i;
                double rhs = factor * hdx::total_weight(X, m, l);
                worst_ratio = std::max(worst_ratio,
                                       std::abs(lhs - rhs) / (1 + std::abs(lhs) + std::abs(rhs)));
            }
        note("LEVEL_RATIO_RESIDUAL", worst_ratio, tol.exact);
    }

    if (suite == "garland" || suite == "all") {
        out.human("[garland]");
        hdx::SpectralReport spectra = hdx::link_spectral_report(X, m);
        std::optional<hdx::PartiteStructure> ps;
        try {
            ps = hdx::detect_partite(X);
        } catch (const std::exception&) {
            ps.reset();
        }
        for (int k = 0; k <= n; ++k) {
            if (level >= 0 && k != level)
                continue;
            hdx::IdentityReport loc = hdx::verify_localization_identities(X, m, k, trials, seed);
            for (const auto& line : loc.lines)
                note("K" + std::to_string(k) + "_" + line.name, line.max_residual, tol.loose);
            if (k <= n - 1) {
                hdx::IdentityReport dec =
                    hdx::verify_garland_decomposition(X, m, k, trials, seed);
                note("K" + std::to_string(k) + "_garland_decomposition",
                     dec.lines[0].max_residual, tol.loose);
                hdx::BoundReport bound =
                    hdx::verify_orthogonal_bound(X, m, spectra, k, trials, seed);
                note("K" + std::to_string(k) + "_orthogonal_bound_violation",
                     std::max(bound.max_violation, 0.0), tol.loose);
                if (ps && n >= 1) {
                    // Adjacent side windows A = {0..k}, B = {1..k+1} exercise
                    // both the inequality and the in-proof equality.
                    std::vector<int> A, B;
                    for (int i = 0; i <= k; ++i)
                        A.push_back(i);
                    for (int i = 1; i <= k + 1; ++i)
                        B.push_back(i);
                    hdx::PartiteBoundReport pb =
                        hdx::verify_partite_bound(X, m, *ps, spectra, k, A, B, trials, seed);
                    note("K" + std::to_string(k) + "_partite_bound_violation",
                         std::max(pb.max_violation, 0.0), tol.loose);
                }
            }
        }
    }

    if (suite == "exchange" || suite == "all") {
        out.human("[exchange]");
        std::vector<std::vector<std::vector<int>>> families;
        if (!sets_path.empty()) {
            families.push_back(hdx::read_vertex_sets(sets_path));
        } else {
            hdx::Rng rng(seed);
            for (int i = 0; i < std::max(1, trials / 10); ++i)
                families.push_back(random_disjoint_sets(X, rng));
        }
        for (std::size_t f = 0; f < families.size(); ++f) {
            for (int k = 0; k <= n - 1; ++k) {
                if (level >= 0 && k != level)
                    continue;
                hdx::ExchangeReport report = hdx::verify_exchange_lemmas(X, m, families[f], k);
                for (const auto& line : report.lines)
                    if (line.applicable)
                        note(tag(static_cast<int>(f), "FAM") + "_K" + std::to_string(k) + "_" +
                                 line.name,
                             line.residual, tol.exact);
            }
            double bottom = hdx::bottom_product_value(X, m, families[f]);
            out.put(tag(static_cast<int>(f), "FAM") + "_BOTTOM", bottom);
        }
    }

    out.put("ALL_OK", all_ok);
    out.human(all_ok ? "verify: all identities hold" : "verify: FAILURES above");
    return all_ok ? 0 : 1;
}

int run_mixing(const std::string& complex_path, const std::string& sets_path,
               std::optional<double> lambda, bool partite, int seeds, std::uint64_t seed,
               const ToleranceOptions& tol, Output& out) {
    hdx::ComplexFile file = hdx::read_complex_file(complex_path);
    hdx::SimplicialComplex X = file.build();
    hdx::WeightFunction m = file.weights(X);
    hdx::SpectralReport spectra = hdx::link_spectral_report(X, m);

    std::optional<hdx::PartiteStructure> ps;
    if (partite) {
        ps = hdx::detect_partite(X);
        if (!ps)
            throw std::runtime_error("--partite: the complex is not partite");
    }

    std::vector<std::vector<std::vector<int>>> families;
    if (!sets_path.empty())
        families.push_back(hdx::read_vertex_sets(sets_path));
    hdx::Rng rng(seed);
    for (int i = 0; i < seeds; ++i)
        families.push_back(ps ? random_side_subsets(*ps, rng) : random_disjoint_sets(X, rng));
    if (families.empty())
        throw CLI::ValidationError("mixing needs --sets or --seeds");

    bool all_ok = true;
    for (std::size_t f = 0; f < families.size(); ++f) {
        hdx::MixingReport report =
            ps ? hdx::verify_partite_mixing(X, m, *ps, spectra, families[f], lambda)
               : hdx::verify_mixing(X, m, spectra, families[f], lambda);
        bool holds = report.lhs <= report.rhs + tol.loose;
        bool ok = holds && report.telescoping_residual <= tol.loose &&
                  report.enumeration_residual <= tol.exact;
        all_ok = all_ok && ok;
        std::string base =
            families.size() == 1 ? std::string() : tag(static_cast<int>(f), "FAM") + "_";
        out.put(base + "LHS", report.lhs);
        out.put(base + "RHS", report.rhs);
        out.put(base + "HOLDS", holds);
        out.put(base + "LAMBDA", report.lambda);
        out.put(base + "HYPOTHESIS_VERIFIED", report.hypothesis_verified);
        out.put(base + "TELESCOPING_RESIDUAL", report.telescoping_residual);
        out.human("family " + std::to_string(f) + ": |lhs| " + format_double(report.lhs) +
                  " <= " + format_double(report.rhs) + (holds ? "  ok" : "  VIOLATED") +
                  (report.hypothesis_verified ? "" : "  (hypothesis unverified)"));
    }
    out.put("ALL_HOLD", all_ok);
    return all_ok ? 0 : 1;
}

int run_descent(const std::string& complex_path, const ToleranceOptions& tol, Output& out) {
    hdx::ComplexFile file = hdx::read_complex_file(complex_path);
    hdx::SimplicialComplex X = file.build();
    hdx::WeightFunction m = file.weights(X);
    hdx::SpectralReport spectra = hdx::link_spectral_report(X, m);
    hdx::DescentReport report = hdx::verify_descent(spectra);

    bool all_ok = true;
    for (const hdx::DescentStep& step : report.steps) {
        std::string base = "K" + std::to_string(step.k);
        out.put(base + "_MU", step.mu_measured);
        out.put(base + "_NU", step.nu_measured);
        bool mu_ok = true;
        if (step.mu_limit) {
            mu_ok = step.mu_measured <= *step.mu_limit + tol.loose;
            out.put(base + "_MU_LIMIT", *step.mu_limit);
        } else {
            out.put(base + "_MU_LIMIT", std::string("vacuous"));
        }
        bool nu_ok = step.nu_measured >= *step.nu_limit - tol.loose;
        out.put(base + "_NU_LIMIT", *step.nu_limit);
        out.put(base + "_OK", mu_ok && nu_ok);
        all_ok = all_ok && mu_ok && nu_ok;
        out.human("k=" + std::to_string(step.k) + ": mu " + format_double(step.mu_measured) +
                  (step.mu_limit ? " <= " + format_double(*step.mu_limit) : " (vacuous)") +
                  ", nu " + format_double(step.nu_measured) + " >= " +
                  format_double(*step.nu_limit) + ((mu_ok && nu_ok) ? "  ok" : "  VIOLATED"));
    }
    out.put("ALL_OK", all_ok);
    return all_ok ? 0 : 1;
}

int run_overlap(const std::string& complex_path, const std::string& points_path,
                const std::string& method, int samples, std::uint64_t seed, double pach,
                std::optional<double> lambda, const std::string& variant, bool assert_bound,
                Output& out) {
    hdx::ComplexFile file = hdx::read_complex_file(complex_path);
    hdx::SimplicialComplex X = file.build();
    if (X.dimension() < 1)
        throw std::runtime_error("overlap needs dimension >= 1");
    hdx::PointMap points = hdx::read_point_map(points_path);

    hdx::OverlapReport report;
    if (method == "exact2d")
        report = hdx::overlap_exact_2d(X, points);
    else if (method == "sample")
        report = hdx::overlap_sampled(X, points, samples, seed);
    else
        throw CLI::ValidationError("unknown method " + method);

    out.put("DEPTH", report.depth);
    out.put("OVERLAP", report.overlap);
    out.put("METHOD", report.method);
    out.put("DEGENERATE", report.degenerate_flagged);
    std::string witness;
    for (int i = 0; i < report.witness.size(); ++i)
        witness += (i ? " " : "") + format_double(report.witness[i]);
    out.put("WITNESS", witness);
    out.human("overlap = " + format_double(report.overlap) + " (depth " +
              std::to_string(report.depth) + " of " + std::to_string(X.count(X.dimension())) +
              ", method " + report.method + ")");

    int exit_code = 0;
    if (pach > 0) {
        hdx::WeightFunction m = file.weights(X);
        double used_lambda;
        bool is_partite;
        if (variant == "partite")
            is_partite = true;
        else if (variant == "nonpartite")
            is_partite = false;
        else
            is_partite = hdx::detect_partite(X).has_value();
        if (lambda) {
            used_lambda = *lambda;
        } else {
            hdx::SpectralReport spectra = hdx::link_spectral_report(X, m);
            used_lambda = is_partite ? std::max(0.0, spectra.lambda_one_sided())
                                     : spectra.lambda_two_sided();
        }
        double bound = hdx::overlap_bound(
            used_lambda, X.dimension(), pach,
            is_partite ? hdx::OverlapVariant::Partite : hdx::OverlapVariant::NonPartite);
        report.bound = bound;
        out.put("BOUND", bound);
        out.put("BOUND_LAMBDA", used_lambda);
        out.put("BOUND_VARIANT", std::string(is_partite ? "partite" : "nonpartite"));
        out.human("theoretical bound " + format_double(bound) + " (lambda " +
                  format_double(used_lambda) + ")");
        if (bound > 0) {
            bool bound_holds = report.overlap >= bound - 1e-12;
            out.put("BOUND_HOLDS", bound_holds);
            if (assert_bound && !bound_holds)
                exit_code = 1;
        }
    }
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted simplicial complexes: walks, mixing and overlap checks"};
    app.require_subcommand(1);

    Output out;
    ToleranceOptions tol;
    double tolerance_override = 0;
    app.add_flag("--machine", out.machine, "emit sorted KEY=VALUE lines only");
    app.add_option("--tolerance", tolerance_override,
                   "override the default 1e-9/1e-10 tolerance pair (sets the loose "
                   "tolerance; the exact one becomes a tenth of it)");

    // generate
    auto* gen = app.add_subcommand("generate", "emit a complex file for one of the families");
    std::string family = "complete";
    int N = 4, n = 2, max_retries = 100;
    std::vector<int> sides;
    double p = 0.5;
    std::uint64_t seed = 1;
    std::string out_path;
    gen->add_option("--family", family, "complete | complete-partite | single-simplex | random");
    gen->add_option("--N", N, "number of vertices");
    gen->add_option("--n", n, "dimension");
    gen->add_option("--sides", sides, "side sizes for complete-partite")->delimiter(',');
    gen->add_option("--p", p, "keep probability for random");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--max-retries", max_retries, "connectivity retries for random");
    gen->add_option("--out", out_path, "output file (default stdout)");

    // spectra
    auto* spec = app.add_subcommand("spectra", "link spectra, mu/nu and lambda extraction");
    std::string spectra_complex;
    bool dump_operators = false;
    spec->add_option("--complex", spectra_complex, "complex file")->required();
    spec->add_flag("--dump-operators", dump_operators, "print the walk matrices");

    // verify
    auto* ver = app.add_subcommand("verify", "identity suites (weights, garland, exchange)");
    std::string verify_complex, verify_sets, suite = "all";
    int level = -1, trials = 100;
    std::uint64_t verify_seed = 1;
    ver->add_option("suite", suite, "all | weights | garland | exchange");
    ver->add_option("--complex", verify_complex, "complex file")->required();
    ver->add_option("--level", level, "restrict to one cochain level");
    ver->add_option("--trials", trials, "random cochain pairs per identity");
    ver->add_option("--seed", verify_seed, "random seed");
    ver->add_option("--sets", verify_sets, "vertex-set file for the exchange suite");

    // mixing
    auto* mix = app.add_subcommand("mixing", "mixing inequality on set families");
    std::string mixing_complex, mixing_sets;
    double lambda_flag = -1;
    bool partite = false;
    int mixing_seeds = 0;
    std::uint64_t mixing_seed = 1;
    mix->add_option("--complex", mixing_complex, "complex file")->required();
    mix->add_option("--sets", mixing_sets, "vertex-set file (n+1 lines)");
    mix->add_option("--lambda", lambda_flag, "override the measured lambda");
    mix->add_flag("--partite", partite, "use the partite mixing theorem");
    mix->add_option("--seeds", mixing_seeds, "number of random set families");
    mix->add_option("--seed", mixing_seed, "random seed");

    // descent
    auto* des = app.add_subcommand("descent", "spectral descent chain on measured mu/nu");
    std::string descent_complex;
    des->add_option("--complex", descent_complex, "complex file")->required();

    // overlap
    auto* ove = app.add_subcommand("overlap", "point-depth overlap of an embedded complex");
    std::string overlap_complex, points_path, method = "exact2d", variant = "auto";
    int samples = 10000;
    std::uint64_t overlap_seed = 1;
    double pach = 0;
    double lambda_overlap = -1;
    bool assert_bound = false;
    ove->add_option("--complex", overlap_complex, "complex file")->required();
    ove->add_option("--points", points_path, "point map file")->required();
    ove->add_option("--method", method, "exact2d | sample");
    ove->add_option("--samples", samples, "sample count for --method sample");
    ove->add_option("--seed", overlap_seed, "random seed");
    ove->add_option("--pach", pach, "Pach selection constant P_n (enables the bound)");
    ove->add_option("--lambda", lambda_overlap, "lambda for the bound (default: measured)");
    ove->add_option("--variant", variant, "auto | partite | nonpartite");
    ove->add_flag("--assert-bound", assert_bound, "exit 1 when overlap < bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    if (tolerance_override > 0) {
        tol.loose = tolerance_override;
        tol.exact = tolerance_override / 10;
    }

    int code = 0;
    try {
        if (*gen)
            code = run_generate(family, N, n, sides, p, seed, max_retries, out_path);
        else if (*spec)
            code = run_spectra(spectra_complex, dump_operators, out);
        else if (*ver)
            code = run_verify(verify_complex, suite, level, trials, verify_seed, verify_sets,
                              tol, out);
        else if (*mix)
            code = run_mixing(mixing_complex, mixing_sets,
                              lambda_flag >= 0 ? std::optional<double>(lambda_flag) : std::nullopt,
                              partite, mixing_seeds, mixing_seed, tol, out);
        else if (*des)
            code = run_descent(descent_complex, tol, out);
        else if (*ove)
            code = run_overlap(overlap_complex, points_path, method, samples, overlap_seed, pach,
                               lambda_overlap >= 0 ? std::optional<double>(lambda_overlap)
                                                   : std::nullopt,
                               variant, assert_bound, out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    out.flush();
    return code;
}
