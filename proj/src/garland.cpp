#include "hdx/garland.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hdx/operators.hpp"

namespace hdx {

namespace {

constexpr double kIdentityTol = 1e-9;

double rel_residual(double lhs, double rhs) {
    return std::abs(lhs - rhs) / (1.0 + std::abs(lhs) + std::abs(rhs));
}

void push_line(IdentityReport& report, const std::string& name, double residual) {
    report.lines.push_back({name, residual, residual <= kIdentityTol});
    report.ok = report.ok && report.lines.back().ok;
}

} // namespace

const IdentityReport::Line& IdentityReport::line(const std::string& name) const {
    for (const auto& l : lines)
        if (l.name == name)
            return l;
    throw std::out_of_range("no identity line named " + name);
}

IdentityReport verify_localization_identities(const SimplicialComplex& X,
                                              const WeightFunction& m, int k,
                                              int trials, std::uint64_t seed) {
    int n = X.dimension();
    if (k < 0 || k > n)
        throw std::invalid_argument("localization identities need 0 <= k <= n");

    // Links of all tau in X(k-1), shared across trials.
    std::vector<Link> links;
    for (const Simplex& tau : X.simplices(k - 1))
        links.push_back(build_link(X, m, tau));

    double res_inner = 0, res_codiff = 0, res_diff = 0;
    Rng rng = Rng(seed).split(0x10c);
    for (int t = 0; t < trials; ++t) {
        Cochain phi = random_cochain(X, k, rng);
        Cochain psi = random_cochain(X, k, rng);

        double sum_inner = 0, sum_codiff = 0, sum_diff = 0;
        for (const Link& link : links) {
            Cochain phi_tau = localize(link, phi);
            Cochain psi_tau = localize(link, psi);
            double ip = inner_product(link.complex, link.weights, phi_tau, psi_tau);
            sum_inner += ip;
            Cochain dstar_phi = codifferential(link.complex, link.weights, phi_tau);
            Cochain dstar_psi = codifferential(link.complex, link.weights, psi_tau);
            sum_codiff += inner_product(link.complex, link.weights, dstar_phi, dstar_psi);
            if (k < n) {
                Cochain d_phi = differential(link.complex, phi_tau);
                Cochain d_psi = differential(link.complex, psi_tau);
                sum_diff += inner_product(link.complex, link.weights, d_phi, d_psi) -
                            (static_cast<double>(k) / (k + 1)) * ip;
            }
        }

        res_inner = std::max(res_inner,
                             rel_residual((k + 1) * inner_product(X, m, phi, psi), sum_inner));

        Cochain dstar_phi = codifferential(X, m, phi);
        Cochain dstar_psi = codifferential(X, m, psi);
        res_codiff = std::max(
            res_codiff, rel_residual(inner_product(X, m, dstar_phi, dstar_psi), sum_codiff));

        if (k < n) {
            Cochain d_phi = differential(X, phi);
            Cochain d_psi = differential(X, psi);
            res_diff =
                std::max(res_diff, rel_residual(inner_product(X, m, d_phi, d_psi), sum_diff));
        }
    }

    IdentityReport report;
    push_line(report, "inner_product_localization", res_inner);
    push_line(report, "codifferential_localization", res_codiff);
    if (k < n)
        push_line(report, "differential_localization", res_diff);
    return report;
}

IdentityReport verify_garland_decomposition(const SimplicialComplex& X,
                                            const WeightFunction& m, int k,
                                            int trials, std::uint64_t seed) {
    int n = X.dimension();
    if (k < 0 || k > n - 1)
        throw std::invalid_argument("garland decomposition needs 0 <= k <= n-1");

    struct LinkOps {
        Link link;
        Eigen::MatrixXd walk_term; // (M')+_0 (I - M-_0) on the link
    };
    std::vector<LinkOps> links;
    for (const Simplex& tau : X.simplices(k - 1)) {
        Link link = build_link(X, m, tau);
        LinearOperatorHandle walk = nonlazy_upper_walk(link.complex, link.weights, 0);
        LinearOperatorHandle lower = lower_walk(link.complex, link.weights, 0);
        Eigen::MatrixXd term =
            walk.matrix *
            (Eigen::MatrixXd::Identity(lower.matrix.rows(), lower.matrix.cols()) - lower.matrix);
        links.push_back({std::move(link), std::move(term)});
    }

    double worst = 0;
    Rng rng = Rng(seed).split(0xdec0);
    for (int t = 0; t < trials; ++t) {
        Cochain phi = random_cochain(X, k, rng);
        Cochain psi = random_cochain(X, k, rng);

        Cochain up = codifferential(X, m, differential(X, phi));
        Cochain down = differential(X, codifferential(X, m, phi));
        Cochain diff{k, up.values - down.values};
        double lhs = inner_product(X, m, diff, psi);

        double rhs = inner_product(X, m, phi, psi);
        for (const LinkOps& entry : links) {
            Cochain phi_tau = localize(entry.link, phi);
            Cochain psi_tau = localize(entry.link, psi);
            Cochain mapped{0, entry.walk_term * phi_tau.values};
            rhs += inner_product(entry.link.complex, entry.link.weights, mapped, psi_tau);
        }
        worst = std::max(worst, rel_residual(lhs, rhs));
    }

    IdentityReport report;
    push_line(report, "garland_decomposition", worst);
    return report;
}

BoundReport verify_orthogonal_bound(const SimplicialComplex& X, const WeightFunction& m,
                                    const SpectralReport& spectra, int k,
                                    int trials, std::uint64_t seed) {
    int n = X.dimension();
    if (k < 0 || k > n - 1)
        throw std::invalid_argument("orthogonal bound needs 0 <= k <= n-1");

    BoundReport report;
    report.lambda = spectra.lambda_two_sided_at(k);
    report.trials = trials;

    Rng rng = Rng(seed).split(0x0b0d);
    for (int t = 0; t < trials; ++t) {
        Cochain phi = random_cochain(X, k, rng);
        Cochain psi = random_cochain(X, k, rng);
        // Gram-Schmidt in the weighted inner product.
        double scale = inner_product(X, m, psi, phi) / inner_product(X, m, phi, phi);
        psi.values -= scale * phi.values;

        Cochain up = codifferential(X, m, differential(X, phi));
        Cochain down = differential(X, codifferential(X, m, phi));
        Cochain diff{k, up.values - down.values};
        double lhs = std::abs(inner_product(X, m, diff, psi));
        double rhs = (k + 1) * report.lambda * norm(X, m, phi) * norm(X, m, psi);

        report.max_violation = std::max(report.max_violation, lhs - rhs);
        if (rhs > 0)
            report.max_ratio = std::max(report.max_ratio, lhs / rhs);
    }
    report.ok = report.max_violation <= kIdentityTol;
    return report;
}

PartiteBoundReport verify_partite_bound(const SimplicialComplex& X, const WeightFunction& m,
                                        const PartiteStructure& partite,
                                        const SpectralReport& spectra, int k,
                                        const std::vector<int>& A, const std::vector<int>& B,
                                        int trials, std::uint64_t seed) {
    int n = X.dimension();
    if (k < 0 || k > n - 1)
        throw std::invalid_argument("partite bound needs 0 <= k <= n-1");
    if (static_cast<int>(A.size()) != k + 1 || static_cast<int>(B.size()) != k + 1)
        throw std::invalid_argument("side index sets must have size k+1");
    if (A == B)
        throw std::invalid_argument("side index sets must differ");

    auto sides_subset = [&](const std::vector<int>& idx) {
        std::vector<std::vector<int>> sets;
        for (int i : idx) {
            if (i < 0 || i >= partite.side_count())
                throw std::invalid_argument("side index out of range");
            sets.push_back(partite.sides[i]);
        }
        return sets;
    };
    LinearOperatorHandle mask_A = set_projection(X, sides_subset(A));
    LinearOperatorHandle mask_B = set_projection(X, sides_subset(B));

    PartiteBoundReport report;
    report.lambda = spectra.lambda_one_sided_at(k);
    report.trials = trials;

    // tau with sides(tau) = A n B carry the exact identity inside the
    // lemma's proof; they exist only when |A n B| = k.
    std::vector<int> common;
    std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(common));
    std::vector<Link> eq_links;
    if (static_cast<int>(common.size()) == k) {
        if (k == 0) {
            eq_links.push_back(build_link(X, m, Simplex()));
        } else {
            for (int idx : simplices_spanning(X, sides_subset(common)))
                eq_links.push_back(build_link(X, m, X.simplex(k - 1, idx)));
        }
    }

    double coeff = static_cast<double>(n + 1 - k) / (n - k);
    Rng rng = Rng(seed).split(0xbead);
    for (int t = 0; t < trials; ++t) {
        Cochain phi = random_cochain(X, k, rng);
        Cochain psi = random_cochain(X, k, rng);
        phi.values = mask_A.matrix * phi.values;
        psi.values = mask_B.matrix * psi.values;

        Cochain up = codifferential(X, m, differential(X, phi));
        Cochain down = differential(X, codifferential(X, m, phi));
        Cochain diff{k, up.values - coeff * down.values};
        double lhs = std::abs(inner_product(X, m, diff, psi));
        double rhs = (n - k) * (k + 1) * report.lambda * norm(X, m, phi) * norm(X, m, psi);
        report.max_violation = std::max(report.max_violation, lhs - rhs);
        if (rhs > 0)
            report.max_ratio = std::max(report.max_ratio, lhs / rhs);

        for (const Link& link : eq_links) {
            auto link_partite = detect_partite(link.complex);
            if (!link_partite)
                throw std::logic_error("link of a partite complex must be partite");
            Cochain phi_tau = localize(link, phi);
            Cochain psi_tau = localize(link, psi);
            LinearOperatorHandle walk = nonlazy_upper_walk(link.complex, link.weights, 0);
            LinearOperatorHandle proj_p = partite_projection(link.complex, link.weights, *link_partite);
            LinearOperatorHandle proj_const = lower_walk(link.complex, link.weights, 0);
            Cochain mapped{0, walk.matrix * ((proj_p.matrix - proj_const.matrix) * phi_tau.values)};
            double eq_lhs = inner_product(link.complex, link.weights, mapped, psi_tau);
            Cochain dstar_phi = codifferential(link.complex, link.weights, phi_tau);
            Cochain dstar_psi = codifferential(link.complex, link.weights, psi_tau);
            double pairing = inner_product(link.complex, link.weights, dstar_phi, dstar_psi);
            report.eq_positive_form_residual = std::max(
                report.eq_positive_form_residual, rel_residual(eq_lhs, pairing / (n - k)));
            report.eq_negative_form_residual =
                std::max(report.eq_negative_form_residual,
                         rel_residual(eq_lhs, -pairing * (n - k - 1) / (n - k)));
        }
    }

    report.positive_form_holds = report.eq_positive_form_residual <= kIdentityTol;
    report.negative_form_holds = report.eq_negative_form_residual <= kIdentityTol;
    report.ok = report.max_violation <= kIdentityTol;
    return report;
}

} // namespace hdx
