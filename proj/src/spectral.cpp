#include "hdx/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

namespace hdx {

namespace {

Eigen::VectorXd as_vector(const std::vector<double>& v) {
    return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

// diag(sqrt(m)) A diag(1/sqrt(m)), which is symmetric exactly when A is
// self-adjoint in the m-weighted inner product.
Eigen::MatrixXd conjugate_to_symmetric(const Eigen::MatrixXd& A, const Eigen::VectorXd& m) {
    Eigen::VectorXd sqrt_m = m.array().sqrt();
    return sqrt_m.asDiagonal() * A * sqrt_m.cwiseInverse().asDiagonal();
}

} // namespace

std::vector<double> weighted_spectrum(const LinearOperatorHandle& op,
                                      const std::vector<double>& level_weights) {
    if (op.domain_level != op.codomain_level)
        throw std::invalid_argument("weighted_spectrum needs an endomorphism");
    if (op.matrix.rows() != op.matrix.cols() ||
        op.matrix.rows() != static_cast<Eigen::Index>(level_weights.size()))
        throw std::invalid_argument("operator/weight size mismatch");

    Eigen::VectorXd m = as_vector(level_weights);
    Eigen::MatrixXd weighted = m.asDiagonal() * op.matrix; // should be symmetric
    double scale = 1.0 + weighted.cwiseAbs().maxCoeff();
    double asym = (weighted - weighted.transpose()).cwiseAbs().maxCoeff() / scale;
    if (asym > 1e-8)
        throw std::invalid_argument("operator is not self-adjoint in the weighted inner product");

    Eigen::MatrixXd sym = conjugate_to_symmetric(op.matrix, m);
    sym = ((sym + sym.transpose()) / 2).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigensolver failed to converge");
    const auto& ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

std::optional<double> LinkSpectrum::lambda_link() const {
    if (partite_nontrivial.empty())
        return std::nullopt;
    return partite_nontrivial.back();
}

std::optional<double> LinkSpectrum::kappa_partite() const {
    if (partite_nontrivial.empty())
        return std::nullopt;
    return partite_nontrivial.front();
}

namespace {

std::vector<double> nontrivial_spectrum_partite(const SimplicialComplex& link,
                                                const WeightFunction& lw,
                                                const LinearOperatorHandle& walk,
                                                const PartiteStructure& ps) {
    Eigen::VectorXd m = as_vector(lw.level(0));
    Eigen::MatrixXd S = conjugate_to_symmetric(walk.matrix, m);
    S = ((S + S.transpose()) / 2).eval();

    LinearOperatorHandle proj = partite_projection(link, lw, ps);
    Eigen::MatrixXd Q =
        Eigen::MatrixXd::Identity(m.size(), m.size()) - conjugate_to_symmetric(proj.matrix, m);
    Q = ((Q + Q.transpose()) / 2).eval();

    // Orthonormal basis of C^0_nt = range of the (0/1) projection Q.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> qsolver(Q);
    if (qsolver.info() != Eigen::Success)
        throw std::runtime_error("eigensolver failed on the partite projection");
    std::vector<Eigen::Index> cols;
    for (Eigen::Index i = 0; i < m.size(); ++i)
        if (qsolver.eigenvalues()[i] > 0.5)
            cols.push_back(i);
    if (cols.empty())
        return {};
    Eigen::MatrixXd V(m.size(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t i = 0; i < cols.size(); ++i)
        V.col(static_cast<Eigen::Index>(i)) = qsolver.eigenvectors().col(cols[i]);

    Eigen::MatrixXd restricted = V.transpose() * S * V;
    restricted = ((restricted + restricted.transpose()) / 2).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> rsolver(restricted);
    if (rsolver.info() != Eigen::Success)
        throw std::runtime_error("eigensolver failed on the restricted walk");
    const auto& ev = rsolver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

} // namespace

SpectralReport link_spectral_report(const SimplicialComplex& X, const WeightFunction& m) {
    int n = X.dimension();
    if (n < 1)
        throw std::invalid_argument("spectral report needs dimension >= 1");

    SpectralReport report;
    report.n = n;
    report.mu.assign(n, -std::numeric_limits<double>::infinity());
    report.nu.assign(n, std::numeric_limits<double>::infinity());
    report.mu_partite_aware.assign(n, -std::numeric_limits<double>::infinity());
    report.nu_partite_aware.assign(n, std::numeric_limits<double>::infinity());

    for (int k = 0; k <= n - 1; ++k) {
        for (const Simplex& tau : X.simplices(k - 1)) {
            Link link = build_link(X, m, tau);
            if (!link.complex.skeleton_connected())
                throw std::runtime_error("link of " + to_string(tau) + " is disconnected");

            LinkSpectrum entry;
            entry.k = k;
            entry.tau = tau;
            LinearOperatorHandle walk = nonlazy_upper_walk(link.complex, link.weights, 0);
            entry.spectrum = weighted_spectrum(walk, link.weights.level(0));
            // Connected link: the trivial eigenvalue 1 is simple and sits at
            // the top of the sorted spectrum.
            entry.nontrivial.assign(entry.spectrum.begin(), entry.spectrum.end() - 1);

            std::optional<PartiteStructure> ps;
            try {
                ps = detect_partite(link.complex);
            } catch (const std::runtime_error&) {
                ps.reset(); // ambiguous side structure: no partite diagnostics
            }
            if (ps) {
                entry.partite = true;
                entry.partite_nontrivial =
                    nontrivial_spectrum_partite(link.complex, link.weights, walk, *ps);
            }

            if (!entry.nontrivial.empty()) {
                report.mu[k] = std::max(report.mu[k], entry.nontrivial.back());
                report.nu[k] = std::min(report.nu[k], entry.nontrivial.front());
            }
            const auto& aware = entry.partite ? entry.partite_nontrivial : entry.nontrivial;
            if (!aware.empty()) {
                report.mu_partite_aware[k] = std::max(report.mu_partite_aware[k], aware.back());
                report.nu_partite_aware[k] = std::min(report.nu_partite_aware[k], aware.front());
            }
            report.links.push_back(std::move(entry));
        }
    }

    // Vacuous levels (no nontrivial eigenvalues at all) become the empty
    // interval [1, -1].
    for (int k = 0; k < n; ++k) {
        if (!std::isfinite(report.mu[k])) {
            report.mu[k] = -1;
            report.nu[k] = 1;
        }
        if (!std::isfinite(report.mu_partite_aware[k])) {
            report.mu_partite_aware[k] = -1;
            report.nu_partite_aware[k] = 1;
        }
    }
    return report;
}

double SpectralReport::lambda_two_sided() const {
    double lambda = 0;
    for (int k = 0; k < n; ++k)
        lambda = std::max(lambda, lambda_two_sided_at(k));
    return lambda;
}

double SpectralReport::lambda_one_sided() const {
    double lambda = -1;
    for (int k = 0; k < n; ++k)
        if (!level_vacuous(k))
            lambda = std::max(lambda, mu[k]);
    return lambda;
}

bool SpectralReport::level_vacuous(int k) const { return mu[k] < nu[k]; }

double SpectralReport::lambda_two_sided_at(int k) const {
    if (level_vacuous(k))
        return 0;
    return std::max(std::abs(mu[k]), std::abs(nu[k]));
}

double SpectralReport::lambda_one_sided_at(int k) const {
    if (level_vacuous(k))
        return 0;
    return std::max(mu[k], 0.0);
}

namespace {

constexpr double kHypothesisSlack = 1e-10;

bool spectra_within(const SpectralReport& report, double lo, double hi, bool partite_aware) {
    for (const LinkSpectrum& link : report.links) {
        const auto& values =
            (partite_aware && link.partite) ? link.partite_nontrivial : link.nontrivial;
        for (double x : values)
            if (x < lo - kHypothesisSlack || x > hi + kHypothesisSlack)
                return false;
    }
    return true;
}

} // namespace

bool check_two_sided_hypothesis(const SpectralReport& report, double lambda) {
    return spectra_within(report, -lambda, lambda, false);
}

bool check_one_sided_hypothesis(const SpectralReport& report, double lambda) {
    return spectra_within(report, -1.0, lambda, false);
}

bool check_two_sided_hypothesis_partite_aware(const SpectralReport& report, double lambda) {
    return spectra_within(report, -lambda, lambda, true);
}

bool check_one_sided_hypothesis_partite_aware(const SpectralReport& report, double lambda) {
    return spectra_within(report, -1.0, lambda, true);
}

DescentBound descent_bound(double mu_top, double nu_top, int n, int k) {
    if (k < 0 || k > n - 1)
        throw std::invalid_argument("descent_bound needs 0 <= k <= n-1");
    int steps = n - 1 - k;
    DescentBound out;
    double mu_den = 1.0 - steps * mu_top;
    if (mu_den > 0)
        out.mu_bound = mu_top / mu_den;
    double nu_den = 1.0 - steps * nu_top;
    if (nu_den > 0)
        out.nu_bound = nu_top / nu_den;
    return out;
}

double threshold_for_target(double lambda, int n) {
    if (!(lambda > 0) || lambda > 1)
        throw std::invalid_argument("threshold_for_target needs 0 < lambda <= 1");
    if (n < 1)
        throw std::invalid_argument("threshold_for_target needs n >= 1");
    return lambda / (1.0 + (n - 1) * lambda);
}

DescentReport verify_descent(const SpectralReport& report) {
    constexpr double kTol = 1e-9;
    DescentReport out;
    for (int k = 0; k + 1 < report.n; ++k) {
        DescentStep step;
        step.k = k;
        step.mu_measured = report.mu[k];
        step.nu_measured = report.nu[k];

        double mu_above = report.mu[k + 1];
        // The descent theorem assumes 0 <= mu; a negative measured value
        // leaves the mu-chain vacuous at this step.
        if (mu_above >= 0 && 1.0 - mu_above > 0) {
            step.mu_limit = mu_above / (1.0 - mu_above);
            step.mu_ok = step.mu_measured <= *step.mu_limit + kTol;
        }

        double nu_above = std::min(0.0, report.nu[k + 1]);
        step.nu_limit = nu_above / (1.0 - nu_above);
        step.nu_ok = step.nu_measured >= *step.nu_limit - kTol;

        out.ok = out.ok && step.mu_ok && step.nu_ok;
        out.steps.push_back(step);
    }
    return out;
}

DescentReport verify_descent(const SimplicialComplex& X, const WeightFunction& m) {
    return verify_descent(link_spectral_report(X, m));
}

} // namespace hdx
