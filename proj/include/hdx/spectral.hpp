#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hdx/link.hpp"
#include "hdx/operators.hpp"
#include "hdx/partite.hpp"

namespace hdx {

/// Spectrum of a self-adjoint operator in the weighted inner product,
/// computed by conjugating with diag(sqrt(m)) and diagonalizing the
/// resulting symmetric matrix. Ascending. Throws when the operator is not
/// self-adjoint (checked to 1e-8) or levels mismatch the weight vector.
std::vector<double> weighted_spectrum(const LinearOperatorHandle& op,
                                      const std::vector<double>& level_weights);

/// Spectrum of the non-lazy upper 0-walk of one link.
struct LinkSpectrum {
    int k = 0;        // tau ranges over X(k-1)
    Simplex tau;
    std::vector<double> spectrum;   // full, ascending
    std::vector<double> nontrivial; // excluding one copy of the eigenvalue 1
    bool partite = false;
    // Spectrum restricted to C^0_nt (orthogonal complement of the indicator
    // functions of the sides); empty when the link is not partite or C^0_nt
    // is trivial.
    std::vector<double> partite_nontrivial;

    std::optional<double> lambda_link() const;  // max of partite_nontrivial
    std::optional<double> kappa_partite() const; // min of partite_nontrivial
};

struct SpectralReport {
    int n = 0;
    std::vector<LinkSpectrum> links; // all tau in X(k-1), 0 <= k <= n-1

    // Extremes of the nontrivial spectra per level k (eigenvalue 1 excluded
    // once per link; every connected link contributes).
    std::vector<double> mu; // mu[k] = max
    std::vector<double> nu; // nu[k] = min

    // Same extremes under the alternative reading where partite links
    // additionally exclude their partite-trivial eigenfunctions.
    std::vector<double> mu_partite_aware;
    std::vector<double> nu_partite_aware;

    /// A level is vacuous when no link at that level has any nontrivial
    /// eigenvalue (the sentinel interval [1, -1]).
    bool level_vacuous(int k) const;
    double lambda_two_sided() const; // max |nontrivial| over all links
    double lambda_one_sided() const; // max nontrivial over all links (may be negative)
    // Per-level theorem constants, over tau in X(k-1) only; the one-sided
    // value is clamped at 0 since the bounds hold for every positive lambda.
    double lambda_two_sided_at(int k) const;
    double lambda_one_sided_at(int k) const;
};

/// Computes the walk spectrum of every link X_tau, tau in X(k-1) for
/// 0 <= k <= n-1 (tau = empty included). Throws with the offending tau when
/// some link of dimension >= 1 is disconnected.
SpectralReport link_spectral_report(const SimplicialComplex& X, const WeightFunction& m);

/// Spec((M')_{tau,0}^+) within [-lambda, lambda] u {1} for every link.
bool check_two_sided_hypothesis(const SpectralReport& report, double lambda);
/// Spec within [-1, lambda] u {1} for every link.
bool check_one_sided_hypothesis(const SpectralReport& report, double lambda);
/// Variants that exclude partite-trivial eigenvalues in partite links.
bool check_two_sided_hypothesis_partite_aware(const SpectralReport& report, double lambda);
bool check_one_sided_hypothesis_partite_aware(const SpectralReport& report, double lambda);

/// mu_k <= mu_{n-1} / (1 - (n-1-k) mu_{n-1}) and the nu analogue.
/// A bound is absent when its denominator is not positive.
struct DescentBound {
    std::optional<double> mu_bound;
    std::optional<double> nu_bound;
};
DescentBound descent_bound(double mu_top, double nu_top, int n, int k);

/// lambda / (1 + (n-1) lambda): the (n-1)-level threshold that guarantees
/// mu_k <= lambda on all lower levels.
double threshold_for_target(double lambda, int n);

struct DescentStep {
    int k = 0;
    double mu_measured = 0, nu_measured = 0;
    std::optional<double> mu_limit; // absent = vacuous (negative or unit mu above)
    std::optional<double> nu_limit;
    bool mu_ok = true, nu_ok = true;
};

struct DescentReport {
    std::vector<DescentStep> steps;
    bool ok = true;
};

/// Checks the one-step descent chain on the measured mu/nu of the report.
DescentReport verify_descent(const SimplicialComplex& X, const WeightFunction& m);
DescentReport verify_descent(const SpectralReport& report);

} // namespace hdx
