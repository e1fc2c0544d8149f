#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hdx/cochain.hpp"
#include "hdx/partite.hpp"
#include "hdx/spectral.hpp"

namespace hdx {

/// Outcome of a batch of identity checks on random cochains.
struct IdentityReport {
    struct Line {
        std::string name;
        double max_residual = 0; // relative
        bool ok = true;
    };
    std::vector<Line> lines;
    bool ok = true;

    const Line& line(const std::string& name) const;
};

/// The three localization identities on level-k cochains:
///   (k+1) <phi, psi>    = sum_tau <phi_tau, psi_tau>
///   <d* phi, d* psi>    = sum_tau <d*_tau phi_tau, d*_tau psi_tau>       (k >= 0)
///   <d phi, d psi>      = sum_tau (<d_tau phi_tau, d_tau psi_tau>
///                                   - k/(k+1) <phi_tau, psi_tau>)        (k < n)
IdentityReport verify_localization_identities(const SimplicialComplex& X,
                                              const WeightFunction& m, int k,
                                              int trials, std::uint64_t seed);

/// <(d*d - dd*) phi, psi> = <phi, psi>
///   + sum_tau <(M')+_{tau,0} (I - M-_{tau,0}) phi_tau, psi_tau>.
IdentityReport verify_garland_decomposition(const SimplicialComplex& X,
                                            const WeightFunction& m, int k,
                                            int trials, std::uint64_t seed);

struct BoundReport {
    double lambda = 0;
    int trials = 0;
    double max_violation = 0; // max(lhs - rhs, 0) over trials
    double max_ratio = 0;     // lhs / rhs where rhs > 0, for diagnostics
    bool ok = true;
};

/// |<(d*d - dd*) phi, psi>| <= (k+1) lambda |phi| |psi| for weighted-orthogonal
/// pairs, with lambda the measured two-sided bound over the links of X(k-1).
BoundReport verify_orthogonal_bound(const SimplicialComplex& X, const WeightFunction& m,
                                    const SpectralReport& spectra, int k,
                                    int trials, std::uint64_t seed);

struct PartiteBoundReport : BoundReport {
    // Residuals of the two candidate forms of the exact identity inside the
    // partite bound's derivation, tested at tau spanning A n B:
    //   <(M')+(M^{-,p} - M^-) phi_tau, psi_tau> =  1/(n-k)        <d* phi_tau, d* psi_tau>
    //   <(M')+(M^{-,p} - M^-) phi_tau, psi_tau> = -(n-k-1)/(n-k)  <d* phi_tau, d* psi_tau>
    double eq_positive_form_residual = 0;
    double eq_negative_form_residual = 0;
    bool positive_form_holds = false;
    bool negative_form_holds = false;
};

/// Partite analogue with sides restricted by index sets A, B of size k+1:
/// |<(d*d - (n+1-k)/(n-k) dd*) phi, psi>| <= (n-k)(k+1) lambda |phi| |psi|
/// with lambda the measured one-sided bound over the links of X(k-1).
PartiteBoundReport verify_partite_bound(const SimplicialComplex& X, const WeightFunction& m,
                                        const PartiteStructure& partite,
                                        const SpectralReport& spectra, int k,
                                        const std::vector<int>& A, const std::vector<int>& B,
                                        int trials, std::uint64_t seed);

} // namespace hdx
