#include "hdx/cochain.hpp"

#include <cmath>
#include <stdexcept>

namespace hdx {

Cochain zero_cochain(const SimplicialComplex& X, int k) {
    return {k, Eigen::VectorXd::Zero(X.count(k))};
}

Cochain constant_cochain(const SimplicialComplex& X, int k, double value) {
    return {k, Eigen::VectorXd::Constant(X.count(k), value)};
}

Cochain indicator(const SimplicialComplex& X, int k, std::span<const int> simplex_indices) {
    Cochain chi = zero_cochain(X, k);
    for (int i : simplex_indices)
        chi.values[i] = 1.0;
    return chi;
}

Cochain spanning_indicator(const SimplicialComplex& X,
                           const std::vector<std::vector<int>>& parts) {
    auto hits = simplices_spanning(X, parts);
    return indicator(X, static_cast<int>(parts.size()) - 1, hits);
}

Cochain random_cochain(const SimplicialComplex& X, int k, Rng& rng) {
    Cochain phi = zero_cochain(X, k);
    for (int i = 0; i < phi.values.size(); ++i)
        phi.values[i] = rng.gaussian();
    return phi;
}

double inner_product(const SimplicialComplex& X, const WeightFunction& m,
                     const Cochain& phi, const Cochain& psi) {
    if (phi.level != psi.level)
        throw std::invalid_argument("inner product of cochains at different levels");
    double sum = 0;
    for (int i = 0; i < X.count(phi.level); ++i)
        sum += m.at(phi.level, i) * phi.values[i] * psi.values[i];
    return sum;
}

double norm(const SimplicialComplex& X, const WeightFunction& m, const Cochain& phi) {
    return std::sqrt(inner_product(X, m, phi, phi));
}

Cochain differential(const SimplicialComplex& X, const Cochain& phi) {
    int k = phi.level;
    if (k >= X.dimension())
        throw std::invalid_argument("differential undefined at the top level");
    Cochain out = zero_cochain(X, k + 1);
    for (int i = 0; i < X.count(k + 1); ++i) {
        double sum = 0;
        for (int fi : X.faces(k + 1, i))
            sum += phi.values[fi];
        out.values[i] = sum;
    }
    return out;
}

Cochain codifferential(const SimplicialComplex& X, const WeightFunction& m,
                       const Cochain& psi) {
    int k = psi.level - 1;
    if (k < -1)
        throw std::invalid_argument("codifferential undefined below the empty level");
    Cochain out = zero_cochain(X, k);
    for (int i = 0; i < X.count(k); ++i) {
        double sum = 0;
        for (int ci : X.cofaces(k, i))
            sum += m.at(k + 1, ci) * psi.values[ci];
        out.values[i] = sum / m.at(k, i);
    }
    return out;
}

Cochain localize(const Link& link, const Cochain& phi) {
    int l = phi.level - link.base.dim() - 1;
    if (l < 0)
        throw std::invalid_argument("localization needs dim(tau) < cochain level");
    Cochain out = zero_cochain(link.complex, l);
    const auto& parents = link.parent_index[l + 1];
    for (int i = 0; i < link.complex.count(l); ++i)
        out.values[i] = phi.values[parents[i]];
    return out;
}

} // namespace hdx
