#include "hdx/weights.hpp"

#include <cmath>
#include <stdexcept>

namespace hdx {

WeightFunction weight_from_top(const SimplicialComplex& X, std::span<const double> top_weights) {
    int n = X.dimension();
    if (static_cast<int>(top_weights.size()) != X.count(n))
        throw std::invalid_argument("one weight per top simplex required");
    for (double w : top_weights)
        if (!(w > 0))
            throw std::invalid_argument("top weights must be positive");

    WeightFunction m;
    m.values_.resize(n + 2);
    m.values_[n + 1].assign(top_weights.begin(), top_weights.end());
    for (int k = n - 1; k >= -1; --k) {
        auto& level = m.values_[k + 1];
        level.assign(X.count(k), 0.0);
        for (int i = 0; i < X.count(k); ++i)
            for (int ci : X.cofaces(k, i))
                level[i] += m.values_[k + 2][ci];
    }
    return m;
}

WeightFunction weight_from_values(std::vector<std::vector<double>> values) {
    WeightFunction m;
    m.values_ = std::move(values);
    return m;
}

WeightFunction homogeneous_weight(const SimplicialComplex& X) {
    std::vector<double> ones(X.count(X.dimension()), 1.0);
    return weight_from_top(X, ones);
}

double total_weight(const SimplicialComplex& X, const WeightFunction& m, int k) {
    double sum = 0;
    for (int i = 0; i < X.count(k); ++i)
        sum += m.at(k, i);
    return sum;
}

double weight_of_set(const SimplicialComplex& X, const WeightFunction& m, int k,
                     std::span<const int> simplex_indices) {
    double sum = 0;
    for (int i : simplex_indices) {
        if (i < 0 || i >= X.count(k))
            throw std::out_of_range("simplex index out of range");
        sum += m.at(k, i);
    }
    return sum;
}

double weight_of_vertices(const SimplicialComplex& X, const WeightFunction& m,
                          std::span<const int> vertex_ids) {
    double sum = 0;
    for (int v : vertex_ids) {
        int idx = X.index_of(Simplex::of({v}));
        if (idx < 0)
            throw std::invalid_argument("id " + std::to_string(v) + " is not a vertex of X");
        sum += m.at(0, idx);
    }
    return sum;
}

double balance_residual(const SimplicialComplex& X, const WeightFunction& m) {
    double worst = 0;
    for (int k = -1; k < X.dimension(); ++k) {
        for (int i = 0; i < X.count(k); ++i) {
            double sum = 0;
            for (int ci : X.cofaces(k, i))
                sum += m.at(k + 1, ci);
            worst = std::max(worst, std::abs(sum - m.at(k, i)) / m.at(k, i));
        }
    }
    return worst;
}

} // namespace hdx
