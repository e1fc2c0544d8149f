#include "hdx/mixing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hdx/cochain.hpp"

namespace hdx {

namespace {

constexpr double kExactTol = 1e-10;
constexpr double kSumTol = 1e-9;

long long ipow(long long base, int exp) {
    long long out = 1;
    for (int i = 0; i < exp; ++i)
        out *= base;
    return out;
}

long long factorial(int n) {
    long long out = 1;
    for (int i = 2; i <= n; ++i)
        out *= i;
    return out;
}

// (k+1)(k+2)^{n-k} - (k+1)^{n-k+1}
long long per_level_constant(int n, int k) {
    return (k + 1) * ipow(k + 2, n - k) - ipow(k + 1, n - k + 1);
}

double rel_residual(double lhs, double rhs) {
    return std::abs(lhs - rhs) / (1.0 + std::abs(lhs) + std::abs(rhs));
}


// Operator norm in the weighted geometry: the largest singular value of
// diag(sqrt(m)) A diag(1/sqrt(m)).
double weighted_operator_norm(const Eigen::MatrixXd& A, const std::vector<double>& weights) {
    Eigen::VectorXd m =
        Eigen::Map<const Eigen::VectorXd>(weights.data(), static_cast<Eigen::Index>(weights.size()));
    Eigen::VectorXd sqrt_m = m.array().sqrt();
    Eigen::MatrixXd conj = sqrt_m.asDiagonal() * A * sqrt_m.cwiseInverse().asDiagonal();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(conj);
    return svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
}

std::vector<std::vector<int>> window(const std::vector<std::vector<int>>& parts, int lo, int hi) {
    return std::vector<std::vector<int>>(parts.begin() + lo, parts.begin() + hi + 1);
}

void check_parts(const SimplicialComplex& X, const std::vector<std::vector<int>>& parts) {
    if (static_cast<int>(parts.size()) != X.dimension() + 1)
        throw std::invalid_argument("need n+1 vertex sets");
    std::unordered_map<int, int> owner;
    for (int i = 0; i < static_cast<int>(parts.size()); ++i)
        for (int v : parts[i]) {
            auto [it, inserted] = owner.emplace(v, i);
            if (!inserted)
                throw std::invalid_argument(it->second == i ? "vertex repeated within a set"
                                                            : "vertex sets overlap");
            if (!X.contains(Simplex::of({v})))
                throw std::invalid_argument("set contains id " + std::to_string(v) +
                                            " which is not a vertex");
        }
}

} // namespace

long long constant_C(int n) {
    if (n < 1)
        throw std::invalid_argument("constant_C needs n >= 1");
    long long sum = 0;
    for (int k = 0; k < n; ++k)
        sum += per_level_constant(n, k);
    return sum;
}

long long constant_C_partite(int n) {
    if (n < 1)
        throw std::invalid_argument("constant_C_partite needs n >= 1");
    long long sum = 0;
    for (int k = 0; k < n; ++k) {
        long long scale = factorial(n) / factorial(n - k - 1); // n!/(n-k-1)!
        sum += scale * ipow(n + 1 - k, n - k) * per_level_constant(n, k);
    }
    return sum;
}

namespace {

LinearOperatorHandle restricted_product(const SimplicialComplex& X, const WeightFunction& m,
                                        int k, const std::vector<std::vector<int>>& parts,
                                        bool upper) {
    int n = X.dimension();
    if (k < 0 || k > n - 1)
        throw std::invalid_argument("restricted products need 0 <= k <= n-1");
    check_parts(X, parts);

    Eigen::MatrixXd step;
    if (upper) {
        step = codifferential_matrix(X, m, k).matrix * differential_matrix(X, k).matrix;
    } else {
        step = differential_matrix(X, k - 1).matrix * codifferential_matrix(X, m, k - 1).matrix;
    }

    // prod_{i=1}^{n-k} P_{X(U_i,...,U_{k+i})} step, i = 1 acting first.
    Eigen::MatrixXd acc = Eigen::MatrixXd::Identity(X.count(k), X.count(k));
    for (int i = 1; i <= n - k; ++i) {
        LinearOperatorHandle proj = set_projection(X, window(parts, i, k + i));
        acc = (proj.matrix * (step * acc)).eval();
    }
    return {k, k, false, std::move(acc)};
}

} // namespace

LinearOperatorHandle restricted_upper_product(const SimplicialComplex& X,
                                              const WeightFunction& m, int k,
                                              const std::vector<std::vector<int>>& parts) {
    return restricted_product(X, m, k, parts, true);
}

LinearOperatorHandle restricted_lower_product(const SimplicialComplex& X,
                                              const WeightFunction& m, int k,
                                              const std::vector<std::vector<int>>& parts) {
    return restricted_product(X, m, k, parts, false);
}

ExchangeReport verify_exchange_lemmas(const SimplicialComplex& X, const WeightFunction& m,
                                      const std::vector<std::vector<int>>& parts, int k) {
    int n = X.dimension();
    if (k < 0 || k > n - 1)
        throw std::invalid_argument("exchange lemmas need 0 <= k <= n-1");
    check_parts(X, parts);

    ExchangeReport report;
    auto push = [&](const std::string& name, double residual, bool applicable) {
        bool ok = !applicable || residual <= kExactTol;
        report.lines.push_back({name, residual, ok, applicable});
        report.ok = report.ok && ok;
    };

    Eigen::MatrixXd d_k = differential_matrix(X, k).matrix;
    Eigen::MatrixXd dstar_k = codifferential_matrix(X, m, k).matrix;

    // P_{X(U_1..U_{k+1})} d* P_{X(U_0..U_{k+1})} d P_{X(U_0..U_k)}
    //   = P_{X(U_1..U_{k+1})} d* d P_{X(U_0..U_k)}
    {
        Eigen::MatrixXd p_low = set_projection(X, window(parts, 0, k)).matrix;
        Eigen::MatrixXd p_mid = set_projection(X, window(parts, 0, k + 1)).matrix;
        Eigen::MatrixXd p_out = set_projection(X, window(parts, 1, k + 1)).matrix;
        Eigen::MatrixXd lhs = p_out * dstar_k * p_mid * d_k * p_low;
        Eigen::MatrixXd rhs = p_out * dstar_k * d_k * p_low;
        push("P_dstar_d_P", operator_deviation(lhs, rhs), true);
    }

    // P_{X(U_1..U_{k+2})} d P_{X(U_1..U_{k+1})} d* P_{X(U_0..U_{k+1})}
    //   = P_{X(U_1..U_{k+2})} d d* P_{X(U_0..U_{k+1})}
    if (k <= n - 2) {
        Eigen::MatrixXd p_low = set_projection(X, window(parts, 0, k + 1)).matrix;
        Eigen::MatrixXd p_mid = set_projection(X, window(parts, 1, k + 1)).matrix;
        Eigen::MatrixXd p_out = set_projection(X, window(parts, 1, k + 2)).matrix;
        Eigen::MatrixXd lhs = p_out * d_k * p_mid * dstar_k * p_low;
        Eigen::MatrixXd rhs = p_out * d_k * dstar_k * p_low;
        push("P_d_dstar_P", operator_deviation(lhs, rhs), true);
    } else {
        push("P_d_dstar_P", 0.0, false);
    }

    // Full product exchange: the alternating d*/d chain against the
    // restricted d*d product.
    {
        Eigen::MatrixXd lhs = set_projection(X, window(parts, 0, k + 1)).matrix * d_k *
                              set_projection(X, window(parts, 0, k)).matrix;
        for (int i = 1; i <= n - k - 1; ++i) {
            lhs = (set_projection(X, window(parts, i, k + 1 + i)).matrix * d_k * dstar_k * lhs)
                      .eval();
        }
        lhs = (set_projection(X, window(parts, n - k, n)).matrix * dstar_k * lhs).eval();
        Eigen::MatrixXd rhs = restricted_upper_product(X, m, k, parts).matrix *
                              set_projection(X, window(parts, 0, k)).matrix;
        push("product_exchange", operator_deviation(lhs, rhs), true);
    }

    // Inner-product corollary at level k (k <= n-2): the (k+1)-level lower
    // product pairing equals the k-level upper product pairing.
    if (k <= n - 2) {
        Cochain chi_lo = spanning_indicator(X, window(parts, 0, k));
        Cochain chi_hi = spanning_indicator(X, window(parts, n - k, n));
        Cochain chi_lo_up = spanning_indicator(X, window(parts, 0, k + 1));
        Cochain chi_hi_up = spanning_indicator(X, window(parts, n - k - 1, n));

        LinearOperatorHandle lower = restricted_lower_product(X, m, k + 1, parts);
        Cochain lower_applied = lower.apply(chi_lo_up);
        double lhs = inner_product(X, m, lower_applied, chi_hi_up);

        LinearOperatorHandle upper = restricted_upper_product(X, m, k, parts);
        Cochain upper_applied = upper.apply(chi_lo);
        double rhs = inner_product(X, m, upper_applied, chi_hi);
        push("inner_product_coro", rel_residual(lhs, rhs), true);
    } else {
        push("inner_product_coro", 0.0, false);
    }

    return report;
}

double bottom_product_value(const SimplicialComplex& X, const WeightFunction& m,
                            const std::vector<std::vector<int>>& parts) {
    int n = X.dimension();
    check_parts(X, parts);

    Eigen::MatrixXd walk =
        differential_matrix(X, -1).matrix * codifferential_matrix(X, m, -1).matrix;
    Eigen::VectorXd vec = spanning_indicator(X, window(parts, 0, 0)).values;
    for (int i = 1; i <= n; ++i) {
        vec = (walk * vec).eval();
        vec = (set_projection(X, window(parts, i, i)).matrix * vec).eval();
    }
    Cochain result{0, vec};
    double assembled = inner_product(X, m, result, spanning_indicator(X, window(parts, n, n)));

    double closed = 1.0;
    for (const auto& u : parts)
        closed *= weight_of_vertices(X, m, u);
    double total = total_weight(X, m, 0);
    for (int i = 0; i < n; ++i)
        closed /= total;

    if (rel_residual(assembled, closed) > kExactTol)
        throw std::runtime_error("bottom product: operator form and closed form disagree");
    return closed;
}

namespace {

// Moves the pair minimizing key(i) * key(j) to the ends, preserving the
// relative order of the rest. Returns the permutation applied.
std::vector<int> min_pair_order(const std::vector<double>& key) {
    int count = static_cast<int>(key.size());
    int best_i = 0, best_j = count - 1;
    double best = -1;
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j) {
            double v = key[i] * key[j];
            if (best < 0 || v < best) {
                best = v;
                best_i = i;
                best_j = j;
            }
        }
    std::vector<int> order{best_i};
    for (int i = 0; i < count; ++i)
        if (i != best_i && i != best_j)
            order.push_back(i);
    order.push_back(best_j);
    return order;
}

} // namespace

MixingReport verify_mixing(const SimplicialComplex& X, const WeightFunction& m,
                           const SpectralReport& spectra,
                           const std::vector<std::vector<int>>& parts,
                           std::optional<double> lambda_override) {
    int n = X.dimension();
    if (n < 1)
        throw std::invalid_argument("mixing needs dimension >= 1");
    check_parts(X, parts);

    MixingReport report;
    report.lambda = lambda_override.value_or(spectra.lambda_two_sided());
    report.hypothesis_verified = check_two_sided_hypothesis(spectra, report.lambda);

    // The theorem's proof reduces to the pair (U_0, U_n); evaluate with the
    // minimizing pair at the ends.
    std::vector<double> weights;
    for (const auto& u : parts)
        weights.push_back(weight_of_vertices(X, m, u));
    std::vector<int> order = min_pair_order(weights);
    for (int i : order)
        report.sets.push_back(parts[i]);
    const auto& sets = report.sets;

    // m(X(U_0,...,U_n)) by enumeration and through the top pairing.
    double measured = 0;
    for (int idx : simplices_spanning(X, sets))
        measured += m.at(n, idx);
    report.measured = measured;

    Cochain chi_front = spanning_indicator(X, window(sets, 0, n - 1));
    Cochain chi_back = spanning_indicator(X, window(sets, 1, n));
    Cochain top_applied = codifferential(X, m, differential(X, chi_front));
    report.operator_form = inner_product(X, m, top_applied, chi_back);
    report.enumeration_residual = rel_residual(report.measured, report.operator_form);

    double total0 = total_weight(X, m, 0);
    double main = 1.0;
    for (int i = 0; i <= n; ++i)
        main *= weight_of_vertices(X, m, sets[i]) / (i < n ? total0 : 1.0);
    report.main_term = main;

    report.lhs = std::abs(report.measured - report.main_term);
    report.min_pair_term =
        std::sqrt(weight_of_vertices(X, m, sets[0]) * weight_of_vertices(X, m, sets[n]));
    report.constant = constant_C(n);
    report.rhs = static_cast<double>(report.constant) * report.lambda * report.min_pair_term;
    report.holds = report.lhs <= report.rhs + kSumTol;

    // Telescoping contributions of the proof.
    double bottom = bottom_product_value(X, m, sets);
    double bracket_sum = 0;
    for (int k = 0; k <= n - 1; ++k) {
        Cochain chi_lo = spanning_indicator(X, window(sets, 0, k));
        Cochain chi_hi = spanning_indicator(X, window(sets, n - k, n));
        LinearOperatorHandle upper_prod = restricted_upper_product(X, m, k, sets);
        LinearOperatorHandle lower_prod = restricted_lower_product(X, m, k, sets);
        Cochain upper = upper_prod.apply(chi_lo);
        Cochain lower = lower_prod.apply(chi_lo);
        double bracket = inner_product(X, m, upper, chi_hi) - inner_product(X, m, lower, chi_hi);
        double bound = report.lambda * static_cast<double>(per_level_constant(n, k)) *
                       report.min_pair_term;
        report.per_k_bracket.push_back(bracket);
        report.per_k_bound.push_back(bound);
        report.per_k_ok.push_back(std::abs(bracket) <= bound + kSumTol);
        report.per_k_product_norm.push_back(
            weighted_operator_norm((upper_prod.matrix - lower_prod.matrix).eval(), m.level(k)));
        bracket_sum += bracket;
    }
    report.telescoping_residual = rel_residual(bracket_sum, report.measured - bottom);
    report.telescoping_ok = report.telescoping_residual <= kSumTol;

    // Regular homogeneous specialization (the count form of the theorem).
    // Requires m(X(U_0..U_n)) = |X(U_0..U_n)| and m(U_i) = n!K|U_i|, checked
    // before normalizing.
    Regularity reg = check_regularity(X, m);
    double ucount = static_cast<double>(simplices_spanning(X, sets).size());
    if (reg.simplex_count && rel_residual(report.measured, ucount) <= kExactTol) {
        RegularForm form;
        form.K = *reg.simplex_count;
        double nfact = static_cast<double>(factorial(n));
        double nK = nfact * static_cast<double>(form.K);
        bool counts_match = true;
        for (int i = 0; i <= n; ++i)
            counts_match = counts_match &&
                           rel_residual(weight_of_vertices(X, m, sets[i]),
                                        nK * static_cast<double>(sets[i].size())) <= kExactTol;
        double count_prod = 1;
        for (int i = 0; i <= n; ++i)
            count_prod *= static_cast<double>(sets[i].size());
        double vcount = X.count(0);
        form.count_lhs = std::abs(ucount - nK / std::pow(vcount, n) * count_prod);
        form.count_rhs = static_cast<double>(report.constant) * nfact * report.lambda *
                         static_cast<double>(form.K) *
                         std::sqrt(static_cast<double>(sets[0].size()) *
                                   static_cast<double>(sets[n].size()));
        form.holds = counts_match && form.count_lhs <= form.count_rhs + kSumTol;
        report.regular_form = form;
    }

    report.ok = report.holds && report.telescoping_ok && report.enumeration_residual <= kExactTol;
    for (bool ok : report.per_k_ok)
        report.ok = report.ok && ok;
    if (report.regular_form)
        report.ok = report.ok && report.regular_form->holds;
    return report;
}

MixingReport verify_partite_mixing(const SimplicialComplex& X, const WeightFunction& m,
                                   const PartiteStructure& partite,
                                   const SpectralReport& spectra,
                                   const std::vector<std::vector<int>>& parts,
                                   std::optional<double> lambda_override) {
    int n = X.dimension();
    if (n < 1)
        throw std::invalid_argument("mixing needs dimension >= 1");
    if (static_cast<int>(parts.size()) != n + 1)
        throw std::invalid_argument("need n+1 vertex sets");
    if (partite.side_count() != n + 1)
        throw std::invalid_argument("partite structure has the wrong number of sides");
    check_parts(X, parts);
    for (int i = 0; i <= n; ++i)
        for (int v : parts[i])
            if (auto it = partite.side_of.find(v); it == partite.side_of.end() || it->second != i)
                throw std::invalid_argument("U_" + std::to_string(i) +
                                            " is not a subset of side S_" + std::to_string(i));

    MixingReport report;
    report.partite = true;
    double measured_lambda = spectra.lambda_one_sided();
    report.lambda = lambda_override.value_or(std::max(0.0, measured_lambda));
    report.hypothesis_verified = check_one_sided_hypothesis(spectra, report.lambda);

    std::vector<double> side_weights, set_weights;
    for (int i = 0; i <= n; ++i) {
        side_weights.push_back(weight_of_vertices(X, m, partite.sides[i]));
        set_weights.push_back(weight_of_vertices(X, m, parts[i]));
    }
    std::vector<double> keys;
    for (int i = 0; i <= n; ++i)
        keys.push_back(set_weights[i] / side_weights[i]);
    std::vector<int> order = min_pair_order(keys);
    std::vector<double> side_w, set_w;
    std::vector<std::vector<int>> sides;
    for (int i : order) {
        report.sets.push_back(parts[i]);
        sides.push_back(partite.sides[i]);
        side_w.push_back(side_weights[i]);
        set_w.push_back(set_weights[i]);
    }
    const auto& sets = report.sets;

    double measured = 0;
    for (int idx : simplices_spanning(X, sets))
        measured += m.at(n, idx);
    report.measured = measured;

    Cochain chi_front = spanning_indicator(X, window(sets, 0, n - 1));
    Cochain chi_back = spanning_indicator(X, window(sets, 1, n));
    Cochain top_applied = codifferential(X, m, differential(X, chi_front));
    report.operator_form = inner_product(X, m, top_applied, chi_back);
    report.enumeration_residual = rel_residual(report.measured, report.operator_form);

    double top_total = total_weight(X, m, n);
    double main = 1.0;
    for (int i = 0; i <= n; ++i)
        main *= set_w[i] / side_w[i];
    report.main_term = main;
    report.lhs = std::abs(report.measured / top_total - report.main_term);
    report.min_pair_term = std::sqrt(set_w[0] / side_w[0] * set_w[n] / side_w[n]);
    report.constant = constant_C_partite(n);
    report.rhs = static_cast<double>(report.constant) * report.lambda * report.min_pair_term;
    report.holds = report.lhs <= report.rhs + kSumTol;

    // Partite telescoping: the scaled brackets
    //   B_k = G_k - ((n+1-k)/(n-k))^{n-k} H_k
    // sum with coefficients (n-k)^{n-k-1}/(n-k-1)! to
    //   m(X(U_0..U_n)) - (n+1)^n/n! * prod m(U_i) / m(X(0))^n.
    double bottom = bottom_product_value(X, m, sets);
    double bracket_sum = 0;
    double raw_pair = std::sqrt(set_w[0] * set_w[n]);
    for (int k = 0; k <= n - 1; ++k) {
        Cochain chi_lo = spanning_indicator(X, window(sets, 0, k));
        Cochain chi_hi = spanning_indicator(X, window(sets, n - k, n));
        LinearOperatorHandle upper_prod = restricted_upper_product(X, m, k, sets);
        LinearOperatorHandle lower_prod = restricted_lower_product(X, m, k, sets);
        Cochain upper = upper_prod.apply(chi_lo);
        Cochain lower = lower_prod.apply(chi_lo);
        double scale = std::pow(static_cast<double>(n + 1 - k) / (n - k), n - k);
        double bracket =
            inner_product(X, m, upper, chi_hi) - scale * inner_product(X, m, lower, chi_hi);
        double bound = report.lambda * (n - k) *
                       static_cast<double>(per_level_constant(n, k)) * raw_pair;
        report.per_k_bracket.push_back(bracket);
        report.per_k_bound.push_back(bound);
        report.per_k_ok.push_back(std::abs(bracket) <= bound + kSumTol);
        report.per_k_product_norm.push_back(weighted_operator_norm(
            (upper_prod.matrix - scale * lower_prod.matrix).eval(), m.level(k)));
        double coeff =
            std::pow(static_cast<double>(n - k), n - k - 1) / static_cast<double>(factorial(n - k - 1));
        bracket_sum += coeff * bracket;
    }
    double scaled_bottom =
        std::pow(static_cast<double>(n + 1), n) / static_cast<double>(factorial(n)) * bottom;
    report.telescoping_residual = rel_residual(bracket_sum, report.measured - scaled_bottom);
    report.telescoping_ok = report.telescoping_residual <= kSumTol;

    Regularity reg = check_regularity(X, m, &partite);
    if (reg.per_side) {
        // Partite-regular count form; requires the homogeneous identity
        // m({v}) = n! K_i on every side.
        bool homogeneous = true;
        double nfact = static_cast<double>(factorial(n));
        for (int i = 0; i <= n && homogeneous; ++i)
            for (int v : sides[i]) {
                double mv = m.at(0, X.index_of(Simplex::of({v})));
                long long K_i = (*reg.per_side)[order[i]];
                if (std::abs(mv - nfact * static_cast<double>(K_i)) >
                    1e-9 * nfact * static_cast<double>(K_i)) {
                    homogeneous = false;
                    break;
                }
            }
        double ucount = static_cast<double>(simplices_spanning(X, sets).size());
        if (homogeneous && rel_residual(report.measured, ucount) <= kExactTol) {
            RegularForm form;
            form.K = (*reg.per_side)[order[0]];
            double count_ratio = 1;
            for (int i = 0; i <= n; ++i)
                count_ratio *= static_cast<double>(sets[i].size()) /
                               static_cast<double>(sides[i].size());
            form.count_lhs = std::abs(ucount / X.count(n) - count_ratio);
            form.count_rhs = static_cast<double>(report.constant) * report.lambda *
                             std::sqrt(static_cast<double>(sets[0].size()) /
                                       static_cast<double>(sides[0].size()) *
                                       static_cast<double>(sets[n].size()) /
                                       static_cast<double>(sides[n].size()));
            form.holds = form.count_lhs <= form.count_rhs + kSumTol;
            report.regular_form = form;
        }
    }

    report.ok = report.holds && report.telescoping_ok && report.enumeration_residual <= kExactTol;
    for (bool ok : report.per_k_ok)
        report.ok = report.ok && ok;
    if (report.regular_form)
        report.ok = report.ok && report.regular_form->holds;
    return report;
}

} // namespace hdx
