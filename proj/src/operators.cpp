#include "hdx/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hdx {

Cochain LinearOperatorHandle::apply(const Cochain& phi) const {
    if (phi.level != domain_level)
        throw std::invalid_argument("operator applied at the wrong level");
    return {codomain_level, matrix * phi.values};
}

double operator_deviation(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("operator shapes differ");
    double worst = 0;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            double scale = 1.0 + std::abs(a(i, j)) + std::abs(b(i, j));
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)) / scale);
        }
    return worst;
}

LinearOperatorHandle differential_matrix(const SimplicialComplex& X, int k) {
    if (k < -1 || k >= X.dimension())
        throw std::invalid_argument("differential level out of range");
    LinearOperatorHandle op{k, k + 1, false,
                            Eigen::MatrixXd::Zero(X.count(k + 1), X.count(k))};
    for (int i = 0; i < X.count(k + 1); ++i)
        for (int fi : X.faces(k + 1, i))
            op.matrix(i, fi) += 1.0;
    return op;
}

LinearOperatorHandle codifferential_matrix(const SimplicialComplex& X,
                                           const WeightFunction& m, int k) {
    if (k < -1 || k >= X.dimension())
        throw std::invalid_argument("codifferential level out of range");
    LinearOperatorHandle op{k + 1, k, false,
                            Eigen::MatrixXd::Zero(X.count(k), X.count(k + 1))};
    for (int i = 0; i < X.count(k); ++i)
        for (int ci : X.cofaces(k, i))
            op.matrix(i, ci) += m.at(k + 1, ci) / m.at(k, i);
    return op;
}

LinearOperatorHandle upper_walk(const SimplicialComplex& X, const WeightFunction& m, int k) {
    if (k < 0 || k > X.dimension() - 1)
        throw std::invalid_argument("upper walk needs 0 <= k <= n-1");
    int size = X.count(k);
    LinearOperatorHandle op{k, k, true, Eigen::MatrixXd::Zero(size, size)};
    op.matrix.diagonal().setConstant(1.0 / (k + 2));
    // For tau != tau' with tau u tau' in X(k+1), the coface is unique, so
    // every off-diagonal entry is written exactly once.
    for (int ci = 0; ci < X.count(k + 1); ++ci) {
        const auto& fs = X.faces(k + 1, ci);
        double w = m.at(k + 1, ci);
        for (int a : fs)
            for (int b : fs)
                if (a != b)
                    op.matrix(a, b) = w / ((k + 2) * m.at(k, a));
    }
    return op;
}

LinearOperatorHandle lower_walk(const SimplicialComplex& X, const WeightFunction& m, int k) {
    if (k < 0 || k > X.dimension())
        throw std::invalid_argument("lower walk needs 0 <= k <= n");
    int size = X.count(k);
    LinearOperatorHandle op{k, k, true, Eigen::MatrixXd::Zero(size, size)};
    for (int i = 0; i < size; ++i) {
        double diag = 0;
        for (int fi : X.faces(k, i))
            diag += m.at(k, i) / m.at(k - 1, fi);
        op.matrix(i, i) = diag / (k + 1);
    }
    // Distinct tau, tau' sharing the (k-1)-face eta have tau n tau' = eta.
    for (int fi = 0; fi < X.count(k - 1); ++fi) {
        const auto& cs = X.cofaces(k - 1, fi);
        for (int a : cs)
            for (int b : cs)
                if (a != b)
                    op.matrix(a, b) = m.at(k, b) / ((k + 1) * m.at(k - 1, fi));
    }
    return op;
}

LinearOperatorHandle nonlazy_upper_walk(const SimplicialComplex& X,
                                        const WeightFunction& m, int k) {
    LinearOperatorHandle op = upper_walk(X, m, k);
    double c = static_cast<double>(k + 2) / (k + 1);
    op.matrix *= c;
    op.matrix.diagonal().array() -= 1.0 / (k + 1);
    return op;
}

double mean_value(const SimplicialComplex& X, const WeightFunction& m, const Cochain& phi) {
    if (phi.level != 0)
        throw std::invalid_argument("mean_value is defined on 0-cochains");
    double num = 0, den = 0;
    for (int i = 0; i < X.count(0); ++i) {
        num += m.at(0, i) * phi.values[i];
        den += m.at(0, i);
    }
    return num / den;
}

LinearOperatorHandle set_projection(const SimplicialComplex& X,
                                    const std::vector<std::vector<int>>& parts) {
    int k = static_cast<int>(parts.size()) - 1;
    auto hits = simplices_spanning(X, parts);
    LinearOperatorHandle op{k, k, true, Eigen::MatrixXd::Zero(X.count(k), X.count(k))};
    for (int i : hits)
        op.matrix(i, i) = 1.0;
    return op;
}

LinearOperatorHandle partite_projection(const SimplicialComplex& X, const WeightFunction& m,
                                        const PartiteStructure& partite) {
    int nv = X.count(0);
    LinearOperatorHandle op{0, 0, true, Eigen::MatrixXd::Zero(nv, nv)};
    std::vector<double> side_weight(partite.side_count(), 0.0);
    std::vector<int> side_of_idx(nv);
    for (int i = 0; i < nv; ++i) {
        int side = partite.side_of.at(X.simplex(0, i).vertices()[0]);
        side_of_idx[i] = side;
        side_weight[side] += m.at(0, i);
    }
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j)
            if (side_of_idx[i] == side_of_idx[j])
                op.matrix(i, j) = m.at(0, j) / side_weight[side_of_idx[i]];
    return op;
}

namespace {

// Weighted operator norm of a self-adjoint PSD operator: its largest
// eigenvalue, via the diag(sqrt(m)) conjugation.
double weighted_psd_norm(const Eigen::MatrixXd& A, const std::vector<double>& weights) {
    Eigen::VectorXd m =
        Eigen::Map<const Eigen::VectorXd>(weights.data(), static_cast<Eigen::Index>(weights.size()));
    Eigen::VectorXd sqrt_m = m.array().sqrt();
    Eigen::MatrixXd sym = sqrt_m.asDiagonal() * A * sqrt_m.cwiseInverse().asDiagonal();
    sym = ((sym + sym.transpose()) / 2).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigensolver failed to converge");
    return solver.eigenvalues().cwiseAbs().maxCoeff();
}

} // namespace

std::pair<LinearOperatorHandle, LinearOperatorHandle>
compose_check_dstar_d(const SimplicialComplex& X, const WeightFunction& m, int k) {
    if (k < 0 || k > X.dimension() - 1)
        throw std::invalid_argument("compose_check_dstar_d needs 0 <= k <= n-1");

    LinearOperatorHandle up{k, k, true,
                            codifferential_matrix(X, m, k).matrix *
                                differential_matrix(X, k).matrix};
    LinearOperatorHandle down{k, k, true,
                              differential_matrix(X, k - 1).matrix *
                                  codifferential_matrix(X, m, k - 1).matrix};

    double dev_up = operator_deviation(up.matrix, ((k + 2) * upper_walk(X, m, k).matrix).eval());
    double dev_down =
        operator_deviation(down.matrix, ((k + 1) * lower_walk(X, m, k).matrix).eval());
    if (dev_up > 1e-10)
        throw std::runtime_error("d*_k d_k != (k+2) M+_k, deviation " + std::to_string(dev_up));
    if (dev_down > 1e-10)
        throw std::runtime_error("d_{k-1} d*_{k-1} != (k+1) M-_k, deviation " +
                                 std::to_string(dev_down));

    double norm_up = weighted_psd_norm(up.matrix, m.level(k));
    double norm_down = weighted_psd_norm(down.matrix, m.level(k));
    if (std::abs(norm_up - (k + 2)) > 1e-10 * (k + 2))
        throw std::runtime_error("|d*_k d_k| != k+2");
    if (std::abs(norm_down - (k + 1)) > 1e-10 * (k + 1))
        throw std::runtime_error("|d_{k-1} d*_{k-1}| != k+1");
    return {up, down};
}

} // namespace hdx
