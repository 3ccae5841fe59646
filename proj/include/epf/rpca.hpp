#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <filesystem>
#include <vector>

#include "epf/error.hpp"
#include "epf/outlier_report.hpp"
#include "epf/price_matrix.hpp"

namespace epf {

/// lambda = 1/sqrt(n) with n the number of observations (cells) of the
/// data matrix.
inline double default_lambda(std::size_t n) {
    if (n == 0) throw DomainError("default_lambda: n must be >= 1");
    return 1.0 / std::sqrt(static_cast<double>(n));
}

/// How the pursuit weight is chosen for a rows x cols matrix.
enum class LambdaMode {
    paper,          // 1/sqrt(rows*cols)
    max_dim,        // 1/sqrt(max(rows, cols))
    explicit_value, // caller-provided
};

inline double resolve_lambda(LambdaMode mode, Eigen::Index rows, Eigen::Index cols,
                             double explicit_value = 0.0) {
    switch (mode) {
        case LambdaMode::paper:
            return default_lambda(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
        case LambdaMode::max_dim:
            return default_lambda(static_cast<std::size_t>(std::max(rows, cols)));
        case LambdaMode::explicit_value:
            if (explicit_value <= 0.0) throw DomainError("explicit lambda must be positive");
            return explicit_value;
    }
    throw DomainError("unknown lambda mode");
}

/// Elementwise soft-thresholding: sign(x) * max(|x| - tau, 0).
template <typename Derived>
Eigen::MatrixX<typename Derived::Scalar> soft_threshold(const Eigen::MatrixBase<Derived>& x,
                                                        typename Derived::Scalar tau) {
    using Scalar = typename Derived::Scalar;
    return x.array().sign() * (x.array().abs() - tau).cwiseMax(Scalar(0));
}

template <typename Scalar>
struct SvtResult {
    Eigen::MatrixX<Scalar> value;
    Eigen::Index rank = 0; // singular values surviving the threshold
};

/// Singular value thresholding, the proximal operator of the nuclear norm:
/// soft-thresholds the singular values of `a` at `tau` and reconstructs.
/// Solves min_X tau*||X||_* + 1/2*||X - A||_F^2.
template <typename Derived>
SvtResult<typename Derived::Scalar> singular_value_threshold(
    const Eigen::MatrixBase<Derived>& a, typename Derived::Scalar tau) {
    using Scalar = typename Derived::Scalar;
    Eigen::JacobiSVD<Eigen::MatrixX<Scalar>> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    Eigen::VectorX<Scalar> sv = svd.singularValues();
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        sv(i) = std::max(sv(i) - tau, Scalar(0));
        if (sv(i) > Scalar(0)) ++rank;
    }
    SvtResult<Scalar> result;
    result.rank = rank;
    result.value = svd.matrixU().leftCols(rank) * sv.head(rank).asDiagonal() *
                   svd.matrixV().leftCols(rank).transpose();
    if (rank == 0) result.value = Eigen::MatrixX<Scalar>::Zero(a.rows(), a.cols());
    return result;
}

template <typename Scalar>
struct RpcaOptions {
    Scalar lambda{};
    Scalar tolerance = Scalar(1e-7);
    int max_iterations = 500;
};

/// Low-rank / sparse split of a data matrix with solver diagnostics.
/// `residual` is ||M - L - S||_F / ||M||_F at the returned iterate;
/// `residual_trace` holds that value for every iteration.
template <typename Scalar>
struct SparseDecompositionT {
    Eigen::MatrixX<Scalar> low_rank;
    Eigen::MatrixX<Scalar> sparse;
    Scalar lambda{};
    int iterations = 0;
    bool converged = false;
    Scalar residual{};
    std::vector<Scalar> residual_trace;
};

using SparseDecomposition = SparseDecompositionT<double>;

/// Principal component pursuit, min ||L||_* + lambda*||S||_1 s.t. M = L + S,
/// by the inexact augmented Lagrangian method: alternate singular value
/// thresholding on L (threshold 1/mu) and elementwise soft-thresholding on
/// S (threshold lambda/mu), then update the dual Y += mu*(M - L - S) and
/// grow mu geometrically. mu starts at 1.25/sigma_1(M), grows by 1.5 per
/// iteration, and saturates at 1e7 times its initial value. Deterministic
/// for fixed inputs.
template <typename Scalar>
SparseDecompositionT<Scalar> rpca_decompose(const Eigen::MatrixX<Scalar>& m,
                                            const RpcaOptions<Scalar>& options) {
    if (m.rows() < 1 || m.cols() < 1) throw EmptyInputError("rpca_decompose: empty matrix");
    if (!m.allFinite()) throw DomainError("rpca_decompose: non-finite entries in input");
    if (options.lambda <= Scalar(0)) throw DomainError("rpca_decompose: lambda must be positive");
    if (options.tolerance <= Scalar(0))
        throw DomainError("rpca_decompose: tolerance must be positive");

    SparseDecompositionT<Scalar> d;
    d.lambda = options.lambda;

    const Scalar m_fro = m.norm();
    if (m_fro == Scalar(0)) {
        d.low_rank = Eigen::MatrixX<Scalar>::Zero(m.rows(), m.cols());
        d.sparse = d.low_rank;
        d.converged = true;
        d.residual = Scalar(0);
        d.residual_trace.push_back(Scalar(0));
        d.iterations = 1;
        return d;
    }

    Eigen::JacobiSVD<Eigen::MatrixX<Scalar>> spectral(m);
    const Scalar sigma1 = spectral.singularValues()(0);
    Scalar mu = Scalar(1.25) / sigma1;
    const Scalar mu_cap = mu * Scalar(1e7);
    const Scalar growth = Scalar(1.5);

    // Dual scaled so that <Y, M> starts at its feasible maximum
    // (Lin et al. initialization: Y = M / max(sigma_1, ||M||_inf / lambda)).
    const Scalar m_inf = m.template lpNorm<Eigen::Infinity>();
    const Scalar j = std::max(sigma1, m_inf / options.lambda);
    Eigen::MatrixX<Scalar> y = m / j;

    Eigen::MatrixX<Scalar> low_rank = Eigen::MatrixX<Scalar>::Zero(m.rows(), m.cols());
    Eigen::MatrixX<Scalar> sparse = low_rank;

    for (int it = 1; it <= options.max_iterations; ++it) {
        low_rank = singular_value_threshold((m - sparse + y / mu).eval(), Scalar(1) / mu).value;
        sparse = soft_threshold((m - low_rank + y / mu).eval(), options.lambda / mu);

        const Eigen::MatrixX<Scalar> gap = m - low_rank - sparse;
        const Scalar residual = gap.norm() / m_fro;
        d.residual_trace.push_back(residual);
        d.iterations = it;
        if (residual <= options.tolerance) {
            d.converged = true;
            break;
        }
        y += mu * gap;
        mu = std::min(mu * growth, mu_cap);
    }

    d.low_rank = std::move(low_rank);
    d.sparse = std::move(sparse);
    d.residual = d.residual_trace.back();
    return d;
}

SparseDecomposition rpca_decompose(const PriceMatrix& m, const RpcaOptions<double>& options);

/// Cells whose sparse-component magnitude exceeds delta_factor * max|M|.
/// The report carries the original data values; imputed (masked) cells are
/// never flagged. Soft-thresholding leaves exact zeros off the sparse
/// support, so the default factor only has to clear numerical dust.
OutlierReport sparse_outliers(const SparseDecomposition& decomposition,
                              const PriceMatrix& source, double delta_factor = 1e-6);

/// Writes `low_rank.csv`, `sparse.csv` and `meta.json` (lambda, iterations,
/// converged, residual) into `dir`, creating it if needed.
void write_decomposition(const std::filesystem::path& dir,
                         const SparseDecomposition& decomposition);

void write_matrix_csv(std::ostream& out, const Eigen::MatrixXd& m);
Eigen::MatrixXd read_matrix_csv(std::istream& in);

} // namespace epf
