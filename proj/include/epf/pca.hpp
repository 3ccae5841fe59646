#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <string>

#include "epf/error.hpp"

namespace epf {

/// Principal component basis fitted to a data matrix. `loadings` holds the
/// top-k right singular vectors of the centered data (d x k, orthonormal);
/// `eigenvalues` is the full covariance spectrum (length d, non-increasing,
/// tail padded with zeros when rank < d), so explained-variance ratios are
/// available regardless of k.
template <typename Scalar>
struct PcaModelT {
    Eigen::VectorX<Scalar> center;
    Eigen::MatrixX<Scalar> loadings;
    Eigen::VectorX<Scalar> eigenvalues;
    Eigen::Index k = 0;
};

using PcaModel = PcaModelT<double>;

/// Fits by SVD of the centered matrix; eigenvalues are squared singular
/// values over (n - 1). Sign convention: the largest-magnitude entry of
/// each loading is positive, so the output is deterministic.
template <typename Scalar>
PcaModelT<Scalar> pca_fit(const Eigen::MatrixX<Scalar>& x, Eigen::Index k) {
    if (x.rows() < 2) throw InsufficientDataError("pca_fit needs at least 2 rows");
    if (k < 1 || k > x.cols())
        throw DomainError("pca_fit: k must be in [1, " + std::to_string(x.cols()) + "]");

    PcaModelT<Scalar> model;
    model.k = k;
    model.center = x.colwise().mean();
    const Eigen::MatrixX<Scalar> centered = x.rowwise() - model.center.transpose();

    Eigen::JacobiSVD<Eigen::MatrixX<Scalar>> svd(centered,
                                                 Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();

    model.eigenvalues = Eigen::VectorX<Scalar>::Zero(x.cols());
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        model.eigenvalues(i) = sv(i) * sv(i) / static_cast<Scalar>(x.rows() - 1);

    model.loadings = svd.matrixV().leftCols(k);
    for (Eigen::Index j = 0; j < k; ++j) {
        Eigen::Index which = 0;
        model.loadings.col(j).cwiseAbs().maxCoeff(&which);
        if (model.loadings(which, j) < Scalar(0)) model.loadings.col(j) = -model.loadings.col(j);
    }
    return model;
}

/// Projects rows onto the component basis: (x - center) * loadings.
template <typename Scalar>
Eigen::MatrixX<Scalar> pca_transform(const PcaModelT<Scalar>& model,
                                     const Eigen::MatrixX<Scalar>& x) {
    if (x.cols() != model.center.size())
        throw DimensionError("pca_transform: column count mismatch");
    return (x.rowwise() - model.center.transpose()) * model.loadings;
}

/// Maps scores back to the original space: scores * loadings^T + center.
template <typename Scalar>
Eigen::MatrixX<Scalar> pca_reconstruct(const PcaModelT<Scalar>& model,
                                       const Eigen::MatrixX<Scalar>& scores) {
    if (scores.cols() != model.k) throw DimensionError("pca_reconstruct: score width mismatch");
    return (scores * model.loadings.transpose()).rowwise() + model.center.transpose();
}

/// eigenvalue_i / total variance, over all d components. Zero spectrum
/// yields all zeros.
template <typename Scalar>
Eigen::VectorX<Scalar> explained_variance_ratio(const PcaModelT<Scalar>& model) {
    const Scalar total = model.eigenvalues.sum();
    if (total <= Scalar(0)) return Eigen::VectorX<Scalar>::Zero(model.eigenvalues.size());
    return model.eigenvalues / total;
}

} // namespace epf
