#include "epf/regression.hpp"

#include <cmath>

namespace epf {

RegressionModel ols_fit(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                        std::span<const std::string> feature_names) {
    if (x.rows() != y.size()) throw DimensionError("ols_fit: row count of x must match y");
    if (x.rows() <= x.cols() + 1)
        throw InsufficientDataError("ols_fit: need more rows than parameters");

    Eigen::MatrixXd design(x.rows(), x.cols() + 1);
    design.col(0).setOnes();
    design.rightCols(x.cols()) = x;

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    const Eigen::MatrixXd& r = qr.matrixR();
    const double largest = std::abs(r(0, 0));
    for (Eigen::Index i = 0; i < design.cols(); ++i) {
        if (std::abs(r(i, i)) < 1e-10 * largest) {
            // With pivoting the dependent columns sort to the back; name the
            // original column the failing diagonal maps to.
            const Eigen::Index original = qr.colsPermutation().indices()(i);
            std::string name;
            if (original == 0) {
                name = "intercept";
            } else {
                const auto fi = static_cast<std::size_t>(original - 1);
                name = fi < feature_names.size() ? feature_names[fi]
                                                 : "column " + std::to_string(original - 1);
            }
            throw RankError("ols_fit: design matrix is rank deficient at " + name);
        }
    }

    const Eigen::VectorXd beta = qr.solve(y);
    RegressionModel model;
    model.intercept = beta(0);
    model.coefficients = beta.tail(x.cols());
    model.feature_names.assign(feature_names.begin(), feature_names.end());
    return model;
}

Eigen::VectorXd predict(const RegressionModel& model, const Eigen::MatrixXd& x) {
    if (x.cols() != model.coefficients.size())
        throw DimensionError("predict: column count mismatch");
    return (x * model.coefficients).array() + model.intercept;
}

double rmse(const Eigen::VectorXd& actual, const Eigen::VectorXd& predicted) {
    if (actual.size() != predicted.size()) throw DimensionError("rmse: length mismatch");
    if (actual.size() == 0) throw EmptyInputError("rmse: empty input");
    return std::sqrt((actual - predicted).squaredNorm() / static_cast<double>(actual.size()));
}

double r2(const Eigen::VectorXd& actual, const Eigen::VectorXd& predicted) {
    if (actual.size() != predicted.size()) throw DimensionError("r2: length mismatch");
    if (actual.size() < 2) throw EmptyInputError("r2: need at least 2 points");
    const double mean = actual.mean();
    const double ss_tot = (actual.array() - mean).square().sum();
    if (ss_tot == 0.0) throw DomainError("r2 undefined for constant actuals");
    const double ss_res = (actual - predicted).squaredNorm();
    return 1.0 - ss_res / ss_tot;
}

} // namespace epf
