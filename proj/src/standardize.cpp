#include "epf/standardize.hpp"

#include <string>

#include "epf/error.hpp"

namespace epf {

Standardizer Standardizer::fit(const Eigen::MatrixXd& x,
                               std::span<const std::string_view> column_names) {
    if (x.rows() < 2) throw InsufficientDataError("Standardizer::fit needs at least 2 rows");

    Eigen::VectorXd means = x.colwise().mean();
    Eigen::VectorXd scales(x.cols());
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
        if (x.col(j).maxCoeff() == x.col(j).minCoeff()) {
            const std::string name = static_cast<std::size_t>(j) < column_names.size()
                                         ? std::string(column_names[static_cast<std::size_t>(j)])
                                         : "column " + std::to_string(j);
            throw DomainError("zero-variance feature: " + name);
        }
        scales(j) = std::sqrt((x.col(j).array() - means(j)).square().sum() /
                              static_cast<double>(x.rows() - 1));
    }
    return Standardizer(std::move(means), std::move(scales));
}

Eigen::MatrixXd Standardizer::transform(const Eigen::MatrixXd& x) const {
    if (x.cols() != means_.size())
        throw DimensionError("Standardizer::transform: column count mismatch");
    return (x.rowwise() - means_.transpose()).array().rowwise() /
           scales_.transpose().array();
}

Eigen::MatrixXd Standardizer::inverse(const Eigen::MatrixXd& z) const {
    if (z.cols() != means_.size())
        throw DimensionError("Standardizer::inverse: column count mismatch");
    return (z.array().rowwise() * scales_.transpose().array()).matrix().rowwise() +
           means_.transpose();
}

} // namespace epf
