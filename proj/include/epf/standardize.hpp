#pragma once

#include <Eigen/Dense>
#include <span>
#include <string_view>

namespace epf {

/// Per-column centering and scaling by sample standard deviation. Fitting
/// rejects zero-variance columns, so transform never divides by zero.
class Standardizer {
public:
    Standardizer() = default;

    static Standardizer fit(const Eigen::MatrixXd& x,
                            std::span<const std::string_view> column_names = {});

    Eigen::MatrixXd transform(const Eigen::MatrixXd& x) const;
    Eigen::MatrixXd inverse(const Eigen::MatrixXd& z) const;

    const Eigen::VectorXd& means() const { return means_; }
    const Eigen::VectorXd& scales() const { return scales_; }
    Eigen::Index columns() const { return means_.size(); }

private:
    Standardizer(Eigen::VectorXd means, Eigen::VectorXd scales)
        : means_(std::move(means)), scales_(std::move(scales)) {}

    Eigen::VectorXd means_;
    Eigen::VectorXd scales_;
};

} // namespace epf
