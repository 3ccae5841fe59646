#pragma once

#include <Eigen/Dense>
#include <span>
#include <string>
#include <vector>

#include "epf/error.hpp"

namespace epf {

struct RegressionModel {
    double intercept = 0.0;
    Eigen::VectorXd coefficients;
    std::vector<std::string> feature_names;
};

/// Least-squares fit with intercept via column-pivoted Householder QR (no
/// normal equations). The design is rank deficient when the smallest
/// R-diagonal falls below 1e-10 times the largest; the error names the
/// offending column.
RegressionModel ols_fit(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                        std::span<const std::string> feature_names = {});

Eigen::VectorXd predict(const RegressionModel& model, const Eigen::MatrixXd& x);

double rmse(const Eigen::VectorXd& actual, const Eigen::VectorXd& predicted);

/// 1 - SS_res / SS_tot about the mean of `actual`; undefined for constant
/// actuals.
double r2(const Eigen::VectorXd& actual, const Eigen::VectorXd& predicted);

} // namespace epf
