#pragma once

#include <Eigen/Dense>
#include <vector>

#include "epf/series.hpp"

namespace epf {

/// Day-by-hour price layout: one row per calendar date, 24 columns.
/// `mask(i, j)` is true where the input had no observation; such cells hold
/// the mean of the day's present hours so downstream solvers see a complete
/// matrix.
struct PriceMatrix {
    Eigen::MatrixXd values;                        // n_days x 24
    std::vector<std::chrono::sys_days> day_index;  // row -> calendar date
    Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> mask;

    Eigen::Index rows() const { return values.rows(); }

    Timestamp cell_time(Eigen::Index row, Eigen::Index col) const {
        return Timestamp{day_index.at(static_cast<std::size_t>(row)), static_cast<int>(col)};
    }
};

PriceMatrix build_price_matrix(const SeriesTable& series);

} // namespace epf
