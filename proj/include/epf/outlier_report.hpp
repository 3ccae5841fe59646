#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string_view>
#include <utility>
#include <vector>

namespace epf {

enum class OutlierMethod { iqr, rpca, kde };

std::string_view to_string(OutlierMethod method);

/// Flagged data points from one detection pass. Matrix methods fill (row,
/// col) cell coordinates; sequence methods store the flat index in `row`
/// with `col` = -1. `values` holds the original data at each location.
struct OutlierReport {
    OutlierMethod method = OutlierMethod::iqr;
    std::vector<std::pair<Eigen::Index, Eigen::Index>> locations;
    std::vector<double> values;
    double threshold_used = 0.0;

    std::size_t size() const { return locations.size(); }
    bool empty() const { return locations.empty(); }
};

/// CSV with header `method,row,col,value,threshold`.
void write_outlier_csv(std::ostream& out, const OutlierReport& report);

} // namespace epf
