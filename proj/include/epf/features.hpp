#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "epf/outlier_report.hpp"
#include "epf/price_matrix.hpp"
#include "epf/series.hpp"

namespace epf {

/// One training example for the hourly price model: yesterday's price and
/// load for the target hour, yesterday's daily-average load, and calendar
/// ordinals of the target date.
struct FeatureRow {
    double yday_price = 0.0;
    double yday_load = 0.0;
    double yave_load = 0.0;
    int month = 0; // 1..12
    int dow = 0;   // Monday = 1 .. Sunday = 7
    int dom = 0;   // 1..31
    int doy = 0;   // 1..366
    double target_price = 0.0;
    Timestamp time; // the target hour
};

/// Chronologically ordered feature rows with a fixed column order.
struct FeatureMatrix {
    static constexpr std::array<std::string_view, 7> column_names = {
        "yday_price", "yday_load", "yave_load", "month", "dow", "dom", "doy"};

    std::vector<FeatureRow> rows;

    std::size_t size() const { return rows.size(); }
    bool empty() const { return rows.empty(); }

    /// n x 7 numeric design matrix in column_names order.
    Eigen::MatrixXd design() const;
    Eigen::VectorXd targets() const;
};

/// Hour keys of observations excluded from analysis.
using RemovedSet = std::unordered_set<std::int64_t>;

/// Flat-index report (iqr, kde) over the series' observation order.
RemovedSet removed_from_report(const OutlierReport& report, const SeriesTable& series);

/// Cell report (rpca) over a price matrix.
RemovedSet removed_from_report(const OutlierReport& report, const PriceMatrix& matrix);

/// Builds one row per target hour that has a same-hour observation exactly
/// 24 hours earlier. yave_load is the mean of the previous calendar day's
/// loads over observations that are present, carry a load value, and were
/// not removed. Rows whose target or yesterday observation was removed are
/// omitted, as is the first day (no history).
FeatureMatrix build_features(const SeriesTable& series, const RemovedSet& removed = {});

} // namespace epf
