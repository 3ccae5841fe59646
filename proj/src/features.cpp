#include "epf/features.hpp"

#include <map>

#include "epf/error.hpp"

namespace epf {

Eigen::MatrixXd FeatureMatrix::design() const {
    Eigen::MatrixXd x(static_cast<Eigen::Index>(rows.size()), 7);
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        const auto& r = rows[static_cast<std::size_t>(i)];
        x(i, 0) = r.yday_price;
        x(i, 1) = r.yday_load;
        x(i, 2) = r.yave_load;
        x(i, 3) = r.month;
        x(i, 4) = r.dow;
        x(i, 5) = r.dom;
        x(i, 6) = r.doy;
    }
    return x;
}

Eigen::VectorXd FeatureMatrix::targets() const {
    Eigen::VectorXd y(static_cast<Eigen::Index>(rows.size()));
    for (Eigen::Index i = 0; i < y.size(); ++i)
        y(i) = rows[static_cast<std::size_t>(i)].target_price;
    return y;
}

RemovedSet removed_from_report(const OutlierReport& report, const SeriesTable& series) {
    RemovedSet removed;
    const auto& obs = series.observations();
    for (const auto& [row, col] : report.locations) {
        if (col != -1) throw DimensionError("expected flat-index outlier report");
        if (row < 0 || static_cast<std::size_t>(row) >= obs.size())
            throw DimensionError("outlier index out of range of series");
        removed.insert(obs[static_cast<std::size_t>(row)].time.hour_key());
    }
    return removed;
}

RemovedSet removed_from_report(const OutlierReport& report, const PriceMatrix& matrix) {
    RemovedSet removed;
    for (const auto& [row, col] : report.locations) {
        if (row < 0 || row >= matrix.rows() || col < 0 || col >= 24)
            throw DimensionError("outlier cell out of range of price matrix");
        removed.insert(matrix.cell_time(row, col).hour_key());
    }
    return removed;
}

FeatureMatrix build_features(const SeriesTable& series, const RemovedSet& removed) {
    if (series.empty()) throw InsufficientDataError("build_features: empty series");
    const auto first_day = series.observations().front().time.day;
    const auto last_day = series.observations().back().time.day;
    if (last_day - first_day < std::chrono::days{1})
        throw InsufficientDataError("build_features: series must span at least 2 days");

    const auto is_removed = [&](const Timestamp& t) {
        return removed.contains(t.hour_key());
    };

    // Per-observation lookup and per-day load means over usable records.
    std::map<std::int64_t, const HourlyObservation*> by_hour;
    std::map<std::chrono::sys_days, std::pair<double, int>> day_load;
    for (const auto& o : series) {
        if (is_removed(o.time)) continue;
        by_hour.emplace(o.time.hour_key(), &o);
        if (o.has_load()) {
            auto& [sum, n] = day_load[o.time.day];
            sum += o.load;
            ++n;
        }
    }

    FeatureMatrix features;
    for (const auto& o : series) {
        if (o.time.day == first_day) continue;
        if (is_removed(o.time)) continue;
        const auto yesterday = by_hour.find(o.time.prev_day().hour_key());
        if (yesterday == by_hour.end()) continue;
        const auto* yobs = yesterday->second;
        if (!yobs->has_load()) continue;
        const auto yload = day_load.find(yobs->time.day);
        if (yload == day_load.end() || yload->second.second == 0) continue;

        FeatureRow row;
        row.yday_price = yobs->price;
        row.yday_load = yobs->load;
        row.yave_load = yload->second.first / yload->second.second;
        row.month = month_of(o.time);
        row.dow = day_of_week(o.time);
        row.dom = day_of_month(o.time);
        row.doy = day_of_year(o.time);
        row.target_price = o.price;
        row.time = o.time;
        features.rows.push_back(row);
    }
    return features;
}

} // namespace epf
