#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "epf/timestamp.hpp"

namespace epf {

/// One hourly record. Price may be negative (negative day-ahead prices are
/// valid data); load is NaN when the source had no usable value.
struct HourlyObservation {
    Timestamp time;
    double price = 0.0;
    double load = std::numeric_limits<double>::quiet_NaN();

    bool has_load() const { return !std::isnan(load); }
    bool operator==(const HourlyObservation&) const = default;
};

/// Ordered hourly series. Construction sorts by timestamp and collapses
/// duplicate timestamps by arithmetic mean (DST fall-back produces
/// legitimate duplicates in local-time data), so the stored sequence is
/// strictly increasing.
class SeriesTable {
public:
    SeriesTable() = default;

    static SeriesTable from_observations(std::vector<HourlyObservation> obs);

    const std::vector<HourlyObservation>& observations() const { return obs_; }
    std::size_t size() const { return obs_.size(); }
    bool empty() const { return obs_.empty(); }

    auto begin() const { return obs_.begin(); }
    auto end() const { return obs_.end(); }

    std::vector<double> prices() const;

    bool operator==(const SeriesTable&) const = default;

private:
    explicit SeriesTable(std::vector<HourlyObservation> obs) : obs_(std::move(obs)) {}
    std::vector<HourlyObservation> obs_;
};

} // namespace epf
