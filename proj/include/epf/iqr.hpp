#pragma once

#include <concepts>
#include <span>
#include <vector>

#include "epf/outlier_report.hpp"
#include "epf/stats.hpp"

namespace epf {

/// Tukey fences: [q1 - k*iqr, q3 + k*iqr] with interpolated quartiles.
template <std::floating_point T>
struct IqrBounds {
    T q1{}, q3{}, iqr{};
    T lower{}, upper{};
    T k{};

    bool inside(T v) const { return v >= lower && v <= upper; }
};

template <std::floating_point T>
IqrBounds<T> iqr_bounds(std::span<const T> values, T k = T(1.5)) {
    if (values.empty()) throw EmptyInputError("iqr_bounds: empty input");
    std::vector<T> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    IqrBounds<T> b;
    b.q1 = quantile_sorted(std::span<const T>(sorted), 0.25);
    b.q3 = quantile_sorted(std::span<const T>(sorted), 0.75);
    b.iqr = b.q3 - b.q1;
    b.lower = b.q1 - k * b.iqr;
    b.upper = b.q3 + k * b.iqr;
    b.k = k;
    return b;
}

struct IqrFilterResult {
    std::vector<double> kept;  // input order preserved
    OutlierReport report;      // flat indices into the input
    IqrBounds<double> bounds;
};

/// Splits values into those inside the fences and those strictly outside.
IqrFilterResult iqr_filter(std::span<const double> values, double k = 1.5);

} // namespace epf
