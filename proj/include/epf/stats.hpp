#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "epf/error.hpp"
#include "epf/series.hpp"

namespace epf {

template <std::floating_point T>
T mean(std::span<const T> values) {
    if (values.empty()) throw EmptyInputError("mean of empty sequence");
    T sum = 0;
    for (T v : values) sum += v;
    return sum / static_cast<T>(values.size());
}

/// Sample standard deviation, divisor n-1; zero for n < 2.
template <std::floating_point T>
T sample_std(std::span<const T> values) {
    if (values.empty()) throw EmptyInputError("sample_std of empty sequence");
    if (values.size() < 2) return T(0);
    const T m = mean(values);
    T ss = 0;
    for (T v : values) ss += (v - m) * (v - m);
    return std::sqrt(ss / static_cast<T>(values.size() - 1));
}

/// Quantile by linear interpolation between order statistics: the value at
/// position (n-1)*p of the sorted data.
template <std::floating_point T>
T quantile_sorted(std::span<const T> sorted, double p) {
    if (sorted.empty()) throw EmptyInputError("quantile of empty sequence");
    if (p < 0.0 || p > 1.0) throw DomainError("quantile fraction outside [0, 1]");
    const double pos = static_cast<double>(sorted.size() - 1) * p;
    const auto lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= sorted.size()) return sorted[sorted.size() - 1];
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + static_cast<T>(frac) * (sorted[lo + 1] - sorted[lo]);
}

template <std::floating_point T>
T quantile(std::span<const T> values, double p) {
    std::vector<T> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    return quantile_sorted(std::span<const T>(sorted), p);
}

/// Product-moment correlation. Requires equal lengths >= 2 and non-constant
/// inputs.
double pearson_correlation(std::span<const double> x, std::span<const double> y);

/// One row of the per-year price summary.
struct StatsRow {
    int year = 0;
    std::int64_t count = 0;
    double mean = 0.0;
    double std = 0.0;
    double min = 0.0;
    double max = 0.0;
};

StatsRow yearly_descriptive_stats(const SeriesTable& series, int year);

/// Stats for every calendar year present in the series, ascending.
std::vector<StatsRow> all_yearly_stats(const SeriesTable& series);

/// CSV with header `year,count,mean,std,min,max`.
void write_stats_csv(std::ostream& out, std::span<const StatsRow> rows);

} // namespace epf
