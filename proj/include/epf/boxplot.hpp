#pragma once

#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "epf/series.hpp"

namespace epf {

enum class BoxplotGroupBy { hour, year };

/// Tukey five-number summary of one group: fences at 1.5*IQR, whiskers at
/// the most extreme data inside the fences, everything outside reported as
/// outliers.
struct BoxplotStats {
    int group = 0; // hour of day or calendar year
    std::size_t count = 0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double whisker_low = 0.0;
    double whisker_high = 0.0;
    std::vector<double> outliers;
};

std::vector<BoxplotStats> boxplot_stats(const SeriesTable& series, BoxplotGroupBy group_by);

/// CSV: `group,count,q1,median,q3,whisker_low,whisker_high,outliers` with
/// outlier values joined by ';'.
void write_boxplot_csv(std::ostream& out, std::span<const BoxplotStats> stats);

/// Static SVG figure, one box per group.
void write_boxplot_svg(std::ostream& out, std::span<const BoxplotStats> stats,
                       std::string_view title);

} // namespace epf
