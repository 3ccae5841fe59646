#include "epf/stats.hpp"

#include <ostream>
#include <set>

#include "epf/csv.hpp"

namespace epf {

double pearson_correlation(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw DimensionError("pearson_correlation: length mismatch (" +
                             std::to_string(x.size()) + " vs " + std::to_string(y.size()) + ")");
    if (x.size() < 2) throw EmptyInputError("pearson_correlation needs at least 2 points");
    const double mx = mean(x);
    const double my = mean(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw DomainError("pearson_correlation undefined for constant input");
    return sxy / std::sqrt(sxx * syy);
}

StatsRow yearly_descriptive_stats(const SeriesTable& series, int year) {
    std::vector<double> prices;
    for (const auto& o : series)
        if (year_of(o.time) == year) prices.push_back(o.price);
    if (prices.empty())
        throw EmptyInputError("no observations in year " + std::to_string(year));

    StatsRow row;
    row.year = year;
    row.count = static_cast<std::int64_t>(prices.size());
    row.mean = mean(std::span<const double>(prices));
    row.std = sample_std(std::span<const double>(prices));
    row.min = *std::min_element(prices.begin(), prices.end());
    row.max = *std::max_element(prices.begin(), prices.end());
    return row;
}

std::vector<StatsRow> all_yearly_stats(const SeriesTable& series) {
    std::set<int> years;
    for (const auto& o : series) years.insert(year_of(o.time));
    std::vector<StatsRow> rows;
    rows.reserve(years.size());
    for (int y : years) rows.push_back(yearly_descriptive_stats(series, y));
    return rows;
}

void write_stats_csv(std::ostream& out, std::span<const StatsRow> rows) {
    out << "year,count,mean,std,min,max\n";
    for (const auto& r : rows) {
        out << r.year << ',' << r.count << ',' << format_double(r.mean) << ','
            << format_double(r.std) << ',' << format_double(r.min) << ','
            << format_double(r.max) << '\n';
    }
}

} // namespace epf
