#include "epf/boxplot.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <ostream>

#include "epf/csv.hpp"
#include "epf/iqr.hpp"

namespace epf {

std::vector<BoxplotStats> boxplot_stats(const SeriesTable& series, BoxplotGroupBy group_by) {
    if (series.empty()) throw EmptyInputError("boxplot_stats: empty series");

    std::map<int, std::vector<double>> groups;
    for (const auto& o : series) {
        const int key = group_by == BoxplotGroupBy::hour ? o.time.hour : year_of(o.time);
        groups[key].push_back(o.price);
    }

    std::vector<BoxplotStats> result;
    result.reserve(groups.size());
    for (auto& [key, values] : groups) {
        std::sort(values.begin(), values.end());
        const std::span<const double> sorted(values);
        const auto fences = iqr_bounds(sorted);

        BoxplotStats s;
        s.group = key;
        s.count = values.size();
        s.q1 = fences.q1;
        s.median = quantile_sorted(sorted, 0.5);
        s.q3 = fences.q3;
        s.whisker_low = s.q1;
        s.whisker_high = s.q3;
        for (double v : values) {
            if (fences.inside(v)) {
                s.whisker_low = std::min(s.whisker_low, v);
                s.whisker_high = std::max(s.whisker_high, v);
            } else {
                s.outliers.push_back(v);
            }
        }
        result.push_back(std::move(s));
    }
    return result;
}

void write_boxplot_csv(std::ostream& out, std::span<const BoxplotStats> stats) {
    out << "group,count,q1,median,q3,whisker_low,whisker_high,outliers\n";
    for (const auto& s : stats) {
        out << s.group << ',' << s.count << ',' << format_double(s.q1) << ','
            << format_double(s.median) << ',' << format_double(s.q3) << ','
            << format_double(s.whisker_low) << ',' << format_double(s.whisker_high) << ',';
        for (std::size_t i = 0; i < s.outliers.size(); ++i) {
            if (i > 0) out << ';';
            out << format_double(s.outliers[i]);
        }
        out << '\n';
    }
}

namespace {

struct Scale {
    double lo, hi;
    double top, bottom;

    double y(double v) const {
        return bottom - (v - lo) / (hi - lo) * (bottom - top);
    }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

} // namespace

void write_boxplot_svg(std::ostream& out, std::span<const BoxplotStats> stats,
                       std::string_view title) {
    constexpr double step = 30.0;
    constexpr double box_w = 16.0;
    constexpr double margin_left = 60.0;
    constexpr double height = 360.0;
    const double width = margin_left + step * static_cast<double>(stats.size()) + 20.0;

    double lo = 0.0, hi = 1.0;
    bool first = true;
    for (const auto& s : stats) {
        double smin = s.whisker_low, smax = s.whisker_high;
        for (double v : s.outliers) {
            smin = std::min(smin, v);
            smax = std::max(smax, v);
        }
        if (first) {
            lo = smin;
            hi = smax;
            first = false;
        } else {
            lo = std::min(lo, smin);
            hi = std::max(hi, smax);
        }
    }
    if (hi <= lo) hi = lo + 1.0;
    const double pad = 0.05 * (hi - lo);
    const Scale scale{lo - pad, hi + pad, 30.0, height - 40.0};

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
        << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
    out << "<!-- boxplot figure -->\n";
    out << "<text x=\"" << num(width / 2) << "\" y=\"18\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"13\">"
        << title << "</text>\n";

    // Axis with min/max labels.
    out << "<line x1=\"" << num(margin_left - 10) << "\" y1=\"" << num(scale.top) << "\" x2=\""
        << num(margin_left - 10) << "\" y2=\"" << num(scale.bottom)
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << num(margin_left - 14) << "\" y=\"" << num(scale.top + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" << num(scale.hi)
        << "</text>\n";
    out << "<text x=\"" << num(margin_left - 14) << "\" y=\"" << num(scale.bottom + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" << num(scale.lo)
        << "</text>\n";

    double x = margin_left + step / 2;
    for (const auto& s : stats) {
        const double xl = x - box_w / 2, xr = x + box_w / 2;
        // whiskers
        out << "<line x1=\"" << num(x) << "\" y1=\"" << num(scale.y(s.whisker_low))
            << "\" x2=\"" << num(x) << "\" y2=\"" << num(scale.y(s.q1))
            << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        out << "<line x1=\"" << num(x) << "\" y1=\"" << num(scale.y(s.q3)) << "\" x2=\"" << num(x)
            << "\" y2=\"" << num(scale.y(s.whisker_high))
            << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        out << "<line x1=\"" << num(xl) << "\" y1=\"" << num(scale.y(s.whisker_low)) << "\" x2=\""
            << num(xr) << "\" y2=\"" << num(scale.y(s.whisker_low))
            << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        out << "<line x1=\"" << num(xl) << "\" y1=\"" << num(scale.y(s.whisker_high))
            << "\" x2=\"" << num(xr) << "\" y2=\"" << num(scale.y(s.whisker_high))
            << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        // box and median
        out << "<rect x=\"" << num(xl) << "\" y=\"" << num(scale.y(s.q3)) << "\" width=\""
            << num(box_w) << "\" height=\"" << num(scale.y(s.q1) - scale.y(s.q3))
            << "\" fill=\"#9ecae1\" stroke=\"black\" stroke-width=\"1\"/>\n";
        out << "<line x1=\"" << num(xl) << "\" y1=\"" << num(scale.y(s.median)) << "\" x2=\""
            << num(xr) << "\" y2=\"" << num(scale.y(s.median))
            << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
        for (double v : s.outliers) {
            out << "<circle cx=\"" << num(x) << "\" cy=\"" << num(scale.y(v))
                << "\" r=\"1.5\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"0.8\"/>\n";
        }
        out << "<text x=\"" << num(x) << "\" y=\"" << num(height - 24)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">" << s.group
            << "</text>\n";
        x += step;
    }
    out << "</svg>\n";
}

} // namespace epf
