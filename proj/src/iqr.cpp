#include "epf/iqr.hpp"

#include <ostream>

#include "epf/csv.hpp"

namespace epf {

std::string_view to_string(OutlierMethod method) {
    switch (method) {
        case OutlierMethod::iqr: return "iqr";
        case OutlierMethod::rpca: return "rpca";
        case OutlierMethod::kde: return "kde";
    }
    return "unknown";
}

void write_outlier_csv(std::ostream& out, const OutlierReport& report) {
    out << "method,row,col,value,threshold\n";
    for (std::size_t i = 0; i < report.size(); ++i) {
        out << to_string(report.method) << ',' << report.locations[i].first << ','
            << report.locations[i].second << ',' << format_double(report.values[i]) << ','
            << format_double(report.threshold_used) << '\n';
    }
}

IqrFilterResult iqr_filter(std::span<const double> values, double k) {
    IqrFilterResult result;
    result.bounds = iqr_bounds(values, k);
    result.report.method = OutlierMethod::iqr;
    result.report.threshold_used = k;
    result.kept.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (result.bounds.inside(values[i])) {
            result.kept.push_back(values[i]);
        } else {
            result.report.locations.emplace_back(static_cast<Eigen::Index>(i), -1);
            result.report.values.push_back(values[i]);
        }
    }
    return result;
}

} // namespace epf
