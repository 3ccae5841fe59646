#include "epf/price_matrix.hpp"

#include <map>

#include "epf/error.hpp"

namespace epf {

PriceMatrix build_price_matrix(const SeriesTable& series) {
    if (series.empty()) throw EmptyInputError("build_price_matrix: empty series");

    std::map<std::chrono::sys_days, std::vector<const HourlyObservation*>> by_day;
    for (const auto& o : series) by_day[o.time.day].push_back(&o);

    PriceMatrix pm;
    const auto n_days = static_cast<Eigen::Index>(by_day.size());
    pm.values.setZero(n_days, 24);
    pm.mask.setConstant(n_days, 24, false);
    pm.day_index.reserve(by_day.size());

    Eigen::Index row = 0;
    for (const auto& [day, day_obs] : by_day) {
        pm.day_index.push_back(day);
        double present_sum = 0.0;
        bool present[24] = {};
        for (const auto* o : day_obs) {
            pm.values(row, o->time.hour) = o->price;
            present[o->time.hour] = true;
            present_sum += o->price;
        }
        const double day_mean = present_sum / static_cast<double>(day_obs.size());
        for (int h = 0; h < 24; ++h) {
            if (!present[h]) {
                pm.values(row, h) = day_mean;
                pm.mask(row, h) = true;
            }
        }
        ++row;
    }
    return pm;
}

} // namespace epf
