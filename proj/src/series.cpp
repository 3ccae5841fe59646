#include "epf/series.hpp"

#include <algorithm>

#include "epf/error.hpp"

namespace epf {

SeriesTable SeriesTable::from_observations(std::vector<HourlyObservation> obs) {
    for (const auto& o : obs) {
        if (o.time.hour < 0 || o.time.hour > 23)
            throw DomainError("hour of day out of range at " + format_timestamp(o.time));
        if (o.has_load() && o.load < 0.0)
            throw DomainError("negative load at " + format_timestamp(o.time));
    }
    std::stable_sort(obs.begin(), obs.end(),
                     [](const auto& a, const auto& b) { return a.time < b.time; });

    // Collapse runs of equal timestamps by mean; loads averaged over the
    // values that are present.
    std::vector<HourlyObservation> out;
    out.reserve(obs.size());
    std::size_t i = 0;
    while (i < obs.size()) {
        std::size_t j = i + 1;
        while (j < obs.size() && obs[j].time == obs[i].time) ++j;
        if (j == i + 1) {
            out.push_back(obs[i]);
        } else {
            double price_sum = 0.0;
            double load_sum = 0.0;
            std::size_t load_n = 0;
            for (std::size_t k = i; k < j; ++k) {
                price_sum += obs[k].price;
                if (obs[k].has_load()) {
                    load_sum += obs[k].load;
                    ++load_n;
                }
            }
            HourlyObservation merged;
            merged.time = obs[i].time;
            merged.price = price_sum / static_cast<double>(j - i);
            if (load_n > 0) merged.load = load_sum / static_cast<double>(load_n);
            out.push_back(merged);
        }
        i = j;
    }
    return SeriesTable(std::move(out));
}

std::vector<double> SeriesTable::prices() const {
    std::vector<double> p;
    p.reserve(obs_.size());
    for (const auto& o : obs_) p.push_back(o.price);
    return p;
}

} // namespace epf
