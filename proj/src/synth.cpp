#include "epf/synth.hpp"

#include <cmath>
#include <numbers>

#include "epf/error.hpp"
#include "epf/rng.hpp"

namespace epf {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// Double-peaked daily profile in [-1, 1]: morning and evening ramps.
double daily_profile(int hour) {
    const double t = static_cast<double>(hour);
    return 0.7 * std::sin(two_pi * (t - 9.0) / 24.0) + 0.3 * std::sin(2.0 * two_pi * (t - 7.0) / 24.0);
}

double weekly_ramp(int dow) {
    return (static_cast<double>(dow) - 4.0) / 3.0; // Monday -1 .. Sunday +1
}

void validate(const SynthSpec& spec) {
    if (spec.n_days < 2) throw DomainError("synth: n_days must be >= 2");
    if (spec.spike_rate < 0.0 || spec.spike_rate >= 1.0)
        throw DomainError("synth: spike_rate must be in [0, 1)");
    if (spec.spike_min < 0.0 || spec.spike_max < spec.spike_min)
        throw DomainError("synth: spike magnitude range is invalid");
    if (spec.noise_scale < 0.0) throw DomainError("synth: noise_scale must be >= 0");
    if (spec.load_base <= 0.0) throw DomainError("synth: load_base must be positive");
}

} // namespace

SynthResult synth_generate(const SynthSpec& spec) {
    validate(spec);
    const auto start = make_date(spec.start_year, spec.start_month, spec.start_day);
    const std::size_t n_cells = static_cast<std::size_t>(spec.n_days) * 24;

    // Independent streams so that disabling noise does not move the spikes.
    Rng noise_rng(spec.seed);
    Rng spike_rng(spec.seed ^ 0x9e3779b97f4a7c15ull);

    std::vector<HourlyObservation> clean(n_cells);
    std::size_t cell = 0;
    for (int d = 0; d < spec.n_days; ++d) {
        const std::chrono::sys_days day = start + std::chrono::days{d};
        const Timestamp midnight{day, 0};
        const double seasonal =
            spec.load_seasonal_amplitude * std::cos(two_pi * (day_of_year(midnight) - 1) / 365.0);
        const int dow = day_of_week(midnight);
        for (int h = 0; h < 24; ++h, ++cell) {
            const double load = spec.load_base + seasonal +
                                spec.load_daily_amplitude * daily_profile(h);
            const double price_det = spec.base_price + spec.daily_amplitude * daily_profile(h) +
                                     spec.weekly_amplitude * weekly_ramp(dow);
            const double sigma = spec.noise_scale * load / spec.load_base;
            clean[cell].time = Timestamp{day, h};
            clean[cell].load = load;
            clean[cell].price = price_det + sigma * noise_rng.normal();
        }
    }

    const auto n_spikes = static_cast<std::size_t>(spec.spike_rate * static_cast<double>(n_cells));
    const auto spiked_cells = spike_rng.sample_without_replacement(n_cells, n_spikes);

    std::vector<HourlyObservation> observed = clean;
    SynthResult result;
    result.spike_times.reserve(n_spikes);
    for (const std::size_t c : spiked_cells) {
        const double magnitude = spike_rng.uniform(spec.spike_min, spec.spike_max);
        observed[c].price += spike_rng.sign() * magnitude;
        result.spike_times.push_back(observed[c].time);
    }

    result.observed = SeriesTable::from_observations(std::move(observed));
    result.clean = SeriesTable::from_observations(std::move(clean));
    return result;
}

LowRankSpikeProblem make_low_rank_spike_problem(Eigen::Index rows, Eigen::Index cols,
                                                Eigen::Index rank, double spike_fraction,
                                                double spike_magnitude, std::uint64_t seed) {
    if (rows < 1 || cols < 1 || rank < 1 || rank > std::min(rows, cols))
        throw DomainError("make_low_rank_spike_problem: bad shape");
    if (spike_fraction < 0.0 || spike_fraction >= 1.0)
        throw DomainError("make_low_rank_spike_problem: spike_fraction must be in [0, 1)");

    Rng rng(seed);
    Eigen::MatrixXd u(rows, rank), v(cols, rank);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index r = 0; r < rank; ++r) u(i, r) = rng.normal();
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index r = 0; r < rank; ++r) v(j, r) = rng.normal();

    LowRankSpikeProblem p;
    p.low_rank = u * v.transpose() / std::sqrt(static_cast<double>(rank));
    p.sparse = Eigen::MatrixXd::Zero(rows, cols);

    const auto n_cells = static_cast<std::size_t>(rows * cols);
    const auto n_spikes = static_cast<std::size_t>(spike_fraction * static_cast<double>(n_cells));
    for (const std::size_t c : rng.sample_without_replacement(n_cells, n_spikes)) {
        const auto i = static_cast<Eigen::Index>(c) / cols;
        const auto j = static_cast<Eigen::Index>(c) % cols;
        p.sparse(i, j) = rng.sign() * spike_magnitude;
    }
    p.observed = p.low_rank + p.sparse;
    return p;
}

} // namespace epf
