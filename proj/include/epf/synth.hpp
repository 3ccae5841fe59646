#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "epf/series.hpp"

namespace epf {

/// Parameters of the synthetic hourly market series. The deterministic
/// part of the price is an exact linear function of the model features
/// (yesterday's load carries the within-day shape, the day-of-week ordinal
/// carries the weekly ramp), so a correctly filtered linear fit can reach
/// the configured noise floor. Noise std is proportional to load.
struct SynthSpec {
    int n_days = 365;
    int start_year = 2021;
    int start_month = 1;
    int start_day = 15;

    double base_price = 40.0;       // level around which prices move
    double daily_amplitude = 12.0;  // half-range of the within-day price swing
    double weekly_amplitude = 5.0;  // half-range of the day-of-week ramp
    double noise_scale = 1.5;       // noise std at average load

    double spike_rate = 0.05;       // fraction of cells spiked, exact count floor(rate*n)
    double spike_min = 10.0;        // magnitude range, sign drawn separately,
    double spike_max = 40.0;        // so negative prices can occur

    double load_base = 1000.0;          // MW
    double load_daily_amplitude = 250.0;
    double load_seasonal_amplitude = 80.0;

    std::uint64_t seed = 42;

    bool operator==(const SynthSpec&) const = default;
};

struct SynthResult {
    SeriesTable observed;               // clean + spikes
    SeriesTable clean;                  // deterministic part + noise, pre-spike
    std::vector<Timestamp> spike_times; // ground-truth spike locations, ascending
};

/// Byte-identical output for identical specs. Noise and spike placement use
/// independent seeded streams, so zeroing one leaves the other unchanged.
SynthResult synth_generate(const SynthSpec& spec);

/// Ground-truth construction for pursuit testing: a random rank-r matrix
/// plus exact-count sparse spikes of fixed magnitude and random sign.
struct LowRankSpikeProblem {
    Eigen::MatrixXd low_rank;
    Eigen::MatrixXd sparse;
    Eigen::MatrixXd observed; // low_rank + sparse
};

LowRankSpikeProblem make_low_rank_spike_problem(Eigen::Index rows, Eigen::Index cols,
                                                Eigen::Index rank, double spike_fraction,
                                                double spike_magnitude, std::uint64_t seed);

} // namespace epf
