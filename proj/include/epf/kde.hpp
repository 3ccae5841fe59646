#pragma once

#include <optional>
#include <span>

#include "epf/outlier_report.hpp"

namespace epf {

enum class Kernel { gaussian };

/// Kernel and bandwidth of the density estimate. A missing bandwidth means
/// Silverman's rule, h = 0.9 * min(sigma, IQR/1.34) * n^(-1/5), with a
/// floor of 1e-6 * (max - min + 1) when the spread is degenerate.
struct KdeConfig {
    Kernel kernel = Kernel::gaussian;
    std::optional<double> bandwidth; // nullopt = auto
};

double silverman_bandwidth(std::span<const double> points);

/// f(x) = 1/(n*h) * sum_i K((x - x_i) / h).
double kde_score(std::span<const double> training_points, double x,
                 const KdeConfig& config = {});

/// Scores each point by leave-one-out density (bandwidth resolved once from
/// the full set) and flags points strictly below the cutoff, which is the
/// floor(quantile * n)-th smallest score.
OutlierReport kde_anomalies(std::span<const double> points, const KdeConfig& config,
                            double quantile);

} // namespace epf
