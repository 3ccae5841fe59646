#include "epf/kde.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "epf/iqr.hpp"
#include "epf/stats.hpp"

namespace epf {

namespace {

double gaussian_kernel(double u) {
    return std::exp(-0.5 * u * u) / std::sqrt(2.0 * std::numbers::pi);
}

double resolve_bandwidth(std::span<const double> points, const KdeConfig& config) {
    if (config.bandwidth) {
        if (*config.bandwidth <= 0.0) throw DomainError("bandwidth must be positive");
        return *config.bandwidth;
    }
    return silverman_bandwidth(points);
}

} // namespace

double silverman_bandwidth(std::span<const double> points) {
    if (points.empty()) throw EmptyInputError("silverman_bandwidth: empty input");
    const double sigma = sample_std(points);
    const auto bounds = iqr_bounds(points);
    const double spread = std::min(sigma, bounds.iqr / 1.34);
    const double h = 0.9 * spread * std::pow(static_cast<double>(points.size()), -0.2);
    if (h > 0.0) return h;
    const auto [lo, hi] = std::minmax_element(points.begin(), points.end());
    return 1e-6 * (*hi - *lo + 1.0);
}

double kde_score(std::span<const double> training_points, double x, const KdeConfig& config) {
    if (training_points.empty()) throw EmptyInputError("kde_score: empty training set");
    const double h = resolve_bandwidth(training_points, config);
    double sum = 0.0;
    for (double xi : training_points) sum += gaussian_kernel((x - xi) / h);
    return sum / (static_cast<double>(training_points.size()) * h);
}

OutlierReport kde_anomalies(std::span<const double> points, const KdeConfig& config,
                            double quantile) {
    if (points.size() < 3) throw EmptyInputError("kde_anomalies: need at least 3 points");
    if (quantile <= 0.0 || quantile >= 1.0)
        throw DomainError("kde_anomalies: quantile must be in (0, 1)");

    const double h = resolve_bandwidth(points, config);
    const KdeConfig fixed{config.kernel, h};

    const std::size_t n = points.size();
    std::vector<double> scores(n);
    std::vector<double> training(points.begin(), points.end());
    for (std::size_t i = 0; i < n; ++i) {
        std::swap(training[i], training[n - 1]);
        scores[i] = kde_score(std::span<const double>(training.data(), n - 1), points[i], fixed);
        std::swap(training[i], training[n - 1]);
    }

    std::vector<double> sorted = scores;
    std::sort(sorted.begin(), sorted.end());
    const auto cut = std::min<std::size_t>(
        n - 1, static_cast<std::size_t>(std::floor(quantile * static_cast<double>(n))));
    const double threshold = sorted[cut];

    OutlierReport report;
    report.method = OutlierMethod::kde;
    report.threshold_used = threshold;
    for (std::size_t i = 0; i < n; ++i) {
        if (scores[i] < threshold) {
            report.locations.emplace_back(static_cast<Eigen::Index>(i), -1);
            report.values.push_back(points[i]);
        }
    }
    return report;
}

} // namespace epf
