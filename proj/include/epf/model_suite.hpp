#pragma once

#include <array>
#include <iosfwd>
#include <span>

#include "epf/features.hpp"
#include "epf/iqr.hpp"
#include "epf/regression.hpp"
#include "epf/rpca.hpp"
#include "epf/series.hpp"

namespace epf {

/// Chronological split only: no shuffling, train rows precede test rows.
struct SplitConfig {
    double train_fraction = 0.8;
};

/// First ceil(fraction * n) rows train, remainder test; both nonempty.
std::pair<FeatureMatrix, FeatureMatrix> chronological_split(const FeatureMatrix& x,
                                                            const SplitConfig& config);

/// Solver settings used wherever the pipeline runs a pursuit. delta_factor
/// scales max|M| into the sparse-cell outlier cut; the pipeline default is
/// far above sparse_outliers' dust threshold because observed data carries
/// dense noise into S.
struct RpcaSettings {
    LambdaMode lambda_mode = LambdaMode::paper;
    double explicit_lambda = 0.0;
    double tolerance = 1e-7;
    int max_iterations = 500;
    double delta_factor = 0.05;
};

struct SuiteConfig {
    double iqr_k = 1.5;
    bool iqr_per_hour = false; // fence per hour-of-day group instead of one global fence
    RpcaSettings rpca;
    int pca_k = 5; // components for the transformed-feature model
    SplitConfig split;
};

/// One comparison row: model id, fit quality on both partitions, and how
/// many observations its filters dropped.
struct EvalReport {
    int model_id = 0;
    double train_rmse = 0.0;
    double test_rmse = 0.0;
    double train_r2 = 0.0;
    double test_r2 = 0.0;
    Eigen::Index n_train = 0;
    Eigen::Index n_test = 0;
    Eigen::Index outliers_removed = 0;
};

/// IQR pass over the series' prices; one global fence by default, or one
/// fence per hour-of-day group. Flat indices refer to observation order.
OutlierReport iqr_series_outliers(const SeriesTable& series, double k, bool per_hour = false);

/// Copy of the series without the removed observations.
SeriesTable filter_series(const SeriesTable& series, const RemovedSet& removed);

/// Fits and evaluates the four-model comparison:
///   1. raw features, no outlier removal
///   2. raw features after IQR removal on prices
///   3. raw features after IQR then RPCA removal
///   4. PCA-transformed features after IQR then RPCA removal
/// Filtering precedes the (shared) chronological split; the standardizer
/// and component basis of model 4 are fitted on its training partition
/// only.
std::array<EvalReport, 4> run_model_suite(const SeriesTable& series, const SuiteConfig& config);

/// CSV: `model,train_rmse,test_rmse,train_r2,test_r2,n_train,n_test,outliers_removed`.
void write_eval_csv(std::ostream& out, std::span<const EvalReport> reports);

/// Aligned plain-text comparison table.
void write_eval_table(std::ostream& out, std::span<const EvalReport> reports);

} // namespace epf
