#include "epf/model_suite.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "epf/csv.hpp"
#include "epf/pca.hpp"
#include "epf/standardize.hpp"

namespace epf {

std::pair<FeatureMatrix, FeatureMatrix> chronological_split(const FeatureMatrix& x,
                                                            const SplitConfig& config) {
    if (x.size() < 2) throw InsufficientDataError("chronological_split: need at least 2 rows");
    if (config.train_fraction <= 0.0 || config.train_fraction >= 1.0)
        throw DomainError("train_fraction must be in (0, 1)");

    // nextafter guards against the product landing one ulp above an integer.
    const double raw = config.train_fraction * static_cast<double>(x.size());
    const auto n_train = static_cast<std::size_t>(std::ceil(std::nextafter(raw, 0.0)));
    if (n_train == 0 || n_train >= x.size())
        throw DomainError("train_fraction yields an empty partition");

    FeatureMatrix train, test;
    train.rows.assign(x.rows.begin(), x.rows.begin() + static_cast<std::ptrdiff_t>(n_train));
    test.rows.assign(x.rows.begin() + static_cast<std::ptrdiff_t>(n_train), x.rows.end());
    return {std::move(train), std::move(test)};
}

OutlierReport iqr_series_outliers(const SeriesTable& series, double k, bool per_hour) {
    if (series.empty()) throw EmptyInputError("iqr_series_outliers: empty series");
    const auto& obs = series.observations();

    OutlierReport report;
    report.method = OutlierMethod::iqr;
    report.threshold_used = k;

    if (!per_hour) {
        const auto result = iqr_filter(series.prices(), k);
        report = result.report;
        return report;
    }

    std::array<std::vector<double>, 24> groups;
    for (const auto& o : obs) groups[static_cast<std::size_t>(o.time.hour)].push_back(o.price);
    std::array<IqrBounds<double>, 24> bounds;
    for (int h = 0; h < 24; ++h)
        if (!groups[static_cast<std::size_t>(h)].empty())
            bounds[static_cast<std::size_t>(h)] =
                iqr_bounds(std::span<const double>(groups[static_cast<std::size_t>(h)]), k);

    for (std::size_t i = 0; i < obs.size(); ++i) {
        const auto h = static_cast<std::size_t>(obs[i].time.hour);
        if (!groups[h].empty() && !bounds[h].inside(obs[i].price)) {
            report.locations.emplace_back(static_cast<Eigen::Index>(i), -1);
            report.values.push_back(obs[i].price);
        }
    }
    return report;
}

SeriesTable filter_series(const SeriesTable& series, const RemovedSet& removed) {
    std::vector<HourlyObservation> kept;
    kept.reserve(series.size());
    for (const auto& o : series)
        if (!removed.contains(o.time.hour_key())) kept.push_back(o);
    return SeriesTable::from_observations(std::move(kept));
}

namespace {

std::vector<std::string> names_of(std::span<const std::string_view> views) {
    return {views.begin(), views.end()};
}

EvalReport evaluate_raw(int model_id, const FeatureMatrix& features, const SuiteConfig& config,
                        Eigen::Index outliers_removed) {
    if (features.size() < 50)
        throw InsufficientDataError("model " + std::to_string(model_id) + ": only " +
                                    std::to_string(features.size()) +
                                    " feature rows after filtering (need 50)");
    const auto [train, test] = chronological_split(features, config.split);
    static const std::vector<std::string> names = names_of(FeatureMatrix::column_names);

    const auto model = ols_fit(train.design(), train.targets(), names);
    const Eigen::VectorXd train_hat = predict(model, train.design());
    const Eigen::VectorXd test_hat = predict(model, test.design());

    EvalReport r;
    r.model_id = model_id;
    r.train_rmse = rmse(train.targets(), train_hat);
    r.test_rmse = rmse(test.targets(), test_hat);
    r.train_r2 = r2(train.targets(), train_hat);
    r.test_r2 = r2(test.targets(), test_hat);
    r.n_train = static_cast<Eigen::Index>(train.size());
    r.n_test = static_cast<Eigen::Index>(test.size());
    r.outliers_removed = outliers_removed;
    return r;
}

EvalReport evaluate_pca(int model_id, const FeatureMatrix& features, const SuiteConfig& config,
                        Eigen::Index outliers_removed) {
    if (features.size() < 50)
        throw InsufficientDataError("model " + std::to_string(model_id) + ": only " +
                                    std::to_string(features.size()) +
                                    " feature rows after filtering (need 50)");
    const auto [train, test] = chronological_split(features, config.split);

    // Leak-free: scaling and basis come from the training partition.
    const Standardizer scaler = Standardizer::fit(
        train.design(), std::span<const std::string_view>(FeatureMatrix::column_names));
    const Eigen::Index k = std::min<Eigen::Index>(config.pca_k, 7);
    const PcaModel pca = pca_fit(scaler.transform(train.design()), k);

    const Eigen::MatrixXd train_scores = pca_transform(pca, scaler.transform(train.design()));
    const Eigen::MatrixXd test_scores = pca_transform(pca, scaler.transform(test.design()));

    std::vector<std::string> names;
    for (Eigen::Index i = 1; i <= k; ++i) names.push_back("pc" + std::to_string(i));

    const auto model = ols_fit(train_scores, train.targets(), names);
    const Eigen::VectorXd train_hat = predict(model, train_scores);
    const Eigen::VectorXd test_hat = predict(model, test_scores);

    EvalReport r;
    r.model_id = model_id;
    r.train_rmse = rmse(train.targets(), train_hat);
    r.test_rmse = rmse(test.targets(), test_hat);
    r.train_r2 = r2(train.targets(), train_hat);
    r.test_r2 = r2(test.targets(), test_hat);
    r.n_train = static_cast<Eigen::Index>(train.size());
    r.n_test = static_cast<Eigen::Index>(test.size());
    r.outliers_removed = outliers_removed;
    return r;
}

} // namespace

std::array<EvalReport, 4> run_model_suite(const SeriesTable& series, const SuiteConfig& config) {
    if (config.pca_k < 1 || config.pca_k > 7)
        throw DomainError("pca_k must be in [1, 7]");

    // IQR pass (models 2-4).
    const OutlierReport iqr_report = iqr_series_outliers(series, config.iqr_k, config.iqr_per_hour);
    const RemovedSet iqr_removed = removed_from_report(iqr_report, series);

    // RPCA pass on the IQR-cleaned series (models 3-4).
    const SeriesTable after_iqr = filter_series(series, iqr_removed);
    if (after_iqr.empty()) throw InsufficientDataError("IQR filter removed every observation");
    const PriceMatrix pm = build_price_matrix(after_iqr);
    RpcaOptions<double> options;
    options.lambda = resolve_lambda(config.rpca.lambda_mode, pm.values.rows(), pm.values.cols(),
                                    config.rpca.explicit_lambda);
    options.tolerance = config.rpca.tolerance;
    options.max_iterations = config.rpca.max_iterations;
    const SparseDecomposition decomposition = rpca_decompose(pm, options);
    const OutlierReport rpca_report = sparse_outliers(decomposition, pm, config.rpca.delta_factor);

    RemovedSet both_removed = iqr_removed;
    for (const auto key : removed_from_report(rpca_report, pm)) both_removed.insert(key);

    const auto n_iqr = static_cast<Eigen::Index>(iqr_removed.size());
    const auto n_both = static_cast<Eigen::Index>(both_removed.size());

    std::array<EvalReport, 4> reports;
    reports[0] = evaluate_raw(1, build_features(series, {}), config, 0);
    reports[1] = evaluate_raw(2, build_features(series, iqr_removed), config, n_iqr);
    const FeatureMatrix filtered = build_features(series, both_removed);
    reports[2] = evaluate_raw(3, filtered, config, n_both);
    reports[3] = evaluate_pca(4, filtered, config, n_both);
    return reports;
}

void write_eval_csv(std::ostream& out, std::span<const EvalReport> reports) {
    out << "model,train_rmse,test_rmse,train_r2,test_r2,n_train,n_test,outliers_removed\n";
    for (const auto& r : reports) {
        out << r.model_id << ',' << format_double(r.train_rmse) << ','
            << format_double(r.test_rmse) << ',' << format_double(r.train_r2) << ','
            << format_double(r.test_r2) << ',' << r.n_train << ',' << r.n_test << ','
            << r.outliers_removed << '\n';
    }
}

void write_eval_table(std::ostream& out, std::span<const EvalReport> reports) {
    static constexpr const char* descriptions[] = {
        "7 raw features, no outlier removal",
        "7 raw features, IQR outlier removal",
        "7 raw features, IQR + RPCA outlier removal",
        "PCA features, IQR + RPCA outlier removal",
    };
    out << "  # | Model                                        | Train RMSE | Test RMSE "
           "| Train R2 | Test R2 | Train N | Test N | Removed\n";
    out << "----+----------------------------------------------+------------+-----------"
           "+----------+---------+---------+--------+--------\n";
    for (const auto& r : reports) {
        const char* desc =
            (r.model_id >= 1 && r.model_id <= 4) ? descriptions[r.model_id - 1] : "";
        char line[256];
        std::snprintf(line, sizeof(line),
                      "%3d | %-44s | %10.2f | %9.2f | %8.2f | %7.2f | %7lld | %6lld | %7lld\n",
                      r.model_id, desc, r.train_rmse, r.test_rmse, r.train_r2, r.test_r2,
                      static_cast<long long>(r.n_train), static_cast<long long>(r.n_test),
                      static_cast<long long>(r.outliers_removed));
        out << line;
    }
}

} // namespace epf
