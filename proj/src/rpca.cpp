#include "epf/rpca.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

#include "epf/csv.hpp"

namespace epf {

SparseDecomposition rpca_decompose(const PriceMatrix& m, const RpcaOptions<double>& options) {
    return rpca_decompose(m.values, options);
}

OutlierReport sparse_outliers(const SparseDecomposition& decomposition,
                              const PriceMatrix& source, double delta_factor) {
    const auto& s = decomposition.sparse;
    if (s.rows() != source.values.rows() || s.cols() != source.values.cols())
        throw DimensionError("sparse_outliers: decomposition does not match source matrix");
    if (delta_factor < 0.0) throw DomainError("sparse_outliers: negative delta factor");

    const double delta = delta_factor * source.values.cwiseAbs().maxCoeff();
    OutlierReport report;
    report.method = OutlierMethod::rpca;
    report.threshold_used = delta;
    for (Eigen::Index i = 0; i < s.rows(); ++i) {
        for (Eigen::Index j = 0; j < s.cols(); ++j) {
            if (source.mask(i, j)) continue; // imputed cell, not real data
            if (std::abs(s(i, j)) > delta) {
                report.locations.emplace_back(i, j);
                report.values.push_back(source.values(i, j));
            }
        }
    }
    return report;
}

void write_matrix_csv(std::ostream& out, const Eigen::MatrixXd& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j > 0) out << ',';
            out << format_double(m(i, j));
        }
        out << '\n';
    }
}

Eigen::MatrixXd read_matrix_csv(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<double> row;
        for (const auto& field : split_csv_line(line, ','))
            row.push_back(parse_double(field, "matrix entry"));
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("ragged matrix CSV");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw EmptyInputError("empty matrix CSV");
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                      static_cast<Eigen::Index>(rows.front().size()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return m;
}

void write_decomposition(const std::filesystem::path& dir,
                         const SparseDecomposition& decomposition) {
    std::filesystem::create_directories(dir);
    {
        std::ofstream out(dir / "low_rank.csv");
        if (!out) throw IoError("cannot write " + (dir / "low_rank.csv").string());
        write_matrix_csv(out, decomposition.low_rank);
    }
    {
        std::ofstream out(dir / "sparse.csv");
        if (!out) throw IoError("cannot write " + (dir / "sparse.csv").string());
        write_matrix_csv(out, decomposition.sparse);
    }
    nlohmann::json meta{
        {"lambda", decomposition.lambda},
        {"iterations", decomposition.iterations},
        {"converged", decomposition.converged},
        {"residual", decomposition.residual},
    };
    std::ofstream out(dir / "meta.json");
    if (!out) throw IoError("cannot write " + (dir / "meta.json").string());
    out << meta.dump(2) << '\n';
}

} // namespace epf
