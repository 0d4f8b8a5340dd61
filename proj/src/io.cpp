#include "lpproj/io.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace lpproj {

namespace {

double parse_cell(const std::string& cell, std::size_t row, std::size_t col) {
    // Trim surrounding whitespace; from_chars wants a bare number.
    std::size_t first = cell.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        throw ParseError(row, col, "empty cell");
    }
    std::size_t last = cell.find_last_not_of(" \t\r");
    const char* begin = cell.data() + first;
    const char* end = cell.data() + last + 1;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError(row, col, "not a number: '" + cell.substr(first, last - first + 1) + "'");
    }
    if (!std::isfinite(value)) {
        throw ParseError(row, col, "non-finite value");
    }
    return value;
}

}  // namespace

RealMatrix read_matrix(const MatrixFile& f) {
    std::ifstream in(f.path);
    if (!in) {
        throw IoError("cannot open '" + f.path + "'");
    }
    std::vector<double> entries;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (f.has_header && lineno == 1) continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::size_t row_cols = 0;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, f.delimiter)) {
            ++row_cols;
            entries.push_back(parse_cell(cell, lineno, row_cols));
        }
        if (!line.empty() && line.back() == f.delimiter) {
            throw ParseError(lineno, row_cols + 1, "empty cell");
        }
        ++rows;
        if (rows == 1) {
            cols = row_cols;
        } else if (row_cols != cols) {
            throw RaggedRows("row " + std::to_string(lineno) + " has " +
                             std::to_string(row_cols) + " cells, expected " +
                             std::to_string(cols));
        }
    }
    if (rows == 0) {
        throw IoError("'" + f.path + "' contains no data rows");
    }
    return RealMatrix(rows, cols, std::move(entries));
}

RealVector read_vector(const MatrixFile& f) {
    RealMatrix m = read_matrix(f);
    if (m.rows() != 1 && m.cols() != 1) {
        throw IoError("'" + f.path + "' is not a 1xN or Nx1 vector");
    }
    return RealVector(std::vector<double>(m.entries().begin(), m.entries().end()));
}

nlohmann::json to_json(const RealVector& v) {
    return nlohmann::json(v.as_std());
}

nlohmann::json to_json(const RealMatrix& X) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < X.rows(); ++i) {
        rows.push_back(to_json(X.row(i)));
    }
    return rows;
}

nlohmann::json to_json(const PythagoreanVerdict& v) {
    return {{"relation", v.relation == PythagoreanRelation::Equality
                             ? "equality"
                             : "strict_inequality"},
            {"lhs", v.lhs},
            {"rhs", v.rhs},
            {"b_in_unit_interval", v.b_in_unit_interval}};
}

nlohmann::json to_json(const ProjectionResult& r) {
    return {{"method", method_name(r.method)},
            {"alpha", r.alpha},
            {"fitted", to_json(r.fitted)},
            {"residual", to_json(r.residual)},
            {"b_coefficients", to_json(r.b_coeffs.values)},
            {"b_valid", r.b_coeffs.valid},
            {"verdict", to_json(r.verdict)}};
}

nlohmann::json to_json(const FactorStep& s) {
    return {{"delta", s.delta},
            {"a", to_json(s.a)},
            {"b", to_json(s.b)},
            {"iterations", s.iterations},
            {"converged", s.converged},
            {"start", s.start_label}};
}

nlohmann::json to_json(const Decomposition& d) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : d.steps) steps.push_back(to_json(s));
    return {{"method", method_name(d.method)},
            {"steps", steps},
            {"residual_trace", d.residual_trace},
            {"reconstruction_error", d.reconstruction_error}};
}

nlohmann::json to_json(const NormAccounting& acc) {
    return {{"order", acc.order == NormOrder::L1 ? 1 : 2},
            {"full_rank", acc.full_rank},
            {"column_observed", acc.column_observed},
            {"column_factor", acc.column_factor},
            {"row_observed", acc.row_observed},
            {"row_factor", acc.row_factor},
            {"total_observed", acc.total_observed},
            {"total_factor", acc.total_factor},
            {"triangle_holds", acc.triangle_holds}};
}

nlohmann::json to_json(const ConjugateSet& set) {
    nlohmann::json vecs = nlohmann::json::array();
    for (const auto& v : set.vectors) vecs.push_back(to_json(v));
    return {{"order", set.order == NormOrder::L1 ? 1 : 2},
            {"vectors", vecs},
            {"gram", to_json(set.gram)}};
}

nlohmann::json decompose_report(const RealMatrix& X, const Decomposition& d,
                                const NormAccounting& acc, double wall_seconds) {
    return {{"input",
             {{"rows", X.rows()},
              {"cols", X.cols()},
              {"entrywise_l1", matrix_entrywise_norm(X, NormOrder::L1)},
              {"entrywise_l2", matrix_entrywise_norm(X, NormOrder::L2)}}},
            {"decomposition", to_json(d)},
            {"norm_accounting", to_json(acc)},
            {"wall_seconds", wall_seconds}};
}

nlohmann::json projection_report(const RealVector& y, const RealVector& x,
                                 const ProjectionResult& r, double wall_seconds) {
    return {{"input",
             {{"y", to_json(y)},
              {"x", to_json(x)},
              {"y_l1", lp_norm(y, NormOrder::L1)},
              {"y_l2", lp_norm(y, NormOrder::L2)}}},
            {"projection", to_json(r)},
            {"wall_seconds", wall_seconds}};
}

void write_report(const std::string& path, const nlohmann::json& report) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write '" + path + "'");
    }
    out << report.dump(2) << '\n';
    if (!out) {
        throw IoError("write failed for '" + path + "'");
    }
}

std::string method_name(ProjectionMethod m) {
    switch (m) {
        case ProjectionMethod::Euclidean: return "euclidean";
        case ProjectionMethod::L1Operator: return "l1_operator";
        default: return "l1_min";
    }
}

std::string method_name(FactorMethod m) {
    switch (m) {
        case FactorMethod::SvdL2: return "svd";
        case FactorMethod::TaxicabSvd: return "tsvd";
        default: return "l1min";
    }
}

}  // namespace lpproj
