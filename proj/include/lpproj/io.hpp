#pragma once

#include <string>

#include <json.hpp>

#include "lpproj/conjugation.hpp"
#include "lpproj/factorize.hpp"
#include "lpproj/linalg.hpp"
#include "lpproj/projections.hpp"

namespace lpproj {

struct MatrixFile {
    std::string path;
    bool has_header = false;
    char delimiter = ',';
};

/// Rectangular CSV of finite reals; the header row is skipped when
/// has_header.  Throws IoError, ParseError (with 1-based row/column), or
/// RaggedRows.
RealMatrix read_matrix(const MatrixFile& f);

/// A 1 x n or n x 1 CSV, flattened to a vector.
RealVector read_vector(const MatrixFile& f);

nlohmann::json to_json(const RealVector& v);
nlohmann::json to_json(const RealMatrix& X);
nlohmann::json to_json(const PythagoreanVerdict& v);
nlohmann::json to_json(const ProjectionResult& r);
nlohmann::json to_json(const FactorStep& s);
nlohmann::json to_json(const Decomposition& d);
nlohmann::json to_json(const NormAccounting& acc);
nlohmann::json to_json(const ConjugateSet& set);

/// Full run report: method, input digest, steps, residual trace, accounting,
/// wall time.  Numbers survive a JSON round trip bit-exactly.
nlohmann::json decompose_report(const RealMatrix& X, const Decomposition& d,
                                const NormAccounting& acc, double wall_seconds);
nlohmann::json projection_report(const RealVector& y, const RealVector& x,
                                 const ProjectionResult& r, double wall_seconds);

void write_report(const std::string& path, const nlohmann::json& report);

std::string method_name(ProjectionMethod m);
std::string method_name(FactorMethod m);

}  // namespace lpproj
