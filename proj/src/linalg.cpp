#include "lpproj/linalg.hpp"

#include <cmath>

namespace lpproj {

namespace {

void check_finite(std::span<const double> entries, const char* what) {
    for (double e : entries) {
        if (!std::isfinite(e)) {
            throw InvalidValue(std::string(what) + ": non-finite entry");
        }
    }
}

}  // namespace

RealVector::RealVector(std::vector<double> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw InvalidValue("RealVector: length must be >= 1");
    }
    check_finite(entries_, "RealVector");
}

RealVector::RealVector(std::initializer_list<double> entries)
    : RealVector(std::vector<double>(entries)) {}

RealMatrix::RealMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0) {
        throw InvalidValue("RealMatrix: rows and cols must be >= 1");
    }
    if (entries_.size() != rows_ * cols_) {
        throw DimensionMismatch("RealMatrix: entry count does not match rows*cols");
    }
    check_finite(entries_, "RealMatrix");
}

RealMatrix::RealMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw RaggedRows("RealMatrix: rows of unequal length");
        }
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
    if (rows_ == 0 || cols_ == 0) {
        throw InvalidValue("RealMatrix: rows and cols must be >= 1");
    }
    check_finite(entries_, "RealMatrix");
}

RealVector RealMatrix::row(std::size_t i) const {
    std::vector<double> out(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                            entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    return RealVector(std::move(out));
}

RealVector RealMatrix::col(std::size_t j) const {
    std::vector<double> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        out.push_back((*this)(i, j));
    }
    return RealVector(std::move(out));
}

double lp_norm(const RealVector& v, NormOrder p) {
    if (p == NormOrder::L1) {
        double s = 0.0;
        for (double e : v) s += std::abs(e);
        return s;
    }
    double s = 0.0;
    for (double e : v) s += e * e;
    return std::sqrt(s);
}

RealVector sign_vector(const RealVector& v) {
    std::vector<double> out;
    out.reserve(v.size());
    for (double e : v) {
        out.push_back(e > 0.0 ? 1.0 : (e < 0.0 ? -1.0 : 0.0));
    }
    return RealVector(std::move(out));
}

RealVector norming_functional(const RealVector& v, NormOrder p) {
    if (p == NormOrder::L1) {
        return sign_vector(v);
    }
    const double n = lp_norm(v, NormOrder::L2);
    if (n == 0.0) {
        throw ZeroVector("norming_functional: L2 direction of the zero vector is undefined");
    }
    return scale(v, 1.0 / n);
}

RealVector hadamard(const RealVector& u, const RealVector& v) {
    if (u.size() != v.size()) {
        throw DimensionMismatch("hadamard: length mismatch");
    }
    std::vector<double> out;
    out.reserve(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out.push_back(u[i] * v[i]);
    return RealVector(std::move(out));
}

double matrix_entrywise_norm(const RealMatrix& X, NormOrder p) {
    if (p == NormOrder::L1) {
        double s = 0.0;
        for (double e : X.entries()) s += std::abs(e);
        return s;
    }
    double s = 0.0;
    for (double e : X.entries()) s += e * e;
    return std::sqrt(s);
}

double dot(const RealVector& u, const RealVector& v) {
    if (u.size() != v.size()) {
        throw DimensionMismatch("dot: length mismatch");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

RealVector add(const RealVector& u, const RealVector& v) {
    if (u.size() != v.size()) {
        throw DimensionMismatch("add: length mismatch");
    }
    std::vector<double> out;
    out.reserve(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out.push_back(u[i] + v[i]);
    return RealVector(std::move(out));
}

RealVector subtract(const RealVector& u, const RealVector& v) {
    if (u.size() != v.size()) {
        throw DimensionMismatch("subtract: length mismatch");
    }
    std::vector<double> out;
    out.reserve(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out.push_back(u[i] - v[i]);
    return RealVector(std::move(out));
}

RealVector scale(const RealVector& v, double c) {
    std::vector<double> out;
    out.reserve(v.size());
    for (double e : v) out.push_back(c * e);
    return RealVector(std::move(out));
}

bool is_zero(const RealVector& v) {
    for (double e : v) {
        if (e != 0.0) return false;
    }
    return true;
}

RealVector mat_vec(const RealMatrix& X, const RealVector& v) {
    if (v.size() != X.cols()) {
        throw DimensionMismatch("mat_vec: length mismatch");
    }
    std::vector<double> out;
    out.reserve(X.rows());
    for (std::size_t i = 0; i < X.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < X.cols(); ++j) s += X(i, j) * v[j];
        out.push_back(s);
    }
    return RealVector(std::move(out));
}

RealVector mat_tvec(const RealMatrix& X, const RealVector& v) {
    if (v.size() != X.rows()) {
        throw DimensionMismatch("mat_tvec: length mismatch");
    }
    std::vector<double> out(X.cols(), 0.0);
    for (std::size_t i = 0; i < X.rows(); ++i) {
        for (std::size_t j = 0; j < X.cols(); ++j) out[j] += X(i, j) * v[i];
    }
    return RealVector(std::move(out));
}

RealMatrix subtract_outer(const RealMatrix& X, const RealVector& u,
                          const RealVector& v, double d) {
    if (u.size() != X.rows() || v.size() != X.cols()) {
        throw DimensionMismatch("subtract_outer: shape mismatch");
    }
    std::vector<double> out;
    out.reserve(X.rows() * X.cols());
    for (std::size_t i = 0; i < X.rows(); ++i) {
        for (std::size_t j = 0; j < X.cols(); ++j) {
            out.push_back(X(i, j) - u[i] * v[j] / d);
        }
    }
    return RealMatrix(X.rows(), X.cols(), std::move(out));
}

}  // namespace lpproj
