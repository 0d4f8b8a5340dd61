#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "lpproj/errors.hpp"

namespace lpproj {

/// Which norm drives a computation; the dual order q is inf for L1 and 2 for L2.
enum class NormOrder { L1, L2 };

/// Dense real vector.  Entries are validated finite at construction and the
/// vector is immutable afterwards, so values can be shared across threads.
class RealVector {
public:
    explicit RealVector(std::vector<double> entries);
    RealVector(std::initializer_list<double> entries);

    std::size_t size() const { return entries_.size(); }
    double operator[](std::size_t i) const { return entries_[i]; }

    std::span<const double> entries() const { return entries_; }
    const std::vector<double>& as_std() const { return entries_; }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

private:
    std::vector<double> entries_;
};

/// Dense row-major real matrix; same finiteness and immutability contract as
/// RealVector.
class RealMatrix {
public:
    RealMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
    RealMatrix(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    RealVector row(std::size_t i) const;
    RealVector col(std::size_t j) const;
    std::span<const double> entries() const { return entries_; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> entries_;
};

/// (sum |v_i|^p)^(1/p); zero exactly for the zero vector.
double lp_norm(const RealVector& v, NormOrder p);

/// Entrywise sign with sign(0) = 0.
RealVector sign_vector(const RealVector& v);

/// The dual-norm unit functional: v/||v||_2 for L2, sgn(v) for L1.
/// Satisfies phi(v)'v = ||v||_p.  Throws ZeroVector for L2 on the zero vector.
RealVector norming_functional(const RealVector& v, NormOrder p);

/// Coordinatewise product.
RealVector hadamard(const RealVector& u, const RealVector& v);

/// p-th root of the entrywise power sum over all matrix cells.
double matrix_entrywise_norm(const RealMatrix& X, NormOrder p);

// Small arithmetic helpers shared by the higher modules.
double dot(const RealVector& u, const RealVector& v);
RealVector add(const RealVector& u, const RealVector& v);
RealVector subtract(const RealVector& u, const RealVector& v);
RealVector scale(const RealVector& v, double c);
bool is_zero(const RealVector& v);

/// X * v (length cols -> length rows).
RealVector mat_vec(const RealMatrix& X, const RealVector& v);
/// X' * v (length rows -> length cols).
RealVector mat_tvec(const RealMatrix& X, const RealVector& v);
/// X - u v' / d.
RealMatrix subtract_outer(const RealMatrix& X, const RealVector& u,
                          const RealVector& v, double d);

}  // namespace lpproj
