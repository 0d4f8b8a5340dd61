#pragma once

#include <stdexcept>
#include <string>

namespace lpproj {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class InvalidValue : public Error {
public:
    using Error::Error;
};

class ZeroVector : public Error {
public:
    using Error::Error;
};

class ZeroMatrix : public Error {
public:
    using Error::Error;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

class AllZeroWeights : public Error {
public:
    using Error::Error;
};

/// Pythagorean equality-vs-strict decision fell inside the numeric dead band.
class Indeterminate : public Error {
public:
    using Error::Error;
};

/// Residual vanished: the inputs are linearly dependent.
class LinearlyDependent : public Error {
public:
    using Error::Error;
};

/// A Gram-Schmidt output collapsed to (numerically) zero.
class DegenerateVector : public Error {
public:
    using Error::Error;
};

/// An alternating-regression factor collapsed to zero.
class DegenerateFactor : public Error {
public:
    using Error::Error;
};

class InvalidRank : public Error {
public:
    using Error::Error;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

class MethodMismatch : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t row, std::size_t col, const std::string& what_arg)
        : Error("parse error at row " + std::to_string(row) + ", column " +
                std::to_string(col) + ": " + what_arg),
          row_(row),
          col_(col) {}

    std::size_t row() const { return row_; }
    std::size_t col() const { return col_; }

private:
    std::size_t row_;
    std::size_t col_;
};

class RaggedRows : public Error {
public:
    using Error::Error;
};

}  // namespace lpproj
