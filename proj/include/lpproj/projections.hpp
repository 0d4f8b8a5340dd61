#pragma once

#include <span>
#include <vector>

#include "lpproj/linalg.hpp"

namespace lpproj {

/// The three point-onto-point regressions.  Euclidean pairs with L2; the
/// other two pair with L1.
enum class ProjectionMethod { Euclidean, L1Operator, L1Min };

enum class PythagoreanRelation { Equality, StrictInequality };

/// Outcome of a norm-accounting check: lhs is ||y||_p (squared for p=2),
/// rhs the sum of the fitted and residual terms.
struct PythagoreanVerdict {
    PythagoreanRelation relation;
    double lhs;
    double rhs;
    bool b_in_unit_interval;
};

/// Hadamard coefficients b with fitted = b o y.  An entry is invalid when
/// y_i = 0 but fitted_i != 0: no coefficient can represent that coordinate.
struct BCoefficients {
    RealVector values;
    std::vector<bool> valid;

    bool all_valid() const;
};

struct ProjectionResult {
    ProjectionMethod method;
    double alpha;
    RealVector fitted;
    RealVector residual;
    BCoefficients b_coeffs;
    PythagoreanVerdict verdict;
};

/// Minimizer of sum_i w_i |v_i - theta| over theta.  Deterministic: merges
/// tied values, sorts, and returns the smallest value whose cumulative weight
/// reaches half the total, so the result is always one of the inputs.
double weighted_median(std::span<const double> values, std::span<const double> weights);
double weighted_median(const RealVector& values, const RealVector& weights);

/// alpha = x'y / ||x||_2^2; the residual is orthogonal to x.
ProjectionResult project_euclidean(const RealVector& y, const RealVector& x);

/// alpha = sgn(x)'y / ||x||_1; the residual satisfies sgn(x)'r = 0.
ProjectionResult project_l1_operator(const RealVector& y, const RealVector& x);

/// alpha = arg min ||y - alpha x||_1, the weighted median of y_i/x_i with
/// weights |x_i| over coordinates with x_i != 0.
ProjectionResult project_l1_min(const RealVector& y, const RealVector& x);

BCoefficients b_coefficients(const RealVector& fitted, const RealVector& y);

/// Evaluates the norm split ||y||_p vs ||b o y||_p + ||(1-b) o y||_p (squared
/// terms for p=2).  Throws Indeterminate when the difference falls inside the
/// dead band without being attributable to equality.
PythagoreanVerdict pythagorean_check(const RealVector& y, const RealVector& b,
                                     NormOrder p);

/// Runs the stated projection and returns its verdict; throws
/// LinearlyDependent when the residual vanishes (the corollaries assume
/// independent inputs).
PythagoreanVerdict corollary_classify(const RealVector& x, const RealVector& y,
                                      ProjectionMethod method);

/// Q_x y = (x/||x||_p) phi(x)'y, the operator projection of y onto x.
RealVector project_operator(const RealVector& y, const RealVector& x, NormOrder p);

}  // namespace lpproj
