#include "lpproj/projections.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lpproj {

namespace {

constexpr double kVerdictTol = 1e-9;
constexpr double kDependenceTol = 1e-12;

bool b_entries_in_unit_interval(const RealVector& y, const BCoefficients& b) {
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (!b.valid[i]) return false;
        if (y[i] == 0.0) continue;  // coordinate drops out of the l1 split
        // small slack: alpha at a breakpoint makes one b_i equal 1 up to rounding
        if (b.values[i] < -1e-12 || b.values[i] > 1.0 + 1e-12) return false;
    }
    return true;
}

PythagoreanVerdict verdict_from_split(const RealVector& y, const RealVector& fitted,
                                      NormOrder p, const BCoefficients& b) {
    const RealVector residual = subtract(y, fitted);
    double lhs, rhs;
    if (p == NormOrder::L2) {
        const double ny = lp_norm(y, NormOrder::L2);
        const double nf = lp_norm(fitted, NormOrder::L2);
        const double nr = lp_norm(residual, NormOrder::L2);
        lhs = ny * ny;
        rhs = nf * nf + nr * nr;
    } else {
        lhs = lp_norm(y, NormOrder::L1);
        rhs = lp_norm(fitted, NormOrder::L1) + lp_norm(residual, NormOrder::L1);
    }
    const double band = kVerdictTol * std::max(1.0, std::abs(rhs));
    PythagoreanVerdict v;
    v.lhs = lhs;
    v.rhs = rhs;
    v.b_in_unit_interval = b_entries_in_unit_interval(y, b);
    if (std::abs(lhs - rhs) <= band) {
        v.relation = PythagoreanRelation::Equality;
    } else if (rhs - lhs > band) {
        v.relation = PythagoreanRelation::StrictInequality;
    } else {
        // lhs > rhs beyond the band cannot come from a norm split; the case
        // is numerically unresolvable.
        throw Indeterminate("pythagorean verdict: lhs exceeds rhs beyond tolerance");
    }
    return v;
}

ProjectionResult make_result(ProjectionMethod method, double alpha,
                             const RealVector& y, const RealVector& x, NormOrder p) {
    RealVector fitted = scale(x, alpha);
    RealVector residual = subtract(y, fitted);
    BCoefficients b = b_coefficients(fitted, y);
    PythagoreanVerdict v = verdict_from_split(y, fitted, p, b);
    return ProjectionResult{method, alpha, std::move(fitted), std::move(residual),
                            std::move(b), v};
}

}  // namespace

bool BCoefficients::all_valid() const {
    return std::all_of(valid.begin(), valid.end(), [](bool f) { return f; });
}

double weighted_median(std::span<const double> values, std::span<const double> weights) {
    if (values.size() != weights.size()) {
        throw DimensionMismatch("weighted_median: length mismatch");
    }
    if (values.empty()) {
        throw EmptyInput("weighted_median: no samples");
    }
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) {
            throw InvalidValue("weighted_median: negative weight");
        }
        total += w;
    }
    if (total == 0.0) {
        throw AllZeroWeights("weighted_median: total weight is zero");
    }

    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    // Smallest value whose cumulative weight reaches half the total weight;
    // ties in value merge their weights before the comparison.
    double cum = 0.0;
    const double half = total / 2.0;
    for (std::size_t k = 0; k < order.size();) {
        const double v = values[order[k]];
        while (k < order.size() && values[order[k]] == v) {
            cum += weights[order[k]];
            ++k;
        }
        if (cum >= half) return v;
    }
    return values[order.back()];  // unreachable for positive total weight
}

double weighted_median(const RealVector& values, const RealVector& weights) {
    return weighted_median(values.entries(), weights.entries());
}

ProjectionResult project_euclidean(const RealVector& y, const RealVector& x) {
    if (x.size() != y.size()) {
        throw DimensionMismatch("project_euclidean: length mismatch");
    }
    if (is_zero(x)) {
        throw ZeroVector("project_euclidean: x is the zero vector");
    }
    const double nx = lp_norm(x, NormOrder::L2);
    const double alpha = dot(x, y) / (nx * nx);
    return make_result(ProjectionMethod::Euclidean, alpha, y, x, NormOrder::L2);
}

ProjectionResult project_l1_operator(const RealVector& y, const RealVector& x) {
    if (x.size() != y.size()) {
        throw DimensionMismatch("project_l1_operator: length mismatch");
    }
    if (is_zero(x)) {
        throw ZeroVector("project_l1_operator: x is the zero vector");
    }
    const double alpha = dot(sign_vector(x), y) / lp_norm(x, NormOrder::L1);
    return make_result(ProjectionMethod::L1Operator, alpha, y, x, NormOrder::L1);
}

ProjectionResult project_l1_min(const RealVector& y, const RealVector& x) {
    if (x.size() != y.size()) {
        throw DimensionMismatch("project_l1_min: length mismatch");
    }
    if (is_zero(x)) {
        throw ZeroVector("project_l1_min: x is the zero vector");
    }
    // Coordinates with x_i = 0 contribute |y_i| regardless of alpha and drop
    // out of the weighted-median instance.
    std::vector<double> breakpoints, weights;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] != 0.0) {
            breakpoints.push_back(y[i] / x[i]);
            weights.push_back(std::abs(x[i]));
        }
    }
    const double alpha = weighted_median(std::span<const double>(breakpoints),
                                         std::span<const double>(weights));
    return make_result(ProjectionMethod::L1Min, alpha, y, x, NormOrder::L1);
}

BCoefficients b_coefficients(const RealVector& fitted, const RealVector& y) {
    if (fitted.size() != y.size()) {
        throw DimensionMismatch("b_coefficients: length mismatch");
    }
    std::vector<double> values;
    std::vector<bool> valid;
    values.reserve(y.size());
    valid.reserve(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] != 0.0) {
            values.push_back(fitted[i] / y[i]);
            valid.push_back(true);
        } else {
            values.push_back(0.0);
            valid.push_back(fitted[i] == 0.0);
        }
    }
    return BCoefficients{RealVector(std::move(values)), std::move(valid)};
}

PythagoreanVerdict pythagorean_check(const RealVector& y, const RealVector& b,
                                     NormOrder p) {
    RealVector fitted = hadamard(b, y);
    BCoefficients coeffs = b_coefficients(fitted, y);
    return verdict_from_split(y, fitted, p, coeffs);
}

PythagoreanVerdict corollary_classify(const RealVector& x, const RealVector& y,
                                      ProjectionMethod method) {
    ProjectionResult r = [&] {
        switch (method) {
            case ProjectionMethod::Euclidean:
                return project_euclidean(y, x);
            case ProjectionMethod::L1Operator:
                return project_l1_operator(y, x);
            default:
                return project_l1_min(y, x);
        }
    }();
    const NormOrder p =
        method == ProjectionMethod::Euclidean ? NormOrder::L2 : NormOrder::L1;
    if (lp_norm(r.residual, p) <= kDependenceTol * lp_norm(y, p)) {
        throw LinearlyDependent("corollary_classify: x and y are linearly dependent");
    }
    return r.verdict;
}

RealVector project_operator(const RealVector& y, const RealVector& x, NormOrder p) {
    if (x.size() != y.size()) {
        throw DimensionMismatch("project_operator: length mismatch");
    }
    if (is_zero(x)) {
        throw ZeroVector("project_operator: x is the zero vector");
    }
    const double coeff = dot(norming_functional(x, p), y) / lp_norm(x, p);
    return scale(x, coeff);
}

}  // namespace lpproj
