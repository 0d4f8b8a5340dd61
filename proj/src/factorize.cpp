#include "lpproj/factorize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lpproj/projections.hpp"

namespace lpproj {

namespace {

constexpr double kRankTol = 1e-10;

bool matrix_is_zero(const RealMatrix& X) {
    for (double e : X.entries()) {
        if (e != 0.0) return false;
    }
    return true;
}

bool same_signs(const RealVector& u, const RealVector& v) {
    if (u.size() != v.size()) return false;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] != v[i]) return false;
    }
    return true;
}

// Entrywise l1 misfit of the rank-1 model u v'.
double rank1_l1_objective(const RealMatrix& X, const RealVector& u, const RealVector& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < X.rows(); ++i) {
        for (std::size_t j = 0; j < X.cols(); ++j) {
            s += std::abs(X(i, j) - u[i] * v[j]);
        }
    }
    return s;
}

// Power iteration for the dominant singular triple, started from the column
// of maximal l2 norm.  delta converges to the largest singular value.
FactorStep first_factor_l2(const RealMatrix& X, const FactorOptions& options) {
    std::size_t start = 0;
    double best = -1.0;
    for (std::size_t j = 0; j < X.cols(); ++j) {
        const double n = lp_norm(X.col(j), NormOrder::L2);
        if (n > best) {
            best = n;
            start = j;
        }
    }
    RealVector b = mat_tvec(X, norming_functional(X.col(start), NormOrder::L2));
    double delta = lp_norm(b, NormOrder::L2);
    int it = 0;
    bool converged = false;
    for (; it < options.max_iter; ++it) {
        const RealVector a = mat_vec(X, norming_functional(b, NormOrder::L2));
        if (is_zero(a)) break;
        b = mat_tvec(X, norming_functional(a, NormOrder::L2));
        const double next = lp_norm(b, NormOrder::L2);
        if (std::abs(next - delta) <= 1e-12 * next) {
            delta = next;
            converged = true;
            ++it;
            break;
        }
        delta = next;
    }
    // Readout pinning ||a||_2 = ||b||_2 = delta exactly; the a-side residual
    // orthogonality then holds to rounding.
    const RealVector a_dir = norming_functional(mat_vec(X, norming_functional(b, NormOrder::L2)),
                                                NormOrder::L2);
    const RealVector b_raw = mat_tvec(X, a_dir);
    delta = lp_norm(b_raw, NormOrder::L2);
    if (delta == 0.0) {
        throw DegenerateFactor("first_factor: power iteration collapsed");
    }
    return FactorStep{delta, scale(a_dir, delta),
                      scale(norming_functional(b_raw, NormOrder::L2), delta), it,
                      converged, "col" + std::to_string(start)};
}

struct TsvdRun {
    double delta = -1.0;
    RealVector s_b{std::vector<double>{0.0}};
    int iterations = 0;
    bool converged = false;
};

// Sign power iteration from one start; stops when the (sgn a, sgn b) pair
// repeats.
TsvdRun tsvd_run(const RealMatrix& X, RealVector s_b, int max_iter) {
    TsvdRun run;
    RealVector s_a = sign_vector(mat_vec(X, s_b));
    for (int it = 1; it <= max_iter; ++it) {
        const RealVector b = mat_tvec(X, s_a);
        const RealVector s_b_next = sign_vector(b);
        const RealVector a = mat_vec(X, s_b_next);
        const RealVector s_a_next = sign_vector(a);
        run.iterations = it;
        if (same_signs(s_b_next, s_b) && same_signs(s_a_next, s_a)) {
            run.converged = true;
            break;
        }
        s_b = s_b_next;
        s_a = s_a_next;
    }
    run.s_b = s_b;
    run.delta = lp_norm(mat_vec(X, s_b), NormOrder::L1);
    return run;
}

FactorStep first_factor_tsvd(const RealMatrix& X, const FactorOptions& options) {
    const int cap = std::min(options.max_iter, 1000);
    TsvdRun best;
    std::string best_label;
    auto consider = [&](const RealVector& col, const std::string& label) {
        const RealVector u0 = sign_vector(col);
        if (is_zero(u0)) return;
        const RealVector s_b0 = sign_vector(mat_tvec(X, u0));
        if (is_zero(s_b0)) return;
        TsvdRun run = tsvd_run(X, s_b0, cap);
        if (run.delta > best.delta) {
            best = run;
            best_label = label;
        }
    };
    if (options.exhaustive_tsvd) {
        const TsvdOracleResult oracle = tsvd_exhaustive_oracle(X);
        best.s_b = oracle.u_signs;
        best.delta = oracle.delta;
        best.converged = true;
        best.iterations = 0;
        best_label = "exhaustive";
    } else if (options.strategy == InitStrategy::AllColumns) {
        for (std::size_t j = 0; j < X.cols(); ++j) {
            consider(X.col(j), "col" + std::to_string(j));
        }
    } else {
        std::size_t start = 0;
        double top = -1.0;
        for (std::size_t j = 0; j < X.cols(); ++j) {
            const double n = lp_norm(X.col(j), NormOrder::L1);
            if (n > top) {
                top = n;
                start = j;
            }
        }
        consider(X.col(start), "col" + std::to_string(start));
    }
    if (best.delta < 0.0) {
        throw DegenerateFactor("first_factor: no usable sign start");
    }
    // Readout from the stable signs.  delta = b' sgn(b) reuses the exact
    // arithmetic of the deflation term, making X_{a+1} sgn(b) vanish to
    // rounding.
    const RealVector a = mat_vec(X, best.s_b);
    const RealVector s_a = sign_vector(a);
    const RealVector b = mat_tvec(X, s_a);
    const double delta = dot(b, best.s_b);
    if (delta <= 0.0) {
        throw DegenerateFactor("first_factor: degenerate sign fixed point");
    }
    return FactorStep{delta, a, b, best.iterations, best.converged, best_label};
}

FactorStep first_factor_l1min(const RealMatrix& X, const FactorOptions& options) {
    // Default start: the taxicab factor's b; it is cheap and sign-aware.
    // Fallback: the indicator of the dominant-l1 column.
    std::string label = "tsvd-b";
    RealVector b0{std::vector<double>{0.0}};
    try {
        b0 = first_factor_tsvd(X, options).b;
        if (is_zero(b0)) throw DegenerateFactor("zero taxicab start");
    } catch (const Error&) {
        std::size_t start = 0;
        double top = -1.0;
        for (std::size_t j = 0; j < X.cols(); ++j) {
            const double n = lp_norm(X.col(j), NormOrder::L1);
            if (n > top) {
                top = n;
                start = j;
            }
        }
        std::vector<double> e(X.cols(), 0.0);
        e[start] = 1.0;
        b0 = RealVector(std::move(e));
        label = "col" + std::to_string(start);
    }
    FactorStep step = l1min_alternate(X, b0, options.tol, options.max_iter);
    step.start_label = label;
    return step;
}

}  // namespace

NormOrder norm_order_of(FactorMethod method) {
    return method == FactorMethod::SvdL2 ? NormOrder::L2 : NormOrder::L1;
}

TransitionResult transition_step(const RealMatrix& X, const RealVector& b, NormOrder p) {
    if (b.size() != X.cols()) {
        throw DimensionMismatch("transition_step: b length must equal cols(X)");
    }
    if (matrix_is_zero(X)) {
        throw ZeroMatrix("transition_step: X is entrywise zero");
    }
    if (is_zero(b)) {
        throw ZeroVector("transition_step: b is the zero vector");
    }
    const RealVector phi_b = norming_functional(b, p);
    RealVector a = mat_vec(X, phi_b);
    const RealVector phi_a = norming_functional(a, p);
    RealVector b_next = mat_tvec(X, phi_a);
    const double delta = dot(phi_a, mat_vec(X, phi_b));
    return TransitionResult{std::move(a), std::move(b_next), delta};
}

FactorStep first_factor(const RealMatrix& X, FactorMethod method,
                        const FactorOptions& options) {
    if (matrix_is_zero(X)) {
        throw ZeroMatrix("first_factor: X is entrywise zero");
    }
    switch (method) {
        case FactorMethod::SvdL2:
            return first_factor_l2(X, options);
        case FactorMethod::TaxicabSvd:
            return first_factor_tsvd(X, options);
        default:
            return first_factor_l1min(X, options);
    }
}

TsvdOracleResult tsvd_exhaustive_oracle(const RealMatrix& X) {
    const std::size_t J = X.cols();
    if (J > 20) {
        throw TooLarge("tsvd_exhaustive_oracle: more than 20 columns");
    }
    double best = -1.0;
    std::vector<double> best_u;
    std::vector<double> u(J, 1.0);
    const std::size_t count = std::size_t{1} << (J - 1);
    for (std::size_t mask = 0; mask < count; ++mask) {
        u[0] = 1.0;  // sign symmetry: u and -u give the same objective
        for (std::size_t j = 1; j < J; ++j) {
            u[j] = (mask >> (j - 1)) & 1 ? -1.0 : 1.0;
        }
        double obj = 0.0;
        for (std::size_t i = 0; i < X.rows(); ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < J; ++j) s += X(i, j) * u[j];
            obj += std::abs(s);
        }
        if (obj > best) {
            best = obj;
            best_u = u;
        }
    }
    return TsvdOracleResult{best, RealVector(std::move(best_u))};
}

RealMatrix deflate(const RealMatrix& X, const FactorStep& step) {
    if (step.a.size() != X.rows() || step.b.size() != X.cols()) {
        throw DimensionMismatch("deflate: factor shape does not match X");
    }
    if (!(step.delta > 0.0)) {
        throw InvalidValue("deflate: delta must be positive");
    }
    return subtract_outer(X, step.a, step.b, step.delta);
}

Decomposition decompose(const RealMatrix& X, FactorMethod method, std::size_t k,
                        const FactorOptions& options) {
    if (matrix_is_zero(X)) {
        throw ZeroMatrix("decompose: X is entrywise zero");
    }
    if (k < 1 || k > std::min(X.rows(), X.cols())) {
        throw InvalidRank("decompose: k must be in [1, min(I,J)]");
    }
    const NormOrder p = norm_order_of(method);
    const double base = matrix_entrywise_norm(X, p);

    Decomposition d;
    d.method = method;
    d.residual_trace.push_back(base);
    RealMatrix residual = X;
    for (std::size_t alpha = 0; alpha < k; ++alpha) {
        if (matrix_entrywise_norm(residual, p) <= kRankTol * base) {
            break;  // rank reached
        }
        FactorStep step = [&]() -> FactorStep {
            try {
                return first_factor(residual, method, options);
            } catch (const DegenerateFactor&) {
                return FactorStep{0.0, residual.col(0), residual.row(0), 0, false, "aborted"};
            }
        }();
        if (!(step.delta > 0.0) || !std::isfinite(step.delta)) {
            step.converged = false;
            d.steps.push_back(std::move(step));
            break;
        }
        residual = deflate(residual, step);
        d.steps.push_back(std::move(step));
        d.residual_trace.push_back(matrix_entrywise_norm(residual, p));
    }
    d.reconstruction_error = matrix_entrywise_norm(residual, p);
    return d;
}

FactorStep l1min_alternate(const RealMatrix& X, const RealVector& b0, double tol,
                           int max_iter, L1MinTrace* trace) {
    if (b0.size() != X.cols()) {
        throw DimensionMismatch("l1min_alternate: b0 length must equal cols(X)");
    }
    if (is_zero(b0)) {
        throw ZeroVector("l1min_alternate: b0 is the zero vector");
    }
    if (matrix_is_zero(X)) {
        throw ZeroMatrix("l1min_alternate: X is entrywise zero");
    }

    RealVector b_unit = scale(b0, 1.0 / lp_norm(b0, NormOrder::L1));
    RealVector a_raw = b_unit;  // placeholder, overwritten in the first sweep
    RealVector b_raw = b_unit;
    double obj_prev = std::numeric_limits<double>::infinity();
    int sweeps = 0;
    bool converged = false;

    // Regress every row (column) of X onto the given unit factor; the block
    // solve is exact, so the objective cannot increase across half-sweeps.
    auto solve_rows = [&X](const RealVector& b) {
        std::vector<double> out;
        out.reserve(X.rows());
        std::vector<double> vals, wts;
        for (std::size_t i = 0; i < X.rows(); ++i) {
            vals.clear();
            wts.clear();
            for (std::size_t j = 0; j < X.cols(); ++j) {
                if (b[j] != 0.0) {
                    vals.push_back(X(i, j) / b[j]);
                    wts.push_back(std::abs(b[j]));
                }
            }
            out.push_back(weighted_median(std::span<const double>(vals),
                                          std::span<const double>(wts)));
        }
        return RealVector(std::move(out));
    };
    auto solve_cols = [&X](const RealVector& a) {
        std::vector<double> out;
        out.reserve(X.cols());
        std::vector<double> vals, wts;
        for (std::size_t j = 0; j < X.cols(); ++j) {
            vals.clear();
            wts.clear();
            for (std::size_t i = 0; i < X.rows(); ++i) {
                if (a[i] != 0.0) {
                    vals.push_back(X(i, j) / a[i]);
                    wts.push_back(std::abs(a[i]));
                }
            }
            out.push_back(weighted_median(std::span<const double>(vals),
                                          std::span<const double>(wts)));
        }
        return RealVector(std::move(out));
    };

    while (sweeps < max_iter) {
        ++sweeps;
        a_raw = solve_rows(b_unit);
        if (is_zero(a_raw)) {
            throw DegenerateFactor("l1min_alternate: row factor collapsed to zero");
        }
        const RealVector a_unit = scale(a_raw, 1.0 / lp_norm(a_raw, NormOrder::L1));
        if (trace) {
            trace->objectives.push_back(rank1_l1_objective(X, a_raw, b_unit));
        }
        b_raw = solve_cols(a_unit);
        if (is_zero(b_raw)) {
            throw DegenerateFactor("l1min_alternate: column factor collapsed to zero");
        }
        const double obj = rank1_l1_objective(X, a_unit, b_raw);
        if (trace) {
            trace->objectives.push_back(obj);
        }
        b_unit = scale(b_raw, 1.0 / lp_norm(b_raw, NormOrder::L1));
        if (obj == 0.0 || obj_prev - obj <= tol * (1.0 + obj)) {
            obj_prev = obj;
            converged = true;
            break;
        }
        obj_prev = obj;
    }

    // Both raw factors carry the full scale of X (each was regressed against
    // a unit partner), so their norms agree at a fixed point and
    // delta = sqrt(||a_raw|| ||b_raw||) makes a b'/delta reproduce the fit
    // while pinning ||a||_1 = ||b||_1 = delta.
    const double na = lp_norm(a_raw, NormOrder::L1);
    const double nb = lp_norm(b_raw, NormOrder::L1);
    const double delta = std::sqrt(na * nb);
    if (trace) {
        trace->a_raw_norm = na;
        trace->b_raw_norm = nb;
    }
    return FactorStep{delta, scale(a_raw, delta / na), scale(b_raw, delta / nb),
                      sweeps, converged, "b0"};
}

NormAccounting norm_accounting(const RealMatrix& X, const Decomposition& d) {
    if (d.steps.empty()) {
        throw MethodMismatch("norm_accounting: decomposition has no steps");
    }
    for (const auto& s : d.steps) {
        if (s.a.size() != X.rows() || s.b.size() != X.cols()) {
            throw MethodMismatch("norm_accounting: decomposition does not match X");
        }
    }
    const NormOrder p = norm_order_of(d.method);
    const double pw = p == NormOrder::L2 ? 2.0 : 1.0;

    NormAccounting acc;
    acc.order = p;
    acc.full_rank =
        d.reconstruction_error <= 1e-8 * matrix_entrywise_norm(X, p);

    for (std::size_t j = 0; j < X.cols(); ++j) {
        const double n = lp_norm(X.col(j), p);
        acc.column_observed.push_back(std::pow(n, pw));
        double s = 0.0;
        for (const auto& st : d.steps) s += std::pow(std::abs(st.b[j]), pw);
        acc.column_factor.push_back(s);
    }
    for (std::size_t i = 0; i < X.rows(); ++i) {
        const double n = lp_norm(X.row(i), p);
        acc.row_observed.push_back(std::pow(n, pw));
        double s = 0.0;
        for (const auto& st : d.steps) s += std::pow(std::abs(st.a[i]), pw);
        acc.row_factor.push_back(s);
    }

    const double tn = matrix_entrywise_norm(X, p);
    acc.total_observed = std::pow(tn, pw);
    acc.total_factor = 0.0;
    for (const auto& st : d.steps) acc.total_factor += std::pow(st.delta, pw);

    // Per-step triangle inequality: ||X_a||^p <= ||a b'||^p/delta^p + ||X_{a+1}||^p,
    // where the first term reduces to delta^p under the step normalization.
    for (std::size_t s = 0; s + 1 < d.residual_trace.size(); ++s) {
        const double lhs = std::pow(d.residual_trace[s], pw);
        const double rhs =
            std::pow(d.steps[s].delta, pw) + std::pow(d.residual_trace[s + 1], pw);
        acc.triangle_holds.push_back(lhs <= rhs + 1e-9 * std::max(1.0, rhs));
    }
    return acc;
}

}  // namespace lpproj
