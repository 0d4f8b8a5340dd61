#pragma once

#include <string>
#include <vector>

#include "lpproj/linalg.hpp"

namespace lpproj {

/// Stepwise rank-1 decomposition flavor.  SvdL2 uses the l2 norm; the other
/// two use the l1 norm.
enum class FactorMethod { SvdL2, TaxicabSvd, L1MinSvd };

NormOrder norm_order_of(FactorMethod method);

/// How first_factor seeds its iteration: one start per column, or a single
/// start from the column of maximal norm.
enum class InitStrategy { AllColumns, DominantColumn };

struct FactorOptions {
    InitStrategy strategy = InitStrategy::AllColumns;
    double tol = 1e-10;   // objective stall tolerance for the l1-min alternation
    int max_iter = 10000;
    /// Taxicab steps take their signs from tsvd_exhaustive_oracle instead of
    /// the multi-start iteration (desk scale only).
    bool exhaustive_tsvd = false;
};

/// One rank-1 factor (delta, a, b) with ||a||_p = ||b||_p = delta.
struct FactorStep {
    double delta;
    RealVector a;
    RealVector b;
    int iterations;
    bool converged;
    std::string start_label;
};

struct TransitionResult {
    RealVector a;
    RealVector b_next;
    double delta;
};

struct TsvdOracleResult {
    double delta;
    RealVector u_signs;
};

struct Decomposition {
    FactorMethod method;
    std::vector<FactorStep> steps;
    /// Residual entrywise norms: entry 0 is ||X||_p, then one value per step.
    std::vector<double> residual_trace;
    double reconstruction_error;
};

/// Row/column/total norm bookkeeping for a decomposition: exact identities
/// for a full-rank l2 run, inequalities for l1.
struct NormAccounting {
    NormOrder order;
    bool full_rank;
    std::vector<double> column_observed;  // ||X(,j)||_p (squared for p=2)
    std::vector<double> column_factor;    // sum over steps of b(j)^2 or |b(j)|
    std::vector<double> row_observed;
    std::vector<double> row_factor;
    double total_observed;  // sum x^2 or sum |x|
    double total_factor;    // sum delta^2 or sum delta
    std::vector<bool> triangle_holds;  // per-step ||X_a||^p <= delta^p + ||X_{a+1}||^p
};

/// One half-iteration of the power process for either norm:
/// a = X phi(b), b_next = X' phi(a), delta = phi(a)' X phi(b).
TransitionResult transition_step(const RealMatrix& X, const RealVector& b, NormOrder p);

/// Dominant rank-1 factor by the method's own iteration.  A step that hits
/// the iteration cap is still returned, with converged = false.
FactorStep first_factor(const RealMatrix& X, FactorMethod method,
                        const FactorOptions& options = {});

/// Exact maximizer of ||X u||_1 over u in {-1,+1}^J (first component pinned
/// to +1 by sign symmetry).  Desk scale only: throws TooLarge past 20 columns.
TsvdOracleResult tsvd_exhaustive_oracle(const RealMatrix& X);

/// X - a b'/delta.
RealMatrix deflate(const RealMatrix& X, const FactorStep& step);

/// k steps of first_factor + deflate; stops early once the residual norm
/// drops below 1e-10 * ||X||_p or a factor degenerates.
Decomposition decompose(const RealMatrix& X, FactorMethod method, std::size_t k,
                        const FactorOptions& options = {});

/// Per-half-sweep record of the l1-min alternation, for callers that want to
/// audit the descent.
struct L1MinTrace {
    std::vector<double> objectives;  // misfit after each half-sweep
    double a_raw_norm = 0.0;         // l1 norms of the unnormalized factors
    double b_raw_norm = 0.0;
};

/// Alternating per-row/per-column weighted-median regression for the
/// entrywise-l1 rank-1 fit, with the scale pinned by l1-normalizing each side
/// between half-sweeps.  The returned step is rescaled so that
/// ||a||_1 = ||b||_1 = delta with delta^2 the product of the raw factor norms.
FactorStep l1min_alternate(const RealMatrix& X, const RealVector& b0, double tol,
                           int max_iter, L1MinTrace* trace = nullptr);

NormAccounting norm_accounting(const RealMatrix& X, const Decomposition& d);

}  // namespace lpproj
