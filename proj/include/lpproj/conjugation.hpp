#pragma once

#include <vector>

#include "lpproj/linalg.hpp"

namespace lpproj {

/// An lp-conjugate family: phi(y_beta)'y_alpha = 0 for alpha > beta.  For p=1
/// the stored Gram is sgn(Y)'Y (lower triangular, diagonal ||y||_1); for p=2
/// it is Y'Y (diagonal ||y||_2^2).
struct ConjugateSet {
    std::vector<RealVector> vectors;
    NormOrder order;
    RealMatrix gram;
};

/// Gram-Schmidt-like conjugation: y_1 = x_1 and
/// y_{a+1} = (I - Q_a)...(I - Q_1) x_{a+1}, earlier operators applied first
/// (for p=1 the operators do not commute, so the order is part of the
/// contract).  Throws DegenerateVector when an output collapses to zero.
ConjugateSet conjugate_gram_schmidt(const std::vector<RealVector>& xs, NormOrder p);

/// The conjugacy-structure matrix: entries sgn(y_row)'y_col for p=1, Y'Y for p=2.
RealMatrix conjugacy_gram(const std::vector<RealVector>& ys, NormOrder p);

}  // namespace lpproj
