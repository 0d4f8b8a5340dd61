#include "lpproj/conjugation.hpp"

#include <cmath>

namespace lpproj {

namespace {

constexpr double kDegeneracyTol = 1e-12;

}  // namespace

ConjugateSet conjugate_gram_schmidt(const std::vector<RealVector>& xs, NormOrder p) {
    if (xs.empty()) {
        throw EmptyInput("conjugate_gram_schmidt: no input vectors");
    }
    const std::size_t n = xs.front().size();
    for (const auto& x : xs) {
        if (x.size() != n) {
            throw DimensionMismatch("conjugate_gram_schmidt: vectors of unequal length");
        }
    }

    std::vector<RealVector> ys;
    ys.reserve(xs.size());
    for (const auto& x : xs) {
        RealVector z = x;
        for (const auto& y : ys) {
            const double ny = lp_norm(y, p);
            const double coeff = dot(norming_functional(y, p), z) / ny;
            z = subtract(z, scale(y, coeff));
        }
        if (lp_norm(z, p) <= kDegeneracyTol * lp_norm(x, p)) {
            throw DegenerateVector(
                "conjugate_gram_schmidt: input depends on its predecessors");
        }
        ys.push_back(std::move(z));
    }
    RealMatrix gram = conjugacy_gram(ys, p);
    return ConjugateSet{std::move(ys), p, std::move(gram)};
}

RealMatrix conjugacy_gram(const std::vector<RealVector>& ys, NormOrder p) {
    if (ys.empty()) {
        throw EmptyInput("conjugacy_gram: no input vectors");
    }
    const std::size_t n = ys.front().size();
    const std::size_t k = ys.size();
    std::vector<double> entries;
    entries.reserve(k * k);
    for (std::size_t beta = 0; beta < k; ++beta) {
        if (ys[beta].size() != n) {
            throw DimensionMismatch("conjugacy_gram: vectors of unequal length");
        }
        const RealVector lhs =
            p == NormOrder::L1 ? sign_vector(ys[beta]) : ys[beta];
        for (std::size_t alpha = 0; alpha < k; ++alpha) {
            entries.push_back(dot(lhs, ys[alpha]));
        }
    }
    return RealMatrix(k, k, std::move(entries));
}

}  // namespace lpproj
