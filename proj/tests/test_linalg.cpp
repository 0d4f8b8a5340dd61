#include <cmath>
#include <limits>
#include <random>

#include <doctest.h>

#include "lpproj/linalg.hpp"

using namespace lpproj;

namespace {

RealVector random_vector(std::mt19937& rng, std::size_t n, double lo = -5.0,
                         double hi = 5.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> e(n);
    for (auto& v : e) v = dist(rng);
    return RealVector(std::move(e));
}

}  // namespace

TEST_CASE("lp_norm examples") {
    CHECK(lp_norm(RealVector{6, 8}, NormOrder::L1) == doctest::Approx(14).epsilon(1e-12));
    CHECK(lp_norm(RealVector{6, 8}, NormOrder::L2) == doctest::Approx(10).epsilon(1e-12));
    CHECK(lp_norm(RealVector{0, 0, 0}, NormOrder::L1) == 0.0);
    CHECK(lp_norm(RealVector{0, 0, 0}, NormOrder::L2) == 0.0);
}

TEST_CASE("sign_vector examples") {
    const RealVector s = sign_vector(RealVector{3, -2, 0});
    CHECK(s[0] == 1.0);
    CHECK(s[1] == -1.0);
    CHECK(s[2] == 0.0);

    const RealVector b1 = sign_vector(RealVector{4, 2});
    CHECK(b1[0] == 1.0);
    CHECK(b1[1] == 1.0);

    const RealVector b2 = sign_vector(RealVector{4, -2});
    CHECK(b2[0] == 1.0);
    CHECK(b2[1] == -1.0);
}

TEST_CASE("norming_functional examples and errors") {
    const RealVector u = norming_functional(RealVector{6, 8}, NormOrder::L2);
    CHECK(u[0] == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(u[1] == doctest::Approx(0.8).epsilon(1e-12));

    const RealVector s = norming_functional(RealVector{4, -2}, NormOrder::L1);
    CHECK(s[0] == 1.0);
    CHECK(s[1] == -1.0);

    CHECK(norming_functional(RealVector{5}, NormOrder::L1)[0] == 1.0);

    CHECK_THROWS_AS(norming_functional(RealVector{0, 0}, NormOrder::L2), ZeroVector);
    // sign(0) = 0 keeps the L1 functional total
    CHECK(is_zero(norming_functional(RealVector{0, 0}, NormOrder::L1)));
}

TEST_CASE("hadamard examples") {
    const RealVector m = hadamard(RealVector{1, 0, 1}, RealVector{5, 7, 9});
    CHECK(m[0] == 5.0);
    CHECK(m[1] == 0.0);
    CHECK(m[2] == 9.0);

    const RealVector v{2.5, -1.25, 3};
    const RealVector id = hadamard(RealVector{1, 1, 1}, v);
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(id[i] == v[i]);

    const RealVector g = hadamard(RealVector{2.0 / 3.0, 0.25}, RealVector{6, 8});
    CHECK(g[0] == doctest::Approx(4).epsilon(1e-12));
    CHECK(g[1] == doctest::Approx(2).epsilon(1e-12));

    CHECK_THROWS_AS(hadamard(RealVector{1, 2}, RealVector{1, 2, 3}), DimensionMismatch);
}

TEST_CASE("matrix_entrywise_norm examples") {
    CHECK(matrix_entrywise_norm(RealMatrix{{1, -1}, {1, -1}}, NormOrder::L1) == 4.0);
    CHECK(matrix_entrywise_norm(RealMatrix{{3, 0}, {0, 4}}, NormOrder::L2) ==
          doctest::Approx(5).epsilon(1e-12));
    CHECK(matrix_entrywise_norm(RealMatrix{{0, 0}, {0, 0}}, NormOrder::L1) == 0.0);
}

TEST_CASE("construction rejects NaN/Inf and empty shapes") {
    CHECK_THROWS_AS((RealVector{std::nan("")}), InvalidValue);
    CHECK_THROWS_AS((RealVector{1.0, std::numeric_limits<double>::infinity()}),
                    InvalidValue);
    CHECK_THROWS_AS(RealVector(std::vector<double>{}), InvalidValue);
    CHECK_THROWS_AS(RealMatrix(2, 2, {1, 2, 3}), DimensionMismatch);
    CHECK_THROWS_AS(RealMatrix(1, 2, {1, std::nan("")}), InvalidValue);
}

TEST_CASE("fundamental relation phi(v)'v = ||v||_p") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 9;
        const RealVector v = random_vector(rng, n);
        if (is_zero(v)) continue;
        for (NormOrder p : {NormOrder::L1, NormOrder::L2}) {
            const double lhs = dot(norming_functional(v, p), v);
            const double rhs = lp_norm(v, p);
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, rhs));
        }
    }
}

TEST_CASE("dual norm of the norming functional is 1") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 100; ++trial) {
        const RealVector v = random_vector(rng, 2 + rng() % 8);
        if (is_zero(v)) continue;
        CHECK(lp_norm(norming_functional(v, NormOrder::L2), NormOrder::L2) ==
              doctest::Approx(1.0).epsilon(1e-12));
        double max_abs = 0.0;
        for (double e : norming_functional(v, NormOrder::L1)) {
            max_abs = std::max(max_abs, std::abs(e));
        }
        CHECK(max_abs == 1.0);
    }
}

TEST_CASE("homogeneity and triangle inequality") {
    std::mt19937 rng(31415);
    std::uniform_real_distribution<double> cdist(-4.0, 4.0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 9;
        const RealVector u = random_vector(rng, n);
        const RealVector v = random_vector(rng, n);
        const double c = cdist(rng);
        for (NormOrder p : {NormOrder::L1, NormOrder::L2}) {
            CHECK(lp_norm(scale(u, c), p) ==
                  doctest::Approx(std::abs(c) * lp_norm(u, p)).epsilon(1e-12));
            CHECK(lp_norm(add(u, v), p) <= lp_norm(u, p) + lp_norm(v, p) + 1e-12);
        }
    }
}
