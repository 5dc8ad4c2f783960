#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "weyl/hopf/kappa_limit.hpp"

namespace {

using namespace weyl::hopf;

Momentum random_momentum(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> e(0.1, 1.0), s(-0.5, 0.5);
    return {e(rng), s(rng), s(rng), s(rng)};
}

double spatial2(const Momentum& p) { return p[1] * p[1] + p[2] * p[2] + p[3] * p[3]; }

/// K from p0 = (kappa/2)(K - 1/K) + |p|^2 / (2 kappa K), solved in long double by bisection.
long double oracle_K(const Momentum& p, long double kappa) {
    auto f = [&](long double k) {
        return kappa / 2 * (k - 1 / k) + static_cast<long double>(spatial2(p)) / (2 * kappa * k) - p[0];
    };
    long double lo = 1e-3L, hi = 1e3L;
    for (int i = 0; i < 200; ++i) {
        const long double mid = (lo + hi) / 2;
        (f(mid) > 0 ? hi : lo) = mid;
    }
    return (lo + hi) / 2;
}

TEST(KappaLimit, KMatchesImplicitDefinition) {
    std::mt19937_64 rng(1);
    for (double kappa : {2.0, 10.0, 1e3}) {
        for (int i = 0; i < 20; ++i) {
            const Momentum p = random_momentum(rng);
            EXPECT_NEAR(kappa_K(p, kappa), static_cast<double>(oracle_K(p, kappa)), 1e-13);
            EXPECT_NEAR(kappa_log_K(p, kappa), std::log(static_cast<double>(oracle_K(p, kappa))), 1e-13);
        }
    }
    EXPECT_EQ(kappa_K({0, 0, 0, 0}, 1e6), 1.0);
}

TEST(KappaLimit, FullCoproductIsAGroupLaw) {
    std::mt19937_64 rng(2);
    for (double kappa : {3.0, 50.0}) {
        for (int i = 0; i < 20; ++i) {
            const Momentum p = random_momentum(rng), q = random_momentum(rng), r = random_momentum(rng);
            const Momentum pq = kappa_coproduct_full(p, q, kappa);
            // K is multiplicative and the product is associative.
            EXPECT_NEAR(kappa_K(pq, kappa), kappa_K(p, kappa) * kappa_K(q, kappa), 1e-12);
            const Momentum a = kappa_coproduct_full(pq, r, kappa);
            const Momentum b = kappa_coproduct_full(p, kappa_coproduct_full(q, r, kappa), kappa);
            for (int mu = 0; mu < 4; ++mu) EXPECT_NEAR(a[mu], b[mu], 1e-12);
            const Momentum zero{0, 0, 0, 0};
            const Momentum pz = kappa_coproduct_full(p, zero, kappa), zp = kappa_coproduct_full(zero, p, kappa);
            for (int mu = 0; mu < 4; ++mu) {
                EXPECT_NEAR(pz[mu], p[mu], 1e-13);
                EXPECT_NEAR(zp[mu], p[mu], 1e-13);
            }
        }
    }
}

TEST(KappaLimit, BilinearTruncationByHand) {
    const Momentum p{0.5, 0.1, -0.2, 0.3}, q{0.25, 0.4, 0.0, -0.1};
    const double kappa = 8.0;
    const Momentum b = kappa_coproduct_bilinear(p, q, kappa);
    EXPECT_DOUBLE_EQ(b[0], 0.75 + (0.04 + 0.0 - 0.03) / 8.0);
    EXPECT_DOUBLE_EQ(b[1], 0.5 + 0.1 * 0.25 / 8.0);
    EXPECT_DOUBLE_EQ(b[2], -0.2 + -0.2 * 0.25 / 8.0);
    EXPECT_DOUBLE_EQ(b[3], 0.2 + 0.3 * 0.25 / 8.0);
    const Momentum s = primitive_coproduct(p, q);
    for (int mu = 0; mu < 4; ++mu) EXPECT_DOUBLE_EQ(s[mu], p[mu] + q[mu]);
}

TEST(KappaLimit, FirstOrderPartEqualsBilinearTruncation) {
    std::mt19937_64 rng(3);
    const Momentum p = random_momentum(rng), q = random_momentum(rng);
    for (double kappa : {1e2, 1e3, 1e4}) {
        const Momentum f = kappa_coproduct_full(p, q, kappa), b = kappa_coproduct_bilinear(p, q, kappa),
                       s = primitive_coproduct(p, q);
        for (int mu = 0; mu < 4; ++mu) {
            // kappa (full - primitive) -> kappa (bilinear - primitive) with an O(1/kappa) gap
            EXPECT_NEAR(kappa * (f[mu] - s[mu]), kappa * (b[mu] - s[mu]), 5.0 / kappa);
        }
    }
}

TEST(KappaLimit, Report) {
    const KappaLimitReport r = kappa_classical_limit({1e3, 1e6});
    ASSERT_EQ(r.rows.size(), 2u);
    ASSERT_EQ(r.ratios.size(), 1u);
    EXPECT_TRUE(r.ratio_ok);
    EXPECT_TRUE(r.truncation_ok);
    EXPECT_TRUE(r.k_at_zero_exact);
    EXPECT_NEAR(r.ratios[0], 1e3, 100.0);
    for (const auto& row : r.rows) {
        EXPECT_LT(row.truncation_error, 10.0 / (row.kappa * row.kappa));
        EXPECT_LT(row.k_multiplicativity, 1e-14);
    }
    const KappaLimitReport chain = kappa_classical_limit({1e2, 1e3, 1e4, 1e5});
    EXPECT_TRUE(chain.ratio_ok);
    EXPECT_EQ(chain.ratios.size(), 3u);
}

}  // namespace
