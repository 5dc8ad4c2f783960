#include <gtest/gtest.h>

#include "weyl/hopf/lie.hpp"
#include "weyl/lorentz/lorentz.hpp"

namespace {

using namespace weyl::hopf;
using weyl::lorentz::boost_generator;
using weyl::lorentz::Matrix4;
using weyl::lorentz::rotation_generator;

std::complex<double> to_complex(const GaussianRational& g) { return {g.re().get_d(), g.im().get_d()}; }

/// Real 4x4 generator behind each Lorentz index: M_i = i J_i, N_i = i K_i.
Matrix4 real_generator(int a) { return a < 3 ? rotation_generator(a) : boost_generator(a - 3); }

TEST(Lie, LorentzSectorMatchesMatrixCommutators) {
    const LieStructure s = LieStructure::poincare();
    using C4 = Eigen::Matrix4cd;
    const std::complex<double> i(0, 1);
    for (int a = 0; a < 6; ++a) {
        for (int b = 0; b < 6; ++b) {
            const C4 ga = i * real_generator(a).cast<std::complex<double>>();
            const C4 gb = i * real_generator(b).cast<std::complex<double>>();
            C4 rhs = C4::Zero();
            for (int c = 0; c < 6; ++c) rhs += to_complex(s.f[a][b][c]) * i * real_generator(c).cast<std::complex<double>>();
            EXPECT_LT((ga * gb - gb * ga - rhs).cwiseAbs().maxCoeff(), 1e-15) << a << " " << b;
            for (int c = 6; c < kLieDim; ++c) EXPECT_TRUE(s.f[a][b][c].is_zero());
        }
    }
}

TEST(Lie, TranslationsTransformAsVectors) {
    // [X, p_mu] = i sum_nu G_{nu mu} p_nu with G the real matrix of X.
    const LieStructure s = LieStructure::poincare();
    for (int a = 0; a < 6; ++a) {
        const Matrix4 g = real_generator(a);
        for (int mu = 0; mu < 4; ++mu) {
            for (int nu = 0; nu < 4; ++nu) {
                EXPECT_EQ(to_complex(s.f[a][lie_p(mu)][lie_p(nu)]), std::complex<double>(0, g(nu, mu)))
                    << LieStructure::names()[a] << " p" << mu << " p" << nu;
            }
        }
    }
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            for (int c = 0; c < kLieDim; ++c) EXPECT_TRUE(s.f[lie_p(mu)][lie_p(nu)][c].is_zero());
}

TEST(Lie, SpotValues) {
    const LieStructure s = LieStructure::poincare();
    const GaussianRational i = GaussianRational::i();
    EXPECT_EQ(s.f[lie_m(1)][lie_m(2)][lie_m(3)], i);
    EXPECT_EQ(s.f[lie_n(1)][lie_n(2)][lie_m(3)], -i);
    EXPECT_EQ(s.f[lie_n(2)][lie_p(2)][lie_p(0)], i);
    EXPECT_EQ(s.f[lie_n(3)][lie_p(0)][lie_p(3)], i);
    EXPECT_EQ(s.f[lie_m(1)][lie_p(2)][lie_p(3)], i);
    EXPECT_TRUE(s.f[lie_m(1)][lie_p(0)][lie_p(0)].is_zero());
    EXPECT_EQ(LieStructure::names()[lie_p(0)], "p0");
}

TEST(Lie, JacobiAndAntisymmetry) {
    const LieStructure s = LieStructure::poincare();
    EXPECT_TRUE(is_antisymmetric(s));
    EXPECT_TRUE(jacobi_failures(s).empty());
    const LieStructure lit = LieStructure::poincare_literal();
    EXPECT_TRUE(is_antisymmetric(lit));
    EXPECT_FALSE(jacobi_failures(lit).empty());
}

TEST(Lie, ReportAgreesWithFiniteDifferences) {
    const LieReport r = lie_checks();
    EXPECT_TRUE(r.antisymmetric);
    EXPECT_TRUE(r.jacobi);
    EXPECT_FALSE(r.literal_jacobi);
    EXPECT_FALSE(r.literal_failure.empty());
    EXPECT_TRUE(r.matches_matrices);
    EXPECT_LT(r.boost_fd_error, 1e-8);
    EXPECT_LT(r.rotation_fd_error, 1e-8);
}

}  // namespace
