#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "weyl/errors.hpp"
#include "weyl/walk/lattice.hpp"

namespace {

using namespace weyl::walk;
using weyl::InvalidInput;

LatticeState random_state(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    LatticeState s(n);
    for (auto& a : s.data()) a = {g(rng), g(rng)};
    s.normalize();
    return s;
}

TEST(Lattice, ZeroStepsReturnsInput) {
    const LatticeState s = random_state(8, 1);
    const LatticeState t = step(s, Chirality::Plus, 0);
    EXPECT_EQ(t.data(), s.data());
}

TEST(Lattice, RejectsBadInput) {
    EXPECT_THROW(LatticeState(7), InvalidInput);
    EXPECT_THROW(LatticeState(0), InvalidInput);
    LatticeState s = random_state(4, 2);
    EXPECT_THROW(step(s, Chirality::Plus, -1), InvalidInput);
    s.data()[0] += 1e-3;
    EXPECT_THROW(step(s, Chirality::Plus, 1), InvalidInput);
    EXPECT_THROW(step_position_space(s, Chirality::Plus), InvalidInput);
}

TEST(Lattice, DeltaStateSpreadsToEightNeighbours) {
    for (Chirality c : {Chirality::Plus, Chirality::Minus}) {
        const Spinor chi = Spinor(1, cplx(0, 1)) / std::sqrt(2.0);
        const LatticeState d = LatticeState::delta(8, {0, 0, 0}, chi);
        const LatticeState out = step(d, c, 1);
        const NeighborhoodScheme scheme = neighborhood_matrices(c);
        LatticeState expected(8);
        for (int j = 0; j < 8; ++j) {
            const auto& y = scheme.displacements[static_cast<std::size_t>(j)];
            const Spinor v = scheme.matrices[static_cast<std::size_t>(j)] * chi;
            // (A psi)(x) = sum_y A_y psi(x + y): the delta at 0 lands on x = -y.
            for (int s = 0; s < 2; ++s) expected.at(-y[0], -y[1], -y[2], s) += v[s];
        }
        EXPECT_LT(out.max_abs_diff(expected), 1e-14);
        int support = 0;
        for (int z = 0; z < 8; ++z)
            for (int y = 0; y < 8; ++y)
                for (int x = 0; x < 8; ++x)
                    if (std::abs(out.at(x, y, z, 0)) + std::abs(out.at(x, y, z, 1)) > 1e-14) ++support;
        EXPECT_LE(support, 8);
        EXPECT_LT(step_position_space(d, c).max_abs_diff(expected), 1e-15);
    }
}

class OracleSizes : public ::testing::TestWithParam<int> {};

TEST_P(OracleSizes, FftStepMatchesShiftStep) {
    const int n = GetParam();
    for (Chirality c : {Chirality::Plus, Chirality::Minus}) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const LatticeState s = random_state(n, 100 + seed);
            const LatticeState a = step(s, c, 1);
            const LatticeState b = step_position_space(s, c);
            EXPECT_LT(a.max_abs_diff(b), 1e-10);
            EXPECT_NEAR(a.norm_squared(), 1.0, 1e-12);
            EXPECT_NEAR(b.norm_squared(), 1.0, 1e-12);
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Lattice, OracleSizes, ::testing::Values(4, 8, 16));

TEST(Lattice, StepPowersCompose) {
    const LatticeState s = random_state(8, 3);
    const LatticeState a = step(step(s, Chirality::Minus, 3), Chirality::Minus, 4);
    const LatticeState b = step(s, Chirality::Minus, 7);
    EXPECT_LT(a.max_abs_diff(b), 1e-12);
    LatticeState c = s;
    for (int i = 0; i < 7; ++i) c = step_position_space(c, Chirality::Minus);
    EXPECT_LT(c.max_abs_diff(b), 1e-12);
}

TEST(Lattice, GridWaveVectorFolding) {
    const WaveVector k = grid_wave_vector(8, 5, 4, 1);
    EXPECT_DOUBLE_EQ(k.kx, kSqrt3 * 2 * std::numbers::pi * -3 / 8);
    EXPECT_DOUBLE_EQ(k.ky, kSqrt3 * 2 * std::numbers::pi * -4 / 8);
    EXPECT_DOUBLE_EQ(k.kz, kSqrt3 * 2 * std::numbers::pi * 1 / 8);
}

TEST(Lattice, NarrowPacketDriftsAtGroupVelocity) {
    const int n = 128;
    const WaveVector kc{0.6, 0.3, 0.0};
    const double mid = n / 2.0;
    const LatticeState psi0 = gaussian_packet(n, Chirality::Plus, kc, 0.05, {mid, mid, mid});
    const PacketMoments m0 = moments(psi0, {mid, mid, mid});
    const LatticeState psi = step(psi0, Chirality::Plus, 10);
    const Vec3 v = group_velocity(kc, Chirality::Plus);
    // Unwrap the periodic coordinates around where the packet should be, not where it started.
    const Vec3 guess = (m0.centroid + 10.0 * v) * kSqrt3;
    const PacketMoments m1 = moments(psi, {guess[0], guess[1], guess[2]});
    const Vec3 drift = (m1.centroid - m0.centroid) / 10.0;
    EXPECT_LT((drift - v).norm(), 0.02 * v.norm()) << drift.transpose() << " vs " << v.transpose();
    EXPECT_NEAR(m1.norm, 1.0, 1e-10);
}

TEST(Lattice, PacketCentroidStartsAtCentre) {
    const int n = 64;
    const double mid = n / 2.0;
    double prev = INFINITY;
    for (double sigma : {0.3, 0.2, 0.08}) {
        const LatticeState psi = gaussian_packet(n, Chirality::Plus, {0.6, 0.3, 0.0}, sigma, {mid, mid, mid});
        const PacketMoments m = moments(psi, {mid, mid, mid});
        const double offset = (m.centroid - Vec3::Constant(mid / kSqrt3)).norm();
        EXPECT_LT(offset, prev);
        prev = offset;
        EXPECT_NEAR(m.norm, 1.0, 1e-12);
    }
    EXPECT_LT(prev, 0.01);
}

TEST(Lattice, Wqw1RoundTrip) {
    const LatticeState s = random_state(4, 4);
    std::stringstream buf;
    write_wqw1(buf, s, Chirality::Minus);
    const std::string bytes = buf.str();
    ASSERT_EQ(bytes.size(), 4u + 4u + 1u + 64u * 2u * 16u);
    EXPECT_EQ(bytes.substr(0, 4), "WQW1");
    EXPECT_EQ(static_cast<unsigned char>(bytes[4]), 4u);
    EXPECT_EQ(bytes[5], 0);
    EXPECT_EQ(bytes[8], 1);
    const auto [back, c] = read_wqw1(buf);
    EXPECT_EQ(c, Chirality::Minus);
    EXPECT_EQ(back.data(), s.data());

    std::stringstream bad("WQW2xxxxxxxxx");
    EXPECT_THROW(read_wqw1(bad), InvalidInput);
    std::stringstream truncated(bytes.substr(0, 100));
    EXPECT_THROW(read_wqw1(truncated), InvalidInput);
}

TEST(Lattice, DispersionCsvRoundTripsDoubles) {
    std::vector<DispersionRow> rows{dispersion_row({0.1, -0.2, 0.3}, Chirality::Plus)};
    std::ostringstream out;
    write_dispersion_csv(out, rows, false);
    std::istringstream in(out.str());
    std::string header, line;
    std::getline(in, header);
    std::getline(in, line);
    EXPECT_EQ(header, "kx,ky,kz,omega,nx,ny,nz,lambda");
    std::vector<double> vals;
    std::stringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) vals.push_back(std::stod(cell));
    ASSERT_EQ(vals.size(), 8u);
    EXPECT_EQ(vals[3], rows[0].omega);
    EXPECT_EQ(vals[7], rows[0].lambda);
}

}  // namespace
