#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "weyl/walk/walk.hpp"

namespace weyl::walk {

/// One-particle state on an N x N x N periodic grid with two spinor components.
/// Storage is x-fastest: index ((z * N + y) * N + x) * 2 + s.
class LatticeState {
public:
    LatticeState() = default;
    /// Zero state; N must be even and positive.
    explicit LatticeState(int n);

    static LatticeState delta(int n, std::array<int, 3> site, const Spinor& spin);

    int side() const { return n_; }
    std::size_t sites() const { return static_cast<std::size_t>(n_) * n_ * n_; }

    cplx& at(int x, int y, int z, int s) { return amp_[index(x, y, z, s)]; }
    const cplx& at(int x, int y, int z, int s) const { return amp_[index(x, y, z, s)]; }

    std::vector<cplx>& data() { return amp_; }
    const std::vector<cplx>& data() const { return amp_; }

    double norm_squared() const;
    void normalize();

    /// Max-abs difference; sides must match.
    double max_abs_diff(const LatticeState& other) const;
    double l2_diff(const LatticeState& other) const;

    std::size_t index(int x, int y, int z, int s) const {
        auto w = [this](int v) { return static_cast<std::size_t>(((v % n_) + n_) % n_); };
        return ((w(z) * n_ + w(y)) * n_ + w(x)) * 2 + static_cast<std::size_t>(s);
    }

private:
    int n_ = 0;
    std::vector<cplx> amp_;
};

/// Tolerance on |<psi|psi> - 1| accepted by the evolution routines.
inline constexpr double kNormTolerance = 1e-10;

/// Wave vector of FFT mode m on an N-grid: k_a = sqrt3 * 2 pi m_a / N (m folded to [-N/2, N/2)).
WaveVector grid_wave_vector(int n, int mx, int my, int mz);

/// A^steps applied in Fourier space (FFT, per-mode spectral power, inverse FFT).
LatticeState step(const LatticeState& state, Chirality c, long n_steps);

/// One application of sum_y T_y (x) A_y by shifting arrays: (A psi)(x) = sum_y A_y psi(x + y).
LatticeState step_position_space(const LatticeState& state, Chirality c);

/// Packet built in Fourier space from the +omega eigenmode, Gaussian of width
/// `sigma_k` (in grid phase units) around `center_k`, then translated to `center_x`
/// (grid coordinates). Normalized.
LatticeState gaussian_packet(int n, Chirality c, const WaveVector& center_k, double sigma_k,
                             const std::array<double, 3>& center_x);

struct PacketMoments {
    Vec3 centroid;  ///< physical units: grid coordinate / sqrt3
    double spread;  ///< rms distance from centroid, physical units
    double norm;
};

/// Moments with each coordinate unwrapped into (ref - N/2, ref + N/2].
PacketMoments moments(const LatticeState& state, const std::array<double, 3>& reference);

/// WQW1 container: magic, u32 N, u8 chirality, then N^3 * 2 little-endian complex doubles.
void write_wqw1(std::ostream& out, const LatticeState& state, Chirality c);
void write_wqw1(const std::filesystem::path& path, const LatticeState& state, Chirality c);
std::pair<LatticeState, Chirality> read_wqw1(std::istream& in);
std::pair<LatticeState, Chirality> read_wqw1(const std::filesystem::path& path);

/// CSV export: kx,ky,kz,omega,nx,ny,nz,lambda (17 significant digits).
struct DispersionRow {
    WaveVector k;
    double omega;
    Vec3 n;
    double lambda;
};
DispersionRow dispersion_row(const WaveVector& k, Chirality c);
void write_dispersion_csv(std::ostream& out, const std::vector<DispersionRow>& rows, bool rescaled_columns);

}  // namespace weyl::walk
