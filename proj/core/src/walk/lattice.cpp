#include "weyl/walk/lattice.hpp"

#include <cmath>
#include <mutex>
#include <numbers>

#include <fftw3.h>

#include "weyl/errors.hpp"

namespace weyl::walk {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_even_side(int n) {
    if (n <= 0 || n % 2 != 0) {
        throw InvalidInput("grid side must be a positive even integer, got " + std::to_string(n));
    }
}

void require_normalized(const LatticeState& s) {
    const double nrm = s.norm_squared();
    if (std::abs(nrm - 1.0) > kNormTolerance) {
        throw InvalidInput("state is not normalized (norm^2 = " + std::to_string(nrm) + ")");
    }
}

int fold_mode(int m, int n) { return m >= n / 2 ? m - n : m; }

// FFTW planning is not thread safe; execution with new-array APIs is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

enum class Direction { Forward, Backward };

void fft3(std::vector<cplx>& data, int n, Direction dir) {
    const int dims[3] = {n, n, n};
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan = nullptr;
    {
        std::lock_guard lock(planner_mutex());
        plan = fftw_plan_many_dft(3, dims, 2, buf, nullptr, 2, 1, buf, nullptr, 2, 1,
                                  dir == Direction::Forward ? FFTW_FORWARD : FFTW_BACKWARD,
                                  FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
}

}  // namespace

LatticeState::LatticeState(int n) : n_(n) {
    require_even_side(n);
    amp_.assign(sites() * 2, cplx{});
}

LatticeState LatticeState::delta(int n, std::array<int, 3> site, const Spinor& spin) {
    LatticeState s(n);
    const Spinor u = spin.normalized();
    s.at(site[0], site[1], site[2], 0) = u[0];
    s.at(site[0], site[1], site[2], 1) = u[1];
    return s;
}

double LatticeState::norm_squared() const {
    double acc = 0.0;
    for (const auto& a : amp_) acc += std::norm(a);
    return acc;
}

void LatticeState::normalize() {
    const double nrm = std::sqrt(norm_squared());
    if (nrm == 0.0) throw InvalidInput("cannot normalize the zero state");
    for (auto& a : amp_) a /= nrm;
}

double LatticeState::max_abs_diff(const LatticeState& other) const {
    if (other.n_ != n_) throw InvalidInput("grid sides differ");
    double m = 0.0;
    for (std::size_t i = 0; i < amp_.size(); ++i) m = std::max(m, std::abs(amp_[i] - other.amp_[i]));
    return m;
}

double LatticeState::l2_diff(const LatticeState& other) const {
    if (other.n_ != n_) throw InvalidInput("grid sides differ");
    double acc = 0.0;
    for (std::size_t i = 0; i < amp_.size(); ++i) acc += std::norm(amp_[i] - other.amp_[i]);
    return std::sqrt(acc);
}

WaveVector grid_wave_vector(int n, int mx, int my, int mz) {
    const double f = kSqrt3 * kTwoPi / n;
    return {f * fold_mode(mx, n), f * fold_mode(my, n), f * fold_mode(mz, n)};
}

LatticeState step(const LatticeState& state, Chirality c, long n_steps) {
    require_even_side(state.side());
    if (n_steps < 0) throw InvalidInput("n_steps must be non-negative");
    require_normalized(state);
    if (n_steps == 0) return state;

    const int n = state.side();
    LatticeState out = state;
    auto& data = out.data();
    fft3(data, n, Direction::Forward);
    const double scale = 1.0 / static_cast<double>(state.sites());
    // Per-axis phases are shared by every mode on a grid line.
    std::vector<double> cos_u(static_cast<std::size_t>(n)), sin_u(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) {
        const double u = grid_wave_vector(n, m, 0, 0).kx / kSqrt3;
        cos_u[static_cast<std::size_t>(m)] = std::cos(u);
        sin_u[static_cast<std::size_t>(m)] = std::sin(u);
    }
    AxisPhases p{};
    for (int z = 0; z < n; ++z) {
        p.cos[2] = cos_u[static_cast<std::size_t>(z)];
        p.sin[2] = sin_u[static_cast<std::size_t>(z)];
        for (int y = 0; y < n; ++y) {
            p.cos[1] = cos_u[static_cast<std::size_t>(y)];
            p.sin[1] = sin_u[static_cast<std::size_t>(y)];
            for (int x = 0; x < n; ++x) {
                p.cos[0] = cos_u[static_cast<std::size_t>(x)];
                p.sin[0] = sin_u[static_cast<std::size_t>(x)];
                const SpinorMatrix a = walk_operator_power(p, c, n_steps);
                const std::size_t i = out.index(x, y, z, 0);
                const Spinor v(data[i], data[i + 1]);
                const Spinor w = a * v;
                data[i] = w[0] * scale;
                data[i + 1] = w[1] * scale;
            }
        }
    }
    fft3(data, n, Direction::Backward);
    return out;
}

LatticeState step_position_space(const LatticeState& state, Chirality c) {
    require_even_side(state.side());
    require_normalized(state);
    const int n = state.side();
    const NeighborhoodScheme scheme = neighborhood_matrices(c);
    LatticeState out(n);
    for (int z = 0; z < n; ++z) {
        for (int y = 0; y < n; ++y) {
            for (int x = 0; x < n; ++x) {
                Spinor acc = Spinor::Zero();
                for (std::size_t j = 0; j < 8; ++j) {
                    const auto& d = scheme.displacements[j];
                    const Spinor v(state.at(x + d[0], y + d[1], z + d[2], 0),
                                   state.at(x + d[0], y + d[1], z + d[2], 1));
                    acc += scheme.matrices[j] * v;
                }
                out.at(x, y, z, 0) = acc[0];
                out.at(x, y, z, 1) = acc[1];
            }
        }
    }
    return out;
}

LatticeState gaussian_packet(int n, Chirality c, const WaveVector& center_k, double sigma_k,
                             const std::array<double, 3>& center_x) {
    require_even_side(n);
    if (!(sigma_k > 0.0)) throw InvalidInput("packet width must be positive");
    const Spinor chi_center = eigenmodes(center_k, c)[0].spinor;
    const Vec3 uc = center_k.vec() / kSqrt3;

    LatticeState s(n);
    auto& data = s.data();
    for (int z = 0; z < n; ++z) {
        for (int y = 0; y < n; ++y) {
            for (int x = 0; x < n; ++x) {
                const WaveVector k = grid_wave_vector(n, x, y, z);
                Vec3 du = k.vec() / kSqrt3 - uc;
                double phase = 0.0;
                for (int a = 0; a < 3; ++a) {
                    du[a] = std::remainder(du[a], kTwoPi);
                    phase -= (k[a] / kSqrt3) * center_x[static_cast<std::size_t>(a)];
                }
                const double amp = std::exp(-du.squaredNorm() / (2.0 * sigma_k * sigma_k));
                if (amp < 1e-300) continue;
                Spinor chi = eigenmodes(k, c)[0].spinor;
                // Smooth gauge: align with the eigenvector at the centre.
                const cplx overlap = chi_center.dot(chi);
                if (std::abs(overlap) > 0.0) chi *= std::conj(overlap) / std::abs(overlap);
                const std::size_t i = s.index(x, y, z, 0);
                data[i] = amp * std::polar(1.0, phase) * chi[0];
                data[i + 1] = amp * std::polar(1.0, phase) * chi[1];
            }
        }
    }
    fft3(data, n, Direction::Backward);
    s.normalize();
    return s;
}

PacketMoments moments(const LatticeState& state, const std::array<double, 3>& reference) {
    const int n = state.side();
    Vec3 first = Vec3::Zero();
    double second = 0.0;
    double total = 0.0;
    auto unwrap = [n](int v, double ref) {
        double d = v - ref;
        d -= n * std::round(d / n);
        return ref + d;
    };
    for (int z = 0; z < n; ++z) {
        for (int y = 0; y < n; ++y) {
            for (int x = 0; x < n; ++x) {
                const double w = std::norm(state.at(x, y, z, 0)) + std::norm(state.at(x, y, z, 1));
                const Vec3 r(unwrap(x, reference[0]), unwrap(y, reference[1]), unwrap(z, reference[2]));
                first += w * r;
                second += w * r.squaredNorm();
                total += w;
            }
        }
    }
    const Vec3 mean = first / total;
    const double var = std::max(0.0, second / total - mean.squaredNorm());
    return {mean / kSqrt3, std::sqrt(var) / kSqrt3, total};
}

}  // namespace weyl::walk
