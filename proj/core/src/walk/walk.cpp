#include "weyl/walk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace weyl::walk {

namespace {

constexpr double kPi = std::numbers::pi;

struct Trig {
    double c[3];
    double s[3];
};

Trig trig(const WaveVector& k) {
    Trig t{};
    for (int a = 0; a < 3; ++a) {
        const double u = k[a] / kSqrt3;
        t.c[a] = std::cos(u);
        t.s[a] = std::sin(u);
    }
    return t;
}

double sign_of(Chirality c) { return c == Chirality::Plus ? 1.0 : -1.0; }

// The three components of n and lambda are each a sum of two products of one
// trigonometric factor per axis. Encoded as (use_sin per axis, weight) pairs
// so the neighbourhood expansion and the direct evaluation share one table.
struct TripleTerm {
    std::array<bool, 3> sine;
    double weight;
};

std::array<std::array<TripleTerm, 2>, 4> product_table(Chirality c) {
    const double sg = sign_of(c);
    return {{
        // lambda = c c c -+ s s s
        {{{{false, false, false}, 1.0}, {{true, true, true}, -sg}}},
        // n_x = s c c +- c s s
        {{{{true, false, false}, 1.0}, {{false, true, true}, sg}}},
        // n_y = c s c -+ s c s
        {{{{false, true, false}, 1.0}, {{true, false, true}, -sg}}},
        // n_z = c c s +- s s c
        {{{{false, false, true}, 1.0}, {{true, true, false}, sg}}},
    }};
}

}  // namespace

const char* to_string(Chirality c) { return c == Chirality::Plus ? "plus" : "minus"; }

const SpinorMatrix& pauli(int a) {
    static const std::array<SpinorMatrix, 3> sigma = [] {
        std::array<SpinorMatrix, 3> s;
        s[0] << 0, 1, 1, 0;
        s[1] << 0, cplx(0, -1), cplx(0, 1), 0;
        s[2] << 1, 0, 0, -1;
        return s;
    }();
    return sigma[static_cast<std::size_t>(a)];
}

SpinorMatrix chiral_pauli(int a, Chirality c) {
    return c == Chirality::Plus ? pauli(a) : SpinorMatrix(pauli(a).transpose());
}

WaveVector special_point(int region) {
    const double h = kSqrt3 * kPi / 2.0;
    switch (region) {
        case 0: return {0.0, 0.0, 0.0};
        case 1: return {h, h, h};
        case 2: return {-h, -h, -h};
        case 3: return {kSqrt3 * kPi, 0.0, 0.0};
        default: return {};
    }
}

bool in_zone(const WaveVector& k, double slack) {
    const double bound = kSqrt3 * kPi + slack;
    for (int a = 0; a < 3; ++a) {
        for (int b = a + 1; b < 3; ++b) {
            if (std::abs(k[a] + k[b]) > bound || std::abs(k[a] - k[b]) > bound) return false;
        }
    }
    return true;
}

WaveVector reduce_to_zone(const WaveVector& k) {
    const double h = kSqrt3 * kPi;
    Vec3 v = k.vec();
    // Cubic period 2h is a reciprocal vector: fold into [-h, h) first.
    for (int a = 0; a < 3; ++a) v[a] -= 2.0 * h * std::floor((v[a] + h) / (2.0 * h));

    static const std::vector<Vec3> shells = [h] {
        std::vector<Vec3> g;
        for (int a = 0; a < 3; ++a) {
            for (int b = a + 1; b < 3; ++b) {
                for (int sa : {-1, 1}) {
                    for (int sb : {-1, 1}) {
                        Vec3 x = Vec3::Zero();
                        x[a] = sa * h;
                        x[b] = sb * h;
                        g.push_back(x);
                    }
                }
            }
        }
        for (int a = 0; a < 3; ++a) {
            for (int sa : {-1, 1}) {
                Vec3 x = Vec3::Zero();
                x[a] = 2.0 * sa * h;
                g.push_back(x);
            }
        }
        return g;
    }();

    for (int iter = 0; iter < 64; ++iter) {
        bool moved = false;
        for (const auto& g : shells) {
            if ((v - g).squaredNorm() < v.squaredNorm() - 1e-12) {
                v -= g;
                moved = true;
            }
        }
        if (!moved) break;
    }
    return WaveVector(v);
}

Vec3 n_vector(const WaveVector& k, Chirality c) {
    const Trig t = trig(k);
    const double sg = sign_of(c);
    return {t.s[0] * t.c[1] * t.c[2] + sg * t.c[0] * t.s[1] * t.s[2],
            t.c[0] * t.s[1] * t.c[2] - sg * t.s[0] * t.c[1] * t.s[2],
            t.c[0] * t.c[1] * t.s[2] + sg * t.s[0] * t.s[1] * t.c[2]};
}

double lambda_scalar(const WaveVector& k, Chirality c) {
    const Trig t = trig(k);
    return t.c[0] * t.c[1] * t.c[2] - sign_of(c) * t.s[0] * t.s[1] * t.s[2];
}

SpinorMatrix walk_operator_k(const WaveVector& k, Chirality c) {
    const Vec3 n = n_vector(k, c);
    SpinorMatrix a = lambda_scalar(k, c) * SpinorMatrix::Identity();
    for (int i = 0; i < 3; ++i) a -= cplx(0, 1) * n[i] * chiral_pauli(i, c);
    return a;
}

Eigen::Matrix3d n_jacobian(const WaveVector& k, Chirality c) {
    const Trig t = trig(k);
    const double sg = sign_of(c);
    const auto& C = t.c;
    const auto& S = t.s;
    Eigen::Matrix3d j;
    j(0, 0) = C[0] * C[1] * C[2] - sg * S[0] * S[1] * S[2];
    j(0, 1) = -S[0] * S[1] * C[2] + sg * C[0] * C[1] * S[2];
    j(0, 2) = -S[0] * C[1] * S[2] + sg * C[0] * S[1] * C[2];
    j(1, 0) = -S[0] * S[1] * C[2] - sg * C[0] * C[1] * S[2];
    j(1, 1) = C[0] * C[1] * C[2] + sg * S[0] * S[1] * S[2];
    j(1, 2) = -C[0] * S[1] * S[2] - sg * S[0] * C[1] * C[2];
    j(2, 0) = -S[0] * C[1] * S[2] + sg * C[0] * S[1] * C[2];
    j(2, 1) = -C[0] * S[1] * S[2] + sg * S[0] * C[1] * C[2];
    j(2, 2) = C[0] * C[1] * C[2] - sg * S[0] * S[1] * S[2];
    return j / kSqrt3;
}

double dispersion(const WaveVector& k, Chirality c) {
    return std::acos(std::clamp(lambda_scalar(k, c), -1.0, 1.0));
}

Vec3 group_velocity(const WaveVector& k, Chirality c) {
    const Trig t = trig(k);
    const double sg = sign_of(c);
    const auto& C = t.c;
    const auto& S = t.s;
    const Vec3 dlambda{-S[0] * C[1] * C[2] - sg * C[0] * S[1] * S[2],
                       -C[0] * S[1] * C[2] - sg * S[0] * C[1] * S[2],
                       -C[0] * C[1] * S[2] - sg * S[0] * S[1] * C[2]};
    const double nn = n_vector(k, c).norm();
    if (nn == 0.0) return Vec3::Zero();
    // omega = arccos(lambda), sqrt(1 - lambda^2) = |n|.
    return -dlambda / (nn * kSqrt3);
}

namespace {

// Unit eigenvector of m.sigma for eigenvalue +|m|, m != 0.
Spinor helicity_up(const Vec3& m) {
    const Vec3 u = m.normalized();
    Spinor v;
    if (u[2] > -0.5) {
        v << 1.0 + u[2], cplx(u[0], u[1]);
    } else {
        v << cplx(u[0], -u[1]), 1.0 - u[2];
    }
    return v.normalized();
}

}  // namespace

std::array<Eigenmode, 2> eigenmodes(const WaveVector& k, Chirality c) {
    const Vec3 n = n_vector(k, c);
    const double omega = dispersion(k, c);
    if (n.norm() == 0.0) {
        return {Eigenmode{omega, Spinor(1, 0)}, Eigenmode{omega, Spinor(0, 1)}};
    }
    // n . sigma^T = (n_x, -n_y, n_z) . sigma
    Vec3 m = n;
    if (c == Chirality::Minus) m[1] = -m[1];
    return {Eigenmode{omega, helicity_up(m)}, Eigenmode{-omega, helicity_up(-m)}};
}

double kernel_residual(const WaveVector& k, Chirality c, const Eigenmode& mode) {
    const Vec3 n = n_vector(k, c);
    SpinorMatrix kernel = std::sin(mode.omega) * SpinorMatrix::Identity();
    for (int i = 0; i < 3; ++i) kernel -= n[i] * chiral_pauli(i, c);
    return (kernel * mode.spinor).cwiseAbs().maxCoeff();
}

AxisPhases axis_phases(const WaveVector& k) {
    const Trig t = trig(k);
    return {{t.c[0], t.c[1], t.c[2]}, {t.s[0], t.s[1], t.s[2]}};
}

SpinorMatrix walk_operator_power(const WaveVector& k, Chirality c, long steps) {
    return walk_operator_power(axis_phases(k), c, steps);
}

SpinorMatrix walk_operator_power(const AxisPhases& p, Chirality c, long steps) {
    // Hot path of the lattice step, so the matrix is written out entry by entry.
    const auto& C = p.cos;
    const auto& S = p.sin;
    const double sg = sign_of(c);
    const double lambda = C[0] * C[1] * C[2] - sg * S[0] * S[1] * S[2];
    const double nx = S[0] * C[1] * C[2] + sg * C[0] * S[1] * S[2];
    // The transposed sigma_y of the minus walk is -sigma_y, folded into ny.
    const double ny = sg * (C[0] * S[1] * C[2] - sg * S[0] * C[1] * S[2]);
    const double nz = C[0] * C[1] * S[2] + sg * S[0] * S[1] * C[2];
    const double sin_w = std::sqrt(nx * nx + ny * ny + nz * nz);
    double cos_sw = lambda;
    double ratio = 1.0;
    if (steps != 1) {
        const double omega = std::atan2(sin_w, lambda);
        const double s = static_cast<double>(steps);
        cos_sw = std::cos(s * omega);
        // sin(s w) / sin(w), continued through the degenerate points w = 0, pi.
        ratio = sin_w > 1e-8 ? std::sin(s * omega) / sin_w : s * cos_sw / lambda;
    }
    SpinorMatrix a;
    a << cplx(cos_sw, -ratio * nz), cplx(-ratio * ny, -ratio * nx),
        cplx(ratio * ny, -ratio * nx), cplx(cos_sw, ratio * nz);
    return a;
}

SpinorMatrix NeighborhoodScheme::reconstruct(const WaveVector& k) const {
    SpinorMatrix sum = SpinorMatrix::Zero();
    for (std::size_t j = 0; j < 8; ++j) {
        const auto& d = displacements[j];
        const double phase = (d[0] * k.kx + d[1] * k.ky + d[2] * k.kz) / kSqrt3;
        sum += std::polar(1.0, phase) * matrices[j];
    }
    return sum;
}

NeighborhoodScheme neighborhood_matrices(Chirality c) {
    NeighborhoodScheme scheme{c, {}, {}};
    const auto table = product_table(c);
    std::size_t j = 0;
    for (int ex : {1, -1}) {
        for (int ey : {1, -1}) {
            for (int ez : {1, -1}) {
                const std::array<int, 3> e{ex, ey, ez};
                // cos u = (e^{iu} + e^{-iu}) / 2, sin u = (e^{iu} - e^{-iu}) / 2i
                std::array<cplx, 4> coeff{};
                for (std::size_t comp = 0; comp < 4; ++comp) {
                    for (const auto& term : table[comp]) {
                        cplx prod = term.weight;
                        for (std::size_t a = 0; a < 3; ++a) {
                            prod *= term.sine[a] ? cplx(0, -0.5 * e[a]) : cplx(0.5, 0);
                        }
                        coeff[comp] += prod;
                    }
                }
                SpinorMatrix m = coeff[0] * SpinorMatrix::Identity();
                for (int a = 0; a < 3; ++a) m -= cplx(0, 1) * coeff[static_cast<std::size_t>(a) + 1] * chiral_pauli(a, c);
                scheme.displacements[j] = e;
                scheme.matrices[j] = m;
                ++j;
            }
        }
    }
    return scheme;
}

}  // namespace weyl::walk
