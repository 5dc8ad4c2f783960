#pragma once

#include <array>
#include <complex>

#include <Eigen/Core>

namespace weyl::walk {

using cplx = std::complex<double>;
using SpinorMatrix = Eigen::Matrix2cd;
using Spinor = Eigen::Vector2cd;
using Vec3 = Eigen::Vector3d;

inline const double kSqrt3 = 1.7320508075688772935;

/// Wave vector in inverse lattice units; the walk sees it through c_a = cos(k_a / sqrt3).
struct WaveVector {
    double kx = 0.0;
    double ky = 0.0;
    double kz = 0.0;

    constexpr WaveVector() = default;
    constexpr WaveVector(double x, double y, double z) : kx(x), ky(y), kz(z) {}
    explicit WaveVector(const Vec3& v) : kx(v[0]), ky(v[1]), kz(v[2]) {}

    Vec3 vec() const { return {kx, ky, kz}; }
    double operator[](int a) const { return a == 0 ? kx : (a == 1 ? ky : kz); }
    WaveVector operator-() const { return {-kx, -ky, -kz}; }
    WaveVector operator+(const WaveVector& o) const { return {kx + o.kx, ky + o.ky, kz + o.kz}; }
    WaveVector operator-(const WaveVector& o) const { return {kx - o.kx, ky - o.ky, kz - o.kz}; }
    WaveVector operator*(double s) const { return {kx * s, ky * s, kz * s}; }
    bool operator==(const WaveVector&) const = default;

    /// k / sqrt3, the coordinates in which the small-k dispersion reads omega = |k|.
    WaveVector rescaled() const { return *this * (1.0 / kSqrt3); }
};

enum class Chirality { Plus, Minus };

inline Chirality swapped(Chirality c) { return c == Chirality::Plus ? Chirality::Minus : Chirality::Plus; }
const char* to_string(Chirality c);

/// Pauli matrices; index 0..2 -> x, y, z.
const SpinorMatrix& pauli(int a);
/// sigma for Plus, sigma^T for Minus.
SpinorMatrix chiral_pauli(int a, Chirality c);

/// Special points k0..k3 where the walk reduces to a Weyl equation.
WaveVector special_point(int region);

/// First Brillouin zone: the rhombic dodecahedron |k_a +- k_b| <= sqrt3*pi.
bool in_zone(const WaveVector& k, double slack = 1e-12);
/// Translate k by the reciprocal lattice (generated by sqrt3*pi*(1,1,0) and permutations)
/// into the first zone.
WaveVector reduce_to_zone(const WaveVector& k);

Vec3 n_vector(const WaveVector& k, Chirality c);
double lambda_scalar(const WaveVector& k, Chirality c);
SpinorMatrix walk_operator_k(const WaveVector& k, Chirality c);

/// Jacobian dn_a/dk_b.
Eigen::Matrix3d n_jacobian(const WaveVector& k, Chirality c);

/// Positive-frequency branch arccos(lambda) in [0, pi].
double dispersion(const WaveVector& k, Chirality c);

/// Analytic gradient of dispersion(); undefined (returns zero) where |n| = 0.
Vec3 group_velocity(const WaveVector& k, Chirality c);

struct Eigenmode {
    double omega;    ///< A_k psi = exp(-i omega) psi
    Spinor spinor;   ///< unit norm
};

/// Two eigenpairs, ordered (+omega, -omega) with omega = dispersion(k, c).
/// At |n| = 0 both carry omega = arccos(lambda) and the canonical basis.
std::array<Eigenmode, 2> eigenmodes(const WaveVector& k, Chirality c);

/// Residual of (sin w I - n.sigma) psi = 0 (max-abs entry).
double kernel_residual(const WaveVector& k, Chirality c, const Eigenmode& mode);

/// A_k^steps via the spectral form cos(steps w) I - i sin(steps w) nhat.sigma.
SpinorMatrix walk_operator_power(const WaveVector& k, Chirality c, long steps);

/// cos and sin of u_a = k_a / sqrt(3), for callers that tabulate them per axis.
struct AxisPhases {
    std::array<double, 3> cos;
    std::array<double, 3> sin;
};
AxisPhases axis_phases(const WaveVector& k);
SpinorMatrix walk_operator_power(const AxisPhases& p, Chirality c, long steps);

/// Position-space decomposition A = sum_y T_y (x) A_y over the 8 BCC displacements.
struct NeighborhoodScheme {
    Chirality chirality;
    /// Integer displacements (+-1,+-1,+-1); the physical vector is this / sqrt3.
    std::array<std::array<int, 3>, 8> displacements;
    std::array<SpinorMatrix, 8> matrices;

    /// sum_y exp(i k.y) A_y.
    SpinorMatrix reconstruct(const WaveVector& k) const;
};

NeighborhoodScheme neighborhood_matrices(Chirality c);

}  // namespace weyl::walk
