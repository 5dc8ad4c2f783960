#pragma once

#include <Eigen/Dense>

#include "weyl/walk/walk.hpp"

namespace weyl::lorentz {

using walk::cplx;
using walk::SpinorMatrix;
using walk::Vec3;
using Matrix4 = Eigen::Matrix4d;

/// Minkowski metric diag(1, -1, -1, -1).
const Matrix4& eta();

struct FourVector {
    double p0 = 0.0, p1 = 0.0, p2 = 0.0, p3 = 0.0;

    static FourVector from(const Eigen::Vector4d& v) { return {v[0], v[1], v[2], v[3]}; }
    static FourVector from(double p0, const Vec3& p) { return {p0, p[0], p[1], p[2]}; }
    Eigen::Vector4d vec() const { return {p0, p1, p2, p3}; }
    Vec3 spatial() const { return {p1, p2, p3}; }
    double minkowski_square() const { return p0 * p0 - p1 * p1 - p2 * p2 - p3 * p3; }
};

/// Null cone membership used throughout: |p.p| < 1e-10 (1 + p0^2).
bool is_null(const FourVector& p, double rel_tol = 1e-10);

struct LorentzTransform {
    Matrix4 L = Matrix4::Identity();
    Vec3 beta = Vec3::Zero();   ///< rapidity
    Vec3 theta = Vec3::Zero();  ///< rotation vector

    FourVector operator()(const FourVector& p) const { return FourVector::from(L * p.vec()); }
    /// Composition as matrices; the parameter fields are cleared (no closed form).
    LorentzTransform operator*(const LorentzTransform& rhs) const;
    LorentzTransform inverse() const;
    /// max |L^T eta L - eta|
    double eta_defect() const;
};

/// Generators: K_i has (0,i) and (i,0) entries 1; J_i acts on the spatial block as -epsilon_ijk.
Matrix4 boost_generator(int i);
Matrix4 rotation_generator(int i);

/// Pure boost with rapidity |beta| along beta-hat (closed form).
LorentzTransform boost_matrix(const Vec3& beta);
/// Rotation by |theta| about theta-hat (Rodrigues).
LorentzTransform rotation_matrix(const Vec3& theta);
/// exp(beta.K + theta.J), evaluated with a 4x4 matrix exponential.
LorentzTransform lorentz_transform(const Vec3& beta, const Vec3& theta);

enum class Handedness { Right, Left };
const char* to_string(Handedness h);
inline Handedness other(Handedness h) { return h == Handedness::Right ? Handedness::Left : Handedness::Right; }

struct SpinorRep {
    Handedness handedness;
    SpinorMatrix matrix;
};

/// Right: exp((beta - i theta).sigma / 2); Left: exp((-beta - i theta).sigma / 2).
SpinorRep spinor_rep(const Vec3& beta, const Vec3& theta, Handedness h);

/// Hermitian matrix p0 I + p.sigma (Right) or p0 I - p.sigma (Left).
SpinorMatrix hermitian_form(const FourVector& p, Handedness h);
/// Inverse of hermitian_form.
FourVector from_hermitian_form(const SpinorMatrix& m, Handedness h);

/// 4x4 matrix induced by m (.) m^dagger on the hermitian form of the given handedness.
Matrix4 induced_transform(const SpinorMatrix& m, Handedness h);

}  // namespace weyl::lorentz
