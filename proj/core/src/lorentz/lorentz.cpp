#include "weyl/lorentz/lorentz.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace weyl::lorentz {

namespace {

Eigen::Matrix3d cross_matrix(const Vec3& v) {
    Eigen::Matrix3d m;
    m << 0.0, -v[2], v[1], v[2], 0.0, -v[0], -v[1], v[0], 0.0;
    return m;
}

// exp(a.sigma) for complex a: cosh(s) I + sinh(s)/s a.sigma with s^2 = a.a.
SpinorMatrix exp_pauli(const Eigen::Vector3cd& a) {
    const cplx s2 = a[0] * a[0] + a[1] * a[1] + a[2] * a[2];
    const cplx s = std::sqrt(s2);
    cplx c, sh;
    if (std::abs(s) < 1e-4) {
        c = 1.0 + s2 / 2.0 + s2 * s2 / 24.0;
        sh = 1.0 + s2 / 6.0 + s2 * s2 / 120.0;
    } else {
        c = std::cosh(s);
        sh = std::sinh(s) / s;
    }
    SpinorMatrix m = c * SpinorMatrix::Identity();
    for (int i = 0; i < 3; ++i) m += sh * a[i] * walk::pauli(i);
    return m;
}

}  // namespace

const Matrix4& eta() {
    static const Matrix4 e = Eigen::Vector4d(1.0, -1.0, -1.0, -1.0).asDiagonal();
    return e;
}

bool is_null(const FourVector& p, double rel_tol) {
    return std::abs(p.minkowski_square()) < rel_tol * (1.0 + p.p0 * p.p0);
}

LorentzTransform LorentzTransform::operator*(const LorentzTransform& rhs) const {
    LorentzTransform out;
    out.L = L * rhs.L;
    return out;
}

LorentzTransform LorentzTransform::inverse() const {
    LorentzTransform out;
    out.L = eta() * L.transpose() * eta();
    out.beta = -beta;
    out.theta = -theta;
    // exp(-X) is the inverse of exp(X), so negating both parameters is exact.
    return out;
}

double LorentzTransform::eta_defect() const {
    return (L.transpose() * eta() * L - eta()).cwiseAbs().maxCoeff();
}

Matrix4 boost_generator(int i) {
    Matrix4 k = Matrix4::Zero();
    k(0, i + 1) = 1.0;
    k(i + 1, 0) = 1.0;
    return k;
}

Matrix4 rotation_generator(int i) {
    Matrix4 j = Matrix4::Zero();
    Vec3 e = Vec3::Zero();
    e[i] = 1.0;
    j.bottomRightCorner<3, 3>() = cross_matrix(e);
    return j;
}

LorentzTransform boost_matrix(const Vec3& beta) {
    LorentzTransform t;
    t.beta = beta;
    const double r = beta.norm();
    if (r == 0.0) return t;
    const Vec3 nh = beta / r;
    const double ch = std::cosh(r);
    const double sh = std::sinh(r);
    t.L(0, 0) = ch;
    t.L.block<1, 3>(0, 1) = sh * nh.transpose();
    t.L.block<3, 1>(1, 0) = sh * nh;
    t.L.bottomRightCorner<3, 3>() = Eigen::Matrix3d::Identity() + (ch - 1.0) * nh * nh.transpose();
    return t;
}

LorentzTransform rotation_matrix(const Vec3& theta) {
    LorentzTransform t;
    t.theta = theta;
    const double phi = theta.norm();
    if (phi == 0.0) return t;
    const Eigen::Matrix3d k = cross_matrix(theta / phi);
    t.L.bottomRightCorner<3, 3>() =
        Eigen::Matrix3d::Identity() + std::sin(phi) * k + (1.0 - std::cos(phi)) * k * k;
    return t;
}

LorentzTransform lorentz_transform(const Vec3& beta, const Vec3& theta) {
    Matrix4 x = Matrix4::Zero();
    for (int i = 0; i < 3; ++i) x += beta[i] * boost_generator(i) + theta[i] * rotation_generator(i);
    LorentzTransform t;
    t.L = x.exp();
    t.beta = beta;
    t.theta = theta;
    return t;
}

const char* to_string(Handedness h) { return h == Handedness::Right ? "right" : "left"; }

SpinorRep spinor_rep(const Vec3& beta, const Vec3& theta, Handedness h) {
    const double sb = h == Handedness::Right ? 0.5 : -0.5;
    const Eigen::Vector3cd a = sb * beta.cast<cplx>() - cplx(0.0, 0.5) * theta.cast<cplx>();
    return {h, exp_pauli(a)};
}

SpinorMatrix hermitian_form(const FourVector& p, Handedness h) {
    const double s = h == Handedness::Right ? 1.0 : -1.0;
    SpinorMatrix m = p.p0 * SpinorMatrix::Identity();
    m += s * p.p1 * walk::pauli(0) + s * p.p2 * walk::pauli(1) + s * p.p3 * walk::pauli(2);
    return m;
}

FourVector from_hermitian_form(const SpinorMatrix& m, Handedness h) {
    const double s = h == Handedness::Right ? 0.5 : -0.5;
    return {0.5 * m.trace().real(), s * (walk::pauli(0) * m).trace().real(),
            s * (walk::pauli(1) * m).trace().real(), s * (walk::pauli(2) * m).trace().real()};
}

Matrix4 induced_transform(const SpinorMatrix& m, Handedness h) {
    Matrix4 out;
    for (int nu = 0; nu < 4; ++nu) {
        Eigen::Vector4d e = Eigen::Vector4d::Zero();
        e[nu] = 1.0;
        const SpinorMatrix hm = m * hermitian_form(FourVector::from(e), h) * m.adjoint();
        out.col(nu) = from_hermitian_form(hm, h).vec();
    }
    return out;
}

}  // namespace weyl::lorentz
