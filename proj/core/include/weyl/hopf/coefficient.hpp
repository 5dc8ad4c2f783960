#pragma once

#include <string>

#include <gmpxx.h>

namespace weyl::hopf {

/// a + b i with a, b exact rationals.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }
    static GaussianRational i() { return {0, 1}; }
    static GaussianRational rational(long num, long den = 1);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }
    bool is_zero() const { return re_ == 0 && im_ == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// "3/2", "-i", "1 - 2/3 i", "0".
    std::string to_string() const;

private:
    mpq_class re_ = 0;
    mpq_class im_ = 0;
};

/// c0 + c1 / kappa; products drop the 1/kappa^2 order.
class KappaCoeff {
public:
    KappaCoeff() = default;
    KappaCoeff(GaussianRational c0, GaussianRational c1 = {}) : c0_(std::move(c0)), c1_(std::move(c1)) {}  // NOLINT
    KappaCoeff(long c0) : c0_(c0) {}  // NOLINT(google-explicit-constructor)
    static KappaCoeff inv_kappa(GaussianRational c = 1) { return {{}, std::move(c)}; }

    const GaussianRational& c0() const { return c0_; }
    const GaussianRational& c1() const { return c1_; }
    const GaussianRational& order(int k) const { return k == 0 ? c0_ : c1_; }
    bool is_zero() const { return c0_.is_zero() && c1_.is_zero(); }
    /// Lowest 1/kappa power with a nonzero coefficient, or -1 for zero.
    int min_order() const { return !c0_.is_zero() ? 0 : (!c1_.is_zero() ? 1 : -1); }

    /// The kappa -> infinity limit.
    KappaCoeff classical_part() const { return {c0_}; }

    KappaCoeff operator-() const { return {-c0_, -c1_}; }
    KappaCoeff& operator+=(const KappaCoeff& o);
    KappaCoeff& operator-=(const KappaCoeff& o);
    KappaCoeff& operator*=(const KappaCoeff& o);
    /// Requires a nonzero order-0 part in the divisor.
    KappaCoeff& operator/=(const KappaCoeff& o);

    friend KappaCoeff operator+(KappaCoeff a, const KappaCoeff& b) { return a += b; }
    friend KappaCoeff operator-(KappaCoeff a, const KappaCoeff& b) { return a -= b; }
    friend KappaCoeff operator*(KappaCoeff a, const KappaCoeff& b) { return a *= b; }
    friend KappaCoeff operator/(KappaCoeff a, const KappaCoeff& b) { return a /= b; }
    friend bool operator==(const KappaCoeff& a, const KappaCoeff& b) { return a.c0_ == b.c0_ && a.c1_ == b.c1_; }

    /// e.g. "-i + (1/2)/kappa".
    std::string to_string() const;

private:
    GaussianRational c0_;
    GaussianRational c1_;
};

}  // namespace weyl::hopf
