#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "weyl/hopf/coefficient.hpp"

namespace weyl::hopf {

/// Exponents of p0..p3.
using Exponents = std::array<std::uint8_t, 4>;

int degree(const Exponents& e);
Exponents unit_exponent(int mu);
Exponents operator+(const Exponents& a, const Exponents& b);

/// Degree cap applied after every product. The 1/kappa order is capped at 1 by KappaCoeff.
struct Truncation {
    int max_degree = 2;
};

/// Sum of monomials in the commuting generators p0..p3.
class MomentumPoly {
public:
    using Terms = std::map<Exponents, KappaCoeff>;

    MomentumPoly() = default;
    MomentumPoly(KappaCoeff c);  // NOLINT(google-explicit-constructor): constants
    static MomentumPoly generator(int mu);
    static MomentumPoly monomial(const Exponents& e, KappaCoeff c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    KappaCoeff coeff(const Exponents& e) const;
    KappaCoeff constant_term() const { return coeff({0, 0, 0, 0}); }
    KappaCoeff linear_coeff(int mu) const { return coeff(unit_exponent(mu)); }
    int degree() const;

    void add_term(const Exponents& e, const KappaCoeff& c);
    MomentumPoly& operator+=(const MomentumPoly& o);
    MomentumPoly& operator-=(const MomentumPoly& o);
    MomentumPoly& operator*=(const KappaCoeff& c);
    MomentumPoly operator-() const;
    friend MomentumPoly operator+(MomentumPoly a, const MomentumPoly& b) { return a += b; }
    friend MomentumPoly operator-(MomentumPoly a, const MomentumPoly& b) { return a -= b; }
    friend MomentumPoly operator*(MomentumPoly a, const KappaCoeff& c) { return a *= c; }
    friend MomentumPoly operator*(const KappaCoeff& c, MomentumPoly a) { return a *= c; }
    friend bool operator==(const MomentumPoly& a, const MomentumPoly& b) { return a.terms_ == b.terms_; }

    MomentumPoly multiply(const MomentumPoly& o, Truncation t = {}) const;
    MomentumPoly truncated(Truncation t) const;
    /// Terms of exactly the given degree.
    MomentumPoly homogeneous_part(int d) const;
    /// Set 1/kappa to zero.
    MomentumPoly classical_part() const;

    /// Replace p_mu by values[mu].
    MomentumPoly substitute(const std::array<MomentumPoly, 4>& values, Truncation t = {}) const;

    std::string to_string(const std::array<std::string, 4>& names) const;

private:
    Terms terms_;
};

MomentumPoly power(const MomentumPoly& base, int n, Truncation t);

/// Finite sum of (monomial (x) monomial) terms.
class TensorSeries {
public:
    using Key = std::pair<Exponents, Exponents>;
    using Terms = std::map<Key, KappaCoeff>;

    TensorSeries() = default;
    /// a (x) b
    static TensorSeries tensor(const MomentumPoly& a, const MomentumPoly& b, Truncation t = {});
    static TensorSeries unit() { return tensor(MomentumPoly(1), MomentumPoly(1)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    KappaCoeff coeff(const Exponents& left, const Exponents& right) const;

    void add_term(const Key& k, const KappaCoeff& c);
    TensorSeries& operator+=(const TensorSeries& o);
    TensorSeries& operator-=(const TensorSeries& o);
    TensorSeries& operator*=(const KappaCoeff& c);
    friend TensorSeries operator+(TensorSeries a, const TensorSeries& b) { return a += b; }
    friend TensorSeries operator-(TensorSeries a, const TensorSeries& b) { return a -= b; }
    friend bool operator==(const TensorSeries& a, const TensorSeries& b) { return a.terms_ == b.terms_; }

    /// Componentwise product; the cap applies to the total degree of both legs.
    TensorSeries multiply(const TensorSeries& o, Truncation t = {}) const;
    TensorSeries truncated(Truncation t) const;
    /// Leg exchange.
    TensorSeries flipped() const;

    /// (eps (x) id) and (id (x) eps).
    MomentumPoly counit_left() const;
    MomentumPoly counit_right() const;

    /// Substitute in both legs.
    TensorSeries substitute(const std::array<MomentumPoly, 4>& values, Truncation t = {}) const;

    std::string to_string(const std::array<std::string, 4>& names) const;

private:
    Terms terms_;
};

/// Default generator names p0..p3.
const std::array<std::string, 4>& default_p_names();

}  // namespace weyl::hopf
