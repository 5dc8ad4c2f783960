#include "weyl/hopf/polynomial.hpp"

#include <numeric>

#include "weyl/errors.hpp"

namespace weyl::hopf {

namespace {

std::string monomial_string(const Exponents& e, const std::array<std::string, 4>& names) {
    std::string out;
    for (int mu = 0; mu < 4; ++mu) {
        if (e[mu] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[mu];
        if (e[mu] > 1) out += "^" + std::to_string(e[mu]);
    }
    return out.empty() ? "1" : out;
}

std::string term_string(const KappaCoeff& c, const std::string& mono) {
    return "(" + c.to_string() + ")" + (mono == "1" ? "" : "*" + mono);
}

}  // namespace

int degree(const Exponents& e) { return e[0] + e[1] + e[2] + e[3]; }

Exponents unit_exponent(int mu) {
    if (mu < 0 || mu > 3) throw InvalidInput("generator index out of range");
    Exponents e{0, 0, 0, 0};
    e[mu] = 1;
    return e;
}

Exponents operator+(const Exponents& a, const Exponents& b) {
    Exponents e{};
    for (int i = 0; i < 4; ++i) e[i] = static_cast<std::uint8_t>(a[i] + b[i]);
    return e;
}

const std::array<std::string, 4>& default_p_names() {
    static const std::array<std::string, 4> n{"p0", "p1", "p2", "p3"};
    return n;
}

MomentumPoly::MomentumPoly(KappaCoeff c) { add_term({0, 0, 0, 0}, c); }

MomentumPoly MomentumPoly::generator(int mu) { return monomial(unit_exponent(mu)); }

MomentumPoly MomentumPoly::monomial(const Exponents& e, KappaCoeff c) {
    MomentumPoly p;
    p.add_term(e, c);
    return p;
}

KappaCoeff MomentumPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? KappaCoeff{} : it->second;
}

int MomentumPoly::degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, hopf::degree(e));
    return d;
}

void MomentumPoly::add_term(const Exponents& e, const KappaCoeff& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

MomentumPoly& MomentumPoly::operator+=(const MomentumPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MomentumPoly& MomentumPoly::operator-=(const MomentumPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MomentumPoly& MomentumPoly::operator*=(const KappaCoeff& c) {
    Terms out;
    for (const auto& [e, v] : terms_) {
        KappaCoeff w = v * c;
        if (!w.is_zero()) out.emplace(e, std::move(w));
    }
    terms_ = std::move(out);
    return *this;
}

MomentumPoly MomentumPoly::operator-() const { return *this * KappaCoeff(-1); }

MomentumPoly MomentumPoly::multiply(const MomentumPoly& o, Truncation t) const {
    MomentumPoly out;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            const Exponents e = ea + eb;
            if (hopf::degree(e) > t.max_degree) continue;
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MomentumPoly MomentumPoly::truncated(Truncation t) const {
    MomentumPoly out;
    for (const auto& [e, c] : terms_) {
        if (hopf::degree(e) <= t.max_degree) out.terms_.emplace(e, c);
    }
    return out;
}

MomentumPoly MomentumPoly::homogeneous_part(int d) const {
    MomentumPoly out;
    for (const auto& [e, c] : terms_) {
        if (hopf::degree(e) == d) out.terms_.emplace(e, c);
    }
    return out;
}

MomentumPoly MomentumPoly::classical_part() const {
    MomentumPoly out;
    for (const auto& [e, c] : terms_) out.add_term(e, c.classical_part());
    return out;
}

MomentumPoly power(const MomentumPoly& base, int n, Truncation t) {
    MomentumPoly out(1);
    for (int i = 0; i < n; ++i) out = out.multiply(base, t);
    return out;
}

MomentumPoly MomentumPoly::substitute(const std::array<MomentumPoly, 4>& values, Truncation t) const {
    MomentumPoly out;
    for (const auto& [e, c] : terms_) {
        MomentumPoly term(c);
        for (int mu = 0; mu < 4 && !term.is_zero(); ++mu) {
            if (e[mu] > 0) term = term.multiply(power(values[mu], e[mu], t), t);
        }
        out += term;
    }
    return out;
}

std::string MomentumPoly::to_string(const std::array<std::string, 4>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += term_string(c, monomial_string(e, names));
    }
    return out;
}

TensorSeries TensorSeries::tensor(const MomentumPoly& a, const MomentumPoly& b, Truncation t) {
    TensorSeries out;
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            if (degree(ea) + degree(eb) > t.max_degree) continue;
            out.add_term({ea, eb}, ca * cb);
        }
    }
    return out;
}

KappaCoeff TensorSeries::coeff(const Exponents& left, const Exponents& right) const {
    auto it = terms_.find({left, right});
    return it == terms_.end() ? KappaCoeff{} : it->second;
}

void TensorSeries::add_term(const Key& k, const KappaCoeff& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

TensorSeries& TensorSeries::operator+=(const TensorSeries& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

TensorSeries& TensorSeries::operator-=(const TensorSeries& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

TensorSeries& TensorSeries::operator*=(const KappaCoeff& c) {
    Terms out;
    for (const auto& [k, v] : terms_) {
        KappaCoeff w = v * c;
        if (!w.is_zero()) out.emplace(k, std::move(w));
    }
    terms_ = std::move(out);
    return *this;
}

TensorSeries TensorSeries::multiply(const TensorSeries& o, Truncation t) const {
    TensorSeries out;
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            const Exponents l = ka.first + kb.first;
            const Exponents r = ka.second + kb.second;
            if (degree(l) + degree(r) > t.max_degree) continue;
            out.add_term({l, r}, ca * cb);
        }
    }
    return out;
}

TensorSeries TensorSeries::truncated(Truncation t) const {
    TensorSeries out;
    for (const auto& [k, c] : terms_) {
        if (degree(k.first) + degree(k.second) <= t.max_degree) out.terms_.emplace(k, c);
    }
    return out;
}

TensorSeries TensorSeries::flipped() const {
    TensorSeries out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(Key{k.second, k.first}, c);
    return out;
}

MomentumPoly TensorSeries::counit_left() const {
    MomentumPoly out;
    for (const auto& [k, c] : terms_) {
        if (degree(k.first) == 0) out.add_term(k.second, c);
    }
    return out;
}

MomentumPoly TensorSeries::counit_right() const {
    MomentumPoly out;
    for (const auto& [k, c] : terms_) {
        if (degree(k.second) == 0) out.add_term(k.first, c);
    }
    return out;
}

TensorSeries TensorSeries::substitute(const std::array<MomentumPoly, 4>& values, Truncation t) const {
    TensorSeries out;
    std::map<Exponents, MomentumPoly> cache;
    auto image = [&](const Exponents& e) -> const MomentumPoly& {
        auto it = cache.find(e);
        if (it == cache.end()) it = cache.emplace(e, MomentumPoly::monomial(e).substitute(values, t)).first;
        return it->second;
    };
    for (const auto& [k, c] : terms_) {
        TensorSeries term = tensor(image(k.first), image(k.second), t);
        term *= c;
        out += term;
    }
    return out;
}

std::string TensorSeries::to_string(const std::array<std::string, 4>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")*" + monomial_string(k.first, names) + " (x) " +
               monomial_string(k.second, names);
    }
    return out;
}

}  // namespace weyl::hopf
