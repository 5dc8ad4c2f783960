#include "weyl/hopf/algebra.hpp"

#include <algorithm>

#include "weyl/errors.hpp"

namespace weyl::hopf {

namespace {

constexpr Exponents kOne{0, 0, 0, 0};

// Gauss-Jordan inverse of the pairing matrix.
PairingMatrix invert(const PairingMatrix& c) {
    PairingMatrix a = c;
    PairingMatrix inv{};
    for (int i = 0; i < 4; ++i) inv[i][i] = 1;
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        while (piv < 4 && a[piv][col].is_zero()) ++piv;
        if (piv == 4) throw InvalidInput("pairing constant matrix is singular");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const GaussianRational d = a[col][col];
        for (int j = 0; j < 4; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (int r = 0; r < 4; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            const GaussianRational f = a[r][col];
            for (int j = 0; j < 4; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

KappaCoeff bilinear_pairing(const TensorSeries& df, int mu, int nu, const PairingMatrix& c) {
    KappaCoeff out;
    for (const auto& [key, coeff] : df.terms()) {
        if (degree(key.first) != 1 || degree(key.second) != 1) continue;
        const int a = static_cast<int>(std::find(key.first.begin(), key.first.end(), 1) - key.first.begin());
        const int b = static_cast<int>(std::find(key.second.begin(), key.second.end(), 1) - key.second.begin());
        if (c[a][mu].is_zero() || c[b][nu].is_zero()) continue;
        out += coeff * KappaCoeff(c[a][mu] * c[b][nu]);
    }
    return out;
}

/// <f, x_mu x_nu - x_nu x_mu> given df = Delta f.
KappaCoeff antisymmetric_pairing(const TensorSeries& df, int mu, int nu, const PairingMatrix& c) {
    return bilinear_pairing(df, mu, nu, c) - bilinear_pairing(df, nu, mu, c);
}

}  // namespace

KappaCoeff pairing(const MomentumPoly& f, const XWord& word, const MappedModel& m) {
    for (auto w : word) {
        if (w > 3) throw InvalidInput("position index out of range");
    }
    switch (word.size()) {
        case 0: return f.constant_term();
        case 1: {
            KappaCoeff out;
            for (int mu = 0; mu < 4; ++mu) out += f.linear_coeff(mu) * KappaCoeff(m.pairing[mu][word[0]]);
            return out;
        }
        case 2: return bilinear_pairing(coproduct_of(f.truncated({2}), m.delta, {2}), word[0], word[1], m.pairing);
        default: throw DegreeOverflow("pairing is truncated at position words of length 2");
    }
}

SpacetimeTable spacetime_commutators(const MappedModel& m) {
    const PairingMatrix cinv = invert(m.pairing);
    // Generators, then 1 and the quadratic monomials for the closure test.
    std::vector<TensorSeries> probes;
    for (int s = 0; s < 4; ++s) probes.push_back(coproduct_of(MomentumPoly::generator(s), m.delta, {2}));
    probes.push_back(TensorSeries::unit());
    for (int a = 0; a < 4; ++a)
        for (int b = a; b < 4; ++b)
            probes.push_back(coproduct_of(MomentumPoly::monomial(unit_exponent(a) + unit_exponent(b)), m.delta, {2}));

    SpacetimeTable t;
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            std::array<KappaCoeff, 4> r;
            for (int s = 0; s < 4; ++s) r[s] = antisymmetric_pairing(probes[s], mu, nu, m.pairing);
            for (int rho = 0; rho < 4; ++rho) {
                KappaCoeff c;
                for (int s = 0; s < 4; ++s) c += KappaCoeff(cinv[rho][s]) * r[s];
                t.c[mu][nu][rho] = c;
            }
            // A linear combination of x's pairs to zero with 1 and with quadratic monomials.
            for (std::size_t j = 4; j < probes.size(); ++j) {
                if (!antisymmetric_pairing(probes[j], mu, nu, m.pairing).is_zero()) t.closed = false;
            }
        }
    }
    return t;
}

SpacetimeTable spacetime_commutators(const CoproductModel& model, const BasisMap& map, const PairingMatrix& pairing) {
    return spacetime_commutators(map_model(model, map, pairing));
}

SpacetimeTable kappa_minkowski_table() {
    SpacetimeTable t;
    const KappaCoeff c = KappaCoeff::inv_kappa(-GaussianRational::i());
    for (int i = 1; i < 4; ++i) {
        t.c[0][i][i] = c;
        t.c[i][0][i] = -c;
    }
    return t;
}

PhaseSpaceElement PhaseSpaceElement::scalar(const KappaCoeff& c) { return term({}, kOne, c); }

PhaseSpaceElement PhaseSpaceElement::x(int nu) {
    if (nu < 0 || nu > 3) throw InvalidInput("position index out of range");
    return term({static_cast<std::uint8_t>(nu)}, kOne, 1);
}

PhaseSpaceElement PhaseSpaceElement::p(int mu) { return term({}, unit_exponent(mu), 1); }

PhaseSpaceElement PhaseSpaceElement::momentum(const MomentumPoly& f) {
    PhaseSpaceElement out;
    for (const auto& [e, c] : f.terms()) out.add_term({{}, e}, c);
    return out;
}

PhaseSpaceElement PhaseSpaceElement::term(XWord word, const Exponents& e, const KappaCoeff& c) {
    PhaseSpaceElement out;
    out.add_term({std::move(word), e}, c);
    return out;
}

KappaCoeff PhaseSpaceElement::coeff(const XWord& w, const Exponents& e) const {
    auto it = terms_.find({w, e});
    return it == terms_.end() ? KappaCoeff{} : it->second;
}

void PhaseSpaceElement::add_term(const Key& k, const KappaCoeff& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

PhaseSpaceElement& PhaseSpaceElement::operator+=(const PhaseSpaceElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

PhaseSpaceElement& PhaseSpaceElement::operator-=(const PhaseSpaceElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

PhaseSpaceElement& PhaseSpaceElement::operator*=(const KappaCoeff& c) {
    Terms out;
    for (const auto& [k, v] : terms_) {
        KappaCoeff w = v * c;
        if (!w.is_zero()) out.emplace(k, std::move(w));
    }
    terms_ = std::move(out);
    return *this;
}

PhaseSpaceElement PhaseSpaceElement::truncated(Truncation t) const {
    PhaseSpaceElement out;
    for (const auto& [k, c] : terms_) {
        if (degree(k.second) <= t.max_degree) out.terms_.emplace(k, c);
    }
    return out;
}

PhaseSpaceElement PhaseSpaceElement::classical_part() const {
    PhaseSpaceElement out;
    for (const auto& [k, c] : terms_) out.add_term(k, c.classical_part());
    return out;
}

std::string PhaseSpaceElement::monomial_string(const Key& k, const std::array<std::string, 4>& p_names,
                                               const std::array<std::string, 4>& x_names) {
    std::string out;
    for (auto w : k.first) {
        if (!out.empty()) out += "*";
        out += x_names[w];
    }
    for (int mu = 0; mu < 4; ++mu) {
        for (int r = 0; r < k.second[mu]; ++r) {
            if (!out.empty()) out += "*";
            out += p_names[mu];
        }
    }
    return out.empty() ? "1" : out;
}

std::string PhaseSpaceElement::to_string(const std::array<std::string, 4>& p_names,
                                         const std::array<std::string, 4>& x_names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        if (!out.empty()) out += " + ";
        const std::string mono = monomial_string(k, p_names, x_names);
        out += "(" + c.to_string() + ")" + (mono == "1" ? "" : "*" + mono);
    }
    return out;
}

PhaseSpaceAlgebra::PhaseSpaceAlgebra(MappedModel m, Truncation working)
    : model_(std::move(m)), spacetime_(spacetime_commutators(model_)), working_(working) {
    if (!spacetime_.closed) throw InvalidMap("spacetime commutators do not close on the position generators");
}

PhaseSpaceElement PhaseSpaceAlgebra::order_word(const XWord& word, int depth) const {
    if (depth > 64) throw DegreeOverflow("normal ordering did not terminate");
    std::size_t i = 0;
    while (i + 1 < word.size() && word[i] <= word[i + 1]) ++i;
    if (i + 1 >= word.size()) return PhaseSpaceElement::term(word, kOne, 1);
    XWord swapped = word;
    std::swap(swapped[i], swapped[i + 1]);
    PhaseSpaceElement out = order_word(swapped, depth + 1);
    const auto& c = spacetime_.c[word[i]][word[i + 1]];
    for (int rho = 0; rho < 4; ++rho) {
        if (c[rho].is_zero()) continue;
        XWord shorter(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i));
        shorter.push_back(static_cast<std::uint8_t>(rho));
        shorter.insert(shorter.end(), word.begin() + static_cast<std::ptrdiff_t>(i) + 2, word.end());
        out += order_word(shorter, depth + 1) * c[rho];
    }
    return out;
}

PhaseSpaceElement PhaseSpaceAlgebra::normal_order(const XWord& word) const { return order_word(word, 0); }

PhaseSpaceElement PhaseSpaceAlgebra::action(const MomentumPoly& f, const XWord& word) const {
    if (word.size() > 16) throw DegreeOverflow("position word too long");
    PhaseSpaceElement out;
    const unsigned n = static_cast<unsigned>(word.size());
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        XWord left, right;
        for (unsigned j = 0; j < n; ++j) ((mask >> j) & 1u ? left : right).push_back(word[j]);
        const KappaCoeff c = pairing(f, right, model_);
        if (c.is_zero()) continue;
        out += normal_order(left) * c;
    }
    return out;
}

PhaseSpaceElement PhaseSpaceAlgebra::multiply(const PhaseSpaceElement& a, const PhaseSpaceElement& b) const {
    PhaseSpaceElement out;
    for (const auto& [ka, ca] : a.terms()) {
        const TensorSeries dp = coproduct_of(MomentumPoly::monomial(ka.second), model_.delta, working_);
        for (const auto& [kb, cb] : b.terms()) {
            for (const auto& [legs, d] : dp.terms()) {
                const Exponents pe = legs.second + kb.second;
                if (degree(pe) > working_.max_degree) continue;
                const PhaseSpaceElement acted = action(MomentumPoly::monomial(legs.first), kb.first);
                for (const auto& [ky, cy] : acted.terms()) {
                    XWord w = ka.first;
                    w.insert(w.end(), ky.first.begin(), ky.first.end());
                    const KappaCoeff coef = ca * cb * d * cy;
                    if (coef.is_zero()) continue;
                    const PhaseSpaceElement ordered = normal_order(w);
                    for (const auto& [kz, cz] : ordered.terms()) out.add_term({kz.first, pe}, coef * cz);
                }
            }
        }
    }
    return out;
}

PhaseSpaceElement PhaseSpaceAlgebra::commutator(const PhaseSpaceElement& a, const PhaseSpaceElement& b) const {
    return multiply(a, b) - multiply(b, a);
}

PhaseSpaceElement PhaseSpaceAlgebra::commutator_closed_form(const MomentumPoly& f, int nu) const {
    const TensorSeries df = coproduct_of(f, model_.delta, working_);
    const XWord x{static_cast<std::uint8_t>(nu)};
    PhaseSpaceElement out;
    for (const auto& [legs, d] : df.terms()) {
        const KappaCoeff c = pairing(MomentumPoly::monomial(legs.first), x, model_);
        if (!c.is_zero()) out.add_term({{}, legs.second}, c * d);
    }
    return out;
}

PhaseSpaceElement coregular_action(const MomentumPoly& f, const XWord& word, const CoproductModel& model,
                                   const BasisMap& map, const PairingMatrix& pairing) {
    return PhaseSpaceAlgebra(map_model(model, map, pairing)).action(f, word);
}

PhaseTable phase_space_commutators(const CoproductModel& model, const BasisMap& map, const PairingMatrix& pairing) {
    const PhaseSpaceAlgebra alg(map_model(model, map, pairing));
    PhaseTable t;
    t.kind = model.kind;
    t.map_label = map.label();
    t.pairing = pairing;
    t.p_names = map.p_names();
    t.x_names = map.x_names();
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            PhaseTableEntry e;
            e.mu = mu;
            e.nu = nu;
            e.lhs = map.p_names()[mu];
            e.rhs = map.x_names()[nu];
            e.result = alg.commutator(PhaseSpaceElement::p(mu), PhaseSpaceElement::x(nu)).truncated({2});
            t.entries.push_back(std::move(e));
        }
    }
    return t;
}

}  // namespace weyl::hopf
