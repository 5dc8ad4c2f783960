#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "weyl/hopf/model.hpp"

namespace weyl::hopf {

/// Word x_{w0} x_{w1} ... in the position generators (indices 0..3).
using XWord = std::vector<std::uint8_t>;

/// <f, word>: the counit for the empty word, sum_mu f_mu C_{mu a} for one letter and the
/// p_alpha (x) p_beta coefficients of Delta f against C for two letters. Longer words throw DegreeOverflow.
KappaCoeff pairing(const MomentumPoly& f, const XWord& word, const MappedModel& m);

/// [x_mu, x_nu] = sum_rho c[mu][nu][rho] x_rho.
struct SpacetimeTable {
    std::array<std::array<std::array<KappaCoeff, 4>, 4>, 4> c{};
    /// Whether the pairings with 1 and with every degree-2 monomial vanish, i.e. the linear ansatz closes.
    bool closed = true;

    const std::array<KappaCoeff, 4>& entry(int mu, int nu) const { return c[mu][nu]; }
    friend bool operator==(const SpacetimeTable& a, const SpacetimeTable& b) { return a.c == b.c && a.closed == b.closed; }
};

SpacetimeTable spacetime_commutators(const MappedModel& m);
SpacetimeTable spacetime_commutators(const CoproductModel& model, const BasisMap& map,
                                     const PairingMatrix& pairing = default_pairing());
/// [x0, xi] = -(i/kappa) xi, everything else zero.
SpacetimeTable kappa_minkowski_table();

/// Normal-ordered sum of (x-word) (p-monomial) terms, x-words sorted ascending.
class PhaseSpaceElement {
public:
    using Key = std::pair<XWord, Exponents>;
    using Terms = std::map<Key, KappaCoeff>;

    PhaseSpaceElement() = default;
    static PhaseSpaceElement scalar(const KappaCoeff& c);
    static PhaseSpaceElement x(int nu);
    static PhaseSpaceElement p(int mu);
    static PhaseSpaceElement momentum(const MomentumPoly& f);
    /// Caller guarantees the word is sorted.
    static PhaseSpaceElement term(XWord word, const Exponents& e, const KappaCoeff& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    KappaCoeff coeff(const XWord& w, const Exponents& e) const;

    void add_term(const Key& k, const KappaCoeff& c);
    PhaseSpaceElement& operator+=(const PhaseSpaceElement& o);
    PhaseSpaceElement& operator-=(const PhaseSpaceElement& o);
    PhaseSpaceElement& operator*=(const KappaCoeff& c);
    friend PhaseSpaceElement operator+(PhaseSpaceElement a, const PhaseSpaceElement& b) { return a += b; }
    friend PhaseSpaceElement operator-(PhaseSpaceElement a, const PhaseSpaceElement& b) { return a -= b; }
    friend PhaseSpaceElement operator*(PhaseSpaceElement a, const KappaCoeff& c) { return a *= c; }
    friend bool operator==(const PhaseSpaceElement& a, const PhaseSpaceElement& b) { return a.terms_ == b.terms_; }

    /// Drops p-monomials above the cap.
    PhaseSpaceElement truncated(Truncation t) const;
    PhaseSpaceElement classical_part() const;

    std::string to_string(const std::array<std::string, 4>& p_names, const std::array<std::string, 4>& x_names) const;
    static std::string monomial_string(const Key& k, const std::array<std::string, 4>& p_names,
                                       const std::array<std::string, 4>& x_names);

private:
    Terms terms_;
};

/// Left cross product T* x| T: (X (x) P)(X' (x) P') = X (P(1) |> X') (x) P(2) P'.
class PhaseSpaceAlgebra {
public:
    /// `working` caps p-degrees inside products; results are exact below it.
    explicit PhaseSpaceAlgebra(MappedModel m, Truncation working = {4});

    const MappedModel& model() const { return model_; }
    const SpacetimeTable& spacetime() const { return spacetime_; }

    /// Sorts a word with x_b x_a = x_a x_b + [x_b, x_a] for b > a.
    PhaseSpaceElement normal_order(const XWord& word) const;
    /// Left coregular action f |> word = <f, word(2)> word(1) with primitive position coproduct.
    PhaseSpaceElement action(const MomentumPoly& f, const XWord& word) const;

    PhaseSpaceElement multiply(const PhaseSpaceElement& a, const PhaseSpaceElement& b) const;
    PhaseSpaceElement commutator(const PhaseSpaceElement& a, const PhaseSpaceElement& b) const;
    /// sum <p(1), x_nu> p(2), the closed form of [p, x_nu] in the cross product.
    PhaseSpaceElement commutator_closed_form(const MomentumPoly& f, int nu) const;

private:
    PhaseSpaceElement order_word(const XWord& word, int depth) const;

    MappedModel model_;
    SpacetimeTable spacetime_;
    Truncation working_;
};

PhaseSpaceElement coregular_action(const MomentumPoly& f, const XWord& word, const CoproductModel& model,
                                   const BasisMap& map, const PairingMatrix& pairing = default_pairing());

struct PhaseTableEntry {
    int mu = 0;  ///< generator p'_mu
    int nu = 0;  ///< coordinate x'_nu
    std::string lhs;
    std::string rhs;
    PhaseSpaceElement result;
};

struct PhaseTable {
    ModelKind kind = ModelKind::Classical;
    std::string map_label;
    PairingMatrix pairing{};
    std::array<std::string, 4> p_names;
    std::array<std::string, 4> x_names;
    /// Row-major over (mu, nu).
    std::vector<PhaseTableEntry> entries;

    const PhaseTableEntry& at(int mu, int nu) const { return entries.at(static_cast<std::size_t>(mu * 4 + nu)); }
};

/// [p'_mu, x'_nu] for all mu, nu, truncated to degree 2.
PhaseTable phase_space_commutators(const CoproductModel& model, const BasisMap& map,
                                   const PairingMatrix& pairing = default_pairing());

}  // namespace weyl::hopf
