#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weyl/hopf/algebra.hpp"
#include "weyl/hopf/kappa_limit.hpp"
#include "weyl/hopf/lie.hpp"

namespace weyl::hopf {

/// JSON: {model, basis_map, pairing_constants, table: [{lhs, rhs, result_terms: [...]}]}.
std::string phase_table_json(const PhaseTable& t);
std::string spacetime_table_json(const SpacetimeTable& t, ModelKind kind, const BasisMap& map,
                                 const PairingMatrix& pairing = default_pairing());

/// Entry of a reference commutator table. `expected` is empty for entries that are
/// not well-formed elements of the algebra; those are compared as text only.
struct PrintedEntry {
    int mu = 0;
    int nu = 0;
    std::string text;
    std::optional<PhaseSpaceElement> expected;
    /// Only the 1/kappa^0 part is compared (entries whose correction is ill-formed).
    bool classical_part_only = false;
};

/// Reference tables for the walk basis: generators (omega, k1, k2, k3), coordinates (t, x1, x2, x3).
std::vector<PrintedEntry> printed_walk_table(ModelKind kind);

struct TableComparison {
    std::string lhs;
    std::string rhs;
    std::string computed;
    std::string printed;
    bool asserted = false;
    bool match = false;
};

std::vector<TableComparison> compare_with_printed(const PhaseTable& computed, const std::vector<PrintedEntry>& printed);
std::string comparison_json(const std::vector<TableComparison>& rows);

struct FuzzTrial {
    std::uint64_t trial = 0;
    /// m[mu][alpha][beta] for alpha <= beta, as "num/den" strings.
    std::vector<std::string> coefficients;
    bool pass = false;
    std::string detail;
};

struct FuzzReport {
    ModelKind kind = ModelKind::Kappa;
    std::uint64_t seed = 0;
    std::vector<FuzzTrial> trials;
    int passes() const;
};

/// Random maps p'_mu = p_mu + (1/kappa) sum_{a<=b} m_{mu a b} p_a p_b with m rational in [-3, 3];
/// each spacetime table must equal the identity-map table. Trial t draws from seed_seq{seed, t}.
FuzzReport lemma1_fuzz(ModelKind kind, int trials, std::uint64_t seed);
/// The map used for one trial (reproducible from the report).
BasisMap random_basis_map(std::uint64_t seed, std::uint64_t trial, std::vector<std::string>* coefficients = nullptr);
/// One JSON object per line.
std::string fuzz_report_jsonl(const FuzzReport& r);

std::string kappa_limit_json(const KappaLimitReport& r);
std::string lie_report_json(const LieReport& r);

}  // namespace weyl::hopf
