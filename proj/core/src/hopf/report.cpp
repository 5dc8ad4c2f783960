#include "weyl/hopf/report.hpp"

#include <random>
#include <sstream>

#include "json.hpp"
#include "weyl/errors.hpp"

namespace weyl::hopf {

namespace {

using nlohmann::json;

json integer(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

void append_terms(json& arr, const KappaCoeff& c, const std::string& monomial) {
    for (int order = 0; order < 2; ++order) {
        const GaussianRational& g = c.order(order);
        if (g.is_zero()) continue;
        arr.push_back({{"coeff_re_num", integer(g.re().get_num())},
                       {"coeff_re_den", integer(g.re().get_den())},
                       {"coeff_im_num", integer(g.im().get_num())},
                       {"coeff_im_den", integer(g.im().get_den())},
                       {"kappa_power", -order},
                       {"monomial", monomial}});
    }
}

json pairing_json(const PairingMatrix& c) {
    json rows = json::array();
    for (const auto& row : c) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.to_string());
        rows.push_back(r);
    }
    return rows;
}

json basis_map_json(const BasisMap& map) {
    json m = {{"label", map.label()}, {"forward", json::array()}, {"inverse", json::array()}};
    for (int mu = 0; mu < 4; ++mu) {
        m["forward"].push_back(map.p_names()[mu] + " = " + map.forward()[mu].to_string(default_p_names()));
        m["inverse"].push_back("p" + std::to_string(mu) + " = " + map.inverse()[mu].to_string(map.p_names()));
    }
    return m;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Cyclic successor on 1..3.
int next(int i, int s) { return (i - 1 + s) % 3 + 1; }

PhaseSpaceElement printed_k_x(int i, int j, bool kappa) {
    const GaussianRational mi = -GaussianRational::i();
    PhaseSpaceElement e;
    if (i == j) {
        e += PhaseSpaceElement::scalar(mi);
        if (kappa) e += PhaseSpaceElement::p(0) * KappaCoeff::inv_kappa(-mi);
    }
    const GaussianRational sign = i == 2 ? GaussianRational(-1) : GaussianRational(1);
    const KappaCoeff c = KappaCoeff::inv_kappa(mi * sign);
    if (j == next(i, 1)) e += PhaseSpaceElement::p(next(i, 2)) * c;
    if (j == next(i, 2)) e += PhaseSpaceElement::p(next(i, 1)) * c;
    return e;
}

std::string printed_k_x_text(int i, int j, bool kappa) {
    std::string s;
    if (i == j) s = kappa ? "-i (1 - omega/kappa)" : "-i";
    const std::string sign = i == 2 ? "+" : "-";
    if (j == next(i, 1)) s += (s.empty() ? "" : " ") + sign + " (i/kappa) k" + std::to_string(next(i, 2));
    if (j == next(i, 2)) s += (s.empty() ? "" : " ") + sign + " (i/kappa) k" + std::to_string(next(i, 1));
    return s;
}

std::string coefficient_string(const mpq_class& q) { return q.get_str(); }

}  // namespace

std::string phase_table_json(const PhaseTable& t) {
    json j = {{"model", to_string(t.kind)},
              {"basis_map", t.map_label},
              {"pairing_constants", pairing_json(t.pairing)},
              {"table", json::array()}};
    for (const auto& e : t.entries) {
        json terms = json::array();
        for (const auto& [k, c] : e.result.terms()) {
            append_terms(terms, c, PhaseSpaceElement::monomial_string(k, t.p_names, t.x_names));
        }
        j["table"].push_back({{"lhs", e.lhs}, {"rhs", e.rhs}, {"result_terms", terms}});
    }
    return dump(j);
}

std::string spacetime_table_json(const SpacetimeTable& t, ModelKind kind, const BasisMap& map,
                                 const PairingMatrix& pairing) {
    json j = {{"model", to_string(kind)},
              {"basis_map", basis_map_json(map)},
              {"pairing_constants", pairing_json(pairing)},
              {"closed", t.closed},
              {"table", json::array()}};
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            json terms = json::array();
            for (int rho = 0; rho < 4; ++rho) append_terms(terms, t.c[mu][nu][rho], map.x_names()[rho]);
            j["table"].push_back({{"lhs", map.x_names()[mu]}, {"rhs", map.x_names()[nu]}, {"result_terms", terms}});
        }
    }
    return dump(j);
}

std::vector<PrintedEntry> printed_walk_table(ModelKind kind) {
    const bool kappa = kind == ModelKind::Kappa;
    std::vector<PrintedEntry> out;
    PrintedEntry wt{0, 0, kappa ? "i - (1/(2 kappa)) x_j |k|^2" : "i", PhaseSpaceElement::scalar(GaussianRational::i()),
                    kappa};
    out.push_back(wt);
    for (int j = 1; j <= 3; ++j) {
        PrintedEntry e{0, j, "0", PhaseSpaceElement{}, false};
        if (kappa) {
            e.text = "(i/kappa) k" + std::to_string(j) + " - (1/(2 kappa)) x" + std::to_string(j) + " |k|^2";
            e.expected.reset();
        }
        out.push_back(e);
    }
    for (int i = 1; i <= 3; ++i) {
        out.push_back({i, 0, "0", PhaseSpaceElement{}, false});
        for (int j = 1; j <= 3; ++j) out.push_back({i, j, printed_k_x_text(i, j, kappa), printed_k_x(i, j, kappa), false});
    }
    return out;
}

std::vector<TableComparison> compare_with_printed(const PhaseTable& computed, const std::vector<PrintedEntry>& printed) {
    std::vector<TableComparison> out;
    for (const auto& p : printed) {
        const auto& e = computed.at(p.mu, p.nu);
        TableComparison c;
        c.lhs = e.lhs;
        c.rhs = e.rhs;
        c.computed = e.result.to_string(computed.p_names, computed.x_names);
        c.printed = p.text;
        c.asserted = p.expected.has_value();
        if (c.asserted) {
            c.match = p.classical_part_only ? e.result.classical_part() == p.expected->classical_part()
                                            : e.result == *p.expected;
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::string comparison_json(const std::vector<TableComparison>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        arr.push_back({{"lhs", r.lhs},
                       {"rhs", r.rhs},
                       {"computed", r.computed},
                       {"printed", r.printed},
                       {"asserted", r.asserted},
                       {"match", r.asserted ? json(r.match) : json(nullptr)}});
    }
    return dump(arr);
}

int FuzzReport::passes() const {
    int n = 0;
    for (const auto& t : trials) n += t.pass ? 1 : 0;
    return n;
}

BasisMap random_basis_map(std::uint64_t seed, std::uint64_t trial, std::vector<std::string>* coefficients) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<long> den_dist(1, 4);
    std::array<MomentumPoly, 4> fwd;
    for (int mu = 0; mu < 4; ++mu) {
        fwd[mu] = MomentumPoly::generator(mu);
        for (int a = 0; a < 4; ++a) {
            for (int b = a; b < 4; ++b) {
                const long den = den_dist(rng);
                std::uniform_int_distribution<long> num_dist(-3 * den, 3 * den);
                const long num = num_dist(rng);
                const GaussianRational m = GaussianRational::rational(num, den);
                if (coefficients) coefficients->push_back(coefficient_string(m.re()));
                fwd[mu] += MomentumPoly::monomial(unit_exponent(a) + unit_exponent(b), KappaCoeff::inv_kappa(m));
            }
        }
    }
    return BasisMap::from_forward(std::move(fwd), "random-" + std::to_string(trial));
}

FuzzReport lemma1_fuzz(ModelKind kind, int trials, std::uint64_t seed) {
    if (trials < 1) throw InvalidInput("trials must be at least 1");
    const CoproductModel model = CoproductModel::make(kind);
    const SpacetimeTable reference = spacetime_commutators(model, identity_map());
    FuzzReport r;
    r.kind = kind;
    r.seed = seed;
    for (int t = 0; t < trials; ++t) {
        FuzzTrial ft;
        ft.trial = static_cast<std::uint64_t>(t);
        try {
            const BasisMap map = random_basis_map(seed, ft.trial, &ft.coefficients);
            const SpacetimeTable got = spacetime_commutators(model, map);
            ft.pass = got == reference;
            if (!ft.pass) {
                std::ostringstream d;
                d << "table differs from the identity-map table:";
                for (int mu = 0; mu < 4; ++mu) {
                    for (int nu = 0; nu < 4; ++nu) {
                        for (int rho = 0; rho < 4; ++rho) {
                            if (got.c[mu][nu][rho] == reference.c[mu][nu][rho]) continue;
                            d << " [x" << mu << ",x" << nu << "] coefficient of x" << rho << ": "
                              << got.c[mu][nu][rho].to_string() << " vs " << reference.c[mu][nu][rho].to_string()
                              << ";";
                        }
                    }
                }
                if (!got.closed) d << " (linear ansatz does not close)";
                ft.detail = d.str();
            }
        } catch (const std::exception& e) {
            ft.pass = false;
            ft.detail = e.what();
        }
        r.trials.push_back(std::move(ft));
    }
    return r;
}

std::string fuzz_report_jsonl(const FuzzReport& r) {
    std::string out;
    for (const auto& t : r.trials) {
        json j = {{"model", to_string(r.kind)},
                  {"seed", r.seed},
                  {"trial", t.trial},
                  {"map_coefficients", t.coefficients},
                  {"pass", t.pass}};
        if (!t.detail.empty()) j["detail"] = t.detail;
        out += j.dump() + "\n";
    }
    return out;
}

std::string kappa_limit_json(const KappaLimitReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"kappa", row.kappa},
                        {"deviation_from_primitive", row.deviation},
                        {"truncation_relative_error", row.truncation_error},
                        {"truncation_bound", 10.0 / (row.kappa * row.kappa)},
                        {"truncation_ok", row.truncation_ok},
                        {"K_multiplicativity_defect", row.k_multiplicativity}});
    }
    return dump({{"rows", rows},
                 {"deviation_ratios", r.ratios},
                 {"ratio_ok", r.ratio_ok},
                 {"truncation_ok", r.truncation_ok},
                 {"K_at_zero_exact", r.k_at_zero_exact}});
}

std::string lie_report_json(const LieReport& r) {
    return dump({{"antisymmetric", r.antisymmetric},
                 {"jacobi", r.jacobi},
                 {"jacobi_failures", r.jacobi_failures},
                 {"literal_N_p0_table_jacobi", r.literal_jacobi},
                 {"literal_N_p0_table_failure", r.literal_failure},
                 {"boost_fd_error", r.boost_fd_error},
                 {"rotation_fd_error", r.rotation_fd_error},
                 {"matches_matrices", r.matches_matrices}});
}

}  // namespace weyl::hopf
