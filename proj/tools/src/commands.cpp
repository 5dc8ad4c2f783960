#include <cmath>
#include <iomanip>
#include <locale>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "weyl/cli/cli.hpp"
#include "weyl/errors.hpp"
#include "weyl/hopf/report.hpp"
#include "weyl/lorentz/deformation.hpp"
#include "weyl/walk/lattice.hpp"

namespace weyl::cli {

namespace {

using nlohmann::json;
using walk::Chirality;
using walk::kSqrt3;
using walk::Vec3;
using walk::WaveVector;

constexpr double kPi = std::numbers::pi;

Chirality chirality_of(const Settings& s) {
    const std::string v = s.str("chirality", "plus");
    if (v == "plus" || v == "+") return Chirality::Plus;
    if (v == "minus" || v == "-") return Chirality::Minus;
    throw ConfigError("chirality must be plus or minus, got '" + v + "'");
}

bool json_format(const Settings& s, bool csv_allowed = true) {
    const std::string f = s.str("format", csv_allowed ? "csv" : "json");
    if (f == "json") return true;
    if (f == "csv" && csv_allowed) return false;
    throw ConfigError("unsupported format '" + f + "' for " + s.subcommand());
}

Vec3 vec3_of(const Settings& s, const std::string& key, const Vec3& fallback) {
    const auto v = s.reals(key, {fallback[0], fallback[1], fallback[2]});
    if (v.size() != 3) throw ConfigError(key + " needs three comma-separated values");
    return {v[0], v[1], v[2]};
}

std::uint64_t seed_of(const Settings& s) {
    const long v = s.integer("seed", 1);
    if (v < 0) throw ConfigError("seed must be non-negative");
    return static_cast<std::uint64_t>(v);
}

json vec_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

}  // namespace

int cmd_dispersion(const Settings& s, std::ostream& out, std::ostream& log) {
    const Chirality c = chirality_of(s);
    const long r = s.integer("grid", 16);
    if (r < 2) throw ConfigError("grid resolution must be at least 2");
    const bool as_json = json_format(s);

    std::vector<walk::DispersionRow> rows;
    rows.reserve(static_cast<std::size_t>(r * r * r));
    auto axis = [r](long m) { return kSqrt3 * (-kPi + 2.0 * kPi * static_cast<double>(m) / static_cast<double>(r)); };
    for (long mz = 0; mz < r; ++mz)
        for (long my = 0; my < r; ++my)
            for (long mx = 0; mx < r; ++mx) rows.push_back(walk::dispersion_row({axis(mx), axis(my), axis(mz)}, c));

    if (!as_json) {
        walk::write_dispersion_csv(out, rows, true);
    } else {
        json j = {{"chirality", walk::to_string(c)}, {"resolution", r}, {"rows", json::array()}};
        for (const auto& row : rows) {
            const WaveVector u = row.k.rescaled();
            j["rows"].push_back({{"kx", row.k.kx}, {"ky", row.k.ky}, {"kz", row.k.kz}, {"omega", row.omega},
                                 {"nx", row.n[0]}, {"ny", row.n[1]}, {"nz", row.n[2]}, {"lambda", row.lambda},
                                 {"ux", u.kx}, {"uy", u.ky}, {"uz", u.kz}});
        }
        emit(out, j);
    }
    log << "dispersion: " << rows.size() << " rows, chirality " << walk::to_string(c) << "\n";
    return kOk;
}

int cmd_evolve(const Settings& s, std::ostream& out, std::ostream& log) {
    const Chirality c = chirality_of(s);
    const long n = s.integer("grid", 64);
    if (n <= 0 || n % 2 != 0) throw ConfigError("grid side must be even and positive");
    const long steps = s.integer("steps", 10);
    if (steps < 0) throw ConfigError("steps must be non-negative");
    const bool as_json = json_format(s);

    const Vec3 center_k = vec3_of(s, "center_k", {0.6, 0.3, 0.0});
    const double sigma_k = s.real("sigma_k", 0.08);
    if (!(sigma_k > 0.0)) throw ConfigError("sigma_k must be positive");
    const double mid = static_cast<double>(n) / 2.0 / kSqrt3;
    const Vec3 center_x = vec3_of(s, "center_x", {mid, mid, mid});

    const std::array<double, 3> grid_center{center_x[0] * kSqrt3, center_x[1] * kSqrt3, center_x[2] * kSqrt3};
    const walk::LatticeState psi0 =
        walk::gaussian_packet(static_cast<int>(n), c, WaveVector(center_k), sigma_k, grid_center);

    struct Row {
        long step;
        walk::PacketMoments m;
    };
    std::vector<Row> rows;
    walk::LatticeState psi = psi0;
    std::array<double, 3> ref = grid_center;
    for (long t = 0; t <= steps; ++t) {
        if (t > 0) psi = walk::step(psi0, c, t);
        const walk::PacketMoments m = walk::moments(psi, ref);
        for (int a = 0; a < 3; ++a) ref[static_cast<std::size_t>(a)] = m.centroid[a] * kSqrt3;
        rows.push_back({t, m});
    }

    const Vec3 v_expected = walk::group_velocity(WaveVector(center_k), c);
    Vec3 v_measured = Vec3::Zero();
    if (steps > 0) v_measured = (rows.back().m.centroid - rows.front().m.centroid) / static_cast<double>(steps);
    double norm_drift = 0.0;
    for (const auto& r : rows) norm_drift = std::max(norm_drift, std::abs(r.m.norm - 1.0));

    if (as_json) {
        json j = {{"chirality", walk::to_string(c)}, {"grid", n}, {"steps", steps},
                  {"center_k", vec_json(center_k)}, {"sigma_k", sigma_k}, {"center_x", vec_json(center_x)},
                  {"group_velocity", vec_json(v_expected)}, {"mean_drift", vec_json(v_measured)},
                  {"rows", json::array()}};
        for (const auto& r : rows) {
            j["rows"].push_back({{"step", r.step}, {"centroid", vec_json(r.m.centroid)},
                                 {"spread", r.m.spread}, {"norm", r.m.norm}});
        }
        emit(out, j);
    } else {
        std::ostringstream buf;
        buf.imbue(std::locale::classic());
        buf << std::setprecision(17) << "step,cx,cy,cz,spread,norm\n";
        for (const auto& r : rows) {
            buf << r.step << ',' << r.m.centroid[0] << ',' << r.m.centroid[1] << ',' << r.m.centroid[2] << ','
                << r.m.spread << ',' << r.m.norm << '\n';
        }
        out << buf.str();
    }

    if (s.has("dump_state")) walk::write_wqw1(s.str("dump_state", ""), psi, c);

    log << std::setprecision(6) << "evolve: mean drift (" << v_measured[0] << ", " << v_measured[1] << ", "
        << v_measured[2] << ") per step, group velocity (" << v_expected[0] << ", " << v_expected[1] << ", "
        << v_expected[2] << "), max |norm - 1| = " << norm_drift << "\n";
    if (norm_drift > walk::kNormTolerance) {
        log << "assertion failed: walk unitarity, norm drift " << norm_drift << " > 1e-10\n";
        return kMismatch;
    }
    return kOk;
}

int cmd_boost_check(const Settings& s, std::ostream& out, std::ostream& log) {
    const Chirality c = chirality_of(s);
    const bool as_json = json_format(s);

    lorentz::DeformationConfig cfg;
    const std::string g = s.str("g", "secant");
    if (g == "unit") {
        cfg.g = lorentz::GFunction::unit();
    } else if (g == "secant") {
        cfg.g = lorentz::GFunction::secant();
    } else if (g == "custom") {
        if (!s.has("g_table")) throw ConfigError("g = custom needs g_table");
        std::istringstream in("g_choice = custom\ng_table = " + s.str("g_table", ""));
        cfg.g = lorentz::parse_deformation_config(in).g;
    } else {
        throw ConfigError("g must be unit, secant or custom, got '" + g + "'");
    }
    if (g != "custom" && s.has("g_table")) throw ConfigError("g_table given without g = custom");
    cfg.safe_radius = s.real("safe_radius", cfg.safe_radius);
    cfg.newton_tol = s.real("newton_tol", cfg.newton_tol);
    cfg.newton_max_iter = static_cast<int>(s.integer("newton_max_iter", cfg.newton_max_iter));
    const long region = s.integer("region", 0);
    if (region < 0 || region > 3) throw ConfigError("region must be 0..3");
    const long points = s.integer("points", 200);
    if (points <= 0) throw ConfigError("points must be positive");
    const double beta_max = s.real("beta_max", 0.5);
    if (beta_max < 0.0) throw ConfigError("beta_max must be non-negative");
    const bool fixed_beta = s.has("beta");
    const Vec3 beta_fixed = vec3_of(s, "beta", Vec3::Zero());
    const Vec3 theta = vec3_of(s, "theta", Vec3::Zero());
    const bool swap = s.flag("swap_handedness");

    lorentz::verify_safe_region(cfg, static_cast<int>(region), c);

    std::mt19937_64 rng(seed_of(s));
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::normal_distribution<double> gauss;
    const WaveVector k_i = walk::special_point(static_cast<int>(region));
    const double half = cfg.safe_radius / 2.0;

    std::vector<lorentz::BoostScanRow> rows;
    long rejected = 0;
    const long max_attempts = 100 * points;
    long attempts = 0;
    while (static_cast<long>(rows.size()) < points) {
        if (++attempts > max_attempts) {
            throw NoConvergence("boost-check: could not sample " + std::to_string(points) +
                                " points whose image stays in the safe region");
        }
        lorentz::OnShellPoint pt;
        pt.k = k_i + WaveVector(unit(rng) * half, unit(rng) * half, unit(rng) * half);
        pt.region = static_cast<int>(region);
        pt.chirality = c;
        const double w = walk::dispersion(pt.k, c);
        pt.omega = unit(rng) < 0.0 ? -w : w;

        Vec3 beta = beta_fixed;
        if (!fixed_beta) {
            Vec3 dir(gauss(rng), gauss(rng), gauss(rng));
            beta = dir.normalized() * (beta_max * 0.5 * (unit(rng) + 1.0));
        }
        try {
            const auto r = lorentz::check_symmetry_detailed(pt, beta, theta, cfg, swap);
            rows.push_back({beta.norm(), pt, r.image, r.residual});
        } catch (const NoConvergence& e) {
            if (fixed_beta) {
                std::ostringstream msg;
                msg << std::setprecision(17) << e.what() << " at omega=" << pt.omega << " k=(" << pt.k.kx << ", "
                    << pt.k.ky << ", " << pt.k.kz << ")";
                throw NoConvergence(msg.str());
            }
            ++rejected;
        }
    }

    double max_r = 0.0, min_r = INFINITY, sum = 0.0;
    long above_control = 0;
    for (const auto& r : rows) {
        max_r = std::max(max_r, r.residual);
        min_r = std::min(min_r, r.residual);
        sum += r.residual;
        if (r.residual > 1e-2) ++above_control;
    }
    const double mean = sum / static_cast<double>(rows.size());

    if (as_json) {
        json j = {{"chirality", walk::to_string(c)}, {"region", region}, {"g", g},
                  {"safe_radius", cfg.safe_radius}, {"swap_handedness", swap},
                  {"summary", {{"points", rows.size()}, {"rejected", rejected}, {"max_residual", max_r},
                               {"mean_residual", mean}, {"min_residual", min_r}, {"above_1e-2", above_control}}},
                  {"rows", json::array()}};
        for (const auto& r : rows) {
            j["rows"].push_back({{"beta", r.beta}, {"omega_in", r.in.omega},
                                 {"k_in", json::array({r.in.k.kx, r.in.k.ky, r.in.k.kz})},
                                 {"omega_out", r.out.omega},
                                 {"k_out", json::array({r.out.k.kx, r.out.k.ky, r.out.k.kz})},
                                 {"residual", r.residual}});
        }
        emit(out, j);
    } else {
        lorentz::write_boost_scan_csv(out, rows);
    }

    log << std::setprecision(6) << "boost-check: " << rows.size() << " points (" << rejected
        << " rejected), residual max " << max_r << " mean " << mean << " min " << min_r << ", "
        << above_control << " above 1e-2" << (swap ? " [handedness swapped]" : "") << "\n";
    if (max_r > 1e-8) {
        log << "assertion failed: deformed Lorentz covariance of the walk, max residual " << max_r << " > 1e-8\n";
        return kMismatch;
    }
    return kOk;
}

int cmd_hopf(const Settings& s, std::ostream& out, std::ostream& log) {
    json_format(s, false);
    const hopf::ModelKind kind = hopf::parse_model(s.str("model", "kappa"));
    const long trials = s.integer("trials", 100);
    if (trials < 0) throw ConfigError("trials must be non-negative");
    const std::vector<double> kappas = s.reals("kappa_list", {1e3, 1e6});
    const std::uint64_t seed = seed_of(s);
    const hopf::CoproductModel model = hopf::CoproductModel::make(kind);

    bool ok = true;
    json doc;
    doc["model"] = hopf::to_string(kind);
    doc["seed"] = seed;

    // Spacetime commutators in the walk basis and the reference expectation.
    const hopf::BasisMap walk_map = hopf::walk_basis_map();
    const hopf::SpacetimeTable st = hopf::spacetime_commutators(model, walk_map);
    const hopf::SpacetimeTable expected =
        kind == hopf::ModelKind::Kappa ? hopf::kappa_minkowski_table() : hopf::SpacetimeTable{};
    const bool st_ok = st == expected;
    doc["spacetime"] = json::parse(hopf::spacetime_table_json(st, kind, walk_map));
    doc["spacetime"]["matches_reference"] = st_ok;
    if (!st_ok) {
        ok = false;
        log << "assertion failed: spacetime commutators, " << hopf::to_string(kind)
            << " model, walk basis differ from the "
            << (kind == hopf::ModelKind::Kappa ? "kappa-Minkowski relations" : "commuting coordinates") << "\n";
    }

    // Phase-space table and comparison with the reference table.
    const hopf::PhaseTable phase = hopf::phase_space_commutators(model, walk_map);
    const auto cmp = hopf::compare_with_printed(phase, hopf::printed_walk_table(kind));
    doc["phase_space"] = json::parse(hopf::phase_table_json(phase));
    doc["phase_space_comparison"] = json::parse(hopf::comparison_json(cmp));
    for (const auto& row : cmp) {
        if (row.asserted && !row.match) {
            ok = false;
            log << "assertion failed: deformed Heisenberg table, " << hopf::to_string(kind) << " model: ["
                << row.lhs << "," << row.rhs << "] computed " << row.computed << ", reference " << row.printed
                << "\n";
        } else if (!row.asserted && !row.match) {
            log << "note: [" << row.lhs << "," << row.rhs << "] reported only: computed " << row.computed
                << ", reference " << row.printed << "\n";
        }
    }

    // Basis independence of the spacetime relations under random quadratic maps.
    const hopf::FuzzReport fuzz = hopf::lemma1_fuzz(kind, static_cast<int>(trials), seed);
    json trials_json = json::array();
    std::istringstream lines(hopf::fuzz_report_jsonl(fuzz));
    for (std::string line; std::getline(lines, line);)
        if (!line.empty()) trials_json.push_back(json::parse(line));
    doc["basis_independence"] = {{"trials", trials}, {"passes", fuzz.passes()}, {"reports", trials_json}};
    if (fuzz.passes() != static_cast<int>(trials)) {
        ok = false;
        log << "assertion failed: basis independence of the spacetime relations, " << fuzz.passes() << "/"
            << trials << " trials pass\n";
    }

    // Numeric classical limit of the full kappa coproduct.
    if (kappas.size() >= 2) {
        const hopf::KappaLimitReport lim = hopf::kappa_classical_limit(kappas, seed);
        doc["kappa_limit"] = json::parse(hopf::kappa_limit_json(lim));
        if (!lim.ratio_ok || !lim.truncation_ok) {
            ok = false;
            log << "assertion failed: classical limit of the kappa coproduct (ratio "
                << (lim.ratio_ok ? "ok" : "off") << ", truncation " << (lim.truncation_ok ? "ok" : "off") << ")\n";
        }
    } else if (!kappas.empty()) {
        throw ConfigError("kappa_list needs at least two values for the ratio test");
    }

    doc["lie_algebra"] = json::parse(hopf::lie_report_json(hopf::lie_checks()));

    emit(out, doc);
    log << "hopf: " << hopf::to_string(kind) << " model, " << fuzz.passes() << "/" << trials
        << " basis-map trials pass, " << (ok ? "all assertions hold" : "assertion mismatches reported") << "\n";
    return ok ? kOk : kMismatch;
}

}  // namespace weyl::cli
