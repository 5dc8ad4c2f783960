#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "json.hpp"
#include "weyl/cli/cli.hpp"
#include "weyl/walk/lattice.hpp"

namespace {

using nlohmann::json;
using weyl::walk::kSqrt3;
constexpr double kPi = std::numbers::pi;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "weylwalk");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = weyl::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<double>> csv_rows(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        std::vector<double> r;
        std::stringstream ls(line);
        for (std::string cell; std::getline(ls, cell, ',');) r.push_back(std::stod(cell));
        rows.push_back(r);
    }
    return rows;
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
    const auto p = std::filesystem::temp_directory_path() / ("weylwalk_cli_test_" + name);
    std::ofstream(p) << contents;
    return p;
}

TEST(Cli, DispersionSmallestGrid) {
    const Result r = run({"dispersion", "--grid", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "kx,ky,kz,omega,nx,ny,nz,lambda,ux,uy,uz");
    const auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 8u);
    int origin = 0;
    for (const auto& row : rows) {
        if (row[0] == 0 && row[1] == 0 && row[2] == 0) {
            ++origin;
            EXPECT_EQ(row[3], 0.0);
        }
    }
    EXPECT_EQ(origin, 1);
}

TEST(Cli, DispersionContainsHalfZonePoint) {
    const Result r = run({"dispersion", "--grid", "4"});
    ASSERT_EQ(r.code, 0);
    bool found = false;
    for (const auto& row : csv_rows(r.out)) {
        if (std::abs(row[0] - kSqrt3 * kPi / 2) < 1e-12 && row[1] == 0 && row[2] == 0) {
            found = true;
            EXPECT_NEAR(row[3], kPi / 2, 1e-12);
        }
    }
    EXPECT_TRUE(found);
}

TEST(Cli, RescaledDispersionApproachesLightCone) {
    double prev = INFINITY;
    for (const char* grid : {"8", "16", "32"}) {
        const Result r = run({"dispersion", "--grid", grid});
        ASSERT_EQ(r.code, 0);
        double best_u = INFINITY, ratio = 0;
        for (const auto& row : csv_rows(r.out)) {
            // Along the axes omega = |u| exactly; look off-axis.
            if (row[8] == 0 || row[9] == 0 || row[10] == 0) continue;
            const double u = std::sqrt(row[8] * row[8] + row[9] * row[9] + row[10] * row[10]);
            if (u < best_u) {
                best_u = u;
                ratio = row[3] / u;
            }
        }
        // Off-axis the deviation from the cone is second order in |u|.
        EXPECT_LT(std::abs(ratio - 1), best_u * best_u) << "grid " << grid;
        EXPECT_LT(std::abs(ratio - 1), prev);
        prev = std::abs(ratio - 1);
    }
}

TEST(Cli, ConfigPrecedenceAndValidation) {
    const auto cfg = temp_file("grid.cfg", "# resolution\ngrid = 4\nformat = json\n");
    const Result from_file = run({"dispersion", "--config", cfg.string()});
    ASSERT_EQ(from_file.code, 0) << from_file.err;
    EXPECT_EQ(json::parse(from_file.out).at("rows").size(), 64u);
    const Result flag_wins = run({"dispersion", "--config", cfg.string(), "--grid", "2"});
    EXPECT_EQ(json::parse(flag_wins.out).at("rows").size(), 8u);

    const auto bad = temp_file("bad.cfg", "grid = 4\nsteps = 3\n");
    EXPECT_EQ(run({"dispersion", "--config", bad.string()}).code, 4);
    const auto garbage = temp_file("garbage.cfg", "grid 4\n");
    EXPECT_EQ(run({"dispersion", "--config", garbage.string()}).code, 4);
    EXPECT_EQ(run({"dispersion", "--config", "/nonexistent.cfg"}).code, 4);
    EXPECT_EQ(run({"dispersion", "--grid", "1"}).code, 4);
    EXPECT_EQ(run({"dispersion", "--grid", "x"}).code, 4);
    EXPECT_EQ(run({"dispersion", "--steps", "3"}).code, 4);
    EXPECT_EQ(run({"dispersion", "--chirality", "left"}).code, 4);
    EXPECT_EQ(run({"dispersion", "--format", "xml"}).code, 4);
    EXPECT_EQ(run({}).code, 4);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, EvolveStartsAtCentreAndConservesNorm) {
    const Result r = run({"evolve", "--grid", "64", "--steps", "0", "--format", "json", "--center-x", "10,11,12"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    ASSERT_EQ(j.at("rows").size(), 1u);
    const auto c = j.at("rows").at(0).at("centroid");
    EXPECT_NEAR(c.at(0).get<double>(), 10, 0.01);
    EXPECT_NEAR(c.at(1).get<double>(), 11, 0.01);
    EXPECT_NEAR(c.at(2).get<double>(), 12, 0.01);

    const Result steps = run({"evolve", "--grid", "32", "--steps", "6", "--chirality", "minus"});
    ASSERT_EQ(steps.code, 0);
    const auto rows = csv_rows(steps.out);
    ASSERT_EQ(rows.size(), 7u);
    for (const auto& row : rows) EXPECT_NEAR(row[5], rows[0][5], 1e-10);

    EXPECT_EQ(run({"evolve", "--grid", "31"}).code, 4);
    EXPECT_EQ(run({"evolve", "--steps", "-1"}).code, 4);
    EXPECT_EQ(run({"evolve", "--center-k", "1,2"}).code, 4);
}

TEST(Cli, EvolveNarrowPacketFollowsGroupVelocity) {
    const Result r = run({"evolve", "--grid", "128", "--steps", "10", "--sigma-k", "0.05", "--center-k", "0.6,0.3,0",
                          "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    double diff = 0, norm = 0;
    for (int a = 0; a < 3; ++a) {
        const double v = j.at("group_velocity").at(a).get<double>();
        diff += std::pow(j.at("mean_drift").at(a).get<double>() - v, 2);
        norm += v * v;
    }
    EXPECT_LT(std::sqrt(diff), 0.02 * std::sqrt(norm));
}

TEST(Cli, EvolveDumpsState) {
    const auto path = std::filesystem::temp_directory_path() / "weylwalk_cli_test_state.wqw";
    const Result r = run({"evolve", "--grid", "8", "--steps", "2", "--sigma-k", "0.5", "--chirality", "minus",
                          "--dump-state", path.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto [state, c] = weyl::walk::read_wqw1(path);
    EXPECT_EQ(state.side(), 8);
    EXPECT_EQ(c, weyl::walk::Chirality::Minus);
    EXPECT_NEAR(state.norm_squared(), 1.0, 1e-12);
}

TEST(Cli, BoostCheck) {
    const Result zero = run({"boost-check", "--beta", "0,0,0", "--points", "20"});
    ASSERT_EQ(zero.code, 0) << zero.err;
    for (const auto& row : csv_rows(zero.out)) EXPECT_EQ(row.back(), 0.0);

    const Result sweep = run({"boost-check", "--format", "json"});
    ASSERT_EQ(sweep.code, 0) << sweep.err;
    const json j = json::parse(sweep.out);
    EXPECT_EQ(j.at("rows").size(), 200u);
    EXPECT_LT(j.at("summary").at("max_residual").get<double>(), 1e-9);

    const Result swapped = run({"boost-check", "--swap-handedness", "--format", "json"});
    EXPECT_EQ(swapped.code, 2);
    EXPECT_NE(swapped.err.find("assertion failed"), std::string::npos);
    EXPECT_GT(json::parse(swapped.out).at("summary").at("above_1e-2").get<int>(), 180);

    for (const char* region : {"1", "2", "3"}) {
        EXPECT_EQ(run({"boost-check", "--region", region, "--chirality", "minus", "--points", "40"}).code, 0);
    }
}

TEST(Cli, BoostCheckErrors) {
    const Result far = run({"boost-check", "--beta", "3,0,0", "--points", "5"});
    EXPECT_EQ(far.code, 3);
    EXPECT_NE(far.err.find("k=("), std::string::npos);
    EXPECT_EQ(run({"boost-check", "--g", "custom"}).code, 4);
    EXPECT_EQ(run({"boost-check", "--g", "cosine"}).code, 4);
    EXPECT_EQ(run({"boost-check", "--safe-radius", "2.0"}).code, 4);
    EXPECT_EQ(run({"boost-check", "--region", "5"}).code, 4);
    EXPECT_EQ(run({"boost-check", "--g", "custom", "--g-table", "0:1,0.5:1.2,1:1.3", "--points", "20"}).code, 0);
}

TEST(Cli, HopfClassical) {
    const Result r = run({"hopf", "--model", "classical", "--trials", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_TRUE(j.at("spacetime").at("matches_reference").get<bool>());
    for (const auto& row : j.at("phase_space_comparison")) EXPECT_TRUE(row.at("match").get<bool>());
    EXPECT_EQ(j.at("basis_independence").at("passes"), 5);
    EXPECT_EQ(j.at("basis_independence").at("reports").size(), 5u);
    EXPECT_TRUE(j.at("kappa_limit").is_object());
}

TEST(Cli, HopfKappa) {
    const Result r = run({"hopf", "--model", "kappa", "--trials", "100"});
    // The computed diagonal differs in sign from the reference; the command says so.
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("deformed Heisenberg table, kappa model: [k1,x1]"), std::string::npos);
    EXPECT_EQ(r.err.find("[k1,x2]"), std::string::npos);
    const json j = json::parse(r.out);
    EXPECT_EQ(j.at("basis_independence").at("passes"), 100);
    EXPECT_TRUE(j.at("spacetime").at("matches_reference").get<bool>());
    const auto& t01 = j.at("spacetime").at("table").at(1);
    ASSERT_EQ(t01.at("result_terms").size(), 1u);
    EXPECT_EQ(t01.at("result_terms").at(0).at("coeff_im_num"), -1);
    EXPECT_EQ(t01.at("result_terms").at(0).at("kappa_power"), -1);
    EXPECT_EQ(t01.at("result_terms").at(0).at("monomial"), "x1");
}

TEST(Cli, HopfIsDeterministicAndValidated) {
    const Result a = run({"hopf", "--trials", "4", "--seed", "17"});
    const Result b = run({"hopf", "--trials", "4", "--seed", "17"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(run({"hopf", "--model", "snyder"}).code, 4);
    EXPECT_EQ(run({"hopf", "--format", "csv"}).code, 4);
    EXPECT_EQ(run({"hopf", "--kappa-list", "1000"}).code, 4);
}

TEST(Cli, OutFlagWritesFile) {
    const auto path = std::filesystem::temp_directory_path() / "weylwalk_cli_test_out.csv";
    const Result r = run({"dispersion", "--grid", "2", "--out", path.string()});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header.substr(0, 2), "kx");
}

}  // namespace
