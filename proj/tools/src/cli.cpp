#include "weyl/cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <set>

#include "CLI11.hpp"
#include "weyl/errors.hpp"

namespace weyl::cli {

namespace {

struct Key {
    std::string name;  ///< canonical config key (underscores)
    std::string help;
    bool is_flag = false;
};

const std::vector<Key>& common_keys() {
    static const std::vector<Key> k{
        {"out", "output file (default: stdout)"},
        {"format", "csv or json"},
        {"seed", "random seed"},
    };
    return k;
}

const std::map<std::string, std::vector<Key>>& subcommand_keys() {
    static const std::map<std::string, std::vector<Key>> k{
        {"dispersion",
         {{"chirality", "plus or minus"}, {"grid", "samples per axis (>= 2)"}}},
        {"evolve",
         {{"chirality", "plus or minus"},
          {"grid", "lattice side N (even)"},
          {"steps", "number of walk steps"},
          {"center_k", "packet centre kx,ky,kz"},
          {"sigma_k", "packet width in k/sqrt3 units"},
          {"center_x", "packet centre x,y,z in physical units (lattice coordinate / sqrt3)"},
          {"dump_state", "write the final state to this WQW1 file"}}},
        {"boost-check",
         {{"chirality", "plus or minus"},
          {"beta", "fixed rapidity bx,by,bz (default: random per point)"},
          {"theta", "rotation tx,ty,tz"},
          {"g", "unit, secant or custom"},
          {"g_table", "custom g table sigma:g,..."},
          {"safe_radius", "half-width of the inversion cube"},
          {"newton_tol", "Newton tolerance"},
          {"newton_max_iter", "Newton iteration cap"},
          {"points", "number of on-shell points"},
          {"beta_max", "bound on |beta| for random boosts"},
          {"region", "region 0..3"},
          {"swap_handedness", "exchange the spinor representations (negative control)", true}}},
        {"hopf",
         {{"model", "classical or kappa"},
          {"trials", "number of random basis maps"},
          {"kappa_list", "numeric kappa values for the limit check"}}},
    };
    return k;
}

std::string flag_name(const std::string& key) {
    std::string f = key;
    std::replace(f.begin(), f.end(), '_', '-');
    return "--" + f;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    std::string v = s.substr(b, e - b + 1);
    if (v.size() >= 2 && (v.front() == '"' || v.front() == '\'') && v.back() == v.front()) v = v.substr(1, v.size() - 2);
    return v;
}

double parse_real(const std::string& v, const std::string& key) {
    double out = 0.0;
    const std::string t = trim(v);
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
    if (ec != std::errc{} || ptr != t.data() + t.size()) throw ConfigError("invalid number for " + key + ": '" + v + "'");
    return out;
}

}  // namespace

std::string Settings::str(const std::string& key, const std::string& fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

long Settings::integer(const std::string& key, long fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    long out = 0;
    const std::string t = trim(it->second);
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
    if (ec != std::errc{} || ptr != t.data() + t.size()) {
        throw ConfigError("invalid integer for " + key + ": '" + it->second + "'");
    }
    return out;
}

double Settings::real(const std::string& key, double fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : parse_real(it->second, key);
}

std::vector<double> Settings::reals(const std::string& key, const std::vector<double>& fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    std::vector<double> out;
    std::string item;
    std::istringstream in(it->second);
    while (std::getline(in, item, ',')) out.push_back(parse_real(item, key));
    return out;
}

bool Settings::flag(const std::string& key) const {
    const std::string v = str(key, "false");
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw ConfigError("invalid boolean for " + key + ": '" + v + "'");
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file " + path);
    std::map<std::string, std::string> out;
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        if (!out.emplace(key, trim(line.substr(eq + 1))).second) throw ConfigError("duplicate key " + key);
    }
    return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weyl quantum walk, deformed Lorentz symmetry and Hopf-algebra toolkit", "weylwalk"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "key = value configuration file")->type_name("FILE");

    std::map<std::string, std::map<std::string, std::string>> raw;
    std::map<std::string, std::map<std::string, CLI::Option*>> options;
    std::map<std::string, bool> flags;
    const std::map<std::string, std::string> about = {
        {"dispersion", "sample omega(k) and n(k) on a grid of the zone"},
        {"evolve", "evolve a Gaussian packet and track its centroid"},
        {"boost-check", "check deformed boosts against the walk's kernel equation"},
        {"hopf", "symbolic commutator tables for the classical and kappa models"},
    };
    for (const auto& [name, keys] : subcommand_keys()) {
        CLI::App* sub = app.add_subcommand(name, about.at(name));
        sub->add_option("--config", config_path, "key = value configuration file")->type_name("FILE");
        std::vector<Key> all = common_keys();
        all.insert(all.end(), keys.begin(), keys.end());
        for (const auto& k : all) {
            if (k.is_flag) {
                options[name][k.name] = sub->add_flag(flag_name(k.name), k.help);
            } else {
                options[name][k.name] = sub->add_option(flag_name(k.name), raw[name][k.name], k.help);
            }
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kConfig;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        std::set<std::string> allowed;
        for (const auto& k : common_keys()) allowed.insert(k.name);
        for (const auto& k : subcommand_keys().at(name)) allowed.insert(k.name);

        std::map<std::string, std::string> values;
        if (!config_path.empty()) {
            for (auto& [k, v] : read_config_file(config_path)) {
                if (!allowed.count(k)) throw ConfigError("unknown key '" + k + "' for subcommand " + name);
                values[k] = v;
            }
        }
        for (const auto& [k, opt] : options[name]) {
            if (opt->count() == 0) continue;
            values[k] = opt->get_expected() == 0 ? std::string("true") : raw[name][k];
        }

        const Settings s(name, values);
        std::ofstream file;
        std::ostream* sink = &out;
        if (s.has("out")) {
            file.open(s.str("out", ""), std::ios::binary);
            if (!file) throw ConfigError("cannot open output file " + s.str("out", ""));
            sink = &file;
        }
        if (name == "dispersion") return cmd_dispersion(s, *sink, err);
        if (name == "evolve") return cmd_evolve(s, *sink, err);
        if (name == "boost-check") return cmd_boost_check(s, *sink, err);
        return cmd_hopf(s, *sink, err);
    } catch (const NoConvergence& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kNumerical;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kConfig;
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << "\n";
        return kConfig;
    } catch (const InvalidMap& e) {
        err << "invalid basis map: " << e.what() << "\n";
        return kConfig;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace weyl::cli
