#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <set>
#include <string>

#include "weyl/errors.hpp"
#include "weyl/lorentz/deformation.hpp"

namespace weyl::lorentz {

namespace {

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    s = s.substr(b, e - b + 1);
    if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) {
        s = s.substr(1, s.size() - 2);
    }
    return s;
}

double to_double(const std::string& v, const std::string& key) {
    double out = 0.0;
    const auto* end = v.data() + v.size();
    const auto [ptr, ec] = std::from_chars(v.data(), end, out);
    if (ec != std::errc{} || ptr != end) throw ConfigError("invalid number for " + key + ": '" + v + "'");
    return out;
}

int to_int(const std::string& v, const std::string& key) {
    int out = 0;
    const auto* end = v.data() + v.size();
    const auto [ptr, ec] = std::from_chars(v.data(), end, out);
    if (ec != std::errc{} || ptr != end) throw ConfigError("invalid integer for " + key + ": '" + v + "'");
    return out;
}

std::vector<std::pair<double, double>> parse_table(const std::string& v) {
    std::vector<std::pair<double, double>> table;
    std::size_t pos = 0;
    while (pos <= v.size()) {
        const auto comma = v.find(',', pos);
        const std::string item = trim(v.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw ConfigError("g_table entries must look like sigma:g");
        table.emplace_back(to_double(trim(item.substr(0, colon)), "g_table"),
                           to_double(trim(item.substr(colon + 1)), "g_table"));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return table;
}

}  // namespace

DeformationConfig parse_deformation_config(std::istream& in) {
    DeformationConfig cfg;
    std::optional<std::string> choice;
    std::optional<std::string> table;
    std::set<std::string> seen;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!seen.insert(key).second) throw ConfigError("duplicate key " + key);
        if (key == "g_choice") {
            choice = value;
        } else if (key == "g_table") {
            table = value;
        } else if (key == "newton_tol") {
            cfg.newton_tol = to_double(value, key);
            if (!(cfg.newton_tol > 0.0)) throw ConfigError("newton_tol must be positive");
        } else if (key == "newton_max_iter") {
            cfg.newton_max_iter = to_int(value, key);
            if (cfg.newton_max_iter <= 0) throw ConfigError("newton_max_iter must be positive");
        } else if (key == "safe_radius") {
            cfg.safe_radius = to_double(value, key);
        } else {
            throw ConfigError("unknown key " + key);
        }
    }
    const std::string c = choice.value_or("secant");
    if (c == "secant") {
        cfg.g = GFunction::secant();
    } else if (c == "unit") {
        cfg.g = GFunction::unit();
    } else if (c == "custom") {
        if (!table) throw ConfigError("g_choice = custom requires g_table");
        try {
            cfg.g = GFunction::custom(parse_table(*table));
        } catch (const InvalidInput& e) {
            throw ConfigError(e.what());
        }
    } else {
        throw ConfigError("g_choice must be unit, secant or custom");
    }
    if (table && c != "custom") throw ConfigError("g_table is only valid with g_choice = custom");
    if (!(cfg.safe_radius > 0.0)) throw ConfigError("safe_radius must be positive");
    return cfg;
}

DeformationConfig load_deformation_config(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open " + path.string());
    return parse_deformation_config(f);
}

}  // namespace weyl::lorentz
