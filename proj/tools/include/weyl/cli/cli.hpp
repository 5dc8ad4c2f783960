#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace weyl::cli {

enum ExitCode : int { kOk = 0, kMismatch = 2, kNumerical = 3, kConfig = 4 };

/// Resolved key/value settings for one subcommand (flags > config file > defaults).
class Settings {
public:
    Settings(std::string subcommand, std::map<std::string, std::string> values)
        : subcommand_(std::move(subcommand)), values_(std::move(values)) {}

    const std::string& subcommand() const { return subcommand_; }
    bool has(const std::string& key) const { return values_.count(key) != 0; }
    std::string str(const std::string& key, const std::string& fallback) const;
    long integer(const std::string& key, long fallback) const;
    double real(const std::string& key, double fallback) const;
    std::vector<double> reals(const std::string& key, const std::vector<double>& fallback) const;
    bool flag(const std::string& key) const;

private:
    std::string subcommand_;
    std::map<std::string, std::string> values_;
};

/// Parses "key = value" lines; '#' comments. Keys are validated by the caller.
std::map<std::string, std::string> read_config_file(const std::string& path);

int cmd_dispersion(const Settings& s, std::ostream& out, std::ostream& log);
int cmd_evolve(const Settings& s, std::ostream& out, std::ostream& log);
int cmd_boost_check(const Settings& s, std::ostream& out, std::ostream& log);
int cmd_hopf(const Settings& s, std::ostream& out, std::ostream& log);

/// Entry point: parses argv, dispatches, maps exceptions to exit codes. Output goes to
/// --out when given, otherwise to `out`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace weyl::cli
