#pragma once

// Verification workflows behind the hyperreg command-line tool.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace hyperreg::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class ExitCode : int { ok = 0, mismatch = 1, invalid_config = 2 };

/// Bad flags, unsupported q, or parameters the wrapped operation rejects.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { json, text };

struct RunConfig {
    unsigned q = 2;
    std::string subcommand;
    unsigned jobs = 1;
    std::optional<std::uint64_t> sample;
    std::uint64_t seed = 1;
    Format format = Format::json;
    std::optional<std::vector<unsigned>> base_modulus;
    std::optional<std::vector<unsigned>> cubic_modulus;

    // covers
    bool list = false;
    // transversals / switching
    unsigned kind = 1;
    std::optional<unsigned> a;
    std::optional<unsigned> b;
    std::optional<unsigned> f;
    bool brute_force = false;
    // census / verify
    bool trace = false;
    unsigned census_max_q = 5;
    unsigned trace_max_q = 3;
    unsigned exhaustive_max_q = 3;
    bool check_regularity = false;
};

struct Check {
    std::string name;
    Json expected;
    Json actual;
    bool pass = false;
};

struct Report {
    unsigned q = 0;
    std::string subcommand;
    std::vector<Check> checks;
    Json data = Json::object();
    double runtime_seconds = 0.0;

    bool passed() const;
    void check(std::string name, Json expected, Json actual);
};

Report cmd_verify(const RunConfig& cfg);
Report cmd_census(const RunConfig& cfg);
Report cmd_covers(const RunConfig& cfg);
Report cmd_transversals(const RunConfig& cfg);
Report cmd_switching(const RunConfig& cfg);

/// Dispatches on cfg.subcommand.
Report run_command(const RunConfig& cfg);

Json to_json(const Report& r);
std::string to_text(const Report& r);

/// Full front end: parses argv, runs, prints, returns the exit status.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperreg::cli
