#pragma once

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace verlinde::cli {

/// Bad command line or config file (exit 2).
struct ConfigParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Everything one run needs, in the textual form used by flags and config files.
struct RunConfig {
    std::string group = "sl2";
    /// Explicit root datum {rank, roots, coroots, ...}; overrides group when set.
    std::optional<nlohmann::json> group_data;
    std::string level = "1";
    std::optional<std::string> c_matrix;
    int genus = 2;
    /// "canonical" or "generic".
    std::string L = "canonical";
    std::optional<long> degL;
    std::optional<long> h1L;
    std::optional<std::string> gamma;
    std::optional<std::string> mu;
    std::string rep = "trivial";
    int order = 10;
    std::string backend = "exact";
    long bits = 256;
    std::string convention = "reduced";
    std::string variant = "standard";
    std::optional<std::string> mu_B;
    std::string format = "json";
    std::vector<std::string> compare;
    bool dump_solutions = false;
    bool timing = false;
    bool parallel = true;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

nlohmann::json config_to_json(const RunConfig& config);
/// Unknown keys are rejected.
RunConfig config_from_json(const nlohmann::json& j);
RunConfig load_config_file(const std::string& path);

} // namespace verlinde::cli
