#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "robinlab/inequalities.hpp"

namespace robinlab {

/// One batch experiment. Text form is line oriented:
///
///     # comment
///     checks = [intermediate, quantitative]
///     family = ellipse
///     grid   = [1.1, 1.2, 1.3]
///     q      = 1
///
/// Scalars are accepted where a list is expected. Unknown or repeated keys
/// are rejected.
struct ExperimentConfig {
    std::string name;
    std::vector<CheckKind> checks;
    FamilySpec family;
    std::vector<double> q{1.0};
    std::vector<double> beta{1.0};
    std::vector<double> c;
    std::vector<double> c_rel;
    std::vector<double> eps;  // accepted for completeness; must be 0 for FEM checks
    Resolution resolution;
    std::optional<double> tolerance;
    double floor_rel = 1e-3;
    std::string output;
    int threads = 0;

    /// Throws ConfigError naming the offending field.
    void validate() const;

    /// Grid cardinality, i.e. the number of sweep rows.
    std::size_t row_count() const;

    SweepParams sweep_params() const;
};

/// Parses and validates. Errors carry the line number.
ExperimentConfig parse_config(std::string_view text, std::string name = "config");

/// `source` is a built-in name or a path to a config file.
ExperimentConfig load_config(const std::string& source);

struct BuiltinConfig {
    std::string_view name;
    std::string_view description;
    std::string_view text;
};

const std::vector<BuiltinConfig>& builtin_configs();
std::optional<BuiltinConfig> find_builtin(std::string_view name);

}  // namespace robinlab
