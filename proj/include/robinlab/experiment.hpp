#pragma once

#include <filesystem>
#include <string>

#include "robinlab/config.hpp"

namespace robinlab {

/// Process exit categories of a batch run.
enum class ExitStatus : int { ok = 0, config_error = 2, solver_failure = 3, violation = 4 };

struct RunOutcome {
    ExitStatus status = ExitStatus::ok;
    SweepResult result;
    std::string summary;
    std::filesystem::path output;
};

/// Executes the sweep of a validated config and writes `<check>.csv` for
/// every requested check plus `summary.txt` into the output directory
/// (relative paths resolve against `base`). Reruns overwrite with identical
/// content. Status: solver_failure if any row raised, else violation if any
/// report failed, else ok.
RunOutcome run(const ExperimentConfig& config, const std::filesystem::path& base = ".");

/// Human-readable summary: pass counts per check and the empirical constant.
std::string summarize(const ExperimentConfig& config, const SweepResult& result, ExitStatus status);

}  // namespace robinlab
