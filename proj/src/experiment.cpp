#include "robinlab/experiment.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "robinlab/error.hpp"

namespace robinlab {

std::string summarize(const ExperimentConfig& config, const SweepResult& result, ExitStatus status) {
    std::ostringstream os;
    os << std::setprecision(12);
    os << "config: " << config.name << '\n';
    os << "family: " << result.family.to_string() << '\n';
    os << "rows: " << result.rows.size() << '\n';
    for (auto k : config.checks) {
        int passed = 0, violated = 0, failed = 0;
        for (const auto& row : result.rows) {
            if (row.check != k) continue;
            if (!row.error.empty()) {
                ++failed;
            } else if (row.report.pass) {
                ++passed;
            } else {
                ++violated;
            }
        }
        os << "check " << to_string(k) << ": " << passed << " passed, " << violated << " violated, "
           << failed << " failed\n";
    }
    os << "empirical_constant: ";
    if (result.empirical_constant) {
        os << *result.empirical_constant;
    } else {
        os << "absent";
    }
    os << '\n';
    for (const auto& row : result.rows) {
        if (!row.error.empty()) {
            os << "error " << to_string(row.check) << ' ' << row.shape.to_string() << ": " << row.error << '\n';
        } else if (!row.report.pass) {
            os << "violation " << to_string(row.check) << ' ' << row.shape.to_string() << " q=" << row.q
               << " beta=" << row.beta << " deficit=" << row.report.deficit
               << " tolerance=" << row.report.tolerance << '\n';
        }
    }
    os << "status: " << static_cast<int>(status) << '\n';
    return os.str();
}

RunOutcome run(const ExperimentConfig& config, const std::filesystem::path& base) {
    config.validate();
    RunOutcome out;
    out.result = sweep(config.family, config.sweep_params(), config.resolution);
    if (out.result.failed > 0) {
        out.status = ExitStatus::solver_failure;
    } else if (out.result.violated > 0) {
        out.status = ExitStatus::violation;
    }
    out.summary = summarize(config, out.result, out.status);

    std::filesystem::path dir(config.output);
    if (dir.is_relative()) dir = base / dir;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw ConfigError("output: cannot create '" + dir.string() + "': " + ec.message());
    out.output = dir;

    for (auto k : config.checks) {
        const auto path = dir / (std::string(to_string(k)) + ".csv");
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        if (!f) throw ConfigError("output: cannot write '" + path.string() + "'");
        write_sweep_csv(f, out.result, k);
    }
    std::ofstream s(dir / "summary.txt", std::ios::binary | std::ios::trunc);
    if (!s) throw ConfigError("output: cannot write summary in '" + dir.string() + "'");
    s << out.summary;
    return out;
}

}  // namespace robinlab
