// Batch front end: built-in and file configs, single-ball energies and ad hoc
// checks over a shape family.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>

#include "robinlab/error.hpp"
#include "robinlab/experiment.hpp"
#include "robinlab/radial.hpp"

using namespace robinlab;

namespace {

int code(ExitStatus s) { return static_cast<int>(s); }

int cmd_run(const std::string& source, const std::string& output) {
    auto cfg = load_config(source);
    if (!output.empty()) cfg.output = output;
    const auto out = run(cfg);
    std::cout << out.summary << "output: " << out.output.string() << '\n';
    return code(out.status);
}

int cmd_ball(const RadialParams& p, double radius, int steps, const std::string& profile_path) {
    const auto profile = solve_ball(p, radius, RadialOptions{steps});
    const auto e = ball_energy(profile);
    std::cout << std::setprecision(12);
    std::cout << "n: " << p.n << "\nq: " << p.q << "\nbeta: " << p.beta << "\nc: " << p.c
              << "\neps: " << p.eps << "\nR: " << radius << '\n';
    std::cout << "mode: " << to_string(profile.mode()) << '\n';
    std::cout << "psi(0): " << profile.psi().front() << "\npsi(R): " << profile.psi().back()
              << "\nbc_residual: " << profile.bc_residual() << '\n';
    std::cout << "E: " << e.E << "\ndirichlet: " << e.dirichlet << "\nboundary: " << e.boundary
              << "\nbulk: " << e.bulk << '\n';
    if (e.lambda_q) std::cout << "lambda_q: " << *e.lambda_q << '\n';
    if (p.q == 2.0 && p.c == 0.0) std::cout << "lambda_2: " << profile.source_scale() << '\n';
    if (!profile_path.empty()) {
        std::ofstream f(profile_path, std::ios::binary | std::ios::trunc);
        if (!f) throw ConfigError("cannot write '" + profile_path + "'");
        write_profile_csv(f, profile);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Semilinear Robin energies, eigenvalues and inequality checks on planar star domains"};
    app.require_subcommand(1);

    std::string source, run_output;
    auto* run_cmd = app.add_subcommand("run", "run a built-in or file config");
    run_cmd->add_option("config", source, "built-in name or config file")->required();
    run_cmd->add_option("-o,--output", run_output, "override the output directory");

    RadialParams bp;
    double radius = 1.0;
    int steps = 4096;
    std::string profile_path;
    auto* ball_cmd = app.add_subcommand("ball", "radial minimiser on a ball; prints its energy");
    ball_cmd->add_option("--n", bp.n, "dimension")->capture_default_str();
    ball_cmd->add_option("--q", bp.q, "exponent in [1, 2]")->capture_default_str();
    ball_cmd->add_option("--beta", bp.beta, "Robin coefficient")->capture_default_str();
    ball_cmd->add_option("--c", bp.c, "obstacle level")->capture_default_str();
    ball_cmd->add_option("--eps", bp.eps, "trace regularisation exponent in [0, 1)")->capture_default_str();
    ball_cmd->add_option("--R", radius, "ball radius")->capture_default_str();
    ball_cmd->add_option("--M", steps, "radial steps (even)")->capture_default_str();
    ball_cmd->add_option("--profile", profile_path, "write r, psi, dpsi, H as CSV");

    std::string check_name, family = "ellipse", check_output;
    ExperimentConfig cc;
    cc.family.grid = {};
    auto* check_cmd = app.add_subcommand("check", "one check over a shape family");
    check_cmd->add_option("name", check_name, "intermediate | quantitative | ec_ball | trace_poincare")
        ->required();
    check_cmd->add_option("--family", family, "ellipse | perturbed | stadium | disk")->capture_default_str();
    check_cmd->add_option("--grid", cc.family.grid, "family parameters")->delimiter(',')->required();
    check_cmd->add_option("--modes", cc.family.modes, "modes of the perturbed family")->delimiter(',');
    check_cmd->add_option("--q", cc.q, "exponents")->delimiter(',');
    check_cmd->add_option("--beta", cc.beta, "Robin coefficients")->delimiter(',');
    check_cmd->add_option("--c", cc.c, "obstacle levels (ec_ball)")->delimiter(',');
    check_cmd->add_option("--c-rel", cc.c_rel, "obstacle levels relative to inf u (ec_ball)")->delimiter(',');
    check_cmd->add_option("--n-r", cc.resolution.n_r, "radial mesh rings")->capture_default_str();
    check_cmd->add_option("--n-theta", cc.resolution.n_theta, "angular mesh nodes")->capture_default_str();
    check_cmd->add_option("--K", cc.resolution.K, "boundary samples")->capture_default_str();
    check_cmd->add_option("--M", cc.resolution.M, "radial steps")->capture_default_str();
    check_cmd->add_option("--tolerance", cc.tolerance, "override the computed tolerance");
    check_cmd->add_option("--threads", cc.threads, "worker threads (0: all cores)");
    check_cmd->add_option("-o,--output", check_output, "write CSV and summary here instead of stdout");

    app.add_subcommand("list-configs", "list the built-in configs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : code(ExitStatus::config_error);
    }

    try {
        if (*run_cmd) return cmd_run(source, run_output);
        if (*ball_cmd) return cmd_ball(bp, radius, steps, profile_path);
        if (*check_cmd) {
            try {
                cc.checks = {parse_check(check_name)};
                cc.family.kind = FamilySpec::parse_kind(family);
            } catch (const InvalidInput& e) {
                throw ConfigError(e.what());
            }
            cc.name = "check-" + check_name;
            cc.output = check_output.empty() ? "." : check_output;
            cc.validate();
            if (!check_output.empty()) {
                const auto out = run(cc);
                std::cout << out.summary;
                return code(out.status);
            }
            const auto result = sweep(cc.family, cc.sweep_params(), cc.resolution);
            write_sweep_csv(std::cout, result, cc.checks.front());
            const auto status = result.failed    ? ExitStatus::solver_failure
                                : result.violated ? ExitStatus::violation
                                                  : ExitStatus::ok;
            std::cerr << summarize(cc, result, status);
            return code(status);
        }
        for (const auto& b : builtin_configs()) std::cout << b.name << "  " << b.description << '\n';
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return code(ExitStatus::config_error);
    } catch (const InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return code(ExitStatus::config_error);
    } catch (const SolverFailure& e) {
        std::cerr << "solver failure: " << e.what() << '\n';
        return code(ExitStatus::solver_failure);
    }
}
