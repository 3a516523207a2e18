#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "robinlab/fem.hpp"
#include "robinlab/geometry.hpp"
#include "robinlab/radial.hpp"
#include "robinlab/report.hpp"
#include "robinlab/shapes.hpp"

namespace robinlab {

/// Discretisation parameters shared by all checks: FEM mesh (n_r, n_theta),
/// boundary samples K and radial steps M.
struct Resolution {
    int n_r = 64;
    int n_theta = 128;
    std::size_t K = 4096;
    int M = 4096;

    /// Throws InvalidInput when a value is outside the supported range
    /// (n_r in [8, 512], n_theta in [32, 2048] and even, K >= 64,
    /// M in [64, 65536] and divisible by 4).
    void validate() const;
};

struct CheckOptions {
    std::optional<double> tolerance;  // replaces the computed tolerance
    double floor_rel = 1e-3;          // tolerance floor relative to the ball value
    fem::SolverOptions solver;
};

/// E(Omega) - E(B) >= (beta/2) (inf u)^2 (Per(Omega) - Per(B)), with B the
/// ball of the mesh area. Tolerance: Richardson estimates of both sides from
/// the half-resolution mesh plus the radial step-halving delta, doubled,
/// and never below floor_rel |E(B)|.
InequalityReport check_intermediate(const StarDomain& d, double q, double beta,
                                    const Resolution& res = {}, const CheckOptions& opts = {});

/// lambda_q(Omega) - lambda_q(B) >= 0. Records lhs / A(Omega)^2 as
/// diagnostics.ratio when the Fraenkel asymmetry exceeds 1e-3.
InequalityReport check_quantitative(const StarDomain& d, double q, double beta,
                                    const Resolution& res = {}, const CheckOptions& opts = {});

/// E^c(Omega) >= E^c(B) for the obstacle functional (eps must be 0, n = 2).
InequalityReport check_ec_ball_minimality(const StarDomain& d, const RadialParams& params,
                                          const Resolution& res = {},
                                          const CheckOptions& opts = {});

/// int |grad u|^2 + beta int u^2 >= lambda_q(B^m) (int u^q)^(2/q), with m the
/// area of the field's mesh. The default tolerance is at roundoff level for
/// q in {1, 2}, where the discrete bulk integral is exact, and 1e-3 relative
/// otherwise, plus the radial step-halving delta.
InequalityReport check_trace_poincare(const StarDomain& d, double q, double beta,
                                      const fem::ScalarField& field,
                                      std::optional<double> tolerance = std::nullopt,
                                      int radial_steps = 4096);

/// t^n E(psi) > E(psi(./t)) on B_{tR}, strict with tolerance 1e-10.
InequalityReport check_scaling(const RadialProfile& profile, double t);

enum class CheckKind { intermediate, quantitative, ec_ball, trace_poincare };

std::string_view to_string(CheckKind k);
/// Throws InvalidInput on an unknown name.
CheckKind parse_check(std::string_view name);

/// A one-parameter shape family. ellipse(a) has semi-axes a and 1/a,
/// perturbed(a, k) is the unit disk with r = 1 + a cos(k theta) (one member
/// per (a, k) pair), stadium(L) is a rectangle of length L capped by unit
/// half-disks, disk(R) the disk of radius R.
struct FamilySpec {
    enum class Kind { disk, ellipse, perturbed, stadium };
    Kind kind = Kind::ellipse;
    std::vector<double> grid;
    std::vector<int> modes;  // perturbed only

    struct Member {
        ShapeSpec shape;
        double parameter = 0.0;
        int mode = 0;
    };
    /// Members in grid order (for perturbed: a outer, k inner).
    std::vector<Member> members() const;
    std::string to_string() const;
    /// `ellipse`, `perturbed`, `stadium` or `disk`.
    static Kind parse_kind(std::string_view name);
};

struct SweepParams {
    std::vector<CheckKind> checks;
    std::vector<double> q{1.0};
    std::vector<double> beta{1.0};
    std::vector<double> c;      // absolute obstacle levels (ec_ball)
    std::vector<double> c_rel;  // multiples of inf u(Omega) (ec_ball)
    CheckOptions options;
    int threads = 0;  // 0: hardware concurrency
};

struct SweepRow {
    ShapeSpec shape;
    double parameter = 0.0;
    int mode = 0;
    CheckKind check = CheckKind::intermediate;
    double q = 1.0;
    double beta = 1.0;
    std::optional<double> c;
    std::optional<double> c_rel;
    InequalityReport report;
    std::string error;  // nonempty when the row raised

    bool pass() const { return error.empty() && report.pass; }
};

struct SweepResult {
    FamilySpec family;
    std::vector<SweepRow> rows;
    /// Minimum of the quantitative ratio over rows where it is defined.
    std::optional<double> empirical_constant;
    int passed = 0;
    int violated = 0;
    int failed = 0;  // rows that raised
};

/// Runs every requested check on every (shape, q, beta[, c]) combination.
/// Rows are independent and may run in parallel; the result is in grid
/// order. A row that raises is recorded and the sweep continues. An empty
/// grid or check list raises ConfigError.
SweepResult sweep(const FamilySpec& family, const SweepParams& params, const Resolution& res = {});

/// Header and rows of the per-check CSV table.
void write_sweep_csv(std::ostream& os, const SweepResult& result, CheckKind check);

}  // namespace robinlab
