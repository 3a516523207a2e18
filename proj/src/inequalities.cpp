#include "robinlab/inequalities.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <thread>

#include "robinlab/error.hpp"

namespace robinlab {

namespace {

constexpr double pi = std::numbers::pi;

struct FemSolve {
    fem::ScalarField field;
    fem::EnergyReport fine;
    fem::EnergyReport coarse;
};

FemSolve solve_pair(const StarDomain& d, const RadialParams& p, const Resolution& res,
                    const fem::SolverOptions& solver) {
    res.validate();
    auto fine_mesh = std::make_shared<const fem::Mesh>(fem::mesh_star(d, res.n_r, res.n_theta));
    auto coarse_mesh =
        std::make_shared<const fem::Mesh>(fem::mesh_star(d, res.n_r / 2, res.n_theta / 2));
    auto [field, fine] = fem::minimize_energy(fine_mesh, p, solver);
    auto coarse = fem::minimize_energy(coarse_mesh, p, solver).second;
    return {std::move(field), std::move(fine), std::move(coarse)};
}

double richardson(double fine, double coarse) { return std::abs(fine - coarse) / 3.0; }

double equal_area_radius(double area) { return std::sqrt(area / pi); }

/// Ball energy at M steps together with the step-halving delta.
std::pair<double, double> ball_energy_delta(const RadialParams& p, double radius, int m) {
    const double e = ball_minimum(p, radius, RadialOptions{m}).E;
    const double h = ball_minimum(p, radius, RadialOptions{m / 2}).E;
    return {e, std::abs(e - h)};
}

void attach_domain(InequalityReport& r, const StarDomain& d, const fem::EnergyReport& e) {
    r.diagnostics.energy = e.E;
    r.diagnostics.inf_u = e.inf_u;
    r.diagnostics.perimeter = e.perimeter;
    r.diagnostics.area = e.area;
    r.diagnostics.asymmetry = fraenkel_asymmetry(d).value;
    if (e.lambda_q) r.diagnostics.lambda_q = *e.lambda_q;
}

void require_sublinear(double q, const char* what) {
    if (!(q >= 1.0 && q < 2.0)) throw InvalidInput(std::string(what) + ": q must lie in [1, 2)");
}

}  // namespace

void Resolution::validate() const {
    if (n_r < 8 || n_r > 512) throw InvalidInput("resolution: n_r must lie in [8, 512]");
    if (n_theta < 32 || n_theta > 2048 || n_theta % 2 != 0) {
        throw InvalidInput("resolution: n_theta must be even and lie in [32, 2048]");
    }
    if (K < 64) throw InvalidInput("resolution: K must be at least 64");
    if (M < 64 || M > 65536 || M % 4 != 0) {
        throw InvalidInput("resolution: M must be divisible by 4 and lie in [64, 65536]");
    }
}

InequalityReport check_intermediate(const StarDomain& d, double q, double beta,
                                    const Resolution& res, const CheckOptions& opts) {
    require_sublinear(q, "check_intermediate");
    const RadialParams p{2, q, beta, 0.0, 0.0};
    const auto s = solve_pair(d, p, res, opts.solver);

    auto sides = [&](const fem::EnergyReport& e) {
        const double radius = equal_area_radius(e.area);
        const double eb = ball_minimum(p, radius, RadialOptions{res.M}).E;
        const double lhs = e.E - eb;
        const double rhs = 0.5 * beta * e.inf_u * e.inf_u * (e.perimeter - 2.0 * pi * radius);
        return std::array<double, 3>{lhs, rhs, eb};
    };
    const auto f = sides(s.fine);
    const auto c = sides(s.coarse);
    const auto [eb, radial_delta] = ball_energy_delta(p, equal_area_radius(s.fine.area), res.M);

    const double estimate =
        2.0 * (richardson(f[0], c[0]) + richardson(f[1], c[1]) + radial_delta);
    const double tol = opts.tolerance.value_or(std::max(estimate, opts.floor_rel * std::abs(eb)));

    auto r = InequalityReport::make("intermediate", f[0], f[1], tol);
    r.with_input("q", q).with_input("beta", beta).with_input("n_r", res.n_r)
        .with_input("n_theta", res.n_theta).with_input("M", res.M).with_input("E(B)", eb);
    r.with_term("E(Omega)", Provenance::fem).with_term("E(B)", Provenance::radial)
        .with_term("inf u", Provenance::fem).with_term("Per(Omega)", Provenance::geometry)
        .with_term("Per(B)", Provenance::closed_form);
    attach_domain(r, d, s.fine);
    r.note = "conforming bias: E(Omega) is over-estimated, lhs biased upward";
    return r;
}

InequalityReport check_quantitative(const StarDomain& d, double q, double beta,
                                    const Resolution& res, const CheckOptions& opts) {
    require_sublinear(q, "check_quantitative");
    const RadialParams p{2, q, beta, 0.0, 0.0};
    const auto s = solve_pair(d, p, res, opts.solver);
    if (!s.fine.lambda_q || !s.coarse.lambda_q) {
        throw SolverFailure("check_quantitative: discrete energy is not negative");
    }

    auto ball_lambda = [&](double area, int m) {
        return lambda_from_energy(ball_minimum(p, equal_area_radius(area), RadialOptions{m}).E, q);
    };
    const double lb = ball_lambda(s.fine.area, res.M);
    const double radial_delta = std::abs(lb - ball_lambda(s.fine.area, res.M / 2));
    const double lhs_f = *s.fine.lambda_q - lb;
    const double lhs_c = *s.coarse.lambda_q - ball_lambda(s.coarse.area, res.M);

    const double estimate = 2.0 * (richardson(lhs_f, lhs_c) + radial_delta);
    const double tol = opts.tolerance.value_or(std::max(estimate, opts.floor_rel * lb));

    auto r = InequalityReport::make("quantitative", lhs_f, 0.0, tol);
    r.with_input("q", q).with_input("beta", beta).with_input("n_r", res.n_r)
        .with_input("n_theta", res.n_theta).with_input("M", res.M).with_input("lambda_q(B)", lb);
    r.with_term("lambda_q(Omega)", Provenance::fem).with_term("lambda_q(B)", Provenance::radial)
        .with_term("0", Provenance::closed_form);
    attach_domain(r, d, s.fine);
    r.diagnostics.lambda_q = *s.fine.lambda_q;
    const double a = *r.diagnostics.asymmetry;
    if (a > 1e-3) r.diagnostics.ratio = lhs_f / (a * a);
    r.note = "conforming bias: lambda_q(Omega) is over-estimated, lhs biased upward";
    return r;
}

InequalityReport check_ec_ball_minimality(const StarDomain& d, const RadialParams& params,
                                          const Resolution& res, const CheckOptions& opts) {
    params.validate();
    require_sublinear(params.q, "check_ec_ball_minimality");
    if (params.eps != 0.0 || params.n != 2) {
        throw InvalidInput("check_ec_ball_minimality: requires n = 2 and eps = 0");
    }
    const auto s = solve_pair(d, params, res, opts.solver);

    auto ball = [&](double area) {
        return ball_minimum(params, equal_area_radius(area), RadialOptions{res.M}).E;
    };
    const double eb = ball(s.fine.area);
    const double eb_c = ball(s.coarse.area);
    const double radial_delta =
        ball_energy_delta(params, equal_area_radius(s.fine.area), res.M).second;

    const double estimate =
        2.0 * (richardson(s.fine.E - eb, s.coarse.E - eb_c) + radial_delta);
    const double tol = opts.tolerance.value_or(std::max(estimate, opts.floor_rel * std::abs(eb)));

    auto r = InequalityReport::make("ec_ball", s.fine.E, eb, tol);
    r.with_input("q", params.q).with_input("beta", params.beta).with_input("c", params.c)
        .with_input("n_r", res.n_r).with_input("n_theta", res.n_theta).with_input("M", res.M);
    r.with_term("E^c(Omega)", Provenance::fem).with_term("E^c(B)", Provenance::radial);
    attach_domain(r, d, s.fine);
    r.diagnostics.lambda_q.reset();
    r.note = "conforming bias: E^c(Omega) is over-estimated, lhs biased upward";
    return r;
}

InequalityReport check_trace_poincare(const StarDomain& d, double q, double beta,
                                      const fem::ScalarField& field,
                                      std::optional<double> tolerance, int radial_steps) {
    if (!(q >= 1.0 && q <= 2.0)) throw InvalidInput("check_trace_poincare: q must lie in [1, 2]");
    if (!(beta > 0.0)) throw InvalidInput("check_trace_poincare: beta must be > 0");
    if (!field.mesh) throw InvalidInput("check_trace_poincare: field has no mesh");
    if (field.min() < 0.0) throw InvalidInput("check_trace_poincare: field must be nonnegative");
    const double m = field.mesh->area();
    if (std::abs(m - area(d)) > 1e-2 * area(d)) {
        throw InvalidInput("check_trace_poincare: field mesh does not discretise the domain");
    }

    const auto forms = fem::assemble(*field.mesh);
    const auto t = fem::quotient_terms(forms, field.values, q);
    if (!(t.bulk > 0.0)) throw InvalidInput("check_trace_poincare: field is trivial");
    const double norm = std::pow(t.bulk, 2.0 / q);
    const double radius = equal_area_radius(m);
    const double lb = ball_lambda_q(2, q, beta, radius, RadialOptions{radial_steps});
    const double lb_half = ball_lambda_q(2, q, beta, radius, RadialOptions{radial_steps / 2});

    const double lhs = t.dirichlet + beta * t.trace;
    const double rhs = lb * norm;
    const bool exact_bulk = q == 1.0 || q == 2.0;
    const double tol = tolerance.value_or((exact_bulk ? 1e-9 : 1e-3) * std::abs(rhs) +
                                          2.0 * std::abs(lb - lb_half) * norm + 1e-14);

    auto r = InequalityReport::make("trace_poincare", lhs, rhs, tol);
    r.with_input("q", q).with_input("beta", beta).with_input("m", m)
        .with_input("lambda_q(B^m)", lb);
    r.with_term("int |grad u|^2 + beta int u^2", Provenance::fem)
        .with_term("lambda_q(B^m)", Provenance::radial)
        .with_term("(int u^q)^(2/q)", Provenance::fem);
    r.diagnostics.lambda_q = lhs / norm;
    r.diagnostics.inf_u = field.min();
    r.diagnostics.perimeter = field.mesh->boundary_length();
    r.diagnostics.area = m;
    return r;
}

InequalityReport check_scaling(const RadialProfile& profile, double t) {
    if (!(t > 1.0)) throw InvalidInput("check_scaling: t must be > 1");
    const auto& p = profile.params();
    const auto r = profile.r();
    const auto psi = profile.psi();
    const auto dpsi = profile.dpsi();
    std::vector<double> rt(r.size()), dt(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        rt[i] = t * r[i];
        dt[i] = dpsi[i] / t;
    }
    const double e = radial_energy(p, profile.radius(), r, psi, dpsi).E;
    const double et = radial_energy(p, t * profile.radius(), rt, psi, dt).E;

    auto rep = InequalityReport::make("scaling", std::pow(t, p.n) * e, et, 1e-10, true);
    rep.with_input("t", t).with_input("n", p.n).with_input("q", p.q).with_input("beta", p.beta)
        .with_input("c", p.c).with_input("eps", p.eps).with_input("R", profile.radius());
    rep.with_term("t^n E(psi)", Provenance::radial).with_term("E(psi(./t))", Provenance::radial);
    rep.diagnostics.energy = e;
    return rep;
}

std::string_view to_string(CheckKind k) {
    switch (k) {
        case CheckKind::intermediate: return "intermediate";
        case CheckKind::quantitative: return "quantitative";
        case CheckKind::ec_ball: return "ec_ball";
        case CheckKind::trace_poincare: return "trace_poincare";
    }
    return "?";
}

CheckKind parse_check(std::string_view name) {
    for (auto k : {CheckKind::intermediate, CheckKind::quantitative, CheckKind::ec_ball,
                   CheckKind::trace_poincare}) {
        if (name == to_string(k)) return k;
    }
    throw InvalidInput("unknown check '" + std::string(name) + "'");
}

std::vector<FamilySpec::Member> FamilySpec::members() const {
    using K = ShapeSpec::Kind;
    std::vector<Member> out;
    for (double a : grid) {
        switch (kind) {
            case Kind::disk: out.push_back({{K::disk, {a}}, a, 0}); break;
            case Kind::ellipse: out.push_back({{K::ellipse, {a, 1.0 / a}}, a, 0}); break;
            case Kind::stadium: out.push_back({{K::stadium, {a, 1.0}}, a, 0}); break;
            case Kind::perturbed:
                for (int k : modes) {
                    out.push_back({{K::perturbed, {1.0, a, static_cast<double>(k)}}, a, k});
                }
                break;
        }
    }
    return out;
}

std::string FamilySpec::to_string() const {
    static constexpr const char* names[] = {"disk", "ellipse", "perturbed", "stadium"};
    std::ostringstream os;
    os << names[static_cast<int>(kind)] << '[';
    for (std::size_t i = 0; i < grid.size(); ++i) os << (i ? ";" : "") << grid[i];
    os << ']';
    if (kind == Kind::perturbed) {
        os << "x[";
        for (std::size_t i = 0; i < modes.size(); ++i) os << (i ? ";" : "") << modes[i];
        os << ']';
    }
    return os.str();
}

FamilySpec::Kind FamilySpec::parse_kind(std::string_view name) {
    if (name == "disk") return Kind::disk;
    if (name == "ellipse") return Kind::ellipse;
    if (name == "perturbed") return Kind::perturbed;
    if (name == "stadium") return Kind::stadium;
    throw InvalidInput("unknown family '" + std::string(name) + "'");
}

SweepResult sweep(const FamilySpec& family, const SweepParams& params, const Resolution& res) {
    if (family.grid.empty()) throw ConfigError("sweep: family grid is empty");
    if (family.kind == FamilySpec::Kind::perturbed && family.modes.empty()) {
        throw ConfigError("sweep: perturbed family needs at least one mode");
    }
    if (params.checks.empty()) throw ConfigError("sweep: no checks requested");
    if (params.q.empty() || params.beta.empty()) throw ConfigError("sweep: empty q or beta grid");
    for (auto k : params.checks) {
        for (double q : params.q) {
            if (k != CheckKind::trace_poincare && q >= 2.0) {
                throw ConfigError("sweep: check " + std::string(to_string(k)) + " requires q < 2");
            }
        }
    }
    try {
        res.validate();
    } catch (const InvalidInput& e) {
        throw ConfigError(e.what());
    }

    SweepResult out;
    out.family = family;
    for (const auto& m : family.members()) {
        for (auto k : params.checks) {
            for (double q : params.q) {
                for (double beta : params.beta) {
                    SweepRow row;
                    row.shape = m.shape;
                    row.parameter = m.parameter;
                    row.mode = m.mode;
                    row.check = k;
                    row.q = q;
                    row.beta = beta;
                    if (k != CheckKind::ec_ball) {
                        out.rows.push_back(row);
                        continue;
                    }
                    if (params.c.empty() && params.c_rel.empty()) {
                        row.c = 0.0;
                        out.rows.push_back(row);
                    }
                    for (double c : params.c) {
                        row.c = c;
                        out.rows.push_back(row);
                    }
                    row.c.reset();
                    for (double c : params.c_rel) {
                        row.c_rel = c;
                        out.rows.push_back(row);
                    }
                }
            }
        }
    }

    auto run_row = [&](SweepRow& row) {
        try {
            const auto d = row.shape.build(res.K);
            const auto& o = params.options;
            switch (row.check) {
                case CheckKind::intermediate:
                    row.report = check_intermediate(d, row.q, row.beta, res, o);
                    break;
                case CheckKind::quantitative:
                    row.report = check_quantitative(d, row.q, row.beta, res, o);
                    break;
                case CheckKind::ec_ball: {
                    double c = row.c.value_or(0.0);
                    if (row.c_rel) {
                        auto mesh = std::make_shared<const fem::Mesh>(fem::mesh_star(d, res.n_r, res.n_theta));
                        const auto e = fem::minimize_energy(mesh, {2, row.q, row.beta, 0.0, 0.0}, o.solver);
                        c = *row.c_rel * e.second.inf_u;
                        row.c = c;
                    }
                    row.report = check_ec_ball_minimality(d, {2, row.q, row.beta, c, 0.0}, res, o);
                    break;
                }
                case CheckKind::trace_poincare: {
                    auto mesh = std::make_shared<const fem::Mesh>(fem::mesh_star(d, res.n_r, res.n_theta));
                    const auto field = row.q < 2.0
                        ? fem::minimize_energy(mesh, {2, row.q, row.beta, 0.0, 0.0}, o.solver).first
                        : fem::lambda_2_pair(mesh, row.beta).vector;
                    row.report = check_trace_poincare(d, row.q, row.beta, field, o.tolerance, res.M);
                    break;
                }
            }
        } catch (const std::exception& e) {
            row.error = e.what();
        }
    };

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers = std::min<unsigned>(params.threads > 0 ? params.threads : hw,
                                                static_cast<unsigned>(out.rows.size()));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < out.rows.size(); i = next++) run_row(out.rows[i]);
    };
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    pool.clear();

    for (const auto& row : out.rows) {
        if (!row.error.empty()) {
            ++out.failed;
        } else if (row.report.pass) {
            ++out.passed;
        } else {
            ++out.violated;
        }
        if (row.error.empty() && row.report.diagnostics.ratio) {
            const double v = *row.report.diagnostics.ratio;
            out.empirical_constant = out.empirical_constant ? std::min(*out.empirical_constant, v) : v;
        }
    }
    return out;
}

void write_sweep_csv(std::ostream& os, const SweepResult& result, CheckKind check) {
    os << std::setprecision(12);
    auto opt = [&](const std::optional<double>& v) {
        if (v) os << *v;
    };
    os << "shape,parameter,mode,q,beta,c,lhs,rhs,deficit,tolerance,pass,lambda_q,E,inf_u,Per,area,"
          "asymmetry,error\n";
    for (const auto& row : result.rows) {
        if (row.check != check) continue;
        const auto& r = row.report;
        const auto& g = r.diagnostics;
        os << row.shape.to_string() << ',' << row.parameter << ',' << row.mode << ',' << row.q << ','
           << row.beta << ',';
        opt(row.c);
        os << ',';
        if (row.error.empty()) {
            os << r.lhs << ',' << r.rhs << ',' << r.deficit << ',' << r.tolerance << ','
               << (r.pass ? "true" : "false") << ',';
        } else {
            os << ",,,,false,";
        }
        opt(g.lambda_q);
        os << ',';
        opt(g.energy);
        os << ',';
        opt(g.inf_u);
        os << ',';
        opt(g.perimeter);
        os << ',';
        opt(g.area);
        os << ',';
        opt(g.asymmetry);
        os << ',';
        std::string err = row.error;
        std::replace(err.begin(), err.end(), ',', ';');
        std::replace(err.begin(), err.end(), '\n', ' ');
        os << err << '\n';
    }
}

}  // namespace robinlab
