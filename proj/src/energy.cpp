#include <Eigen/SparseCholesky>

#include <algorithm>
#include <cmath>
#include <string>

#include "robinlab/error.hpp"
#include "robinlab/fem.hpp"

namespace robinlab::fem {

namespace {

using Solver = Eigen::SimplicialLDLT<SparseMatrix>;

/// min 1/2 u'Au - f'u subject to u >= lower, by a primal-dual active set
/// iteration. The active set persists between calls as a warm start.
class BoundedQuadratic {
public:
    BoundedQuadratic(const SparseMatrix& a, double lower, int max_iterations)
        : a_(a), lower_(lower), max_iterations_(max_iterations), active_(a.rows(), 0) {
        work_ = a_;
        solver_.analyzePattern(work_);
    }

    Vector solve(const Vector& f) {
        const auto n = a_.rows();
        const double tau_u = 1e-13 * std::max(1.0, lower_);
        for (int it = 0; it < max_iterations_; ++it) {
            work_ = a_;
            for (Eigen::Index j = 0; j < work_.outerSize(); ++j) {
                for (SparseMatrix::InnerIterator e(work_, j); e; ++e) {
                    if (active_[e.row()] || active_[e.col()]) e.valueRef() = e.row() == e.col() ? 1.0 : 0.0;
                }
            }
            Vector fixed = Vector::Zero(n);
            for (Eigen::Index i = 0; i < n; ++i) {
                if (active_[i]) fixed[i] = lower_;
            }
            Vector rhs = f - a_ * fixed;
            for (Eigen::Index i = 0; i < n; ++i) {
                if (active_[i]) rhs[i] = lower_;
            }
            solver_.factorize(work_);
            if (solver_.info() != Eigen::Success) throw SolverFailure("active-set factorization failed");
            Vector u = solver_.solve(rhs);
            const Vector multiplier = a_ * u - f;
            const double tau_m = 1e-13 * std::max(1.0, f.cwiseAbs().maxCoeff());

            bool changed = false;
            for (Eigen::Index i = 0; i < n; ++i) {
                const char next = active_[i] ? (multiplier[i] >= -tau_m) : (u[i] < lower_ - tau_u);
                changed = changed || next != active_[i];
                active_[i] = next;
            }
            if (!changed) {
                for (Eigen::Index i = 0; i < n; ++i) {
                    if (active_[i]) u[i] = lower_;
                    u[i] = std::max(u[i], lower_);
                }
                return u;
            }
        }
        throw SolverFailure("active-set iteration did not settle in " +
                            std::to_string(max_iterations_) + " steps");
    }

private:
    const SparseMatrix& a_;
    double lower_;
    int max_iterations_;
    std::vector<char> active_;
    SparseMatrix work_;
    Solver solver_;
};

double powered_sum(const Vector& w, const Vector& u, double q) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < u.size(); ++i) s += w[i] * std::pow(std::max(u[i], 0.0), q);
    return s;
}

Vector source(const Vector& w, const Vector& u, double q) {
    if (q == 1.0) return w;
    Vector f(u.size());
    for (Eigen::Index i = 0; i < u.size(); ++i) f[i] = w[i] * std::pow(std::max(u[i], 0.0), q - 1.0);
    return f;
}

}  // namespace

std::pair<ScalarField, EnergyReport> minimize_energy(std::shared_ptr<const Mesh> mesh,
                                                     const RadialParams& params,
                                                     const SolverOptions& opts) {
    params.validate();
    if (!(params.q < 2.0)) throw InvalidInput("minimize_energy requires q < 2");
    if (params.eps != 0.0) throw InvalidInput("minimize_energy requires eps = 0");
    if (params.n != 2) throw InvalidInput("minimize_energy works in dimension 2");
    if (!(opts.relaxation > 0.0 && opts.relaxation <= 1.0)) {
        throw InvalidInput("relaxation must lie in (0, 1]");
    }

    const Forms forms = assemble(*mesh);
    const double q = params.q, beta = params.beta, c = params.c;
    const SparseMatrix a = forms.stiffness + beta * forms.boundary_mass;
    const Vector& w = forms.lumped;
    const auto n = a.rows();

    auto energy = [&](const Vector& u) { return 0.5 * u.dot(a * u) - powered_sum(w, u, q) / q; };

    Solver direct;
    std::optional<BoundedQuadratic> bounded;
    if (c > 0.0) {
        bounded.emplace(a, c, opts.max_active_set_iterations);
    } else {
        direct.compute(a);
        if (direct.info() != Eigen::Success) throw SolverFailure("factorization of K + beta B failed");
    }
    auto step = [&](const Vector& f) -> Vector { return c > 0.0 ? bounded->solve(f) : Vector(direct.solve(f)); };

    EnergyReport rep;
    Vector u = step(w);
    double e_old = energy(u);
    rep.history.push_back(e_old);

    // Gershgorin bound on the largest eigenvalue of A for the fallback step.
    double lipschitz = 0.0;
    for (Eigen::Index j = 0; j < a.outerSize(); ++j) {
        double s = 0.0;
        for (SparseMatrix::InnerIterator e(a, j); e; ++e) s += std::abs(e.value());
        lipschitz = std::max(lipschitz, s);
    }
    const double floor_value = c > 0.0 ? c : 0.0;

    for (int it = 1; it <= opts.max_iterations; ++it) {
        const Vector target = step(source(w, u, q));
        Vector next = (1.0 - opts.relaxation) * u + opts.relaxation * target;
        double e_new = energy(next);
        if (e_new > e_old + 1e-14 * std::abs(e_old)) {
            // Projected gradient with backtracking from the current iterate.
            const Vector g = a * u - source(w, u, q);
            double s = 1.0 / lipschitz;
            bool accepted = false;
            for (int b = 0; b < 60 && !accepted; ++b, s *= 0.5) {
                next = (u - s * g).cwiseMax(floor_value);
                e_new = energy(next);
                accepted = e_new <= e_old;
            }
            if (!accepted) {
                next = u;
                e_new = e_old;
            }
            ++rep.fallback_steps;
        }
        const double update = (next - u).cwiseAbs().maxCoeff();
        const double decrease = (e_old - e_new) / std::max(std::abs(e_new), 1e-300);
        u = std::move(next);
        e_old = e_new;
        rep.history.push_back(e_new);
        rep.iterations = it;
        if (decrease < opts.energy_tolerance && update < opts.update_tolerance) {
            rep.converged = true;
            break;
        }
    }

    if (c == 0.0) {
        for (Eigen::Index i = 0; i < n; ++i) {
            if (!(u[i] > 0.0)) {
                throw SolverFailure("minimize_energy: nonpositive nodal value at vertex " +
                                    std::to_string(i) + " (contradicts nondegeneracy)");
            }
        }
    }

    const Vector v = (u.array() - c).matrix();
    const Vector ones = Vector::Ones(n);
    rep.perimeter = ones.dot(forms.boundary_mass * ones);
    rep.area = w.sum();
    rep.breakdown.dirichlet = 0.5 * v.dot(forms.stiffness * v);
    rep.breakdown.boundary =
        0.5 * beta * (v.dot(forms.boundary_mass * v) + 2.0 * c * ones.dot(forms.boundary_mass * v));
    double bulk = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        bulk += w[i] * (std::pow(c + std::max(v[i], 0.0), q) - std::pow(c, q));
    }
    rep.breakdown.bulk = -bulk / q;
    rep.E = rep.breakdown.total();

    Eigen::Index imin = 0;
    rep.inf_u = v.minCoeff(&imin);
    rep.sup_u = v.maxCoeff();
    rep.inf_on_boundary = imin >= 1 + static_cast<Eigen::Index>(mesh->n_r - 1) * mesh->n_theta;
    if (c == 0.0 && rep.E < 0.0) rep.lambda_q = lambda_from_energy(rep.E, q);

    return {ScalarField{std::move(mesh), v}, std::move(rep)};
}

double lambda_q(std::shared_ptr<const Mesh> mesh, double q, double beta, const SolverOptions& opts) {
    if (!(q >= 1.0 && q < 2.0)) throw InvalidInput("lambda_q requires q in [1, 2); use lambda_2");
    const auto [field, rep] = minimize_energy(std::move(mesh), RadialParams{2, q, beta, 0.0, 0.0}, opts);
    if (!(rep.E < 0.0)) throw SolverFailure("lambda_q: discrete energy is not negative");
    return lambda_from_energy(rep.E, q);
}

EigenPair lambda_2_pair(std::shared_ptr<const Mesh> mesh, double beta, const EigenOptions& opts) {
    if (!(beta > 0.0)) throw InvalidInput("lambda_2 requires beta > 0");
    const Forms forms = assemble(*mesh);
    const SparseMatrix a = forms.stiffness + beta * forms.boundary_mass;
    Solver solver(a);
    if (solver.info() != Eigen::Success) throw SolverFailure("factorization of K + beta B failed");

    Vector x = Vector::Ones(a.rows());
    x /= std::sqrt(x.dot(forms.mass * x));
    double lambda = 0.0;
    for (int it = 1; it <= opts.max_iterations; ++it) {
        const Vector mx = forms.mass * x;
        Vector y = solver.solve(mx);
        const double ymy = y.dot(forms.mass * y);
        const double next = mx.dot(y) / ymy;
        x = y / std::sqrt(ymy);
        if (it > 1 && std::abs(next - lambda) <= opts.tolerance * std::abs(next)) {
            if (x.sum() < 0.0) x = -x;
            return {next, ScalarField{std::move(mesh), x}, it};
        }
        lambda = next;
    }
    throw SolverFailure("lambda_2: inverse iteration hit the iteration cap at lambda=" +
                        std::to_string(lambda));
}

double lambda_2(std::shared_ptr<const Mesh> mesh, double beta, const EigenOptions& opts) {
    return lambda_2_pair(std::move(mesh), beta, opts).value;
}

QuotientTerms quotient_terms(const Forms& forms, const Vector& u, double q) {
    QuotientTerms t;
    t.dirichlet = u.dot(forms.stiffness * u);
    t.trace = u.dot(forms.boundary_mass * u);
    t.bulk = q == 2.0 ? u.dot(forms.mass * u) : powered_sum(forms.lumped, u, q);
    return t;
}

double rayleigh_quotient(const Forms& forms, const Vector& u, double q, double beta) {
    const auto t = quotient_terms(forms, u, q);
    return (t.dirichlet + beta * t.trace) / std::pow(t.bulk, 2.0 / q);
}

}  // namespace robinlab::fem
