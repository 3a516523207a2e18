#pragma once

#include <Eigen/Sparse>

#include <array>
#include <memory>
#include <optional>
#include <ostream>
#include <vector>

#include "robinlab/geometry.hpp"
#include "robinlab/radial.hpp"

namespace robinlab::fem {

using SparseMatrix = Eigen::SparseMatrix<double>;
using Vector = Eigen::VectorXd;

/// Conforming P1 triangulation of a star domain.
struct Mesh {
    std::vector<Point> vertices;
    std::vector<std::array<int, 3>> triangles;     // counterclockwise
    std::vector<std::array<int, 2>> boundary_edges;  // closed counterclockwise loop
    int n_r = 0;
    int n_theta = 0;

    double area() const;
    double boundary_length() const;
    std::vector<int> boundary_vertices() const;

    /// Throws InvalidInput when a triangle is not positively oriented or the
    /// boundary edges do not form one closed loop.
    void validate() const;
};

/// Image of the structured polar disk mesh under
/// (rho, theta) -> center + rho r(theta) (cos theta, sin theta):
/// rings rho_i = i / n_r, a fan around the center, quads split along the
/// shorter diagonal.
Mesh mesh_star(const StarDomain& d, int n_r, int n_theta);

/// The discrete forms of the energy.
struct Forms {
    SparseMatrix stiffness;      // int grad u . grad v
    SparseMatrix boundary_mass;  // int_{boundary} u v, exact for linear traces
    SparseMatrix mass;           // consistent int u v
    Vector lumped;               // row sums of `mass`
};

Forms assemble(const Mesh& mesh);

/// Nodal values over a mesh.
struct ScalarField {
    std::shared_ptr<const Mesh> mesh;
    Vector values;

    double min() const { return values.minCoeff(); }
    double max() const { return values.maxCoeff(); }
};

struct EnergyBreakdown {
    double dirichlet = 0.0;
    double boundary = 0.0;
    double bulk = 0.0;
    double total() const { return dirichlet + boundary + bulk; }
};

struct EnergyReport {
    double E = 0.0;  // E(Omega) for c = 0, E^c(Omega) otherwise
    EnergyBreakdown breakdown;
    double inf_u = 0.0;
    double sup_u = 0.0;
    bool inf_on_boundary = false;
    std::optional<double> lambda_q;
    int iterations = 0;
    bool converged = false;
    int fallback_steps = 0;
    double perimeter = 0.0;
    double area = 0.0;
    std::vector<double> history;  // energy per iteration
};

struct SolverOptions {
    double relaxation = 0.7;
    int max_iterations = 500;
    double energy_tolerance = 1e-12;
    double update_tolerance = 1e-10;
    int max_active_set_iterations = 200;
};

/// Minimises the discrete energy
///     1/2 u'Ku + beta/2 u'Bu - 1/q sum_i w_i u_i^q
/// over nodal fields with u >= c, and reports E^c through
///     E^c = E(c + v) - beta/2 c^2 Per + c^q/q |Omega|
/// with mesh perimeter and area. The returned field is v = u - c (u itself
/// for c = 0). eps must be 0 and q in [1, 2).
///
/// Each step minimises the energy with the concave part -u^q/q linearised at
/// the current iterate, subject to the bound, by a primal-dual active set
/// method; the step is relaxed and energy descent is monitored, with a
/// projected-gradient fallback.
std::pair<ScalarField, EnergyReport> minimize_energy(std::shared_ptr<const Mesh> mesh,
                                                     const RadialParams& params,
                                                     const SolverOptions& opts = {});

/// lambda_q from the energy relation, q in [1, 2).
double lambda_q(std::shared_ptr<const Mesh> mesh, double q, double beta,
                const SolverOptions& opts = {});

struct EigenOptions {
    double tolerance = 1e-10;
    int max_iterations = 1000;
};

struct EigenPair {
    double value = 0.0;
    ScalarField vector;  // positive, unit norm in the consistent mass
    int iterations = 0;
};

/// Smallest eigenvalue of (K + beta B) x = lambda M x by inverse iteration.
EigenPair lambda_2_pair(std::shared_ptr<const Mesh> mesh, double beta,
                        const EigenOptions& opts = {});
double lambda_2(std::shared_ptr<const Mesh> mesh, double beta, const EigenOptions& opts = {});

/// The three terms of a Rayleigh quotient for a nonnegative field.
struct QuotientTerms {
    double dirichlet = 0.0;  // int |grad u|^2
    double trace = 0.0;      // int_{boundary} u^2
    double bulk = 0.0;       // int u^q (lumped; consistent mass for q = 2)
};

QuotientTerms quotient_terms(const Forms& forms, const Vector& u, double q);

/// (int |grad u|^2 + beta int u^2) / (int u^q)^(2/q).
double rayleigh_quotient(const Forms& forms, const Vector& u, double q, double beta);

void write_vertices_csv(std::ostream& os, const Mesh& mesh);
void write_triangles_csv(std::ostream& os, const Mesh& mesh);
/// Columns x, y, value.
void write_field_csv(std::ostream& os, const ScalarField& field);

}  // namespace robinlab::fem
