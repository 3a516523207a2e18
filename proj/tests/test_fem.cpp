#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "robinlab/error.hpp"
#include "robinlab/fem.hpp"
#include "robinlab/shapes.hpp"

using namespace robinlab;
using namespace robinlab::fem;

namespace {

constexpr double pi = std::numbers::pi;

std::shared_ptr<const Mesh> mesh_of(const StarDomain& d, int n_r, int n_theta) {
    return std::make_shared<const Mesh>(mesh_star(d, n_r, n_theta));
}

double bessel_lambda(double beta) {
    auto f = [&](double k) { return k * std::cyl_bessel_j(1.0, k) - beta * std::cyl_bessel_j(0.0, k); };
    double lo = 1e-12, hi = 2.404825557695773;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    const double k = 0.5 * (lo + hi);
    return k * k;
}

Vector coordinate(const Mesh& m, int axis) {
    Vector v(static_cast<Eigen::Index>(m.vertices.size()));
    for (std::size_t i = 0; i < m.vertices.size(); ++i) v[i] = axis == 0 ? m.vertices[i].x : m.vertices[i].y;
    return v;
}

}  // namespace

TEST(Mesh, CountsAndPolygonMeasures) {
    const int n_r = 8, n_theta = 64;
    const auto m = mesh_star(make_disk(1.0), n_r, n_theta);
    EXPECT_EQ(m.vertices.size(), static_cast<std::size_t>(1 + n_r * n_theta));
    EXPECT_EQ(m.triangles.size(), static_cast<std::size_t>(2 * n_r * n_theta - n_theta));
    EXPECT_EQ(m.boundary_edges.size(), static_cast<std::size_t>(n_theta));
    EXPECT_NEAR(m.area(), 0.5 * n_theta * std::sin(2 * pi / n_theta), 1e-13);
    EXPECT_NEAR(m.boundary_length(), 2.0 * n_theta * std::sin(pi / n_theta), 1e-13);
    EXPECT_NO_THROW(m.validate());
}

TEST(Mesh, RejectsTooCoarse) {
    EXPECT_THROW(mesh_star(make_disk(1.0), 3, 32), InvalidInput);
    EXPECT_THROW(mesh_star(make_disk(1.0), 8, 8), InvalidInput);
}

TEST(Mesh, ValidateCatchesBrokenMeshes) {
    auto m = mesh_star(make_disk(1.0), 4, 16);
    auto flipped = m;
    std::swap(flipped.triangles[5][1], flipped.triangles[5][2]);
    EXPECT_THROW(flipped.validate(), InvalidInput);
    auto open = m;
    open.boundary_edges.pop_back();
    EXPECT_THROW(open.validate(), InvalidInput);
}

TEST(Mesh, FollowsNonAlignedBoundaryData) {
    // K not a multiple of n_theta: boundary nodes come from chord interpolation.
    const auto d = make_ellipse(1.5, 0.8, 1000);
    const auto m = mesh_star(d, 8, 64);
    for (int v : m.boundary_vertices()) {
        const auto p = m.vertices[v];
        EXPECT_NEAR(std::hypot(p.x, p.y), d.radius_at(std::atan2(p.y, p.x)), 1e-12);
    }
}

TEST(Assemble, ExactOnLinearFunctions) {
    const auto m = mesh_star(make_ellipse(1.4, 0.9), 12, 64);
    const auto f = assemble(m);
    const Vector x = coordinate(m, 0), y = coordinate(m, 1), one = Vector::Ones(x.size());

    EXPECT_LT((f.stiffness * one).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(x.dot(f.stiffness * x), m.area(), 1e-12);
    EXPECT_NEAR(x.dot(f.stiffness * y), 0.0, 1e-12);
    EXPECT_NEAR(one.dot(f.mass * one), m.area(), 1e-12);
    EXPECT_NEAR(f.lumped.sum(), m.area(), 1e-12);
    EXPECT_NEAR(one.dot(f.boundary_mass * one), m.boundary_length(), 1e-12);

    // Independent oracles over the boundary polygon.
    double ix = 0.0, trace = 0.0;
    for (const auto& e : m.boundary_edges) {
        const auto a = m.vertices[e[0]], b = m.vertices[e[1]];
        ix += (a.x * b.y - b.x * a.y) * (a.x * a.x + a.x * b.x + b.x * b.x) / 12.0;
        trace += std::hypot(b.x - a.x, b.y - a.y) / 3.0 * (a.x * a.x + a.x * b.x + b.x * b.x);
    }
    EXPECT_NEAR(x.dot(f.mass * x), ix, 1e-12);
    EXPECT_NEAR(x.dot(f.boundary_mass * x), trace, 1e-12);
}

TEST(Assemble, SymmetricForms) {
    const auto f = assemble(mesh_star(make_perturbed(1.0, 0.2, 3), 6, 32));
    EXPECT_LT((SparseMatrix(f.stiffness.transpose()) - f.stiffness).norm(), 1e-13);
    EXPECT_LT((SparseMatrix(f.mass.transpose()) - f.mass).norm(), 1e-13);
    EXPECT_LT((SparseMatrix(f.boundary_mass.transpose()) - f.boundary_mass).norm(), 1e-13);
}

TEST(Energy, DiskTorsionConvergesFromAbove) {
    const double exact = -(pi / 2.0) * (5.0 / 8.0);
    double previous = 0.0;
    std::vector<double> err;
    for (int s : {1, 2, 4}) {
        const auto [u, rep] = minimize_energy(mesh_of(make_disk(1.0), 8 * s, 16 * s), {});
        EXPECT_TRUE(rep.converged);
        EXPECT_GT(rep.E, exact);
        if (s > 1) {
            EXPECT_LT(rep.E, previous);
        }
        previous = rep.E;
        err.push_back(rep.E - exact);
    }
    EXPECT_GT(err[1] / err[2], 3.5);
    EXPECT_LT(err[1] / err[2], 4.5);
}

TEST(Energy, DescentAndConsistency) {
    const auto [u, rep] = minimize_energy(mesh_of(make_ellipse(1.3, 1 / 1.3), 16, 64), {2, 1.5, 1.0, 0.0, 0.0});
    ASSERT_TRUE(rep.converged);
    for (std::size_t i = 1; i < rep.history.size(); ++i) {
        EXPECT_LE(rep.history[i], rep.history[i - 1] + 1e-14 * std::abs(rep.history[i - 1]));
    }
    EXPECT_NEAR(rep.E, rep.history.back(), 1e-12 * std::abs(rep.E));
    EXPECT_NEAR(rep.E, rep.breakdown.total(), 1e-14);
    EXPECT_GT(rep.inf_u, 0.0);
    EXPECT_TRUE(rep.inf_on_boundary);
    EXPECT_NEAR(u.min(), rep.inf_u, 0.0);
}

TEST(Energy, SymmetricOnTheDisk) {
    const int n_r = 12, n_theta = 64;
    const auto [u, rep] = minimize_energy(mesh_of(make_disk(1.0), n_r, n_theta), {2, 1.5, 1.0, 0.0, 0.0});
    for (int i = 1; i <= n_r; ++i) {
        const double ref = u.values[1 + (i - 1) * n_theta];
        for (int j = 1; j < n_theta; ++j) EXPECT_NEAR(u.values[1 + (i - 1) * n_theta + j], ref, 1e-9);
    }
}

TEST(Energy, MinimumAttainedOnBoundaryOfConvexDomains) {
    for (const auto& d : {make_disk(1.0), make_ellipse(1.5, 0.7), make_stadium(1.0, 0.6), make_square(1.5)}) {
        const auto rep = minimize_energy(mesh_of(d, 12, 64), {2, 1.0, 0.7, 0.0, 0.0}).second;
        EXPECT_TRUE(rep.inf_on_boundary);
        EXPECT_GT(rep.inf_u, 0.0);
        EXPECT_TRUE(std::isfinite(rep.sup_u));
    }
}

TEST(Energy, ObstacleShiftIdentity) {
    // For c <= inf u the constraint is inactive and
    // E^c = E - (beta/2) c^2 Per + (c^q / q) |Omega|; above inf u it is >=.
    for (double q : {1.0, 1.5}) {
        const auto mesh = mesh_of(make_ellipse(1.3, 1 / 1.3), 12, 48);
        const double beta = 0.8;
        const auto base = minimize_energy(mesh, {2, q, beta, 0.0, 0.0}).second;
        auto shifted = [&](double c) {
            return base.E - 0.5 * beta * c * c * base.perimeter + std::pow(c, q) / q * base.area;
        };
        for (int k = 0; k <= 4; ++k) {
            const double c = base.inf_u * k / 4.0;
            const auto rep = minimize_energy(mesh, {2, q, beta, c, 0.0}).second;
            EXPECT_NEAR(rep.E - shifted(c), 0.0, 1e-8) << q << ' ' << c;
        }
        const double c = 2.0 * base.inf_u;
        const auto [v, rep] = minimize_energy(mesh, {2, q, beta, c, 0.0});
        EXPECT_GT(rep.E - shifted(c), 0.0);
        EXPECT_GE(v.min(), 0.0);
        EXPECT_NEAR(v.min(), 0.0, 1e-12);  // contact somewhere
    }
}

TEST(Energy, ObstacleOnDiskMatchesRadial) {
    for (double c : {0.25, 0.5, 1.0}) {
        const auto rep = minimize_energy(mesh_of(make_disk(1.0), 32, 64), {2, 1.0, 1.0, c, 0.0}).second;
        const double radial = ball_minimum({2, 1.0, 1.0, c, 0.0}, 1.0).E;
        EXPECT_NEAR(rep.E, radial, 3e-3) << c;
    }
}

TEST(Energy, RejectsUnsupportedParameters) {
    const auto mesh = mesh_of(make_disk(1.0), 8, 32);
    EXPECT_THROW(minimize_energy(mesh, {2, 2.0, 1.0, 0.0, 0.0}), InvalidInput);
    EXPECT_THROW(minimize_energy(mesh, {2, 1.0, 1.0, 0.1, 0.2}), InvalidInput);
    EXPECT_THROW(minimize_energy(mesh, {3, 1.0, 1.0, 0.0, 0.0}), InvalidInput);
    EXPECT_THROW(lambda_q(mesh, 2.0, 1.0), InvalidInput);
    SolverOptions bad;
    bad.relaxation = 0.0;
    EXPECT_THROW(minimize_energy(mesh, {}, bad), InvalidInput);
}

TEST(LambdaQ, DiskTorsion) {
    const double l = lambda_q(mesh_of(make_disk(1.0), 64, 128), 1.0, 1.0);
    EXPECT_NEAR(l, 0.5093, 2e-3);
}

TEST(LambdaQ, ScalingMatchesRadial) {
    for (double radius : {1.0, 2.0}) {
        const double l = lambda_q(mesh_of(make_disk(radius), 64, 128), 1.0, 1.0);
        EXPECT_NEAR(l, ball_lambda_q(2, 1.0, 1.0, radius), 2e-3);
    }
}

TEST(LambdaQ, SublinearDiskMatchesRadial) {
    const double l = lambda_q(mesh_of(make_disk(1.0), 64, 128), 1.5, 1.0);
    EXPECT_NEAR(l, ball_lambda_q(2, 1.5, 1.0, 1.0), 5e-3);
}

TEST(LambdaQ, RayleighQuotientAtMinimiser) {
    for (double q : {1.0, 1.25, 1.5, 1.75}) {
        const auto mesh = mesh_of(make_ellipse(1.2, 1 / 1.2), 16, 64);
        const auto [u, rep] = minimize_energy(mesh, {2, q, 1.0, 0.0, 0.0});
        ASSERT_TRUE(rep.lambda_q.has_value());
        const double rq = rayleigh_quotient(assemble(*mesh), u.values, q, 1.0);
        EXPECT_NEAR(rq, *rep.lambda_q, 1e-6 * rq) << q;
    }
}

TEST(Lambda2, DiskMatchesBessel) {
    const double oracle = bessel_lambda(1.0);
    const auto pair = lambda_2_pair(mesh_of(make_disk(1.0), 32, 64), 1.0);
    EXPECT_NEAR(pair.value, oracle, 5e-3 * oracle);
    EXPECT_GT(pair.value, oracle);
    const auto forms = assemble(*pair.vector.mesh);
    EXPECT_NEAR(pair.vector.values.dot(forms.mass * pair.vector.values), 1.0, 1e-12);
    EXPECT_GT(pair.vector.min(), 0.0);
    EXPECT_NEAR(rayleigh_quotient(forms, pair.vector.values, 2.0, 1.0), pair.value, 1e-9 * pair.value);
}

TEST(Lambda2, TendsToZeroWithBeta) {
    EXPECT_LT(lambda_2(mesh_of(make_disk(1.0), 16, 64), 1e-8), 1e-6);
}

TEST(Lambda2, BelowOtherQuotients) {
    const auto mesh = mesh_of(make_stadium(1.0, 0.5), 16, 64);
    const auto forms = assemble(*mesh);
    const double l = lambda_2(mesh, 2.0);
    const Vector one = Vector::Ones(static_cast<Eigen::Index>(mesh->vertices.size()));
    EXPECT_LT(l, rayleigh_quotient(forms, one, 2.0, 2.0));
    EXPECT_NEAR(rayleigh_quotient(forms, one, 2.0, 2.0), 2.0 * mesh->boundary_length() / mesh->area(), 1e-12);
    EXPECT_THROW(lambda_2(mesh, 0.0), InvalidInput);
}

TEST(Csv, WritersProduceTables) {
    const auto mesh = mesh_of(make_disk(1.0), 4, 16);
    std::ostringstream v, t, f;
    write_vertices_csv(v, *mesh);
    write_triangles_csv(t, *mesh);
    write_field_csv(f, ScalarField{mesh, Vector::Ones(static_cast<Eigen::Index>(mesh->vertices.size()))});
    auto lines = [](const std::string& s) { return std::count(s.begin(), s.end(), '\n'); };
    EXPECT_EQ(v.str().substr(0, 9), "index,x,y");
    EXPECT_EQ(lines(v.str()), static_cast<long>(mesh->vertices.size() + 1));
    EXPECT_EQ(lines(t.str()), static_cast<long>(mesh->triangles.size() + 1));
    EXPECT_EQ(f.str().substr(0, 11), "x,y,value\n0");
    EXPECT_EQ(v.str().find('\r'), std::string::npos);
}
