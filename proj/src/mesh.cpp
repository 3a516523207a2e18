#include <cmath>
#include <iomanip>
#include <numbers>
#include <string>

#include "robinlab/error.hpp"
#include "robinlab/fem.hpp"

namespace robinlab::fem {

namespace {

double signed_area(const Point& a, const Point& b, const Point& c) {
    return 0.5 * ((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y));
}

double dist2(const Point& a, const Point& b) {
    const double dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

}  // namespace

double Mesh::area() const {
    double s = 0.0;
    for (const auto& t : triangles) s += signed_area(vertices[t[0]], vertices[t[1]], vertices[t[2]]);
    return s;
}

double Mesh::boundary_length() const {
    double s = 0.0;
    for (const auto& e : boundary_edges) s += std::sqrt(dist2(vertices[e[0]], vertices[e[1]]));
    return s;
}

std::vector<int> Mesh::boundary_vertices() const {
    std::vector<int> out;
    out.reserve(boundary_edges.size());
    for (const auto& e : boundary_edges) out.push_back(e[0]);
    return out;
}

void Mesh::validate() const {
    const int nv = static_cast<int>(vertices.size());
    for (std::size_t k = 0; k < triangles.size(); ++k) {
        const auto& t = triangles[k];
        for (int v : t) {
            if (v < 0 || v >= nv) throw InvalidInput("triangle " + std::to_string(k) + " has a bad index");
        }
        if (!(signed_area(vertices[t[0]], vertices[t[1]], vertices[t[2]]) > 0.0)) {
            throw InvalidInput("triangle " + std::to_string(k) + " is not positively oriented");
        }
    }
    if (boundary_edges.empty()) throw InvalidInput("mesh has no boundary");
    for (std::size_t k = 0; k < boundary_edges.size(); ++k) {
        const auto& next = boundary_edges[(k + 1) % boundary_edges.size()];
        if (boundary_edges[k][1] != next[0]) {
            throw InvalidInput("boundary edges do not form a single closed loop");
        }
    }
}

Mesh mesh_star(const StarDomain& d, int n_r, int n_theta) {
    if (n_r < 4) throw InvalidInput("mesh_star requires n_r >= 4");
    if (n_theta < 16) throw InvalidInput("mesh_star requires n_theta >= 16");

    Mesh m;
    m.n_r = n_r;
    m.n_theta = n_theta;
    const Point c = d.center();
    const auto k = d.size();
    const bool aligned = k % static_cast<std::size_t>(n_theta) == 0;

    std::vector<double> boundary_radius(n_theta);
    std::vector<Point> dir(n_theta);
    for (int j = 0; j < n_theta; ++j) {
        const double t = 2.0 * std::numbers::pi * j / n_theta;
        dir[j] = {std::cos(t), std::sin(t)};
        boundary_radius[j] = aligned ? d.radii()[j * (k / n_theta)] : d.radius_at(t);
    }

    m.vertices.reserve(1 + static_cast<std::size_t>(n_r) * n_theta);
    m.vertices.push_back(c);
    for (int i = 1; i <= n_r; ++i) {
        const double rho = static_cast<double>(i) / n_r;
        for (int j = 0; j < n_theta; ++j) {
            m.vertices.push_back(c + (rho * boundary_radius[j]) * dir[j]);
        }
    }
    auto vid = [n_theta](int ring, int j) { return 1 + (ring - 1) * n_theta + (j % n_theta); };

    m.triangles.reserve(static_cast<std::size_t>(2 * n_r - 1) * n_theta);
    for (int j = 0; j < n_theta; ++j) m.triangles.push_back({0, vid(1, j), vid(1, j + 1)});
    for (int i = 1; i < n_r; ++i) {
        for (int j = 0; j < n_theta; ++j) {
            const int a = vid(i, j), b = vid(i, j + 1), cc = vid(i + 1, j + 1), dd = vid(i + 1, j);
            // Ties (isosceles trapezoids on the disk) go to the a-cc diagonal so
            // that the mesh keeps the rotational symmetry of the data.
            const double d_acc = dist2(m.vertices[a], m.vertices[cc]);
            const double d_bdd = dist2(m.vertices[dd], m.vertices[b]);
            if (d_acc <= d_bdd * (1.0 + 1e-10)) {
                m.triangles.push_back({a, dd, cc});
                m.triangles.push_back({a, cc, b});
            } else {
                m.triangles.push_back({a, dd, b});
                m.triangles.push_back({dd, cc, b});
            }
        }
    }
    for (int j = 0; j < n_theta; ++j) m.boundary_edges.push_back({vid(n_r, j), vid(n_r, j + 1)});

    const double floor = 1e-14 * area(d);
    for (std::size_t t = 0; t < m.triangles.size(); ++t) {
        const auto& tri = m.triangles[t];
        if (signed_area(m.vertices[tri[0]], m.vertices[tri[1]], m.vertices[tri[2]]) <= floor) {
            throw InvalidInput("mesh_star: degenerate triangle " + std::to_string(t) + " (" +
                               std::to_string(tri[0]) + "," + std::to_string(tri[1]) + "," +
                               std::to_string(tri[2]) + ")");
        }
    }
    m.validate();
    return m;
}

void write_vertices_csv(std::ostream& os, const Mesh& mesh) {
    const auto prec = os.precision(12);
    os << "index,x,y\n";
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        os << i << ',' << mesh.vertices[i].x << ',' << mesh.vertices[i].y << '\n';
    }
    os.precision(prec);
}

void write_triangles_csv(std::ostream& os, const Mesh& mesh) {
    os << "index,v0,v1,v2\n";
    for (std::size_t i = 0; i < mesh.triangles.size(); ++i) {
        const auto& t = mesh.triangles[i];
        os << i << ',' << t[0] << ',' << t[1] << ',' << t[2] << '\n';
    }
}

void write_field_csv(std::ostream& os, const ScalarField& field) {
    const auto prec = os.precision(12);
    os << "x,y,value\n";
    for (std::size_t i = 0; i < field.mesh->vertices.size(); ++i) {
        const auto& p = field.mesh->vertices[i];
        os << p.x << ',' << p.y << ',' << field.values[static_cast<Eigen::Index>(i)] << '\n';
    }
    os.precision(prec);
}

}  // namespace robinlab::fem
