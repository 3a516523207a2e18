#include <cmath>

#include "robinlab/fem.hpp"

namespace robinlab::fem {

Forms assemble(const Mesh& mesh) {
    mesh.validate();
    using Triplet = Eigen::Triplet<double>;
    const auto nv = static_cast<Eigen::Index>(mesh.vertices.size());
    std::vector<Triplet> k, m, b;
    k.reserve(mesh.triangles.size() * 9);
    m.reserve(mesh.triangles.size() * 9);
    b.reserve(mesh.boundary_edges.size() * 4);

    for (const auto& t : mesh.triangles) {
        const Point& p0 = mesh.vertices[t[0]];
        const Point& p1 = mesh.vertices[t[1]];
        const Point& p2 = mesh.vertices[t[2]];
        const double area2 = (p1.x - p0.x) * (p2.y - p0.y) - (p2.x - p0.x) * (p1.y - p0.y);
        const double area = 0.5 * area2;
        // Gradients of the barycentric coordinates times 2|T|.
        const double gx[3] = {p1.y - p2.y, p2.y - p0.y, p0.y - p1.y};
        const double gy[3] = {p2.x - p1.x, p0.x - p2.x, p1.x - p0.x};
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                k.emplace_back(t[i], t[j], (gx[i] * gx[j] + gy[i] * gy[j]) / (4.0 * area));
                m.emplace_back(t[i], t[j], area / 12.0 * (i == j ? 2.0 : 1.0));
            }
        }
    }
    for (const auto& e : mesh.boundary_edges) {
        const Point& a = mesh.vertices[e[0]];
        const Point& c = mesh.vertices[e[1]];
        const double len = std::hypot(c.x - a.x, c.y - a.y);
        b.emplace_back(e[0], e[0], len / 3.0);
        b.emplace_back(e[1], e[1], len / 3.0);
        b.emplace_back(e[0], e[1], len / 6.0);
        b.emplace_back(e[1], e[0], len / 6.0);
    }

    Forms f;
    f.stiffness.resize(nv, nv);
    f.mass.resize(nv, nv);
    f.boundary_mass.resize(nv, nv);
    f.stiffness.setFromTriplets(k.begin(), k.end());
    f.mass.setFromTriplets(m.begin(), m.end());
    f.boundary_mass.setFromTriplets(b.begin(), b.end());
    f.lumped = f.mass * Vector::Ones(nv);
    return f;
}

}  // namespace robinlab::fem
