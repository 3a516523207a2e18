#include "robinlab/geometry.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <string>

#include "robinlab/error.hpp"

namespace robinlab {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

}  // namespace

StarDomain::StarDomain(Point center, std::vector<double> radii)
    : center_(center), radii_(std::move(radii)) {
    if (radii_.size() < min_samples) {
        throw InvalidInput("StarDomain needs at least 16 boundary samples, got " +
                           std::to_string(radii_.size()));
    }
    for (std::size_t j = 0; j < radii_.size(); ++j) {
        if (!(radii_[j] > 0.0) || !std::isfinite(radii_[j])) {
            throw InvalidInput("StarDomain radius " + std::to_string(j) +
                               " is not a positive finite number");
        }
    }
}

double StarDomain::angle(std::size_t j) const {
    return two_pi * static_cast<double>(j) / static_cast<double>(radii_.size());
}

Point StarDomain::vertex(std::size_t j) const {
    const double t = angle(j);
    return center_ + radii_[j] * Point{std::cos(t), std::sin(t)};
}

double StarDomain::radius_at(double theta) const {
    const auto k = radii_.size();
    const double step = two_pi / static_cast<double>(k);
    double t = std::fmod(theta, two_pi);
    if (t < 0.0) t += two_pi;
    auto j = static_cast<std::size_t>(t / step);
    if (j >= k) j = k - 1;
    const double phi = t - static_cast<double>(j) * step;
    if (phi == 0.0) return radii_[j];
    const double r0 = radii_[j];
    const double r1 = radii_[(j + 1) % k];
    // Ray / chord intersection in the local frame of the segment.
    return r0 * r1 * std::sin(step) / (r0 * std::sin(phi) + r1 * std::sin(step - phi));
}

StarDomain StarDomain::scaled(double t) const {
    if (!(t > 0.0)) throw InvalidInput("scale factor must be positive");
    std::vector<double> r(radii_);
    for (auto& v : r) v *= t;
    return StarDomain(t * center_, std::move(r));
}

StarDomain StarDomain::translated(Point shift) const { return StarDomain(center_ + shift, radii_); }

double area(const StarDomain& d) {
    // Shoelace formula on center-relative vertex coordinates.
    const auto k = d.size();
    double sum = 0.0;
    const Point c = d.center();
    for (std::size_t j = 0; j < k; ++j) {
        const Point a = d.vertex(j) - c;
        const Point b = d.vertex((j + 1) % k) - c;
        sum += a.x * b.y - a.y * b.x;
    }
    return 0.5 * sum;
}

double perimeter(const StarDomain& d) {
    const auto k = d.size();
    double sum = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        const Point e = d.vertex((j + 1) % k) - d.vertex(j);
        sum += std::hypot(e.x, e.y);
    }
    return sum;
}

Point centroid(const StarDomain& d) {
    const auto k = d.size();
    const Point c = d.center();
    double a2 = 0.0, cx = 0.0, cy = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        const Point p = d.vertex(j) - c;
        const Point q = d.vertex((j + 1) % k) - c;
        const double cross = p.x * q.y - p.y * q.x;
        a2 += cross;
        cx += (p.x + q.x) * cross;
        cy += (p.y + q.y) * cross;
    }
    return c + Point{cx / (3.0 * a2), cy / (3.0 * a2)};
}

double iso_deficit(const StarDomain& d) {
    const double a = area(d);
    // For the disk of the same area, |B|^(-1/2) Per(B) = 2 sqrt(pi).
    return perimeter(d) / std::sqrt(a) - 2.0 * std::sqrt(std::numbers::pi);
}

namespace {

/// Polar sampling of a domain about its center, reused across many disks.
struct PolarSampling {
    Point center;
    std::vector<double> cos_t, sin_t, rho;
    double dtheta = 0.0;

    PolarSampling(const StarDomain& d, std::size_t nodes) : center(d.center()) {
        if (nodes < 16) throw InvalidInput("symmetric difference needs at least 16 rays");
        cos_t.resize(nodes);
        sin_t.resize(nodes);
        rho.resize(nodes);
        dtheta = two_pi / static_cast<double>(nodes);
        const bool aligned = d.size() % nodes == 0;
        const std::size_t stride = aligned ? d.size() / nodes : 0;
        for (std::size_t i = 0; i < nodes; ++i) {
            const double t = dtheta * static_cast<double>(i);
            cos_t[i] = std::cos(t);
            sin_t[i] = std::sin(t);
            rho[i] = aligned ? d.radii()[i * stride] : d.radius_at(t);
        }
    }

    double symmetric_difference(const Ball& b) const {
        const Point w = b.center - center;
        const double ww = w.x * w.x + w.y * w.y;
        const double rr = b.radius * b.radius;
        double sum = 0.0;
        for (std::size_t i = 0; i < rho.size(); ++i) {
            const double p = cos_t[i] * w.x + sin_t[i] * w.y;
            const double disc = p * p - ww + rr;
            double lo = 0.0, hi = 0.0;
            if (disc > 0.0) {
                const double s = std::sqrt(disc);
                lo = std::max(p - s, 0.0);
                hi = std::max(p + s, 0.0);
            }
            const double r = rho[i];
            const double top = std::min(hi, r);
            const double overlap = top > lo ? top * top - lo * lo : 0.0;
            // Integral of t dt over ([0,r] xor [lo,hi]).
            sum += 0.5 * (r * r + (hi * hi - lo * lo) - 2.0 * overlap);
        }
        return sum * dtheta;
    }
};

struct SimplexContext {
    const PolarSampling* sampling;
    double radius;
    double area;
};

double simplex_objective(const gsl_vector* x, void* params) {
    const auto* ctx = static_cast<const SimplexContext*>(params);
    const Ball b{{gsl_vector_get(x, 0), gsl_vector_get(x, 1)}, ctx->radius};
    return ctx->sampling->symmetric_difference(b) / ctx->area;
}

struct MinimizerDeleter {
    void operator()(gsl_multimin_fminimizer* m) const { gsl_multimin_fminimizer_free(m); }
};
struct VectorDeleter {
    void operator()(gsl_vector* v) const { gsl_vector_free(v); }
};

}  // namespace

double symmetric_difference_area(const StarDomain& d, const Ball& b, std::size_t angular_nodes) {
    return PolarSampling(d, angular_nodes).symmetric_difference(b);
}

AsymmetryResult fraenkel_asymmetry(const StarDomain& d, const AsymmetryOptions& opts) {
    if (opts.grid < 2) throw InvalidInput("asymmetry grid must have at least 2 nodes per axis");
    const PolarSampling sampling(d, opts.angular_nodes);
    const double a = area(d);
    const double radius = std::sqrt(a / std::numbers::pi);
    auto value_at = [&](Point z) { return sampling.symmetric_difference({z, radius}) / a; };

    double xmin = std::numeric_limits<double>::max(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (std::size_t j = 0; j < d.size(); ++j) {
        const Point v = d.vertex(j);
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }

    Point best = centroid(d);
    double best_value = value_at(best);
    std::vector<double> grid_values;
    grid_values.reserve(static_cast<std::size_t>(opts.grid * opts.grid));
    const double hx = (xmax - xmin) / (opts.grid - 1);
    const double hy = (ymax - ymin) / (opts.grid - 1);
    double best_grid = std::numeric_limits<double>::max();
    for (int i = 0; i < opts.grid; ++i) {
        for (int j = 0; j < opts.grid; ++j) {
            const Point z{xmin + hx * i, ymin + hy * j};
            const double v = value_at(z);
            grid_values.push_back(v);
            best_grid = std::min(best_grid, v);
            if (v < best_value) {  // strict: first minimizer wins ties
                best_value = v;
                best = z;
            }
        }
    }
    const auto near_best = std::count_if(grid_values.begin(), grid_values.end(), [&](double v) {
        return v <= best_grid + opts.tie_tolerance;
    });

    SimplexContext ctx{&sampling, radius, a};
    gsl_multimin_function fn{&simplex_objective, 2, &ctx};
    std::unique_ptr<gsl_vector, VectorDeleter> x(gsl_vector_alloc(2));
    std::unique_ptr<gsl_vector, VectorDeleter> step(gsl_vector_alloc(2));
    gsl_vector_set(x.get(), 0, best.x);
    gsl_vector_set(x.get(), 1, best.y);
    gsl_vector_set(step.get(), 0, 0.5 * hx);
    gsl_vector_set(step.get(), 1, 0.5 * hy);
    std::unique_ptr<gsl_multimin_fminimizer, MinimizerDeleter> solver(
        gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, 2));
    gsl_multimin_fminimizer_set(solver.get(), &fn, x.get(), step.get());

    AsymmetryResult out;
    int status = GSL_CONTINUE;
    int iter = 0;
    while (status == GSL_CONTINUE && iter < opts.max_iterations) {
        ++iter;
        if (gsl_multimin_fminimizer_iterate(solver.get()) != GSL_SUCCESS) break;
        status = gsl_multimin_test_size(gsl_multimin_fminimizer_size(solver.get()),
                                        opts.center_tolerance);
    }
    out.iterations = iter;
    out.converged = status == GSL_SUCCESS;
    const double refined = solver->fval;
    if (refined <= best_value) {
        best_value = refined;
        best = {gsl_vector_get(solver->x, 0), gsl_vector_get(solver->x, 1)};
    }
    out.value = std::max(best_value, 0.0);
    out.ball = {best, radius};
    out.tie = near_best > 1;
    return out;
}

GeoReport analyze(const StarDomain& d, const AsymmetryOptions& opts) {
    GeoReport g;
    g.area = area(d);
    g.perimeter = perimeter(d);
    const auto a = fraenkel_asymmetry(d, opts);
    g.asymmetry = a.value;
    g.best_ball = a.ball;
    g.iso_deficit = iso_deficit(d);
    return g;
}

}  // namespace robinlab
