#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace robinlab {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double t, Point a) { return {t * a.x, t * a.y}; }

/// Planar star-shaped domain described by K boundary radii sampled at the
/// equally spaced angles 2*pi*j/K about `center`. The domain is the polygon
/// through the K sample points.
class StarDomain {
public:
    static constexpr std::size_t min_samples = 16;

    /// Throws InvalidInput if K < 16 or any radius is not strictly positive.
    StarDomain(Point center, std::vector<double> radii);

    Point center() const { return center_; }
    std::span<const double> radii() const { return radii_; }
    std::size_t size() const { return radii_.size(); }

    double angle(std::size_t j) const;
    Point vertex(std::size_t j) const;

    /// Distance from the center to the polygon boundary along direction theta.
    double radius_at(double theta) const;

    StarDomain scaled(double t) const;
    StarDomain translated(Point shift) const;

private:
    Point center_;
    std::vector<double> radii_;
};

struct Ball {
    Point center;
    double radius = 0.0;
};

double area(const StarDomain& d);
double perimeter(const StarDomain& d);
Point centroid(const StarDomain& d);

/// |Omega^(1-n)/n| Per(Omega) - |B|^(1-n)/n Per(B) for n = 2.
double iso_deficit(const StarDomain& d);

struct AsymmetryOptions {
    int grid = 21;                       // coarse center grid per axis
    std::size_t angular_nodes = 4096;    // rays of the polar quadrature
    double center_tolerance = 1e-6;      // simplex size at which the refinement stops
    int max_iterations = 500;
    double tie_tolerance = 1e-6;
};

struct AsymmetryResult {
    double value = 0.0;
    Ball ball;
    bool converged = false;
    bool tie = false;  // another coarse grid cell matched the best value within tie_tolerance
    int iterations = 0;
};

/// |Omega \triangle B| for an arbitrary disk B, by polar quadrature about the
/// domain center with exact radial integration along each ray.
double symmetric_difference_area(const StarDomain& d, const Ball& b,
                                 std::size_t angular_nodes = 4096);

/// Fraenkel asymmetry: infimum over disks of the same area of
/// |Omega \triangle B| / |Omega|, with the optimal disk found.
AsymmetryResult fraenkel_asymmetry(const StarDomain& d, const AsymmetryOptions& opts = {});

struct GeoReport {
    double area = 0.0;
    double perimeter = 0.0;
    double asymmetry = 0.0;
    Ball best_ball;
    double iso_deficit = 0.0;
};

GeoReport analyze(const StarDomain& d, const AsymmetryOptions& opts = {});

}  // namespace robinlab
