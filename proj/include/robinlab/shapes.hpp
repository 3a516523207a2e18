#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "robinlab/geometry.hpp"

namespace robinlab {

// Shape-family generators. Each samples the analytic radius function of the
// shape at K equally spaced angles about the origin.

StarDomain make_disk(double radius, std::size_t samples = 4096);
StarDomain make_ellipse(double a, double b, std::size_t samples = 4096);
/// r(theta) = R (1 + amplitude cos(mode * theta)); requires |amplitude| < 1.
StarDomain make_perturbed(double radius, double amplitude, int mode, std::size_t samples = 4096);
/// Rectangle of length `length` capped by two half-disks of radius `radius`,
/// encoded about its centroid.
StarDomain make_stadium(double length, double radius, std::size_t samples = 4096);
/// Axis-aligned square of the given side centered at the origin.
StarDomain make_square(double side, std::size_t samples = 4096);

/// A named shape, e.g. `disk(1)`, `ellipse(1.2,0.8)`, `perturbed(1,0.1,3)`,
/// `stadium(1,0.5)`, `square(1)`.
struct ShapeSpec {
    enum class Kind { disk, ellipse, perturbed, stadium, square };
    Kind kind = Kind::disk;
    std::vector<double> args;

    StarDomain build(std::size_t samples = 4096) const;
    std::string to_string() const;
    /// Throws InvalidInput on an unknown name or a wrong argument count.
    static ShapeSpec parse(const std::string& text);
};

}  // namespace robinlab
