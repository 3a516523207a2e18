#include "robinlab/shapes.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "robinlab/error.hpp"

namespace robinlab {

namespace {

StarDomain sample(const std::function<double(double)>& r, std::size_t k) {
    std::vector<double> radii(k);
    for (std::size_t j = 0; j < k; ++j) {
        radii[j] = r(2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(k));
    }
    return StarDomain({0.0, 0.0}, std::move(radii));
}

}  // namespace

StarDomain make_disk(double radius, std::size_t samples) {
    if (!(radius > 0.0)) throw InvalidInput("disk radius must be positive");
    return sample([radius](double) { return radius; }, samples);
}

StarDomain make_ellipse(double a, double b, std::size_t samples) {
    if (!(a > 0.0 && b > 0.0)) throw InvalidInput("ellipse semi-axes must be positive");
    return sample(
        [a, b](double t) {
            const double c = std::cos(t), s = std::sin(t);
            return a * b / std::sqrt(b * b * c * c + a * a * s * s);
        },
        samples);
}

StarDomain make_perturbed(double radius, double amplitude, int mode, std::size_t samples) {
    if (!(radius > 0.0)) throw InvalidInput("perturbed radius must be positive");
    if (!(std::abs(amplitude) < 1.0)) throw InvalidInput("perturbation amplitude must be < 1");
    if (mode < 0) throw InvalidInput("perturbation mode must be nonnegative");
    return sample([=](double t) { return radius * (1.0 + amplitude * std::cos(mode * t)); },
                  samples);
}

StarDomain make_stadium(double length, double radius, std::size_t samples) {
    if (!(length >= 0.0 && radius > 0.0)) throw InvalidInput("invalid stadium dimensions");
    const double half = 0.5 * length;
    return sample(
        [=](double t) {
            const double c = std::cos(t), s = std::sin(t);
            if (std::abs(s) > 0.0) {
                const double flat = radius / std::abs(s);
                if (std::abs(flat * c) <= half) return flat;
            }
            // Cap circle centered at (+-half, 0).
            const double p = half * std::abs(c);
            return p + std::sqrt(p * p - (half * half - radius * radius));
        },
        samples);
}

StarDomain make_square(double side, std::size_t samples) {
    if (!(side > 0.0)) throw InvalidInput("square side must be positive");
    const double half = 0.5 * side;
    return sample(
        [half](double t) { return half / std::max(std::abs(std::cos(t)), std::abs(std::sin(t))); },
        samples);
}

StarDomain ShapeSpec::build(std::size_t samples) const {
    switch (kind) {
        case Kind::disk: return make_disk(args.at(0), samples);
        case Kind::ellipse: return make_ellipse(args.at(0), args.at(1), samples);
        case Kind::perturbed:
            return make_perturbed(args.at(0), args.at(1), static_cast<int>(args.at(2)), samples);
        case Kind::stadium: return make_stadium(args.at(0), args.at(1), samples);
        case Kind::square: return make_square(args.at(0), samples);
    }
    throw InvalidInput("unknown shape kind");
}

std::string ShapeSpec::to_string() const {
    static const char* names[] = {"disk", "ellipse", "perturbed", "stadium", "square"};
    std::ostringstream os;
    os.precision(12);
    os << names[static_cast<int>(kind)] << '(';
    for (std::size_t i = 0; i < args.size(); ++i) os << (i ? ";" : "") << args[i];
    os << ')';
    return os.str();
}

ShapeSpec ShapeSpec::parse(const std::string& text) {
    const auto open = text.find('(');
    const auto close = text.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open) {
        throw InvalidInput("malformed shape spec '" + text + "'");
    }
    const std::string name = text.substr(0, open);
    ShapeSpec s;
    std::size_t arity = 0;
    if (name == "disk") { s.kind = Kind::disk; arity = 1; }
    else if (name == "ellipse") { s.kind = Kind::ellipse; arity = 2; }
    else if (name == "perturbed") { s.kind = Kind::perturbed; arity = 3; }
    else if (name == "stadium") { s.kind = Kind::stadium; arity = 2; }
    else if (name == "square") { s.kind = Kind::square; arity = 1; }
    else throw InvalidInput("unknown shape '" + name + "'");

    std::string body = text.substr(open + 1, close - open - 1);
    for (auto& ch : body) {
        if (ch == ';') ch = ',';
    }
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            std::size_t used = 0;
            s.args.push_back(std::stod(tok, &used));
        } catch (const std::exception&) {
            throw InvalidInput("bad numeric argument '" + tok + "' in shape '" + text + "'");
        }
    }
    if (s.args.size() != arity) {
        throw InvalidInput("shape '" + name + "' expects " + std::to_string(arity) + " arguments");
    }
    return s;
}

}  // namespace robinlab
