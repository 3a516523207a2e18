#include "robinlab/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "robinlab/error.hpp"

namespace robinlab {

namespace {

std::string num(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(std::string_view value) {
    value = trim(value);
    if (!value.empty() && value.front() == '[') {
        if (value.back() != ']') throw ConfigError("unterminated list");
        value = value.substr(1, value.size() - 2);
    }
    std::vector<std::string> out;
    if (trim(value).empty()) return out;
    std::size_t start = 0;
    while (true) {
        const auto comma = value.find(',', start);
        const auto item = trim(value.substr(start, comma == std::string_view::npos ? comma : comma - start));
        if (item.empty()) throw ConfigError("empty list item");
        out.emplace_back(item);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

double to_double(const std::string& s) {
    double v = 0.0;
    const auto* end = s.data() + s.size();
    const auto [p, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || p != end || !std::isfinite(v)) throw ConfigError("'" + s + "' is not a number");
    return v;
}

int to_int(const std::string& s) {
    int v = 0;
    const auto* end = s.data() + s.size();
    const auto [p, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || p != end) throw ConfigError("'" + s + "' is not an integer");
    return v;
}

std::vector<double> doubles(std::string_view value) {
    std::vector<double> out;
    for (const auto& s : split_list(value)) out.push_back(to_double(s));
    return out;
}

std::string scalar(std::string_view value) {
    const auto items = split_list(value);
    if (items.size() != 1) throw ConfigError("expected a single value");
    return items.front();
}

constexpr std::string_view ball_sanity = R"(# Disk only: every deficit vanishes up to discretisation error.
checks  = [intermediate, quantitative, ec_ball, trace_poincare]
family  = disk
grid    = [1]
q       = [1, 1.5]
beta    = [1]
c_rel   = [0, 1, 2]
output  = results/ball-sanity
)";

constexpr std::string_view ellipse_q1 = R"(# Ellipses of unit area, q = 1.
checks  = [intermediate, quantitative, ec_ball]
family  = ellipse
grid    = [1.1, 1.2, 1.3, 1.4, 1.5]
q       = 1
beta    = 1
c_rel   = [1]
output  = results/ellipse-q1
)";

constexpr std::string_view perturbed_q15 = R"(# Perturbed disks r = 1 + a cos(k theta), q = 1.5.
checks  = [intermediate, quantitative]
family  = perturbed
grid    = [0.02, 0.04, 0.06, 0.08, 0.1]
modes   = [2, 3]
q       = 1.5
beta    = [0.5, 2]
output  = results/perturbed-q15
)";

constexpr std::string_view stadium_trace = R"(# Stadiums: trace Poincare inequality for the minimiser and the eigenfunction.
checks  = [trace_poincare]
family  = stadium
grid    = [0.5, 1, 2]
q       = [1, 1.5, 2]
beta    = [0.5, 2]
output  = results/stadium-trace
)";

}  // namespace

void ExperimentConfig::validate() const {
    if (checks.empty()) throw ConfigError("checks: at least one check is required");
    if (family.grid.empty()) throw ConfigError("grid: the family grid is empty");
    if (family.kind == FamilySpec::Kind::perturbed && family.modes.empty()) {
        throw ConfigError("modes: the perturbed family needs at least one mode");
    }
    for (double a : family.grid) {
        const bool ok = family.kind == FamilySpec::Kind::perturbed ? (a > -1.0 && a < 1.0)
                        : family.kind == FamilySpec::Kind::stadium ? a >= 0.0
                                                                    : a > 0.0;
        if (!ok) throw ConfigError("grid: value " + num(a) + " is out of range for the family");
    }
    for (int k : family.modes) {
        if (k < 1) throw ConfigError("modes: value " + std::to_string(k) + " must be >= 1");
    }
    if (q.empty()) throw ConfigError("q: empty list");
    for (double v : q) {
        if (!(v >= 1.0 && v <= 2.0)) throw ConfigError("q: value " + num(v) + " outside [1, 2]");
        for (auto k : checks) {
            if (v == 2.0 && k != CheckKind::trace_poincare) {
                throw ConfigError("q: value 2 is only valid for trace_poincare (check " +
                                  std::string(to_string(k)) + ")");
            }
        }
    }
    if (beta.empty()) throw ConfigError("beta: empty list");
    for (double v : beta) {
        if (!(v > 0.0)) throw ConfigError("beta: value " + num(v) + " must be > 0");
    }
    for (double v : c) {
        if (!(v >= 0.0)) throw ConfigError("c: value " + num(v) + " must be >= 0");
    }
    for (double v : c_rel) {
        if (!(v >= 0.0)) throw ConfigError("c_rel: value " + num(v) + " must be >= 0");
    }
    for (double v : eps) {
        if (!(v >= 0.0 && v < 1.0)) throw ConfigError("eps: value " + num(v) + " outside [0, 1)");
        if (v != 0.0) throw ConfigError("eps: the FEM checks support eps = 0 only");
    }
    try {
        resolution.validate();
    } catch (const InvalidInput& e) {
        throw ConfigError(e.what());
    }
    if (tolerance && !(*tolerance > 0.0)) throw ConfigError("tolerance: must be > 0");
    if (!(floor_rel > 0.0)) throw ConfigError("floor_rel: must be > 0");
    if (threads < 0) throw ConfigError("threads: must be >= 0");
    if (output.empty()) throw ConfigError("output: path is empty");
}

std::size_t ExperimentConfig::row_count() const {
    std::size_t shapes = family.grid.size();
    if (family.kind == FamilySpec::Kind::perturbed) shapes *= family.modes.size();
    std::size_t per_shape = 0;
    for (auto k : checks) {
        std::size_t levels = 1;
        if (k == CheckKind::ec_ball) levels = std::max<std::size_t>(1, c.size() + c_rel.size());
        per_shape += levels * q.size() * beta.size();
    }
    return shapes * per_shape;
}

SweepParams ExperimentConfig::sweep_params() const {
    SweepParams p;
    p.checks = checks;
    p.q = q;
    p.beta = beta;
    p.c = c;
    p.c_rel = c_rel;
    p.options.tolerance = tolerance;
    p.options.floor_rel = floor_rel;
    p.threads = threads;
    return p;
}

ExperimentConfig parse_config(std::string_view text, std::string name) {
    ExperimentConfig cfg;
    cfg.name = name;
    cfg.output = "results/" + name;
    std::set<std::string, std::less<>> seen;
    bool has_family = false;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto where = name + ":" + std::to_string(line_no) + ": ";
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError(where + "expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const auto value = trim(line.substr(eq + 1));
        if (!seen.insert(key).second) throw ConfigError(where + "duplicate key '" + key + "'");

        try {
            if (key == "checks") {
                cfg.checks.clear();
                for (const auto& s : split_list(value)) {
                    try {
                        cfg.checks.push_back(parse_check(s));
                    } catch (const InvalidInput& e) {
                        throw ConfigError(e.what());
                    }
                }
            } else if (key == "family") {
                try {
                    cfg.family.kind = FamilySpec::parse_kind(scalar(value));
                } catch (const InvalidInput& e) {
                    throw ConfigError(e.what());
                }
                has_family = true;
            } else if (key == "grid") {
                cfg.family.grid = doubles(value);
            } else if (key == "modes") {
                cfg.family.modes.clear();
                for (const auto& s : split_list(value)) cfg.family.modes.push_back(to_int(s));
            } else if (key == "q") {
                cfg.q = doubles(value);
            } else if (key == "beta") {
                cfg.beta = doubles(value);
            } else if (key == "c") {
                cfg.c = doubles(value);
            } else if (key == "c_rel") {
                cfg.c_rel = doubles(value);
            } else if (key == "eps") {
                cfg.eps = doubles(value);
            } else if (key == "n_r") {
                cfg.resolution.n_r = to_int(scalar(value));
            } else if (key == "n_theta") {
                cfg.resolution.n_theta = to_int(scalar(value));
            } else if (key == "K") {
                const int k = to_int(scalar(value));
                if (k < 0) throw ConfigError("must be positive");
                cfg.resolution.K = static_cast<std::size_t>(k);
            } else if (key == "M") {
                cfg.resolution.M = to_int(scalar(value));
            } else if (key == "tolerance") {
                cfg.tolerance = to_double(scalar(value));
            } else if (key == "floor_rel") {
                cfg.floor_rel = to_double(scalar(value));
            } else if (key == "output") {
                cfg.output = std::string(value);
            } else if (key == "threads") {
                cfg.threads = to_int(scalar(value));
            } else {
                throw ConfigError("unknown key '" + key + "'");
            }
        } catch (const ConfigError& e) {
            const std::string msg = e.what();
            throw ConfigError(where + (msg.starts_with("unknown key") ? msg : key + ": " + msg));
        }
    }
    if (!has_family) throw ConfigError(name + ": family: missing");
    try {
        cfg.validate();
    } catch (const ConfigError& e) {
        throw ConfigError(name + ": " + e.what());
    }
    return cfg;
}

ExperimentConfig load_config(const std::string& source) {
    if (const auto b = find_builtin(source)) return parse_config(b->text, std::string(b->name));
    std::ifstream in(source);
    if (!in) throw ConfigError("cannot read config '" + source + "' (not a file or built-in name)");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), std::filesystem::path(source).stem().string());
}

const std::vector<BuiltinConfig>& builtin_configs() {
    static const std::vector<BuiltinConfig> all{
        {"ball-sanity", "disk only, every check; all deficits vanish", ball_sanity},
        {"ellipse-q1", "unit-area ellipses a = 1.1..1.5, q = 1", ellipse_q1},
        {"perturbed-q15", "perturbed disks, modes 2 and 3, q = 1.5", perturbed_q15},
        {"stadium-trace", "trace Poincare inequality on stadiums", stadium_trace},
    };
    return all;
}

std::optional<BuiltinConfig> find_builtin(std::string_view name) {
    for (const auto& b : builtin_configs()) {
        if (b.name == name) return b;
    }
    return std::nullopt;
}

}  // namespace robinlab
