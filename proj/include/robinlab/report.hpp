#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace robinlab {

enum class Provenance { fem, radial, geometry, closed_form };

std::string_view to_string(Provenance p);

/// Auxiliary quantities attached to a report; all optional.
struct Diagnostics {
    std::optional<double> lambda_q;
    std::optional<double> energy;
    std::optional<double> inf_u;
    std::optional<double> perimeter;
    std::optional<double> area;
    std::optional<double> asymmetry;
    std::optional<double> ratio;  // lhs / asymmetry^2 for the quantitative check
};

/// One numerical instance of an inequality, oriented so that it reads
/// `lhs >= rhs`.
///
/// `deficit` is always `lhs - rhs`. A non-strict report passes when
/// `deficit >= -tolerance`; a strict one when `deficit > tolerance`.
/// A report with children passes only if all children pass as well.
struct InequalityReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double deficit = 0.0;
    double tolerance = 0.0;
    bool strict = false;
    bool pass = false;
    std::vector<std::pair<std::string, double>> inputs;
    std::vector<std::pair<std::string, Provenance>> term_provenance;
    Diagnostics diagnostics;
    std::string note;
    std::vector<InequalityReport> parts;

    static InequalityReport make(std::string name, double lhs, double rhs, double tolerance,
                                 bool strict = false);

    /// Recomputes `deficit` and `pass` from the other fields.
    void finalize();

    /// True iff `pass` agrees with the pass rule applied to the stored fields.
    bool consistent() const;

    InequalityReport& with_input(std::string key, double value);
    InequalityReport& with_term(std::string term, Provenance p);
    InequalityReport& add_part(InequalityReport part);
};

/// One-line human-readable form, with children on indented lines.
std::ostream& operator<<(std::ostream& os, const InequalityReport& r);

/// Lossless JSON form of every field, children included.
std::string to_json(const InequalityReport& r);
/// Inverse of to_json. Throws InvalidInput on malformed input.
InequalityReport report_from_json(std::string_view text);

}  // namespace robinlab
