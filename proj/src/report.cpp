#include "robinlab/report.hpp"

#include <algorithm>
#include <iomanip>
#include <stdexcept>

#include <json.hpp>

#include "robinlab/error.hpp"

namespace robinlab {

std::string_view to_string(Provenance p) {
    switch (p) {
        case Provenance::fem: return "fem";
        case Provenance::radial: return "radial";
        case Provenance::geometry: return "geometry";
        case Provenance::closed_form: return "closed-form";
    }
    return "unknown";
}

InequalityReport InequalityReport::make(std::string name, double lhs, double rhs,
                                        double tolerance, bool strict) {
    if (!(tolerance > 0.0)) throw InvalidInput("report '" + name + "': tolerance must be > 0");
    InequalityReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.tolerance = tolerance;
    r.strict = strict;
    r.finalize();
    return r;
}

namespace {

bool own_pass(const InequalityReport& r) {
    return r.strict ? r.deficit > r.tolerance : r.deficit >= -r.tolerance;
}

}  // namespace

void InequalityReport::finalize() {
    deficit = lhs - rhs;
    pass = own_pass(*this) &&
           std::all_of(parts.begin(), parts.end(), [](const auto& p) { return p.pass; });
}

bool InequalityReport::consistent() const {
    if (deficit != lhs - rhs || !(tolerance > 0.0)) return false;
    bool expected = own_pass(*this);
    for (const auto& p : parts) {
        if (!p.consistent()) return false;
        expected = expected && p.pass;
    }
    return expected == pass;
}

InequalityReport& InequalityReport::with_input(std::string key, double value) {
    inputs.emplace_back(std::move(key), value);
    return *this;
}

InequalityReport& InequalityReport::with_term(std::string term, Provenance p) {
    term_provenance.emplace_back(std::move(term), p);
    return *this;
}

InequalityReport& InequalityReport::add_part(InequalityReport part) {
    parts.push_back(std::move(part));
    finalize();
    return *this;
}

std::ostream& operator<<(std::ostream& os, const InequalityReport& r) {
    auto flags = os.flags();
    os << std::setprecision(12) << r.name << ": lhs=" << r.lhs << " rhs=" << r.rhs
       << " deficit=" << r.deficit << " tolerance=" << r.tolerance << (r.strict ? " (strict)" : "")
       << (r.pass ? " PASS" : " FAIL");
    if (!r.inputs.empty()) {
        os << " inputs{";
        for (std::size_t i = 0; i < r.inputs.size(); ++i) {
            os << (i ? ", " : "") << r.inputs[i].first << "=" << r.inputs[i].second;
        }
        os << "}";
    }
    if (!r.term_provenance.empty()) {
        os << " terms{";
        for (std::size_t i = 0; i < r.term_provenance.size(); ++i) {
            os << (i ? ", " : "") << r.term_provenance[i].first << ":" << to_string(r.term_provenance[i].second);
        }
        os << "}";
    }
    if (!r.note.empty()) os << " [" << r.note << "]";
    for (const auto& p : r.parts) os << "\n  - " << p;
    os.flags(flags);
    return os;
}

namespace {

using nlohmann::json;

Provenance provenance_from(const std::string& s) {
    for (auto p : {Provenance::fem, Provenance::radial, Provenance::geometry, Provenance::closed_form}) {
        if (s == to_string(p)) return p;
    }
    throw InvalidInput("unknown provenance '" + s + "'");
}

json encode(const InequalityReport& r) {
    json j;
    j["name"] = r.name;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["deficit"] = r.deficit;
    j["tolerance"] = r.tolerance;
    j["strict"] = r.strict;
    j["pass"] = r.pass;
    j["inputs"] = json::array();
    for (const auto& [k, v] : r.inputs) j["inputs"].push_back({k, v});
    j["term_provenance"] = json::array();
    for (const auto& [k, p] : r.term_provenance) j["term_provenance"].push_back({k, to_string(p)});
    json d = json::object();
    const auto& g = r.diagnostics;
    auto put = [&](const char* key, const std::optional<double>& v) {
        if (v) d[key] = *v;
    };
    put("lambda_q", g.lambda_q);
    put("energy", g.energy);
    put("inf_u", g.inf_u);
    put("perimeter", g.perimeter);
    put("area", g.area);
    put("asymmetry", g.asymmetry);
    put("ratio", g.ratio);
    j["diagnostics"] = d;
    j["note"] = r.note;
    j["parts"] = json::array();
    for (const auto& p : r.parts) j["parts"].push_back(encode(p));
    return j;
}

InequalityReport decode(const json& j) {
    InequalityReport r;
    r.name = j.at("name").get<std::string>();
    r.lhs = j.at("lhs").get<double>();
    r.rhs = j.at("rhs").get<double>();
    r.deficit = j.at("deficit").get<double>();
    r.tolerance = j.at("tolerance").get<double>();
    r.strict = j.at("strict").get<bool>();
    r.pass = j.at("pass").get<bool>();
    for (const auto& e : j.at("inputs")) r.inputs.emplace_back(e.at(0).get<std::string>(), e.at(1).get<double>());
    for (const auto& e : j.at("term_provenance")) {
        r.term_provenance.emplace_back(e.at(0).get<std::string>(), provenance_from(e.at(1).get<std::string>()));
    }
    const auto& d = j.at("diagnostics");
    auto get = [&](const char* key, std::optional<double>& v) {
        if (d.contains(key)) v = d.at(key).get<double>();
    };
    get("lambda_q", r.diagnostics.lambda_q);
    get("energy", r.diagnostics.energy);
    get("inf_u", r.diagnostics.inf_u);
    get("perimeter", r.diagnostics.perimeter);
    get("area", r.diagnostics.area);
    get("asymmetry", r.diagnostics.asymmetry);
    get("ratio", r.diagnostics.ratio);
    r.note = j.at("note").get<std::string>();
    for (const auto& p : j.at("parts")) r.parts.push_back(decode(p));
    return r;
}

}  // namespace

std::string to_json(const InequalityReport& r) { return encode(r).dump(); }

InequalityReport report_from_json(std::string_view text) {
    try {
        return decode(json::parse(text));
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed report JSON: ") + e.what());
    }
}

}  // namespace robinlab
