#include <gtest/gtest.h>

#include <sstream>

#include "robinlab/error.hpp"
#include "robinlab/report.hpp"

using namespace robinlab;

TEST(Report, NonStrictPassRule) {
    auto r = InequalityReport::make("x", 1.0, 1.05, 0.1);
    EXPECT_NEAR(r.deficit, -0.05, 1e-15);
    EXPECT_TRUE(r.pass);
    EXPECT_TRUE(r.consistent());

    auto s = InequalityReport::make("x", 1.0, 1.2, 0.1);
    EXPECT_FALSE(s.pass);
    EXPECT_TRUE(s.consistent());
}

TEST(Report, BoundaryOfTolerance) {
    // deficit == -tolerance passes; anything below fails.
    auto r = InequalityReport::make("x", 0.0, 0.5, 0.5);
    EXPECT_TRUE(r.pass);
    auto s = InequalityReport::make("x", 0.0, 0.5000001, 0.5);
    EXPECT_FALSE(s.pass);
}

TEST(Report, StrictRequiresMargin) {
    auto r = InequalityReport::make("x", 1.0, 1.0, 1e-10, true);
    EXPECT_FALSE(r.pass);
    auto s = InequalityReport::make("x", 1.0 + 1e-9, 1.0, 1e-10, true);
    EXPECT_TRUE(s.pass);
}

TEST(Report, RejectsNonpositiveTolerance) {
    EXPECT_THROW(InequalityReport::make("x", 0, 0, 0.0), InvalidInput);
    EXPECT_THROW(InequalityReport::make("x", 0, 0, -1.0), InvalidInput);
}

TEST(Report, FailingPartFailsParent) {
    auto r = InequalityReport::make("parent", 2.0, 1.0, 1e-6);
    ASSERT_TRUE(r.pass);
    r.add_part(InequalityReport::make("child", 0.0, 1.0, 1e-6));
    EXPECT_FALSE(r.pass);
    EXPECT_TRUE(r.consistent());
}

TEST(Report, InconsistencyIsDetected) {
    auto r = InequalityReport::make("x", 0.0, 1.0, 1e-6);
    r.pass = true;
    EXPECT_FALSE(r.consistent());
}

TEST(Report, StreamsAllFields) {
    auto r = InequalityReport::make("demo", 1.5, 1.0, 1e-3);
    r.with_input("q", 1.0).with_term("lhs", Provenance::fem).with_term("rhs", Provenance::radial);
    r.note = "hello";
    std::ostringstream os;
    os << r;
    const auto s = os.str();
    for (const char* needle : {"demo", "lhs", "rhs", "deficit", "tolerance", "fem", "radial", "hello"}) {
        EXPECT_NE(s.find(needle), std::string::npos) << needle;
    }
}

TEST(Report, ProvenanceNames) {
    EXPECT_EQ(to_string(Provenance::fem), "fem");
    EXPECT_EQ(to_string(Provenance::radial), "radial");
    EXPECT_EQ(to_string(Provenance::geometry), "geometry");
    EXPECT_EQ(to_string(Provenance::closed_form), "closed-form");
}

TEST(Report, JsonRoundTripsEveryField) {
    auto r = InequalityReport::make("parent", 0.1 + 0.2, 1.0 / 3.0, 1e-7, true);
    r.with_input("q", 1.5).with_input("beta", 2.0).with_term("lhs", Provenance::geometry)
        .with_term("rhs", Provenance::closed_form);
    r.diagnostics.lambda_q = 0.509;
    r.diagnostics.ratio = 0.25;
    r.note = "note, with \"quotes\"";
    r.add_part(InequalityReport::make("child", 1.0, 2.0, 0.5));

    const auto back = report_from_json(to_json(r));
    EXPECT_EQ(back.name, r.name);
    EXPECT_EQ(back.lhs, r.lhs);
    EXPECT_EQ(back.rhs, r.rhs);
    EXPECT_EQ(back.deficit, r.deficit);
    EXPECT_EQ(back.tolerance, r.tolerance);
    EXPECT_EQ(back.strict, r.strict);
    EXPECT_EQ(back.pass, r.pass);
    EXPECT_EQ(back.inputs, r.inputs);
    EXPECT_EQ(back.term_provenance, r.term_provenance);
    EXPECT_EQ(back.diagnostics.lambda_q, r.diagnostics.lambda_q);
    EXPECT_EQ(back.diagnostics.ratio, r.diagnostics.ratio);
    EXPECT_FALSE(back.diagnostics.energy.has_value());
    EXPECT_EQ(back.note, r.note);
    ASSERT_EQ(back.parts.size(), 1u);
    EXPECT_EQ(back.parts[0].name, "child");
    EXPECT_TRUE(back.consistent());
    EXPECT_EQ(to_json(back), to_json(r));
}

TEST(Report, MalformedJsonIsRejected) {
    EXPECT_THROW(report_from_json("{"), InvalidInput);
    EXPECT_THROW(report_from_json("{\"name\": 1}"), InvalidInput);
}
