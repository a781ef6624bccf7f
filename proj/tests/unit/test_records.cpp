#include <gtest/gtest.h>

#include "cycalc/records.hpp"
#include "oracles.hpp"

using namespace cycalc;

namespace {

void expect_same_case(const CaseResult& a, const CaseResult& b) {
  EXPECT_TRUE(a.base.same_record(b.base) || (a.base.id == b.base.id && a.base.parameters == b.base.parameters));
  EXPECT_EQ(a.kind, b.kind);
  EXPECT_EQ(a.d, b.d);
  EXPECT_EQ(a.c, b.c);
  EXPECT_EQ(a.q0, b.q0);
  EXPECT_EQ(a.serre_power_nf, b.serre_power_nf);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.cy_dimension, b.cy_dimension);
  EXPECT_EQ(a.is_integer_cy, b.is_integer_cy);
  EXPECT_EQ(a.component_is_whole, b.component_is_whole);
  EXPECT_EQ(a.dim_x, b.dim_x);
  EXPECT_EQ(a.integrality_condition, b.integrality_condition);
  EXPECT_EQ(a.error, b.error);
}

}  // namespace

TEST(CaseJson, Fields) {
  const auto r = analyze(builtin("pn", {{"n", 3}}), ConstructionKind::Divisor, 3);
  const auto j = case_to_json(r);
  EXPECT_EQ(j["base_id"], "pn");
  EXPECT_EQ(j["parameters"]["n"], 3);
  EXPECT_EQ(j["construction"], "divisor");
  EXPECT_EQ(j["cy_dimension"], "4/3");
  EXPECT_EQ(j["witness"]["p"], 4);
  EXPECT_EQ(j["witness"]["q"], 3);
  EXPECT_EQ(j["witness"]["provenance"], kWitnessProvenance);
  EXPECT_EQ(j["serre_text"], "S^3 = τ^0 χ^0 [4]");
  EXPECT_TRUE(j["error"].is_null());
}

TEST(CaseJson, RoundTripsOverSweep) {
  SweepBounds b = SweepBounds::full();
  b.max_n = 9;
  b.max_s = 2;
  b.max_weight_sum = 9;
  for (const auto& r : sweep(CaseFilter::none(), b)) {
    const auto text = case_to_json(r).dump();
    const auto back = case_from_json(Json::parse(text));
    expect_same_case(r, back);
    EXPECT_EQ(case_to_json(back).dump(), text);
  }
}

TEST(CaseJson, ErrorRecordRoundTrips) {
  CaseResult r;
  r.base = builtin("pn", {{"n", 2}});
  r.d = 2;
  r.c = 1;
  r.error = "HypothesisViolation: omega";
  const auto back = case_from_json(case_to_json(r));
  EXPECT_EQ(back.error, r.error);
  EXPECT_FALSE(back.witness);
}

TEST(Document, TagsEveryRecord) {
  const auto text = render_document({Json{{"a", 1}}, Json{{"b", 2}}});
  const auto doc = Json::parse(text);
  EXPECT_EQ(doc["schema_version"], kSchemaVersion);
  ASSERT_EQ(doc["records"].size(), 2u);
  for (const auto& rec : doc["records"]) EXPECT_EQ(rec.begin().key(), "schema_version");
  EXPECT_EQ(text.back(), '\n');
  EXPECT_EQ(render_document({}), render_document({}));
}

TEST(Csv, Escaping) {
  EXPECT_EQ(csv_escape("plain"), "plain");
  EXPECT_EQ(csv_escape("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_escape("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(csv_escape("two\nlines"), "\"two\nlines\"");
  EXPECT_EQ(render_csv({"x", "y"}, {{"1", "a,b"}}), "x,y\r\n1,\"a,b\"\r\n");
}

TEST(Csv, RowWidthMatchesHeader) {
  const auto r = analyze(builtin("g2gr"), ConstructionKind::DoubleCover, 1);
  EXPECT_EQ(case_csv_row(r).size(), case_csv_header().size());
}

TEST(Render, ParametersAndProfile) {
  EXPECT_EQ(render_parameters({{"k", 3}, {"n", 10}}), "k=3;n=10");
  EXPECT_EQ(render_parameters({}), "");
  EXPECT_EQ(render_profile(HHProfile{{{-2, 1}, {0, 22}, {2, 1}}}), "{-2:1, 0:22, 2:1}");
  EXPECT_EQ(render_profile(HHProfile{}), "{}");
}

TEST(HHJson, Shape) {
  const auto report = hh_pipeline(builtin("pn", {{"n", 5}}), ConstructionKind::Divisor, 3);
  const auto j = hh_to_json(report);
  EXPECT_EQ(j["hh_a"]["-2"], 1);
  EXPECT_EQ(j["hh_a"]["0"], 22);
  EXPECT_EQ(j["check"]["hh_minus_n"], 1);
  EXPECT_EQ(j["check"]["nonvanishing"], true);
}
