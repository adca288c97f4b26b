#include "schema.hpp"
#include "skeinlab/verify.hpp"

#include <gtest/gtest.h>

using namespace skeinlab;

TEST(Report, JsonRoundTripAndSchema) {
  SuiteParams p;
  p.max_degree = 1;
  p.seed = 42;
  p.jobs = 1;
  Report r = run_suite("comodule", p);
  EXPECT_TRUE(r.ok()) << r.to_text();
  r.cases.push_back({"synthetic_failure", false, "x != y"});
  nlohmann::json j = r.to_json();
  EXPECT_EQ(schema::validate(j, schema::load(SKEINLAB_SCHEMA_PATH)), "");
  EXPECT_EQ(j["status"], "fail");
  EXPECT_EQ(j["totals"]["total"], r.cases.size());
  EXPECT_EQ(j["totals"]["fail"], 1);
  Report back = Report::from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(back.to_json(), j);
  EXPECT_EQ(back.params.seed, std::optional<uint64_t>(42));
}

TEST(Report, SchemaRejectsMalformed) {
  nlohmann::json s = schema::load(SKEINLAB_SCHEMA_PATH);
  Report r;
  r.suite = "rt";
  nlohmann::json j = r.to_json();
  EXPECT_EQ(schema::validate(j, s), "");
  nlohmann::json bad = j;
  bad["status"] = "maybe";
  EXPECT_NE(schema::validate(bad, s), "");
  bad = j;
  bad.erase("totals");
  EXPECT_NE(schema::validate(bad, s), "");
  bad = j;
  bad["extra"] = 1;
  EXPECT_NE(schema::validate(bad, s), "");
}

TEST(Report, TextFormat) {
  Report r;
  r.suite = "demo";
  r.cases = {{"a", true, ""}, {"b", false, "witness"}};
  EXPECT_EQ(r.to_text(), "PASS a\nFAIL b: witness\ndemo: 1/2 passed, status fail\n");
}

TEST(Report, UnknownSuiteListsNames) {
  try {
    run_suite("nosuch", SuiteParams{});
    FAIL();
  } catch (const std::invalid_argument& e) {
    std::string msg = e.what();
    for (const auto& n : suite_names()) EXPECT_NE(msg.find(n), std::string::npos) << n;
  }
}

TEST(Report, BadParametersRejected) {
  SuiteParams p;
  p.specializations = {Rational(1)};
  EXPECT_THROW(run_suite("rt", p), std::domain_error);
  p = SuiteParams{};
  p.max_degree = -1;
  EXPECT_THROW(run_suite("rt", p), std::invalid_argument);
}

TEST(Report, CacheDoesNotChangeResults) {
  StatedWord d = parse_diagram("tangle(2){x0;cup1;xb2;cap1} west=-+ east=+-");
  ReduceCache::global().clear();
  ReduceCache::global().set_enabled(false);
  SkeinElement off = reduce(d);
  EXPECT_EQ(ReduceCache::global().size(), 0u);
  ReduceCache::global().set_enabled(true);
  SkeinElement on = reduce(d);
  SkeinElement again = reduce(d);
  EXPECT_GT(ReduceCache::global().size(), 0u);
  EXPECT_EQ(off, on);
  EXPECT_EQ(on, again);
}

TEST(Report, ParallelRunsMatchSerial) {
  SuiteParams p;
  p.max_degree = 1;
  p.jobs = 1;
  Report serial = run_suite("hopf", p);
  p.jobs = 4;
  Report par = run_suite("hopf", p);
  ASSERT_EQ(serial.cases.size(), par.cases.size());
  for (size_t i = 0; i < serial.cases.size(); ++i) {
    EXPECT_EQ(serial.cases[i].name, par.cases[i].name);
    EXPECT_EQ(serial.cases[i].pass, par.cases[i].pass);
  }
}
