#include <gtest/gtest.h>

#include <algorithm>
#include <limits>

#include "json.hpp"
#include "seqnorm/report.hpp"

namespace seqnorm {
namespace {

ProbeReport sample_report() {
  ProbeReport r;
  r.suite = "norm-axioms";
  r.space = "lp(2)";
  r.samples_run = 3;
  r.seed = 9;
  r.verdict = Verdict::kFail;
  r.worst_margin = -0.5;
  r.metrics = {{"checks", 15.0}};
  r.violations.push_back({2, "triangle", {{FiniteVector::unit(1), FiniteVector::unit(3, -2.0)}, {{"alpha", 0.25}}},
                          3.0, 2.5, -0.5});
  return r;
}

TEST(ReportJson, Schema) {
  const auto j = nlohmann::json::parse(report_to_json(sample_report()));
  EXPECT_EQ(j["suiteName"], "norm-axioms");
  EXPECT_EQ(j["space"], "lp(2)");
  EXPECT_EQ(j["samplesRun"], 3);
  EXPECT_EQ(j["verdict"], "fail");
  EXPECT_EQ(j["seed"], 9);
  EXPECT_EQ(j["worstMargin"], -0.5);
  EXPECT_EQ(j["metrics"]["checks"], 15.0);
  const auto& v = j["violations"][0];
  EXPECT_EQ(v["sample"], 2);
  EXPECT_EQ(v["check"], "triangle");
  EXPECT_EQ(v["lhs"], 3.0);
  EXPECT_EQ(v["rhs"], 2.5);
  EXPECT_EQ(v["margin"], -0.5);
  EXPECT_EQ(v["input"]["vectors"][1][0][0], 3);
  EXPECT_EQ(v["input"]["vectors"][1][0][1], -2.0);
  EXPECT_EQ(v["input"]["params"]["alpha"], 0.25);
}

TEST(ReportJson, InfinityAsString) {
  ProbeReport r;
  r.suite = "two-r";
  const auto j = nlohmann::json::parse(report_to_json(r));
  EXPECT_EQ(j["worstMargin"], "+inf");
  EXPECT_EQ(j["verdict"], "pass");
}

TEST(ReportCsv, ViolationsTable) {
  const std::string csv = report_to_csv(sample_report());
  const std::string header = "sample,check,lhs,rhs,margin,input\n";
  ASSERT_EQ(csv.substr(0, header.size()), header);
  const std::string row = csv.substr(header.size());
  EXPECT_EQ(row.substr(0, row.find(",\"")), "2,triangle,3,2.5,-0.5");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 2);
}

TEST(ReportText, SevenSignificantDigits) {
  ProbeReport r = sample_report();
  r.violations[0].lhs = 1.0 / 3.0;
  const std::string text = report_to_text(r);
  EXPECT_NE(text.find("0.3333333"), std::string::npos);
  EXPECT_EQ(text.find("0.33333333"), std::string::npos);
  EXPECT_NE(text.find("fail"), std::string::npos);
}

TEST(Report, Deterministic) { EXPECT_EQ(report_to_json(sample_report()), report_to_json(sample_report())); }

}  // namespace
}  // namespace seqnorm
