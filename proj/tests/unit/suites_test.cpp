#include <gtest/gtest.h>

#include "seqnorm/error.hpp"
#include "seqnorm/expression.hpp"
#include "seqnorm/suites.hpp"

namespace seqnorm {
namespace {

SuiteConfig samples(std::size_t n, std::uint64_t seed = 1) {
  SuiteConfig c;
  c.samples = n;
  c.seed = seed;
  return c;
}

TEST(Suites, Registry) {
  const std::vector<std::string> names = suite_names();
  for (const char* n : {"norm-axioms", "hat-subadditive", "hat-bound", "hat-tail-lipschitz", "hat-tail-lower",
                        "davis-sandwich", "shifted-bounds", "symmetric-invariance", "two-r", "strict-convexity"}) {
    EXPECT_TRUE(has_suite(n)) << n;
  }
  EXPECT_EQ(names.size(), 10u);
  EXPECT_THROW(run_suite("nope", NormDescriptor::sup()), std::invalid_argument);
}

TEST(Suites, RequirementsAreEnforced) {
  EXPECT_THROW(run_suite("hat-bound", NormDescriptor::sup(), samples(1)), EvaluationError);
  EXPECT_THROW(run_suite("davis-sandwich", NormDescriptor::sup(), samples(1)), EvaluationError);
  EXPECT_THROW(run_suite("hat-tail-lower", NormDescriptor::tsirelson(), samples(1)), EvaluationError);
}

struct Case {
  const char* suite;
  const char* space;
};

class PassingSuite : public ::testing::TestWithParam<Case> {};

TEST_P(PassingSuite, NoViolations) {
  const ProbeReport r = run_suite(GetParam().suite, parse_space(GetParam().space), samples(100, 3));
  EXPECT_EQ(r.verdict, Verdict::kPass);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(r.samples_run, 100u);
  EXPECT_GE(r.worst_margin, -1e-9);
}

INSTANTIATE_TEST_SUITE_P(
    Spaces, PassingSuite,
    ::testing::Values(Case{"norm-axioms", "lp(2)"}, Case{"norm-axioms", "tsirelson"},
                      Case{"norm-axioms", "davis(sup, l1, 4)"}, Case{"norm-axioms", "sym2R(lp(3))"},
                      Case{"hat-subadditive", "sup"}, Case{"hat-bound", "lp(1.5)"}, Case{"hat-bound", "lp(4)"},
                      Case{"hat-tail-lipschitz", "lp(2)"}, Case{"hat-tail-lower", "lp(2)"},
                      Case{"hat-tail-lower", "dayAug(lorentz)"}, Case{"davis-sandwich", "davis(sup, l1, 8)"},
                      Case{"shifted-bounds", "lp(2)"}, Case{"shifted-bounds", "tsirelson"},
                      Case{"symmetric-invariance", "sym2R(lp(2))"}, Case{"symmetric-invariance", "tsirelson"}));

TEST(Suites, ShiftedBoundsZeroShiftIsEquality) {
  const ProbeReport r = run_suite("shifted-bounds", NormDescriptor::lp(2), samples(1));
  EXPECT_TRUE(r.violations.empty());
  EXPECT_NEAR(r.worst_margin, 0.0, 1e-12);
}

TEST(Suites, DeterministicGivenSeed) {
  const NormDescriptor d = parse_space("davis(sup, l1, 2)");
  const ProbeReport a = run_suite("davis-sandwich", d, samples(50, 7));
  const ProbeReport b = run_suite("davis-sandwich", d, samples(50, 7));
  EXPECT_EQ(a.worst_margin, b.worst_margin);
  EXPECT_EQ(a.metrics, b.metrics);
  const ProbeReport c = run_suite("davis-sandwich", d, samples(50, 8));
  EXPECT_NE(a.worst_margin, c.worst_margin);
}

TEST(Suites, ViolationsAreReplayable) {
  // A wrong "norm" (sum of squares) breaks homogeneity and the triangle
  // inequality; every recorded violation must reproduce exactly.
  const NormDescriptor bad = NormDescriptor::custom(
      "squares",
      [](const FiniteVector& v) {
        double s = 0.0;
        for (const Entry& e : v.entries()) s += e.value * e.value;
        return s;
      },
      {true, true});
  const SuiteConfig config = samples(50);
  const ProbeReport r = run_suite("norm-axioms", bad, config);
  ASSERT_EQ(r.verdict, Verdict::kFail);
  EXPECT_TRUE(r.space.empty());
  for (const Violation& v : r.violations) {
    bool found = false;
    for (const Check& c : replay_suite("norm-axioms", bad, v.input, config)) {
      if (c.name != v.check) continue;
      found = true;
      EXPECT_EQ(c.lhs, v.lhs);
      EXPECT_EQ(c.rhs, v.rhs);
    }
    EXPECT_TRUE(found);
  }
}

TEST(Suites, TwoRScenarios) {
  SuiteConfig c = samples(20);
  c.scenario = "c0-witness";
  const ProbeReport fail = run_suite("two-r", NormDescriptor::sup(), c);
  EXPECT_EQ(fail.verdict, Verdict::kFail);
  EXPECT_EQ(fail.metrics.at("defect"), 0.0);
  EXPECT_EQ(fail.metrics.at("diameter"), 1.0);
  c.scenario = "random-convergent";
  EXPECT_EQ(run_suite("two-r", NormDescriptor::lp(2), c).verdict, Verdict::kPass);
  c.scenario = "nope";
  EXPECT_THROW(run_suite("two-r", NormDescriptor::lp(2), c), std::invalid_argument);
}

TEST(Suites, CheckComparison) {
  const Tolerance t;
  EXPECT_FALSE((Check{"c", 1.0 + 1e-12, 1.0}).violated(t));
  EXPECT_TRUE((Check{"c", 1.0 + 1e-12, 1.0, false, false}).violated(t));
  EXPECT_TRUE((Check{"c", 1.0, 1.0, true}).violated(t));
}

}  // namespace
}  // namespace seqnorm
