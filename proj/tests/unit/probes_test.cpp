#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "seqnorm/error.hpp"
#include "seqnorm/probes.hpp"

namespace seqnorm {
namespace {

const double kInf = std::numeric_limits<double>::infinity();

TEST(Scenarios, C0WitnessPrefix) {
  const std::vector<FiniteVector> p = c0_failure_witness().prefix(3);
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p[0], FiniteVector::unit(1));
  EXPECT_EQ(p[1], FiniteVector::constant(1, 2));
  EXPECT_EQ(p[2], FiniteVector::constant(1, 3));
}

TEST(Scenarios, RandomConvergentIsCauchyAndSeeded) {
  const SequenceScenario a = random_convergent_scenario(9), b = random_convergent_scenario(9);
  EXPECT_EQ(a.generator(17), b.generator(17));
  EXPECT_LT((a.generator(40) - a.generator(41)).sup_norm(), 1e-11);
}

TEST(Boyd, LpIsExact) {
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    const BoydEstimate est = boyd_estimate(NormDescriptor::lp(p));
    EXPECT_EQ(est.p_estimate, p);
    for (const BoydRow& r : est.rows) EXPECT_EQ(r.ratio, p) << "m=" << r.m;
  }
}

TEST(Boyd, SupAndL1) {
  const BoydEstimate sup = boyd_estimate(NormDescriptor::sup());
  EXPECT_EQ(sup.p_estimate, kInf);
  for (const BoydRow& r : sup.rows) EXPECT_EQ(r.bound, 1.0);
  const BoydEstimate l1 = boyd_estimate(NormDescriptor::l1());
  EXPECT_EQ(l1.p_estimate, 1.0);
  for (const BoydRow& r : l1.rows) EXPECT_DOUBLE_EQ(r.bound, static_cast<double>(r.m));
}

TEST(Boyd, RowsAndRequirements) {
  BoydOptions options;
  options.max_m = 5;
  EXPECT_EQ(boyd_estimate(NormDescriptor::lp(2), options).rows.size(), 4u);
  const NormDescriptor cond = NormDescriptor::custom("c", [](const FiniteVector& v) { return v.sup_norm(); }, {});
  EXPECT_THROW(boyd_estimate(cond), EvaluationError);
  const BoydEstimate lor = boyd_estimate(NormDescriptor::lorentz());
  EXPECT_GT(lor.p_estimate, 1.0);
  EXPECT_LT(lor.p_estimate, kInf);
}

TEST(TwoR, SupC0WitnessFails) {
  const ProbeReport r = two_r_probe(norm_evaluator(NormDescriptor::sup()), c0_failure_witness());
  EXPECT_EQ(r.verdict, Verdict::kFail);
  EXPECT_EQ(r.metrics.at("defect"), 0.0);
  EXPECT_EQ(r.metrics.at("diameter"), 1.0);
  ASSERT_FALSE(r.violations.empty());
  EXPECT_EQ(r.violations.front().lhs, 1.0);
}

TEST(TwoR, L2DecayingPasses) {
  const ProbeReport r = two_r_probe(norm_evaluator(NormDescriptor::lp(2)), decaying_scalar_scenario());
  EXPECT_EQ(r.verdict, Verdict::kPass);
}

TEST(TwoR, DayAugmentedBlocksDoNotFail) {
  const NormFunction f = norm_evaluator(NormDescriptor::day_augment(NormDescriptor::lp(2)));
  const ProbeReport r = two_r_probe(f, normalized_blocks_scenario(f));
  EXPECT_NE(r.verdict, Verdict::kFail);
}

TEST(StrictConvexity, SupHasFlatPairAndHilbertDoesNot) {
  StrictConvexityOptions options;
  options.samples = 2000;
  const ProbeReport sup = strict_convexity_probe(norm_evaluator(NormDescriptor::sup()), options);
  EXPECT_EQ(sup.verdict, Verdict::kFail);
  ASSERT_FALSE(sup.violations.empty());
  EXPECT_EQ(sup.violations.front().sample, 0u);
  EXPECT_EQ(strict_convexity_probe(norm_evaluator(NormDescriptor::lp(2)), options).verdict, Verdict::kPass);
  EXPECT_EQ(strict_convexity_probe(norm_evaluator(NormDescriptor::strictly_convex(NormDescriptor::sup())), options)
                .verdict,
            Verdict::kPass);
}

TEST(ParallelogramDefect, HilbertIdentity) {
  const NormFunction f = norm_evaluator(NormDescriptor::lp(2));
  const FiniteVector x = FiniteVector::unit(1), y = FiniteVector::unit(1);
  EXPECT_EQ(parallelogram_defect(f, x, y), 0.0);
}

}  // namespace
}  // namespace seqnorm
