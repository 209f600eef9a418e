#pragma once

// Named inequality suites. Each suite draws deterministic inputs from a seed
// and evaluates a list of checks lhs <= rhs on each. Comparisons are
// enclosure-safe: the smaller side uses the lower end of an enclosure and
// the larger side the upper end, so recorded violations are genuine.
//
// Registered suites:
//   norm-axioms          triangle inequality, homogeneity, definiteness
//   hat-subadditive      (x+y)^(n) <= x^(n) + y^(n) for every n
//   hat-bound            ||x^||_p <= c ||x||_p, c = 1/(2^{1-1/p} - 1)  (lp only)
//   hat-tail-lipschitz   | ||x^ 1_[N,inf)|| - ||y^ 1_[N,inf)|| | <= c ||x - y||_p  (lp only)
//   hat-tail-lower       ||(x+y)^ 1_[N,inf)|| >= ||y|| - N u ||y||_inf for blocks y after x
//   davis-sandwich       ||x||_m / m <= ||x||_E <= 2m ||x||_m and ||x||_m <= ||x||_F / m
//   shifted-bounds       2||y|| <= ||y||_x <= (2 + 2||x||) ||y||
//   symmetric-invariance invariance under permutations and sign changes
//   two-r                parallelogram-defect probe over a sequence scenario
//   strict-convexity     search for flat segments on the unit sphere

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "seqnorm/interval.hpp"
#include "seqnorm/norm.hpp"
#include "seqnorm/probes.hpp"

namespace seqnorm {

struct SuiteConfig {
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  Tolerance tolerance;
  EvalOptions eval;
  /// Random vectors: support size in 1..max_support on indices 1..max_index,
  /// coefficients uniform in [-coefficient_bound, coefficient_bound].
  std::size_t max_support = 12;
  Index max_index = 24;
  double coefficient_bound = 10.0;
  /// two-r scenario: random-convergent (default, one per sample),
  /// c0-witness, decaying or normalized-blocks.
  std::string scenario = "random-convergent";
  TwoRProbeOptions two_r;
  /// Largest index used by strict-convexity.
  Index strict_dim = 3;
};

struct Check {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  /// Require lhs < rhs instead of lhs <= rhs.
  bool strict = false;
  /// Allow the configured tolerance; threshold checks compare exactly.
  bool tolerant = true;

  bool violated(const Tolerance& tolerance) const;
};

std::vector<std::string> suite_names();
bool has_suite(const std::string& name);

/// Throws std::invalid_argument for an unknown suite and EvaluationError when
/// the norm does not meet the suite's requirements.
ProbeReport run_suite(const std::string& name, const NormDescriptor& norm, const SuiteConfig& config = {});

/// Re-evaluates the checks of one recorded input.
std::vector<Check> replay_suite(const std::string& name, const NormDescriptor& norm, const ProbeInput& input,
                                const SuiteConfig& config = {});

/// Random vector as drawn by the suites.
FiniteVector random_vector(std::mt19937_64& rng, const SuiteConfig& config);

}  // namespace seqnorm
