#pragma once

// Finite-sample probes: Boyd-index estimation and 2R / strict convexity
// searches. Verdicts are finite-scale statements. "fail" means a concrete
// counterexample was found at the given thresholds; "pass" means none was.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "seqnorm/norm.hpp"
#include "seqnorm/vectors.hpp"

namespace seqnorm {

enum class Verdict { kPass, kFail, kInconclusive };

const char* verdict_name(Verdict v) noexcept;

/// Everything needed to re-evaluate one check.
struct ProbeInput {
  std::vector<FiniteVector> vectors;
  std::map<std::string, double> params;

  bool operator==(const ProbeInput&) const = default;
};

/// A check lhs <= rhs (lhs < rhs when strict) that did not hold.
struct Violation {
  std::size_t sample = 0;
  std::string check;
  ProbeInput input;
  double lhs = 0.0;
  double rhs = 0.0;
  /// rhs - lhs; negative for genuine violations.
  double margin = 0.0;
};

struct ProbeReport {
  std::string suite;
  /// Printed space expression; empty for norms without a text form.
  std::string space;
  std::size_t samples_run = 0;
  std::vector<Violation> violations;
  /// Smallest rhs - lhs over all checks performed; +inf when none ran.
  double worst_margin = std::numeric_limits<double>::infinity();
  Verdict verdict = Verdict::kPass;
  std::uint64_t seed = 0;
  /// Suite-specific summary numbers (defect, diameter, ...).
  std::map<std::string, double> metrics;
};

/// Deterministic sequence x_1, x_2, ... (1-based).
struct SequenceScenario {
  std::string name;
  std::string description;
  std::function<FiniteVector(std::size_t)> generator;

  std::vector<FiniteVector> prefix(std::size_t length) const;
};

/// x_n = e_1 + ... + e_n: every term has sup norm 1 and the terms are
/// pairwise at sup distance 1.
SequenceScenario c0_failure_witness();
/// x_n = (1 - 1/n) e_1.
SequenceScenario decaying_scalar_scenario();
/// x_n = (e_1 + ... + e_n) / ||e_1 + ... + e_n||.
SequenceScenario normalized_blocks_scenario(NormFunction norm);
/// x_n = x + 2^{-n} u_n with x, u_n random on indices 1..dim: a Cauchy
/// sequence.
SequenceScenario random_convergent_scenario(std::uint64_t seed, Index dim = 6);

/// Evaluator used by the probes: the exact value, or the lower end of the
/// enclosure for enclosure-only norms.
NormFunction norm_evaluator(const NormDescriptor& norm, const EvalOptions& options = {});

struct BoydRow {
  Index m = 0;
  /// Lower bound on ||D_m||.
  double bound = 1.0;
  /// log m / log bound; +inf when bound == 1.
  double ratio = std::numeric_limits<double>::infinity();
};

struct BoydEstimate {
  std::vector<BoydRow> rows;
  /// min over m of the ratios; an upper estimate of the lower Boyd index.
  double p_estimate = std::numeric_limits<double>::infinity();
};

struct BoydOptions {
  Index max_m = 16;
  /// Support length of the candidate vectors.
  Index dim = 8;
  /// Random candidates tried per m.
  std::size_t samples = 32;
  std::uint64_t seed = 1;
  EvalOptions eval;
};

/// Lower bounds on ||D_m|| for m = 2..max_m from candidate vectors (e_1,
/// constant blocks, geometric profiles, random nonnegative vectors). Ratios
/// are formed in log space, so for l_p the estimate is exactly p. Requires a
/// 1-unconditional norm.
BoydEstimate boyd_estimate(const NormDescriptor& norm, const BoydOptions& options = {});

struct TwoRProbeOptions {
  std::size_t prefix_length = 64;
  /// Defect threshold epsilon.
  double epsilon = 1e-6;
  /// Separation delta_0.
  double separation = 0.1;
};

/// Parallelogram defect ||x+y||^2 - 2(||x||^2 + ||y||^2).
double parallelogram_defect(const NormFunction& norm, const FiniteVector& x, const FiniteVector& y);

/// Examines all pairs (x_m, x_n), m < n, from the tail half of the prefix.
/// A pair with |defect| < epsilon and ||x_m - x_n|| > delta_0 is a violation
/// (verdict fail). Otherwise the verdict is pass when some pair has
/// |defect| < epsilon and inconclusive when none does. Metrics: "defect"
/// (largest |defect|), "diameter" (largest distance), "small_defect_pairs".
ProbeReport two_r_probe(const NormFunction& norm, const SequenceScenario& scenario,
                        const TwoRProbeOptions& options = {});

struct StrictConvexityOptions {
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  /// Largest index used by the random pairs.
  Index dim = 3;
};

/// Searches for unit vectors x != y with ||x + y|| > 2 - 1e-9 and
/// ||x - y|| > 1e-6, trying (e_1, e_1 + e_2) first, then random pairs and
/// pairs sharing their largest coordinate.
ProbeReport strict_convexity_probe(const NormFunction& norm, const StrictConvexityOptions& options = {});

}  // namespace seqnorm
