#include "seqnorm/probes.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "seqnorm/error.hpp"

namespace seqnorm {

const char* verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

std::vector<FiniteVector> SequenceScenario::prefix(std::size_t length) const {
  std::vector<FiniteVector> out;
  out.reserve(length);
  for (std::size_t n = 1; n <= length; ++n) out.push_back(generator(n));
  return out;
}

SequenceScenario c0_failure_witness() {
  return {"c0-witness", "x_n = e_1 + ... + e_n",
          [](std::size_t n) { return FiniteVector::constant(1, static_cast<Index>(n)); }};
}

SequenceScenario decaying_scalar_scenario() {
  return {"decaying", "x_n = (1 - 1/n) e_1",
          [](std::size_t n) { return FiniteVector::unit(1, 1.0 - 1.0 / static_cast<double>(n)); }};
}

SequenceScenario normalized_blocks_scenario(NormFunction norm) {
  return {"normalized-blocks", "x_n = (e_1 + ... + e_n) / ||e_1 + ... + e_n||",
          [norm = std::move(norm)](std::size_t n) {
            const FiniteVector block = FiniteVector::constant(1, static_cast<Index>(n));
            return (1.0 / norm(block)) * block;
          }};
}

SequenceScenario random_convergent_scenario(std::uint64_t seed, Index dim) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::vector<double> limit(dim);
  for (double& v : limit) v = coef(rng);
  // Perturbation directions are drawn from a per-term stream so that x_n
  // does not depend on which terms were generated before it.
  return {"random-convergent", "x_n = x + 2^{-n} u_n",
          [limit, seed, dim](std::size_t n) {
            std::mt19937_64 local(seed ^ (0x9e3779b97f4a7c15ULL * (n + 1)));
            std::uniform_real_distribution<double> u(-1.0, 1.0);
            std::vector<double> values(limit);
            for (Index k = 0; k < dim; ++k) {
              values[k] += std::ldexp(u(local), -static_cast<int>(std::min<std::size_t>(n, 1000)));
            }
            return FiniteVector::from_dense(values);
          }};
}

NormFunction norm_evaluator(const NormDescriptor& norm, const EvalOptions& options) {
  return [norm, options](const FiniteVector& v) { return enclose(norm, v, options).lo(); };
}

BoydEstimate boyd_estimate(const NormDescriptor& norm, const BoydOptions& options) {
  if (!norm.is_1_unconditional()) throw EvaluationError("Boyd estimation requires a 1-unconditional norm");
  if (options.dim == 0) throw std::invalid_argument("candidate dimension must be positive");

  const bool exact = norm.is_exact();
  // log ||D_m x|| - log ||x||, bounded below for enclosure norms.
  auto log_gain = [&](const FiniteVector& x, Index m) {
    if (exact) return log_eval(norm, dilate(x, m)) - log_eval(norm, x);
    return std::log(enclose(norm, dilate(x, m), options.eval).lo()) -
           std::log(enclose(norm, x, options.eval).hi());
  };

  std::vector<FiniteVector> candidates{FiniteVector::unit(1)};
  for (Index k = 2; k <= options.dim; ++k) candidates.push_back(FiniteVector::constant(1, k));
  for (double r : {0.5, 0.8}) {
    std::vector<double> profile(options.dim);
    for (Index k = 0; k < options.dim; ++k) profile[k] = std::pow(r, static_cast<double>(k));
    candidates.push_back(FiniteVector::from_dense(profile));
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> coef(0.0, 1.0);
  for (std::size_t s = 0; s < options.samples; ++s) {
    std::vector<double> values(options.dim);
    for (double& v : values) v = coef(rng);
    candidates.push_back(FiniteVector::from_dense(values));
  }

  BoydEstimate out;
  for (Index m = 2; m <= options.max_m; ++m) {
    double best = -std::numeric_limits<double>::infinity();
    for (const FiniteVector& x : candidates) {
      if (x.is_zero()) continue;
      const double gain = log_gain(x, m);
      // Later candidates must beat the incumbent by more than rounding noise,
      // so that exact candidates (e_1 first) keep their exact ratio.
      if (best == -std::numeric_limits<double>::infinity() || gain > best + 1e-12 * std::abs(best)) best = gain;
    }
    BoydRow row;
    row.m = m;
    row.bound = std::exp(std::max(best, 0.0));
    row.ratio = best > 1e-12 ? std::log(static_cast<double>(m)) / best : std::numeric_limits<double>::infinity();
    out.p_estimate = std::min(out.p_estimate, row.ratio);
    out.rows.push_back(row);
  }
  return out;
}

double parallelogram_defect(const NormFunction& norm, const FiniteVector& x, const FiniteVector& y) {
  const double s = norm(x + y), a = norm(x), b = norm(y);
  return s * s - 2.0 * (a * a + b * b);
}

ProbeReport two_r_probe(const NormFunction& norm, const SequenceScenario& scenario, const TwoRProbeOptions& options) {
  ProbeReport report;
  report.suite = "two-r";
  const std::vector<FiniteVector> prefix = scenario.prefix(options.prefix_length);
  const std::size_t first = options.prefix_length / 2;

  double max_defect = 0.0, diameter = 0.0;
  std::size_t small = 0, pair = 0;
  for (std::size_t i = first; i < prefix.size(); ++i) {
    for (std::size_t j = i + 1; j < prefix.size(); ++j, ++pair) {
      const double defect = std::abs(parallelogram_defect(norm, prefix[i], prefix[j]));
      const double distance = norm(prefix[i] - prefix[j]);
      max_defect = std::max(max_defect, defect);
      diameter = std::max(diameter, distance);
      if (!(defect < options.epsilon)) continue;
      ++small;
      const double margin = options.separation - distance;
      report.worst_margin = std::min(report.worst_margin, margin);
      if (distance > options.separation) {
        report.violations.push_back({pair,
                                     "two-r",
                                     {{prefix[i], prefix[j]},
                                      {{"m", static_cast<double>(i + 1)},
                                       {"n", static_cast<double>(j + 1)},
                                       {"epsilon", options.epsilon},
                                       {"separation", options.separation}}},
                                     distance,
                                     options.separation,
                                     margin});
      }
    }
  }
  report.samples_run = pair;
  report.metrics = {{"defect", max_defect},
                    {"diameter", diameter},
                    {"small_defect_pairs", static_cast<double>(small)},
                    {"prefix_length", static_cast<double>(options.prefix_length)}};
  report.verdict = !report.violations.empty() ? Verdict::kFail : small > 0 ? Verdict::kPass : Verdict::kInconclusive;
  return report;
}

namespace {

constexpr double kFlatSum = 2.0 - 1e-9;
constexpr double kDistinct = 1e-6;

FiniteVector normalized(const NormFunction& norm, const FiniteVector& v) { return (1.0 / norm(v)) * v; }

}  // namespace

ProbeReport strict_convexity_probe(const NormFunction& norm, const StrictConvexityOptions& options) {
  if (options.dim < 2) throw std::invalid_argument("strict convexity probe needs dim >= 2");
  ProbeReport report;
  report.suite = "strict-convexity";
  report.seed = options.seed;
  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  std::uniform_int_distribution<Index> pick(1, options.dim);

  auto random_vector = [&] {
    std::vector<double> values(options.dim);
    for (double& v : values) v = normal(rng);
    return FiniteVector::from_dense(values);
  };

  for (std::size_t s = 0; s < options.samples; ++s) {
    FiniteVector x, y;
    if (s == 0) {
      x = FiniteVector::unit(1);
      y = FiniteVector::constant(1, 2);
    } else if (s % 2 == 1) {
      x = random_vector();
      y = random_vector();
    } else {
      // Same peak, everything else redrawn at least 5% of the peak away.
      const Index peak = pick(rng);
      const double height = std::abs(normal(rng)) + 0.1;
      std::vector<double> xv(options.dim), yv(options.dim);
      for (Index k = 0; k < options.dim; ++k) xv[k] = height * uniform(rng);
      double gap = 0.0;
      while (gap < 0.05 * height) {
        gap = 0.0;
        for (Index k = 0; k < options.dim; ++k) {
          if (k + 1 == peak) continue;
          yv[k] = height * uniform(rng);
          gap = std::max(gap, std::abs(yv[k] - xv[k]));
        }
      }
      xv[peak - 1] = yv[peak - 1] = height;
      x = FiniteVector::from_dense(xv);
      y = FiniteVector::from_dense(yv);
    }
    if (x.is_zero() || y.is_zero()) continue;
    x = normalized(norm, x);
    y = normalized(norm, y);
    const double sum = norm(x + y);
    const double distance = norm(x - y);
    ++report.samples_run;
    if (distance <= kDistinct) continue;
    const double margin = kFlatSum - sum;
    report.worst_margin = std::min(report.worst_margin, margin);
    if (sum > kFlatSum) {
      report.violations.push_back({s, "strict-convexity", {{x, y}, {}}, sum, kFlatSum, margin});
    }
  }
  report.metrics = {{"dim", static_cast<double>(options.dim)}};
  report.verdict = report.violations.empty() ? Verdict::kPass : Verdict::kFail;
  return report;
}

}  // namespace seqnorm
