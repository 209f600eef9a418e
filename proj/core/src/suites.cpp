#include "seqnorm/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "seqnorm/combinators.hpp"
#include "seqnorm/error.hpp"
#include "seqnorm/expression.hpp"
#include "seqnorm/tail.hpp"

namespace seqnorm {

bool Check::violated(const Tolerance& tolerance) const {
  if (strict) return !(lhs < rhs);
  if (tolerant) return !tolerance.le(lhs, rhs);
  return !(lhs <= rhs);
}

FiniteVector random_vector(std::mt19937_64& rng, const SuiteConfig& config) {
  const Index max_index = std::max<Index>(config.max_index, config.max_support);
  std::uniform_int_distribution<std::size_t> size(1, config.max_support);
  std::uniform_real_distribution<double> coef(-config.coefficient_bound, config.coefficient_bound);
  std::vector<Index> indices(max_index);
  std::iota(indices.begin(), indices.end(), Index{1});
  const std::size_t n = size(rng);
  for (std::size_t k = 0; k < n; ++k) {
    std::uniform_int_distribution<std::size_t> pick(k, indices.size() - 1);
    std::swap(indices[k], indices[pick(rng)]);
  }
  std::vector<Entry> entries;
  for (std::size_t k = 0; k < n; ++k) entries.push_back({indices[k], coef(rng)});
  return FiniteVector::from_entries(std::move(entries));
}

namespace {

using Generator = std::function<ProbeInput(std::mt19937_64&, std::size_t, const SuiteConfig&)>;
using Checker = std::function<std::vector<Check>(const NormDescriptor&, const ProbeInput&, const SuiteConfig&)>;
using Runner = std::function<ProbeReport(const NormDescriptor&, const SuiteConfig&)>;

struct Suite {
  std::function<void(const NormDescriptor&)> require;
  Checker check;
  /// Either a generator for the generic sampling loop or a custom runner.
  Generator generate;
  Runner run;
};

IntervalValue value(const NormDescriptor& norm, const FiniteVector& v, const SuiteConfig& config) {
  return enclose(norm, v, config.eval);
}

double param(const ProbeInput& input, const char* key) {
  const auto it = input.params.find(key);
  if (it == input.params.end()) throw std::invalid_argument(std::string("probe input lacks parameter ") + key);
  return it->second;
}

void require_lp(const NormDescriptor& norm) {
  if (norm.kind() != NormKind::kLp || !(norm.parameter() > 1.0)) {
    throw EvaluationError("this suite needs lp(p) with p > 1");
  }
}

void require_symmetric_exact(const NormDescriptor& norm) {
  if (!norm.is_1_unconditional() || !norm.is_1_symmetric() || !norm.is_exact()) {
    throw EvaluationError("this suite needs an exact 1-symmetric norm");
  }
}

// Constant of the Cesaro-average bound for l_p.
double hat_constant(double p) { return 1.0 / (std::exp2(1.0 - 1.0 / p) - 1.0); }

IntervalValue tailed(const NormDescriptor& norm, const TailedVector& w, const SuiteConfig& config) {
  return eval_tailed(norm, w, std::max<Index>({config.eval.tail_truncation, w.head_end(), 1}), config.eval);
}

ProbeInput pair_input(std::mt19937_64& rng, const SuiteConfig& config) {
  return {{random_vector(rng, config), random_vector(rng, config)}, {}};
}

// --- norm-axioms -----------------------------------------------------------

std::vector<Check> check_axioms(const NormDescriptor& norm, const ProbeInput& in, const SuiteConfig& config) {
  const FiniteVector& x = in.vectors.at(0);
  const FiniteVector& y = in.vectors.at(1);
  const double alpha = param(in, "alpha");
  const IntervalValue nx = value(norm, x, config), ny = value(norm, y, config);
  const IntervalValue sum = value(norm, x + y, config);
  const IntervalValue scaled = value(norm, alpha * x, config);
  const IntervalValue zero = value(norm, FiniteVector{}, config);
  const double a = std::abs(alpha);
  return {
      {"triangle", sum.lo(), nx.hi() + ny.hi()},
      {"homogeneity-upper", scaled.lo(), a * nx.hi()},
      {"homogeneity-lower", a * nx.lo(), scaled.hi()},
      {"definiteness", 0.0, x.is_zero() ? 1.0 : nx.lo(), true},
      {"zero", zero.hi(), 0.0},
  };
}

// --- hat-subadditive -------------------------------------------------------

std::vector<Check> check_hat_subadditive(const NormDescriptor&, const ProbeInput& in, const SuiteConfig&) {
  const FiniteVector& x = in.vectors.at(0);
  const FiniteVector& y = in.vectors.at(1);
  const TailedVector hx = hat_transform(x), hy = hat_transform(y), hs = hat_transform(x + y);
  std::vector<Check> checks;
  const Index last = std::max({hx.head_end(), hy.head_end(), hs.head_end()});
  for (Index n = 1; n <= last; ++n) checks.push_back({"pointwise", hs.at(n), hx.at(n) + hy.at(n)});
  // Past every head all three are S/n.
  checks.push_back({"tail-mass", hs.tail_mass(), hx.tail_mass() + hy.tail_mass()});
  return checks;
}

// --- hat-bound / hat-tail-lipschitz ----------------------------------------

std::vector<Check> check_hat_bound(const NormDescriptor& norm, const ProbeInput& in, const SuiteConfig& config) {
  const FiniteVector& x = in.vectors.at(0);
  const IntervalValue hat = tailed(norm, hat_transform(x), config);
  return {{"hat-bound", hat.hi(), hat_constant(norm.parameter()) * value(norm, x, config).lo()}};
}

ProbeInput lipschitz_input(std::mt19937_64& rng, const SuiteConfig& config) {
  ProbeInput in = pair_input(rng, config);
  std::uniform_int_distribution<Index> n(1, config.max_index);
  in.params["N"] = static_cast<double>(n(rng));
  return in;
}

std::vector<Check> check_hat_lipschitz(const NormDescriptor& norm, const ProbeInput& in, const SuiteConfig& config) {
  const FiniteVector& x = in.vectors.at(0);
  const FiniteVector& y = in.vectors.at(1);
  const auto start = static_cast<Index>(param(in, "N"));
  const IntervalValue a = tailed(norm, restrict(hat_transform(x), start), config);
  const IntervalValue b = tailed(norm, restrict(hat_transform(y), start), config);
  const double gap = std::max({a.lo() - b.hi(), b.lo() - a.hi(), 0.0});
  return {{"hat-tail-lipschitz", gap, hat_constant(norm.parameter()) * value(norm, x - y, config).hi()}};
}

// --- hat-tail-lower --------------------------------------------------------

ProbeInput tail_lower_input(std::mt19937_64& rng, const SuiteConfig& config) {
  std::uniform_int_distribution<Index> start(2, 5);
  std::uniform_int_distribution<Index> length(32, 128);
  std::uniform_real_distribution<double> coef(-config.coefficient_bound, config.coefficient_bound);
  std::uniform_real_distribution<double> small(0.5, 1.0);
  std::bernoulli_distribution positive(0.5);
  const Index n = start(rng);
  std::vector<Entry> head;
  for (Index i = 1; i < n; ++i) head.push_back({i, coef(rng)});
  const Index len = length(rng);
  const double level = config.coefficient_bound / static_cast<double>(len);
  std::vector<Entry> block;
  for (Index i = 0; i < len; ++i) block.push_back({n + i, (positive(rng) ? 1.0 : -1.0) * level * small(rng)});
  return {{FiniteVector::from_entries(std::move(head)), FiniteVector::from_entries(std::move(block))},
          {{"N", static_cast<double>(n)}}};
}

std::vector<Check> check_hat_tail_lower(const NormDescriptor& norm, const ProbeInput& in, const SuiteConfig& config) {
  const FiniteVector& x = in.vectors.at(0);
  const FiniteVector& y = in.vectors.at(1);
  const auto start = static_cast<Index>(param(in, "N"));
  const double bound = value(norm, y, config).lo() - static_cast<double>(start) * y.sup_norm() * unit_vector_bound(norm);
  const IntervalValue tail = tailed(norm, restrict(hat_transform(x + y), start), config);
  return {{"hat-tail-lower", bound, tail.hi()}};
}

// --- davis-sandwich --------------------------------------------------------

std::vector<Check> check_davis(const NormDescriptor& norm, const ProbeInput& in, const SuiteConfig& config) {
  const FiniteVector& x = in.vectors.at(0);
  const double m = norm.parameter();
  const IntervalValue d = value(norm, x, config);
  const IntervalValue e = value(norm.child(0), x, config);
  const IntervalValue f = value(norm.child(1), x, config);
  return {
      {"davis-lower", d.lo() / m, e.hi()},
      {"davis-upper", e.lo(), 2.0 * m * d.hi()},
      {"davis-feasible", d.lo(), f.hi() / m},
  };
}

// --- shifted-bounds --------------------------------------------------------

ProbeInput shifted_input(std::mt19937_64& rng, std::size_t sample, const SuiteConfig& config) {
  ProbeInput in = pair_input(rng, config);
  if (sample == 0) in.vectors[0] = FiniteVector{};
  return in;
}

std::vector<Check> check_shifted(const NormDescriptor& norm, const ProbeInput& in, const SuiteConfig&) {
  const FiniteVector& x = in.vectors.at(0);
  const FiniteVector& y = in.vectors.at(1);
  const double ny = eval(norm, y);
  const double shifted = shifted_norm(norm, x, y);
  std::vector<Check> checks{
      {"shifted-lower", 2.0 * ny, shifted},
      {"shifted-upper", shifted, (2.0 + 2.0 * eval(norm, x)) * ny},
  };
  if (x.is_zero()) checks.push_back({"zero-shift", shifted, 2.0 * ny});
  return checks;
}

// --- symmetric-invariance --------------------------------------------------

ProbeInput invariance_input(const NormDescriptor& norm, std::mt19937_64& rng, const SuiteConfig& config) {
  const FiniteVector x = random_vector(rng, config);
  std::bernoulli_distribution coin(0.5);
  std::map<Index, int> signs;
  for (const Entry& e : x.entries()) signs[e.index] = coin(rng) ? 1 : -1;
  FiniteVector moved = apply_signs(x, SignPattern(std::move(signs)));
  if (norm.is_1_symmetric()) {
    std::vector<Index> domain(std::max<Index>(config.max_index, config.max_support));
    std::iota(domain.begin(), domain.end(), Index{1});
    std::vector<Index> image = domain;
    std::shuffle(image.begin(), image.end(), rng);
    moved = apply_permutation(moved, FinitePermutation::from_images(domain, image));
  }
  return {{x, moved}, {}};
}

std::vector<Check> check_invariance(const NormDescriptor& norm, const ProbeInput& in, const SuiteConfig& config) {
  const IntervalValue a = value(norm, in.vectors.at(0), config);
  const IntervalValue b = value(norm, in.vectors.at(1), config);
  return {{"invariance-upper", b.lo(), a.hi()}, {"invariance-lower", a.lo(), b.hi()}};
}

// --- two-r -----------------------------------------------------------------

std::vector<Check> check_two_r(const NormDescriptor& norm, const ProbeInput& in, const SuiteConfig& config) {
  const NormFunction f = norm_evaluator(norm, config.eval);
  const FiniteVector& x = in.vectors.at(0);
  const FiniteVector& y = in.vectors.at(1);
  if (!(std::abs(parallelogram_defect(f, x, y)) < param(in, "epsilon"))) return {};
  return {{"two-r", f(x - y), param(in, "separation"), false, false}};
}

ProbeReport run_two_r(const NormDescriptor& norm, const SuiteConfig& config) {
  const NormFunction f = norm_evaluator(norm, config.eval);
  std::vector<SequenceScenario> scenarios;
  if (config.scenario == "random-convergent") {
    for (std::size_t s = 0; s < config.samples; ++s) scenarios.push_back(random_convergent_scenario(config.seed + s));
  } else if (config.scenario == "c0-witness") {
    scenarios.push_back(c0_failure_witness());
  } else if (config.scenario == "decaying") {
    scenarios.push_back(decaying_scalar_scenario());
  } else if (config.scenario == "normalized-blocks") {
    scenarios.push_back(normalized_blocks_scenario(f));
  } else {
    throw std::invalid_argument("unknown scenario '" + config.scenario + "'");
  }

  ProbeReport report;
  report.metrics = {{"defect", 0.0}, {"diameter", 0.0}, {"small_defect_pairs", 0.0}};
  bool all_pass = true;
  std::size_t offset = 0;
  for (const SequenceScenario& scenario : scenarios) {
    ProbeReport r = two_r_probe(f, scenario, config.two_r);
    for (Violation& v : r.violations) {
      v.sample += offset;
      report.violations.push_back(std::move(v));
    }
    offset += r.samples_run;
    report.samples_run += r.samples_run;
    report.worst_margin = std::min(report.worst_margin, r.worst_margin);
    report.metrics["defect"] = std::max(report.metrics["defect"], r.metrics["defect"]);
    report.metrics["diameter"] = std::max(report.metrics["diameter"], r.metrics["diameter"]);
    report.metrics["small_defect_pairs"] += r.metrics["small_defect_pairs"];
    all_pass = all_pass && r.verdict == Verdict::kPass;
  }
  report.metrics["scenarios"] = static_cast<double>(scenarios.size());
  report.metrics["prefix_length"] = static_cast<double>(config.two_r.prefix_length);
  report.verdict = !report.violations.empty() ? Verdict::kFail : all_pass ? Verdict::kPass : Verdict::kInconclusive;
  return report;
}

// --- strict-convexity ------------------------------------------------------

std::vector<Check> check_strict(const NormDescriptor& norm, const ProbeInput& in, const SuiteConfig& config) {
  const NormFunction f = norm_evaluator(norm, config.eval);
  const FiniteVector& x = in.vectors.at(0);
  const FiniteVector& y = in.vectors.at(1);
  if (!(f(x - y) > 1e-6)) return {};
  return {{"strict-convexity", f(x + y), 2.0 - 1e-9, false, false}};
}

ProbeReport run_strict(const NormDescriptor& norm, const SuiteConfig& config) {
  return strict_convexity_probe(norm_evaluator(norm, config.eval),
                                {config.samples, config.seed, std::max<Index>(config.strict_dim, 2)});
}

// ---------------------------------------------------------------------------

void no_requirement(const NormDescriptor&) {}

const std::map<std::string, Suite>& registry() {
  static const std::map<std::string, Suite> suites = [] {
    std::map<std::string, Suite> s;
    auto pairs = [](std::mt19937_64& rng, std::size_t, const SuiteConfig& c) { return pair_input(rng, c); };
    auto single = [](std::mt19937_64& rng, std::size_t, const SuiteConfig& c) {
      return ProbeInput{{random_vector(rng, c)}, {}};
    };
    s["norm-axioms"] = {no_requirement, check_axioms,
                        [](std::mt19937_64& rng, std::size_t, const SuiteConfig& c) {
                          ProbeInput in = pair_input(rng, c);
                          std::uniform_real_distribution<double> alpha(-c.coefficient_bound, c.coefficient_bound);
                          in.params["alpha"] = alpha(rng);
                          return in;
                        },
                        nullptr};
    s["hat-subadditive"] = {no_requirement, check_hat_subadditive, pairs, nullptr};
    s["hat-bound"] = {require_lp, check_hat_bound, single, nullptr};
    s["hat-tail-lipschitz"] = {require_lp, check_hat_lipschitz,
                               [](std::mt19937_64& rng, std::size_t, const SuiteConfig& c) {
                                 return lipschitz_input(rng, c);
                               },
                               nullptr};
    s["hat-tail-lower"] = {require_symmetric_exact, check_hat_tail_lower,
                           [](std::mt19937_64& rng, std::size_t, const SuiteConfig& c) {
                             return tail_lower_input(rng, c);
                           },
                           nullptr};
    s["davis-sandwich"] = {[](const NormDescriptor& n) {
                             if (n.kind() != NormKind::kDavis) throw EvaluationError("this suite needs davis(E, F, m)");
                           },
                           check_davis, single, nullptr};
    s["shifted-bounds"] = {[](const NormDescriptor& n) {
                             if (!n.is_exact()) throw EvaluationError("this suite needs an exactly evaluated norm");
                           },
                           check_shifted, shifted_input, nullptr};
    s["symmetric-invariance"] = {[](const NormDescriptor& n) {
                                   if (!n.is_1_unconditional()) {
                                     throw EvaluationError("this suite needs a 1-unconditional norm");
                                   }
                                 },
                                 check_invariance, nullptr, nullptr};
    s["two-r"] = {no_requirement, check_two_r, nullptr, run_two_r};
    s["strict-convexity"] = {no_requirement, check_strict, nullptr, run_strict};
    return s;
  }();
  return suites;
}

const Suite& lookup(const std::string& name) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown suite '" + name + "'");
  return it->second;
}

std::string space_text(const NormDescriptor& norm) {
  try {
    return print_space(norm);
  } catch (const std::invalid_argument&) {
    return {};
  }
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, suite] : registry()) names.push_back(name);
  return names;
}

bool has_suite(const std::string& name) { return registry().count(name) > 0; }

ProbeReport run_suite(const std::string& name, const NormDescriptor& norm, const SuiteConfig& config) {
  const Suite& suite = lookup(name);
  suite.require(norm);

  ProbeReport report;
  if (suite.run) {
    report = suite.run(norm, config);
  } else {
    std::mt19937_64 rng(config.seed);
    std::size_t checks = 0;
    for (std::size_t s = 0; s < config.samples; ++s) {
      const ProbeInput input =
          suite.generate ? suite.generate(rng, s, config) : invariance_input(norm, rng, config);
      for (const Check& c : suite.check(norm, input, config)) {
        ++checks;
        const double margin = c.rhs - c.lhs;
        report.worst_margin = std::min(report.worst_margin, margin);
        if (c.violated(config.tolerance)) report.violations.push_back({s, c.name, input, c.lhs, c.rhs, margin});
      }
      ++report.samples_run;
    }
    report.metrics["checks"] = static_cast<double>(checks);
    report.verdict = report.violations.empty() ? Verdict::kPass : Verdict::kFail;
  }
  report.suite = name;
  report.space = space_text(norm);
  report.seed = config.seed;
  return report;
}

std::vector<Check> replay_suite(const std::string& name, const NormDescriptor& norm, const ProbeInput& input,
                                const SuiteConfig& config) {
  const Suite& suite = lookup(name);
  suite.require(norm);
  return suite.check(norm, input, config);
}

}  // namespace seqnorm
