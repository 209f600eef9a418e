#include "seqnorm/norm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "seqnorm/combinators.hpp"
#include "seqnorm/davis.hpp"
#include "seqnorm/error.hpp"
#include "seqnorm/tsirelson.hpp"

namespace seqnorm {

NormDescriptor::NormDescriptor(NormKind kind, double parameter, std::vector<NormDescriptor> children)
    : kind_(kind), parameter_(parameter), children_(std::move(children)) {
  switch (kind_) {
    case NormKind::kLp:
    case NormKind::kSup:
    case NormKind::kL1:
    case NormKind::kDay:
    case NormKind::kLorentz:
      flags_ = {true, true};
      break;
    case NormKind::kTsirelson:
      flags_ = {true, false};
      break;
    case NormKind::kDayAugment:
      flags_ = children_[0].flags_;
      break;
    case NormKind::kStrictlyConvex:
      flags_ = {true, false};
      break;
    case NormKind::kDavis: {
      const NormFlags e = children_[0].flags_, f = children_[1].flags_;
      flags_ = {e.unconditional && f.unconditional, e.symmetric && f.symmetric};
      break;
    }
    case NormKind::kYSpace: {
      const NormFlags e = children_[0].flags_, f = children_[1].flags_, x = children_[2].flags_;
      flags_ = {e.unconditional && f.unconditional && x.unconditional,
                e.symmetric && f.symmetric && x.unconditional};
      break;
    }
    case NormKind::kSymmetric2R: {
      const NormFlags b = children_[0].flags_;
      const bool ok = b.unconditional && b.symmetric;
      flags_ = {ok, ok};
      break;
    }
    case NormKind::kCustom:
      break;
  }
}

NormDescriptor NormDescriptor::lp(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw std::invalid_argument("lp requires 1 <= p < infinity");
  return NormDescriptor(NormKind::kLp, p, {});
}
NormDescriptor NormDescriptor::sup() { return NormDescriptor(NormKind::kSup, 0.0, {}); }
NormDescriptor NormDescriptor::l1() { return NormDescriptor(NormKind::kL1, 0.0, {}); }
NormDescriptor NormDescriptor::day() { return NormDescriptor(NormKind::kDay, 0.0, {}); }
NormDescriptor NormDescriptor::lorentz() { return NormDescriptor(NormKind::kLorentz, 0.0, {}); }
NormDescriptor NormDescriptor::tsirelson() { return NormDescriptor(NormKind::kTsirelson, 0.0, {}); }

NormDescriptor NormDescriptor::day_augment(NormDescriptor base) {
  return NormDescriptor(NormKind::kDayAugment, 0.0, {std::move(base)});
}

NormDescriptor NormDescriptor::strictly_convex(NormDescriptor base) {
  return NormDescriptor(NormKind::kStrictlyConvex, 0.0, {std::move(base)});
}

NormDescriptor NormDescriptor::davis(NormDescriptor e, NormDescriptor f, double m) {
  if (!(m > 0.0) || !std::isfinite(m)) throw std::invalid_argument("davis requires m > 0");
  return NormDescriptor(NormKind::kDavis, m, {std::move(e), std::move(f)});
}

NormDescriptor NormDescriptor::y_space(NormDescriptor e, NormDescriptor f, NormDescriptor x, MRule rule) {
  NormDescriptor d(NormKind::kYSpace, 0.0, {std::move(e), std::move(f), std::move(x)});
  d.rule_ = rule;
  return d;
}

NormDescriptor NormDescriptor::symmetric_2r(NormDescriptor base) {
  return NormDescriptor(NormKind::kSymmetric2R, 0.0, {std::move(base)});
}

NormDescriptor NormDescriptor::custom(std::string name, NormFunction fn, NormFlags flags) {
  if (!fn) throw std::invalid_argument("custom norm needs an evaluator");
  NormDescriptor d(NormKind::kCustom, 0.0, {});
  d.flags_ = flags;
  d.name_ = std::move(name);
  d.fn_ = std::move(fn);
  return d;
}

bool NormDescriptor::is_exact() const noexcept {
  switch (kind_) {
    case NormKind::kYSpace:
    case NormKind::kSymmetric2R:
      return false;
    default:
      return std::all_of(children_.begin(), children_.end(), [](const NormDescriptor& c) { return c.is_exact(); });
  }
}

bool operator==(const NormDescriptor& a, const NormDescriptor& b) {
  return a.kind_ == b.kind_ && a.parameter_ == b.parameter_ && a.rule_ == b.rule_ && a.name_ == b.name_ &&
         a.children_ == b.children_;
}

namespace {

// Absolute values sorted non-increasingly. Symmetric evaluators sum in this
// order so that permuted or sign-flipped inputs give bit-identical results.
std::vector<double> sorted_abs(const FiniteVector& v) {
  SortedVector s = decreasing_rearrangement(v);
  return {s.values().begin(), s.values().end()};
}

double lp_power_sum(const FiniteVector& v, double p) {
  double sum = 0.0;
  for (double a : sorted_abs(v)) sum += p == 2.0 ? a * a : std::pow(a, p);
  return sum;
}

// max over sign patterns of base(eps . v) for a base without the
// unconditional flag. Enclosure endpoints are maximized separately.
IntervalValue sign_supremum(const NormDescriptor& base, const FiniteVector& v, const EvalOptions& options) {
  if (base.is_1_unconditional()) return enclose(base, v, options);
  const std::size_t n = v.support_size();
  if (n > options.sign_enumeration_cap) {
    throw EvaluationError("sign-enumeration too large: support " + std::to_string(n) + " exceeds cap " +
                          std::to_string(options.sign_enumeration_cap));
  }
  const auto entries = v.entries();
  double lo = 0.0, hi = 0.0;
  // Pattern and its negation give the same value; fix the sign of the first
  // coordinate.
  const std::uint64_t patterns = n == 0 ? 1 : (std::uint64_t{1} << (n - 1));
  for (std::uint64_t mask = 0; mask < patterns; ++mask) {
    std::vector<Entry> flipped(entries.begin(), entries.end());
    for (std::size_t k = 1; k < n; ++k) {
      if (mask & (std::uint64_t{1} << (k - 1))) flipped[k].value = -flipped[k].value;
    }
    const IntervalValue val = enclose(base, FiniteVector::from_entries(std::move(flipped)), options);
    lo = std::max(lo, val.lo());
    hi = std::max(hi, val.hi());
  }
  return {lo, hi};
}

double strictly_convex_weight_term(const FiniteVector& v) {
  double sum = 0.0;
  for (const Entry& e : v.entries()) {
    // 2^{-4n} a_n^2; past n = 600 every finite a_n^2 underflows to 0.
    const int exponent = e.index > 600 ? -4096 : -4 * static_cast<int>(e.index);
    sum += std::ldexp(e.value * e.value, exponent);
  }
  return std::sqrt(sum);
}

}  // namespace

double eval_lp(const FiniteVector& v, double p) {
  if (p == 1.0) return eval_l1(v);
  const double sum = lp_power_sum(v, p);
  return p == 2.0 ? std::sqrt(sum) : std::pow(sum, 1.0 / p);
}

double eval_sup(const FiniteVector& v) { return v.sup_norm(); }

double eval_l1(const FiniteVector& v) {
  double sum = 0.0;
  for (double a : sorted_abs(v)) sum += a;
  return sum;
}

double eval_day(const FiniteVector& v) {
  const std::vector<double> a = sorted_abs(v);
  double sum = 0.0;
  // Past k = 1100 the weight 4^{-k} sends every finite square to 0.
  for (std::size_t k = 0; k < a.size() && k < 1100; ++k) {
    sum += std::ldexp(a[k] * a[k], -2 * static_cast<int>(k + 1));
  }
  return std::sqrt(sum);
}

double eval_lorentz_harmonic(const FiniteVector& v) {
  const std::vector<double> a = sorted_abs(v);
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) sum += a[k] / static_cast<double>(k + 1);
  return sum;
}

IntervalValue enclose(const NormDescriptor& norm, const FiniteVector& v, const EvalOptions& options) {
  switch (norm.kind()) {
    case NormKind::kLp:
      return IntervalValue::exact(eval_lp(v, norm.parameter()));
    case NormKind::kSup:
      return IntervalValue::exact(eval_sup(v));
    case NormKind::kL1:
      return IntervalValue::exact(eval_l1(v));
    case NormKind::kDay:
      return IntervalValue::exact(eval_day(v));
    case NormKind::kLorentz:
      return IntervalValue::exact(eval_lorentz_harmonic(v));
    case NormKind::kTsirelson:
      return IntervalValue::exact(eval_tsirelson(v));
    case NormKind::kDayAugment:
      return root_sum_square(enclose(norm.child(0), v, options), IntervalValue::exact(eval_day(v)));
    case NormKind::kStrictlyConvex: {
      const IntervalValue signs = sign_supremum(norm.child(0), v, options);
      const double weighted = strictly_convex_weight_term(v);
      return {signs.lo() + weighted, signs.hi() + weighted};
    }
    case NormKind::kDavis:
      return IntervalValue::exact(davis_interpolation(norm.child(0), norm.child(1), norm.parameter(), v));
    case NormKind::kYSpace:
      return y_space_norm(norm.child(0), norm.child(1), norm.child(2), DavisParams{norm.m_rule()}, v,
                          options.series_terms, options);
    case NormKind::kSymmetric2R:
      return symmetric_2r_norm(norm.child(0), v, options.tail_truncation, options);
    case NormKind::kCustom: {
      const double value = norm.custom_function()(v);
      if (!(value >= 0.0)) throw EvaluationError("custom norm '" + norm.custom_name() + "' returned a negative value");
      return IntervalValue::exact(value);
    }
  }
  throw EvaluationError("unknown norm kind");
}

double eval(const NormDescriptor& norm, const FiniteVector& v) {
  if (!norm.is_exact()) {
    throw EvaluationError("this norm is only available as an enclosure; use enclose()");
  }
  return enclose(norm, v).lo();
}

double log_eval(const NormDescriptor& norm, const FiniteVector& v) {
  if (norm.kind() == NormKind::kLp && norm.parameter() != 1.0) {
    return std::log(lp_power_sum(v, norm.parameter())) / norm.parameter();
  }
  return std::log(eval(norm, v));
}

double estimate_symmetry_constant(const NormFunction& norm, const SymmetrySamplingPlan& plan) {
  double best = 1.0;
  auto consider = [&](const FiniteVector& v, const FiniteVector& moved) {
    const double base = norm(v);
    if (base > 0.0) best = std::max(best, norm(moved) / base);
  };

  // Unit vectors swapped pairwise: catches weights that depend on position.
  for (Index i = 1; i <= plan.max_index; ++i) {
    for (Index j = 1; j <= plan.max_index; ++j) {
      if (i == j) continue;
      consider(FiniteVector::unit(j), apply_permutation(FiniteVector::unit(j), FinitePermutation::transposition(i, j)));
    }
  }

  std::mt19937_64 rng(plan.seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::bernoulli_distribution coin(0.5);
  std::vector<Index> domain(plan.max_index);
  std::iota(domain.begin(), domain.end(), Index{1});
  for (std::size_t s = 0; s < plan.samples; ++s) {
    std::vector<Entry> entries;
    for (Index n = 1; n <= plan.max_index; ++n) {
      if (coin(rng)) entries.push_back({n, coef(rng)});
    }
    const FiniteVector v = FiniteVector::from_entries(std::move(entries));
    std::vector<Index> image = domain;
    std::shuffle(image.begin(), image.end(), rng);
    std::map<Index, int> signs;
    for (Index n = 1; n <= plan.max_index; ++n) signs[n] = coin(rng) ? 1 : -1;
    consider(v, apply_signs(apply_permutation(v, FinitePermutation::from_images(domain, image)),
                            SignPattern(std::move(signs))));
  }
  return best;
}

double estimate_symmetry_constant(const NormDescriptor& norm, const SymmetrySamplingPlan& plan) {
  return estimate_symmetry_constant([&](const FiniteVector& v) { return enclose(norm, v).lo(); }, plan);
}

}  // namespace seqnorm
