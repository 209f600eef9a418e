#include "seqnorm/tail.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "seqnorm/combinators.hpp"
#include "seqnorm/error.hpp"

namespace seqnorm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// sup_L phi_Day(L) = (sum_n 4^{-n})^{1/2} = 1/sqrt(3), rounded up.
const double kDayCeiling = std::nextafter(1.0 / std::numbers::sqrt3, kInf);

// Direct tail terms are used for dyadic blocks shorter than this; longer
// blocks go to the envelope. The switch point is absolute (independent of
// M) so that the blocks for M and 2M coincide past the first.
constexpr double kDirectBlockLimit = 0x1p52;

// Past 1024 the asymptotic series is truncated after a positive term, which
// leaves an upper bound accurate to far below double precision.
double harmonic_number(Index n) {
  if (n <= 1024) {
    double sum = 0.0;
    for (Index k = n; k >= 1; --k) sum += 1.0 / static_cast<double>(k);
    return sum;
  }
  const double x = static_cast<double>(n);
  const double x2 = x * x;
  return std::log(x) + std::numbers::egamma + 1.0 / (2.0 * x) - 1.0 / (12.0 * x2) + 1.0 / (120.0 * x2 * x2);
}

// phi(L) from closed forms, for descriptors where one is available (the
// symmetric base norms and Day augmentations of them).
std::optional<double> closed_form_phi(const NormDescriptor& norm, double length) {
  switch (norm.kind()) {
    case NormKind::kLp:
      return norm.parameter() == 1.0 ? length : std::pow(length, 1.0 / norm.parameter());
    case NormKind::kSup:
      return 1.0;
    case NormKind::kL1:
      return length;
    case NormKind::kDay:
      // sum_{n<=L} 4^{-n} = (1 - 4^{-L}) / 3
      return std::sqrt(-std::expm1(-length * std::log(4.0)) / 3.0);
    case NormKind::kLorentz:
      return harmonic_number(static_cast<Index>(length));
    case NormKind::kDayAugment: {
      const auto base = closed_form_phi(norm.child(0), length);
      const auto day = closed_form_phi(NormDescriptor::day(), length);
      if (!base) return std::nullopt;
      return std::sqrt(*base * *base + *day * *day);
    }
    default:
      return std::nullopt;
  }
}

// Sum over j >= 0 of (S / L_j) * env(L_j) with L_j = 2^j L:
//   S L^{g-1} [ (C + D ln L) / (1 - r) + D ln2 r / (1 - r)^2 ],  r = 2^{g-1}.
double envelope_tail(const GrowthEnvelope& env, double tail_mass, double length) {
  if (!env.summable()) return kInf;
  const double r = std::exp2(env.exponent - 1.0);
  const double lead = env.coef + env.log_coef * std::log(length);
  const double series = lead / (1.0 - r) + env.log_coef * std::numbers::ln2 * r / ((1.0 - r) * (1.0 - r));
  return tail_mass * std::pow(length, env.exponent - 1.0) * series;
}

// Relative inflation covering rounding in the power sums below.
constexpr double kSumSlack = 0x1p-40;

// Upper bounds on ||w|| that use the structure of the norm instead of the
// triangle inequality across tail blocks. For l_p the truncated power sum is
// completed with sum_{n >= n0} n^{-p} <= (n0 - 1)^{1-p} / (p - 1). The bound
// is minimized over the chain M, M/2, M/4, ... (down to the head), with the
// power sum accumulated in index order, so doubling M can only lower it.
std::optional<double> structured_bound(const NormDescriptor& norm, const TailedVector& w, Index truncation,
                                       const EvalOptions& options) {
  const double mass = w.tail_mass();
  const Index floor_index = std::max<Index>(w.head_end(), 1);
  switch (norm.kind()) {
    case NormKind::kLp: {
      const double p = norm.parameter();
      if (p <= 1.0) return std::nullopt;
      std::vector<Index> chain;
      for (Index m = truncation; m >= floor_index; m /= 2) {
        chain.push_back(m);
        if (m % 2 != 0) break;
      }
      std::reverse(chain.begin(), chain.end());
      double sum = 0.0, best = kInf;
      Index n = w.start();
      for (Index m : chain) {
        for (; n <= m; ++n) sum += std::pow(std::abs(w.at(n)), p);
        const double first = static_cast<double>(std::max(m + 1, w.start()));
        const double rest = std::pow(mass, p) * std::pow(first - 1.0, 1.0 - p) / (p - 1.0);
        const double terms = static_cast<double>(m - w.start() + 2);
        best = std::min(best, std::pow((sum * (1.0 + terms * 0x1p-52) + rest) * (1.0 + kSumSlack), 1.0 / p));
      }
      return best;
    }
    case NormKind::kSup: {
      const double first = static_cast<double>(std::max(truncation + 1, w.start()));
      return std::max(w.truncate(truncation).sup_norm(), mass / first);
    }
    case NormKind::kDayAugment: {
      const auto base = structured_bound(norm.child(0), w, truncation, options);
      if (!base) return std::nullopt;
      const NormDescriptor day = NormDescriptor::day();
      const double day_hi = eval_day(w.truncate(truncation)) + harmonic_tail_bound(day, mass, truncation);
      return std::hypot(*base, day_hi);
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

double GrowthEnvelope::at(double length) const {
  return (coef + log_coef * std::log(length)) * std::pow(length, exponent);
}

double fundamental_function(const NormDescriptor& norm, Index length) {
  if (!norm.has_fundamental_function()) {
    throw EvaluationError("fundamental function requires a 1-symmetric norm");
  }
  if (length == 0) throw std::invalid_argument("fundamental function needs L >= 1");
  if (const auto phi = closed_form_phi(norm, static_cast<double>(length))) return *phi;
  return eval(norm, FiniteVector::constant(1, length));
}

GrowthEnvelope growth_envelope(const NormDescriptor& norm) {
  switch (norm.kind()) {
    case NormKind::kLp:
      return {1.0, 0.0, 1.0 / norm.parameter()};
    case NormKind::kSup:
      return {1.0, 0.0, 0.0};
    case NormKind::kL1:
      return {1.0, 0.0, 1.0};
    case NormKind::kDay:
      return {kDayCeiling, 0.0, 0.0};
    case NormKind::kLorentz:
      // H_L <= 1 + ln L
      return {1.0, 1.0, 0.0};
    case NormKind::kDayAugment: {
      const GrowthEnvelope b = growth_envelope(norm.child(0));
      return {b.coef + kDayCeiling, b.log_coef, std::max(b.exponent, 0.0)};
    }
    case NormKind::kDavis: {
      // Feasible splits z = 0 and y = 0 give phi <= m phi_E and phi <= phi_F / m.
      const double m = norm.parameter();
      GrowthEnvelope e = growth_envelope(norm.child(0));
      GrowthEnvelope f = growth_envelope(norm.child(1));
      e = {m * e.coef, m * e.log_coef, e.exponent};
      f = {f.coef / m, f.log_coef / m, f.exponent};
      if (e.exponent != f.exponent) return e.exponent < f.exponent ? e : f;
      if (e.log_coef != f.log_coef) return e.log_coef < f.log_coef ? e : f;
      return e.coef <= f.coef ? e : f;
    }
    case NormKind::kYSpace: {
      // ||1_L||_{m_n} <= phi_F(L) / m_n and sum_n 1/m_n is the reciprocal tail at 0.
      const double u = unit_vector_bound(norm.child(2)) * DavisParams{norm.m_rule()}.reciprocal_tail(0);
      const GrowthEnvelope f = growth_envelope(norm.child(1));
      if (!std::isfinite(u)) return {1.0, 0.0, kInf};
      return {u * f.coef, u * f.log_coef, f.exponent};
    }
    case NormKind::kSymmetric2R: {
      const GrowthEnvelope b = growth_envelope(norm.child(0));
      if (!b.summable()) return {1.0, 0.0, kInf};
      // ||hat(1_L)|| <= phi(L) + sum_k 2^{-k} phi(2^k L).
      const double r = std::exp2(b.exponent - 1.0);
      const double head = 1.0 + 1.0 / (1.0 - r);
      return {b.coef * head + b.log_coef * std::numbers::ln2 * r / ((1.0 - r) * (1.0 - r)) + kDayCeiling,
              b.log_coef * head, b.exponent};
    }
    case NormKind::kTsirelson:
    case NormKind::kStrictlyConvex:
    case NormKind::kCustom:
      break;
  }
  return {1.0, 0.0, kInf};
}

double unit_vector_bound(const NormDescriptor& norm) {
  switch (norm.kind()) {
    case NormKind::kLp:
    case NormKind::kSup:
    case NormKind::kL1:
    case NormKind::kLorentz:
    case NormKind::kTsirelson:
      return 1.0;
    case NormKind::kDay:
      return 0.5;
    case NormKind::kDayAugment:
      return std::hypot(unit_vector_bound(norm.child(0)), 0.5);
    case NormKind::kStrictlyConvex:
      return unit_vector_bound(norm.child(0)) + 0.25;
    case NormKind::kDavis: {
      const double m = norm.parameter();
      return std::min(m * unit_vector_bound(norm.child(0)), unit_vector_bound(norm.child(1)) / m);
    }
    case NormKind::kYSpace:
      return unit_vector_bound(norm.child(2)) * unit_vector_bound(norm.child(1)) *
             DavisParams{norm.m_rule()}.reciprocal_tail(0);
    case NormKind::kSymmetric2R: {
      // hat(e_n) = (1, 1/2, 1/3, ...) for every n.
      const NormDescriptor& base = norm.child(0);
      const double hat = unit_vector_bound(base) + harmonic_tail_bound(base, 1.0, 1);
      return std::hypot(hat, 0.5);
    }
    case NormKind::kCustom:
      break;
  }
  return kInf;
}

double harmonic_tail_bound(const NormDescriptor& norm, double tail_mass, Index first_block) {
  if (tail_mass == 0.0) return 0.0;
  if (first_block == 0) throw std::invalid_argument("tail blocks start at M >= 1");
  const GrowthEnvelope env = growth_envelope(norm);
  if (!env.summable()) return kInf;

  // Block lengths L_k = 2^k M evaluated directly while below the limit.
  std::vector<double> terms;
  double length = static_cast<double>(first_block);
  if (closed_form_phi(norm, length)) {
    while (length < kDirectBlockLimit) {
      terms.push_back(tail_mass / length * *closed_form_phi(norm, length));
      length *= 2.0;
    }
  }
  // Accumulate from the far end so the sum for 2M is a prefix of the
  // computation for M.
  double sum = envelope_tail(env, tail_mass, length);
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) sum += *it;
  return sum;
}

IntervalValue eval_tailed(const NormDescriptor& norm, const TailedVector& w, Index truncation,
                          const EvalOptions& options) {
  if (!norm.is_1_unconditional() || !norm.is_1_symmetric()) {
    throw EvaluationError("tailed evaluation requires a 1-unconditional, 1-symmetric norm");
  }
  if (truncation < w.head_end() || truncation == 0) {
    throw std::invalid_argument("truncation index must cover the head");
  }
  const IntervalValue head = enclose(norm, w.truncate(truncation), options);
  const double tail = harmonic_tail_bound(norm, w.tail_mass(), truncation);
  if (tail == 0.0) return head;
  if (!std::isfinite(tail)) return IntervalValue::unbounded_above(head.lo());
  double hi = head.hi() + tail;
  if (const auto bound = structured_bound(norm, w, truncation, options)) hi = std::min(hi, std::max(*bound, head.hi()));
  return IntervalValue(head.lo(), hi).outward();
}

}  // namespace seqnorm
