#include "seqnorm/combinators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "seqnorm/davis.hpp"
#include "seqnorm/error.hpp"
#include "seqnorm/tail.hpp"

namespace seqnorm {

NormDescriptor day_augment(NormDescriptor base) { return NormDescriptor::day_augment(std::move(base)); }

NormDescriptor strictly_convex_unconditional_base(NormDescriptor base) {
  return NormDescriptor::strictly_convex(std::move(base));
}

namespace {

// ||y||_x given ||y|| already evaluated.
double shifted_norm_with(const NormDescriptor& base, const FiniteVector& x, const FiniteVector& y, double norm_y) {
  const FiniteVector scaled = norm_y * x;
  return eval(base, scaled + y) + eval(base, scaled - y);
}

struct Fraction {
  std::size_t num;
  std::size_t den;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Positive rationals p/q in lowest terms with p, q <= level, ascending.
std::vector<Fraction> coefficient_set(std::size_t level) {
  std::vector<Fraction> out;
  for (std::size_t q = 1; q <= level; ++q) {
    for (std::size_t p = 1; p <= level; ++p) {
      if (std::gcd(p, q) == 1) out.push_back({p, q});
    }
  }
  std::sort(out.begin(), out.end(), [](const Fraction& a, const Fraction& b) { return a.num * b.den < b.num * a.den; });
  return out;
}

// Number of classes of level <= L: every coordinate in 1..L is either 0 or
// one of the level-L coefficients. Saturates at 2^64 - 1.
std::uint64_t classes_up_to(std::size_t level) {
  if (level == 0) return 1;
  const std::uint64_t base = coefficient_set(level).size() + 1;
  std::uint64_t count = 1;
  for (std::size_t k = 0; k < level; ++k) {
    if (count > UINT64_MAX / base) return UINT64_MAX;
    count *= base;
  }
  return count;
}

class ClassWalker {
 public:
  ClassWalker(std::size_t level, std::uint64_t first_rank, std::uint64_t last_rank,
              std::vector<EquivalenceClass>& out)
      : level_(level), coefficients_(coefficient_set(level)), rank_(first_rank), last_(last_rank), out_(out) {}

  // Depth-first in lexicographic order; a prefix precedes its extensions.
  void walk() { extend(1, false); }

 private:
  bool extend(Index next_index, bool hits_level) {
    for (Index i = next_index; i <= level_; ++i) {
      for (const Fraction& c : coefficients_) {
        current_.emplace_back(i, c.value());
        const bool hits = hits_level || i == level_ || c.num == level_ || c.den == level_;
        if (hits) {
          if (rank_ > last_) return false;
          out_.push_back({current_, rank_, std::size_t{1} << current_.size()});
          ++rank_;
        }
        const bool more = extend(i + 1, hits);
        current_.pop_back();
        if (!more) return false;
      }
    }
    return true;
  }

  std::size_t level_;
  std::vector<Fraction> coefficients_;
  std::uint64_t rank_;
  std::uint64_t last_;
  std::vector<EquivalenceClass>& out_;
  std::vector<std::pair<Index, double>> current_;
};

// Largest rank whose weight q^rank is still >= min_weight.
std::uint64_t weight_cutoff(const EquivClassEnumeration& enumeration) {
  const double q = enumeration.weight_decay;
  if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("weight decay must lie in (0, 1)");
  if (!(enumeration.min_weight > 0.0)) return UINT64_MAX;
  const double r = std::floor(std::log(enumeration.min_weight) / std::log(q));
  return r >= 1.8e19 ? UINT64_MAX : static_cast<std::uint64_t>(std::max(r, 1.0));
}

}  // namespace

double shifted_norm(const NormDescriptor& base, const FiniteVector& x, const FiniteVector& y) {
  return shifted_norm_with(base, x, y, eval(base, y));
}

std::vector<EquivalenceClass> enumerate_classes(const EquivClassEnumeration& enumeration) {
  const std::uint64_t cutoff = weight_cutoff(enumeration);
  std::vector<EquivalenceClass> out;
  out.push_back({{}, 1, 1});
  for (std::size_t level = 1; level <= enumeration.level; ++level) {
    const std::uint64_t first = classes_up_to(level - 1) + 1;
    if (first > cutoff) break;
    ClassWalker(level, first, cutoff, out).walk();
  }
  return out;
}

IntervalValue os_unconditional_2r(const NormDescriptor& base, const EquivClassEnumeration& enumeration,
                                  const FiniteVector& v) {
  if (!base.is_1_unconditional() || !base.is_exact()) {
    throw EvaluationError("the summed shifted norm needs an exact 1-unconditional base");
  }
  if (v.is_zero()) return IntervalValue::exact(0.0);

  // Replacing v by eps.v permutes each class, so the sum only sees |v|.
  const FiniteVector x = v.abs();
  const double norm_x = eval(base, x);
  const double q = enumeration.weight_decay;
  const std::vector<EquivalenceClass> classes = enumerate_classes(enumeration);

  double sum = 0.0;
  for (const EquivalenceClass& cls : classes) {
    const double weight = std::pow(q, static_cast<double>(cls.rank));
    if (weight == 0.0) break;
    std::vector<Entry> entries;
    for (const auto& [index, value] : cls.representative) entries.push_back({index, value});
    const std::size_t support = entries.size();
    // All classes members share ||c|| = ||representative|| by unconditionality.
    const double norm_c = eval(base, FiniteVector::from_entries(entries));
    double class_sum = 0.0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << support); ++mask) {
      std::vector<Entry> signed_entries = entries;
      for (std::size_t k = 0; k < support; ++k) {
        if (mask & (std::uint64_t{1} << k)) signed_entries[k].value = -signed_entries[k].value;
      }
      class_sum += shifted_norm_with(base, FiniteVector::from_entries(std::move(signed_entries)), x, norm_x);
    }
    const double size = static_cast<double>(cls.size);
    sum += weight / (size * (1.0 + norm_c)) * class_sum;
  }

  // Each unvisited class contributes at most 2||v|| q^rank; the visited
  // ranks are exactly 1..R.
  const double visited = static_cast<double>(classes.back().rank);
  const double tail = 2.0 * norm_x * std::pow(q, visited + 1.0) / (1.0 - q);
  return IntervalValue(sum, sum + tail).outward();
}

double DavisParams::m(std::size_t n) const {
  if (n == 0) throw std::invalid_argument("m_n is defined for n >= 1");
  return std::ldexp(1.0, static_cast<int>(std::min<std::size_t>(n, 1023)));
}

double DavisParams::reciprocal_tail(std::size_t k) const {
  return std::ldexp(1.0, -static_cast<int>(std::min<std::size_t>(k, 1074)));
}

IntervalValue y_space_norm(const NormDescriptor& e, const NormDescriptor& f, const NormDescriptor& x_norm,
                           const DavisParams& params, const FiniteVector& x, std::size_t terms,
                           const EvalOptions& options) {
  if (!x_norm.is_1_unconditional()) throw EvaluationError("the outer norm of a Y-space must be 1-unconditional");
  if (x.is_zero()) return IntervalValue::exact(0.0);
  std::vector<Entry> coefficients;
  coefficients.reserve(terms);
  for (std::size_t n = 1; n <= terms; ++n) {
    coefficients.push_back({static_cast<Index>(n), davis_interpolation(e, f, params.m(n), x)});
  }
  const IntervalValue head = enclose(x_norm, FiniteVector::from_entries(std::move(coefficients)), options);
  const double tail = eval(f, x) * unit_vector_bound(x_norm) * params.reciprocal_tail(terms);
  if (!std::isfinite(tail)) return IntervalValue::unbounded_above(head.lo());
  return IntervalValue(head.lo(), head.hi() + tail).outward();
}

IntervalValue symmetric_2r_norm(const NormDescriptor& base, const FiniteVector& x, Index truncation,
                                const EvalOptions& options) {
  if (!growth_envelope(base).summable()) throw DivergentTailError();
  if (x.is_zero()) return IntervalValue::exact(0.0);
  const TailedVector hat = hat_transform(x);
  const IntervalValue hat_norm = eval_tailed(base, hat, std::max<Index>(truncation, hat.head_end()), options);
  if (!hat_norm.is_bounded()) throw DivergentTailError();
  return root_sum_square(hat_norm, IntervalValue::exact(eval_day(x))).outward();
}

}  // namespace seqnorm
