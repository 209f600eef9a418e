#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace seqnorm {

/// Comparison slack for floating-point checks: a <= b passes when
/// a <= b + abs + rel * |b|.
struct Tolerance {
  double rel = 1e-9;
  double abs = 1e-12;

  bool le(double a, double b) const { return a <= b + abs + rel * std::abs(b); }
  bool eq(double a, double b) const { return le(a, b) && le(b, a); }
};

/// Certified enclosure [lo, hi] of a nonnegative quantity; hi may be +inf.
/// Exact values have lo == hi.
class IntervalValue {
 public:
  constexpr IntervalValue() = default;
  IntervalValue(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!(lo >= 0.0) || !(hi >= lo)) throw std::invalid_argument("interval requires 0 <= lo <= hi");
  }
  static IntervalValue exact(double v) { return {v, v}; }
  static IntervalValue unbounded_above(double lo) { return {lo, std::numeric_limits<double>::infinity()}; }

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double width() const noexcept { return hi_ - lo_; }
  bool is_exact() const noexcept { return lo_ == hi_; }
  bool is_bounded() const noexcept { return std::isfinite(hi_); }
  bool contains(double v) const noexcept { return lo_ <= v && v <= hi_; }
  /// [lo, hi] is a subset of other, allowing `eps` relative slack on both ends.
  bool within(const IntervalValue& other, double eps = 0.0) const noexcept {
    return lo_ >= other.lo_ * (1.0 - eps) && (hi_ <= other.hi_ * (1.0 + eps) || !other.is_bounded());
  }

  /// Inflate hi by a few ulps so that rounding in the upper-bound terms
  /// cannot exclude the true value. lo is a directly evaluated truncation and
  /// is left alone.
  IntervalValue outward() const {
    constexpr double kEps = 4.0 * std::numeric_limits<double>::epsilon();
    return {lo_, is_bounded() ? hi_ * (1.0 + kEps) + std::numeric_limits<double>::denorm_min() : hi_};
  }

  friend IntervalValue operator+(const IntervalValue& a, const IntervalValue& b) {
    return {a.lo_ + b.lo_, a.hi_ + b.hi_};
  }
  /// Nonnegative scaling.
  friend IntervalValue operator*(double s, const IntervalValue& a) {
    if (!(s >= 0.0)) throw std::invalid_argument("interval scaling requires s >= 0");
    return {s * a.lo_, s * a.hi_};
  }

  bool operator==(const IntervalValue&) const = default;

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

/// sqrt(a^2 + b^2) on enclosures; monotone in both arguments.
inline IntervalValue root_sum_square(const IntervalValue& a, const IntervalValue& b) {
  return {std::sqrt(a.lo() * a.lo() + b.lo() * b.lo()), std::sqrt(a.hi() * a.hi() + b.hi() * b.hi())};
}

}  // namespace seqnorm
