#pragma once

// Finitely supported sequences and the operators acting on them: decreasing
// rearrangement, permutations, sign changes, dilations D_m, interval
// restriction and the Cesaro-average ("hat") transform with an exact
// harmonic tail.
//
// Indices are 1-based throughout: index n addresses the unit vector e_n.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace seqnorm {

using Index = std::uint64_t;

/// Upper end of an unbounded restriction interval [N, infinity).
inline constexpr Index kUnbounded = std::numeric_limits<Index>::max();

struct Entry {
  Index index;
  double value;

  bool operator==(const Entry&) const = default;
};

/// A finitely supported real sequence in canonical form: entries sorted by
/// index, no duplicate indices, no stored zeros.
class FiniteVector {
 public:
  FiniteVector() = default;

  /// Entries in any order; zeros are dropped. Duplicate indices throw
  /// std::invalid_argument, as does index 0.
  static FiniteVector from_entries(std::vector<Entry> entries);
  /// values[k] becomes the coefficient of e_{k+1}.
  static FiniteVector from_dense(std::span<const double> values);
  static FiniteVector unit(Index n, double value = 1.0);
  /// Constant vector value * (e_first + ... + e_last).
  static FiniteVector constant(Index first, Index last, double value = 1.0);

  double operator[](Index n) const;
  std::span<const Entry> entries() const noexcept { return entries_; }
  std::size_t support_size() const noexcept { return entries_.size(); }
  bool is_zero() const noexcept { return entries_.empty(); }
  /// 0 for the zero vector.
  Index max_index() const noexcept { return entries_.empty() ? 0 : entries_.back().index; }
  Index min_index() const noexcept { return entries_.empty() ? 0 : entries_.front().index; }

  double sup_norm() const noexcept;
  /// Dense coefficients for indices 1..max_index().
  std::vector<double> dense() const;
  /// Coordinatewise absolute value.
  FiniteVector abs() const;
  /// Stable 64-bit digest of the canonical entries, used to seed randomized
  /// searches deterministically.
  std::uint64_t canonical_hash() const noexcept;

  friend FiniteVector operator+(const FiniteVector& a, const FiniteVector& b);
  friend FiniteVector operator-(const FiniteVector& a, const FiniteVector& b);
  friend FiniteVector operator-(const FiniteVector& a);
  friend FiniteVector operator*(double s, const FiniteVector& a);

  bool operator==(const FiniteVector&) const = default;

 private:
  explicit FiniteVector(std::vector<Entry> canonical) : entries_(std::move(canonical)) {}

  std::vector<Entry> entries_;
};

/// Non-increasing list of nonnegative reals (a decreasing rearrangement).
class SortedVector {
 public:
  SortedVector() = default;
  /// Throws std::invalid_argument unless values are nonnegative and
  /// non-increasing.
  explicit SortedVector(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t k) const { return values_[k]; }
  /// As a FiniteVector on indices 1..size().
  FiniteVector to_vector() const;

  bool operator==(const SortedVector&) const = default;

 private:
  std::vector<double> values_;
};

/// Non-increasing nonnegative sequence that is zero before `start`, equal to
/// head[k] at index start + k, and exactly tail_mass / n at every index n
/// past the head.
class TailedVector {
 public:
  TailedVector() = default;
  TailedVector(Index start, std::vector<double> head, double tail_mass);

  Index start() const noexcept { return start_; }
  std::span<const double> head() const noexcept { return head_; }
  double tail_mass() const noexcept { return tail_mass_; }
  /// Last index covered by the head (start - 1 when the head is empty).
  Index head_end() const noexcept { return start_ + head_.size() - 1; }

  double at(Index n) const;
  /// Values on [start, last] as a finite vector.
  FiniteVector truncate(Index last) const;

  bool operator==(const TailedVector&) const = default;

 private:
  Index start_ = 1;
  std::vector<double> head_;
  double tail_mass_ = 0.0;
};

/// Bijection of a finite index set onto itself, identity elsewhere.
class FinitePermutation {
 public:
  FinitePermutation() = default;
  /// Throws std::invalid_argument if `mapping` is not a bijection of its key
  /// set onto itself.
  explicit FinitePermutation(std::map<Index, Index> mapping);

  static FinitePermutation transposition(Index i, Index j);
  /// The permutation sending domain[k] to image[k]; both must list the same
  /// set of indices.
  static FinitePermutation from_images(std::span<const Index> domain, std::span<const Index> image);

  Index operator()(Index n) const;
  const std::map<Index, Index>& mapping() const noexcept { return mapping_; }

 private:
  std::map<Index, Index> mapping_;
};

/// Choice of signs epsilon(n) in {+1, -1}; +1 wherever unspecified.
class SignPattern {
 public:
  SignPattern() = default;
  /// Values must be +1 or -1.
  explicit SignPattern(std::map<Index, int> signs);

  int operator()(Index n) const;
  const std::map<Index, int>& signs() const noexcept { return signs_; }

 private:
  std::map<Index, int> signs_;
};

SortedVector decreasing_rearrangement(const FiniteVector& v);

/// (sigma . v)(sigma(i)) = v(i).
FiniteVector apply_permutation(const FiniteVector& v, const FinitePermutation& sigma);
FiniteVector apply_signs(const FiniteVector& v, const SignPattern& eps);

/// D_m: copies coefficient v(n) onto indices (n-1)m+1 .. nm. Requires m >= 1.
FiniteVector dilate(const FiniteVector& v, Index m);

/// v . 1_[first, last]. Throws std::invalid_argument when first > last.
FiniteVector restrict(const FiniteVector& v, Index first, Index last = kUnbounded);
/// Restriction of a tailed vector. With last == kUnbounded the harmonic tail
/// is kept analytically; otherwise the result has an explicit head and no
/// tail.
TailedVector restrict(const TailedVector& w, Index first, Index last = kUnbounded);

/// x-hat(n) = (1/n) sum_{i<=n} x*(i). The head has length |supp(v)| and the
/// tail mass is sum_i x*(i).
TailedVector hat_transform(const FiniteVector& v);

/// Checks (x+y)-hat(n) <= x-hat(n) + y-hat(n) for every n, up to the given
/// relative/absolute slack. Indices past all three heads are covered by
/// comparing tail masses. Returns the first violating index, if any.
std::optional<Index> hat_pointwise_sum_bound(const FiniteVector& x, const FiniteVector& y,
                                             double rel_tol = 1e-9, double abs_tol = 1e-12);

}  // namespace seqnorm
