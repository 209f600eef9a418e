#include "seqnorm/vectors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

namespace seqnorm {

namespace {

std::vector<Entry> canonicalize(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.index < b.index; });
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (entries[k].index == 0) throw std::invalid_argument("vector indices are 1-based");
    if (k > 0 && entries[k].index == entries[k - 1].index) {
      throw std::invalid_argument("duplicate index " + std::to_string(entries[k].index));
    }
    if (!std::isfinite(entries[k].value)) throw std::invalid_argument("non-finite coefficient");
  }
  std::erase_if(entries, [](const Entry& e) { return e.value == 0.0; });
  return entries;
}

// Merges two canonical entry lists with op applied to matching coefficients.
template <typename Op>
std::vector<Entry> merge(std::span<const Entry> a, std::span<const Entry> b, Op op) {
  std::vector<Entry> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    Entry e;
    if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
      e = {a[i].index, op(a[i].value, 0.0)};
      ++i;
    } else if (i == a.size() || b[j].index < a[i].index) {
      e = {b[j].index, op(0.0, b[j].value)};
      ++j;
    } else {
      e = {a[i].index, op(a[i].value, b[j].value)};
      ++i;
      ++j;
    }
    if (e.value != 0.0) out.push_back(e);
  }
  return out;
}

bool le_with_slack(double lhs, double rhs, double rel_tol, double abs_tol) {
  return lhs <= rhs + abs_tol + rel_tol * std::abs(rhs);
}

}  // namespace

FiniteVector FiniteVector::from_entries(std::vector<Entry> entries) {
  return FiniteVector(canonicalize(std::move(entries)));
}

FiniteVector FiniteVector::from_dense(std::span<const double> values) {
  std::vector<Entry> entries;
  entries.reserve(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) entries.push_back({k + 1, values[k]});
  return from_entries(std::move(entries));
}

FiniteVector FiniteVector::unit(Index n, double value) { return from_entries({{n, value}}); }

FiniteVector FiniteVector::constant(Index first, Index last, double value) {
  if (first == 0 || first > last) throw std::invalid_argument("invalid constant block");
  std::vector<Entry> entries;
  entries.reserve(last - first + 1);
  for (Index n = first; n <= last; ++n) entries.push_back({n, value});
  return from_entries(std::move(entries));
}

double FiniteVector::operator[](Index n) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), n,
                             [](const Entry& e, Index i) { return e.index < i; });
  return (it != entries_.end() && it->index == n) ? it->value : 0.0;
}

double FiniteVector::sup_norm() const noexcept {
  double s = 0.0;
  for (const Entry& e : entries_) s = std::max(s, std::abs(e.value));
  return s;
}

std::vector<double> FiniteVector::dense() const {
  std::vector<double> out(max_index(), 0.0);
  for (const Entry& e : entries_) out[e.index - 1] = e.value;
  return out;
}

FiniteVector FiniteVector::abs() const {
  std::vector<Entry> out = entries_;
  for (Entry& e : out) e.value = std::abs(e.value);
  return FiniteVector(std::move(out));
}

std::uint64_t FiniteVector::canonical_hash() const noexcept {
  // splitmix64 finalizer folded over (index, bits(value)).
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::uint64_t h = 0x243f6a8885a308d3ULL;
  for (const Entry& e : entries_) {
    h = mix(h ^ e.index);
    h = mix(h ^ std::bit_cast<std::uint64_t>(e.value));
  }
  return h;
}

FiniteVector operator+(const FiniteVector& a, const FiniteVector& b) {
  return FiniteVector(merge(a.entries_, b.entries_, std::plus<>{}));
}

FiniteVector operator-(const FiniteVector& a, const FiniteVector& b) {
  return FiniteVector(merge(a.entries_, b.entries_, std::minus<>{}));
}

FiniteVector operator-(const FiniteVector& a) {
  std::vector<Entry> out = a.entries_;
  for (Entry& e : out) e.value = -e.value;
  return FiniteVector(std::move(out));
}

FiniteVector operator*(double s, const FiniteVector& a) {
  if (!std::isfinite(s)) throw std::invalid_argument("non-finite scalar");
  std::vector<Entry> out;
  out.reserve(a.entries_.size());
  for (const Entry& e : a.entries_) {
    const double v = s * e.value;
    if (v != 0.0) out.push_back({e.index, v});
  }
  return FiniteVector(std::move(out));
}

SortedVector::SortedVector(std::vector<double> values) : values_(std::move(values)) {
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (!(values_[k] >= 0.0)) throw std::invalid_argument("sorted vector entries must be >= 0");
    if (k > 0 && values_[k] > values_[k - 1]) {
      throw std::invalid_argument("sorted vector must be non-increasing");
    }
  }
}

FiniteVector SortedVector::to_vector() const { return FiniteVector::from_dense(values_); }

TailedVector::TailedVector(Index start, std::vector<double> head, double tail_mass)
    : start_(start), head_(std::move(head)), tail_mass_(tail_mass) {
  if (start_ == 0) throw std::invalid_argument("tailed vector start is 1-based");
  if (!(tail_mass_ >= 0.0) || !std::isfinite(tail_mass_)) {
    throw std::invalid_argument("tail mass must be finite and >= 0");
  }
  // Cesaro averages are non-increasing in exact arithmetic; allow rounding
  // noise of a few ulps.
  constexpr double kSlack = 1e-12;
  for (std::size_t k = 0; k < head_.size(); ++k) {
    if (!(head_[k] >= 0.0)) throw std::invalid_argument("tailed vector head must be >= 0");
    if (k > 0 && head_[k] > head_[k - 1] * (1.0 + kSlack)) {
      throw std::invalid_argument("tailed vector head must be non-increasing");
    }
  }
  if (!head_.empty()) {
    const double first_tail = tail_mass_ / static_cast<double>(head_end() + 1);
    if (first_tail > head_.back() * (1.0 + kSlack)) {
      throw std::invalid_argument("tail exceeds last head value");
    }
  }
}

double TailedVector::at(Index n) const {
  if (n < start_) return 0.0;
  if (n - start_ < head_.size()) return head_[n - start_];
  return tail_mass_ / static_cast<double>(n);
}

FiniteVector TailedVector::truncate(Index last) const {
  std::vector<Entry> entries;
  if (last >= start_) {
    entries.reserve(last - start_ + 1);
    for (Index n = start_; n <= last; ++n) entries.push_back({n, at(n)});
  }
  return FiniteVector::from_entries(std::move(entries));
}

FinitePermutation::FinitePermutation(std::map<Index, Index> mapping) : mapping_(std::move(mapping)) {
  std::set<Index> image;
  for (const auto& [from, to] : mapping_) {
    if (from == 0 || to == 0) throw std::invalid_argument("permutation indices are 1-based");
    if (!mapping_.contains(to)) throw std::invalid_argument("permutation leaves its domain");
    if (!image.insert(to).second) throw std::invalid_argument("permutation is not injective");
  }
  std::erase_if(mapping_, [](const auto& kv) { return kv.first == kv.second; });
}

FinitePermutation FinitePermutation::transposition(Index i, Index j) {
  if (i == j) return FinitePermutation{};
  return FinitePermutation({{i, j}, {j, i}});
}

FinitePermutation FinitePermutation::from_images(std::span<const Index> domain,
                                                 std::span<const Index> image) {
  if (domain.size() != image.size()) throw std::invalid_argument("domain/image size mismatch");
  std::map<Index, Index> mapping;
  for (std::size_t k = 0; k < domain.size(); ++k) {
    if (!mapping.emplace(domain[k], image[k]).second) {
      throw std::invalid_argument("duplicate index in permutation domain");
    }
  }
  return FinitePermutation(std::move(mapping));
}

Index FinitePermutation::operator()(Index n) const {
  auto it = mapping_.find(n);
  return it == mapping_.end() ? n : it->second;
}

SignPattern::SignPattern(std::map<Index, int> signs) : signs_(std::move(signs)) {
  for (const auto& [n, s] : signs_) {
    if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
  }
}

int SignPattern::operator()(Index n) const {
  auto it = signs_.find(n);
  return it == signs_.end() ? 1 : it->second;
}

SortedVector decreasing_rearrangement(const FiniteVector& v) {
  std::vector<double> values;
  values.reserve(v.support_size());
  for (const Entry& e : v.entries()) values.push_back(std::abs(e.value));
  std::sort(values.begin(), values.end(), std::greater<>{});
  return SortedVector(std::move(values));
}

FiniteVector apply_permutation(const FiniteVector& v, const FinitePermutation& sigma) {
  std::vector<Entry> out;
  out.reserve(v.support_size());
  for (const Entry& e : v.entries()) out.push_back({sigma(e.index), e.value});
  return FiniteVector::from_entries(std::move(out));
}

FiniteVector apply_signs(const FiniteVector& v, const SignPattern& eps) {
  std::vector<Entry> out;
  out.reserve(v.support_size());
  for (const Entry& e : v.entries()) out.push_back({e.index, eps(e.index) * e.value});
  return FiniteVector::from_entries(std::move(out));
}

FiniteVector dilate(const FiniteVector& v, Index m) {
  if (m == 0) throw std::invalid_argument("dilation factor must be >= 1");
  if (!v.is_zero() && v.max_index() > kUnbounded / m) throw std::overflow_error("dilation overflows index");
  std::vector<Entry> out;
  out.reserve(v.support_size() * m);
  for (const Entry& e : v.entries()) {
    const Index first = (e.index - 1) * m + 1;
    for (Index j = 0; j < m; ++j) out.push_back({first + j, e.value});
  }
  return FiniteVector::from_entries(std::move(out));
}

FiniteVector restrict(const FiniteVector& v, Index first, Index last) {
  if (first > last) throw std::invalid_argument("restriction interval has first > last");
  std::vector<Entry> out;
  for (const Entry& e : v.entries()) {
    if (e.index >= first && e.index <= last) out.push_back(e);
  }
  return FiniteVector::from_entries(std::move(out));
}

TailedVector restrict(const TailedVector& w, Index first, Index last) {
  if (first > last) throw std::invalid_argument("restriction interval has first > last");
  const Index start = std::max(first, w.start());
  const auto head = w.head();
  if (last == kUnbounded) {
    const Index drop = start - w.start();
    std::vector<double> kept;
    if (drop < head.size()) kept.assign(head.begin() + static_cast<std::ptrdiff_t>(drop), head.end());
    return TailedVector(start, std::move(kept), w.tail_mass());
  }
  std::vector<double> values;
  if (start <= last) {
    values.reserve(last - start + 1);
    for (Index n = start; n <= last; ++n) values.push_back(w.at(n));
  }
  return TailedVector(start, std::move(values), 0.0);
}

TailedVector hat_transform(const FiniteVector& v) {
  const SortedVector sorted = decreasing_rearrangement(v);
  std::vector<double> head;
  head.reserve(sorted.size());
  double partial = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    partial += sorted[k];
    head.push_back(partial / static_cast<double>(k + 1));
  }
  return TailedVector(1, std::move(head), partial);
}

std::optional<Index> hat_pointwise_sum_bound(const FiniteVector& x, const FiniteVector& y,
                                             double rel_tol, double abs_tol) {
  const TailedVector hx = hat_transform(x);
  const TailedVector hy = hat_transform(y);
  const TailedVector hs = hat_transform(x + y);
  const Index last = std::max({hx.head_end(), hy.head_end(), hs.head_end()});
  for (Index n = 1; n <= last; ++n) {
    if (!le_with_slack(hs.at(n), hx.at(n) + hy.at(n), rel_tol, abs_tol)) return n;
  }
  // Past every head all three sequences are S/n.
  if (!le_with_slack(hs.tail_mass(), hx.tail_mass() + hy.tail_mass(), rel_tol, abs_tol)) {
    return last + 1;
  }
  return std::nullopt;
}

}  // namespace seqnorm
