#include "seqnorm/tsirelson.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace seqnorm {

namespace {

template <typename Scalar>
Scalar absolute(const Scalar& v) {
  return v < Scalar(0) ? Scalar(-v) : v;
}

// Dense 3-d table indexed [first][last][blocks].
template <typename Scalar>
class BlockTable {
 public:
  explicit BlockTable(std::size_t n) : n_(n), data_(n * n * (n + 1)) {}
  Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n_ + j) * (n_ + 1) + k]; }

 private:
  std::size_t n_;
  std::vector<Scalar> data_;
};

}  // namespace

template <typename Scalar>
Scalar tsirelson_norm(std::span<const std::pair<Index, Scalar>> entries) {
  std::vector<std::pair<Index, Scalar>> support;
  support.reserve(entries.size());
  for (const auto& [index, value] : entries) {
    if (index == 0) throw std::invalid_argument("vector indices are 1-based");
    if (value != Scalar(0)) support.emplace_back(index, absolute(value));
  }
  std::sort(support.begin(), support.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t k = 1; k < support.size(); ++k) {
    if (support[k].first == support[k - 1].first) throw std::invalid_argument("duplicate index");
  }
  const std::size_t n = support.size();
  if (n == 0) return Scalar(0);

  // norm[i][j]: norm of x restricted to support positions i..j.
  // best[s][j][k]: max over partitions of positions s..j into at most k
  // consecutive blocks of the sum of block norms (k <= j - s + 1).
  std::vector<Scalar> norm(n * n, Scalar(0));
  BlockTable<Scalar> best(n);
  auto cap = [&](std::size_t s, std::size_t j, Index admissible) {
    return static_cast<std::size_t>(std::min<Index>(admissible, j - s + 1));
  };

  for (std::size_t len = 1; len <= n; ++len) {
    for (std::size_t i = 0; i + len <= n; ++i) {
      const std::size_t j = i + len - 1;
      Scalar value(0);
      for (std::size_t t = i; t <= j; ++t) value = std::max(value, support[t].second);

      for (std::size_t s = i; s <= j; ++s) {
        const std::size_t k = cap(s, j, support[s].first);
        Scalar family(0);
        if (s > i) {
          family = best.at(s, j, k);
        } else if (k >= 2) {
          // The family starting at i must split into >= 2 blocks; a single
          // block equal to the whole range would only reproduce half of the
          // value being computed.
          for (std::size_t t = i; t < j; ++t) {
            family = std::max(family, Scalar(norm[i * n + t] + best.at(t + 1, j, std::min(k - 1, j - t))));
          }
        }
        value = std::max(value, Scalar(family / 2));
      }
      norm[i * n + j] = value;

      best.at(i, j, 1) = value;
      for (std::size_t k = 2; k <= len; ++k) {
        Scalar b = best.at(i, j, k - 1);
        for (std::size_t t = i; t < j; ++t) {
          b = std::max(b, Scalar(norm[i * n + t] + best.at(t + 1, j, std::min(k - 1, j - t))));
        }
        best.at(i, j, k) = b;
      }
    }
  }
  return norm[n - 1];
}

template double tsirelson_norm<double>(std::span<const std::pair<Index, double>>);
template Rational tsirelson_norm<Rational>(std::span<const std::pair<Index, Rational>>);

double eval_tsirelson(const FiniteVector& v) {
  std::vector<std::pair<Index, double>> entries;
  entries.reserve(v.support_size());
  for (const Entry& e : v.entries()) entries.emplace_back(e.index, e.value);
  return tsirelson_norm<double>(entries);
}

Rational eval_tsirelson_exact(const RationalVector& v) { return tsirelson_norm<Rational>(v); }

}  // namespace seqnorm
