#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace seqnorm::testing {

double oracle_lp(const std::vector<double>& a, double p) {
  double s = 0.0;
  for (double v : a) s += std::pow(std::abs(v), p);
  return std::pow(s, 1.0 / p);
}

double oracle_sup(const std::vector<double>& a) {
  double s = 0.0;
  for (double v : a) s = std::max(s, std::abs(v));
  return s;
}

namespace {

std::vector<double> sorted_desc(const std::vector<double>& a) {
  std::vector<double> s;
  for (double v : a) s.push_back(std::abs(v));
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

}  // namespace

double oracle_day(const std::vector<double>& a) {
  const std::vector<double> s = sorted_desc(a);
  double sum = 0.0, w = 1.0;
  for (double v : s) {
    w /= 4.0;
    sum += w * v * v;
  }
  return std::sqrt(sum);
}

double oracle_lorentz(const std::vector<double>& a) {
  const std::vector<double> s = sorted_desc(a);
  double sum = 0.0;
  for (std::size_t k = 0; k < s.size(); ++k) sum += s[k] / static_cast<double>(k + 1);
  return sum;
}

std::vector<double> abs_values(const FiniteVector& v) {
  std::vector<double> out;
  for (const Entry& e : v.entries()) out.push_back(std::abs(e.value));
  return out;
}

namespace {

using Item = std::pair<Index, Rational>;

Rational brute(const std::vector<Item>& items);

// Extends the family `chosen` + `current` with items[from..] in every way
// (skip, join the current set, or open a new set) and records the best
// (1/2) sum_j ||E_j x|| over families of 2..limit sets.
void families(const std::vector<Item>& items, std::size_t from, std::vector<Item>& current,
              std::vector<std::vector<Item>>& chosen, Index limit, Rational& best) {
  if (from == items.size()) {
    std::vector<std::vector<Item>> sets = chosen;
    if (!current.empty()) sets.push_back(current);
    if (sets.size() < 2 || sets.size() > limit) return;
    Rational sum = 0;
    for (const auto& s : sets) sum += brute(s);
    best = std::max<Rational>(best, sum / 2);
    return;
  }
  const Item& it = items[from];
  // Skip the item.
  families(items, from + 1, current, chosen, limit, best);
  // Add it to the current set.
  current.push_back(it);
  families(items, from + 1, current, chosen, limit, best);
  current.pop_back();
  // Close the current set and start a new one with it.
  if (!current.empty()) {
    chosen.push_back(current);
    std::vector<Item> fresh{it};
    families(items, from + 1, fresh, chosen, limit, best);
    chosen.pop_back();
  }
}

Rational brute(const std::vector<Item>& items) {
  Rational best = 0;
  for (const Item& it : items) best = std::max<Rational>(best, abs(it.second));
  if (items.size() < 2) return best;
  // A single set never beats the sup term since ||E x|| / 2 < ||x||. The
  // first set's smallest element fixes the admissible family size.
  for (std::size_t first = 0; first < items.size(); ++first) {
    std::vector<Item> rest(items.begin() + static_cast<std::ptrdiff_t>(first) + 1, items.end());
    std::vector<Item> current{items[first]};
    std::vector<std::vector<Item>> chosen;
    families(rest, 0, current, chosen, items[first].first, best);
  }
  return best;
}

}  // namespace

Rational tsirelson_bruteforce(const RationalVector& v) {
  std::vector<Item> items;
  for (const auto& [i, value] : v) {
    if (value != 0) items.emplace_back(i, value);
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.first < b.first; });
  return brute(items);
}

double davis_grid(const DenseNorm& e, const DenseNorm& f, double m, const std::vector<double>& a,
                  std::size_t steps) {
  const std::size_t s = a.size();
  std::vector<std::size_t> k(s, 0);
  std::vector<double> y(s), z(s);
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    for (std::size_t i = 0; i < s; ++i) {
      const double alpha = static_cast<double>(k[i]) / static_cast<double>(steps);
      y[i] = m * alpha * a[i];
      z[i] = (1.0 - alpha) * a[i] / m;
    }
    best = std::min(best, std::hypot(e(y), f(z)));
    std::size_t i = 0;
    while (i < s && ++k[i] > steps) k[i++] = 0;
    if (i == s) break;
  }
  return best;
}

std::vector<double> oracle_hat(const FiniteVector& v, std::size_t length) {
  const std::vector<double> s = sorted_desc(abs_values(v));
  std::vector<double> out;
  double sum = 0.0;
  for (std::size_t n = 1; n <= length; ++n) {
    if (n <= s.size()) sum += s[n - 1];
    out.push_back(sum / static_cast<double>(n));
  }
  return out;
}

}  // namespace seqnorm::testing
