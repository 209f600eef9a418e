#include "generators.hpp"

#include <algorithm>
#include <numeric>

namespace seqnorm::testing {

double Gen::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

std::size_t Gen::integer(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

bool Gen::coin() { return std::bernoulli_distribution(0.5)(rng_); }

namespace {

std::vector<Index> distinct_indices(std::mt19937_64& rng, std::size_t count, Index max_index) {
  std::vector<Index> all(max_index);
  std::iota(all.begin(), all.end(), Index{1});
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min<std::size_t>(count, all.size()));
  return all;
}

}  // namespace

FiniteVector Gen::vector(std::size_t max_support, Index max_index, double bound) {
  std::vector<Entry> entries;
  for (Index i : distinct_indices(rng_, integer(1, max_support), max_index)) {
    entries.push_back({i, uniform(-bound, bound)});
  }
  return FiniteVector::from_entries(std::move(entries));
}

FiniteVector Gen::dyadic_vector(std::size_t max_support, Index max_index, int bound) {
  std::vector<Entry> entries;
  for (Index i : distinct_indices(rng_, integer(1, max_support), max_index)) {
    int k = 0;
    while (k == 0) k = static_cast<int>(integer(0, 8 * bound)) - 4 * bound;
    entries.push_back({i, k / 4.0});
  }
  return FiniteVector::from_entries(std::move(entries));
}

FinitePermutation Gen::permutation(Index max_index) {
  std::vector<Index> domain(max_index);
  std::iota(domain.begin(), domain.end(), Index{1});
  std::vector<Index> image = domain;
  std::shuffle(image.begin(), image.end(), rng_);
  return FinitePermutation::from_images(domain, image);
}

SignPattern Gen::signs(Index max_index) {
  std::map<Index, int> s;
  for (Index i = 1; i <= max_index; ++i) s[i] = coin() ? 1 : -1;
  return SignPattern(std::move(s));
}

NormDescriptor Gen::descriptor(int depth) {
  const std::size_t choice = integer(0, depth <= 0 ? 5 : 10);
  switch (choice) {
    case 0:
      return NormDescriptor::lp(1.0 + std::exp2(uniform(-20.0, 6.0)));
    case 1:
      return NormDescriptor::sup();
    case 2:
      return NormDescriptor::l1();
    case 3:
      return NormDescriptor::day();
    case 4:
      return NormDescriptor::lorentz();
    case 5:
      return NormDescriptor::tsirelson();
    case 6:
      return NormDescriptor::day_augment(descriptor(depth - 1));
    case 7:
      return NormDescriptor::strictly_convex(descriptor(depth - 1));
    case 8:
      return NormDescriptor::davis(descriptor(depth - 1), descriptor(depth - 1), std::exp2(uniform(-30.0, 30.0)));
    case 9:
      return NormDescriptor::y_space(descriptor(depth - 1), descriptor(depth - 1), descriptor(depth - 1));
    default:
      return NormDescriptor::symmetric_2r(descriptor(depth - 1));
  }
}

RationalVector to_rational(const FiniteVector& v) {
  RationalVector out;
  for (const Entry& e : v.entries()) {
    // Dyadic inputs: scale to an integer numerator exactly.
    double value = e.value;
    Rational scale = 1;
    while (value != std::floor(value)) {
      value *= 2.0;
      scale *= 2;
    }
    out.emplace_back(e.index, Rational(static_cast<long long>(value)) / scale);
  }
  return out;
}

}  // namespace seqnorm::testing
