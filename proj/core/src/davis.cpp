#include "seqnorm/davis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include <boost/math/tools/minima.hpp>

#include "seqnorm/error.hpp"

namespace seqnorm {

namespace {

// Norm of the nonnegative vector sum_k values[k] e_{index[k]}. The base
// symmetric kinds are evaluated in place; everything else goes through
// enclose().
double norm_of(const NormDescriptor& norm, std::span<const Index> index, std::vector<double>& values,
               std::vector<double>& scratch) {
  switch (norm.kind()) {
    case NormKind::kSup:
      return *std::max_element(values.begin(), values.end());
    case NormKind::kL1:
      return std::accumulate(values.begin(), values.end(), 0.0);
    case NormKind::kLp: {
      const double p = norm.parameter();
      if (p == 1.0) return std::accumulate(values.begin(), values.end(), 0.0);
      double sum = 0.0;
      for (double v : values) sum += p == 2.0 ? v * v : std::pow(v, p);
      return p == 2.0 ? std::sqrt(sum) : std::pow(sum, 1.0 / p);
    }
    case NormKind::kDay:
    case NormKind::kLorentz: {
      scratch = values;
      std::sort(scratch.begin(), scratch.end(), std::greater<>());
      double sum = 0.0;
      for (std::size_t k = 0; k < scratch.size(); ++k) {
        sum += norm.kind() == NormKind::kDay ? std::ldexp(scratch[k] * scratch[k], -2 * static_cast<int>(k + 1))
                                             : scratch[k] / static_cast<double>(k + 1);
      }
      return norm.kind() == NormKind::kDay ? std::sqrt(sum) : sum;
    }
    default: {
      std::vector<Entry> entries;
      entries.reserve(values.size());
      for (std::size_t k = 0; k < values.size(); ++k) entries.push_back({index[k], values[k]});
      return enclose(norm, FiniteVector::from_entries(std::move(entries))).lo();
    }
  }
}

class Objective {
 public:
  Objective(const NormDescriptor& e, const NormDescriptor& f, double m, std::vector<Index> index,
            std::vector<double> a)
      : e_(e), f_(f), m_(m), index_(std::move(index)), a_(std::move(a)), y_(a_.size()), z_(a_.size()) {}

  std::size_t size() const noexcept { return a_.size(); }
  double m() const noexcept { return m_; }
  double a(std::size_t i) const { return a_[i]; }

  double operator()(const std::vector<double>& alpha) {
    for (std::size_t i = 0; i < a_.size(); ++i) {
      y_[i] = m_ * alpha[i] * a_[i];
      z_[i] = (1.0 - alpha[i]) * a_[i] / m_;
    }
    const double ey = norm_of(e_, index_, y_, scratch_);
    const double fz = norm_of(f_, index_, z_, scratch_);
    return std::sqrt(ey * ey + fz * fz);
  }

 private:
  const NormDescriptor& e_;
  const NormDescriptor& f_;
  double m_;
  std::vector<Index> index_;
  std::vector<double> a_;
  std::vector<double> y_, z_, scratch_;
};

// Minimizes g on [lo, hi], endpoints included.
template <typename G>
std::pair<double, double> line_minimum(G&& g, double lo, double hi) {
  constexpr int kBits = 42;
  std::uintmax_t iterations = 200;
  auto [t, v] = boost::math::tools::brent_find_minima(g, lo, hi, kBits, iterations);
  for (double end : {lo, hi}) {
    const double ve = g(end);
    if (ve < v) {
      t = end;
      v = ve;
    }
  }
  return {t, v};
}

// Golden-section search down to a few ulps of the location, for convex g.
// Slower than Brent but exact at kinks, where Brent stops at sqrt(eps).
template <typename G>
std::pair<double, double> precise_line_minimum(G&& g, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo), d = lo + inv_phi * (hi - lo);
  double gc = g(c), gd = g(d);
  for (int it = 0; it < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * std::abs(hi); ++it) {
    if (gc <= gd) {
      hi = d;
      d = c;
      gd = gc;
      c = hi - inv_phi * (hi - lo);
      gc = g(c);
    } else {
      lo = c;
      c = d;
      gc = gd;
      d = lo + inv_phi * (hi - lo);
      gd = g(d);
    }
  }
  std::pair<double, double> best = gc <= gd ? std::pair{c, gc} : std::pair{d, gd};
  for (double end : {lo, hi}) {
    const double ve = g(end);
    if (ve < best.second) best = {end, ve};
  }
  return best;
}

class Descent {
 public:
  Descent(Objective& objective, const DavisOptions& options, std::mt19937_64& rng)
      : f_(objective), options_(options), rng_(rng) {}

  struct Result {
    std::vector<double> alpha;
    double value;
    std::size_t sweeps;
    bool converged;
    bool probe_rescued;
  };

  Result run(std::vector<double> alpha) {
    alpha_ = std::move(alpha);
    value_ = f_(alpha_);
    bool rescued = false;
    for (std::size_t sweep = 1; sweep <= options_.max_sweeps; ++sweep) {
      const double before = value_;
      coordinate_sweep();
      tie_moves();
      if (before - value_ > options_.tolerance * before) continue;
      if (!probe()) return {alpha_, value_, sweep, true, rescued};
      rescued = true;
    }
    return {alpha_, value_, options_.max_sweeps, false, rescued};
  }

 private:
  // Applies a candidate and keeps it if it lowers the objective.
  template <typename Build>
  void try_move(double t, double value, Build&& build) {
    if (!(value < value_)) return;
    std::vector<double> candidate = alpha_;
    build(candidate, t);
    const double check = f_(candidate);
    if (check < value_) {
      alpha_ = std::move(candidate);
      value_ = check;
    }
  }

  void coordinate_sweep() {
    std::vector<double> trial = alpha_;
    for (std::size_t i = 0; i < f_.size(); ++i) {
      trial = alpha_;
      auto g = [&](double t) {
        trial[i] = t;
        return f_(trial);
      };
      const auto [t, v] = line_minimum(g, 0.0, 1.0);
      try_move(t, v, [i](std::vector<double>& c, double s) { c[i] = s; });
    }
  }

  // Coordinates sharing the same |y| (or |z|) value are moved together,
  // keeping them tied. This is the only way to make progress on norms such
  // as sup where a single coordinate cannot lower a tied maximum.
  void tie_moves() {
    const std::size_t n = f_.size();
    if (n < 2) return;
    const double m = f_.m();
    for (int side = 0; side < 2; ++side) {
      std::vector<double> level(n);
      for (std::size_t i = 0; i < n; ++i) {
        level[i] = side == 0 ? m * alpha_[i] * f_.a(i) : (1.0 - alpha_[i]) * f_.a(i) / m;
      }
      std::vector<std::size_t> order(n);
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) { return level[p] < level[q]; });
      const double scale = level[order.back()];
      if (!(scale > 0.0)) continue;
      for (std::size_t start = 0; start < n;) {
        std::size_t stop = start + 1;
        while (stop < n && level[order[stop]] - level[order[stop - 1]] <= 1e-9 * scale) ++stop;
        if (stop - start >= 2) {
          const std::vector<std::size_t> group(order.begin() + start, order.begin() + stop);
          group_move(group, side);
        }
        start = stop;
      }
    }
  }

  void group_move(const std::vector<std::size_t>& group, int side) {
    const double m = f_.m();
    double top = 0.0;
    for (std::size_t i : group) top = std::max(top, side == 0 ? m * f_.a(i) : f_.a(i) / m);
    auto build = [&](std::vector<double>& c, double t) {
      for (std::size_t i : group) {
        const double alpha = side == 0 ? t / (m * f_.a(i)) : 1.0 - t * m / f_.a(i);
        c[i] = std::clamp(alpha, 0.0, 1.0);
      }
    };
    std::vector<double> trial = alpha_;
    auto g = [&](double t) {
      build(trial, t);
      return f_(trial);
    };
    const auto [t, v] = line_minimum(g, 0.0, top);
    try_move(t, v, build);
  }

  // Random projected line searches; true when one of them made significant
  // progress.
  bool probe() {
    std::normal_distribution<double> normal;
    bool improved = false;
    for (std::size_t k = 0; k < options_.probe_directions; ++k) {
      std::vector<double> d(f_.size());
      double scale = 0.0;
      for (double& di : d) {
        di = normal(rng_);
        scale = std::max(scale, std::abs(di));
      }
      if (!(scale > 0.0)) continue;
      for (double& di : d) di /= scale;
      const std::vector<double> base = alpha_;
      auto build = [&](std::vector<double>& c, double t) {
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::clamp(base[i] + t * d[i], 0.0, 1.0);
      };
      std::vector<double> trial = alpha_;
      auto g = [&](double t) {
        build(trial, t);
        return f_(trial);
      };
      const double before = value_;
      const auto [t, v] = line_minimum(g, -1.0, 1.0);
      try_move(t, v, build);
      if (before - value_ > options_.tolerance * before) improved = true;
    }
    return improved;
  }

  Objective& f_;
  const DavisOptions& options_;
  std::mt19937_64& rng_;
  std::vector<double> alpha_;
  double value_ = 0.0;
};

// With E = sup the best split under a cap s on y is y(i) = min(s, m a(i)),
// since taking more into y can only shrink z. With F = sup symmetrically
// z(i) = min(t, a(i) / m). The objective is convex in the cap.
Descent::Result level_search(Objective& f, bool cap_y) {
  const std::size_t n = f.size();
  const double m = f.m();
  double top = 0.0;
  for (std::size_t i = 0; i < n; ++i) top = std::max(top, cap_y ? m * f.a(i) : f.a(i) / m);
  std::vector<double> alpha(n);
  auto build = [&](double level) {
    for (std::size_t i = 0; i < n; ++i) {
      alpha[i] = cap_y ? std::min(1.0, level / (m * f.a(i))) : std::max(0.0, 1.0 - level * m / f.a(i));
    }
  };
  auto g = [&](double level) {
    build(level);
    return f(alpha);
  };
  const auto [level, value] = precise_line_minimum(g, 0.0, top);
  build(level);
  return {alpha, value, 1, true, false};
}

void require_davis_inputs(const NormDescriptor& e, const NormDescriptor& f, double m) {
  if (!(m > 0.0) || !std::isfinite(m)) throw std::invalid_argument("davis requires m > 0");
  if (!e.is_1_unconditional() || !f.is_1_unconditional()) {
    throw EvaluationError("davis interpolation requires 1-unconditional E and F");
  }
  if (!e.is_exact() || !f.is_exact()) {
    throw EvaluationError("davis interpolation requires E and F with exact evaluators");
  }
}

std::uint64_t mix(std::uint64_t h, double m) {
  std::uint64_t z = h ^ (std::bit_cast<std::uint64_t>(m) + 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

double davis_objective(const NormDescriptor& e, const NormDescriptor& f, double m, const FiniteVector& x,
                       const std::vector<double>& weights) {
  require_davis_inputs(e, f, m);
  if (weights.size() != x.support_size()) throw std::invalid_argument("one weight per support point");
  std::vector<Index> index;
  std::vector<double> a;
  for (const Entry& entry : x.entries()) {
    index.push_back(entry.index);
    a.push_back(std::abs(entry.value));
  }
  if (a.empty()) return 0.0;
  Objective objective(e, f, m, std::move(index), std::move(a));
  return objective(weights);
}

DavisSolution solve_davis(const NormDescriptor& e, const NormDescriptor& f, double m, const FiniteVector& x,
                          const DavisOptions& options) {
  require_davis_inputs(e, f, m);
  const std::size_t n = x.support_size();
  if (n == 0) return {};

  // With both norms symmetric the problem only depends on the decreasing
  // rearrangement; solving in that order makes the value exactly invariant
  // under permutations and sign changes.
  const bool symmetric = e.is_1_symmetric() && f.is_1_symmetric();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto entries = x.entries();
  if (symmetric) {
    std::stable_sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) {
      return std::abs(entries[p].value) > std::abs(entries[q].value);
    });
  }
  std::vector<Index> index(n);
  std::vector<double> a(n);
  std::vector<Entry> canonical;
  for (std::size_t k = 0; k < n; ++k) {
    index[k] = symmetric ? static_cast<Index>(k + 1) : entries[order[k]].index;
    a[k] = std::abs(entries[order[k]].value);
    canonical.push_back({index[k], a[k]});
  }
  Objective objective(e, f, m, index, a);
  std::mt19937_64 rng(mix(FiniteVector::from_entries(std::move(canonical)).canonical_hash(), m));
  if (e.kind() == NormKind::kSup || f.kind() == NormKind::kSup) {
    const Descent::Result r = level_search(objective, e.kind() == NormKind::kSup);
    DavisSolution solution{r.value, std::vector<double>(n), r.sweeps, false};
    for (std::size_t k = 0; k < n; ++k) solution.weights[order[k]] = r.alpha[k];
    return solution;
  }
  Descent descent(objective, options, rng);

  // The endpoint splits z = 0 and y = 0 bound the result by m||x||_E and
  // ||x||_F / m; descent starts from the better one.
  const std::vector<double> zeros(n, 0.0), ones(n, 1.0);
  const bool from_ones = objective(ones) < objective(zeros);
  Descent::Result best = descent.run(from_ones ? ones : zeros);
  std::size_t sweeps = best.sweeps;
  bool any_converged = best.converged;
  bool multi = false;

  if (best.probe_rescued || !best.converged) {
    multi = true;
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (std::size_t s = 0; s < options.multi_starts; ++s) {
      std::vector<double> start(n);
      for (double& v : start) v = uniform(rng);
      Descent::Result r = descent.run(std::move(start));
      sweeps += r.sweeps;
      any_converged = any_converged || r.converged;
      if (r.value < best.value) best = std::move(r);
    }
  }
  if (!any_converged) {
    throw ConvergenceError(enclose(e, x).lo() / (2.0 * m), best.value);
  }

  DavisSolution solution;
  solution.value = best.value;
  solution.sweeps = sweeps;
  solution.used_multi_start = multi;
  solution.weights.assign(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) solution.weights[order[k]] = best.alpha[k];
  return solution;
}

double davis_interpolation(const NormDescriptor& e, const NormDescriptor& f, double m, const FiniteVector& x,
                           const DavisOptions& options) {
  return solve_davis(e, f, m, x, options).value;
}

}  // namespace seqnorm
