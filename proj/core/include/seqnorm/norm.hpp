#pragma once

// Norm descriptors and base evaluators.
//
// A NormDescriptor is a finite tree: leaves are the base sequence norms
// (l_p, sup, l_1, Day, the harmonic Lorentz norm, Tsirelson) and inner nodes
// are renorming combinators. Every descriptor advertises whether the unit
// vector basis is 1-unconditional and/or 1-symmetric for it.

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "seqnorm/interval.hpp"
#include "seqnorm/vectors.hpp"

namespace seqnorm {

enum class NormKind {
  kLp,
  kSup,
  kL1,
  kDay,
  kLorentz,
  kTsirelson,
  kDayAugment,
  kStrictlyConvex,
  kDavis,
  kYSpace,
  kSymmetric2R,
  kCustom,
};

/// Rule generating the interpolation parameters m_n of a Y-space.
enum class MRule { kPow2 };

struct NormFlags {
  bool unconditional = false;
  bool symmetric = false;

  bool operator==(const NormFlags&) const = default;
};

using NormFunction = std::function<double(const FiniteVector&)>;

class NormDescriptor {
 public:
  /// 1 <= p < infinity; throws std::invalid_argument otherwise.
  static NormDescriptor lp(double p);
  static NormDescriptor sup();
  static NormDescriptor l1();
  static NormDescriptor day();
  static NormDescriptor lorentz();
  static NormDescriptor tsirelson();
  static NormDescriptor day_augment(NormDescriptor base);
  static NormDescriptor strictly_convex(NormDescriptor base);
  /// m > 0.
  static NormDescriptor davis(NormDescriptor e, NormDescriptor f, double m);
  static NormDescriptor y_space(NormDescriptor e, NormDescriptor f, NormDescriptor x,
                                MRule rule = MRule::kPow2);
  static NormDescriptor symmetric_2r(NormDescriptor base);
  /// Arbitrary evaluator with caller-asserted flags. Not expressible in the
  /// space grammar; used for experiments and tests.
  static NormDescriptor custom(std::string name, NormFunction fn, NormFlags flags);

  NormKind kind() const noexcept { return kind_; }
  /// p for l_p, m for Davis, 0 otherwise.
  double parameter() const noexcept { return parameter_; }
  MRule m_rule() const noexcept { return rule_; }
  std::span<const NormDescriptor> children() const noexcept { return children_; }
  const NormDescriptor& child(std::size_t k) const { return children_.at(k); }
  const std::string& custom_name() const noexcept { return name_; }
  const NormFunction& custom_function() const noexcept { return fn_; }

  NormFlags flags() const noexcept { return flags_; }
  bool is_1_unconditional() const noexcept { return flags_.unconditional; }
  bool is_1_symmetric() const noexcept { return flags_.symmetric; }
  bool has_fundamental_function() const noexcept { return flags_.symmetric; }
  /// True when evaluation yields a single value rather than an enclosure.
  bool is_exact() const noexcept;

  /// Structural equality; custom nodes compare by name.
  friend bool operator==(const NormDescriptor& a, const NormDescriptor& b);

 private:
  NormDescriptor(NormKind kind, double parameter, std::vector<NormDescriptor> children);

  NormKind kind_ = NormKind::kSup;
  double parameter_ = 0.0;
  MRule rule_ = MRule::kPow2;
  std::vector<NormDescriptor> children_;
  NormFlags flags_;
  std::string name_;
  NormFunction fn_;
};

/// Truncation knobs for norms whose value is an infinite sum.
struct EvalOptions {
  /// M: the hat-transform tail is summed explicitly up to index M.
  Index tail_truncation = 4096;
  /// K: number of interpolation terms summed explicitly in a Y-space norm.
  std::size_t series_terms = 24;
  /// Largest support for which the strictly convex base enumerates sign
  /// patterns of a base norm not flagged 1-unconditional.
  std::size_t sign_enumeration_cap = 20;
};

/// Value or certified enclosure of the norm of v.
IntervalValue enclose(const NormDescriptor& norm, const FiniteVector& v, const EvalOptions& options = {});

/// Value of the norm. Throws EvaluationError for descriptors that only admit
/// enclosures (Y-space, symmetric 2R).
double eval(const NormDescriptor& norm, const FiniteVector& v);

/// log of the norm. For l_p this is computed as log(sum |a|^p)/p, which keeps
/// dilation ratios exact by homogeneity.
double log_eval(const NormDescriptor& norm, const FiniteVector& v);

double eval_lp(const FiniteVector& v, double p);
double eval_sup(const FiniteVector& v);
double eval_l1(const FiniteVector& v);
/// (sum_n 4^{-n} a_n*^2)^{1/2}.
double eval_day(const FiniteVector& v);
/// sum_n a_n* / n.
double eval_lorentz_harmonic(const FiniteVector& v);

/// Sampling plan for estimate_symmetry_constant.
struct SymmetrySamplingPlan {
  std::size_t samples = 2000;
  Index max_index = 8;
  std::uint64_t seed = 1;
};

/// Lower estimate of the symmetry constant K: the largest observed ratio
/// ||eps . sigma . v|| / ||v||. Always >= 1.
double estimate_symmetry_constant(const NormFunction& norm, const SymmetrySamplingPlan& plan = {});
double estimate_symmetry_constant(const NormDescriptor& norm, const SymmetrySamplingPlan& plan = {});

}  // namespace seqnorm
