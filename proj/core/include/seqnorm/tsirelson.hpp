#pragma once

// Figiel-Johnson Tsirelson norm on finitely supported sequences:
//
//   ||x||_T = max( ||x||_inf, 1/2 sup sum_j ||E_j x||_T )
//
// where the sup runs over admissible families k <= E_1 < E_2 < ... < E_k of
// successive finite sets. The evaluator is a bottom-up dynamic program over
// the intervals of the support; it relies on the norm being a lattice norm,
// so each E_j may be taken to be an interval of support points.

#include <span>
#include <utility>

#include "seqnorm/rational.hpp"
#include "seqnorm/vectors.hpp"

namespace seqnorm {

/// Scalar is double or Rational. Entries need not be sorted; zero entries
/// are ignored, duplicates are not allowed.
template <typename Scalar>
Scalar tsirelson_norm(std::span<const std::pair<Index, Scalar>> entries);

double eval_tsirelson(const FiniteVector& v);
Rational eval_tsirelson_exact(const RationalVector& v);

}  // namespace seqnorm
