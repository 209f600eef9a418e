#pragma once

// Exact rational arithmetic for evaluators whose recursion only involves
// max, sums and halving.

#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "seqnorm/vectors.hpp"

namespace seqnorm {

using Rational = boost::multiprecision::cpp_rational;

/// Finitely supported rational sequence as (index, value) pairs; order and
/// zeros are normalized by the consumers.
using RationalVector = std::vector<std::pair<Index, Rational>>;

}  // namespace seqnorm
