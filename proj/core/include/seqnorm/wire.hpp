#pragma once

// JSON wire formats.
//
// Vectors: a dense array [a1, a2, ...] or a sparse array of [index, value]
// pairs. Writers always emit the canonical sparse form (sorted, zero-free).
//
// Descriptors: a tree of objects keyed by "kind", using the names of the
// space grammar, e.g. {"kind":"davis","E":{"kind":"sup"},"F":{"kind":"l1"},"m":2}.

#include <string>
#include <string_view>

#include "seqnorm/norm.hpp"
#include "seqnorm/vectors.hpp"

namespace seqnorm {

/// Throws ParseError on malformed JSON or an invalid vector.
FiniteVector vector_from_json(std::string_view text);
std::string vector_to_json(const FiniteVector& v);

/// Throws ParseError on malformed input.
NormDescriptor descriptor_from_json(std::string_view text);
/// Custom norms throw std::invalid_argument.
std::string descriptor_to_json(const NormDescriptor& norm);

}  // namespace seqnorm
