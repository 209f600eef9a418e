#pragma once

// Space expressions:
//
//   expr  := "lp(" num ")" | "sup" | "l1" | "day" | "lorentz" | "tsirelson"
//          | "dayAug(" expr ")" | "scBase(" expr ")"
//          | "davis(" expr "," expr "," num ")"
//          | "Y(" expr "," expr "," expr "," mrule ")"
//          | "sym2R(" expr ")"
//   mrule := "pow2"
//
// Whitespace between tokens is ignored. print_space emits numbers in their
// shortest round-trip form, so parse_space(print_space(d)) == d.

#include <string>
#include <string_view>

#include "seqnorm/norm.hpp"

namespace seqnorm {

/// Throws ParseError (with byte offset) on syntax, identifier, arity or
/// parameter-range errors.
NormDescriptor parse_space(std::string_view text);

/// Canonical text of a descriptor. Custom norms have no text form and throw
/// std::invalid_argument.
std::string print_space(const NormDescriptor& norm);

/// Shortest decimal string that reads back as exactly `value`.
std::string format_number(double value);

}  // namespace seqnorm
