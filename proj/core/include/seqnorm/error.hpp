#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seqnorm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed space expression or vector text. `offset` is the byte position
/// of the offending token in the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A norm could not be evaluated on the given input (missing flags, divergent
/// tail, enumeration too large, ...).
class EvaluationError : public Error {
 public:
  using Error::Error;
};

class DivergentTailError : public EvaluationError {
 public:
  DivergentTailError() : EvaluationError("tail not summable") {}
};

/// The interpolation optimizer stopped before reaching its tolerance. The
/// true value lies in [lower, upper].
class ConvergenceError : public EvaluationError {
 public:
  ConvergenceError(double lower, double upper)
      : EvaluationError("interpolation optimizer did not converge"), lower_(lower), upper_(upper) {}

  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }

 private:
  double lower_;
  double upper_;
};

}  // namespace seqnorm
