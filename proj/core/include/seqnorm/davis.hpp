#pragma once

// Davis interpolation norm
//
//   ||x||_m = inf { (||y||_E^2 + ||z||_F^2)^{1/2} : x = y/m + m z }.
//
// For 1-unconditional E and F an optimal decomposition never has opposite
// signs at a coordinate, so it suffices to search the splits
// y(i) = m a(i) x(i), z(i) = (1 - a(i)) x(i) / m with a in [0, 1]^supp(x).
// The objective is convex in a; it is minimized by projected coordinate
// descent with Brent line searches, joint moves of tied coordinates,
// random-direction probes, and a multi-start fallback when the probes find
// descent that coordinate moves missed. When E or F is sup the optimal split
// is a one-parameter water-filling and is found by an exact 1-D search.

#include <cstddef>
#include <vector>

#include "seqnorm/norm.hpp"
#include "seqnorm/vectors.hpp"

namespace seqnorm {

struct DavisOptions {
  /// Relative improvement below which a sweep counts as converged.
  double tolerance = 1e-13;
  std::size_t max_sweeps = 400;
  /// Random directions probed after coordinate descent stalls.
  std::size_t probe_directions = 16;
  std::size_t multi_starts = 8;
};

struct DavisSolution {
  double value = 0.0;
  /// Split weights a(i), aligned with x.entries().
  std::vector<double> weights;
  std::size_t sweeps = 0;
  bool used_multi_start = false;
};

/// Objective (||y||_E^2 + ||z||_F^2)^{1/2} for the split given by `weights`.
double davis_objective(const NormDescriptor& e, const NormDescriptor& f, double m, const FiniteVector& x,
                       const std::vector<double>& weights);

DavisSolution solve_davis(const NormDescriptor& e, const NormDescriptor& f, double m, const FiniteVector& x,
                          const DavisOptions& options = {});

/// ||x||_m. E and F must be 1-unconditional with exact evaluators. Throws
/// ConvergenceError carrying [||x||_E / (2m), best value] if the optimizer
/// runs out of sweeps.
double davis_interpolation(const NormDescriptor& e, const NormDescriptor& f, double m, const FiniteVector& x,
                           const DavisOptions& options = {});

}  // namespace seqnorm
