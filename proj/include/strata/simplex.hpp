#pragma once

#include <vector>

#include "strata/iet.hpp"

namespace strata {

struct SimplexResult {
  bool feasible = false;
  Rational objective;
  std::vector<Rational> x; // primal solution (structural variables)
  std::vector<Rational> y; // dual multipliers, one per constraint row
};

// max c.x subject to M x = b, x >= 0, solved exactly with Bland's rule.
// b may have any signs (rows are flipped internally).  The problem must be
// bounded; unboundedness is reported as an error.
SimplexResult simplex_max(const std::vector<std::vector<Rational>>& M,
                          const std::vector<Rational>& b, const std::vector<Rational>& c);

struct PositiveKernelResult {
  bool feasible = false;
  // Strictly positive solution of A x = 0 normalized to sum 1.
  std::vector<Rational> solution;
  // Otherwise a separating functional: w = A^T y + s * 1 (s the multiplier
  // of the normalization row) has every entry >= 0 ... see below; verified
  // so that w[e] >= 0 for all e with w != 0, proving no positive solution.
  std::vector<Rational> certificate_w;
  std::vector<Rational> certificate_y;
};

// Decides whether A x = 0 admits a strictly positive solution; exact.
// On success the witness is verified (A x = 0, x > 0, sum x = 1); on failure
// the returned w = A^T y is entrywise >= 0 and nonzero, so y gives a linear
// combination of the equations reading "a nonnegative, somewhere positive
// combination of the x_e equals zero".
PositiveKernelResult strictly_positive_kernel(const std::vector<std::vector<Rational>>& A);

} // namespace strata
