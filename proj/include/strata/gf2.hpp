#pragma once

#include <cstdint>
#include <vector>

namespace strata {

// Quadratic space over GF(2): a symmetric pairing with zero diagonal on K
// generators plus the values of a quadratic form on those generators; the
// form extends by q(x+y) = q(x) + q(y) + <x,y>.
struct QuadraticSpace {
  std::vector<std::vector<std::uint8_t>> pairing; // K x K, symmetric, zero diagonal
  std::vector<std::uint8_t> q_gen;                // K values

  std::uint8_t pair(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) const;
  std::uint8_t q(const std::vector<std::uint8_t>& a) const;
};

struct ArfResult {
  int arf = 0;  // 0 or 1
  int rank = 0; // rank of the pairing, always even
};

// Splits off hyperbolic pairs until only the radical is left; the form must
// vanish on the radical (otherwise it does not descend to the symplectic
// quotient and radical_obstruction is raised).
ArfResult arf_invariant(const QuadraticSpace& space);

} // namespace strata
