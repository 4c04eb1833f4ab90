#pragma once

#include <string>
#include <vector>

#include "strata/permutation.hpp"

namespace strata {

// Square tiled translation surface: unit squares 1..n, h(i) is the square to
// the right of i, v(i) the square above i.
struct SquareTiledSurface {
  std::vector<int> h, v; // 1-based images, index i-1 holds the image of i

  int n() const { return static_cast<int>(h.size()); }
  int right(int i) const { return h[static_cast<size_t>(i) - 1]; }
  int up(int i) const { return v[static_cast<size_t>(i) - 1]; }
};

// Checks both maps are bijections of {1..n} and the surface is connected.
void validate_surface(const SquareTiledSurface& s);

// Integer suspension of an irreducible nondegenerate permutation: a polygon
// with unit horizontal edge steps and even integer slopes, top edge j glued
// to bottom edge pi(j) by translation, cut into unit squares.  The result
// lies on the component of translation surfaces suspended over pi.
SquareTiledSurface suspend(const Permutation& pi);

// Degrees of the conical points (cycle length of the corner rotation minus
// one), descending; degree-0 entries are regular marked points and are
// dropped.  Cross-checked internally against the Euler characteristic.
std::vector<int> singularity_profile(const SquareTiledSurface& s);

int genus(const SquareTiledSurface& s);

// Index of a closed path of unit moves on the square grid of s, starting at
// `start`; `moves` uses E/N/W/S.  The path must close up and must not
// immediately backtrack.  Counts quarter turns (left positive) / 4.
int winding_number(const SquareTiledSurface& s, int start, const std::string& moves);

// Parity of the spin structure, computed from the geometry of s: quadratic
// form q(c) = index(c)+1 on a symplectic basis of fundamental cycles of the
// square adjacency graph, then the Arf invariant.  Requires all cone point
// degrees even; a nonzero index on a homologically trivial combination
// raises radical_obstruction.
int spin_parity_surface(const SquareTiledSurface& s);

// Same invariant straight from the permutation: the mod 2 intersection form
// is the skew matrix reduced mod 2 and every basis class has q = 1.
int spin_parity_perm(const Permutation& pi);

// {"n":..,"h":[..],"v":[..]} with 1-based images.
std::string origami_json(const SquareTiledSurface& s);
SquareTiledSurface origami_from_json(const std::string& text);

} // namespace strata
