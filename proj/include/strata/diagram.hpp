#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strata/simplex.hpp"
#include "strata/surface.hpp"

namespace strata {

// A separatrix diagram: a finite directed graph embedded in an oriented
// surface, given by the counterclockwise cyclic order of half-edge ends
// around each vertex.  Half-edges alternate between outgoing and incoming
// around every vertex, so vertices have even valence.  The boundary curves
// of a ribbon-graph thickening split into "positive" ones (traversed along
// the arrows) and "negative" ones (against the arrows); a pairing matches
// each positive curve with a negative one, one cylinder per pair.

enum class HalfDir { out, in };

struct HalfSlot {
  int half = 0; // half-edge id, 0-based; halves 2e and 2e+1 form edge e
  HalfDir dir = HalfDir::out;
  bool operator==(const HalfSlot&) const = default;
};

struct SeparatrixDiagram {
  // vertices[v] lists the half-edges around vertex v in ccw order
  std::vector<std::vector<HalfSlot>> vertices;
  // edges[e] = {outgoing half, incoming half}
  std::vector<std::pair<int, int>> edges;
  // pairing[c] = {positive boundary index, negative boundary index}
  std::vector<std::pair<int, int>> pairing;

  int num_half_edges() const { return 2 * static_cast<int>(edges.size()); }
  bool operator==(const SeparatrixDiagram&) const = default;
};

// Boundary structure computed from a valid diagram.
struct DiagramFaces {
  // each boundary is the cyclic list of half-edges it passes, in traversal
  // order, starting from its minimal half-edge id
  std::vector<std::vector<int>> boundaries;
  std::vector<bool> positive;     // sign per boundary
  std::vector<int> boundary_of;   // half-edge id -> boundary index
};

void validate_diagram(const SeparatrixDiagram& d);
DiagramFaces diagram_faces(const SeparatrixDiagram& d);

int cylinder_count(const SeparatrixDiagram& d);
// orders of the vertices: vertex of valence 2k+2 contributes k
std::vector<int> diagram_profile(const SeparatrixDiagram& d);
int diagram_genus(const SeparatrixDiagram& d);

// Reverse every arrow; swaps the roles of positive and negative boundaries.
SeparatrixDiagram reverse_arrows(const SeparatrixDiagram& d);

// Does a positive assignment of edge lengths exist making each paired pair
// of boundaries equally long?  On success `lengths` holds one witness; on
// failure `certificate` holds a nonnegative, nonzero vector w indexed by
// edges with sum_e w_e * (times e appears on positive boundaries - times on
// negative ones) = 0 pinning some edge length to zero.
struct RealizabilityResult {
  bool realizable = false;
  std::vector<Rational> lengths;
  std::vector<Rational> certificate;
};
RealizabilityResult realizability(const SeparatrixDiagram& d);

// The one-vertex, one-cylinder chain diagrams H(g), O(g), E(g) for g >= 2:
// same underlying graph (2g - 1 loops at a single 4g-2-valent vertex),
// distinguished by how the boundary curves are paired.
enum class CanonicalKind { H, O, E };
SeparatrixDiagram make_canonical(CanonicalKind kind, int genus);

// One-vertex diagrams only: detects the order-two rotational symmetry that
// characterizes the hyperelliptic diagrams.
bool is_hyperelliptic_diagram(const SeparatrixDiagram& d);

// --- surgeries -------------------------------------------------------------

// Attach a handle at vertex v: insert a small petal into the angular sector
// after slot a and another into the sector after slot b, pair the two new
// inner boundaries.  The two sectors must be of opposite type (one between
// in/out halves, one between out/in), i.e. a and b at odd separation.
// slot index k means the sector between vertices[v][k] and vertices[v][k+1]
// (cyclically); valence 0 vertices admit no insertion here.
SeparatrixDiagram bubble_handle(const SeparatrixDiagram& d, int v, int a, int b);

// Remove the handle carried by cylinder c, which must be bounded by two
// petals (length-1 boundaries) at the same vertex.  Returns the smaller
// diagram together with the integer angle m between the two petals measured
// on one side (the parity law for spin structures reads this angle).
struct ErasedHandle {
  SeparatrixDiagram diagram;
  int angle = 0;
};
ErasedHandle erase_handle(const SeparatrixDiagram& d, int c);

// Detach the petal pair of cylinder c and reattach it `steps` sectors
// further (counterclockwise) around its vertex.
SeparatrixDiagram rotate_handle(const SeparatrixDiagram& d, int c, int steps);

// Contract a non-loop edge, merging its endpoints.
SeparatrixDiagram contract_saddle_connection(const SeparatrixDiagram& d, int e);

// --- flat realization ------------------------------------------------------

// Build the square-tiled surface obtained by gluing one w x h cylinder per
// pair of boundaries, where w is the common integer length of the pair
// under `lengths` and the cylinder is reglued with the given integer twist.
SquareTiledSurface diagram_to_surface(const SeparatrixDiagram& d,
                                      const std::vector<int>& lengths,
                                      const std::vector<int>& heights,
                                      const std::vector<int>& twists);

std::string diagram_json(const SeparatrixDiagram& d);
SeparatrixDiagram diagram_from_json(const std::string& text);
std::string diagram_dot(const SeparatrixDiagram& d);

} // namespace strata
