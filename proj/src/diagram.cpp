#include "strata/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <json.hpp>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "strata/errors.hpp"

namespace strata {

namespace {

struct SlotRef {
  int vertex = -1;
  int slot = -1;
};

struct Layout {
  const SeparatrixDiagram* d = nullptr;
  std::vector<SlotRef> at; // half id -> position in the vertex lists

  int valence(int v) const { return static_cast<int>(d->vertices[v].size()); }
  int half_at(int v, int s) const { return d->vertices[v][static_cast<size_t>(s)].half; }
  bool is_out(int h) const { return d->edges[static_cast<size_t>(h) / 2].first == h; }
  int next_ccw(int h) const {
    const SlotRef r = at[static_cast<size_t>(h)];
    return half_at(r.vertex, (r.slot + 1) % valence(r.vertex));
  }
  // boundary walk: follow the half-edge to its other end, then turn ccw
  int phi(int h) const { return next_ccw(h ^ 1); }
};

Layout check_structure(const SeparatrixDiagram& d) {
  require(!d.edges.empty(), errc::empty_input, "diagram has no edges");
  const int H = d.num_half_edges();
  for (size_t e = 0; e < d.edges.size(); ++e) {
    const auto [o, i] = d.edges[e];
    const auto [lo, hi] = std::minmax(o, i);
    require(lo == static_cast<int>(2 * e) && hi == static_cast<int>(2 * e + 1),
            errc::bad_parameters, "edge " + std::to_string(e) + " must own halves " +
                                      std::to_string(2 * e) + " and " + std::to_string(2 * e + 1));
  }
  Layout L;
  L.d = &d;
  L.at.assign(static_cast<size_t>(H), SlotRef{});
  for (size_t v = 0; v < d.vertices.size(); ++v) {
    const auto& ring = d.vertices[v];
    require(!ring.empty() && ring.size() % 2 == 0, errc::non_alternating_vertex,
            "vertex " + std::to_string(v) + " has odd or zero valence");
    for (size_t s = 0; s < ring.size(); ++s) {
      const int h = ring[s].half;
      require(h >= 0 && h < H, errc::dangling_half_edge,
              "half-edge id " + std::to_string(h) + " out of range");
      require(L.at[static_cast<size_t>(h)].vertex < 0, errc::dangling_half_edge,
              "half-edge " + std::to_string(h) + " listed twice");
      L.at[static_cast<size_t>(h)] = {static_cast<int>(v), static_cast<int>(s)};
      const bool out = d.edges[static_cast<size_t>(h) / 2].first == h;
      require(out == (ring[s].dir == HalfDir::out), errc::dangling_half_edge,
              "direction flag of half-edge " + std::to_string(h) + " disagrees with its edge");
      const HalfDir next = ring[(s + 1) % ring.size()].dir;
      require(next != ring[s].dir, errc::non_alternating_vertex,
              "vertex " + std::to_string(v) + " does not alternate in/out");
    }
  }
  for (int h = 0; h < H; ++h)
    require(L.at[static_cast<size_t>(h)].vertex >= 0, errc::dangling_half_edge,
            "half-edge " + std::to_string(h) + " attached to no vertex");
  // connectivity over vertices
  std::vector<char> seen(d.vertices.size(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (const auto& slot : d.vertices[static_cast<size_t>(v)]) {
      const int w = L.at[static_cast<size_t>(slot.half ^ 1)].vertex;
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        q.push(w);
      }
    }
  }
  require(std::find(seen.begin(), seen.end(), 0) == seen.end(), errc::disconnected,
          "diagram is not connected");
  return L;
}

DiagramFaces trace_faces(const SeparatrixDiagram& d, const Layout& L) {
  DiagramFaces f;
  f.boundary_of.assign(static_cast<size_t>(d.num_half_edges()), -1);
  for (int h0 = 0; h0 < d.num_half_edges(); ++h0) {
    if (f.boundary_of[static_cast<size_t>(h0)] >= 0) continue;
    const int idx = static_cast<int>(f.boundaries.size());
    std::vector<int> orbit;
    int h = h0;
    do {
      assert(L.is_out(h) == L.is_out(h0));
      f.boundary_of[static_cast<size_t>(h)] = idx;
      orbit.push_back(h);
      h = L.phi(h);
    } while (h != h0);
    f.boundaries.push_back(std::move(orbit));
    f.positive.push_back(L.is_out(h0));
  }
  return f;
}

void check_pairing(const SeparatrixDiagram& d, const DiagramFaces& f) {
  const int F = static_cast<int>(f.boundaries.size());
  const long pos = std::count(f.positive.begin(), f.positive.end(), true);
  require(2 * pos == F, errc::unbalanced_boundary,
          "positive and negative boundary counts differ");
  require(static_cast<long>(d.pairing.size()) == pos, errc::bad_pairing,
          "pairing must cover every boundary exactly once");
  std::vector<char> used(static_cast<size_t>(F), 0);
  for (const auto& [p, n] : d.pairing) {
    require(p >= 0 && p < F && n >= 0 && n < F, errc::bad_pairing,
            "pairing references a boundary that does not exist");
    require(f.positive[static_cast<size_t>(p)] && !f.positive[static_cast<size_t>(n)],
            errc::sign_mismatch_in_pairing,
            "each pair must join a positive boundary with a negative one");
    require(!used[static_cast<size_t>(p)] && !used[static_cast<size_t>(n)], errc::bad_pairing,
            "boundary paired twice");
    used[static_cast<size_t>(p)] = used[static_cast<size_t>(n)] = 1;
  }
}

// corner between consecutive rays: owner boundary of the sector that follows
// slot s counterclockwise, per vertex
std::vector<std::vector<int>> sector_owner(const SeparatrixDiagram& d, const Layout& L,
                                           const DiagramFaces& f) {
  std::vector<std::vector<int>> own(d.vertices.size());
  for (size_t v = 0; v < d.vertices.size(); ++v) own[v].assign(d.vertices[v].size(), -1);
  for (size_t b = 0; b < f.boundaries.size(); ++b)
    for (const int h : f.boundaries[b]) {
      const SlotRef r = L.at[static_cast<size_t>(h ^ 1)];
      own[static_cast<size_t>(r.vertex)][static_cast<size_t>(r.slot)] = static_cast<int>(b);
    }
  return own;
}

int edge_length_sum(const std::vector<int>& boundary, const std::vector<int>& lengths) {
  int s = 0;
  for (const int h : boundary) s += lengths[static_cast<size_t>(h) / 2];
  return s;
}

} // namespace

DiagramFaces diagram_faces(const SeparatrixDiagram& d) {
  const Layout L = check_structure(d);
  return trace_faces(d, L);
}

void validate_diagram(const SeparatrixDiagram& d) {
  const Layout L = check_structure(d);
  check_pairing(d, trace_faces(d, L));
}

int cylinder_count(const SeparatrixDiagram& d) {
  validate_diagram(d);
  return static_cast<int>(d.pairing.size());
}

std::vector<int> diagram_profile(const SeparatrixDiagram& d) {
  validate_diagram(d);
  std::vector<int> out;
  for (const auto& ring : d.vertices) {
    const int k = static_cast<int>(ring.size()) / 2 - 1;
    if (k > 0) out.push_back(k);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

int diagram_genus(const SeparatrixDiagram& d) {
  validate_diagram(d);
  const int chi = static_cast<int>(d.vertices.size()) - static_cast<int>(d.edges.size());
  assert(chi % 2 == 0 && chi <= 0);
  return (2 - chi) / 2;
}

SeparatrixDiagram reverse_arrows(const SeparatrixDiagram& d) {
  validate_diagram(d);
  SeparatrixDiagram r = d;
  for (auto& ring : r.vertices)
    for (auto& s : ring) s.dir = s.dir == HalfDir::out ? HalfDir::in : HalfDir::out;
  for (auto& e : r.edges) std::swap(e.first, e.second);
  for (auto& p : r.pairing) std::swap(p.first, p.second);
  validate_diagram(r);
  return r;
}

RealizabilityResult realizability(const SeparatrixDiagram& d) {
  validate_diagram(d);
  const DiagramFaces f = diagram_faces(d);
  const size_t E = d.edges.size();
  std::vector<std::vector<Rational>> A;
  for (const auto& [p, n] : d.pairing) {
    std::vector<Rational> row(E, 0);
    for (const int h : f.boundaries[static_cast<size_t>(p)]) row[static_cast<size_t>(h) / 2] += 1;
    for (const int h : f.boundaries[static_cast<size_t>(n)]) row[static_cast<size_t>(h) / 2] -= 1;
    A.push_back(std::move(row));
  }
  const PositiveKernelResult k = strictly_positive_kernel(A);
  RealizabilityResult out;
  out.realizable = k.feasible;
  out.lengths = k.solution;
  out.certificate = k.certificate_w;
  return out;
}

SeparatrixDiagram make_canonical(CanonicalKind kind, int genus) {
  const int least = kind == CanonicalKind::E ? 3 : 2;
  require(genus >= least, errc::bad_parameters,
          "this diagram family starts at genus " + std::to_string(least));
  const int g = genus;
  const int V = 4 * g - 2;
  // ordered ray pairs (out, in); rays 1..4g-2 counterclockwise from south
  std::vector<std::pair<int, int>> rays;
  rays.emplace_back(1, 2 * g);
  for (int i = 1; i <= g - 1; ++i) rays.emplace_back(2 * i + 1, 2 * i);
  for (int i = g + 1; i <= 2 * g - 1; ++i) rays.emplace_back(2 * i - 1, 2 * i);

  SeparatrixDiagram d;
  d.vertices.assign(1, std::vector<HalfSlot>(static_cast<size_t>(V)));
  for (size_t e = 0; e < rays.size(); ++e) {
    const int out = static_cast<int>(2 * e), in = out + 1;
    d.edges.emplace_back(out, in);
    d.vertices[0][static_cast<size_t>(rays[e].first - 1)] = {out, HalfDir::out};
    d.vertices[0][static_cast<size_t>(rays[e].second - 1)] = {in, HalfDir::in};
  }

  const Layout L = check_structure(d);
  const DiagramFaces f = trace_faces(d, L);
  const std::vector<int> owner = sector_owner(d, L, f)[0];

  // H pairs boundaries swapped by the central symmetry (half turn); O pairs
  // boundaries swapped by the reflection in the vertical axis; E starts from
  // the O pairing and re-pairs the four petals closest to the axis crosswise.
  const auto image = [&](int s) {
    return kind == CanonicalKind::H ? (s + 2 * g - 1) % V : (V - 1 - s);
  };
  std::map<int, int> mate;
  for (size_t b = 0; b < f.boundaries.size(); ++b) {
    if (!f.positive[b]) continue;
    int to = -1;
    for (const int h : f.boundaries[b]) {
      const int s = L.at[static_cast<size_t>(h ^ 1)].slot;
      const int t = owner[static_cast<size_t>(image(s))];
      assert(to < 0 || to == t);
      to = t;
    }
    assert(to >= 0 && !f.positive[static_cast<size_t>(to)]);
    mate[static_cast<int>(b)] = to;
  }
  if (kind == CanonicalKind::E) {
    const int p1 = owner[1], p2 = owner[3];           // petals r3 r2 and r5 r4
    const int n1 = owner[static_cast<size_t>(V - 4)]; // petal r[4g-5] r[4g-4]
    const int n2 = owner[static_cast<size_t>(V - 2)]; // petal r[4g-3] r[4g-2]
    assert(mate[p1] == n2 && mate[p2] == n1);
    mate[p1] = n1;
    mate[p2] = n2;
  }
  for (const auto& [p, n] : mate) d.pairing.emplace_back(p, n);
  validate_diagram(d);
  return d;
}

bool is_hyperelliptic_diagram(const SeparatrixDiagram& d) {
  validate_diagram(d);
  require(d.vertices.size() == 1, errc::bad_parameters,
          "hyperellipticity test is defined for one-vertex diagrams");
  const Layout L = check_structure(d);
  const auto& ring = d.vertices[0];
  const int V = static_cast<int>(ring.size());
  const int half_turn = V / 2;
  // the half turn must reverse every edge onto an edge...
  std::vector<int> edge_image(d.edges.size(), -1);
  for (size_t e = 0; e < d.edges.size(); ++e) {
    const int so = L.at[static_cast<size_t>(d.edges[e].first)].slot;
    const int si = L.at[static_cast<size_t>(d.edges[e].second)].slot;
    const int a = ring[static_cast<size_t>((so + half_turn) % V)].half;
    const int b = ring[static_cast<size_t>((si + half_turn) % V)].half;
    if (a / 2 != b / 2 || L.is_out(a) || !L.is_out(b)) return false;
    edge_image[e] = a / 2;
  }
  // ...and must exchange the two boundaries of every cylinder
  const DiagramFaces f = trace_faces(d, L);
  const std::vector<int> owner = sector_owner(d, L, f)[0];
  for (const auto& [p, n] : d.pairing)
    for (const int h : f.boundaries[static_cast<size_t>(p)]) {
      const int s = L.at[static_cast<size_t>(h ^ 1)].slot;
      if (owner[static_cast<size_t>((s + half_turn) % V)] != n) return false;
    }
  int swapped = 0;
  for (size_t e = 0; e < d.edges.size(); ++e)
    if (edge_image[e] != static_cast<int>(e)) ++swapped;
  return static_cast<int>(d.pairing.size()) == swapped / 2 + 1;
}

// --- surgeries -------------------------------------------------------------

namespace {

// petal = loop whose two rays are cyclically adjacent; inserting one into the
// sector after slot k keeps the alternation when the first inserted half
// continues the pattern
void insert_petal(std::vector<HalfSlot>& ring, int after, int out_half, int in_half) {
  const bool out_first = ring[static_cast<size_t>(after)].dir == HalfDir::in;
  const HalfSlot first{out_first ? out_half : in_half,
                       out_first ? HalfDir::out : HalfDir::in};
  const HalfSlot second{out_first ? in_half : out_half,
                        out_first ? HalfDir::in : HalfDir::out};
  ring.insert(ring.begin() + after + 1, {first, second});
}

struct PetalPair {
  int vertex = -1;
  int edge_neg = -1; // petal whose inner boundary is negative, at slots (neg_slot, neg_slot+1)
  int edge_pos = -1;
  int neg_slot = -1;
  int pos_slot = -1;
};

// the cylinder must be bounded by two length-one boundaries whose loops are
// petals at a common vertex
PetalPair locate_petal_pair(const SeparatrixDiagram& d, const Layout& L, const DiagramFaces& f,
                            int pair_index) {
  require(pair_index >= 0 && pair_index < static_cast<int>(d.pairing.size()), errc::bad_index,
          "no such cylinder");
  const auto [p, n] = d.pairing[static_cast<size_t>(pair_index)];
  const auto& pb = f.boundaries[static_cast<size_t>(p)];
  const auto& nb = f.boundaries[static_cast<size_t>(n)];
  require(pb.size() == 1 && nb.size() == 1, errc::not_a_petal_pair,
          "cylinder is not bounded by two petals");
  PetalPair out;
  out.edge_pos = pb[0] / 2;
  out.edge_neg = nb[0] / 2;
  require(out.edge_pos != out.edge_neg, errc::not_a_petal_pair,
          "cylinder is a bare loop, not a petal pair");
  // inner positive boundary {out half}: in half one slot earlier; inner
  // negative boundary {in half}: out half one slot earlier
  const SlotRef rp = L.at[static_cast<size_t>(pb[0] ^ 1)];
  const SlotRef rn = L.at[static_cast<size_t>(nb[0] ^ 1)];
  const SlotRef rp2 = L.at[static_cast<size_t>(pb[0])];
  const SlotRef rn2 = L.at[static_cast<size_t>(nb[0])];
  require(rp.vertex == rn.vertex, errc::not_a_petal_pair, "petals sit at different vertices");
  const int V = L.valence(rp.vertex);
  require(rp2.vertex == rp.vertex && rp2.slot == (rp.slot + 1) % V, errc::not_a_petal_pair,
          "positive loop is not a petal");
  require(rn2.vertex == rn.vertex && rn2.slot == (rn.slot + 1) % V, errc::not_a_petal_pair,
          "negative loop is not a petal");
  out.vertex = rp.vertex;
  out.pos_slot = rp.slot;
  out.neg_slot = rn.slot;
  return out;
}

// remove edges (renumbering halves) and the given slots of one vertex;
// dropped_faces maps old boundary indices of the kept pairs to new ones
SeparatrixDiagram strip_edges(const SeparatrixDiagram& d, const std::set<int>& dead_edges,
                              std::vector<int>& half_map) {
  SeparatrixDiagram out;
  std::vector<int> edge_map(d.edges.size(), -1);
  half_map.assign(static_cast<size_t>(d.num_half_edges()), -1);
  for (size_t e = 0; e < d.edges.size(); ++e) {
    if (dead_edges.count(static_cast<int>(e))) continue;
    const int ne = static_cast<int>(out.edges.size());
    edge_map[e] = ne;
    half_map[2 * e] = 2 * ne;
    half_map[2 * e + 1] = 2 * ne + 1;
    out.edges.emplace_back(half_map[static_cast<size_t>(d.edges[e].first)],
                           half_map[static_cast<size_t>(d.edges[e].second)]);
  }
  for (const auto& ring : d.vertices) {
    std::vector<HalfSlot> kept;
    for (const auto& s : ring)
      if (half_map[static_cast<size_t>(s.half)] >= 0)
        kept.push_back({half_map[static_cast<size_t>(s.half)], s.dir});
    if (!kept.empty()) out.vertices.push_back(std::move(kept));
  }
  return out;
}

// match boundaries of the new diagram to boundaries of the old one through
// the common (renumbered) half-edges, and carry the pairing across
std::vector<std::pair<int, int>> transport_pairing(
    const std::vector<std::pair<int, int>>& old_pairing, const DiagramFaces& old_faces,
    const DiagramFaces& new_faces, const std::vector<int>& half_map,
    const std::vector<std::pair<int, int>>& extra) {
  std::vector<int> face_map(old_faces.boundaries.size(), -1);
  for (size_t b = 0; b < old_faces.boundaries.size(); ++b)
    for (const int h : old_faces.boundaries[b]) {
      if (half_map[static_cast<size_t>(h)] < 0) continue;
      const int nb = new_faces.boundary_of[static_cast<size_t>(half_map[static_cast<size_t>(h)])];
      assert(face_map[b] < 0 || face_map[b] == nb);
      face_map[b] = nb;
    }
  std::vector<std::pair<int, int>> out;
  for (const auto& [p, n] : old_pairing) {
    if (face_map[static_cast<size_t>(p)] < 0) continue; // the erased cylinder
    assert(face_map[static_cast<size_t>(n)] >= 0);
    out.emplace_back(face_map[static_cast<size_t>(p)], face_map[static_cast<size_t>(n)]);
  }
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

} // namespace

SeparatrixDiagram bubble_handle(const SeparatrixDiagram& d, int v, int a, int b) {
  validate_diagram(d);
  require(v >= 0 && v < static_cast<int>(d.vertices.size()), errc::bad_index, "no such vertex");
  const int V = static_cast<int>(d.vertices[static_cast<size_t>(v)].size());
  require(a >= 0 && a < V && b >= 0 && b < V, errc::bad_sector, "sector index out of range");
  require(a != b, errc::same_sector, "the two petals need distinct sectors");
  const auto& ring = d.vertices[static_cast<size_t>(v)];
  require(ring[static_cast<size_t>(a)].dir != ring[static_cast<size_t>(b)].dir, errc::bad_sector,
          "petal insertion needs sectors of opposite type");

  SeparatrixDiagram out = d;
  const int E = static_cast<int>(d.edges.size());
  out.edges.emplace_back(2 * E, 2 * E + 1);         // petal for sector a
  out.edges.emplace_back(2 * E + 2, 2 * E + 3);     // petal for sector b
  auto& nring = out.vertices[static_cast<size_t>(v)];
  if (a > b) {
    insert_petal(nring, a, 2 * E, 2 * E + 1);
    insert_petal(nring, b, 2 * E + 2, 2 * E + 3);
  } else {
    insert_petal(nring, b, 2 * E + 2, 2 * E + 3);
    insert_petal(nring, a, 2 * E, 2 * E + 1);
  }

  const Layout L = check_structure(out);
  const DiagramFaces f = trace_faces(out, L);
  // the inner boundary of a petal is its single half one step inside
  const int inner_a = ring[static_cast<size_t>(a)].dir == HalfDir::in ? 2 * E + 1 : 2 * E;
  const int inner_b = ring[static_cast<size_t>(b)].dir == HalfDir::in ? 2 * E + 3 : 2 * E + 2;
  const int fa = f.boundary_of[static_cast<size_t>(inner_a)];
  const int fb = f.boundary_of[static_cast<size_t>(inner_b)];
  assert(f.boundaries[static_cast<size_t>(fa)].size() == 1);
  assert(f.boundaries[static_cast<size_t>(fb)].size() == 1);
  assert(f.positive[static_cast<size_t>(fa)] != f.positive[static_cast<size_t>(fb)]);
  out.pairing.emplace_back(f.positive[static_cast<size_t>(fa)] ? fa : fb,
                           f.positive[static_cast<size_t>(fa)] ? fb : fa);
  validate_diagram(out);
  return out;
}

ErasedHandle erase_handle(const SeparatrixDiagram& d, int c) {
  validate_diagram(d);
  const Layout L = check_structure(d);
  const DiagramFaces f = trace_faces(d, L);
  const PetalPair pp = locate_petal_pair(d, L, f, c);

  // angle swept between the petals on one side, counted in half turns: a
  // sector spans an angle of pi, and opposite petal types make the count even
  const int x = std::min(pp.pos_slot, pp.neg_slot);
  const int y = std::max(pp.pos_slot, pp.neg_slot);
  const int between = y - x - 1;
  assert(between % 2 == 0);

  std::vector<int> half_map;
  SeparatrixDiagram out = strip_edges(d, {pp.edge_pos, pp.edge_neg}, half_map);
  require(!out.edges.empty(), errc::not_a_petal_pair, "erasing would leave an empty diagram");
  const Layout L2 = check_structure(out);
  const DiagramFaces f2 = trace_faces(out, L2);
  out.pairing = transport_pairing(d.pairing, f, f2, half_map, {});
  validate_diagram(out);
  return {out, between / 2};
}

SeparatrixDiagram rotate_handle(const SeparatrixDiagram& d, int c, int steps) {
  validate_diagram(d);
  const Layout L = check_structure(d);
  const DiagramFaces f = trace_faces(d, L);
  const PetalPair pp = locate_petal_pair(d, L, f, c);
  const auto& ring = d.vertices[static_cast<size_t>(pp.vertex)];
  const int V = static_cast<int>(ring.size());
  require(V > 4, errc::not_a_petal_pair, "nothing to rotate around");

  const int x = std::min(pp.pos_slot, pp.neg_slot);
  const int y = std::max(pp.pos_slot, pp.neg_slot);
  const std::set<int> dead = {x, (x + 1) % V, y, (y + 1) % V};
  std::vector<HalfSlot> reduced;
  std::vector<int> orig_slot;
  for (int s = 0; s < V; ++s)
    if (!dead.count(s)) {
      reduced.push_back(ring[static_cast<size_t>(s)]);
      orig_slot.push_back(s);
    }
  const int R = static_cast<int>(reduced.size());
  // reduced index of the surviving slot just before a petal
  const auto anchor = [&](int slot) {
    for (int back = 1; back < V; ++back) {
      const int s = (slot - back + V) % V;
      if (!dead.count(s))
        return static_cast<int>(std::lower_bound(orig_slot.begin(), orig_slot.end(), s) -
                                orig_slot.begin());
    }
    assert(false);
    return 0;
  };
  const int shift = ((steps % R) + R) % R;
  const int a1 = (anchor(x) + shift) % R;
  const int a2 = (anchor(y) + shift) % R;
  const auto petal_halves = [&](int slot) {
    const int e = ring[static_cast<size_t>(slot)].half / 2;
    return d.edges[static_cast<size_t>(e)];
  };
  std::vector<HalfSlot> rebuilt = reduced;
  const auto ins = [&](int after, int slot) {
    const auto [oh, ih] = petal_halves(slot);
    insert_petal(rebuilt, after, oh, ih);
  };
  // keep the original cyclic order when both petals land in one sector
  if (a1 > a2) {
    ins(a1, x);
    ins(a2, y);
  } else if (a2 > a1) {
    ins(a2, y);
    ins(a1, x);
  } else {
    ins(a1, y);
    ins(a1, x);
  }

  SeparatrixDiagram out = d;
  out.vertices[static_cast<size_t>(pp.vertex)] = std::move(rebuilt);
  const Layout L2 = check_structure(out);
  const DiagramFaces f2 = trace_faces(out, L2);
  // match the untouched boundaries through the halves away from the petals
  std::vector<int> half_map(static_cast<size_t>(d.num_half_edges()));
  std::iota(half_map.begin(), half_map.end(), 0);
  for (const int e : {pp.edge_pos, pp.edge_neg})
    half_map[static_cast<size_t>(2 * e)] = half_map[static_cast<size_t>(2 * e + 1)] = -1;
  std::vector<std::pair<int, int>> keep;
  for (size_t i = 0; i < d.pairing.size(); ++i)
    if (static_cast<int>(i) != c) keep.push_back(d.pairing[i]);
  // an odd shift swaps the petal forms, so find the inner boundaries afresh
  int fp = -1, fn = -1;
  for (const int e : {pp.edge_pos, pp.edge_neg})
    for (const int h : {2 * e, 2 * e + 1}) {
      const int b = f2.boundary_of[static_cast<size_t>(h)];
      if (f2.boundaries[static_cast<size_t>(b)].size() == 1)
        (f2.positive[static_cast<size_t>(b)] ? fp : fn) = b;
    }
  assert(fp >= 0 && fn >= 0);
  out.pairing = transport_pairing(keep, f, f2, half_map, {{fp, fn}});
  // keep the rotated cylinder at its old position so a zero shift is a no-op
  std::rotate(out.pairing.begin() + c, out.pairing.end() - 1, out.pairing.end());
  validate_diagram(out);
  return out;
}

SeparatrixDiagram contract_saddle_connection(const SeparatrixDiagram& d, int e) {
  validate_diagram(d);
  require(e >= 0 && e < static_cast<int>(d.edges.size()), errc::bad_index, "no such edge");
  const Layout L = check_structure(d);
  const DiagramFaces f = trace_faces(d, L);
  const SlotRef ro = L.at[static_cast<size_t>(d.edges[static_cast<size_t>(e)].first)];
  const SlotRef ri = L.at[static_cast<size_t>(d.edges[static_cast<size_t>(e)].second)];
  require(ro.vertex != ri.vertex, errc::loop_edge, "contracting a loop is not defined");

  std::vector<int> half_map;
  std::set<int> dead = {e};
  SeparatrixDiagram stripped = strip_edges(d, dead, half_map);
  // strip_edges keeps the two vertices separate; splice them at the removed slots
  const auto splice = [&](const std::vector<HalfSlot>& ring, int cut) {
    std::vector<HalfSlot> outring;
    const int n = static_cast<int>(ring.size());
    for (int k = 1; k < n; ++k) {
      const auto& s = ring[static_cast<size_t>((cut + k) % n)];
      outring.push_back({half_map[static_cast<size_t>(s.half)], s.dir});
    }
    return outring;
  };
  std::vector<HalfSlot> merged = splice(d.vertices[static_cast<size_t>(ro.vertex)], ro.slot);
  const std::vector<HalfSlot> tail = splice(d.vertices[static_cast<size_t>(ri.vertex)], ri.slot);
  merged.insert(merged.end(), tail.begin(), tail.end());

  SeparatrixDiagram out;
  out.edges = stripped.edges;
  for (size_t v = 0; v < d.vertices.size(); ++v) {
    if (static_cast<int>(v) == ri.vertex) continue;
    if (static_cast<int>(v) == ro.vertex) {
      out.vertices.push_back(merged);
      continue;
    }
    std::vector<HalfSlot> ring;
    for (const auto& s : d.vertices[v]) ring.push_back({half_map[static_cast<size_t>(s.half)], s.dir});
    out.vertices.push_back(std::move(ring));
  }
  const Layout L2 = check_structure(out);
  const DiagramFaces f2 = trace_faces(out, L2);
  out.pairing = transport_pairing(d.pairing, f, f2, half_map, {});
  validate_diagram(out);
  return out;
}

// --- flat realization ------------------------------------------------------

SquareTiledSurface diagram_to_surface(const SeparatrixDiagram& d, const std::vector<int>& lengths,
                                      const std::vector<int>& heights,
                                      const std::vector<int>& twists) {
  validate_diagram(d);
  const size_t E = d.edges.size(), C = d.pairing.size();
  require(lengths.size() == E, errc::bad_lengths, "need one length per edge");
  require(heights.size() == C && twists.size() == C, errc::bad_lengths,
          "need one height and twist per cylinder");
  for (const int l : lengths) require(l > 0, errc::bad_lengths, "lengths must be positive");
  for (const int h : heights) require(h > 0, errc::bad_lengths, "heights must be positive");

  const DiagramFaces f = diagram_faces(d);
  std::vector<int> width(C), base(C);
  int total = 0;
  for (size_t c = 0; c < C; ++c) {
    const int wp = edge_length_sum(f.boundaries[static_cast<size_t>(d.pairing[c].first)], lengths);
    const int wn = edge_length_sum(f.boundaries[static_cast<size_t>(d.pairing[c].second)], lengths);
    require(wp == wn, errc::pair_equation_violated,
            "cylinder " + std::to_string(c) + " has unequal boundary lengths " +
                std::to_string(wp) + " and " + std::to_string(wn));
    width[c] = wp;
    base[c] = total;
    total += width[c] * heights[c];
  }

  // Both circles of a cylinder are parametrized left to right with the
  // cylinder below; along every edge that direction is the arrow direction on
  // the bottom (positive) side and the reverse traversal order on the top.
  std::vector<int> pos_cyl(E), pos_off(E), neg_cyl(E), neg_off(E);
  for (size_t c = 0; c < C; ++c) {
    int off = 0;
    for (const int h : f.boundaries[static_cast<size_t>(d.pairing[c].first)]) {
      pos_cyl[static_cast<size_t>(h) / 2] = static_cast<int>(c);
      pos_off[static_cast<size_t>(h) / 2] = off;
      off += lengths[static_cast<size_t>(h) / 2];
    }
    const auto& nb = f.boundaries[static_cast<size_t>(d.pairing[c].second)];
    off = 0;
    for (auto it = nb.rbegin(); it != nb.rend(); ++it) {
      neg_cyl[static_cast<size_t>(*it) / 2] = static_cast<int>(c);
      neg_off[static_cast<size_t>(*it) / 2] = off;
      off += lengths[static_cast<size_t>(*it) / 2];
    }
  }
  // column -> edge lookup for each cylinder's top circle
  std::vector<std::vector<int>> top_edge(C);
  for (size_t c = 0; c < C; ++c) top_edge[c].assign(static_cast<size_t>(width[c]), -1);
  for (size_t e = 0; e < E; ++e)
    for (int t = 0; t < lengths[e]; ++t)
      top_edge[static_cast<size_t>(neg_cyl[e])][static_cast<size_t>(neg_off[e] + t)] =
          static_cast<int>(e);

  SquareTiledSurface s;
  s.h.assign(static_cast<size_t>(total), 0);
  s.v.assign(static_cast<size_t>(total), 0);
  const auto id = [&](int c, int row, int col) {
    return base[static_cast<size_t>(c)] + row * width[static_cast<size_t>(c)] + col + 1;
  };
  for (size_t c = 0; c < C; ++c)
    for (int row = 0; row < heights[c]; ++row)
      for (int col = 0; col < width[c]; ++col) {
        const int sq = id(static_cast<int>(c), row, col);
        s.h[static_cast<size_t>(sq - 1)] = id(static_cast<int>(c), row, (col + 1) % width[c]);
        if (row + 1 < heights[c]) {
          s.v[static_cast<size_t>(sq - 1)] = id(static_cast<int>(c), row + 1, col);
        } else {
          const int e = top_edge[c][static_cast<size_t>(col)];
          const int t = col - neg_off[static_cast<size_t>(e)];
          const int cp = pos_cyl[static_cast<size_t>(e)];
          const int col2 = ((pos_off[static_cast<size_t>(e)] + t + twists[static_cast<size_t>(cp)]) %
                                width[static_cast<size_t>(cp)] +
                            width[static_cast<size_t>(cp)]) %
                           width[static_cast<size_t>(cp)];
          s.v[static_cast<size_t>(sq - 1)] = id(cp, 0, col2);
        }
      }
  validate_surface(s);
  assert(singularity_profile(s) == diagram_profile(d));
  assert(genus(s) == diagram_genus(d));
  return s;
}

// --- serialization ---------------------------------------------------------

std::string diagram_json(const SeparatrixDiagram& d) {
  validate_diagram(d);
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (const auto& ring : d.vertices) {
    nlohmann::json jr = nlohmann::json::array();
    for (const auto& s : ring)
      jr.push_back({{"half", s.half}, {"dir", s.dir == HalfDir::out ? "out" : "in"}});
    j["vertices"].push_back(jr);
  }
  j["edges"] = nlohmann::json::array();
  for (const auto& [o, i] : d.edges) j["edges"].push_back({o, i});
  j["pairing"] = nlohmann::json::array();
  for (const auto& [p, n] : d.pairing) j["pairing"].push_back({p, n});
  return j.dump();
}

SeparatrixDiagram diagram_from_json(const std::string& text) {
  SeparatrixDiagram d;
  try {
    const nlohmann::json j = nlohmann::json::parse(text);
    for (const auto& jr : j.at("vertices")) {
      std::vector<HalfSlot> ring;
      for (const auto& js : jr) {
        const std::string dir = js.at("dir").get<std::string>();
        require(dir == "in" || dir == "out", errc::parse_error, "dir must be 'in' or 'out'");
        ring.push_back({js.at("half").get<int>(), dir == "out" ? HalfDir::out : HalfDir::in});
      }
      d.vertices.push_back(std::move(ring));
    }
    for (const auto& je : j.at("edges"))
      d.edges.emplace_back(je.at(0).get<int>(), je.at(1).get<int>());
    for (const auto& jp : j.at("pairing"))
      d.pairing.emplace_back(jp.at(0).get<int>(), jp.at(1).get<int>());
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_error, std::string("bad diagram json: ") + e.what());
  }
  validate_diagram(d);
  return d;
}

std::string diagram_dot(const SeparatrixDiagram& d) {
  validate_diagram(d);
  const Layout L = check_structure(d);
  std::ostringstream os;
  os << "digraph separatrix {\n";
  for (size_t v = 0; v < d.vertices.size(); ++v)
    os << "  v" << v << " [shape=point];\n";
  for (size_t e = 0; e < d.edges.size(); ++e) {
    const int from = L.at[static_cast<size_t>(d.edges[e].first)].vertex;
    const int to = L.at[static_cast<size_t>(d.edges[e].second)].vertex;
    os << "  v" << from << " -> v" << to << " [label=\"e" << e << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

} // namespace strata
