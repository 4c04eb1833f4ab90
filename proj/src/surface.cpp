#include "strata/surface.hpp"

#include <algorithm>
#include <cstdint>
#include <json.hpp>
#include <numeric>
#include <queue>

#include "strata/gf2.hpp"

namespace strata {

namespace {

void require_bijection(const std::vector<int>& map, int n, const char* what) {
  require(static_cast<int>(map.size()) == n, errc::not_a_bijection, what);
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int value : map) {
    require(value >= 1 && value <= n && !seen[static_cast<size_t>(value) - 1],
            errc::not_a_bijection, what);
    seen[static_cast<size_t>(value) - 1] = 1;
  }
}

std::vector<int> inverse_map(const std::vector<int>& map) {
  std::vector<int> inv(map.size());
  for (size_t i = 0; i < map.size(); ++i)
    inv[static_cast<size_t>(map[i]) - 1] = static_cast<int>(i) + 1;
  return inv;
}

} // namespace

void validate_surface(const SquareTiledSurface& s) {
  const int n = s.n();
  require(n >= 1, errc::empty_input, "surface with no squares");
  require_bijection(s.h, n, "horizontal neighbours are not a bijection");
  require_bijection(s.v, n, "vertical neighbours are not a bijection");
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::queue<int> todo;
  todo.push(1);
  seen[0] = 1;
  int reached = 1;
  const auto hi = inverse_map(s.h);
  const auto vi = inverse_map(s.v);
  while (!todo.empty()) {
    const int cur = todo.front();
    todo.pop();
    for (int nb : {s.right(cur), s.up(cur), hi[static_cast<size_t>(cur) - 1],
                   vi[static_cast<size_t>(cur) - 1]})
      if (!seen[static_cast<size_t>(nb) - 1]) {
        seen[static_cast<size_t>(nb) - 1] = 1;
        ++reached;
        todo.push(nb);
      }
  }
  require(reached == n, errc::bad_parameters, "surface is not connected");
}

namespace {

// Exact fraction on small integers; enough for the crossing points of the
// suspension polygon, whose coordinates have tiny numerators.
struct Frac {
  long long num = 0, den = 1;

  Frac() = default;
  Frac(long long n, long long d) : num(n), den(d) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  static Frac whole(long long n) { return Frac(n, 1); }

  friend Frac operator-(const Frac& a, const Frac& b) {
    return Frac(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Frac operator+(const Frac& a, const Frac& b) {
    return Frac(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend bool operator<(const Frac& a, const Frac& b) { return a.num * b.den < b.num * a.den; }
  friend bool operator<=(const Frac& a, const Frac& b) { return a.num * b.den <= b.num * a.den; }
};

// Suspension polygon over pi: top chain through (i, s_i), bottom chain
// through (i, t_i), both with unit horizontal steps and even integer slopes
// tau_j = 2(pi(j)-j); top edge j is glued to bottom edge pi(j) by a
// translation.  Irreducibility makes s positive and t negative strictly
// between the endpoints, so the polygon is embedded.  All y coordinates are
// stored doubled so that square centers sit at odd integers.
struct Polygon {
  int m = 0;
  std::vector<long long> tau;  // 1-based
  std::vector<long long> s, t; // 0..m, doubled
  std::vector<int> pi, inv;    // 1-based images
  std::vector<long long> top_mid, bot_mid; // doubled center height bounds per column
  std::vector<int> col_start;              // id offset per column
  int n = 0;

  int image(int j) const { return pi[static_cast<size_t>(j) - 1]; }
  int preimage(int k) const { return inv[static_cast<size_t>(k) - 1]; }
  long long bottom_slope(int k) const { return tau[static_cast<size_t>(preimage(k))]; }

  int square_id(int col, long long cy2) const {
    // cy2 = doubled center height (odd integer)
    require(col >= 0 && col < m && cy2 > bot_mid[static_cast<size_t>(col)] &&
                cy2 < top_mid[static_cast<size_t>(col)],
            errc::bad_index, "ray walk left the polygon");
    return col_start[static_cast<size_t>(col)] +
           static_cast<int>((cy2 - bot_mid[static_cast<size_t>(col)] + 1) / 2);
  }
};

Polygon make_polygon(const Permutation& pi) {
  Polygon p;
  p.m = pi.size();
  p.pi = pi.images();
  p.inv = inverse_map(p.pi);
  p.tau.assign(static_cast<size_t>(p.m) + 1, 0);
  p.s.assign(static_cast<size_t>(p.m) + 1, 0);
  p.t.assign(static_cast<size_t>(p.m) + 1, 0);
  for (int j = 1; j <= p.m; ++j) p.tau[static_cast<size_t>(j)] = 2LL * (pi(j) - j);
  for (int j = 1; j <= p.m; ++j) {
    p.s[static_cast<size_t>(j)] = p.s[static_cast<size_t>(j) - 1] + 2 * p.tau[static_cast<size_t>(j)];
    p.t[static_cast<size_t>(j)] =
        p.t[static_cast<size_t>(j) - 1] + 2 * p.tau[static_cast<size_t>(p.preimage(j))];
  }
  p.top_mid.resize(static_cast<size_t>(p.m));
  p.bot_mid.resize(static_cast<size_t>(p.m));
  p.col_start.resize(static_cast<size_t>(p.m));
  for (int c = 0; c < p.m; ++c) {
    p.top_mid[static_cast<size_t>(c)] = p.s[static_cast<size_t>(c)] + p.tau[static_cast<size_t>(c) + 1];
    p.bot_mid[static_cast<size_t>(c)] = p.t[static_cast<size_t>(c)] + p.bottom_slope(c + 1);
    require(p.top_mid[static_cast<size_t>(c)] > p.bot_mid[static_cast<size_t>(c)],
            errc::bad_index, "degenerate polygon column");
    p.col_start[static_cast<size_t>(c)] = p.n;
    p.n += static_cast<int>((p.top_mid[static_cast<size_t>(c)] - p.bot_mid[static_cast<size_t>(c)]) / 2);
  }
  return p;
}

// One unit step to the right from the center of square (col, cy2).  Whenever
// the ray leaves through a glued edge (descending top edge or ascending
// bottom edge; horizontal ones are never met at odd heights) it re-enters
// through the partner copy.  x is doubled like y.
int walk_right(const Polygon& p, int col, long long cy2) {
  long long y = cy2;
  Frac x(2 * col + 1, 1);
  Frac budget = Frac::whole(2);
  for (int guard = 0; guard < 16 * p.m + 16; ++guard) {
    bool crossed = false;
    Frac best_x;
    int best_edge = 0; // +j for top edge j, -k for bottom edge k
    for (int j = 1; j <= p.m; ++j) {
      const long long slope = p.tau[static_cast<size_t>(j)];
      if (slope < 0) { // descending top edge
        const Frac cx = Frac::whole(2 * (j - 1)) + Frac(y - p.s[static_cast<size_t>(j) - 1], slope);
        if (Frac::whole(2 * (j - 1)) < cx && cx < Frac::whole(2 * j) && x < cx &&
            cx - x <= budget && (!crossed || cx < best_x)) {
          crossed = true;
          best_x = cx;
          best_edge = j;
        }
      }
      const long long bslope = p.bottom_slope(j);
      if (bslope > 0) { // ascending bottom edge j
        const Frac cx = Frac::whole(2 * (j - 1)) + Frac(y - p.t[static_cast<size_t>(j) - 1], bslope);
        if (Frac::whole(2 * (j - 1)) < cx && cx < Frac::whole(2 * j) && x < cx &&
            cx - x <= budget && (!crossed || cx < best_x)) {
          crossed = true;
          best_x = cx;
          best_edge = -j;
        }
      }
    }
    if (!crossed) {
      const Frac fx = x + budget;
      require(fx.den == 1 && fx.num % 2 != 0, errc::bad_index, "ray did not end on a center");
      return p.square_id(static_cast<int>((fx.num - 1) / 2), y);
    }
    budget = budget - (best_x - x);
    if (best_edge > 0) {
      const int j = best_edge, k = p.image(j);
      x = best_x + Frac::whole(2 * (k - j));
      y += p.t[static_cast<size_t>(k) - 1] - p.s[static_cast<size_t>(j) - 1];
    } else {
      const int k = -best_edge, j = p.preimage(k);
      x = best_x + Frac::whole(2 * (j - k));
      y += p.s[static_cast<size_t>(j) - 1] - p.t[static_cast<size_t>(k) - 1];
    }
  }
  fail(errc::bad_index, "horizontal ray walk did not terminate");
}

// One unit step upward; the ray can only leave through the top chain, and
// every crossing happens at an even (doubled) height, so the arithmetic is
// purely integral.
int walk_up(const Polygon& p, int col, long long cy2) {
  long long x = 2 * col + 1, y = cy2, budget = 2;
  for (int guard = 0; guard < 16 * p.m + 16; ++guard) {
    const int c = static_cast<int>((x - 1) / 2), j = c + 1;
    const long long y_top = p.s[static_cast<size_t>(c)] + p.tau[static_cast<size_t>(j)];
    require(y_top > y, errc::bad_index, "vertical ray walk left the polygon");
    if (y_top - y > budget) return p.square_id(c, y + budget);
    budget -= y_top - y;
    const int k = p.image(j);
    x += 2 * (k - j);
    y = p.t[static_cast<size_t>(k) - 1] + (y_top - p.s[static_cast<size_t>(j) - 1]);
  }
  fail(errc::bad_index, "vertical ray walk did not terminate");
}

} // namespace

SquareTiledSurface suspend(const Permutation& pi) {
  require(is_irreducible(pi), errc::reducible, "suspension needs an irreducible permutation");
  require(!is_degenerate(pi), errc::degenerate, "suspension of a degenerate permutation");
  const Polygon p = make_polygon(pi);
  SquareTiledSurface s;
  s.h.assign(static_cast<size_t>(p.n), 0);
  s.v.assign(static_cast<size_t>(p.n), 0);
  for (int c = 0; c < p.m; ++c)
    for (long long y = p.bot_mid[static_cast<size_t>(c)] + 1; y < p.top_mid[static_cast<size_t>(c)];
         y += 2) {
      const int id = p.square_id(c, y);
      s.h[static_cast<size_t>(id) - 1] = walk_right(p, c, y);
      s.v[static_cast<size_t>(id) - 1] = walk_up(p, c, y);
    }
  validate_surface(s);
  const auto profile = singularity_profile(s);
  const int g = genus(s);
  require(pi.size() == 2 * g + static_cast<int>(profile.size()) - 1, errc::bad_profile,
          "suspension produced a spurious marked point");
  require(omega_rank(pi) == 2 * g, errc::bad_profile,
          "suspension genus disagrees with the cycle rank");
  return s;
}

namespace {

// Counterclockwise rotation around the vertex at the top right corner of a
// square: up, right, then back down-left.
std::vector<int> corner_cycles(const SquareTiledSurface& s, std::vector<int>* lengths) {
  const auto hi = inverse_map(s.h);
  const auto vi = inverse_map(s.v);
  const int n = s.n();
  std::vector<int> cycle_of(static_cast<size_t>(n), -1);
  lengths->clear();
  for (int i = 1; i <= n; ++i) {
    if (cycle_of[static_cast<size_t>(i) - 1] >= 0) continue;
    const int id = static_cast<int>(lengths->size());
    int cur = i, len = 0;
    do {
      cycle_of[static_cast<size_t>(cur) - 1] = id;
      ++len;
      cur = hi[static_cast<size_t>(vi[static_cast<size_t>(s.right(s.up(cur))) - 1]) - 1];
    } while (cur != i);
    lengths->push_back(len);
  }
  return cycle_of;
}

} // namespace

int genus(const SquareTiledSurface& s) {
  std::vector<int> lengths;
  corner_cycles(s, &lengths);
  // Euler characteristic with V vertices, 2n edges, n faces.
  const int chi = static_cast<int>(lengths.size()) - s.n();
  require(chi <= 2 && chi % 2 == 0, errc::bad_parameters, "inconsistent cell structure");
  return (2 - chi) / 2;
}

std::vector<int> singularity_profile(const SquareTiledSurface& s) {
  std::vector<int> lengths;
  corner_cycles(s, &lengths);
  std::vector<int> profile;
  int total = 0;
  for (int len : lengths) {
    total += len - 1;
    if (len > 1) profile.push_back(len - 1);
  }
  std::sort(profile.begin(), profile.end(), std::greater<>());
  require(total == 2 * genus(s) - 2, errc::bad_profile,
          "cone angles disagree with the Euler characteristic");
  return profile;
}

int winding_number(const SquareTiledSurface& s, int start, const std::string& moves) {
  validate_surface(s);
  require(start >= 1 && start <= s.n(), errc::bad_index, "start square out of range");
  require(!moves.empty(), errc::empty_input, "empty path");
  const auto hi = inverse_map(s.h);
  const auto vi = inverse_map(s.v);
  std::vector<int> dirs;
  int cur = start;
  for (char c : moves) {
    switch (c) {
      case 'E': dirs.push_back(0); cur = s.right(cur); break;
      case 'N': dirs.push_back(1); cur = s.up(cur); break;
      case 'W': dirs.push_back(2); cur = hi[static_cast<size_t>(cur) - 1]; break;
      case 'S': dirs.push_back(3); cur = vi[static_cast<size_t>(cur) - 1]; break;
      default: fail(errc::parse_error, std::string("bad move: ") + c);
    }
  }
  require(cur == start, errc::bad_parameters, "path does not close up");
  int quarter_turns = 0;
  for (size_t i = 0; i < dirs.size(); ++i) {
    const int d0 = dirs[i], d1 = dirs[(i + 1) % dirs.size()];
    const int diff = ((d1 - d0) % 4 + 4) % 4;
    require(diff != 2, errc::bad_parameters, "path backtracks; the turning angle is undefined");
    quarter_turns += (diff == 1) ? 1 : (diff == 3 ? -1 : 0);
  }
  require(quarter_turns % 4 == 0, errc::bad_parameters,
          "closed path with fractional turning number");
  return quarter_turns / 4;
}

namespace {

struct Step {
  int square;
  int dir; // 0=E 1=N 2=W 3=S
};

// Fundamental cycles of the square adjacency graph (nodes = squares, one
// edge per right neighbour and one per upper neighbour), as move sequences.
std::vector<std::vector<Step>> fundamental_cycles(const SquareTiledSurface& s) {
  const int n = s.n();
  const auto hi = inverse_map(s.h);
  const auto vi = inverse_map(s.v);
  // Tree structure: parent move leads from a node toward the root.
  std::vector<int> parent(static_cast<size_t>(n) + 1, 0), depth(static_cast<size_t>(n) + 1, 0);
  std::vector<int> parent_dir(static_cast<size_t>(n) + 1, -1);
  std::vector<char> edge_in_tree(2 * static_cast<size_t>(n), 0); // [E_1..E_n, N_1..N_n]
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  std::queue<int> todo;
  todo.push(1);
  seen[1] = 1;
  while (!todo.empty()) {
    const int cur = todo.front();
    todo.pop();
    struct Nb {
      int node, dir, edge;
    };
    const Nb nbs[4] = {{s.right(cur), 0, cur - 1},
                       {s.up(cur), 1, n + cur - 1},
                       {hi[static_cast<size_t>(cur) - 1], 2, hi[static_cast<size_t>(cur) - 1] - 1},
                       {vi[static_cast<size_t>(cur) - 1], 3, n + vi[static_cast<size_t>(cur) - 1] - 1}};
    for (const auto& nb : nbs)
      if (!seen[static_cast<size_t>(nb.node)]) {
        seen[static_cast<size_t>(nb.node)] = 1;
        parent[static_cast<size_t>(nb.node)] = cur;
        parent_dir[static_cast<size_t>(nb.node)] = (nb.dir + 2) % 4; // move node -> cur
        depth[static_cast<size_t>(nb.node)] = depth[static_cast<size_t>(cur)] + 1;
        edge_in_tree[static_cast<size_t>(nb.edge)] = 1;
        todo.push(nb.node);
      }
  }

  auto path_to_ancestor = [&](int node, int stop) {
    std::vector<Step> steps;
    while (node != stop) {
      steps.push_back({node, parent_dir[static_cast<size_t>(node)]});
      node = parent[static_cast<size_t>(node)];
    }
    return steps;
  };

  std::vector<std::vector<Step>> cycles;
  for (int e = 0; e < 2 * n; ++e) {
    if (edge_in_tree[static_cast<size_t>(e)]) continue;
    const int from = (e < n) ? e + 1 : e - n + 1;
    const int dir = (e < n) ? 0 : 1;
    const int to = (dir == 0) ? s.right(from) : s.up(from);
    // Lowest common ancestor of the two endpoints.
    int a = from, b = to;
    while (depth[static_cast<size_t>(a)] > depth[static_cast<size_t>(b)]) a = parent[static_cast<size_t>(a)];
    while (depth[static_cast<size_t>(b)] > depth[static_cast<size_t>(a)]) b = parent[static_cast<size_t>(b)];
    while (a != b) {
      a = parent[static_cast<size_t>(a)];
      b = parent[static_cast<size_t>(b)];
    }
    std::vector<Step> cycle{{from, dir}};
    for (const Step& st : path_to_ancestor(to, a)) cycle.push_back(st);
    auto down = path_to_ancestor(from, a);
    for (auto it = down.rbegin(); it != down.rend(); ++it)
      cycle.push_back({parent[static_cast<size_t>(it->square)], (it->dir + 2) % 4});
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

} // namespace

int spin_parity_surface(const SquareTiledSurface& s) {
  validate_surface(s);
  const auto profile = singularity_profile(s);
  for (int k : profile)
    require(k % 2 == 0, errc::odd_degree, "parity needs all cone degrees even");

  const int n = s.n();
  const auto hi = inverse_map(s.h);
  const auto vi = inverse_map(s.v);
  const auto cycles = fundamental_cycles(s);
  const size_t kgen = cycles.size();

  // Dual support (adjacency edges) and primal support (lattice edges,
  // obtained by pushing every step to the lower left corner of its square).
  std::vector<std::vector<std::uint8_t>> dual(kgen), primal(kgen);
  std::vector<std::uint8_t> qval(kgen, 0);
  static const char* kMoveName = "ENWS";
  for (size_t c = 0; c < cycles.size(); ++c) {
    dual[c].assign(2 * static_cast<size_t>(n), 0);
    primal[c].assign(2 * static_cast<size_t>(n), 0);
    std::string moves;
    for (const Step& st : cycles[c]) {
      moves += kMoveName[st.dir];
      // Identify the traversed edge by the square it leaves eastward/upward.
      int base = st.square;
      if (st.dir == 2) base = hi[static_cast<size_t>(st.square) - 1];
      if (st.dir == 3) base = vi[static_cast<size_t>(st.square) - 1];
      if (st.dir % 2 == 0) { // horizontal move over edge E_base
        dual[c][static_cast<size_t>(base) - 1] ^= 1;
        // bottom edge of base = top edge of the square below it
        primal[c][static_cast<size_t>(vi[static_cast<size_t>(base) - 1]) - 1] ^= 1;
      } else { // vertical move over edge N_base
        dual[c][static_cast<size_t>(n + base) - 1] ^= 1;
        // left edge of base = right edge of the square to its left
        primal[c][static_cast<size_t>(n + hi[static_cast<size_t>(base) - 1]) - 1] ^= 1;
      }
    }
    qval[c] = static_cast<std::uint8_t>(
        (winding_number(s, cycles[c].front().square, moves) + 1) & 1);
  }

  // Mod 2 intersection numbers: a dual east segment at square b crosses the
  // primal right edge of b; a dual north segment crosses the primal top edge.
  QuadraticSpace space;
  space.q_gen = qval;
  space.pairing.assign(kgen, std::vector<std::uint8_t>(kgen, 0));
  for (size_t a = 0; a < kgen; ++a)
    for (size_t b = 0; b < kgen; ++b) {
      std::uint8_t acc = 0;
      for (int sq = 1; sq <= n; ++sq) {
        acc ^= static_cast<std::uint8_t>(dual[a][static_cast<size_t>(sq) - 1] &
                                         primal[b][static_cast<size_t>(n + sq) - 1]);
        acc ^= static_cast<std::uint8_t>(dual[a][static_cast<size_t>(n + sq) - 1] &
                                         primal[b][static_cast<size_t>(sq) - 1]);
      }
      space.pairing[a][b] = acc;
    }

  const ArfResult res = arf_invariant(space);
  require(res.rank == 2 * genus(s), errc::bad_parameters,
          "intersection rank disagrees with the genus");
  return res.arf;
}

int spin_parity_perm(const Permutation& pi) {
  require(is_irreducible(pi), errc::reducible, "parity needs an irreducible permutation");
  require(!is_degenerate(pi), errc::degenerate, "parity needs a nondegenerate permutation");
  for (int k : suspension_profile(pi))
    require(k % 2 == 0, errc::odd_degree, "parity needs all cone degrees even");
  const auto om = omega_matrix(pi);
  const int m = pi.size();
  QuadraticSpace space;
  space.q_gen.assign(static_cast<size_t>(m), 1);
  space.pairing.assign(static_cast<size_t>(m), std::vector<std::uint8_t>(static_cast<size_t>(m), 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      space.pairing[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          static_cast<std::uint8_t>(om[static_cast<size_t>(i)][static_cast<size_t>(j)] & 1);
  const ArfResult res = arf_invariant(space);
  require(res.rank == omega_rank(pi), errc::bad_parameters,
          "mod 2 rank disagrees with the rational rank");
  return res.arf;
}

std::string origami_json(const SquareTiledSurface& s) {
  nlohmann::json j;
  j["n"] = s.n();
  j["h"] = s.h;
  j["v"] = s.v;
  return j.dump();
}

SquareTiledSurface origami_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(errc::parse_error, std::string("bad json: ") + e.what());
  }
  require(j.contains("n") && j.contains("h") && j.contains("v"), errc::parse_error,
          "origami json needs n, h and v");
  SquareTiledSurface s;
  s.h = j["h"].get<std::vector<int>>();
  s.v = j["v"].get<std::vector<int>>();
  require(static_cast<int>(s.h.size()) == j["n"].get<int>(), errc::parse_error,
          "n does not match the maps");
  validate_surface(s);
  return s;
}

} // namespace strata
