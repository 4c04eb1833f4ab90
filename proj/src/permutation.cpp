#include "strata/permutation.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace strata {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  require(!img_.empty(), errc::empty_input, "permutation with no letters");
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    require(v >= 1 && v <= size() && !seen[static_cast<size_t>(v) - 1],
            errc::not_a_bijection, "images are not a bijection of {1..m}");
    seen[static_cast<size_t>(v) - 1] = 1;
  }
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<size_t>((*this)(i)) - 1] = i;
  return Permutation(inv);
}

std::string Permutation::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < img_.size(); ++i) {
    if (i) os << ' ';
    os << img_[i];
  }
  return os.str();
}

Permutation parse_permutation(const std::string& text) {
  std::istringstream is(text);
  std::vector<int> img;
  int v;
  while (is >> v) img.push_back(v);
  require(is.eof(), errc::parse_error, "junk in permutation line: " + text);
  require(!img.empty(), errc::empty_input, "empty permutation line");
  return Permutation(img);
}

bool is_irreducible(const Permutation& pi) {
  const int m = pi.size();
  int maxv = 0;
  for (int i = 1; i < m; ++i) {
    maxv = std::max(maxv, pi(i));
    if (maxv == i) return false; // pi maps {1..i} onto itself
  }
  return true;
}

std::vector<int> suspension_profile(const Permutation& pi) {
  // Glue the suspension polygon's corners: vertex j of the top chain is
  // identified with vertex pi(j) (left corner with pi(j)-1) of the bottom
  // chain, and the two chain ends coincide.  Around an identified vertex
  // the upward direction is crossed once per interior bottom-chain member,
  // so the cone angle is 2pi times that count and the degree is the count
  // minus one.
  require(is_irreducible(pi), errc::reducible, "profile of a reducible permutation");
  const int m = pi.size();
  require(m >= 2, errc::bad_index, "profile needs at least two letters");
  // ids: 0..m top chain vertices, m+1..2m+1 bottom chain vertices
  std::vector<int> parent(2 * static_cast<size_t>(m) + 2);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); };
  unite(0, m + 1);
  unite(m, 2 * m + 1);
  for (int j = 1; j <= m; ++j) {
    unite(j - 1, m + 1 + pi(j) - 1);
    unite(j, m + 1 + pi(j));
  }
  std::vector<int> interior_bottoms(2 * static_cast<size_t>(m) + 2, 0);
  for (int k = 1; k < m; ++k) ++interior_bottoms[static_cast<size_t>(find(m + 1 + k))];
  std::vector<int> profile;
  for (int x = 0; x < 2 * m + 2; ++x)
    if (find(x) == x) {
      require(interior_bottoms[static_cast<size_t>(x)] >= 1, errc::bad_profile,
              "corner class without an upward crossing");
      profile.push_back(interior_bottoms[static_cast<size_t>(x)] - 1);
    }
  std::sort(profile.begin(), profile.end(), std::greater<>());
  return profile;
}

// Local pattern lists (adjacent letters with adjacent images, possibly
// wrapping through the ends) flag most but not all degenerate permutations
// and are not closed under the induction moves; the angle criterion is.
bool is_degenerate(const Permutation& pi) {
  const auto profile = suspension_profile(pi);
  return !profile.empty() && profile.back() == 0;
}

std::vector<std::vector<int>> omega_matrix(const Permutation& pi) {
  const int m = pi.size();
  std::vector<std::vector<int>> om(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m), 0));
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      if (pi(i) > pi(j)) {
        om[i - 1][j - 1] = 1;
        om[j - 1][i - 1] = -1;
      }
  return om;
}

int omega_rank(const Permutation& pi) {
  // Fraction-free Gaussian elimination; entries stay integral and small for
  // the sizes that occur here.
  auto a = omega_matrix(pi);
  const int m = pi.size();
  std::vector<std::vector<std::int64_t>> w(static_cast<size_t>(m), std::vector<std::int64_t>(static_cast<size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) w[i][j] = a[i][j];
  int rank = 0;
  std::int64_t prev = 1;
  for (int col = 0; col < m && rank < m; ++col) {
    int piv = -1;
    for (int r = rank; r < m; ++r)
      if (w[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(w[piv], w[rank]);
    for (int r = rank + 1; r < m; ++r) {
      for (int c = col + 1; c < m; ++c)
        w[r][c] = (w[rank][col] * w[r][c] - w[r][col] * w[rank][c]) / prev;
      w[r][col] = 0;
    }
    prev = w[rank][col];
    ++rank;
  }
  return rank;
}

Permutation tau_cycle(int k, int m) {
  require(m >= 1 && k >= 1 && k <= m, errc::bad_index, "cycle index out of range");
  std::vector<int> img;
  img.reserve(static_cast<size_t>(m));
  for (int j = 1; j <= k; ++j) img.push_back(j);
  for (int j = k + 2; j <= m; ++j) img.push_back(j);
  if (k < m) img.push_back(k + 1);
  return Permutation(img);
}

Permutation rauzy_a(const Permutation& pi) {
  require(is_irreducible(pi), errc::reducible, "induction needs an irreducible permutation");
  const int m = pi.size();
  const int v = pi.inverse()(m); // position of the letter m
  std::vector<int> img;
  img.reserve(static_cast<size_t>(m));
  for (int j = 1; j <= v; ++j) img.push_back(pi(j));
  if (v < m) img.push_back(pi(m));
  for (int j = v + 2; j <= m; ++j) img.push_back(pi(j - 1));
  return Permutation(img);
}

Permutation rauzy_b(const Permutation& pi) {
  require(is_irreducible(pi), errc::reducible, "induction needs an irreducible permutation");
  const int m = pi.size();
  const int pm = pi(m);
  std::vector<int> img;
  img.reserve(static_cast<size_t>(m));
  for (int j = 1; j <= m; ++j) {
    const int p = pi(j);
    if (p <= pm)
      img.push_back(p);
    else if (p < m)
      img.push_back(p + 1);
    else
      img.push_back(pm + 1);
  }
  return Permutation(img);
}

Permutation ad_pi0(const Permutation& pi) {
  const int m = pi.size();
  std::vector<int> img;
  img.reserve(static_cast<size_t>(m));
  for (int j = 1; j <= m; ++j) img.push_back(m + 1 - pi(m + 1 - j));
  return Permutation(img);
}

bool is_standard(const Permutation& pi) {
  const int m = pi.size();
  return pi(1) == m && pi(m) == 1;
}

namespace {

// Breadth-first walk from pi over the given one-step moves until `goal`
// holds; returns the first hit.  Deterministic: neighbors are visited in the
// order the moves are listed.
template <typename Goal>
Permutation bfs_until(const Permutation& pi, bool with_reversal, Goal goal) {
  std::deque<Permutation> queue{pi};
  std::set<std::vector<int>> seen{pi.images()};
  while (!queue.empty()) {
    Permutation cur = queue.front();
    queue.pop_front();
    if (goal(cur)) return cur;
    std::vector<Permutation> next{rauzy_a(cur), rauzy_b(cur)};
    if (with_reversal) next.push_back(ad_pi0(cur));
    for (auto& nb : next)
      if (seen.insert(nb.images()).second) queue.push_back(std::move(nb));
  }
  fail(errc::bad_index, "walk exhausted the class without reaching the goal");
}

} // namespace

Permutation standardize(const Permutation& pi) {
  require(is_irreducible(pi), errc::reducible, "standardize needs an irreducible permutation");
  return bfs_until(pi, false, [](const Permutation& p) { return is_standard(p); });
}

Permutation interior_restriction(const Permutation& pi) {
  require(is_standard(pi), errc::bad_index, "interior restriction needs a standard permutation");
  const int m = pi.size();
  require(m >= 3, errc::bad_index, "interior restriction needs at least three letters");
  std::vector<int> img;
  img.reserve(static_cast<size_t>(m) - 2);
  for (int j = 2; j <= m - 1; ++j) img.push_back(pi(j) - 1);
  return Permutation(img);
}

Permutation reduce_interior(const Permutation& pi) {
  require(is_irreducible(pi), errc::reducible, "reduction needs an irreducible permutation");
  require(pi.size() >= 3, errc::bad_index, "reduction needs at least three letters");
  require(!is_degenerate(pi), errc::degenerate, "reduction needs a nondegenerate permutation");
  return bfs_until(pi, true, [](const Permutation& p) {
    return is_standard(p) && is_irreducible(interior_restriction(p));
  });
}

} // namespace strata
