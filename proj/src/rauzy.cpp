#include "strata/rauzy.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "strata/surface.hpp"

namespace strata {

namespace {

// Breadth-first closure under the induction moves.  When `target` is given
// the walk stops early on hitting it (the closure is then partial).
struct Closure {
  std::vector<Permutation> members;
  bool found_target = false;
};

Closure close_under_moves(const Permutation& pi, bool extended, const ClassOptions& opt,
                          const Permutation* target) {
  require(is_irreducible(pi), errc::reducible, "class of a reducible permutation");
  require(!is_degenerate(pi), errc::degenerate, "class of a degenerate permutation");
  std::vector<Permutation> queue{pi};
  std::set<std::vector<int>> seen{pi.images()};
  Closure out;
  if (target && pi == *target) {
    out.found_target = true;
    out.members.push_back(pi);
    return out;
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    Permutation cur = queue[head];
    std::vector<Permutation> next{rauzy_a(cur), rauzy_b(cur)};
    if (extended) next.push_back(ad_pi0(cur));
    for (auto& nb : next) {
      if (!seen.insert(nb.images()).second) continue;
      require(seen.size() <= opt.member_cap, errc::member_cap_exceeded,
              "class exceeds the member cap");
      if (target && nb == *target) {
        out.found_target = true;
        return out;
      }
      queue.push_back(std::move(nb));
    }
  }
  for (auto& s : seen) out.members.push_back(Permutation(s));
  return out;
}

} // namespace

PermClass rauzy_class(const Permutation& pi, const ClassOptions& opt) {
  PermClass cls;
  cls.m = pi.size();
  cls.extended = false;
  cls.members = close_under_moves(pi, false, opt, nullptr).members;
  return cls;
}

PermClass extended_rauzy_class(const Permutation& pi, const ClassOptions& opt) {
  PermClass cls;
  cls.m = pi.size();
  cls.extended = true;
  cls.members = close_under_moves(pi, true, opt, nullptr).members;
  return cls;
}

bool class_contains(const PermClass& cls, const Permutation& pi) {
  if (pi.size() != cls.m) return false;
  return std::binary_search(cls.members.begin(), cls.members.end(), pi);
}

bool same_component(const Permutation& a, const Permutation& b, const ClassOptions& opt) {
  if (a.size() != b.size()) return false;
  return close_under_moves(a, true, opt, &b).found_target;
}

void save_class(std::ostream& os, const PermClass& cls, const std::vector<int>& profile) {
  os << "m=" << cls.m << " generators=" << (cls.extended ? "abd" : "ab")
     << " count=" << cls.members.size() << " profile=";
  for (size_t i = 0; i < profile.size(); ++i) {
    if (i) os << ',';
    os << profile[i];
  }
  os << '\n';
  for (const auto& p : cls.members) os << p.str() << '\n';
}

PermClass load_class(std::istream& is, std::vector<int>* profile_out) {
  std::string header;
  require(static_cast<bool>(std::getline(is, header)), errc::parse_error, "missing class header");
  int m = 0;
  std::size_t count = 0;
  std::string gens, profile_str;
  {
    std::istringstream hs(header);
    std::string tok;
    while (hs >> tok) {
      auto eq = tok.find('=');
      require(eq != std::string::npos, errc::parse_error, "bad header token: " + tok);
      std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
      if (key == "m")
        m = std::stoi(val);
      else if (key == "generators")
        gens = val;
      else if (key == "count")
        count = static_cast<std::size_t>(std::stoull(val));
      else if (key == "profile")
        profile_str = val;
      else
        fail(errc::parse_error, "unknown header key: " + key);
    }
  }
  require(m >= 1, errc::parse_error, "bad or missing m in header");
  require(gens == "ab" || gens == "abd", errc::parse_error, "bad generators in header");
  PermClass cls;
  cls.m = m;
  cls.extended = (gens == "abd");
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    Permutation p = parse_permutation(line);
    require(p.size() == m, errc::parse_error, "member size does not match header");
    cls.members.push_back(std::move(p));
  }
  require(cls.members.size() == count, errc::parse_error, "member count does not match header");
  require(std::is_sorted(cls.members.begin(), cls.members.end()), errc::parse_error,
          "members are not sorted");
  if (profile_out) {
    profile_out->clear();
    std::istringstream ps(profile_str);
    std::string item;
    while (std::getline(ps, item, ','))
      if (!item.empty()) profile_out->push_back(std::stoi(item));
  }
  return cls;
}

namespace {

std::uint64_t pack_images(const std::vector<int>& img) {
  std::uint64_t key = 0;
  for (int v : img) key = key * 16 + static_cast<std::uint64_t>(v);
  return key;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  }
};

} // namespace

std::vector<CensusRow> census(int m, const ClassOptions& opt) {
  require(m >= 2, errc::bad_index, "census needs at least two letters");
  require(m <= 12, errc::member_cap_exceeded, "census limited to small alphabets");

  // Collect every irreducible nondegenerate permutation on m letters.
  std::vector<std::vector<int>> perms;
  std::unordered_map<std::uint64_t, int> index;
  {
    std::vector<int> img(static_cast<size_t>(m));
    std::iota(img.begin(), img.end(), 1);
    do {
      Permutation p{img};
      if (is_irreducible(p) && !is_degenerate(p)) {
        index.emplace(pack_images(img), static_cast<int>(perms.size()));
        perms.push_back(img);
      }
    } while (std::next_permutation(img.begin(), img.end()));
  }
  require(perms.size() <= opt.member_cap, errc::member_cap_exceeded,
          "census exceeds the member cap");

  UnionFind uf(static_cast<int>(perms.size()));
  for (size_t i = 0; i < perms.size(); ++i) {
    Permutation p{perms[i]};
    for (const Permutation& nb : {rauzy_a(p), rauzy_b(p), ad_pi0(p)}) {
      auto it = index.find(pack_images(nb.images()));
      // The moves preserve irreducibility and nondegeneracy.
      require(it != index.end(), errc::bad_index, "induction left the enumerated set");
      uf.unite(static_cast<int>(i), it->second);
    }
  }

  std::map<int, std::size_t> class_size;
  for (size_t i = 0; i < perms.size(); ++i) ++class_size[uf.find(static_cast<int>(i))];

  // Profile constancy on classes is checked for every member via the cheap
  // polygon-corner computation; the surface route cross-checks it on one
  // representative per class (every member for m <= 8, a sample beyond).
  std::map<int, std::vector<int>> class_profile;
  const size_t surface_stride = (m <= 8) ? 1 : 97;
  for (size_t i = 0; i < perms.size(); ++i) {
    const int root = uf.find(static_cast<int>(i));
    const Permutation p{perms[i]};
    auto profile = suspension_profile(p);
    auto [it, fresh] = class_profile.emplace(root, profile);
    require(fresh || it->second == profile, errc::bad_profile,
            "singularity profile varies inside one class");
    if (root == static_cast<int>(i) || i % surface_stride == 0)
      require(singularity_profile(suspend(p)) == profile, errc::bad_profile,
              "surface profile disagrees with the combinatorial profile");
  }

  // lexicographically least member of each class, as its representative
  std::map<int, std::vector<int>> class_rep;
  for (size_t i = 0; i < perms.size(); ++i) class_rep.try_emplace(uf.find(static_cast<int>(i)), perms[i]);

  std::map<std::vector<int>, std::vector<std::pair<std::size_t, std::vector<int>>>> by_profile;
  for (auto& [root, size] : class_size)
    by_profile[class_profile.at(root)].emplace_back(size, class_rep.at(root));

  std::vector<CensusRow> rows;
  for (auto& [profile, classes] : by_profile) {
    CensusRow row;
    row.m = m;
    row.profile = profile;
    row.class_count = static_cast<int>(classes.size());
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.first != b.first ? a.first > b.first : a.second < b.second; });
    for (auto& [size, rep] : classes) {
      row.class_sizes.push_back(size);
      row.representatives.emplace_back(Permutation{rep});
    }
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(),
            [](const CensusRow& a, const CensusRow& b) { return a.profile > b.profile; });
  return rows;
}

std::string census_tsv(const std::vector<CensusRow>& rows) {
  std::ostringstream os;
  for (const auto& row : rows) {
    os << row.m << '\t';
    for (size_t i = 0; i < row.profile.size(); ++i) {
      if (i) os << ',';
      os << row.profile[i];
    }
    os << '\t' << row.class_count << '\t';
    for (size_t i = 0; i < row.class_sizes.size(); ++i) {
      if (i) os << ',';
      os << row.class_sizes[i];
    }
    os << '\n';
  }
  return os.str();
}

} // namespace strata
