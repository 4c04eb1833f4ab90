#include "strata/classify.hpp"

#include <algorithm>
#include <cassert>
#include <json.hpp>
#include <numeric>

#include "strata/errors.hpp"
#include "strata/rauzy.hpp"
#include "strata/surface.hpp"

namespace strata {

namespace {

// degrees must be positive with even total; returns the genus
int genus_of_profile(const std::vector<int>& profile) {
  require(!profile.empty(), errc::bad_profile, "empty profile");
  int sum = 0;
  for (const int k : profile) {
    require(k >= 1, errc::bad_profile, "zero degrees must be at least 1");
    sum += k;
  }
  require(sum % 2 == 0, errc::bad_profile, "zero degrees must sum to 2g-2");
  return (sum + 2) / 2;
}

bool sorted_desc(const std::vector<int>& v) {
  return std::is_sorted(v.rbegin(), v.rend());
}

} // namespace

std::string tag_name(ComponentTag t) {
  switch (t) {
    case ComponentTag::hyperelliptic: return "hyperelliptic";
    case ComponentTag::even_spin: return "even";
    case ComponentTag::odd_spin: return "odd";
    case ComponentTag::nonhyperelliptic: return "nonhyperelliptic";
    case ComponentTag::connected: return "connected";
  }
  fail(errc::unsupported, "unknown tag");
}

int stratum_dim(const std::vector<int>& profile) {
  const int g = genus_of_profile(profile);
  return 2 * g + static_cast<int>(profile.size()) - 1;
}

int quadratic_stratum_dim(const std::vector<int>& orders, int g) {
  require(g >= 0, errc::bad_parameters, "negative genus");
  int sum = 0;
  for (const int l : orders) {
    require(l != 0 && l >= -1, errc::bad_profile, "quadratic orders are -1 or positive");
    sum += l;
  }
  require(sum == 4 * g - 4, errc::bad_profile, "quadratic orders must sum to 4g-4");
  return 2 * g + static_cast<int>(orders.size()) - 2;
}

std::vector<ComponentTag> components_of_stratum(const std::vector<int>& profile) {
  std::vector<int> p = profile;
  std::sort(p.rbegin(), p.rend());
  const int g = genus_of_profile(p);
  const bool all_even = std::all_of(p.begin(), p.end(), [](int k) { return k % 2 == 0; });
  using T = ComponentTag;
  if (g == 2) return {T::hyperelliptic}; // [2] and [1,1] are single components
  if (g == 3) {
    if (p == std::vector<int>{4} || p == std::vector<int>{2, 2})
      return {T::hyperelliptic, T::odd_spin};
    return {T::connected};
  }
  const bool one_zero = p.size() == 1;
  const bool equal_pair = p.size() == 2 && p[0] == p[1];
  if (one_zero || (equal_pair && all_even)) return {T::hyperelliptic, T::even_spin, T::odd_spin};
  if (all_even) return {T::even_spin, T::odd_spin};
  if (equal_pair) return {T::hyperelliptic, T::nonhyperelliptic};
  return {T::connected};
}

int hyperelliptic_parity(int g, HypKind kind) {
  require(g >= 2, errc::bad_parameters, "needs genus at least 2");
  if (kind == HypKind::single) return ((g + 1) / 2) % 2;
  require(g % 2 == 1, errc::bad_parameters,
          "a pair of equal even degrees needs odd genus");
  return ((g + 1) / 2) % 2;
}

int hyperelliptic_spin_from_divisor(const std::vector<int>& fixed,
                                    const std::vector<int>& pairs) {
  int half_deg = 0, parity = 1;
  for (const int k : fixed) {
    require(k >= 1, errc::divisor_mismatch, "divisor coefficients must be positive");
    half_deg += k;
    parity += k / 2;
  }
  for (const int l : pairs) {
    require(l >= 1, errc::divisor_mismatch, "divisor coefficients must be positive");
    half_deg += 2 * l;
    parity += l;
  }
  require(half_deg >= 1, errc::divisor_mismatch, "divisor must have degree g-1 with g >= 2");
  return parity % 2;
}

bool is_hyperelliptic_component(const Permutation& pi) {
  require(is_irreducible(pi), errc::reducible, "permutation is reducible");
  require(!is_degenerate(pi), errc::degenerate, "permutation has a fake zero");
  const std::vector<int> profile = suspension_profile(pi);
  const int g = genus_of_profile(profile);
  const bool candidate = profile == std::vector<int>{2 * g - 2} ||
                         profile == std::vector<int>{g - 1, g - 1};
  if (!candidate) return false;
  std::vector<int> rev(static_cast<size_t>(pi.size()));
  std::iota(rev.rbegin(), rev.rend(), 1);
  return same_component(pi, Permutation{rev});
}

ComponentLabel classify_permutation(const Permutation& pi) {
  require(is_irreducible(pi), errc::reducible, "permutation is reducible");
  require(!is_degenerate(pi), errc::degenerate, "permutation has a fake zero");
  ComponentLabel out;
  out.profile = suspension_profile(pi);
  assert(sorted_desc(out.profile));
  const int g = genus_of_profile(out.profile);
  const auto tags = components_of_stratum(out.profile);
  const bool all_even =
      std::all_of(out.profile.begin(), out.profile.end(), [](int k) { return k % 2 == 0; });
  if (all_even) out.spin_parity = spin_parity_perm(pi);

  using T = ComponentTag;
  if (tags.size() == 1) {
    out.tag = tags[0];
    return out;
  }
  if (tags == std::vector<T>{T::hyperelliptic, T::nonhyperelliptic}) {
    out.tag = is_hyperelliptic_component(pi) ? T::hyperelliptic : T::nonhyperelliptic;
    return out;
  }
  // remaining splits are among strata of even degrees
  assert(all_even);
  const HypKind kind = out.profile.size() == 1 ? HypKind::single : HypKind::pair;
  if (tags == std::vector<T>{T::even_spin, T::odd_spin}) {
    out.tag = out.spin_parity ? T::odd_spin : T::even_spin;
    return out;
  }
  const int hyp_parity = hyperelliptic_parity(g, kind);
  const bool hyp = is_hyperelliptic_component(pi);
  if (hyp) {
    require(out.spin_parity == hyp_parity, errc::internal_contradiction,
            "hyperelliptic class with the wrong spin parity");
    out.tag = T::hyperelliptic;
    return out;
  }
  if (tags == std::vector<T>{T::hyperelliptic, T::odd_spin}) {
    // genus 3: the other component has odd spin
    require(out.spin_parity == 1, errc::internal_contradiction,
            "genus 3 nonhyperelliptic class must have odd parity");
    out.tag = T::odd_spin;
    return out;
  }
  assert((tags == std::vector<T>{T::hyperelliptic, T::even_spin, T::odd_spin}));
  out.tag = out.spin_parity ? T::odd_spin : T::even_spin;
  return out;
}

std::string classification_json(const Permutation& pi) {
  const ComponentLabel label = classify_permutation(pi);
  nlohmann::json j;
  j["component"] = tag_name(label.tag);
  j["genus"] = genus_of_profile(label.profile);
  j["pi"] = pi.images();
  j["profile"] = label.profile;
  if (label.spin_parity < 0)
    j["spin_parity"] = nullptr;
  else
    j["spin_parity"] = label.spin_parity;
  return j.dump();
}

} // namespace strata
