#pragma once

#include <string>
#include <vector>

#include "strata/permutation.hpp"

namespace strata {

enum class ComponentTag { hyperelliptic, even_spin, odd_spin, nonhyperelliptic, connected };

std::string tag_name(ComponentTag t); // "hyperelliptic", "even", ...

struct ComponentLabel {
  std::vector<int> profile;
  ComponentTag tag = ComponentTag::connected;
  int spin_parity = -1; // -1 when some zero has odd degree
  bool operator==(const ComponentLabel&) const = default;
};

// complex dimension 2g+n-1 of the stratum with the given zero degrees
int stratum_dim(const std::vector<int>& profile);
// 2g+n-2 for a meromorphic quadratic stratum; orders may include -1 (poles)
int quadratic_stratum_dim(const std::vector<int>& orders, int g);

// The connected components a stratum splits into, by zero degrees alone.
std::vector<ComponentTag> components_of_stratum(const std::vector<int>& profile);

enum class HypKind { single, pair };
// spin parity of the hyperelliptic component over a single zero of degree
// 2g-2, or over a pair of zeroes of degree g-1 each (odd g only)
int hyperelliptic_parity(int g, HypKind kind);

// parity from a hyperelliptic divisor sum(k_i P_i) + sum(l_j (Q_j + Q_j')),
// points P_i fixed by the involution, pairs Q_j, Q_j' exchanged
int hyperelliptic_spin_from_divisor(const std::vector<int>& fixed, const std::vector<int>& pairs);

// membership in the component of the fully reversing permutation on the
// same letters; only strata over [2g-2] and [g-1,g-1] can say yes
bool is_hyperelliptic_component(const Permutation& pi);

ComponentLabel classify_permutation(const Permutation& pi);

// {"component":..,"genus":..,"pi":[..],"profile":[..],"spin_parity":0|1|null}
std::string classification_json(const Permutation& pi);

} // namespace strata
