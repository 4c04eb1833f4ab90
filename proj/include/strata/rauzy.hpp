#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "strata/permutation.hpp"

namespace strata {

struct ClassOptions {
  // Abort (resource error) if a closure would exceed this many members.
  std::size_t member_cap = 5'000'000;
};

// Orbit of a permutation under induction moves.  `extended` closures also
// apply the order-reversing conjugation and correspond to connected
// components of the ambient stratum; plain closures correspond to Rauzy
// classes.
struct PermClass {
  int m = 0;
  bool extended = false;
  std::vector<Permutation> members; // sorted lexicographically
};

PermClass rauzy_class(const Permutation& pi, const ClassOptions& opt = {});
PermClass extended_rauzy_class(const Permutation& pi, const ClassOptions& opt = {});

bool class_contains(const PermClass& cls, const Permutation& pi);

// True when the two permutations lie in one extended class, i.e. their
// suspensions live on the same connected component of the stratum.
bool same_component(const Permutation& a, const Permutation& b, const ClassOptions& opt = {});

// Plain-text archive: a header line
//   m=<m> generators=<ab|abd> count=<k> profile=<d1,d2,...>
// followed by one permutation per line, sorted.
void save_class(std::ostream& os, const PermClass& cls, const std::vector<int>& profile);
PermClass load_class(std::istream& is, std::vector<int>* profile_out = nullptr);

struct CensusRow {
  int m = 0;
  std::vector<int> profile; // zero degrees, descending
  int class_count = 0;
  std::vector<std::size_t> class_sizes;      // descending
  std::vector<Permutation> representatives;  // least member of each class, aligned
};

// Partitions all irreducible nondegenerate permutations on m letters into
// extended classes and groups the classes by singularity profile.  Profile
// constancy on each class is spot-checked (every member for m <= 8, a sample
// for larger m).
std::vector<CensusRow> census(int m, const ClassOptions& opt = {});

// Tab separated rows: m, comma separated profile, class count, comma
// separated class sizes.
std::string census_tsv(const std::vector<CensusRow>& rows);

} // namespace strata
