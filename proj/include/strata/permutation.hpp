#pragma once

#include <string>
#include <vector>

#include "strata/errors.hpp"

namespace strata {

// Permutation of {1..m} written as the sequence of images pi(1)..pi(m).
// These arise as the combinatorial datum of an interval exchange: the i-th
// subinterval of the domain is sent to place pi(i) in the image.
class Permutation {
public:
  explicit Permutation(std::vector<int> images);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<size_t>(i) - 1]; } // 1-based
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const;
  std::string str() const; // space separated images, e.g. "4 3 2 1"

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

private:
  std::vector<int> img_;
};

// Parses one line of whitespace separated images.
Permutation parse_permutation(const std::string& text);

// pi is irreducible when no proper prefix {1..k} is invariant.
bool is_irreducible(const Permutation& pi);

// Cone point degrees of any suspension over pi, descending, computed from
// the corner identifications of the suspension polygon alone; zeros stand
// for removable marked points.
std::vector<int> suspension_profile(const Permutation& pi);

// A permutation is degenerate when the associated suspension acquires a
// removable marked point (a cone angle of exactly 2pi).
bool is_degenerate(const Permutation& pi);

// Skew matrix with entry 1 at (i,j) iff i<j and pi(i)>pi(j), -1 skew.
std::vector<std::vector<int>> omega_matrix(const Permutation& pi);

// Rank of the skew matrix over the rationals; always even, equals twice the
// genus of the suspension.
int omega_rank(const Permutation& pi);

// The cycle (k+1 k+2 ... m) written on one line: 1,..,k,k+2,..,m,k+1.
Permutation tau_cycle(int k, int m);

// Rauzy induction on the combinatorial datum ("a" = the domain sense,
// "b" = the image sense).  Both require irreducible input and preserve
// irreducibility.
Permutation rauzy_a(const Permutation& pi);
Permutation rauzy_b(const Permutation& pi);

// Conjugation by the order-reversing involution: j -> m+1-pi(m+1-j).
Permutation ad_pi0(const Permutation& pi);

bool is_standard(const Permutation& pi); // pi(1)=m and pi(m)=1

// Walks the Rauzy class (generators a,b) from pi and returns the first
// standard permutation met in breadth-first order; deterministic.
Permutation standardize(const Permutation& pi);

// Drops the first and last letter of a standard permutation and relabels:
// result(j) = pi(j+1)-1 for j = 1..m-2.
Permutation interior_restriction(const Permutation& pi);

// Searches the extended Rauzy class of pi (generators a, b and the
// order-reversing conjugation) for a standard permutation whose interior
// restriction is irreducible; breadth-first, deterministic.
Permutation reduce_interior(const Permutation& pi);

} // namespace strata
