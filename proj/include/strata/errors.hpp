#pragma once

#include <stdexcept>
#include <string>

namespace strata {

// Error categories raised by the library.  The CLI maps these onto exit
// codes: input/validation problems (bad permutation, bad diagram, bad
// profile, ...) exit with 2, resource limits with 3.
enum class errc {
  not_a_bijection,
  empty_input,
  parse_error,
  reducible,
  degenerate,
  bad_index,
  member_cap_exceeded,
  bad_lengths,
  singular_orbit,
  bad_profile,
  odd_degree,
  radical_obstruction,
  disconnected,
  dangling_half_edge,
  non_alternating_vertex,
  unbalanced_boundary,
  sign_mismatch_in_pairing,
  bad_pairing,
  not_realizable,
  same_sector,
  bad_sector,
  not_a_petal_pair,
  loop_edge,
  pair_equation_violated,
  bad_parameters,
  divisor_mismatch,
  internal_contradiction,
  unsupported,
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

} // namespace strata
