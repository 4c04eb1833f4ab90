#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "strata/permutation.hpp"

namespace strata {

using Rational = boost::multiprecision::cpp_rational;

Rational parse_rational(const std::string& text); // "p/q" or "p"
std::string rational_str(const Rational& r);

// Interval exchange: subinterval i of [0,total) has length lambda[i-1] and
// is translated by delta[i-1] so that the pieces tile the image in the order
// prescribed by pi.
struct IET {
  Permutation pi;
  std::vector<Rational> lambda;
  std::vector<Rational> delta;
  std::vector<Rational> beta; // domain breakpoints, beta[0]=0 .. beta[m]=total
  Rational total;
};

// Validates positivity and audits, with exact arithmetic, that the translated
// intervals tile the image interval with no gap or overlap.
IET build_iet(const Permutation& pi, const std::vector<Rational>& lambda);

Rational iet_apply(const IET& t, const Rational& x);

// Raised when an orbit lands on a genuine discontinuity (a breakpoint that
// does not cross to the consecutive image slot, cyclically).
struct SingularOrbit : Error {
  SingularOrbit(int step_, const std::string& what) : Error(errc::singular_orbit, what), step(step_) {}
  int step;
};

// x, T(x), ..., T^n(x).  Throws SingularOrbit on touching a discontinuity.
std::vector<Rational> iet_orbit(const IET& t, const Rational& x, int n);

// One step of induction: cuts the shorter of the last domain subinterval and
// the subinterval occupying the last image slot, and returns the first-return
// map.  A tie between the two is rejected.
IET rauzy_step(const IET& t);

// {"pi":[..],"lambda":["p/q",..]}
std::string iet_json(const IET& t);
IET iet_from_json(const std::string& text);

} // namespace strata
