#include "strata/iet.hpp"

#include <json.hpp>

namespace strata {

Rational parse_rational(const std::string& text) {
  try {
    return Rational(text);
  } catch (const std::exception&) {
    fail(errc::parse_error, "bad rational: " + text);
  }
}

std::string rational_str(const Rational& r) {
  return r.str();
}

IET build_iet(const Permutation& pi, const std::vector<Rational>& lambda) {
  const int m = pi.size();
  require(static_cast<int>(lambda.size()) == m, errc::bad_lengths,
          "need one length per letter");
  for (const auto& l : lambda)
    require(l > 0, errc::bad_lengths, "lengths must be positive");

  IET t{pi, lambda, {}, {}, Rational(0)};
  t.beta.assign(static_cast<size_t>(m) + 1, Rational(0));
  for (int i = 1; i <= m; ++i) t.beta[static_cast<size_t>(i)] = t.beta[static_cast<size_t>(i) - 1] + lambda[static_cast<size_t>(i) - 1];
  t.total = t.beta.back();

  const auto om = omega_matrix(pi);
  t.delta.assign(static_cast<size_t>(m), Rational(0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (om[static_cast<size_t>(i)][static_cast<size_t>(j)] == 1)
        t.delta[static_cast<size_t>(i)] += lambda[static_cast<size_t>(j)];
      else if (om[static_cast<size_t>(i)][static_cast<size_t>(j)] == -1)
        t.delta[static_cast<size_t>(i)] -= lambda[static_cast<size_t>(j)];

  // Exact audit: the translated pieces must tile the image partition, whose
  // k-th breakpoint accumulates the lengths in image order.
  std::vector<Rational> image_beta(static_cast<size_t>(m) + 1, Rational(0));
  const Permutation inv = pi.inverse();
  for (int k = 1; k <= m; ++k)
    image_beta[static_cast<size_t>(k)] =
        image_beta[static_cast<size_t>(k) - 1] + lambda[static_cast<size_t>(inv(k)) - 1];
  for (int i = 1; i <= m; ++i) {
    require(t.beta[static_cast<size_t>(i) - 1] + t.delta[static_cast<size_t>(i) - 1] ==
                image_beta[static_cast<size_t>(pi(i)) - 1],
            errc::bad_lengths, "image pieces do not tile (left endpoint)");
    require(t.beta[static_cast<size_t>(i)] + t.delta[static_cast<size_t>(i) - 1] ==
                image_beta[static_cast<size_t>(pi(i))],
            errc::bad_lengths, "image pieces do not tile (right endpoint)");
  }
  return t;
}

namespace {

int interval_of(const IET& t, const Rational& x) {
  require(x >= 0 && x < t.total, errc::bad_index, "point outside the interval");
  int i = 1;
  while (x >= t.beta[static_cast<size_t>(i)]) ++i;
  return i;
}

// A breakpoint is a genuine discontinuity unless the two adjacent pieces land
// on cyclically consecutive image slots.
bool genuine_discontinuity(const IET& t, const Rational& x) {
  const int m = t.pi.size();
  for (int i = 1; i < m; ++i)
    if (x == t.beta[static_cast<size_t>(i)])
      return t.pi(i + 1) != t.pi(i) % m + 1;
  return false;
}

} // namespace

Rational iet_apply(const IET& t, const Rational& x) {
  return x + t.delta[static_cast<size_t>(interval_of(t, x)) - 1];
}

std::vector<Rational> iet_orbit(const IET& t, const Rational& x, int n) {
  require(n >= 0, errc::bad_index, "negative orbit length");
  std::vector<Rational> orbit{x};
  for (int k = 0; k <= n; ++k) {
    if (genuine_discontinuity(t, orbit.back()))
      throw SingularOrbit(k, "orbit hits a discontinuity after " + std::to_string(k) + " steps");
    if (k < n) orbit.push_back(iet_apply(t, orbit.back()));
  }
  return orbit;
}

IET rauzy_step(const IET& t) {
  const int m = t.pi.size();
  require(m >= 2, errc::bad_index, "induction needs at least two letters");
  require(is_irreducible(t.pi), errc::reducible, "induction needs an irreducible permutation");
  const int v = t.pi.inverse()(m); // occupies the last image slot
  const Rational& lam_m = t.lambda[static_cast<size_t>(m) - 1];
  const Rational& lam_v = t.lambda[static_cast<size_t>(v) - 1];
  require(lam_m != lam_v, errc::bad_lengths,
          "induction undefined: the two candidate subintervals tie");
  if (lam_v < lam_m) {
    // Cut the image tail: the last domain piece shrinks.
    std::vector<Rational> lam = t.lambda;
    lam[static_cast<size_t>(m) - 1] = lam_m - lam_v;
    return build_iet(rauzy_b(t.pi), lam);
  }
  // Cut the domain tail: piece v splits in two.
  std::vector<Rational> lam;
  lam.reserve(static_cast<size_t>(m));
  for (int i = 1; i < v; ++i) lam.push_back(t.lambda[static_cast<size_t>(i) - 1]);
  lam.push_back(lam_v - lam_m);
  lam.push_back(lam_m);
  for (int i = v + 1; i < m; ++i) lam.push_back(t.lambda[static_cast<size_t>(i) - 1]);
  return build_iet(rauzy_a(t.pi), lam);
}

std::string iet_json(const IET& t) {
  nlohmann::json j;
  j["pi"] = t.pi.images();
  std::vector<std::string> lams;
  for (const auto& l : t.lambda) lams.push_back(rational_str(l));
  j["lambda"] = lams;
  return j.dump();
}

IET iet_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(errc::parse_error, std::string("bad json: ") + e.what());
  }
  require(j.contains("pi") && j.contains("lambda"), errc::parse_error,
          "iet json needs pi and lambda");
  Permutation pi{j["pi"].get<std::vector<int>>()};
  std::vector<Rational> lambda;
  for (const auto& item : j["lambda"]) lambda.push_back(parse_rational(item.get<std::string>()));
  return build_iet(pi, lambda);
}

} // namespace strata
