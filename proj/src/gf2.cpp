#include "strata/gf2.hpp"

#include "strata/errors.hpp"

namespace strata {

std::uint8_t QuadraticSpace::pair(const std::vector<std::uint8_t>& a,
                                  const std::vector<std::uint8_t>& b) const {
  const size_t k = q_gen.size();
  std::uint8_t acc = 0;
  for (size_t i = 0; i < k; ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < k; ++j) acc ^= static_cast<std::uint8_t>(b[j] & pairing[i][j]);
  }
  return acc;
}

std::uint8_t QuadraticSpace::q(const std::vector<std::uint8_t>& a) const {
  const size_t k = q_gen.size();
  std::uint8_t acc = 0;
  for (size_t i = 0; i < k; ++i)
    if (a[i]) {
      acc ^= q_gen[i];
      for (size_t j = i + 1; j < k; ++j) acc ^= static_cast<std::uint8_t>(a[j] & pairing[i][j]);
    }
  return acc;
}

ArfResult arf_invariant(const QuadraticSpace& space) {
  const size_t k = space.q_gen.size();
  require(space.pairing.size() == k, errc::bad_parameters, "pairing size mismatch");
  for (size_t i = 0; i < k; ++i) {
    require(space.pairing[i].size() == k, errc::bad_parameters, "pairing size mismatch");
    require(space.pairing[i][i] == 0, errc::bad_parameters, "pairing must be alternating");
    for (size_t j = 0; j < k; ++j)
      require(space.pairing[i][j] == space.pairing[j][i], errc::bad_parameters,
              "pairing must be symmetric");
  }

  std::vector<std::vector<std::uint8_t>> basis;
  for (size_t i = 0; i < k; ++i) {
    std::vector<std::uint8_t> e(k, 0);
    e[i] = 1;
    basis.push_back(std::move(e));
  }

  ArfResult out;
  while (true) {
    size_t ui = k, wi = k;
    for (size_t i = 0; i < basis.size() && ui == k; ++i)
      for (size_t j = i + 1; j < basis.size(); ++j)
        if (space.pair(basis[i], basis[j])) {
          ui = i;
          wi = j;
          break;
        }
    if (ui == k) break; // only the radical remains
    auto u = basis[ui], w = basis[wi];
    basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(wi));
    basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(ui));
    for (auto& z : basis) {
      const std::uint8_t cu = space.pair(z, w), cw = space.pair(z, u);
      if (cu)
        for (size_t t = 0; t < k; ++t) z[t] ^= u[t];
      if (cw)
        for (size_t t = 0; t < k; ++t) z[t] ^= w[t];
    }
    out.arf ^= static_cast<int>(space.q(u) & space.q(w));
    out.rank += 2;
  }
  for (const auto& z : basis)
    require(space.q(z) == 0, errc::radical_obstruction,
            "form does not vanish on the radical");
  return out;
}

} // namespace strata
