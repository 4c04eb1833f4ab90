#include <doctest.h>

#include <algorithm>

#include "strata/diagram.hpp"
#include "strata/errors.hpp"
#include "strata/surface.hpp"

using namespace strata;

namespace {

SeparatrixDiagram torus_diagram() {
  SeparatrixDiagram d;
  d.vertices = {{{0, HalfDir::out}, {1, HalfDir::in}}};
  d.edges = {{0, 1}};
  d.pairing = {{0, 1}};
  return d;
}

// two simple loops on two 4-valent vertices joined by two saddle connections
SeparatrixDiagram two_vertex_genus2() {
  SeparatrixDiagram d;
  d.vertices = {{{0, HalfDir::out}, {1, HalfDir::in}, {4, HalfDir::out}, {7, HalfDir::in}},
                {{3, HalfDir::in}, {2, HalfDir::out}, {5, HalfDir::in}, {6, HalfDir::out}}};
  d.edges = {{0, 1}, {2, 3}, {4, 5}, {6, 7}};
  d.pairing = {{0, 3}, {2, 1}};
  return d;
}

} // namespace

TEST_CASE("torus diagram basics") {
  const auto d = torus_diagram();
  validate_diagram(d);
  CHECK(cylinder_count(d) == 1);
  CHECK(diagram_genus(d) == 1);
  CHECK(diagram_profile(d).empty());
  const auto f = diagram_faces(d);
  REQUIRE(f.boundaries.size() == 2);
  CHECK(f.boundaries[0] == std::vector<int>{0});
  CHECK(f.positive[0]);
  CHECK_FALSE(f.positive[1]);
}

TEST_CASE("validation rejects malformed diagrams") {
  auto d = torus_diagram();
  d.pairing = {{1, 0}};
  CHECK_THROWS_WITH_AS(validate_diagram(d), "each pair must join a positive boundary with a negative one", Error);
  d.pairing.clear();
  CHECK_THROWS_AS(validate_diagram(d), Error);

  SeparatrixDiagram flip;
  flip.vertices = {{{0, HalfDir::in}, {1, HalfDir::out}}};
  flip.edges = {{0, 1}};
  CHECK_THROWS_WITH_AS(validate_diagram(flip), "direction flag of half-edge 0 disagrees with its edge",
                       Error);

  SeparatrixDiagram dup;
  dup.vertices = {{{0, HalfDir::out}, {1, HalfDir::in}, {0, HalfDir::out}, {1, HalfDir::in}}};
  dup.edges = {{0, 1}};
  CHECK_THROWS_WITH_AS(validate_diagram(dup), "half-edge 0 listed twice", Error);

  SeparatrixDiagram nonalt;
  nonalt.vertices = {{{0, HalfDir::out}, {2, HalfDir::out}, {1, HalfDir::in}, {3, HalfDir::in}}};
  nonalt.edges = {{0, 1}, {2, 3}};
  CHECK_THROWS_WITH_AS(validate_diagram(nonalt), "vertex 0 does not alternate in/out", Error);

  // alternating, but one positive and two negative boundary circles
  SeparatrixDiagram unb;
  unb.vertices = {{{0, HalfDir::out}, {1, HalfDir::in}, {2, HalfDir::out}, {3, HalfDir::in}}};
  unb.edges = {{0, 1}, {2, 3}};
  CHECK_THROWS_WITH_AS(validate_diagram(unb), "positive and negative boundary counts differ", Error);
}

TEST_CASE("canonical genus 2 diagram") {
  const auto d = make_canonical(CanonicalKind::H, 2);
  CHECK(d.edges.size() == 3);
  CHECK(cylinder_count(d) == 2);
  CHECK(diagram_genus(d) == 2);
  CHECK(diagram_profile(d) == std::vector<int>{2});
  const auto f = diagram_faces(d);
  REQUIRE(f.boundaries.size() == 4);
  CHECK(f.boundaries[0] == std::vector<int>{0, 4});
  CHECK(f.boundaries[2] == std::vector<int>{2});
  CHECK(d.pairing == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
}

TEST_CASE("canonical families coincide exactly where they should") {
  CHECK(make_canonical(CanonicalKind::O, 2) == make_canonical(CanonicalKind::H, 2));
  CHECK(make_canonical(CanonicalKind::E, 3) == make_canonical(CanonicalKind::H, 3));
  CHECK(make_canonical(CanonicalKind::O, 3) != make_canonical(CanonicalKind::H, 3));
  CHECK(make_canonical(CanonicalKind::E, 4) != make_canonical(CanonicalKind::O, 4));
  CHECK_THROWS_AS(make_canonical(CanonicalKind::E, 2), Error);
  CHECK_THROWS_AS(make_canonical(CanonicalKind::H, 1), Error);
  CHECK(cylinder_count(make_canonical(CanonicalKind::H, 5)) == 5);
  CHECK(diagram_faces(make_canonical(CanonicalKind::H, 5)).boundaries.size() == 10);
}

TEST_CASE("hyperellipticity of the canonical diagrams") {
  for (int g = 2; g <= 6; ++g) CHECK(is_hyperelliptic_diagram(make_canonical(CanonicalKind::H, g)));
  for (int g = 3; g <= 6; ++g)
    CHECK_FALSE(is_hyperelliptic_diagram(make_canonical(CanonicalKind::O, g)));
  for (int g = 4; g <= 6; ++g)
    CHECK_FALSE(is_hyperelliptic_diagram(make_canonical(CanonicalKind::E, g)));
  CHECK_THROWS_AS(is_hyperelliptic_diagram(two_vertex_genus2()), Error);
}

TEST_CASE("realizability: canonical diagrams admit positive lengths") {
  for (const auto kind : {CanonicalKind::H, CanonicalKind::O, CanonicalKind::E}) {
    for (int g = kind == CanonicalKind::E ? 3 : 2; g <= 5; ++g) {
      const auto d = make_canonical(kind, g);
      const auto r = realizability(d);
      REQUIRE(r.realizable);
      for (const auto& l : r.lengths) CHECK(l > 0);
    }
  }
}

TEST_CASE("realizability: a pairing can pin a loop length to zero") {
  auto d = make_canonical(CanonicalKind::H, 2);
  d.pairing = {{0, 3}, {2, 1}}; // long boundary against the short petal
  validate_diagram(d);
  const auto r = realizability(d);
  REQUIRE_FALSE(r.realizable);
  REQUIRE(r.certificate.size() == 3);
  CHECK(std::any_of(r.certificate.begin(), r.certificate.end(),
                    [](const Rational& w) { return w != 0; }));
  CHECK_FALSE(is_hyperelliptic_diagram(d)); // same graph, pairing decides
}

TEST_CASE("reverse_arrows is an involution preserving realizability") {
  const auto d = make_canonical(CanonicalKind::O, 3);
  const auto r = reverse_arrows(d);
  CHECK(r != d);
  CHECK(reverse_arrows(r) == d);
  CHECK(realizability(r).realizable);
  CHECK(diagram_profile(r) == diagram_profile(d));
}

TEST_CASE("bubbling a handle into the torus diagram") {
  const auto t = torus_diagram();
  const auto d = bubble_handle(t, 0, 0, 1);
  CHECK(diagram_genus(d) == 2);
  CHECK(diagram_profile(d) == std::vector<int>{2});
  CHECK(cylinder_count(d) == 2);
  CHECK(realizability(d).realizable);

  CHECK_THROWS_AS(bubble_handle(t, 0, 0, 0), Error); // same sector
  CHECK_THROWS_AS(bubble_handle(t, 0, 0, 5), Error); // out of range

  const auto erased = erase_handle(d, 1);
  CHECK(erased.diagram == t);
  CHECK(erased.angle == 1);
  CHECK_THROWS_AS(erase_handle(d, 0), Error); // that cylinder is not a petal pair
  CHECK_THROWS_AS(erase_handle(t, 0), Error); // bare loop
}

TEST_CASE("erase parity law on the bubbled torus") {
  const auto t = torus_diagram();
  const auto d = bubble_handle(t, 0, 0, 1);
  const int before = spin_parity_surface(diagram_to_surface(t, {1}, {1}, {0}));
  const int after =
      spin_parity_surface(diagram_to_surface(d, {1, 1, 1}, {1, 1}, {0, 0}));
  const int m = erase_handle(d, 1).angle;
  CHECK(((after - before) % 2 + 2) % 2 == (m + 1) % 2);
}

TEST_CASE("rotating a petal pair") {
  const auto d = bubble_handle(torus_diagram(), 0, 0, 1);
  CHECK(rotate_handle(d, 1, 0) == d);
  CHECK(rotate_handle(d, 1, 2) == d); // full circle: valence 6 minus the petals
  const auto r = rotate_handle(d, 1, 1);
  CHECK(r != d);
  validate_diagram(r);
  CHECK(diagram_profile(r) == std::vector<int>{2});
  CHECK(rotate_handle(r, 1, 1) == d);
  CHECK(rotate_handle(d, 1, -1) == r);
}

TEST_CASE("contracting a saddle connection merges the zeroes") {
  const auto d = two_vertex_genus2();
  validate_diagram(d);
  CHECK(diagram_genus(d) == 2);
  CHECK(diagram_profile(d) == std::vector<int>{1, 1});
  CHECK(realizability(d).realizable);

  const auto c = contract_saddle_connection(d, 2);
  CHECK(c.vertices.size() == 1);
  CHECK(diagram_profile(c) == std::vector<int>{2});
  CHECK(diagram_genus(c) == 2);
  CHECK(cylinder_count(c) == 2);
  CHECK_THROWS_AS(contract_saddle_connection(d, 0), Error); // loop
  CHECK_THROWS_AS(contract_saddle_connection(d, 9), Error);
}

TEST_CASE("flat realization of diagrams") {
  const auto t = diagram_to_surface(torus_diagram(), {1}, {1}, {0});
  CHECK(t.n() == 1);
  CHECK(t.h == std::vector<int>{1});
  CHECK(t.v == std::vector<int>{1});

  const auto h2 = make_canonical(CanonicalKind::H, 2);
  const auto s = diagram_to_surface(h2, {1, 1, 1}, {1, 1}, {0, 0});
  CHECK(s.n() == 3);
  CHECK(singularity_profile(s) == std::vector<int>{2});
  CHECK(genus(s) == 2);
  CHECK_THROWS_AS(diagram_to_surface(h2, {1, 1, 2}, {1, 1}, {0, 0}), Error);
  CHECK_THROWS_AS(diagram_to_surface(h2, {1, 1}, {1, 1}, {0, 0}), Error);

  // parity frozen per genus for the centrally symmetric family
  const int want[] = {1, 0, 0, 1};
  for (int g = 2; g <= 5; ++g) {
    const auto hg = make_canonical(CanonicalKind::H, g);
    const std::vector<int> ones(hg.edges.size(), 1);
    const std::vector<int> unit(static_cast<size_t>(g), 1), zero(static_cast<size_t>(g), 0);
    CHECK(spin_parity_surface(diagram_to_surface(hg, ones, unit, zero)) == want[g - 2]);
  }
  const auto o3 = make_canonical(CanonicalKind::O, 3);
  CHECK(spin_parity_surface(diagram_to_surface(o3, std::vector<int>(5, 1), {1, 1, 1},
                                               {0, 0, 0})) == 1);
  const auto e4 = make_canonical(CanonicalKind::E, 4);
  CHECK(spin_parity_surface(diagram_to_surface(e4, std::vector<int>(7, 1), {1, 1, 1, 1},
                                               {0, 0, 0, 0})) == 0);
}

TEST_CASE("diagram serialization") {
  const auto d = make_canonical(CanonicalKind::H, 2);
  const auto text = diagram_json(d);
  CHECK(diagram_from_json(text) == d);
  CHECK(diagram_json(diagram_from_json(text)) == text);
  CHECK_THROWS_AS(diagram_from_json("{\"vertices\":[]}"), Error);

  const auto dot = diagram_dot(torus_diagram());
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("v0 -> v0") != std::string::npos);
}
