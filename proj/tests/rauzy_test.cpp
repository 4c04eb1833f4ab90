#include <doctest.h>

#include <sstream>

#include "strata/rauzy.hpp"
#include "strata/surface.hpp"

using namespace strata;

namespace {
Permutation P(std::initializer_list<int> img) { return Permutation(std::vector<int>(img)); }
} // namespace

TEST_CASE("plain class of the order reversing permutation on 4 letters") {
  const auto cls = rauzy_class(P({4, 3, 2, 1}));
  CHECK(cls.m == 4);
  CHECK_FALSE(cls.extended);
  CHECK(cls.members.size() == 7);
  CHECK(class_contains(cls, P({4, 3, 2, 1})));
  CHECK(class_contains(cls, P({4, 1, 3, 2})));
  CHECK(class_contains(cls, P({2, 4, 3, 1})));
  CHECK_FALSE(class_contains(cls, P({2, 1})));
  // closed under both moves
  for (const auto& p : cls.members) {
    CHECK(class_contains(cls, rauzy_a(p)));
    CHECK(class_contains(cls, rauzy_b(p)));
  }
}

TEST_CASE("extended class is closed under the reversal conjugation") {
  const auto cls = extended_rauzy_class(P({4, 3, 2, 1}));
  CHECK(cls.extended);
  CHECK(cls.members.size() >= 7);
  for (const auto& p : cls.members) {
    CHECK(class_contains(cls, ad_pi0(p)));
    CHECK(is_irreducible(p));
    CHECK_FALSE(is_degenerate(p));
  }
}

TEST_CASE("membership and component queries") {
  CHECK(same_component(P({4, 3, 2, 1}), P({4, 1, 3, 2})));
  CHECK(same_component(P({4, 1, 3, 2}), P({4, 3, 2, 1})));
  CHECK_FALSE(same_component(P({4, 3, 2, 1}), P({5, 4, 3, 2, 1})));
}

TEST_CASE("member cap aborts early") {
  ClassOptions opt;
  opt.member_cap = 3;
  CHECK_THROWS_WITH_AS(extended_rauzy_class(P({4, 3, 2, 1}), opt),
                       "class exceeds the member cap", Error);
}

TEST_CASE("class archive round trip") {
  const auto cls = rauzy_class(P({4, 3, 2, 1}));
  std::ostringstream os;
  save_class(os, cls, {2});
  const std::string text = os.str();
  CHECK(text.rfind("m=4 generators=ab count=7 profile=2\n", 0) == 0);

  std::istringstream is(text);
  std::vector<int> profile;
  const auto loaded = load_class(is, &profile);
  CHECK(loaded.m == 4);
  CHECK_FALSE(loaded.extended);
  CHECK(loaded.members == cls.members);
  CHECK(profile == std::vector<int>{2});

  std::istringstream bad("m=4 generators=ab count=3 profile=2\n4 3 2 1\n");
  CHECK_THROWS_AS(load_class(bad), Error);
}

TEST_CASE("small census matches the known component counts") {
  const auto rows4 = census(4);
  REQUIRE(rows4.size() == 1);
  CHECK(rows4[0].profile == std::vector<int>{2});
  CHECK(rows4[0].class_count == 1);

  const auto rows5 = census(5);
  REQUIRE(rows5.size() == 1);
  CHECK(rows5[0].profile == std::vector<int>{1, 1});
  CHECK(rows5[0].class_count == 1);

  const auto rows6 = census(6);
  REQUIRE(rows6.size() == 1);
  CHECK(rows6[0].profile == std::vector<int>{4});
  CHECK(rows6[0].class_count == 2);

  const auto tsv = census_tsv(rows6);
  CHECK(tsv.rfind("6\t4\t2\t", 0) == 0);
}
