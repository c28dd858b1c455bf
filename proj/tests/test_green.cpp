#include <catch2/catch_amalgamated.hpp>

#include "sgzs/catalog.hpp"
#include "sgzs/green.hpp"

#include "fixtures.hpp"

using namespace sgzs;

TEST_CASE("Green preorder basics") {
  auto const n2 = fixtures::n2();
  CHECK(green_leq(n2, 1, 0));        // inf = a + a
  CHECK_FALSE(green_leq(n2, 0, 1));  // nothing reaches a from inf
  CHECK(green_leq(fixtures::c2(), 0, 1));
}

TEST_CASE("Green preorder is reflexive and transitive on small catalogs") {
  for (int n = 1; n <= 3; ++n) {
    for (auto const& entry : generate_commutative(n)) {
      auto const& s = entry.semigroup;
      for (element_id a = 0; a < n; ++a) {
        CHECK(green_leq(s, a, a));
        for (element_id b = 0; b < n; ++b) {
          for (element_id c = 0; c < n; ++c) {
            if (green_leq(s, a, b) && green_leq(s, b, c)) {
              CHECK(green_leq(s, a, c));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("Green classes on the fixtures") {
  CHECK(green_classes(fixtures::c3()).classes
        == std::vector<std::vector<element_id>>{{0, 1, 2}});
  CHECK(green_classes(fixtures::n2()).classes
        == std::vector<std::vector<element_id>>{{0}, {1}});
  CHECK(green_classes(fixtures::e3()).classes
        == std::vector<std::vector<element_id>>{{0, 1}, {2}});
}

TEST_CASE("Green quotient on the fixtures") {
  CHECK(quotient_green(fixtures::c3()).target.order() == 1);
  CHECK(quotient_green(fixtures::n2()).target == fixtures::n2());
  CHECK(quotient_green(fixtures::e3()).target == fixtures::sl2());
}

TEST_CASE("Green quotient is a group-free homomorphic image, catalog-wide") {
  for (int n = 1; n <= 3; ++n) {
    for (auto const& entry : generate_commutative(n)) {
      auto const& s = entry.semigroup;
      auto const q = quotient_green(s);
      CHECK(is_group_free(q.target));
      for (element_id a = 0; a < n; ++a) {
        for (element_id b = 0; b < n; ++b) {
          CHECK(q.projection[s.sum(a, b)]
                == q.target.sum(q.projection[a], q.projection[b]));
        }
      }
      if (is_group_free(s)) {
        // Green's relation is equality on group-free semigroups
        CHECK(q.target.order() == n);
      }
    }
  }
}

TEST_CASE("group-free test") {
  CHECK(is_group_free(fixtures::n2()));
  CHECK(is_group_free(fixtures::sl2()));
  CHECK_FALSE(is_group_free(fixtures::e3()));
}
