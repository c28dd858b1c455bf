#include <random>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "sgzs/catalog.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace sgzs;

TEST_CASE("parsing well-formed tables") {
  CHECK(parse("1\n0\n") == fixtures::z1());
  CHECK(parse("2\n0 1\n1 0\n") == fixtures::c2());
  CHECK(parse("# comment\n\n2\n\n0 1\n# another\n1 0") == fixtures::c2());
  CHECK(parse("2\r\n0 1\r\n1 0\r\n") == fixtures::c2());
}

TEST_CASE("parsing propagates table validation") {
  CHECK_THROWS_AS(parse("2\n0 1\n0 0\n"), NotCommutative);
  CHECK_THROWS_AS(parse("1\n4\n"), EntryOutOfRange);
}

TEST_CASE("syntax errors carry 1-based line numbers") {
  try {
    parse("x\n");
    FAIL("expected SyntaxError");
  } catch (SyntaxError const& e) {
    CHECK(e.line == 1);
  }
  try {
    parse("2\n0 1\n");  // missing second row
    FAIL("expected SyntaxError");
  } catch (SyntaxError const& e) {
    CHECK(e.line == 3);
  }
  try {
    parse("2\n0 1 0\n1 0\n");
    FAIL("expected SyntaxError");
  } catch (SyntaxError const& e) {
    CHECK(e.line == 2);
  }
  try {
    parse("1\n0\n0\n");
    FAIL("expected SyntaxError");
  } catch (SyntaxError const& e) {
    CHECK(e.line == 3);
  }
  CHECK_THROWS_AS(parse(""), SyntaxError);
  CHECK_THROWS_AS(parse("0\n"), SyntaxError);
  CHECK_THROWS_AS(parse("2 2\n"), SyntaxError);
}

TEST_CASE("serialization is exact and round-trips") {
  CHECK(serialize(fixtures::c2()) == "2\n0 1\n1 0\n");
  CHECK(serialize(fixtures::z1()) == "1\n0\n");
  for (auto const& [name, sg] : fixtures::all()) {
    INFO(name);
    CHECK(parse(serialize(sg)) == sg);
  }
  for (auto const& entry : generate_commutative(3)) {
    CHECK(parse(serialize(entry.semigroup)) == entry.semigroup);
  }
}

TEST_CASE("canonical forms identify isomorphism classes") {
  auto const c2_swapped = relabel(fixtures::c2(), {1, 0});
  CHECK(canonical_form(c2_swapped) == canonical_form(fixtures::c2()));
  CHECK(canonical_form(fixtures::n2()) != canonical_form(fixtures::sl2()));

  std::set<CanonicalForm> c3_forms;
  std::vector<int> perm = {0, 1, 2};
  do {
    c3_forms.insert(canonical_form(relabel(fixtures::c3(), perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(c3_forms.size() == 1);
}

TEST_CASE("canonical form is invariant under random relabelings") {
  std::mt19937 rng(99);
  for (auto const& entry : generate_commutative(3)) {
    auto const want = entry.canonical;
    std::vector<int> perm(3);
    std::iota(perm.begin(), perm.end(), 0);
    for (int round = 0; round < 25; ++round) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_form(relabel(entry.semigroup, perm)) == want);
    }
  }
}

TEST_CASE("canonical form order guard") {
  // null semigroup of order 9: everything sums to 0
  auto const big = Semigroup::from_flat(9, std::vector<element_id>(81, 0));
  CHECK_THROWS_AS(canonical_form(big), OrderTooLarge);
}

TEST_CASE("generation counts small catalogs exactly") {
  CHECK(generate_commutative(1).size() == 1);
  CHECK(generate_commutative(2).size() == 3);
  CHECK(generate_commutative(3).size() == 12);
  CHECK(generate_commutative(4).size() == 58);
  CHECK(generate_commutative(5).size() == 325);
  CHECK_THROWS_AS(generate_commutative(6), OrderTooLarge);
  CHECK_THROWS_AS(generate_commutative(0), OrderTooLarge);
}

TEST_CASE("order 2 classes are the null semigroup, the chain, and C2") {
  std::set<CanonicalForm> got;
  for (auto const& entry : generate_commutative(2)) {
    got.insert(entry.canonical);
  }
  std::set<CanonicalForm> want = {canonical_form(fixtures::n2()),
                                  canonical_form(fixtures::sl2()),
                                  canonical_form(fixtures::c2())};
  CHECK(got == want);
}

TEST_CASE("entries are their own canonical representatives") {
  for (int n = 1; n <= 4; ++n) {
    for (auto const& entry : generate_commutative(n)) {
      CHECK(canonical_form(entry.semigroup) == entry.canonical);
      CHECK(entry.source == "generated");
    }
  }
}

TEST_CASE("backtracking generation matches the brute-force filter") {
  for (int n = 2; n <= 3; ++n) {
    std::set<CanonicalForm> generated;
    for (auto const& entry : generate_commutative(n)) {
      generated.insert(entry.canonical);
    }
    CHECK(generated == oracle::brute_force_classes(n));
  }
}

TEST_CASE("canonical hash is stable and printable") {
  auto const form = canonical_form(fixtures::c2());
  CHECK(form.to_string() == "2:0 1 1 0");
  CHECK(form.hash_hex().size() == 16);
  CHECK(form.hash_hex() == canonical_form(relabel(fixtures::c2(), {1, 0})).hash_hex());
}
