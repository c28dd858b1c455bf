#include <catch2/catch_amalgamated.hpp>

#include "sgzs/catalog.hpp"
#include "sgzs/decomposition.hpp"
#include "sgzs/zerosum.hpp"

#include "fixtures.hpp"

using namespace sgzs;

TEST_CASE("ideal membership") {
  CHECK(is_ideal(fixtures::n2(), {1}));
  CHECK(is_ideal(fixtures::e3(), {2}));
  CHECK_FALSE(is_ideal(fixtures::c2(), {0}));
  CHECK_THROWS_AS(is_ideal(fixtures::c2(), {}), EmptyInput);
}

TEST_CASE("minimal ideal") {
  CHECK(minimal_ideal(fixtures::m3()).members == std::vector<element_id>{1, 2});
  CHECK(minimal_ideal(fixtures::n2()).members == std::vector<element_id>{1});
  CHECK(minimal_ideal(fixtures::c3()).members == std::vector<element_id>{0, 1, 2});
}

TEST_CASE("minimal ideal is contained in every ideal, order <= 3") {
  for (int n = 1; n <= 3; ++n) {
    for (auto const& entry : generate_commutative(n)) {
      auto const& s = entry.semigroup;
      auto const kernel = minimal_ideal(s).members;
      for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<element_id> subset;
        for (element_id a = 0; a < n; ++a) {
          if (mask & (1u << a)) {
            subset.push_back(a);
          }
        }
        if (is_ideal(s, subset)) {
          CHECK(std::includes(subset.begin(), subset.end(), kernel.begin(),
                              kernel.end()));
        }
      }
    }
  }
}

TEST_CASE("Rees quotients collapse the ideal to a top-id zero") {
  auto q = rees_quotient(fixtures::m3(), Ideal{{1, 2}});
  CHECK(q.target == fixtures::n2());
  CHECK(q.projection == std::vector<element_id>{0, 1, 1});

  q = rees_quotient(fixtures::n2(), Ideal{{1}});
  CHECK(q.target == fixtures::n2());

  q = rees_quotient(fixtures::e3(), Ideal{{2}});
  CHECK(q.target == fixtures::e3());

  CHECK_THROWS_AS(rees_quotient(fixtures::c2(), Ideal{{0}}), NotAnIdeal);
}

TEST_CASE("Davenport never grows under a Rees quotient, fixtures") {
  for (auto const& [name, sg] : fixtures::all()) {
    int const d = davenport(sg);
    for (unsigned mask = 1; mask < (1u << sg.order()); ++mask) {
      std::vector<element_id> subset;
      for (element_id a = 0; a < sg.order(); ++a) {
        if (mask & (1u << a)) {
          subset.push_back(a);
        }
      }
      if (is_ideal(sg, subset)) {
        INFO(name);
        CHECK(davenport(rees_quotient(sg, Ideal{subset}).target) <= d);
      }
    }
  }
}

TEST_CASE("nilpotency index") {
  CHECK(nilpotency(fixtures::n2()) == 2);
  CHECK(nilpotency(fixtures::z1()) == 1);
  CHECK_FALSE(nilpotency(fixtures::c2()).has_value());
  CHECK(nilpotency(fixtures::m3nil()) == 3);
  CHECK_FALSE(nilpotency(fixtures::sl2()).has_value());  // zero, but e is not nilpotent
}

TEST_CASE("annihilators") {
  CHECK(annihilator(fixtures::n2(), 0) == std::vector<element_id>{0, 1});
  CHECK(annihilator(fixtures::n2(), 1) == std::vector<element_id>{0, 1, 2});
  CHECK(annihilator(fixtures::z1(), 0) == std::vector<element_id>{0});
  CHECK_THROWS_AS(annihilator(fixtures::c2(), 0), NotNilsemigroup);
}

TEST_CASE("annihilator classes") {
  CHECK(p_classes(fixtures::n2()).classes
        == std::vector<std::vector<element_id>>{{0}, {1}});
  CHECK(p_classes(fixtures::z1()).classes
        == std::vector<std::vector<element_id>>{{0}});
  CHECK(p_classes(fixtures::m3nil()).classes
        == std::vector<std::vector<element_id>>{{0}, {1}, {2}});
  CHECK_THROWS_AS(p_classes(fixtures::sl2()), NotNilsemigroup);
}

TEST_CASE("nil addition and annihilator strictness on nil fixtures") {
  std::vector<Semigroup> nils = {fixtures::n2(), fixtures::m3nil(), fixtures::z1()};
  for (auto const& s : nils) {
    element_id const zero = *special_elements(s).zero;
    for (element_id a = 0; a < s.order(); ++a) {
      for (element_id b = 0; b < s.order(); ++b) {
        if (s.sum(a, b) == a) {
          CHECK(a == zero);
        }
        if (a != b && green_leq(s, a, b) && !green_leq(s, b, a)) {
          auto const ann_a = annihilator(s, a);
          auto const ann_b = annihilator(s, b);
          CHECK(ann_b.size() < ann_a.size());
          CHECK(std::includes(ann_a.begin(), ann_a.end(), ann_b.begin(),
                              ann_b.end()));
        }
      }
    }
  }
}

TEST_CASE("archimedean test") {
  CHECK(is_archimedean(fixtures::m3()));
  CHECK_FALSE(is_archimedean(fixtures::sl2()));
  CHECK(is_archimedean(fixtures::c2()));
  CHECK(is_archimedean(fixtures::n2()));
  CHECK_FALSE(is_archimedean(fixtures::e3()));
}

TEST_CASE("semilattice decomposition") {
  auto dec = semilattice_decomposition(fixtures::sl2());
  CHECK(dec.components.classes
        == std::vector<std::vector<element_id>>{{0}, {1}});
  CHECK(dec.semilattice == fixtures::sl2());

  dec = semilattice_decomposition(fixtures::m3());
  CHECK(dec.components.classes.size() == 1);

  dec = semilattice_decomposition(fixtures::e3());
  CHECK(dec.components.classes
        == std::vector<std::vector<element_id>>{{0, 1}, {2}});
  CHECK(dec.semilattice == fixtures::sl2());
}

TEST_CASE("semilattice decomposition holds together on small catalogs") {
  for (int n = 1; n <= 3; ++n) {
    for (auto const& entry : generate_commutative(n)) {
      auto const& s = entry.semigroup;
      auto const dec = semilattice_decomposition(s);
      for (element_id a = 0; a < n; ++a) {
        for (element_id b = 0; b < n; ++b) {
          CHECK(dec.components.class_of[s.sum(a, b)]
                == dec.semilattice.sum(dec.components.class_of[a],
                                       dec.components.class_of[b]));
        }
      }
      CHECK(is_group_free(dec.semilattice));
    }
  }
}

TEST_CASE("archimedean structure data") {
  auto data = archimedean_data(fixtures::m3());
  CHECK(data.idempotent == 1);
  CHECK(data.kernel == std::vector<element_id>{1, 2});
  CHECK(data.nil_quotient == fixtures::n2());
  CHECK(data.nilpotency_index_of_quotient == 2);

  data = archimedean_data(fixtures::c3());
  CHECK(data.kernel == std::vector<element_id>{0, 1, 2});
  CHECK(data.nil_quotient.order() == 1);
  CHECK(data.nilpotency_index_of_quotient == 1);

  data = archimedean_data(fixtures::n2());
  CHECK(data.idempotent == 1);
  CHECK(data.kernel == std::vector<element_id>{1});
  CHECK(data.nilpotency_index_of_quotient == 2);

  CHECK_THROWS_AS(archimedean_data(fixtures::sl2()), NotArchimedean);
}

TEST_CASE("archimedean iff kernel is a group and the quotient is nil") {
  for (int n = 1; n <= 3; ++n) {
    for (auto const& entry : generate_commutative(n)) {
      auto const& s = entry.semigroup;
      auto const kernel = minimal_ideal(s);
      bool const kernel_is_group = is_group(restrict_to(s, kernel.members).sg);
      bool const quotient_nil =
          nilpotency(rees_quotient(s, kernel).target).has_value();
      CHECK(is_archimedean(s) == (kernel_is_group && quotient_nil));
    }
  }
}

TEST_CASE("kernel retraction") {
  auto const m3 = fixtures::m3();
  auto const data = archimedean_data(m3);
  CHECK(kernel_retraction(m3, data, 0) == 2);  // e + x = 3x
  CHECK(kernel_retraction(m3, data, 1) == 1);
  auto const n2 = fixtures::n2();
  auto const n2_data = archimedean_data(n2);
  CHECK(kernel_retraction(n2, n2_data, 0) == 1);

  // idempotent as a map, identity on the kernel
  for (element_id a = 0; a < m3.order(); ++a) {
    element_id const r = kernel_retraction(m3, data, a);
    CHECK(std::find(data.kernel.begin(), data.kernel.end(), r)
          != data.kernel.end());
    CHECK(kernel_retraction(m3, data, r) == r);
  }
}

TEST_CASE("elementary split") {
  auto split = elementary_split(fixtures::e3());
  REQUIRE(split.has_value());
  CHECK(split->group_part == std::vector<element_id>{0, 1});
  CHECK(split->nil_part == std::vector<element_id>{2});

  CHECK_FALSE(elementary_split(fixtures::n2()).has_value());  // no identity
  CHECK_FALSE(elementary_split(fixtures::c2()).has_value());  // no nil part
  CHECK_FALSE(elementary_split(fixtures::z1()).has_value());

  split = elementary_split(fixtures::sl2());
  REQUIRE(split.has_value());
  CHECK(split->group_part == std::vector<element_id>{0});
  CHECK(split->nil_part == std::vector<element_id>{1});
}

TEST_CASE("group elements permute annihilator classes of the nil part") {
  for (auto const& [name, sg] : fixtures::all()) {
    auto const split = elementary_split(sg);
    if (!split.has_value()) {
      continue;
    }
    INFO(name);
    auto const nil_sub = restrict_to(sg, split->nil_part);
    auto const classes = p_classes(nil_sub.sg);
    for (element_id g : split->group_part) {
      for (auto const& cls : classes.classes) {
        std::set<element_id> orig;
        std::set<element_id> image;
        for (element_id local : cls) {
          orig.insert(nil_sub.members[local]);
          image.insert(sg.sum(g, nil_sub.members[local]));
        }
        CHECK(orig == image);
      }
    }
  }
}

TEST_CASE("maximal subgroups at idempotents") {
  CHECK(canonical_form(maximal_subgroup_at(fixtures::m3(), 1))
        == canonical_form(fixtures::c2()));
  CHECK(maximal_subgroup_at(fixtures::sl2(), 0).order() == 1);
  CHECK(canonical_form(maximal_subgroup_at(fixtures::e3(), 0))
        == canonical_form(fixtures::c2()));
  CHECK_THROWS_AS(maximal_subgroup_at(fixtures::m3(), 0), NotIdempotent);
}
