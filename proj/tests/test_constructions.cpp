#include <doctest.h>

#include <algorithm>
#include <map>

#include "schur/constructions.hpp"
#include "schur/enumerate.hpp"
#include "schur/errors.hpp"
#include "schur/isomorphism.hpp"

using namespace schur;

TEST_CASE("tensor products") {
  auto c2 = AbelianGroup::parse("C2"), c3 = AbelianGroup::parse("C3");
  auto t = tensor_product(rank2_sring(c2), rank2_sring(c3));
  CHECK(t.group().spec() == "C2xC3");
  CHECK(t.rank() == 4);
  CHECK(tensor_product(trivial_sring(c2), trivial_sring(c3)) == trivial_sring(t.group()));
  for (auto& a : enumerate_srings(AbelianGroup::parse("C4")))
    for (auto& b : enumerate_srings(AbelianGroup::parse("C5")))
      CHECK(tensor_product(a, b).rank() == a.rank() * b.rank());
}

TEST_CASE("wreath products") {
  auto c4 = AbelianGroup::parse("C4");
  auto l = Subgroup::from_set(c4, ElementSet(4, {0, 2}));
  auto lower = rank2_sring(quotient(c4, l, Subgroup::trivial(c4)).quotient);
  auto upper = rank2_sring(quotient(c4, Subgroup::whole(c4), l).quotient);
  auto w = wreath_product(lower, upper, c4, l);
  CHECK(w.class_lists() == std::vector<std::vector<Elem>>{{0}, {1, 3}, {2}});
  CHECK(w.rank() == lower.rank() + upper.rank() - 1);
  auto wt = is_generalized_wreath(w, l, l);
  CHECK(wt.holds);
  CHECK(wt.proper);
  CHECK(is_generalized_wreath(w, Subgroup::whole(c4), l).holds);
  CHECK_FALSE(is_generalized_wreath(trivial_sring(c4), l, l).holds);

  auto g = AbelianGroup::parse("C2xC6");
  auto h = *unique_subgroup_of_order(g, 3);
  auto lo = trivial_sring(quotient(g, h, Subgroup::trivial(g)).quotient);
  for (auto& up : enumerate_srings(quotient(g, Subgroup::whole(g), h).quotient)) {
    auto r = wreath_product(lo, up, g, h);
    CHECK(r.rank() == lo.rank() + up.rank() - 1);
    CHECK(is_generalized_wreath(r, h, h).holds);
  }
}

TEST_CASE("cyclotomic S-rings") {
  auto c5 = AbelianGroup::parse("C5");
  CHECK(cyclotomic({GroupMorphism::identity(c5)}, c5) == trivial_sring(c5));
  CHECK(cyclotomic(automorphisms(c5), c5) == rank2_sring(c5));
  auto k = AbelianGroup::parse("C2xC2");
  auto swap = GroupMorphism::from_generator_images(k, k, {1, 2});
  auto r = cyclotomic({GroupMorphism::identity(k), swap}, k);
  CHECK(r.class_lists() == std::vector<std::vector<Elem>>{{0}, {1, 2}, {3}});
  auto c4 = AbelianGroup::parse("C4");
  auto wr = validate_sring(c4, {ElementSet(4, {0}), ElementSet(4, {2}), ElementSet(4, {1, 3})});
  CHECK(algebraic_isos(r, wr).size() == 1);
  CHECK_THROWS_AS(cyclotomic({swap}, k), SchurError);
}

TEST_CASE("subdirect products") {
  auto c4 = AbelianGroup::parse("C4"), c2 = AbelianGroup::parse("C2");
  auto w = cyclic_subgroup_of_index(c4, 2);
  CHECK(w.elements().elements() == std::vector<Elem>{0, 2});
  auto sec = quotient(c4, Subgroup::whole(c4), w);
  auto psi = GroupMorphism::from_generator_images(c2, sec.quotient, {1});
  auto a = subdirect_product(c2, c4, psi);
  CHECK(a.order() == 4);
  auto amb = AbelianGroup({2, 4});
  for (Elem e : a.elements().elements()) {
    auto r = amb.decode(e);
    CHECK(r[0] % 2 == r[1] % 2);
  }
  auto c1 = AbelianGroup::parse("C1");
  auto triv = cyclic_subgroup_of_index(c4, 1);
  auto top = quotient(c4, Subgroup::whole(c4), triv);
  CHECK(subdirect_product(c1, c4, GroupMorphism::from_generator_images(c1, top.quotient, {0})).order() == 4);
  CHECK_THROWS_AS(subdirect_product(AbelianGroup::parse("C3"), c4, psi), SchurError);
}

TEST_CASE("family descriptors") {
  auto d = FamilyDescriptor::parse("family:i=2,p=5,k=2");
  CHECK(d == FamilyDescriptor{2, 5, 2});
  CHECK(d.to_string() == "family:i=2,p=5,k=2");
  CHECK(d.group().spec() == "C2xC2xC5");
  CHECK(FamilyDescriptor{3, 5, 2}.group().spec() == "C4xC5");
  CHECK_THROWS_AS(FamilyDescriptor::parse("family:i=2,p=5"), ParseError);
  CHECK_THROWS_AS(FamilyDescriptor::parse("family:i=4,p=5,k=2"), SchurError);
  CHECK_THROWS_AS(build_family({1, 5, 2}), SchurError);  // 3 does not divide 2
  CHECK_THROWS_AS(build_family({2, 7, 3}), SchurError);
  CHECK(least_primitive_root(7) == 3);
  CHECK(least_primitive_root(5) == 2);
  auto k = CyclicAutGroup::make(7, 3);
  CHECK(k.multiplier == 2);
  CHECK(k.elements.size() == 3);
  std::vector<std::string> all;
  for (auto& x : family_descriptors(7)) all.push_back(x.to_string());
  CHECK(all.size() == 6);
}

TEST_CASE("family ranks") {
  const std::map<std::string, std::pair<std::size_t, std::size_t>> expected = {
      {"family:i=2,p=3,k=2", {7, 2}},  {"family:i=3,p=3,k=2", {7, 2}},  {"family:i=2,p=5,k=2", {11, 4}},
      {"family:i=2,p=5,k=4", {7, 2}},  {"family:i=3,p=5,k=2", {11, 4}}, {"family:i=3,p=5,k=4", {7, 2}},
      {"family:i=1,p=7,k=3", {10, 6}}, {"family:i=1,p=7,k=6", {6, 3}},  {"family:i=2,p=7,k=2", {15, 6}},
      {"family:i=2,p=7,k=6", {7, 2}},  {"family:i=3,p=7,k=2", {15, 6}}, {"family:i=3,p=7,k=6", {7, 2}},
  };
  for (auto& [text, counts] : expected) {
    CAPTURE(text);
    auto d = FamilyDescriptor::parse(text);
    auto ring = build_family(d);
    CHECK(ring.rank() == counts.first);
    CHECK(highest_basic_sets(ring).size() == counts.second);
    auto e = *unique_subgroup_of_order(ring.group(), 4), p = *unique_subgroup_of_order(ring.group(), d.p);
    CHECK(is_a_set(ring, e.elements()));
    CHECK(is_a_set(ring, p.elements()));
    for (auto& x : ring.classes()) CHECK(x.size() <= d.k);
    CHECK(restricted_sring(ring, e).rank() == (d.i == 1 ? 2u : 3u));
    auto c = classify_4p(ring);
    CHECK(c.label == CaseLabel::Family);
    CHECK(c.family == d);
    if (d.i == 1) CHECK(find_cayley_iso(ring, build_family(d, true)).has_value());
  }
}

TEST_CASE("highest basic sets") {
  CHECK(highest_basic_sets(trivial_sring(AbelianGroup::parse("C12"))).size() == 4);
  CHECK(highest_basic_sets(rank2_sring(AbelianGroup::parse("C20"))).size() == 1);
}

TEST_CASE("classification labels") {
  auto zg = trivial_sring(AbelianGroup::parse("C2xC2xC3"));
  CHECK(classify_4p(zg).label == CaseLabel::TrivialZG);
  CHECK(classify_4p(rank2_sring(AbelianGroup::parse("C28"))).label == CaseLabel::Rank2);
  auto c = classify_4p(build_family({2, 5, 2}));
  CHECK(c.label == CaseLabel::Family);
  REQUIRE(c.cayley_witness);
  CHECK(c.cayley_witness->is_bijective());
  CHECK_THROWS_AS(classify_4p(trivial_sring(AbelianGroup::parse("C9"))), SchurError);

  std::map<CaseLabel, std::size_t> c2c2c2;
  for (auto& r : enumerate_srings(AbelianGroup::parse("C2xC2xC2"))) ++c2c2c2[classify_4p(r).label];
  CHECK(c2c2c2[CaseLabel::ProperGeneralizedWreath] == 5);
  CHECK(c2c2c2[CaseLabel::Rank2] == 1);
  CHECK(c2c2c2[CaseLabel::TensorDecomposition] == 2);
  CHECK(c2c2c2[CaseLabel::TrivialZG] == 1);

  std::size_t cited = 0;
  for (auto& r : enumerate_srings(AbelianGroup::parse("C8"))) cited += classify_4p(r).label == CaseLabel::CitedSeparable;
  CHECK(cited == 2);
  for (auto& r : enumerate_srings(AbelianGroup::parse("C4xC2")))
    CHECK(classify_4p(r).label != CaseLabel::CitedSeparable);

  const std::map<std::string, std::size_t> families = {{"C2xC2xC3", 1}, {"C4xC3", 1}, {"C2xC2xC5", 2},
                                                       {"C4xC5", 2},    {"C2xC2xC7", 4}, {"C4xC7", 2}};
  for (auto& [spec, count] : families) {
    std::size_t n = 0;
    for (auto& r : enumerate_srings(AbelianGroup::parse(spec))) n += classify_4p(r).label == CaseLabel::Family;
    CAPTURE(spec);
    CHECK(n == count);
  }
}

TEST_CASE("proper wreath witnesses are minimal sections") {
  for (auto& g : abelian_groups_of_order(20)) {
    for (auto& r : enumerate_srings(g)) {
      auto c = classify_4p(r);
      if (c.label != CaseLabel::ProperGeneralizedWreath) continue;
      REQUIRE(c.upper);
      REQUIRE(c.lower);
      auto w = is_generalized_wreath(r, *c.upper, *c.lower);
      CHECK(w.holds);
      CHECK(w.proper);
    }
  }
}

TEST_CASE("tensor projections are classes of the restrictions") {
  for (auto& g : abelian_groups_of_order(12)) {
    auto e = *unique_subgroup_of_order(g, 4), p = *unique_subgroup_of_order(g, 3);
    for (auto& r : enumerate_srings(g)) {
      if (!is_a_set(r, e.elements()) || !is_a_set(r, p.elements())) continue;
      auto re = restricted_sring(r, e);
      const bool e_trivial = re.rank() == 4;
      if (e_trivial) CHECK(is_tensor_decomposition(r, e, p));
      for (auto& x : r.classes()) {
        ElementSet xe(12);
        for (auto v : x.elements()) xe.insert(g.pow(v, 9));  // 9 = 1 mod 4, 0 mod 3
        CHECK(is_a_set(r, xe));
        CHECK(r.find_class(xe).has_value());
      }
    }
  }
}
