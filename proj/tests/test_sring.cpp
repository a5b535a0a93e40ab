#include <doctest.h>

#include <algorithm>
#include <random>

#include "schur/constructions.hpp"
#include "schur/enumerate.hpp"
#include "schur/errors.hpp"
#include "schur/sring.hpp"

using namespace schur;

namespace {

std::vector<ElementSet> sets(std::size_t n, std::initializer_list<std::initializer_list<std::uint32_t>> lists) {
  std::vector<ElementSet> out;
  for (auto& l : lists) out.emplace_back(n, l);
  return out;
}

ErrorCode validation_error(const AbelianGroup& g, const std::vector<ElementSet>& classes) {
  try {
    validate_sring(g, classes);
  } catch (const SchurError& e) {
    return e.code();
  }
  return ErrorCode::Usage;
}

}  // namespace

TEST_CASE("validate trivial and rank 2") {
  auto g = AbelianGroup::parse("C2xC6");
  auto zg = trivial_sring(g);
  CHECK(zg.rank() == 12);
  auto r2 = rank2_sring(g);
  CHECK(r2.rank() == 2);
  CHECK(r2.basic_set(1).size() == 11);
  CHECK(validate_sring(g, zg.classes()) == zg);
}

TEST_CASE("validation errors") {
  auto c4 = AbelianGroup::parse("C4");
  CHECK(validation_error(c4, sets(4, {{0}, {1}, {2, 3}})) == ErrorCode::NotInverseClosed);
  CHECK(validation_error(c4, sets(4, {{0}, {1, 3}})) == ErrorCode::NotPartition);
  CHECK(validation_error(c4, sets(4, {{0, 2}, {1, 3}})) == ErrorCode::MissingIdentityClass);
  auto c6 = AbelianGroup::parse("C6");
  CHECK(validation_error(c6, sets(6, {{0}, {1, 5}, {2, 3, 4}})) == ErrorCode::ModuleClosure);
  auto c4r3 = validate_sring(c4, sets(4, {{0}, {2}, {1, 3}}));
  CHECK(c4r3.rank() == 3);
}

TEST_CASE("canonical class order") {
  auto c4 = AbelianGroup::parse("C4");
  auto r = validate_sring(c4, sets(4, {{3, 1}, {2}, {0}}));
  CHECK(r.class_lists() == std::vector<std::vector<Elem>>{{0}, {1, 3}, {2}});
  CHECK(validate_sring(c4, r.classes()) == r);
}

TEST_CASE("structure constants") {
  auto g = AbelianGroup::parse("C2xC3");
  auto zg = trivial_sring(g);
  for (Elem x = 0; x < 6; ++x)
    for (Elem y = 0; y < 6; ++y)
      for (Elem z = 0; z < 6; ++z)
        CHECK(zg.constants().at(zg.class_of(x), zg.class_of(y), zg.class_of(z)) == (g.mul(x, y) == z ? 1u : 0u));
  auto r2 = rank2_sring(AbelianGroup::parse("C12"));
  CHECK(r2.constants().at(1, 1, 1) == 10);
  for (auto& ring : enumerate_srings(AbelianGroup::parse("C4xC2"))) {
    const auto& c = ring.constants();
    const auto k = ring.rank();
    for (std::uint32_t i = 0; i < k; ++i) {
      CHECK(c.at(i, ring.inverse_class(i), 0) == ring.basic_set(i).size());
      for (std::uint32_t j = 0; j < k; ++j) {
        std::size_t mass = 0;
        for (std::uint32_t z = 0; z < k; ++z) {
          mass += std::size_t(c.at(i, j, z)) * ring.basic_set(z).size();
          CHECK(c.at(i, j, z) == c.at(j, i, z));
        }
        CHECK(mass == ring.basic_set(i).size() * ring.basic_set(j).size());
        CHECK(c.at(i, j, 0) == (j == ring.inverse_class(i) ? ring.basic_set(i).size() : 0));
      }
    }
  }
}

TEST_CASE("A-sets and A-subgroups") {
  auto g = AbelianGroup::parse("C12");
  auto r2 = rank2_sring(g);
  CHECK(is_a_set(r2, ElementSet(12)));
  CHECK(a_subgroups(r2).size() == 2);
  CHECK_FALSE(is_a_set(r2, ElementSet(12, {1})));
  CHECK(a_subgroups(trivial_sring(g)).size() == 6);
  auto fam = build_family(FamilyDescriptor{2, 7, 2});
  CHECK(is_a_set(fam, unique_subgroup_of_order(fam.group(), 4)->elements()));
  CHECK(is_a_set(fam, unique_subgroup_of_order(fam.group(), 7)->elements()));
}

TEST_CASE("radicals") {
  auto g = AbelianGroup::parse("C12");
  CHECK(radical(g, ElementSet::full(12)).order() == 12);
  CHECK(radical(g, ElementSet(12, {5})).order() == 1);
  CHECK(radical(g, ElementSet(12, {0, 3, 6, 9})).elements().elements() == std::vector<Elem>{0, 3, 6, 9});
  CHECK(radical(g, ElementSet(12, {1, 4, 7, 10})).order() == 4);
}

TEST_CASE("induced S-rings") {
  auto c4 = AbelianGroup::parse("C4");
  auto w = validate_sring(c4, sets(4, {{0}, {2}, {1, 3}}));
  auto l = Subgroup::from_set(c4, ElementSet(4, {0, 2}));
  auto top = induced_sring(w, quotient(c4, Subgroup::whole(c4), l));
  CHECK(top.rank() == 2);
  auto same = induced_sring(w, quotient(c4, Subgroup::whole(c4), Subgroup::trivial(c4)));
  CHECK(same.rank() == 3);
  auto bottom = restricted_sring(w, l);
  CHECK(bottom.group().order() == 2);
  CHECK(bottom.rank() == 2);
  auto c12 = AbelianGroup::parse("C12");
  auto zg = trivial_sring(c12);
  auto h = *unique_subgroup_of_order(c12, 4);
  CHECK(restricted_sring(zg, h).rank() == 4);
}

TEST_CASE("rational conjugation") {
  auto c7 = AbelianGroup::parse("C7");
  auto fam = validate_sring(c7, sets(7, {{0}, {1, 2, 4}, {3, 5, 6}}));
  CHECK(rational_conjugate(fam, ElementSet(7, {1, 2, 4}), 1) == ElementSet(7, {1, 2, 4}));
  CHECK(rational_conjugate(fam, ElementSet(7, {1, 2, 4}), 3) == ElementSet(7, {3, 5, 6}));
  CHECK(rational_conjugate(fam, ElementSet(7, {1, 2, 4}), -1) == ElementSet(7, {3, 5, 6}));
  CHECK_THROWS_AS(rational_conjugate(fam, ElementSet(7, {1, 2, 4}), 7), SchurError);
  CHECK(multiplier_units(AbelianGroup::parse("C2xC6")) == std::vector<std::uint32_t>{1, 5});
}

TEST_CASE("Schur-Wielandt operator") {
  auto c6 = AbelianGroup::parse("C6");
  auto zg = trivial_sring(c6);
  auto w = validate_sring(c6, sets(6, {{0}, {3}, {1, 4}, {2, 5}}));
  CHECK(schur_wielandt(w, ElementSet(6, {1, 4}), 2).empty());
  CHECK(schur_wielandt(zg, ElementSet(6, {1}), 2) == ElementSet(6, {2}));
  CHECK_THROWS_AS(schur_wielandt(zg, ElementSet(6, {1}), 5), SchurError);

  const FamilyDescriptor d{1, 7, 3};
  auto fam = build_family(d);
  auto g = fam.group();
  const std::uint32_t ra[] = {1, 0, 0}, rb[] = {0, 1, 0}, rab[] = {1, 1, 0};
  const ElementSet o(28, {g.encode(ra), g.encode(rb), g.encode(rab)});
  auto highest = highest_basic_sets(fam);
  CHECK(highest.size() == 6);
  for (auto& x : highest) CHECK(schur_wielandt(fam, x, 7) == o);
}

TEST_CASE("Schur closure") {
  auto g = AbelianGroup::parse("C2xC6");
  CHECK(schur_closure(g, {}) == rank2_sring(g));
  std::vector<GroupRingVector> singletons;
  for (Elem x = 0; x < 12; ++x) singletons.push_back(GroupRingVector::indicator(ElementSet(12, {x})));
  CHECK(schur_closure(g, singletons) == trivial_sring(g));
  for (auto& d : family_descriptors(5)) {
    auto fam = build_family(d);
    for (auto& x : highest_basic_sets(fam)) CHECK(schur_closure(fam.group(), {GroupRingVector::indicator(x)}) == fam);
  }
}

TEST_CASE("closure is a closure operator") {
  std::mt19937_64 rng(7);
  for (auto spec : {"C8", "C4xC2", "C2xC6", "C9"}) {
    auto g = AbelianGroup::parse(spec);
    for (auto& ring : enumerate_srings(g)) {
      std::vector<GroupRingVector> seeds;
      for (auto& x : ring.classes()) seeds.push_back(GroupRingVector::indicator(x));
      CHECK(schur_closure(g, seeds) == ring);
      std::shuffle(seeds.begin(), seeds.end(), rng);
      CHECK(schur_closure(g, seeds) == ring);
      // extensive and idempotent on a random seed
      ElementSet x(g.order());
      for (Elem e = 1; e < g.order(); ++e)
        if (rng() % 3 == 0) x.insert(e);
      auto c = schur_closure(g, {GroupRingVector::indicator(x)});
      CHECK(is_a_set(c, x));
      std::vector<GroupRingVector> again;
      for (auto& y : c.classes()) again.push_back(GroupRingVector::indicator(y));
      CHECK(schur_closure(g, again) == c);
    }
  }
}
