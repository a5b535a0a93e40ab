#include <doctest.h>

#include <algorithm>

#include "schur/abelian_group.hpp"
#include "schur/errors.hpp"

using namespace schur;

TEST_CASE("parse group specs") {
  auto g = AbelianGroup::parse("C4xC7");
  CHECK(g.factors() == std::vector<std::uint32_t>{4, 7});
  CHECK(g.order() == 28);
  CHECK(g.spec() == "C4xC7");
  auto h = AbelianGroup::parse("C2xC2xC3");
  CHECK(h.factors() == std::vector<std::uint32_t>{2, 2, 3});
  CHECK(h.order() == 12);
  CHECK(AbelianGroup::parse("C1").order() == 1);
  CHECK_THROWS_AS(AbelianGroup::parse("C0"), SchurError);
  CHECK_THROWS_AS(AbelianGroup::parse("C4x"), ParseError);
  CHECK_THROWS_AS(AbelianGroup::parse("c4"), ParseError);
  CHECK_THROWS_AS(AbelianGroup::parse(""), ParseError);
  try {
    AbelianGroup::parse("C4xD2");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("element arithmetic") {
  auto g = AbelianGroup::parse("C4xC7");
  const std::uint32_t r10[] = {1, 0}, r30[] = {3, 0}, r13[] = {1, 3}, r34[] = {3, 4};
  CHECK(g.mul(g.encode(r10), g.encode(r30)) == g.identity());
  CHECK(g.inv(g.encode(r13)) == g.encode(r34));
  auto h = AbelianGroup::parse("C2xC2xC3");
  const std::uint32_t r111[] = {1, 1, 1};
  CHECK(elem_order(GroupElement{h, h.encode(r111)}) == 6);
  for (Elem x = 0; x < g.order(); ++x) {
    CHECK(g.decode(x).size() == 2);
    CHECK(g.encode(g.decode(x)) == x);
    CHECK(g.inv(g.inv(x)) == x);
    CHECK(g.order() % g.order_of(x) == 0);
    for (Elem y = 0; y < g.order(); ++y) CHECK(g.mul(x, y) == g.mul(y, x));
  }
  CHECK_THROWS_AS(mul(GroupElement{g, 1}, GroupElement{h, 1}), SchurError);
}

TEST_CASE("generated subgroups") {
  auto g = AbelianGroup::parse("C4xC2");
  CHECK(generated_subgroup(g, ElementSet(8)).order() == 1);
  const std::uint32_t r10[] = {1, 0};
  auto c = generated_subgroup(g, ElementSet(8, {g.encode(r10)}));
  CHECK(c.elements().elements() == std::vector<Elem>{0, 2, 4, 6});
  auto e = AbelianGroup::parse("C2xC2xC7");
  const std::uint32_t az[] = {1, 0, 1};
  CHECK(generated_subgroup(e, ElementSet(28, {e.encode(az)})).order() == 14);
  const std::uint32_t abz[] = {1, 1, 1};
  CHECK(generated_subgroup(e, ElementSet(28, {e.encode(az), e.encode(abz)})).order() == 28);
  // idempotent and monotone
  auto s = generated_subgroup(e, ElementSet(28, {3}));
  CHECK(generated_subgroup(e, s.elements()) == s);
  CHECK(s.is_subgroup_of(generated_subgroup(e, ElementSet(28, {3, 9}))));
}

TEST_CASE("subgroup lattices") {
  CHECK(all_subgroups(AbelianGroup::parse("C2xC2")).size() == 5);
  CHECK(all_subgroups(AbelianGroup::parse("C7")).size() == 2);
  CHECK(all_subgroups(AbelianGroup::parse("C4xC2")).size() == 8);
  CHECK(all_subgroups(AbelianGroup::parse("C2xC2xC2")).size() == 16);
  auto g = AbelianGroup::parse("C2xC6");
  auto subs = all_subgroups(g);
  for (std::size_t i = 1; i < subs.size(); ++i) CHECK(subs[i - 1].order() <= subs[i].order());
  for (auto& a : subs)
    for (auto& b : subs) {
      auto meet = a.elements() & b.elements();
      CHECK(std::find_if(subs.begin(), subs.end(), [&](auto& s) { return s.elements() == meet; }) != subs.end());
    }
}

TEST_CASE("automorphisms and isomorphisms") {
  CHECK(automorphisms(AbelianGroup::parse("C2xC2")).size() == 6);
  CHECK(automorphisms(AbelianGroup::parse("C5")).size() == 4);
  CHECK(automorphisms(AbelianGroup::parse("C1")).size() == 1);
  CHECK(automorphisms(AbelianGroup::parse("C2xC2xC2")).size() == 168);
  CHECK(isomorphisms(AbelianGroup::parse("C4"), AbelianGroup::parse("C2xC2")).empty());
  auto a = AbelianGroup::parse("C2xC6"), b = AbelianGroup::parse("C2xC2xC3");
  auto isos = isomorphisms(a, b);
  CHECK(isos.size() == automorphisms(a).size());
  CHECK(isos.size() == 12);
  for (auto& f : isos) {
    CHECK(f.is_homomorphism());
    CHECK(f.is_bijective());
  }
  CHECK(are_isomorphic(AbelianGroup::parse("C12"), AbelianGroup::parse("C4xC3")));
  CHECK_FALSE(are_isomorphic(AbelianGroup::parse("C8"), AbelianGroup::parse("C4xC2")));
}

TEST_CASE("morphism composition") {
  auto g = AbelianGroup::parse("C7");
  auto f = GroupMorphism::from_generator_images(g, g, {3});
  auto id = GroupMorphism::identity(g);
  CHECK(f.after(f.inverse()) == id);
  CHECK(f.inverse().after(f) == id);
  CHECK(f(2) == 6);
  CHECK_THROWS_AS(GroupMorphism::from_generator_images(AbelianGroup::parse("C4"), AbelianGroup::parse("C6"), {1}),
                  SchurError);
}

TEST_CASE("quotients") {
  auto g = AbelianGroup::parse("C4xC7");
  auto whole = Subgroup::whole(g), triv = Subgroup::trivial(g);
  auto q = quotient(g, whole, triv);
  CHECK(q.order() == 28);
  CHECK(are_isomorphic(q.quotient, g));
  ElementSet c7(28);
  for (Elem z = 0; z < 7; ++z) c7.insert(z);
  auto p = Subgroup::from_set(g, c7);
  auto q2 = quotient(g, whole, p);
  CHECK(q2.order() == 4);
  CHECK(q2.quotient.spec() == "C4");

  auto h = AbelianGroup::parse("C2xC2xC5");
  const std::uint32_t ra[] = {1, 0, 0}, rb[] = {0, 1, 0}, rab[] = {1, 1, 0};
  auto e = Subgroup::from_set(h, ElementSet(20, {0, h.encode(ra), h.encode(rb), h.encode(rab)}));
  auto l = Subgroup::from_set(h, ElementSet(20, {0, h.encode(ra)}));
  auto s = quotient(h, e, l);
  CHECK(s.order() == 2);
  CHECK(s.order() * l.order() == e.order());
  for (Elem x : e.elements().elements())
    for (Elem y : e.elements().elements())
      CHECK((s.projection[x] == s.projection[y]) == l.contains(h.mul(x, h.inv(y))));
  for (Elem x = 0; x < 20; ++x)
    if (!e.contains(x)) CHECK(s.projection[x] == -1);
  CHECK_THROWS_AS(quotient(h, l, e), SchurError);
}

TEST_CASE("groups of a given order") {
  std::vector<std::string> specs;
  for (auto& g : abelian_groups_of_order(24)) specs.push_back(g.spec());
  CHECK(specs == std::vector<std::string>{"C8xC3", "C4xC2xC3", "C2xC2xC2xC3"});
  CHECK(abelian_groups_of_order(28).size() == 2);
  CHECK(abelian_groups_of_order(1).size() == 1);
  CHECK(abelian_groups_of_order(27).size() == 3);
}

TEST_CASE("capacity bound") {
  const auto saved = capacity_bound();
  set_capacity_bound(16);
  CHECK_THROWS_AS(require_capacity(20, "test"), SchurError);
  CHECK_NOTHROW(require_capacity(16, "test"));
  set_capacity_bound(saved);
}
