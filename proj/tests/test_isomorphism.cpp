#include <doctest.h>

#include <algorithm>
#include <memory>

#include "schur/constructions.hpp"
#include "schur/enumerate.hpp"
#include "schur/isomorphism.hpp"

using namespace schur;

namespace {

SRingRef ref(SRing r) { return std::make_shared<const SRing>(std::move(r)); }

std::vector<SRingRef> refs(const AbelianGroup& g) {
  std::vector<SRingRef> out;
  for (auto& r : enumerate_srings(g)) out.push_back(ref(std::move(r)));
  return out;
}

std::vector<SRingRef> refs_of_order(std::size_t n) {
  std::vector<SRingRef> out;
  for (auto& g : abelian_groups_of_order(n))
    for (auto& r : refs(g)) out.push_back(r);
  return out;
}

// Union of the classes whose bit is set in mask.
ElementSet union_of(const SRing& ring, std::uint64_t mask) {
  ElementSet x(ring.group().order());
  for (std::size_t i = 0; i < ring.rank(); ++i)
    if ((mask >> i) & 1) x |= ring.basic_set(i);
  return x;
}

}  // namespace

TEST_CASE("algebraic isomorphisms") {
  auto a = ref(rank2_sring(AbelianGroup::parse("C12")));
  auto b = ref(rank2_sring(AbelianGroup::parse("C2xC2xC3")));
  CHECK(algebraic_isos(a, b).size() == 1);
  for (auto& r : refs(AbelianGroup::parse("C4xC2"))) {
    auto isos = algebraic_isos(r, r);
    std::vector<std::uint32_t> id(r->rank());
    for (std::uint32_t i = 0; i < id.size(); ++i) id[i] = i;
    CHECK(std::any_of(isos.begin(), isos.end(), [&](auto& phi) { return phi.map == id; }));
    for (auto& phi : isos) CHECK(is_algebraic_iso(*r, *r, phi.map));
  }
  CHECK(algebraic_isos(build_family({2, 5, 2}), build_family({3, 5, 2})).empty());
}

TEST_CASE("algebraic isomorphisms preserve lattice data") {
  auto rings = refs_of_order(8);
  for (auto& a : rings) {
    for (auto& b : rings) {
      for (auto& phi : algebraic_isos(a, b)) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << a->rank()); mask += 3) {
          auto x = union_of(*a, mask);
          auto gen = generated_subgroup(a->group(), x).elements();
          CHECK(is_a_set(*a, gen));
          CHECK(phi.image(gen) == generated_subgroup(b->group(), phi.image(x)).elements());
          auto rad = radical(a->group(), x).elements();
          if (is_a_set(*a, rad)) CHECK(phi.image(rad) == radical(b->group(), phi.image(x)).elements());
          CHECK(phi.image(x).size() == x.size());
        }
      }
    }
  }
}

TEST_CASE("Cayley isomorphisms") {
  auto g = AbelianGroup::parse("C2xC6");
  CHECK(cayley_isos(trivial_sring(g), trivial_sring(g)).size() == automorphisms(g).size());
  auto c4 = enumerate_srings(AbelianGroup::parse("C4"));
  CHECK(cayley_isos(c4[1], c4[2]).empty());

  const FamilyDescriptor d{1, 7, 3};
  auto psi = build_family(d), xi = build_family(d, true);
  CHECK_FALSE(psi == xi);
  auto isos = cayley_isos(psi, xi);
  CHECK_FALSE(isos.empty());
  auto fg = d.group();
  const std::uint32_t ra[] = {1, 0, 0}, rb[] = {0, 1, 0}, rz[] = {0, 0, 1};
  auto tau = GroupMorphism::from_generator_images(fg, fg, {fg.encode(rb), fg.encode(ra), fg.encode(rz)});
  CHECK(std::any_of(isos.begin(), isos.end(), [&](auto& f) { return f.map == tau.table(); }));
}

TEST_CASE("combinatorial isomorphisms") {
  auto zc4 = trivial_sring(AbelianGroup::parse("C4"));
  auto zk = trivial_sring(AbelianGroup::parse("C2xC2"));
  CHECK(combinatorial_isos(zc4, zk).empty());
  auto r6 = rank2_sring(AbelianGroup::parse("C6"));
  auto all = combinatorial_isos(r6, r6);
  CHECK(all.size() == 120);
  for (auto& f : all) {
    CHECK(f(0) == 0);
    CHECK(induced_algebraic_iso(f).map == std::vector<std::uint32_t>{0, 1});
  }
  CHECK(combinatorial_isos(r6, r6, 5).size() == 5);
  auto c8 = rank2_sring(AbelianGroup::parse("C8"));
  auto k8 = rank2_sring(AbelianGroup::parse("C2xC2xC2"));
  CHECK(combinatorial_isos(c8, k8, 1).size() == 1);
}

TEST_CASE("induced algebraic isomorphisms compose") {
  for (auto& r : refs(AbelianGroup::parse("C2xC6"))) {
    auto auts = aut_sring(*r, 6);
    for (auto& f : auts) {
      CHECK(combinatorial_class_map(*r, *r, f.map).has_value());
      for (auto& h : auts) {
        CombinatorialIso fh{r, r, std::vector<Elem>(f.map.size())};
        for (Elem x = 0; x < fh.map.size(); ++x) fh.map[x] = f(h(x));
        auto composed = induced_algebraic_iso(fh).map;
        auto pf = induced_algebraic_iso(f).map, ph = induced_algebraic_iso(h).map;
        for (std::uint32_t i = 0; i < composed.size(); ++i) CHECK(composed[i] == pf[ph[i]]);
      }
    }
    std::vector<Elem> id(r->group().order());
    for (Elem x = 0; x < id.size(); ++x) id[x] = x;
    auto phi = induced_algebraic_iso(CombinatorialIso{r, r, id});
    for (std::uint32_t i = 0; i < phi.map.size(); ++i) CHECK(phi.map[i] == i);
  }
}

TEST_CASE("automorphism groups") {
  auto c4 = enumerate_srings(AbelianGroup::parse("C4"));
  CHECK(aut_sring_order(c4[0]) == 24);
  CHECK(aut_sring_order(c4[1]) == 8);
  CHECK(aut_sring_order(c4[2]) == 4);
  CHECK(aut_sring(c4[1]).size() == 8);
  CHECK(to_string(aut_sring_order(rank2_sring(AbelianGroup::parse("C12")))) == "479001600");
  auto g = AbelianGroup::parse("C2xC2xC3");
  auto zg = trivial_sring(g);
  auto auts = aut_sring(zg);
  CHECK(auts.size() == 12);
  for (auto& f : auts)
    for (Elem x = 0; x < 12; ++x) CHECK(f(x) == g.mul(x, f(0)));
  // contains the right translations
  for (auto& r : enumerate_srings(AbelianGroup::parse("C8"))) {
    auto all = aut_sring(r);
    CHECK(all.size() == std::size_t(aut_sring_order(r)));
    for (Elem t = 0; t < 8; ++t) {
      std::vector<Elem> shift(8);
      for (Elem x = 0; x < 8; ++x) shift[x] = r.group().mul(x, t);
      CHECK(std::any_of(all.begin(), all.end(), [&](auto& f) { return f.map == shift; }));
    }
  }
}

TEST_CASE("inducing isomorphisms") {
  auto a = ref(rank2_sring(AbelianGroup::parse("C12")));
  auto b = ref(rank2_sring(AbelianGroup::parse("C2xC6")));
  auto phi = algebraic_isos(a, b).front();
  auto f = find_inducing_isomorphism(phi);
  REQUIRE(f);
  CHECK(induced_algebraic_iso(*f).map == phi.map);

  auto r = ref(enumerate_srings(AbelianGroup::parse("C12"))[5]);
  std::vector<std::uint32_t> id(r->rank());
  for (std::uint32_t i = 0; i < id.size(); ++i) id[i] = i;
  auto g = find_inducing_isomorphism(AlgebraicIso{r, r, id});
  REQUIRE(g);
  CHECK(induced_algebraic_iso(*g).map == id);
}

TEST_CASE("Cayley fast path gives the same verdicts") {
  for (std::size_t n : {8, 12}) {
    auto rings = refs_of_order(n);
    for (auto& a : rings) {
      for (auto& b : rings) {
        for (auto& phi : algebraic_isos(a, b)) {
          auto plain = find_inducing_isomorphism(phi);
          auto fast = find_inducing_isomorphism(phi, InduceOptions{true});
          CHECK(plain.has_value() == fast.has_value());
          if (fast) CHECK(induced_algebraic_iso(*fast).map == phi.map);
        }
      }
    }
  }
}

TEST_CASE("separability at order 20") {
  auto targets = refs_of_order(20);
  std::size_t entries = 0;
  for (auto& a : targets) {
    auto r = separability_check(*a, targets);
    CHECK(r.separable);
    entries += r.entries.size();
    for (auto& e : r.entries) CHECK(e.inducing.has_value());
  }
  CHECK(entries == 501);
  CHECK(separability_check(rank2_sring(AbelianGroup::parse("C2xC2xC5"))).separable);
  CHECK(separability_check(trivial_sring(AbelianGroup::parse("C20"))).separable);
}

TEST_CASE("separability reports do not depend on the worker count") {
  auto targets = refs_of_order(12);
  for (auto& a : targets) {
    auto s = separability_check(*a, targets, Exec::serial());
    auto p = separability_check(*a, targets, Exec{4});
    REQUIRE(s.entries.size() == p.entries.size());
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
      CHECK(s.entries[i].target == p.entries[i].target);
      CHECK(s.entries[i].phi == p.entries[i].phi);
      CHECK(s.entries[i].inducing == p.entries[i].inducing);
    }
  }
}

TEST_CASE("extension counts") {
  auto a = ref(enumerate_srings(AbelianGroup::parse("C8"))[3]);
  std::vector<std::uint32_t> id(a->rank());
  for (std::uint32_t i = 0; i < id.size(); ++i) id[i] = i;
  AlgebraicIso phi{a, a, id};
  auto zero = GroupRingVector::zero(8);
  CHECK(count_extensions(phi, zero, zero) == 1);
  CHECK(extension_uniqueness_check(phi, zero, zero));

  auto fam = ref(build_family({2, 5, 2}));
  std::vector<std::uint32_t> fid(fam->rank());
  for (std::uint32_t i = 0; i < fid.size(); ++i) fid[i] = i;
  for (auto& x : highest_basic_sets(*fam)) {
    auto xi = GroupRingVector::indicator(x);
    CHECK(count_extensions(AlgebraicIso{fam, fam, fid}, xi, xi) == 1);
  }
}
