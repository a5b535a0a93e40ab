#include <doctest.h>

#include <map>
#include <string>

#include "schur/enumerate.hpp"
#include "schur/errors.hpp"

using namespace schur;

TEST_CASE("small enumerations") {
  CHECK(enumerate_srings(AbelianGroup::parse("C2xC2xC2")).size() == 9);
  CHECK(enumerate_srings(AbelianGroup::parse("C1")).size() == 1);
  auto c4 = enumerate_srings(AbelianGroup::parse("C4"));
  REQUIRE(c4.size() == 3);
  CHECK(c4[0].class_lists() == std::vector<std::vector<Elem>>{{0}, {1, 2, 3}});
  CHECK(c4[1].class_lists() == std::vector<std::vector<Elem>>{{0}, {1, 3}, {2}});
  CHECK(c4[2].rank() == 4);
  CHECK(enumerate_srings(AbelianGroup::parse("C5")).size() == 3);
  CHECK(brute_force_srings(AbelianGroup::parse("C3")).size() == 2);
  CHECK(brute_force_srings(AbelianGroup::parse("C2xC2")).size() == 3);
}

TEST_CASE("enumeration agrees with brute force up to order 12") {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (auto& g : abelian_groups_of_order(n)) {
      CAPTURE(g.spec());
      CHECK(enumerate_srings(g) == brute_force_srings(g));
    }
  }
  CHECK_THROWS_AS(brute_force_srings(AbelianGroup::parse("C14")), SchurError);
}

TEST_CASE("counts up to order 28") {
  const std::map<std::string, std::size_t> expected = {
      {"C2", 1},         {"C3", 2},          {"C4", 3},          {"C2xC2", 3},       {"C5", 3},
      {"C6", 7},         {"C7", 4},          {"C8", 10},         {"C4xC2", 17},      {"C2xC2xC2", 9},
      {"C9", 7},         {"C3xC3", 10},      {"C10", 10},        {"C11", 4},         {"C12", 32},
      {"C2xC6", 33},     {"C13", 6},         {"C14", 13},        {"C15", 21},        {"C16", 37},
      {"C8xC2", 110},    {"C4xC4", 83},      {"C4xC2xC2", 126},  {"C2xC2xC2xC2", 43}, {"C17", 5},
      {"C18", 42},       {"C2xC3xC3", 59},   {"C19", 6},         {"C20", 47},        {"C2xC2xC5", 48},
      {"C21", 27},       {"C22", 13},        {"C23", 4},         {"C24", 172},       {"C4xC2xC3", 380},
      {"C2xC2xC2xC3", 168}, {"C25", 13},     {"C5xC5", 33},      {"C26", 19},        {"C27", 25},
      {"C9xC3", 117},    {"C3xC3xC3", 68},   {"C28", 61},        {"C2xC2xC7", 64},
  };
  for (auto& [spec, count] : expected) {
    CAPTURE(spec);
    CHECK(enumerate_srings(AbelianGroup::parse(spec)).size() == count);
  }
}

TEST_CASE("presentation does not change the count") {
  CHECK(enumerate_srings(AbelianGroup::parse("C4xC7")).size() == 61);
  CHECK(enumerate_srings(AbelianGroup::parse("C2xC6")).size() ==
        enumerate_srings(AbelianGroup::parse("C2xC2xC3")).size());
}

TEST_CASE("output is sorted and canonical") {
  auto g = AbelianGroup::parse("C2xC6");
  CayleyCanonizer canon(g);
  CHECK(canon.automorphism_count() == 12);
  auto rings = enumerate_srings(g);
  for (std::size_t i = 0; i < rings.size(); ++i) {
    CHECK(canon.canonical(rings[i]) == rings[i]);
    if (i) CHECK(sring_less(rings[i - 1], rings[i]));
    for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(canon.equivalent(rings[i].labels(), rings[j].labels()));
  }
}

TEST_CASE("serial and parallel enumeration agree") {
  for (auto spec : {"C2xC2xC2xC2", "C4xC2xC3", "C3xC3xC3"}) {
    auto g = AbelianGroup::parse(spec);
    CAPTURE(spec);
    CHECK(enumerate_srings(g, Exec::serial()) == enumerate_srings(g, Exec{4}));
  }
}

TEST_CASE("capacity limit") {
  const auto saved = capacity_bound();
  set_capacity_bound(8);
  CHECK_THROWS_AS(enumerate_srings(AbelianGroup::parse("C9")), SchurError);
  set_capacity_bound(saved);
}
