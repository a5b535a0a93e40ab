#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "schur/errors.hpp"
#include "schur/sring.hpp"
#include "schur/wl.hpp"

using namespace schur;

namespace {

ArcColoring from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  ArcColoring c(n);
  for (std::size_t v = 0; v < n; ++v) c.at(v, v) = 2;
  for (auto [u, v] : edges) c.at(u, v) = c.at(v, u) = 1;
  return c;
}

ArcColoring permuted(const ArcColoring& c, const std::vector<std::size_t>& perm) {
  ArcColoring out(c.n);
  for (std::size_t u = 0; u < c.n; ++u)
    for (std::size_t v = 0; v < c.n; ++v) out.at(perm[u], perm[v]) = c.at(u, v);
  return out;
}

}  // namespace

TEST_CASE("Cayley graphs") {
  auto g = AbelianGroup::parse("C6");
  auto c = cayley_graph(g, ElementSet(6, {1, 5}));
  CHECK(c.at(0, 1) == 1);
  CHECK(c.at(1, 0) == 1);
  CHECK(c.at(0, 2) == 0);
  CHECK(c.at(3, 3) == 2);
  CHECK(c.color_count() == 3);
  CHECK_THROWS_AS(cayley_graph(g, ElementSet(6, {0, 1})), SchurError);
}

TEST_CASE("connection sets") {
  CHECK(connection_sets(AbelianGroup::parse("C12")).size() == 64);
  CHECK(connection_sets(AbelianGroup::parse("C2xC2xC2")).size() == 128);
  CHECK(connection_sets(AbelianGroup::parse("C5"), true).size() == 16);
}

TEST_CASE("six-cycle versus two triangles") {
  auto c6 = from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  auto tt = from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK(wl2_distinguishes(c6, tt));
  CHECK_FALSE(wl2_fingerprint(c6) == wl2_fingerprint(tt));
  CHECK_FALSE(colorings_isomorphic(c6, tt));
}

TEST_CASE("circulants with the same spectrum data") {
  auto g = AbelianGroup::parse("C12");
  auto a = cayley_graph(g, ElementSet(12, {1, 11})), b = cayley_graph(g, ElementSet(12, {5, 7}));
  CHECK_FALSE(wl2_distinguishes(a, b));
  CHECK(colorings_isomorphic(a, b));
}

TEST_CASE("refinement is monotone and invariant") {
  std::mt19937_64 rng(11);
  auto g = AbelianGroup::parse("C2xC6");
  for (auto& x : connection_sets(g)) {
    if (rng() % 4) continue;
    auto c = cayley_graph(g, x);
    auto s = wl2_refine(c);
    // never merges input colours
    for (std::size_t u = 0; u < c.n; ++u)
      for (std::size_t v = 0; v < c.n; ++v)
        for (std::size_t w = 0; w < c.n; ++w)
          if (s.coloring.at(u, v) == s.coloring.at(v, w)) CHECK(c.at(u, v) == c.at(v, w));
    std::vector<std::size_t> perm(c.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto d = permuted(c, perm);
    CHECK(colorings_isomorphic(c, d));
    CHECK(wl2_refine(d).histogram == s.histogram);
    CHECK(wl2_fingerprint(d) == wl2_fingerprint(c));
    CHECK_FALSE(wl2_distinguishes(c, d));
  }
}

TEST_CASE("stable partition of a Cayley graph is the Schur closure") {
  for (auto spec : {"C12", "C2xC6", "C8", "C4xC2", "C2xC2xC2", "C10", "C9"}) {
    auto g = AbelianGroup::parse(spec);
    for (auto& x : connection_sets(g, true)) {
      auto labels = wl_partition_of_group(g, wl2_refine(cayley_graph(g, x)));
      detail::canonicalize_labels(labels);
      CHECK(is_sring_partition(g, labels));
      CHECK(labels == schur_closure(g, {GroupRingVector::indicator(x)}).labels());
    }
  }
}

TEST_CASE("fingerprints agree with the disjoint-union test") {
  for (auto spec : {"C12", "C2xC6"}) {
    auto g = AbelianGroup::parse(spec);
    auto sets = connection_sets(g);
    std::vector<ArcColoring> graphs;
    for (std::size_t i = 0; i < sets.size(); i += 3) graphs.push_back(cayley_graph(g, sets[i]));
    for (std::size_t i = 0; i < graphs.size(); ++i)
      for (std::size_t j = i + 1; j < graphs.size(); ++j)
        CHECK((wl2_fingerprint(graphs[i]) == wl2_fingerprint(graphs[j])) == !wl2_distinguishes(graphs[i], graphs[j]));
  }
}

TEST_CASE("dimension experiment") {
  auto r8 = wl_dimension_experiment(8);
  CHECK(r8.graph_count == 176);
  CHECK(r8.indistinguishable_nonisomorphic.empty());
  auto r12 = wl_dimension_experiment(12);
  CHECK(r12.graph_count == 192);
  CHECK(r12.groups == std::vector<std::string>{"C4xC3", "C2xC2xC3"});
  CHECK(r12.indistinguishable_nonisomorphic.empty());
  auto p12 = wl_dimension_experiment(12, false, Exec{4});
  CHECK(p12.fingerprint_classes == r12.fingerprint_classes);
  CHECK(p12.oracle_calls == r12.oracle_calls);
  CHECK(p12.pair_count == r12.pair_count);
  auto d6 = wl_dimension_experiment(6, true);
  CHECK(d6.graph_count == 32);
  CHECK(d6.indistinguishable_nonisomorphic.empty());
}
