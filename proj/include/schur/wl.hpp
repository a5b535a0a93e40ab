#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "schur/abelian_group.hpp"
#include "schur/parallel.hpp"

namespace schur {

/// Colour per ordered vertex pair, row-major.
struct ArcColoring {
  std::size_t n = 0;
  std::vector<std::uint32_t> colors;

  ArcColoring() = default;
  explicit ArcColoring(std::size_t vertices) : n(vertices), colors(vertices * vertices, 0) {}

  std::uint32_t at(std::size_t u, std::size_t v) const { return colors[u * n + v]; }
  std::uint32_t& at(std::size_t u, std::size_t v) { return colors[u * n + v]; }
  std::size_t color_count() const;
};

struct StableColoring {
  ArcColoring coloring;
  std::size_t rounds = 0;
  /// (colour, number of pairs) sorted by colour.
  std::vector<std::pair<std::uint32_t, std::size_t>> histogram;
};

/// Colour 1 on {(g, h) : h g^-1 in X}, 0 on the other off-diagonal pairs, 2 on
/// the diagonal. e must not be in X.
ArcColoring cayley_graph(const AbelianGroup& group, const ElementSet& connection);

/// Classical 2-WL until the number of colours stops growing. Colour ids are
/// ranks of the sorted signatures, so they depend only on the input colours.
StableColoring wl2_refine(const ArcColoring& coloring);

/// Refines both colourings jointly on their disjoint union and compares the
/// stable histograms of the two diagonal blocks.
bool wl2_distinguishes(const ArcColoring& a, const ArcColoring& b);

/// Isomorphism-invariant summary of the stable colouring: colours are
/// named by 64-bit hashes of their refinement history, so fingerprints of
/// different graphs are directly comparable. Equal fingerprints of
/// non-isomorphic graphs are possible only through 2-WL failing or a hash
/// collision; callers confirm with wl2_distinguishes.
struct WlFingerprint {
  std::size_t rounds = 0;
  std::vector<std::pair<std::uint64_t, std::size_t>> histogram;
  bool operator==(const WlFingerprint&) const = default;
  bool operator<(const WlFingerprint& o) const {
    return rounds != o.rounds ? rounds < o.rounds : histogram < o.histogram;
  }
};

WlFingerprint wl2_fingerprint(const ArcColoring& coloring);

/// Plain backtracking isomorphism test for arc colourings (colours must
/// match exactly). Independent of the refinement code.
bool colorings_isomorphic(const ArcColoring& a, const ArcColoring& b);

/// Partition of G read off the stable colouring of a Cayley graph via
/// (g, h) -> h g^-1; labels per element.
std::vector<std::uint32_t> wl_partition_of_group(const AbelianGroup& group, const StableColoring& stable);

/// Every inverse-closed X without e (or every X without e when directed).
std::vector<ElementSet> connection_sets(const AbelianGroup& group, bool directed = false);

struct WlGraphRef {
  std::string group;
  std::vector<Elem> connection;
};

struct WlExperimentReport {
  std::size_t order = 0;
  bool directed = false;
  std::vector<std::string> groups;
  std::vector<std::size_t> graphs_per_group;
  std::size_t graph_count = 0;
  std::size_t pair_count = 0;        // unordered pairs of graphs compared
  std::size_t fingerprint_classes = 0;
  std::size_t oracle_calls = 0;
  std::vector<std::pair<WlGraphRef, WlGraphRef>> indistinguishable_nonisomorphic;
  double seconds = 0;
};

/// Builds every Cayley graph over every abelian group of the given order and
/// reports pairs that 2-WL does not distinguish but that are not isomorphic.
/// Graphs with different fingerprints are distinguished; within a fingerprint
/// class each graph is checked against the first by the isomorphism oracle.
WlExperimentReport wl_dimension_experiment(std::size_t order, bool directed = false, const Exec& exec = {});

}  // namespace schur
