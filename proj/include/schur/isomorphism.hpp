#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "schur/parallel.hpp"
#include "schur/sring.hpp"

namespace schur {

using SRingRef = std::shared_ptr<const SRing>;

/// Class bijection preserving every structure constant.
struct AlgebraicIso {
  SRingRef source;
  SRingRef target;
  std::vector<std::uint32_t> map;  // source class -> target class

  std::uint32_t operator()(std::uint32_t cls) const { return map[cls]; }
  /// Image of an A-set (union of classes).
  ElementSet image(const ElementSet& a_set) const;
};

/// Element bijection f with R(X)^f = R(X^phi) for all classes at once.
struct CombinatorialIso {
  SRingRef source;
  SRingRef target;
  std::vector<Elem> map;

  Elem operator()(Elem g) const { return map[g]; }
};

/// Checks c^Z_{X,Y} = c^{Z'}_{X',Y'} for all triples.
bool is_algebraic_iso(const SRing& a, const SRing& b, const std::vector<std::uint32_t>& map);

/// Checks that class(h g^-1) -> class(f(h) f(g)^-1) is a well-defined class
/// bijection; returns it.
std::optional<std::vector<std::uint32_t>> combinatorial_class_map(const SRing& a, const SRing& b,
                                                                  const std::vector<Elem>& f);

/// All algebraic isomorphisms A -> B, lexicographic in the class map.
std::vector<AlgebraicIso> algebraic_isos(const SRing& a, const SRing& b);
std::vector<AlgebraicIso> algebraic_isos(const SRingRef& a, const SRingRef& b);

/// Group isomorphisms G -> G' mapping the basic sets of A onto those of B.
std::vector<CombinatorialIso> cayley_isos(const SRing& a, const SRing& b);
std::optional<CombinatorialIso> find_cayley_iso(const SRing& a, const SRing& b);

/// Combinatorial isomorphisms A -> B with f(e) = e', in discovery order.
/// limit = 0 finds all. Every isomorphism is such a map composed with a
/// translation of the target.
std::vector<CombinatorialIso> combinatorial_isos(const SRing& a, const SRing& b, std::size_t limit = 0);

AlgebraicIso induced_algebraic_iso(const CombinatorialIso& f);

struct InduceOptions {
  /// Try Cayley isomorphisms before the element search.
  bool cayley_first = false;
};

/// A combinatorial isomorphism f with phi_f = phi, or nothing after an
/// exhaustive search.
std::optional<CombinatorialIso> find_inducing_isomorphism(const AlgebraicIso& phi, const InduceOptions& options = {});

/// Automorphisms of A (maps preserving every R(X)), at most `limit` of them
/// (0 = all), in discovery order.
std::vector<CombinatorialIso> aut_sring(const SRing& a, std::size_t limit = 0);

/// |Aut(A)| via orbit-stabiliser along a base; exact for any order.
unsigned __int128 aut_sring_order(const SRing& a);
std::string to_string(unsigned __int128 value);

struct SeparabilityEntry {
  SRingRef target;
  std::vector<std::uint32_t> phi;
  std::optional<std::vector<Elem>> inducing;  // empty: no combinatorial iso induces phi
};

struct SeparabilityReport {
  SRingRef subject;
  std::vector<SeparabilityEntry> entries;
  bool separable = true;
  double seconds = 0;
};

/// Every algebraic isomorphism from A to every S-ring (up to Cayley
/// isomorphism) over every abelian group of the same order, checked for an
/// inducing combinatorial isomorphism.
SeparabilityReport separability_check(const SRing& a, const Exec& exec = {});

/// Same, against an explicit target list (one representative per Cayley
/// class over each group of order |G|).
SeparabilityReport separability_check(const SRing& a, const std::vector<SRingRef>& targets, const Exec& exec = {});

/// Number of algebraic isomorphisms psi: B -> B' extending phi with
/// xi^psi = xi', where B, B' are the closures of A + xi and A' + xi'.
std::size_t count_extensions(const AlgebraicIso& phi, const GroupRingVector& xi, const GroupRingVector& xi_prime);

/// count_extensions(...) <= 1.
bool extension_uniqueness_check(const AlgebraicIso& phi, const GroupRingVector& xi, const GroupRingVector& xi_prime);

}  // namespace schur
