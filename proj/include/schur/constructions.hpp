#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schur/abelian_group.hpp"
#include "schur/sring.hpp"

namespace schur {

/// A1 (x) A2 over G1 x G2 (factor lists concatenated): classes X1 x X2.
SRing tensor_product(const SRing& a1, const SRing& a2);

/// A_L wr A_{G/L}. a_lower must live on quotient(G, L, 1).quotient and
/// a_upper on quotient(G, G, L).quotient.
SRing wreath_product(const SRing& a_lower, const SRing& a_upper, const AbelianGroup& group, const Subgroup& lower);

struct WreathTest {
  bool holds = false;   // L <= rad(X) for every basic set X outside U
  bool proper = false;  // L != e and U != G
};

/// U/L-wreath test; U/L must be an A-section.
WreathTest is_generalized_wreath(const SRing& ring, const Subgroup& upper, const Subgroup& lower);

/// Orbits of a subgroup of Aut(G). The set must be closed under composition.
SRing cyclotomic(const std::vector<GroupMorphism>& automorphisms, const AbelianGroup& group);

/// A(U, V, psi) = {(x, y) : psi(x) = pi(y)} inside U x V, where pi: V -> V/W
/// and W is the index-|U| subgroup of V. psi maps U onto
/// quotient(V, V, W).quotient.
Subgroup subdirect_product(const AbelianGroup& u, const AbelianGroup& v, const GroupMorphism& psi);

/// The index-m subgroup of a cyclic group.
Subgroup cyclic_subgroup_of_index(const AbelianGroup& cyclic, std::uint32_t index);

/// Cyclic K <= Aut(C_p) of order k, generated by theta: z -> z^r with
/// r = g^((p-1)/k) for the least primitive root g.
struct CyclicAutGroup {
  AbelianGroup ambient;
  GroupMorphism theta;
  std::uint32_t order = 1;
  std::uint32_t multiplier = 1;  // r
  std::vector<GroupMorphism> elements;  // theta^0, theta^1, ...

  static CyclicAutGroup make(std::uint32_t p, std::uint32_t k);
};

std::uint32_t least_primitive_root(std::uint32_t p);

/// One of the three families of S-rings over C2^2 x C_p (i = 1, 2) and
/// C4 x C_p (i = 3) built from sigma_i and K <= Aut(C_p), |K| = k.
struct FamilyDescriptor {
  std::uint32_t i = 1;
  std::uint32_t p = 3;
  std::uint32_t k = 1;

  /// `family:i=<1|2|3>,p=<prime>,k=<order>`
  static FamilyDescriptor parse(std::string_view text);
  std::string to_string() const;

  /// Throws Precondition unless i in {1,2,3}, p an odd prime, k | p-1 and
  /// |sigma_i| | k.
  void check() const;

  std::uint32_t sigma_order() const { return i == 1 ? 3 : 2; }
  /// [2,2,p] for i = 1, 2; [4,p] for i = 3.
  AbelianGroup group() const;
  /// sigma_i extended by the identity on C_p.
  GroupMorphism sigma() const;
  /// theta extended by the identity on E.
  GroupMorphism theta() const;

  bool operator==(const FamilyDescriptor&) const = default;
};

/// Every admissible (i, k) for the prime p.
std::vector<FamilyDescriptor> family_descriptors(std::uint32_t p);

/// The subgroup of Aut(G) realising A(<sigma>, K, psi) (or with xi, where
/// theta^i is replaced by theta^-i).
std::vector<GroupMorphism> family_automorphisms(const FamilyDescriptor& d, bool use_xi = false);

SRing build_family(const FamilyDescriptor& d, bool use_xi = false);

/// Basic sets X with <X> = G.
std::vector<ElementSet> highest_basic_sets(const SRing& ring);

/// Unique subgroup of the given order, if exactly one exists.
std::optional<Subgroup> unique_subgroup_of_order(const AbelianGroup& group, std::size_t order);

/// True if every class X satisfies X = X_H x X_L (projections along G = H x L).
bool is_tensor_decomposition(const SRing& ring, const Subgroup& h, const Subgroup& l);

enum class CaseLabel {
  Rank2,
  TrivialZG,
  Family,
  TensorEP,
  TensorDecomposition,
  ProperGeneralizedWreath,
  // C8 and C4 x C2: no structural case applies; separability of these
  // groups rests on results outside this library.
  CitedSeparable,
};

const char* to_string(CaseLabel label);

struct Classification {
  CaseLabel label = CaseLabel::Rank2;
  // ProperGeneralizedWreath: section U/L of least order
  std::optional<Subgroup> upper;
  std::optional<Subgroup> lower;
  // TensorEP / TensorDecomposition: G = left x right
  std::optional<Subgroup> left;
  std::optional<Subgroup> right;
  // Family: descriptor and a Cayley isomorphism onto build_family(family)
  std::optional<FamilyDescriptor> family;
  std::optional<GroupMorphism> cayley_witness;

  std::string describe() const;
};

/// Case analysis for an S-ring over an abelian group of order 4p. Cases are
/// tried in the order of CaseLabel. Throws ClassificationGap if none applies.
Classification classify_4p(const SRing& ring);

}  // namespace schur
