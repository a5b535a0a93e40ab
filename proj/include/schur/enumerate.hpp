#pragma once

#include <cstdint>
#include <vector>

#include "schur/abelian_group.hpp"
#include "schur/parallel.hpp"
#include "schur/sring.hpp"

namespace schur {

/// Canonical forms of partitions under the automorphism group of G. The
/// canonical member of an orbit is the one with the lexicographically least
/// class list.
class CayleyCanonizer {
 public:
  explicit CayleyCanonizer(const AbelianGroup& group);

  const AbelianGroup& group() const { return group_; }
  std::size_t automorphism_count() const { return perms_.size(); }
  /// Every automorphism as an element permutation.
  const std::vector<std::vector<Elem>>& permutations() const { return perms_; }

  /// Canonical first-occurrence labels of the least orbit member.
  std::vector<std::uint32_t> canonical_labels(const std::vector<std::uint32_t>& labels) const;
  SRing canonical(const SRing& ring) const;
  /// True if some automorphism maps partition a onto partition b.
  bool equivalent(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const;

 private:
  AbelianGroup group_;
  std::vector<std::vector<Elem>> perms_;
};

/// All S-rings over G up to Cayley isomorphism, one canonical representative
/// per orbit, sorted by (rank, class list).
std::vector<SRing> enumerate_srings(const AbelianGroup& group, const Exec& exec = {});

/// Independent oracle: filters every set partition of G# through the axiom
/// check and deduplicates under Aut(G). Only for |G| <= 13.
std::vector<SRing> brute_force_srings(const AbelianGroup& group);

inline constexpr std::size_t kBruteForceMaxOrder = 13;

/// Order used for enumeration output: rank, then class list.
bool sring_less(const SRing& a, const SRing& b);

}  // namespace schur
