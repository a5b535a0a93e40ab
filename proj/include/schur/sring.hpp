#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schur/abelian_group.hpp"
#include "schur/element_set.hpp"

namespace schur {

/// Integer coefficient per element; exact arithmetic only.
struct GroupRingVector {
  std::vector<std::int64_t> coefficients;

  static GroupRingVector zero(std::size_t order) { return {std::vector<std::int64_t>(order, 0)}; }
  static GroupRingVector indicator(const ElementSet& set);
  std::size_t size() const { return coefficients.size(); }
};

/// c^k_{ij}: number of ways an element of class k is a product x*y with x in
/// class i and y in class j. Stored dense, rank^3 entries.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t rank) : rank_(rank), values_(rank * rank * rank, 0) {}

  std::size_t rank() const { return rank_; }
  std::uint32_t at(std::size_t i, std::size_t j, std::size_t k) const { return values_[(i * rank_ + j) * rank_ + k]; }
  std::uint32_t& at(std::size_t i, std::size_t j, std::size_t k) { return values_[(i * rank_ + j) * rank_ + k]; }

  struct Entry {
    std::uint32_t i, j, k, value;
  };
  /// Non-zero entries in (i, j, k) order.
  std::vector<Entry> nonzeros() const;

  bool operator==(const StructureConstants&) const = default;

 private:
  std::size_t rank_ = 0;
  std::vector<std::uint32_t> values_;
};

/// A validated S-ring: a partition of the group into basic sets in canonical
/// form (classes ordered by smallest element, class 0 = {e}).
class SRing {
 public:
  const AbelianGroup& group() const { return group_; }
  std::size_t rank() const { return classes_.size(); }
  const std::vector<ElementSet>& classes() const { return classes_; }
  const ElementSet& basic_set(std::size_t i) const { return classes_[i]; }

  /// Class index of every element.
  const std::vector<std::uint32_t>& labels() const { return labels_; }
  std::uint32_t class_of(Elem g) const { return labels_[g]; }

  /// i -> i* with class(i)^{-1} = class(i*).
  std::uint32_t inverse_class(std::uint32_t i) const { return inverse_[i]; }

  const StructureConstants& constants() const { return constants_; }

  std::vector<std::vector<Elem>> class_lists() const;
  /// Returns the class index if X is a basic set.
  std::optional<std::uint32_t> find_class(const ElementSet& x) const;

  bool operator==(const SRing& other) const { return group_ == other.group_ && labels_ == other.labels_; }

 private:
  friend SRing validate_sring(const AbelianGroup& group, const std::vector<ElementSet>& classes);
  friend SRing sring_from_labels(const AbelianGroup& group, const std::vector<std::uint32_t>& labels);

  AbelianGroup group_;
  std::vector<ElementSet> classes_;
  std::vector<std::uint32_t> labels_;
  std::vector<std::uint32_t> inverse_;
  StructureConstants constants_;
};

/// Checks the three S-ring axioms. Throws SchurError with code NotPartition,
/// MissingIdentityClass, NotInverseClosed or ModuleClosure (the latter names
/// the offending class pair and two elements of a class with different
/// product counts).
SRing validate_sring(const AbelianGroup& group, const std::vector<ElementSet>& classes);

/// Same as validate_sring for a class-label vector (any labelling).
SRing sring_from_labels(const AbelianGroup& group, const std::vector<std::uint32_t>& labels);

/// Non-throwing axiom check for a label vector; used by exhaustive scans.
bool is_sring_partition(const AbelianGroup& group, const std::vector<std::uint32_t>& labels);

const StructureConstants& structure_constants(const SRing& ring);

SRing trivial_sring(const AbelianGroup& group);  // all singletons (ZG)
SRing rank2_sring(const AbelianGroup& group);    // {e}, G#

bool is_a_set(const SRing& ring, const ElementSet& x);
std::vector<Subgroup> a_subgroups(const SRing& ring);

/// {g : gX = X}.
Subgroup radical(const AbelianGroup& group, const ElementSet& x);

/// A_S over S = U/L; U and L must be A-subgroups.
SRing induced_sring(const SRing& ring, const Section& section);
/// Restriction A_H to an A-subgroup H, as an S-ring over H's own presentation.
SRing restricted_sring(const SRing& ring, const Subgroup& subgroup);

/// X^{(m)} = {x^m}. gcd(m,|G|) must be 1 and X basic; the result is checked
/// to be basic.
ElementSet rational_conjugate(const SRing& ring, const ElementSet& x, long long m);

/// X^{[p]} = {x^p : x in X, |X cap Hx| != 0 mod p}, H the p-torsion. X must
/// be an A-set and p a prime divisor of |G|; the result is checked to be an
/// A-set.
ElementSet schur_wielandt(const SRing& ring, const ElementSet& x, std::uint32_t p);

/// Smallest S-ring whose span contains every seed.
SRing schur_closure(const AbelianGroup& group, const std::vector<GroupRingVector>& seeds);

/// Power map x -> x^m as an element permutation.
std::vector<Elem> power_map(const AbelianGroup& group, long long m);

/// Units modulo the exponent, i.e. the distinct power maps coprime to |G|.
std::vector<std::uint32_t> multiplier_units(const AbelianGroup& group);

/// Image of a set under an element map.
ElementSet image(const ElementSet& x, const std::vector<Elem>& map, std::size_t target_order);

namespace detail {

/// Relabels classes by first occurrence in element order; returns the number
/// of classes.
std::uint32_t canonicalize_labels(std::vector<std::uint32_t>& labels);

/// In place: coarsest S-ring partition refining `labels`.
void schur_refine(const AbelianGroup& group, std::vector<std::uint32_t>& labels);

/// Class lists flattened as (g+1 ... 0) per class; lexicographic order on this
/// key equals lexicographic order on canonical class lists.
std::vector<std::uint32_t> class_list_key(const std::vector<std::uint32_t>& canonical_labels);

}  // namespace detail

}  // namespace schur
