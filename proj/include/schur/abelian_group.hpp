#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "schur/element_set.hpp"

namespace schur {

// Element index under the mixed-radix encoding of an AbelianGroup.
using Elem = std::uint32_t;

// Largest group order accepted by the exhaustive routines (subgroup lattice,
// automorphism search, enumeration). Default 64; SCHUR_CAPACITY overrides.
std::size_t capacity_bound();
void set_capacity_bound(std::size_t bound);
void require_capacity(std::size_t order, std::string_view operation);

// Multiplication tables are materialised, so there is a hard ceiling on the
// order of any group that can be constructed at all.
inline constexpr std::size_t kMaxTableOrder = 2048;

/// A finite abelian group C_{n_1} x ... x C_{n_k}, written additively inside
/// but exposed multiplicatively (mul/inv/pow) to match the usual notation.
/// Elements are indices in [0, order) with the first factor most significant;
/// the identity is index 0.
class AbelianGroup {
 public:
  AbelianGroup();  // the trivial group C1
  explicit AbelianGroup(std::vector<std::uint32_t> factors);

  /// Grammar: `C<int>` joined by `x`, no whitespace, each int >= 1.
  static AbelianGroup parse(std::string_view spec);

  std::string spec() const;
  const std::vector<std::uint32_t>& factors() const { return data_->factors; }
  std::size_t order() const { return data_->order; }
  std::uint32_t exponent() const { return data_->exponent; }

  Elem identity() const { return 0; }
  Elem encode(std::span<const std::uint32_t> residues) const;
  std::vector<std::uint32_t> decode(Elem g) const;

  Elem mul(Elem g, Elem h) const { return data_->mul[std::size_t(g) * data_->order + h]; }
  Elem inv(Elem g) const { return data_->inv[g]; }
  Elem pow(Elem g, long long m) const;
  std::uint32_t order_of(Elem g) const { return data_->elem_order[g]; }

  /// Canonical generator of factor i: residue 1 in slot i, 0 elsewhere.
  Elem generator(std::size_t i) const;

  bool operator==(const AbelianGroup& other) const { return factors() == other.factors(); }

 private:
  struct Data {
    std::vector<std::uint32_t> factors;
    std::vector<std::uint32_t> strides;
    std::size_t order = 1;
    std::uint32_t exponent = 1;
    std::vector<Elem> mul;
    std::vector<Elem> inv;
    std::vector<std::uint32_t> elem_order;
  };
  std::shared_ptr<const Data> data_;
};

/// Element together with its parent group, for the checked public arithmetic.
struct GroupElement {
  AbelianGroup group;
  Elem index = 0;
};

GroupElement mul(const GroupElement& g, const GroupElement& h);
GroupElement inv(const GroupElement& g);
std::uint32_t elem_order(const GroupElement& g);

class Subgroup {
 public:
  /// Verifies identity, closure and Lagrange; throws Precondition otherwise.
  static Subgroup from_set(const AbelianGroup& group, ElementSet elements);
  static Subgroup trivial(const AbelianGroup& group);
  static Subgroup whole(const AbelianGroup& group);

  const ElementSet& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(Elem g) const { return elements_.contains(g); }
  bool is_subgroup_of(const Subgroup& other) const { return elements_.is_subset_of(other.elements_); }

  bool operator==(const Subgroup& other) const { return elements_ == other.elements_; }

 private:
  explicit Subgroup(ElementSet elements) : elements_(std::move(elements)) {}
  ElementSet elements_;
};

Subgroup generated_subgroup(const AbelianGroup& group, const ElementSet& generators);

/// Every subgroup, sorted by (order, smallest non-identity element index).
std::vector<Subgroup> all_subgroups(const AbelianGroup& group);

/// Homomorphism given by images of the canonical factor generators, with the
/// full element table materialised.
class GroupMorphism {
 public:
  /// Throws Precondition if an image violates its generator's relation.
  static GroupMorphism from_generator_images(const AbelianGroup& domain, const AbelianGroup& codomain,
                                             std::vector<Elem> images);
  static GroupMorphism identity(const AbelianGroup& group);

  const AbelianGroup& domain() const { return domain_; }
  const AbelianGroup& codomain() const { return codomain_; }
  const std::vector<Elem>& generator_images() const { return images_; }
  const std::vector<Elem>& table() const { return table_; }
  Elem operator()(Elem g) const { return table_[g]; }

  bool is_bijective() const;
  /// Exhaustive f(xy) = f(x)f(y) check over all pairs.
  bool is_homomorphism() const;

  /// (*this) after `first`: x -> this(first(x)).
  GroupMorphism after(const GroupMorphism& first) const;
  GroupMorphism inverse() const;

  bool operator==(const GroupMorphism& other) const {
    return domain_ == other.domain_ && codomain_ == other.codomain_ && table_ == other.table_;
  }

 private:
  GroupMorphism(AbelianGroup domain, AbelianGroup codomain, std::vector<Elem> images, std::vector<Elem> table)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)),
        table_(std::move(table)) {}
  AbelianGroup domain_;
  AbelianGroup codomain_;
  std::vector<Elem> images_;
  std::vector<Elem> table_;
};

/// All group isomorphisms G -> H, lexicographic in the generator-image tuple.
std::vector<GroupMorphism> isomorphisms(const AbelianGroup& from, const AbelianGroup& to);
std::vector<GroupMorphism> automorphisms(const AbelianGroup& group);
bool are_isomorphic(const AbelianGroup& a, const AbelianGroup& b);

/// Section U/L with the quotient realised as a canonical AbelianGroup.
struct Section {
  Subgroup upper;
  Subgroup lower;
  AbelianGroup quotient;
  std::vector<std::int32_t> projection;  // element of G -> element of quotient, -1 outside U
  std::vector<Elem> lift;                // quotient element -> smallest preimage

  std::size_t order() const { return quotient.order(); }
};

Section quotient(const AbelianGroup& group, const Subgroup& upper, const Subgroup& lower);

/// Invariant-factor-free canonical presentation: prime-power factors, primes
/// ascending, exponents descending within a prime (C4xC2, C2xC2xC7, ...).
AbelianGroup canonical_group(std::vector<std::uint32_t> prime_power_factors);

/// One representative per isomorphism class, cyclic Sylow parts first.
std::vector<AbelianGroup> abelian_groups_of_order(std::size_t order);

std::vector<std::uint32_t> prime_divisors(std::uint64_t n);
bool is_prime(std::uint64_t n);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

}  // namespace schur
