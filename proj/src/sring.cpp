#include "schur/sring.hpp"

#include <algorithm>
#include <numeric>

#include "schur/errors.hpp"

namespace schur {

GroupRingVector GroupRingVector::indicator(const ElementSet& set) {
  auto v = zero(set.universe());
  for (auto g : set.elements()) v.coefficients[g] = 1;
  return v;
}

std::vector<StructureConstants::Entry> StructureConstants::nonzeros() const {
  std::vector<Entry> out;
  for (std::uint32_t i = 0; i < rank_; ++i)
    for (std::uint32_t j = 0; j < rank_; ++j)
      for (std::uint32_t k = 0; k < rank_; ++k)
        if (auto v = at(i, j, k)) out.push_back({i, j, k, v});
  return out;
}

namespace detail {

std::uint32_t canonicalize_labels(std::vector<std::uint32_t>& labels) {
  std::vector<std::uint32_t> remap;
  const std::uint32_t unset = ~0U;
  std::uint32_t next = 0;
  for (auto& l : labels) {
    if (l >= remap.size()) remap.resize(l + 1, unset);
    if (remap[l] == unset) remap[l] = next++;
    l = remap[l];
  }
  return next;
}

std::vector<std::uint32_t> class_list_key(const std::vector<std::uint32_t>& labels) {
  const auto r = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<std::vector<std::uint32_t>> buckets(r);
  for (std::uint32_t g = 0; g < labels.size(); ++g) buckets[labels[g]].push_back(g + 1);
  std::vector<std::uint32_t> key;
  key.reserve(labels.size() + r);
  for (auto& b : buckets) {
    key.insert(key.end(), b.begin(), b.end());
    key.push_back(0);
  }
  return key;
}

void schur_refine(const AbelianGroup& group, std::vector<std::uint32_t>& labels) {
  const auto n = static_cast<std::uint32_t>(group.order());
  // separate the identity
  for (auto& l : labels) l *= 2;
  labels[0] += 1;
  auto count = canonicalize_labels(labels);

  std::vector<std::uint64_t> sig(std::size_t(n) * (n + 2));
  std::vector<std::uint32_t> idx(n);
  auto row = [&](std::uint32_t g) { return sig.data() + std::size_t(g) * (n + 2); };

  while (true) {
    const auto before = count;
    // (a) inverse pairing must be classwise
    for (std::uint32_t g = 0; g < n; ++g) {
      auto* s = row(g);
      s[0] = labels[g];
      s[1] = labels[group.inv(g)];
    }
    {
      std::iota(idx.begin(), idx.end(), 0U);
      std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
        return std::lexicographical_compare(row(a), row(a) + 2, row(b), row(b) + 2);
      });
      std::uint32_t next = 0;
      std::vector<std::uint32_t> fresh(n);
      for (std::uint32_t t = 0; t < n; ++t) {
        if (t > 0 && !std::equal(row(idx[t]), row(idx[t]) + 2, row(idx[t - 1]))) ++next;
        fresh[idx[t]] = next;
      }
      labels.swap(fresh);
      count = canonicalize_labels(labels);
    }
    // (b) every class product must be constant on classes: the multiset of
    // (class(h), class(h^-1 g)) over h determines all c_{X,Y}(g)
    for (std::uint32_t g = 0; g < n; ++g) {
      auto* s = row(g);
      s[0] = labels[g];
      s[1] = 0;
      for (std::uint32_t h = 0; h < n; ++h)
        s[2 + h] = std::uint64_t(labels[h]) * n + labels[group.mul(group.inv(h), g)];
      std::sort(s + 2, s + 2 + n);
    }
    {
      const auto width = n + 2;
      std::iota(idx.begin(), idx.end(), 0U);
      std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
        return std::lexicographical_compare(row(a), row(a) + width, row(b), row(b) + width);
      });
      std::uint32_t next = 0;
      std::vector<std::uint32_t> fresh(n);
      for (std::uint32_t t = 0; t < n; ++t) {
        if (t > 0 && !std::equal(row(idx[t]), row(idx[t]) + width, row(idx[t - 1]))) ++next;
        fresh[idx[t]] = next;
      }
      labels.swap(fresh);
      count = canonicalize_labels(labels);
    }
    if (count == before) break;
  }
}

}  // namespace detail

namespace {

// Axiom check on a canonical label vector. On success fills constants and the
// inverse pairing. On failure returns the error (message only when explain).
std::optional<SchurError> check_axioms(const AbelianGroup& group, const std::vector<std::uint32_t>& labels,
                                       std::uint32_t rank, bool explain, StructureConstants* constants,
                                       std::vector<std::uint32_t>* inverse) {
  const auto n = static_cast<std::uint32_t>(group.order());
  std::vector<std::vector<Elem>> members(rank);
  for (Elem g = 0; g < n; ++g) members[labels[g]].push_back(g);

  if (members[0].size() != 1)
    return SchurError(ErrorCode::MissingIdentityClass,
                      explain ? "the identity is not a singleton class" : std::string());

  std::vector<std::uint32_t> inv(rank);
  for (std::uint32_t i = 0; i < rank; ++i) {
    const auto target = labels[group.inv(members[i][0])];
    for (auto x : members[i]) {
      if (labels[group.inv(x)] != target || members[target].size() != members[i].size())
        return SchurError(ErrorCode::NotInverseClosed,
                          explain ? "inverse of class containing " + std::to_string(members[i][0]) +
                                        " is not a class (element " + std::to_string(x) + ")"
                                  : std::string());
    }
    inv[i] = target;
  }

  StructureConstants c(rank);
  std::vector<std::uint32_t> cnt(n);
  for (std::uint32_t i = 0; i < rank; ++i) {
    for (std::uint32_t j = i; j < rank; ++j) {
      std::fill(cnt.begin(), cnt.end(), 0U);
      for (auto x : members[i])
        for (auto y : members[j]) ++cnt[group.mul(x, y)];
      for (Elem g = 0; g < n; ++g) {
        const auto k = labels[g];
        const auto rep = members[k][0];
        if (cnt[g] != cnt[rep])
          return SchurError(ErrorCode::ModuleClosure,
                            explain ? "product of classes " + std::to_string(i) + " and " + std::to_string(j) +
                                          " takes values " + std::to_string(cnt[rep]) + " at " +
                                          std::to_string(rep) + " and " + std::to_string(cnt[g]) + " at " +
                                          std::to_string(g) + " inside class " + std::to_string(k)
                                    : std::string());
      }
      for (std::uint32_t k = 0; k < rank; ++k) {
        c.at(i, j, k) = cnt[members[k][0]];
        c.at(j, i, k) = cnt[members[k][0]];
      }
    }
  }
  if (constants) *constants = std::move(c);
  if (inverse) *inverse = std::move(inv);
  return std::nullopt;
}

SRing build_from_labels(const AbelianGroup& group, std::vector<std::uint32_t> labels) {
  return sring_from_labels(group, labels);
}

}  // namespace

SRing sring_from_labels(const AbelianGroup& group, const std::vector<std::uint32_t>& raw) {
  if (raw.size() != group.order()) throw SchurError(ErrorCode::NotPartition, "label vector has wrong length");
  auto labels = raw;
  const auto rank = detail::canonicalize_labels(labels);
  SRing ring;
  if (auto err = check_axioms(group, labels, rank, true, &ring.constants_, &ring.inverse_)) throw *err;
  ring.group_ = group;
  ring.classes_.assign(rank, ElementSet(group.order()));
  for (Elem g = 0; g < group.order(); ++g) ring.classes_[labels[g]].insert(g);
  ring.labels_ = std::move(labels);
  return ring;
}

SRing validate_sring(const AbelianGroup& group, const std::vector<ElementSet>& classes) {
  const auto n = group.order();
  const std::uint32_t unset = ~0U;
  std::vector<std::uint32_t> labels(n, unset);
  for (std::uint32_t i = 0; i < classes.size(); ++i) {
    if (classes[i].universe() != n)
      throw SchurError(ErrorCode::NotPartition, "class " + std::to_string(i) + " has the wrong universe");
    if (classes[i].empty()) throw SchurError(ErrorCode::NotPartition, "class " + std::to_string(i) + " is empty");
    for (auto g : classes[i].elements()) {
      if (labels[g] != unset)
        throw SchurError(ErrorCode::NotPartition, "element " + std::to_string(g) + " lies in two classes");
      labels[g] = i;
    }
  }
  for (Elem g = 0; g < n; ++g)
    if (labels[g] == unset) throw SchurError(ErrorCode::NotPartition, "element " + std::to_string(g) + " is uncovered");
  return sring_from_labels(group, labels);
}

bool is_sring_partition(const AbelianGroup& group, const std::vector<std::uint32_t>& raw) {
  auto labels = raw;
  const auto rank = detail::canonicalize_labels(labels);
  return !check_axioms(group, labels, rank, false, nullptr, nullptr).has_value();
}

const StructureConstants& structure_constants(const SRing& ring) { return ring.constants(); }

std::vector<std::vector<Elem>> SRing::class_lists() const {
  std::vector<std::vector<Elem>> out;
  for (auto& c : classes_) out.push_back(c.elements());
  return out;
}

std::optional<std::uint32_t> SRing::find_class(const ElementSet& x) const {
  if (x.empty() || x.universe() != group_.order()) return std::nullopt;
  const auto k = labels_[x.min()];
  if (classes_[k] == x) return k;
  return std::nullopt;
}

SRing trivial_sring(const AbelianGroup& group) {
  std::vector<std::uint32_t> labels(group.order());
  std::iota(labels.begin(), labels.end(), 0U);
  return build_from_labels(group, std::move(labels));
}

SRing rank2_sring(const AbelianGroup& group) {
  std::vector<std::uint32_t> labels(group.order(), 1);
  labels[0] = 0;
  return build_from_labels(group, std::move(labels));
}

bool is_a_set(const SRing& ring, const ElementSet& x) {
  for (auto& c : ring.classes())
    if (c.intersects(x) && !c.is_subset_of(x)) return false;
  return true;
}

std::vector<Subgroup> a_subgroups(const SRing& ring) {
  std::vector<Subgroup> out;
  for (auto& h : all_subgroups(ring.group()))
    if (is_a_set(ring, h.elements())) out.push_back(h);
  return out;
}

Subgroup radical(const AbelianGroup& group, const ElementSet& x) {
  ElementSet rad(group.order());
  const auto members = x.elements();
  for (Elem g = 0; g < group.order(); ++g) {
    bool fixes = true;
    for (auto y : members)
      if (!x.contains(group.mul(g, y))) {
        fixes = false;
        break;
      }
    if (fixes) rad.insert(g);
  }
  return Subgroup::from_set(group, std::move(rad));
}

SRing induced_sring(const SRing& ring, const Section& section) {
  if (!is_a_set(ring, section.upper.elements()) || !is_a_set(ring, section.lower.elements()))
    throw SchurError(ErrorCode::Precondition, "induced_sring: U/L is not an A-section");
  const auto m = section.quotient.order();
  // images of basic sets inside U are equal or disjoint; validation confirms it
  std::vector<ElementSet> classes;
  for (std::uint32_t i = 0; i < ring.rank(); ++i) {
    const auto& cls = ring.basic_set(i);
    if (!cls.is_subset_of(section.upper.elements())) continue;
    ElementSet img(m);
    for (auto g : cls.elements()) img.insert(static_cast<std::uint32_t>(section.projection[g]));
    if (std::find(classes.begin(), classes.end(), img) == classes.end()) classes.push_back(img);
  }
  return validate_sring(section.quotient, classes);
}

SRing restricted_sring(const SRing& ring, const Subgroup& subgroup) {
  return induced_sring(ring, quotient(ring.group(), subgroup, Subgroup::trivial(ring.group())));
}

std::vector<Elem> power_map(const AbelianGroup& group, long long m) {
  std::vector<Elem> out(group.order());
  for (Elem g = 0; g < group.order(); ++g) out[g] = group.pow(g, m);
  return out;
}

std::vector<std::uint32_t> multiplier_units(const AbelianGroup& group) {
  const auto e = group.exponent();
  if (e == 1) return {1};
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 1; m < e; ++m)
    if (gcd(m, e) == 1) out.push_back(m);
  return out;
}

ElementSet image(const ElementSet& x, const std::vector<Elem>& map, std::size_t target_order) {
  ElementSet out(target_order);
  for (auto g : x.elements()) out.insert(map[g]);
  return out;
}

ElementSet rational_conjugate(const SRing& ring, const ElementSet& x, long long m) {
  const auto& group = ring.group();
  const auto mm = static_cast<std::uint64_t>(m < 0 ? -m : m);
  if (gcd(mm, group.order()) != 1)
    throw SchurError(ErrorCode::Precondition, "rational_conjugate: m=" + std::to_string(m) + " is not coprime to |G|");
  if (!ring.find_class(x)) throw SchurError(ErrorCode::Precondition, "rational_conjugate: X is not a basic set");
  ElementSet out(group.order());
  for (auto g : x.elements()) out.insert(group.pow(g, m));
  if (!ring.find_class(out))
    throw SchurError(ErrorCode::InvariantViolation,
                     "rational_conjugate: X^(" + std::to_string(m) + ") is not a basic set");
  return out;
}

ElementSet schur_wielandt(const SRing& ring, const ElementSet& x, std::uint32_t p) {
  const auto& group = ring.group();
  if (!is_prime(p) || group.order() % p != 0)
    throw SchurError(ErrorCode::Precondition, "schur_wielandt: p=" + std::to_string(p) + " is not a prime divisor of |G|");
  if (!is_a_set(ring, x)) throw SchurError(ErrorCode::Precondition, "schur_wielandt: X is not an A-set");
  std::vector<Elem> torsion;
  for (Elem g = 0; g < group.order(); ++g)
    if (group.pow(g, p) == group.identity()) torsion.push_back(g);
  ElementSet out(group.order());
  for (auto g : x.elements()) {
    std::uint32_t meet = 0;
    for (auto h : torsion)
      if (x.contains(group.mul(h, g))) ++meet;
    if (meet % p != 0) out.insert(group.pow(g, p));
  }
  if (!is_a_set(ring, out))
    throw SchurError(ErrorCode::InvariantViolation,
                     "schur_wielandt: X^[" + std::to_string(p) + "] is not an A-set");
  return out;
}

SRing schur_closure(const AbelianGroup& group, const std::vector<GroupRingVector>& seeds) {
  const auto n = group.order();
  for (auto& s : seeds)
    if (s.size() != n) throw SchurError(ErrorCode::Usage, "seed vector has wrong length");
  // initial partition: equal coefficient tuples across all seeds
  std::vector<std::uint32_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0U);
  auto key_less = [&](std::uint32_t a, std::uint32_t b) {
    for (auto& s : seeds)
      if (s.coefficients[a] != s.coefficients[b]) return s.coefficients[a] < s.coefficients[b];
    return false;
  };
  std::stable_sort(idx.begin(), idx.end(), key_less);
  std::vector<std::uint32_t> labels(n);
  std::uint32_t next = 0;
  for (std::size_t t = 0; t < n; ++t) {
    if (t > 0 && key_less(idx[t - 1], idx[t])) ++next;
    labels[idx[t]] = next;
  }
  detail::schur_refine(group, labels);
  return sring_from_labels(group, labels);
}

}  // namespace schur
