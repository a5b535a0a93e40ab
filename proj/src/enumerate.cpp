#include "schur/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "schur/errors.hpp"

namespace schur {

namespace {

struct LabelHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : v) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

using LabelSet = std::unordered_set<std::vector<std::uint32_t>, LabelHash>;

// image partition under an element permutation, canonicalised
void permuted_labels(const std::vector<std::uint32_t>& labels, const std::vector<Elem>& perm,
                     std::vector<std::uint32_t>& out) {
  out.resize(labels.size());
  for (Elem g = 0; g < labels.size(); ++g) out[perm[g]] = labels[g];
  detail::canonicalize_labels(out);
}

}  // namespace

bool sring_less(const SRing& a, const SRing& b) {
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  return detail::class_list_key(a.labels()) < detail::class_list_key(b.labels());
}

CayleyCanonizer::CayleyCanonizer(const AbelianGroup& group) : group_(group) {
  for (auto& f : automorphisms(group)) perms_.push_back(f.table());
}

std::vector<std::uint32_t> CayleyCanonizer::canonical_labels(const std::vector<std::uint32_t>& labels) const {
  std::vector<std::uint32_t> best = labels;
  detail::canonicalize_labels(best);
  auto best_key = detail::class_list_key(best);
  std::vector<std::uint32_t> img;
  for (auto& perm : perms_) {
    permuted_labels(labels, perm, img);
    auto key = detail::class_list_key(img);
    if (key < best_key) {
      best_key = std::move(key);
      best = img;
    }
  }
  return best;
}

SRing CayleyCanonizer::canonical(const SRing& ring) const {
  return sring_from_labels(group_, canonical_labels(ring.labels()));
}

namespace {

// Power-map data shared by the candidate generator.
struct Multipliers {
  std::vector<std::uint32_t> units;
  std::vector<std::vector<Elem>> maps;           // per unit
  std::vector<std::vector<std::size_t>> groups;  // subgroups of the unit group, as unit indices
  std::vector<std::uint32_t> rational_class;     // per element: id of its orbit under all units
};

Multipliers make_multipliers(const AbelianGroup& group) {
  Multipliers m;
  m.units = multiplier_units(group);
  const auto e = group.exponent();
  for (auto u : m.units) m.maps.push_back(power_map(group, u));
  const auto k = m.units.size();
  auto index_of = [&](std::uint64_t u) {
    return static_cast<std::size_t>(std::find(m.units.begin(), m.units.end(), u % e) - m.units.begin());
  };
  // subgroups of the unit group by closure from every subset of generators
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> queue{{index_of(1)}};
  seen.insert(queue.front());
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (std::size_t g = 0; g < k; ++g) {
      std::vector<char> in(k, 0);
      for (auto x : queue[qi]) in[x] = 1;
      if (in[g]) continue;
      std::vector<std::size_t> members = queue[qi];
      members.push_back(g);
      in[g] = 1;
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
          auto p = index_of(std::uint64_t(m.units[members[i]]) * m.units[members[j]]);
          if (!in[p]) {
            in[p] = 1;
            members.push_back(p);
          }
        }
      std::sort(members.begin(), members.end());
      if (seen.insert(members).second) queue.push_back(members);
    }
  }
  m.groups = queue;

  const std::uint32_t unset = ~0U;
  m.rational_class.assign(group.order(), unset);
  std::uint32_t next = 0;
  for (Elem g = 0; g < group.order(); ++g) {
    if (m.rational_class[g] != unset) continue;
    for (auto& map : m.maps) m.rational_class[map[g]] = next;
    ++next;
  }
  return m;
}

bool is_multiplier_compatible(const ElementSet& y, const Multipliers& mult, std::vector<std::size_t>* stabilizer) {
  if (stabilizer) stabilizer->clear();
  const auto members = y.elements();
  for (std::size_t u = 0; u < mult.maps.size(); ++u) {
    std::size_t inside = 0;
    for (auto g : members)
      if (y.contains(mult.maps[u][g])) ++inside;
    if (inside == members.size()) {
      if (stabilizer) stabilizer->push_back(u);
    } else if (inside != 0) {
      return false;
    }
  }
  return true;
}

// Every proper subset Y of X with min(X) in Y that can be a basic set of a
// finer S-ring: Y^(m) is Y or disjoint from Y for every multiplier m.
// Generated by exact multiplier stabiliser M: Y is a union of M-orbits with at
// most one orbit per rational class.
void for_each_split_candidate(const ElementSet& x, const Multipliers& mult,
                              const std::function<void(const ElementSet&)>& emit) {
  const auto n = x.universe();
  const auto lead = x.min();
  const auto members = x.elements();
  std::vector<std::size_t> stab;
  for (auto& sub : mult.groups) {
    // M-orbits contained in X, grouped by rational class
    std::map<std::uint32_t, std::vector<ElementSet>> by_class;
    std::vector<char> done(n, 0);
    bool lead_ok = false;
    ElementSet lead_orbit(n);
    for (auto g : members) {
      if (done[g]) continue;
      ElementSet orbit(n);
      for (auto u : sub) orbit.insert(mult.maps[u][g]);
      for (auto h : orbit.elements()) done[h] = 1;
      if (!orbit.is_subset_of(x)) continue;
      if (orbit.contains(lead)) {
        lead_ok = true;
        lead_orbit = orbit;
      } else {
        by_class[mult.rational_class[g]].push_back(orbit);
      }
    }
    if (!lead_ok) continue;
    by_class.erase(mult.rational_class[lead]);
    std::vector<const std::vector<ElementSet>*> slots;
    for (auto& [cls, orbits] : by_class) slots.push_back(&orbits);

    ElementSet current = lead_orbit;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == slots.size()) {
        if (current == x) return;
        if (!is_multiplier_compatible(current, mult, &stab)) return;
        if (stab != sub) return;  // generated under its exact stabiliser only
        emit(current);
        return;
      }
      rec(i + 1);
      for (auto& orbit : *slots[i]) {
        auto saved = current;
        current |= orbit;
        rec(i + 1);
        current = std::move(saved);
      }
    };
    rec(0);
  }
}

// Distinct closures of A + Y over split candidates Y of all classes of A.
// Candidates are skipped when an automorphism preserving A maps them (or
// their complement in the class, which yields the same closure) onto one
// already tried.
std::vector<std::vector<std::uint32_t>> refinements(const AbelianGroup& group, const std::vector<std::uint32_t>& labels,
                                                    const Multipliers& mult,
                                                    const std::vector<std::vector<Elem>>& automorphisms) {
  const auto n = group.order();
  const auto rank = *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<ElementSet> classes(rank, ElementSet(n));
  for (Elem g = 0; g < n; ++g) classes[labels[g]].insert(g);

  std::vector<const std::vector<Elem>*> stabilizer;
  const bool masks = n <= 64;
  if (masks) {
    std::vector<std::uint32_t> image(rank);
    const std::uint32_t unset = ~0U;
    for (auto& perm : automorphisms) {
      std::fill(image.begin(), image.end(), unset);
      bool ok = true;
      for (Elem g = 0; g < n && ok; ++g) {
        auto& slot = image[labels[g]];
        if (slot == unset) slot = labels[perm[g]];
        ok = slot == labels[perm[g]];
      }
      if (ok) stabilizer.push_back(&perm);
    }
  }
  auto to_mask = [](const ElementSet& y) {
    std::uint64_t m = 0;
    for (auto g : y.elements()) m |= std::uint64_t{1} << g;
    return m;
  };
  std::vector<std::uint64_t> class_mask(rank, 0);
  std::vector<Elem> class_min(rank);
  if (masks)
    for (std::uint32_t c = 0; c < rank; ++c) {
      class_mask[c] = to_mask(classes[c]);
      class_min[c] = classes[c].min();
    }
  std::unordered_set<std::uint64_t> tried;

  LabelSet out;
  std::vector<std::uint32_t> work;
  for (std::uint32_t c = 0; c < rank; ++c) {
    if (classes[c].size() < 2) continue;
    for_each_split_candidate(classes[c], mult, [&](const ElementSet& y) {
      if (masks) {
        const auto ym = to_mask(y);
        if (tried.count(ym)) return;
        const auto members = y.elements();
        for (auto* perm : stabilizer) {
          std::uint64_t im = 0;
          for (auto g : members) im |= std::uint64_t{1} << (*perm)[g];
          const auto target = labels[(*perm)[members.front()]];
          if (!((im >> class_min[target]) & 1U)) im = class_mask[target] & ~im;
          tried.insert(im);
        }
        tried.insert(ym);
      }
      work = labels;
      for (auto g : y.elements()) work[g] = rank;
      detail::schur_refine(group, work);
      out.insert(work);
    });
  }
  std::vector<std::vector<std::uint32_t>> result(out.begin(), out.end());
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace

namespace {

// Aut(G)-invariant of a partition: per class its size and element-order
// profile, sorted.
std::vector<std::uint32_t> partition_invariant(const AbelianGroup& group, const std::vector<std::uint32_t>& labels) {
  const auto r = *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<std::vector<std::uint32_t>> profile(r);
  for (Elem g = 0; g < labels.size(); ++g) profile[labels[g]].push_back(static_cast<std::uint32_t>(group.order_of(g)));
  for (auto& p : profile) std::sort(p.begin(), p.end());
  std::sort(profile.begin(), profile.end());
  std::vector<std::uint32_t> key;
  for (auto& p : profile) {
    key.push_back(static_cast<std::uint32_t>(p.size()));
    key.insert(key.end(), p.begin(), p.end());
  }
  return key;
}

}  // namespace

bool CayleyCanonizer::equivalent(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const {
  const auto ra = *std::max_element(a.begin(), a.end()) + 1;
  const auto rb = *std::max_element(b.begin(), b.end()) + 1;
  if (ra != rb || a.size() != b.size()) return false;
  const std::uint32_t unset = ~0U;
  std::vector<std::uint32_t> fwd(ra), back(ra);
  for (auto& perm : perms_) {
    std::fill(fwd.begin(), fwd.end(), unset);
    std::fill(back.begin(), back.end(), unset);
    bool ok = true;
    for (Elem g = 0; g < a.size() && ok; ++g) {
      const auto x = a[g], y = b[perm[g]];
      if (fwd[x] == unset && back[y] == unset) {
        fwd[x] = y;
        back[y] = x;
      } else {
        ok = fwd[x] == y && back[y] == x;
      }
    }
    if (ok) return true;
  }
  return false;
}

std::vector<SRing> enumerate_srings(const AbelianGroup& group, const Exec& exec) {
  require_capacity(group.order(), "enumerate_srings");
  const CayleyCanonizer canon(group);
  const auto mult = make_multipliers(group);

  // known orbits bucketed by invariant; each bucket holds one member per orbit
  std::map<std::vector<std::uint32_t>, std::vector<std::vector<std::uint32_t>>> known;
  std::vector<std::vector<std::uint32_t>> reps;
  LabelSet raw_seen;

  auto start = rank2_sring(group).labels();
  known[partition_invariant(group, start)].push_back(start);
  reps.push_back(start);
  std::vector<std::vector<std::uint32_t>> frontier{start};

  // Every S-ring B above a known representative A is reached through the
  // closure of A and one basic set of B splitting a class of A.
  while (!frontier.empty()) {
    std::vector<std::vector<std::vector<std::uint32_t>>> children(frontier.size());
    parallel_for(exec, frontier.size(), [&](std::size_t i) { children[i] = refinements(group, frontier[i], mult, canon.permutations()); });

    std::vector<std::vector<std::uint32_t>> fresh;
    for (auto& list : children)
      for (auto& c : list)
        if (raw_seen.insert(c).second) fresh.push_back(c);

    std::vector<std::vector<std::uint32_t>> invariants(fresh.size());
    parallel_for(exec, fresh.size(), [&](std::size_t i) { invariants[i] = partition_invariant(group, fresh[i]); });

    // a fresh partition is new unless equivalent to a known one; comparisons
    // against the orbits found earlier in this level run in order, so the
    // result does not depend on the thread count
    std::vector<char> old_orbit(fresh.size(), 0);
    parallel_for(exec, fresh.size(), [&](std::size_t i) {
      auto it = known.find(invariants[i]);
      if (it == known.end()) return;
      for (auto& k : it->second)
        if (canon.equivalent(fresh[i], k)) {
          old_orbit[i] = 1;
          return;
        }
    });
    std::vector<std::vector<std::uint32_t>> next;
    std::map<std::vector<std::uint32_t>, std::vector<std::size_t>> level;  // invariant -> indices into next
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      if (old_orbit[i]) continue;
      auto& bucket = level[invariants[i]];
      bool seen = false;
      for (auto j : bucket)
        if (canon.equivalent(fresh[i], next[j])) {
          seen = true;
          break;
        }
      if (seen) continue;
      bucket.push_back(next.size());
      next.push_back(fresh[i]);
    }
    for (auto& [inv, idx] : level)
      for (auto j : idx) known[inv].push_back(next[j]);
    reps.insert(reps.end(), next.begin(), next.end());
    frontier = std::move(next);
  }

  std::vector<std::vector<std::uint32_t>> canonical(reps.size());
  parallel_for(exec, reps.size(), [&](std::size_t i) { canonical[i] = canon.canonical_labels(reps[i]); });
  std::vector<SRing> out;
  out.reserve(reps.size());
  for (auto& r : canonical) out.push_back(sring_from_labels(group, r));
  std::sort(out.begin(), out.end(), sring_less);
  return out;
}

std::vector<SRing> brute_force_srings(const AbelianGroup& group) {
  const auto n = group.order();
  if (n > kBruteForceMaxOrder)
    throw SchurError(ErrorCode::Capacity, "brute_force_srings: |G| = " + std::to_string(n) + " exceeds " +
                                              std::to_string(kBruteForceMaxOrder));
  // orbit representatives are picked by applying every automorphism to the
  // class lists directly
  std::vector<std::vector<Elem>> perms;
  for (auto& f : automorphisms(group)) perms.push_back(f.table());
  auto least_image = [&](const std::vector<std::uint32_t>& labels) {
    std::vector<std::vector<Elem>> best;
    for (auto& perm : perms) {
      std::map<std::uint32_t, std::vector<Elem>> by_label;
      for (Elem g = 0; g < n; ++g) by_label[labels[g]].push_back(perm[g]);
      std::vector<std::vector<Elem>> classes;
      for (auto& [l, members] : by_label) {
        std::sort(members.begin(), members.end());
        classes.push_back(members);
      }
      std::sort(classes.begin(), classes.end());
      if (best.empty() || classes < best) best = classes;
    }
    return best;
  };

  std::set<std::vector<std::vector<Elem>>> found;
  // restricted growth strings over G# = {1..n-1}; identity gets its own label
  std::vector<std::uint32_t> labels(n, 0);
  std::function<void(Elem, std::uint32_t)> rec = [&](Elem g, std::uint32_t used) {
    if (g == n) {
      if (is_sring_partition(group, labels)) found.insert(least_image(labels));
      return;
    }
    for (std::uint32_t l = 1; l <= used + 1; ++l) {
      labels[g] = l;
      rec(g + 1, std::max(used, l));
    }
  };
  if (n == 1) {
    found.insert(std::vector<std::vector<Elem>>{std::vector<Elem>{0}});
  } else {
    rec(1, 0);
  }

  std::vector<SRing> out;
  for (auto& classes : found) {
    std::vector<ElementSet> sets;
    for (auto& c : classes) sets.push_back(ElementSet::from(n, c));
    out.push_back(validate_sring(group, sets));
  }
  std::sort(out.begin(), out.end(), sring_less);
  return out;
}

}  // namespace schur
