#include "schur/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>

#include "schur/enumerate.hpp"
#include "schur/errors.hpp"

namespace schur {

ElementSet AlgebraicIso::image(const ElementSet& a_set) const {
  ElementSet out(target->group().order());
  std::vector<char> used(source->rank(), 0);
  for (auto g : a_set.elements()) used[source->class_of(g)] = 1;
  for (std::uint32_t c = 0; c < used.size(); ++c)
    if (used[c]) out |= target->basic_set(map[c]);
  return out;
}

bool is_algebraic_iso(const SRing& a, const SRing& b, const std::vector<std::uint32_t>& map) {
  const auto r = a.rank();
  if (b.rank() != r || map.size() != r) return false;
  std::vector<char> hit(r, 0);
  for (auto m : map) {
    if (m >= r || hit[m]) return false;
    hit[m] = 1;
  }
  const auto& ca = a.constants();
  const auto& cb = b.constants();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        if (ca.at(i, j, k) != cb.at(map[i], map[j], map[k])) return false;
  return true;
}

std::optional<std::vector<std::uint32_t>> combinatorial_class_map(const SRing& a, const SRing& b,
                                                                  const std::vector<Elem>& f) {
  const auto n = a.group().order();
  if (b.group().order() != n || f.size() != n) return std::nullopt;
  std::vector<char> hit(n, 0);
  for (auto x : f) {
    if (x >= n || hit[x]) return std::nullopt;
    hit[x] = 1;
  }
  const auto& ga = a.group();
  const auto& gb = b.group();
  const std::uint32_t unset = ~0U;
  std::vector<std::uint32_t> fwd(a.rank(), unset), back(b.rank(), unset);
  for (Elem g = 0; g < n; ++g)
    for (Elem h = 0; h < n; ++h) {
      const auto x = a.class_of(ga.mul(h, ga.inv(g)));
      const auto y = b.class_of(gb.mul(f[h], gb.inv(f[g])));
      if (fwd[x] == unset && back[y] == unset) {
        fwd[x] = y;
        back[y] = x;
      } else if (fwd[x] != y || back[y] != x) {
        return std::nullopt;
      }
    }
  if (a.rank() != b.rank()) return std::nullopt;
  return fwd;
}

namespace {

// Invariant of a class under every algebraic isomorphism: size, whether it
// is self-paired, and the sorted multiset of c^k_{i,j} over all (j, k).
std::vector<std::vector<std::uint32_t>> class_invariants(const SRing& s) {
  const auto r = s.rank();
  std::vector<std::vector<std::uint32_t>> inv(r);
  const auto& c = s.constants();
  for (std::uint32_t i = 0; i < r; ++i) {
    auto& v = inv[i];
    v.push_back(static_cast<std::uint32_t>(s.basic_set(i).size()));
    v.push_back(s.inverse_class(i) == i ? 1 : 0);
    std::vector<std::uint32_t> row;
    row.reserve(r * r);
    for (std::uint32_t j = 0; j < r; ++j)
      for (std::uint32_t k = 0; k < r; ++k) row.push_back(c.at(i, j, k));
    std::sort(row.begin(), row.end());
    v.insert(v.end(), row.begin(), row.end());
  }
  return inv;
}

bool same_class_profile(const SRing& a, const SRing& b) {
  if (a.rank() != b.rank() || a.group().order() != b.group().order()) return false;
  std::vector<std::size_t> sa, sb;
  for (auto& x : a.classes()) sa.push_back(x.size());
  for (auto& x : b.classes()) sb.push_back(x.size());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  return sa == sb;
}

void for_each_algebraic_iso(const SRing& a, const SRing& b,
                            const std::function<bool(const std::vector<std::uint32_t>&)>& visit) {
  if (!same_class_profile(a, b)) return;
  const auto r = a.rank();
  const auto ia = class_invariants(a);
  const auto ib = class_invariants(b);
  const auto& ca = a.constants();
  const auto& cb = b.constants();
  std::vector<std::uint32_t> phi(r, 0);
  std::vector<char> used(r, 0);
  bool stop = false;

  auto consistent = [&](std::uint32_t i) {
    for (std::uint32_t x = 0; x <= i; ++x)
      for (std::uint32_t y = 0; y <= i; ++y) {
        if (ca.at(i, x, y) != cb.at(phi[i], phi[x], phi[y])) return false;
        if (ca.at(x, i, y) != cb.at(phi[x], phi[i], phi[y])) return false;
        if (ca.at(x, y, i) != cb.at(phi[x], phi[y], phi[i])) return false;
      }
    return true;
  };
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t i) {
    if (stop) return;
    if (i == r) {
      stop = !visit(phi);
      return;
    }
    for (std::uint32_t j = 0; j < r && !stop; ++j) {
      if (used[j] || ia[i] != ib[j]) continue;
      phi[i] = j;
      if (!consistent(i)) continue;
      used[j] = 1;
      rec(i + 1);
      used[j] = 0;
    }
  };
  rec(0);
}

// Backtracking over element maps f: G -> G' with
//   class_B(f(h) f(g)^-1) = phi(class_A(h g^-1)) for all g, h.
// Domains are bitsets; assigning g -> g' intersects the domain of every x
// with X'_{phi(class(x g^-1))} g'.
class ElementSearch {
 public:
  ElementSearch(const SRing& a, const SRing& b, std::vector<std::uint32_t> phi)
      : a_(a), b_(b), phi_(std::move(phi)), n_(a.group().order()), words_((n_ + 63) / 64) {
    const auto& gb = b.group();
    shifted_.assign(b.rank() * n_ * words_, 0);
    for (std::uint32_t k = 0; k < b.rank(); ++k)
      for (Elem h = 0; h < n_; ++h) {
        auto* row = shifted(k, h);
        for (auto x : b.basic_set(k).elements()) {
          const auto y = gb.mul(x, h);
          row[y >> 6] |= std::uint64_t{1} << (y & 63);
        }
      }
  }

  /// Calls visit(f) on every solution extending `fixed` until it returns
  /// false. Returns false if stopped early.
  bool run(const std::vector<std::pair<Elem, Elem>>& fixed, const std::function<bool(const std::vector<Elem>&)>& visit) {
    std::vector<std::uint64_t> dom(n_ * words_, 0);
    for (Elem g = 0; g < n_; ++g)
      for (Elem x = 0; x < n_; ++x) dom[g * words_ + (x >> 6)] |= std::uint64_t{1} << (x & 63);
    std::vector<Elem> f(n_, kUnset);
    for (auto [g, h] : fixed) {
      if (f[g] != kUnset) {
        if (f[g] != h) return true;
        continue;
      }
      if (!((dom[g * words_ + (h >> 6)] >> (h & 63)) & 1U)) return true;
      if (!assign(dom, f, g, h)) return true;
    }
    visit_ = &visit;
    stopped_ = false;
    rec(dom, f);
    return !stopped_;
  }

 private:
  static constexpr Elem kUnset = ~Elem{0};

  std::uint64_t* shifted(std::uint32_t k, Elem h) { return shifted_.data() + (std::size_t(k) * n_ + h) * words_; }

  bool assign(std::vector<std::uint64_t>& dom, std::vector<Elem>& f, Elem g, Elem image) {
    f[g] = image;
    auto* dg = dom.data() + g * words_;
    std::fill(dg, dg + words_, 0);
    dg[image >> 6] |= std::uint64_t{1} << (image & 63);
    const auto& ga = a_.group();
    const auto ginv = ga.inv(g);
    for (Elem x = 0; x < n_; ++x) {
      if (f[x] != kUnset) continue;
      const auto* allowed = shifted(phi_[a_.class_of(ga.mul(x, ginv))], image);
      auto* dx = dom.data() + x * words_;
      bool any = false;
      for (std::size_t w = 0; w < words_; ++w) {
        dx[w] &= allowed[w];
        any |= dx[w] != 0;
      }
      dx[image >> 6] &= ~(std::uint64_t{1} << (image & 63));
      if (!any || std::all_of(dx, dx + words_, [](std::uint64_t v) { return v == 0; })) return false;
    }
    return true;
  }

  void rec(const std::vector<std::uint64_t>& dom, std::vector<Elem>& f) {
    if (stopped_) return;
    Elem pick = kUnset;
    std::size_t best = n_ + 1;
    for (Elem x = 0; x < n_; ++x) {
      if (f[x] != kUnset) continue;
      std::size_t c = 0;
      for (std::size_t w = 0; w < words_; ++w) c += std::popcount(dom[x * words_ + w]);
      if (c < best) {
        best = c;
        pick = x;
      }
    }
    if (pick == kUnset) {
      stopped_ = !(*visit_)(f);
      return;
    }
    for (std::size_t w = 0; w < words_ && !stopped_; ++w) {
      auto bits = dom[pick * words_ + w];
      while (bits && !stopped_) {
        const auto image = static_cast<Elem>(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
        auto next = dom;
        auto saved = f;
        if (assign(next, f, pick, image)) rec(next, f);
        f = std::move(saved);
      }
    }
  }

  const SRing& a_;
  const SRing& b_;
  std::vector<std::uint32_t> phi_;
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> shifted_;
  const std::function<bool(const std::vector<Elem>&)>* visit_ = nullptr;
  bool stopped_ = false;
};

std::vector<std::uint32_t> identity_map(std::size_t r) {
  std::vector<std::uint32_t> id(r);
  for (std::uint32_t i = 0; i < r; ++i) id[i] = i;
  return id;
}

}  // namespace

std::vector<AlgebraicIso> algebraic_isos(const SRingRef& a, const SRingRef& b) {
  std::vector<AlgebraicIso> out;
  for_each_algebraic_iso(*a, *b, [&](const std::vector<std::uint32_t>& phi) {
    out.push_back({a, b, phi});
    return true;
  });
  return out;
}

std::vector<AlgebraicIso> algebraic_isos(const SRing& a, const SRing& b) {
  return algebraic_isos(std::make_shared<const SRing>(a), std::make_shared<const SRing>(b));
}

namespace {

std::vector<CombinatorialIso> cayley_isos_impl(const SRing& a, const SRing& b, bool first_only) {
  std::vector<CombinatorialIso> out;
  if (!same_class_profile(a, b)) return out;
  const auto& ga = a.group();
  const auto& gb = b.group();
  require_capacity(ga.order(), "cayley_isos");
  if (!are_isomorphic(ga, gb)) return out;
  auto ra = std::make_shared<const SRing>(a);
  auto rb = std::make_shared<const SRing>(b);
  for (auto& f : isomorphisms(ga, gb)) {
    bool ok = true;
    for (std::uint32_t c = 0; c < a.rank() && ok; ++c) {
      const auto& x = a.basic_set(c);
      const auto members = x.elements();
      const auto target = b.class_of(f(members.front()));
      ok = b.basic_set(target).size() == members.size();
      for (auto g : members)
        if (ok && b.class_of(f(g)) != target) ok = false;
    }
    if (!ok) continue;
    out.push_back({ra, rb, f.table()});
    if (first_only) break;
  }
  return out;
}

}  // namespace

std::vector<CombinatorialIso> cayley_isos(const SRing& a, const SRing& b) { return cayley_isos_impl(a, b, false); }

std::optional<CombinatorialIso> find_cayley_iso(const SRing& a, const SRing& b) {
  auto v = cayley_isos_impl(a, b, true);
  if (v.empty()) return std::nullopt;
  return v.front();
}

std::vector<CombinatorialIso> combinatorial_isos(const SRing& a, const SRing& b, std::size_t limit) {
  std::vector<CombinatorialIso> out;
  auto ra = std::make_shared<const SRing>(a);
  auto rb = std::make_shared<const SRing>(b);
  for_each_algebraic_iso(a, b, [&](const std::vector<std::uint32_t>& phi) {
    ElementSearch search(a, b, phi);
    return search.run({{0, 0}}, [&](const std::vector<Elem>& f) {
      out.push_back({ra, rb, f});
      return limit == 0 || out.size() < limit;
    });
  });
  return out;
}

AlgebraicIso induced_algebraic_iso(const CombinatorialIso& f) {
  auto phi = combinatorial_class_map(*f.source, *f.target, f.map);
  if (!phi || !is_algebraic_iso(*f.source, *f.target, *phi))
    throw SchurError(ErrorCode::InvariantViolation, "map is not a combinatorial isomorphism");
  return {f.source, f.target, *phi};
}

std::optional<CombinatorialIso> find_inducing_isomorphism(const AlgebraicIso& phi, const InduceOptions& options) {
  const auto& a = *phi.source;
  const auto& b = *phi.target;
  if (!is_algebraic_iso(a, b, phi.map))
    throw SchurError(ErrorCode::Precondition, "find_inducing_isomorphism: not an algebraic isomorphism");
  if (options.cayley_first && are_isomorphic(a.group(), b.group())) {
    for (auto& f : cayley_isos(a, b)) {
      bool ok = true;
      for (std::uint32_t c = 0; c < a.rank() && ok; ++c) ok = b.class_of(f(a.basic_set(c).min())) == phi.map[c];
      if (ok) return CombinatorialIso{phi.source, phi.target, f.map};
    }
  }
  std::optional<CombinatorialIso> found;
  ElementSearch search(a, b, phi.map);
  search.run({{0, 0}}, [&](const std::vector<Elem>& f) {
    found = CombinatorialIso{phi.source, phi.target, f};
    return false;
  });
  return found;
}

std::vector<CombinatorialIso> aut_sring(const SRing& a, std::size_t limit) {
  require_capacity(a.group().order(), "aut_sring");
  auto ra = std::make_shared<const SRing>(a);
  std::vector<CombinatorialIso> out;
  ElementSearch search(a, a, identity_map(a.rank()));
  search.run({}, [&](const std::vector<Elem>& f) {
    out.push_back({ra, ra, f});
    return limit == 0 || out.size() < limit;
  });
  return out;
}

unsigned __int128 aut_sring_order(const SRing& a) {
  require_capacity(a.group().order(), "aut_sring_order");
  const auto n = a.group().order();
  ElementSearch search(a, a, identity_map(a.rank()));
  unsigned __int128 order = 1;
  std::vector<std::pair<Elem, Elem>> fixed;
  // |Aut| = product over base points of the orbit length under the
  // pointwise stabiliser of the earlier points
  for (Elem v = 0; v < n; ++v) {
    std::vector<char> in_orbit(n, 0);
    std::size_t orbit = 0;
    for (Elem w = 0; w < n; ++w) {
      if (in_orbit[w]) continue;
      auto trial = fixed;
      trial.emplace_back(v, w);
      std::vector<Elem> witness;
      search.run(trial, [&](const std::vector<Elem>& f) {
        witness = f;
        return false;
      });
      if (witness.empty()) continue;
      in_orbit[w] = 1;
      ++orbit;
    }
    order *= orbit;
    fixed.emplace_back(v, v);
  }
  return order;
}

std::string to_string(unsigned __int128 value) {
  if (value == 0) return "0";
  std::string s;
  while (value > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

SeparabilityReport separability_check(const SRing& a, const std::vector<SRingRef>& targets, const Exec& exec) {
  const auto start = std::chrono::steady_clock::now();
  SeparabilityReport report;
  report.subject = std::make_shared<const SRing>(a);
  std::vector<std::vector<SeparabilityEntry>> per_target(targets.size());
  parallel_for(exec, targets.size(), [&](std::size_t t) {
    const auto& b = targets[t];
    if (b->group().order() != a.group().order()) return;
    for (auto& phi : algebraic_isos(report.subject, b)) {
      SeparabilityEntry entry{b, phi.map, std::nullopt};
      if (auto f = find_inducing_isomorphism(phi)) entry.inducing = f->map;
      per_target[t].push_back(std::move(entry));
    }
  });
  for (auto& list : per_target)
    for (auto& e : list) {
      if (!e.inducing) report.separable = false;
      report.entries.push_back(std::move(e));
    }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SeparabilityReport separability_check(const SRing& a, const Exec& exec) {
  require_capacity(a.group().order(), "separability_check");
  std::vector<SRingRef> targets;
  for (auto& g : abelian_groups_of_order(a.group().order()))
    for (auto& b : enumerate_srings(g, exec)) targets.push_back(std::make_shared<const SRing>(std::move(b)));
  return separability_check(a, targets, exec);
}

std::size_t count_extensions(const AlgebraicIso& phi, const GroupRingVector& xi, const GroupRingVector& xi_prime) {
  const auto& a = *phi.source;
  const auto& a2 = *phi.target;
  auto closure_with = [](const SRing& base, const GroupRingVector& v) {
    std::vector<GroupRingVector> seeds;
    for (auto& x : base.classes()) seeds.push_back(GroupRingVector::indicator(x));
    seeds.push_back(v);
    return schur_closure(base.group(), seeds);
  };
  const auto b = closure_with(a, xi);
  const auto b2 = closure_with(a2, xi_prime);
  std::size_t count = 0;
  for_each_algebraic_iso(b, b2, [&](const std::vector<std::uint32_t>& psi) {
    for (std::uint32_t k = 0; k < b.rank(); ++k) {
      const auto g = b.basic_set(k).min();
      const auto& image = b2.basic_set(psi[k]);
      // psi extends phi: each B-class lands inside the phi-image of its A-class
      for (auto h : image.elements())
        if (a2.class_of(h) != phi.map[a.class_of(g)]) return true;
      // xi^psi = xi'
      for (auto h : image.elements())
        if (xi_prime.coefficients[h] != xi.coefficients[g]) return true;
    }
    ++count;
    return true;
  });
  return count;
}

bool extension_uniqueness_check(const AlgebraicIso& phi, const GroupRingVector& xi, const GroupRingVector& xi_prime) {
  return count_extensions(phi, xi, xi_prime) <= 1;
}

}  // namespace schur
