#include "schur/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "schur/constructions.hpp"
#include "schur/enumerate.hpp"
#include "schur/errors.hpp"
#include "schur/wl.hpp"

namespace schur {

const std::vector<SRingRef>& SRingCache::over(const AbelianGroup& group) {
  std::shared_ptr<std::vector<SRingRef>> slot;
  {
    std::lock_guard lock(mutex_);
    auto& s = by_group_[group.spec()];
    if (s) return *s;
  }
  auto rings = enumerate_srings(group, exec_);
  slot = std::make_shared<std::vector<SRingRef>>();
  for (auto& r : rings) slot->push_back(std::make_shared<const SRing>(std::move(r)));
  std::lock_guard lock(mutex_);
  auto& s = by_group_[group.spec()];
  if (!s) s = slot;
  return *s;
}

std::vector<SRingRef> SRingCache::of_order(std::size_t order) {
  std::vector<SRingRef> all;
  for (auto& g : abelian_groups_of_order(order)) {
    auto& rings = over(g);
    all.insert(all.end(), rings.begin(), rings.end());
  }
  return all;
}

std::string CheckResult::line() const {
  std::string s = key + ":";
  if (!detail.empty()) s += " " + detail;
  switch (status) {
    case CheckStatus::Pass: s += " PASS"; break;
    case CheckStatus::Fail: s += " FAIL"; break;
    case CheckStatus::Skipped: s += " SKIPPED"; break;
  }
  return s;
}

bool VerifyReport::ok() const {
  return std::none_of(checks.begin(), checks.end(), [](auto& c) { return c.status == CheckStatus::Fail; });
}

namespace {

struct CheckName {
  const char* key;
  std::vector<const char*> aliases;
};

const std::vector<CheckName>& check_names() {
  static const std::vector<CheckName> names = {
      {"Sring0", {}},
      {"oracle", {"enumerate"}},
      {"main", {"separability"}},
      {"classify", {"classification"}},
      {"Sring1", {"classification"}},
      {"Sring2", {"classification"}},
      {"conj", {"families"}},
      {"nonisom", {"families"}},
      {"generate", {"families"}},
      {"cayleyisom", {"families"}},
      {"burn", {"multipliers"}},
      {"sch", {"multipliers"}},
      {"subdirect", {}},
      {"uniq", {}},
      {"corollary", {"wl"}},
  };
  return names;
}

bool skipped(const VerifyOptions& o, const std::string& key) {
  if (o.skip.count(key)) return true;
  for (auto& n : check_names())
    if (key == n.key)
      for (auto* a : n.aliases)
        if (o.skip.count(a)) return true;
  return false;
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class... Args>
std::string fmt(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

class Runner {
 public:
  Runner(const VerifyOptions& o, const std::function<void(const CheckResult&)>& sink)
      : opts_(o), sink_(sink), cache_(o.exec) {}

  VerifyReport run();

 private:
  using Body = std::function<std::pair<bool, std::string>()>;

  void check(const std::string& key, const std::string& skip_detail, const Body& body) {
    CheckResult r;
    r.key = key;
    if (skipped(opts_, key)) {
      r.detail = skip_detail;
      r.status = CheckStatus::Skipped;
    } else {
      const auto t0 = std::chrono::steady_clock::now();
      try {
        auto [ok, detail] = body();
        r.detail = detail;
        r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
      } catch (const SchurError& e) {
        r.detail = skip_detail + " error=" + to_string(e.code()) + " (" + e.what() + ")";
        r.status = CheckStatus::Fail;
      }
      r.seconds = since(t0);
    }
    if (sink_) sink_(r);
    report_.checks.push_back(std::move(r));
  }

  std::vector<std::uint32_t> odd_primes() const {
    std::vector<std::uint32_t> out;
    for (auto p : opts_.primes)
      if (p >= 3) out.push_back(p);
    return out;
  }

  bool has_prime(std::uint32_t p) const {
    return std::find(opts_.primes.begin(), opts_.primes.end(), p) != opts_.primes.end();
  }

  std::pair<bool, std::string> sring0();
  std::pair<bool, std::string> oracle();
  std::pair<bool, std::string> separability(std::uint32_t p);
  std::pair<bool, std::string> classify(std::uint32_t p);
  std::pair<bool, std::string> sring1(std::uint32_t p);
  std::pair<bool, std::string> sring2(std::uint32_t p);
  std::pair<bool, std::string> conj(std::uint32_t p);
  std::pair<bool, std::string> nonisom(std::uint32_t p);
  std::pair<bool, std::string> generate(std::uint32_t p);
  std::pair<bool, std::string> cayleyisom(std::uint32_t p);
  std::pair<bool, std::string> burn();
  std::pair<bool, std::string> sch();
  std::pair<bool, std::string> subdirect();
  std::pair<bool, std::string> uniq();
  std::pair<bool, std::string> corollary(std::size_t n);

  std::vector<SRingRef> rings_up_to(std::size_t max_order) {
    std::vector<SRingRef> all;
    for (std::size_t n = 1; n <= max_order; ++n) {
      auto r = cache_.of_order(n);
      all.insert(all.end(), r.begin(), r.end());
    }
    return all;
  }

  const VerifyOptions& opts_;
  const std::function<void(const CheckResult&)>& sink_;
  SRingCache cache_;
  VerifyReport report_;
};

// G = E x P with |E| = 4 and |P| = p odd.
struct FourP {
  Subgroup e;
  Subgroup p;
  long long e_power = 0;  // g -> g^e_power is the projection onto E

  static FourP of(const AbelianGroup& g) {
    const auto n = g.order();
    const auto p = n / 4;
    FourP s{*unique_subgroup_of_order(g, 4), *unique_subgroup_of_order(g, p), 0};
    for (std::size_t m = 0; m < n; ++m)
      if (m % 4 == 1 && m % p == 0) s.e_power = static_cast<long long>(m);
    return s;
  }

  ElementSet project(const AbelianGroup& g, const ElementSet& x) const {
    ElementSet out(g.order());
    for (auto v : x.elements()) out.insert(g.pow(v, e_power));
    return out;
  }
};

bool is_a_subgroup(const SRing& ring, const Subgroup& h) { return is_a_set(ring, h.elements()); }

bool sections_equal(const SRing& a, const SRing& b) { return a.group() == b.group() && a.labels() == b.labels(); }

SRing closure_of(const SRing& ring, const ElementSet& x) {
  return schur_closure(ring.group(), {GroupRingVector::indicator(x)});
}

std::pair<bool, std::string> Runner::sring0() {
  const auto g = AbelianGroup::parse("C2xC2xC2");
  const auto& rings = cache_.over(g);
  std::size_t unexplained = 0;
  for (auto& ring : rings) {
    bool ok = ring->rank() == g.order() || ring->rank() == 2;
    const auto subs = a_subgroups(*ring);
    for (std::size_t i = 0; !ok && i < subs.size(); ++i) {
      const auto& u = subs[i];
      if (u.order() == 1 || u.order() == g.order()) continue;
      if (is_generalized_wreath(*ring, u, u).holds) ok = true;
      for (std::size_t j = 0; !ok && j < subs.size(); ++j) {
        const auto& l = subs[j];
        if (l.order() == 1 || u.order() * l.order() != g.order()) continue;
        if ((u.elements() & l.elements()).size() == 1 && is_tensor_decomposition(*ring, u, l)) ok = true;
      }
    }
    if (!ok) ++unexplained;
  }
  std::string detail = fmt("count=", rings.size());
  if (unexplained) detail += fmt(" unexplained=", unexplained);
  return {rings.size() == 9 && unexplained == 0, detail};
}

std::pair<bool, std::string> Runner::oracle() {
  std::size_t groups = 0, srings = 0;
  std::vector<std::string> mismatches;
  for (std::size_t n = 1; n <= opts_.oracle_max_order; ++n) {
    for (auto& g : abelian_groups_of_order(n)) {
      ++groups;
      const auto& fast = cache_.over(g);
      const auto slow = brute_force_srings(g);
      srings += fast.size();
      bool same = fast.size() == slow.size();
      for (std::size_t i = 0; same && i < fast.size(); ++i) same = *fast[i] == slow[i];
      if (!same) mismatches.push_back(g.spec());
    }
  }
  std::string detail = fmt("orders<=", opts_.oracle_max_order, " groups=", groups, " srings=", srings);
  for (auto& m : mismatches) detail += " mismatch=" + m;
  return {mismatches.empty(), detail};
}

std::pair<bool, std::string> Runner::separability(std::uint32_t p) {
  const auto n = 4 * p;
  const auto targets = cache_.of_order(n);
  std::vector<std::size_t> isos(targets.size()), failures(targets.size());
  parallel_for(opts_.exec, targets.size(), [&](std::size_t i) {
    const auto r = separability_check(*targets[i], targets, Exec::serial());
    isos[i] = r.entries.size();
    for (auto& e : r.entries) failures[i] += !e.inducing;
  });
  std::size_t total = 0, bad = 0, bad_rings = 0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    total += isos[i];
    bad += failures[i];
    bad_rings += failures[i] > 0;
  }
  return {bad == 0, fmt("p=", p, " groups=", abelian_groups_of_order(n).size(), " srings=", targets.size(),
                        " algebraic_isos=", total, " not_induced=", bad, " non_separable=", bad_rings)};
}

std::pair<bool, std::string> Runner::classify(std::uint32_t p) {
  const auto n = 4 * p;
  std::map<std::string, std::size_t> hist;
  std::size_t gaps = 0, bad_witness = 0, bad_label = 0, total = 0;
  for (auto& g : abelian_groups_of_order(n)) {
    for (auto& ring : cache_.over(g)) {
      ++total;
      Classification c;
      try {
        c = classify_4p(*ring);
      } catch (const SchurError& e) {
        if (e.code() != ErrorCode::ClassificationGap) throw;
        ++gaps;
        continue;
      }
      ++hist[to_string(c.label)];
      if (c.label == CaseLabel::Family) {
        bool ok = c.family && c.cayley_witness;
        if (ok) {
          const auto fam = build_family(*c.family);
          for (auto& x : ring->classes())
            ok = ok && fam.find_class(image(x, c.cayley_witness->table(), n)).has_value();
          ok = ok && c.cayley_witness->is_bijective() && c.cayley_witness->is_homomorphism();
        }
        bad_witness += !ok;
      }
      if (c.label == CaseLabel::CitedSeparable && g.spec() != "C8" && g.spec() != "C4xC2") ++bad_label;
      if ((c.label == CaseLabel::Family || c.label == CaseLabel::TensorEP) && p == 2) ++bad_label;
    }
  }
  std::string detail = fmt("p=", p, " srings=", total);
  for (auto& [k, v] : hist) detail += fmt(" ", k, "=", v);
  if (gaps) detail += fmt(" gaps=", gaps);
  if (bad_witness) detail += fmt(" bad_witness=", bad_witness);
  if (bad_label) detail += fmt(" bad_label=", bad_label);
  return {gaps == 0 && bad_witness == 0 && bad_label == 0, detail};
}

std::pair<bool, std::string> Runner::sring1(std::uint32_t p) {
  const auto n = 4 * p;
  std::size_t applicable = 0, violations = 0;
  for (auto& g : abelian_groups_of_order(n)) {
    const auto s = FourP::of(g);
    const auto e_elems = s.e.elements().elements();
    const bool klein = std::all_of(e_elems.begin(), e_elems.end(), [&](Elem x) { return g.order_of(x) <= 2; });
    for (auto& ring : cache_.over(g)) {
      if (is_a_subgroup(*ring, s.e) && is_a_subgroup(*ring, s.p)) continue;
      ++applicable;
      bool ok = ring->rank() == 2;
      const auto subs = a_subgroups(*ring);
      for (auto& u : subs) {
        for (auto& l : subs) {
          if (ok) break;
          if (!l.is_subgroup_of(u) || u.order() > 2 * l.order()) continue;
          const auto w = is_generalized_wreath(*ring, u, l);
          ok = w.holds && w.proper;
        }
      }
      if (!ok && klein) {
        for (auto& h : subs) {
          for (auto& l : subs) {
            if (ok) break;
            if (h.order() != 2 || l.order() != 2 * p) continue;
            ok = (h.elements() & l.elements()).size() == 1 && is_tensor_decomposition(*ring, h, l);
          }
        }
      }
      violations += !ok;
    }
  }
  return {violations == 0, fmt("p=", p, " applicable=", applicable, " violations=", violations)};
}

std::pair<bool, std::string> Runner::sring2(std::uint32_t p) {
  const auto n = 4 * p;
  std::vector<SRing> families;
  for (auto& d : family_descriptors(p)) families.push_back(build_family(d));
  std::size_t applicable = 0, tensor = 0, family = 0, violations = 0;
  for (auto& g : abelian_groups_of_order(n)) {
    const auto s = FourP::of(g);
    for (auto& ring : cache_.over(g)) {
      if (!is_a_subgroup(*ring, s.e) || !is_a_subgroup(*ring, s.p)) continue;
      ++applicable;
      if (is_tensor_decomposition(*ring, s.e, s.p)) {
        ++tensor;
        continue;
      }
      bool ok = false;
      for (auto& f : families)
        if (!ok && f.group() == g && find_cayley_iso(*ring, f)) ok = true;
      family += ok;
      violations += !ok;
    }
  }
  return {violations == 0, fmt("p=", p, " applicable=", applicable, " tensor=", tensor, " family=", family,
                               " violations=", violations)};
}

std::pair<bool, std::string> Runner::conj(std::uint32_t p) {
  const auto n = 4 * p;
  std::size_t pairs = 0, violations = 0;
  for (auto& g : abelian_groups_of_order(n)) {
    const auto s = FourP::of(g);
    std::vector<std::vector<Elem>> maps;
    for (auto m : multiplier_units(g)) maps.push_back(power_map(g, m));
    for (auto& ring : cache_.over(g)) {
      if (!is_a_subgroup(*ring, s.e) || !is_a_subgroup(*ring, s.p)) continue;
      std::vector<ElementSet> proj;
      for (auto& x : ring->classes()) proj.push_back(s.project(g, x));
      // Classes inside E have trivial P-part and are only conjugate to themselves.
      for (std::size_t i = 0; i < ring->rank(); ++i) {
        if (ring->basic_set(i).intersects(s.e.elements())) continue;
        for (std::size_t j = i + 1; j < ring->rank(); ++j) {
          if (ring->basic_set(j).intersects(s.e.elements()) || !(proj[i] == proj[j])) continue;
          ++pairs;
          bool ok = false;
          for (auto& m : maps)
            if (!ok && image(ring->basic_set(i), m, n) == ring->basic_set(j)) ok = true;
          violations += !ok;
        }
      }
    }
  }
  return {violations == 0, fmt("p=", p, " pairs=", pairs, " violations=", violations)};
}

// The regular orbit of <sigma> on E.
ElementSet regular_orbit(const FamilyDescriptor& d) {
  const auto g = d.group();
  const auto sigma = d.sigma();
  const auto e = *unique_subgroup_of_order(g, 4);
  for (auto x : e.elements().elements()) {
    ElementSet orbit(g.order());
    for (Elem y = x; !orbit.contains(y); y = sigma(y)) orbit.insert(y);
    if (orbit.size() == d.sigma_order()) return orbit;
  }
  throw SchurError(ErrorCode::InvariantViolation, "no regular orbit for " + d.to_string());
}

std::vector<std::uint32_t> highest_classes(const SRing& ring, const FamilyDescriptor& d) {
  const auto& g = ring.group();
  const auto s = FourP::of(g);
  const auto o = regular_orbit(d);
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < ring.rank(); ++i) {
    const auto& x = ring.basic_set(i);
    if (x.intersects(s.e.elements()) || x.intersects(s.p.elements())) continue;
    if (s.project(g, x) == o) out.push_back(i);
  }
  return out;
}

std::pair<bool, std::string> Runner::nonisom(std::uint32_t p) {
  const auto ds = family_descriptors(p);
  std::size_t pairs = 0, violations = 0, parity_checked = 0, parity_bad = 0;
  for (std::size_t a = 0; a < ds.size(); ++a) {
    for (std::size_t b = a + 1; b < ds.size(); ++b) {
      if (ds[a].k != ds[b].k || ds[a].i == ds[b].i) continue;
      ++pairs;
      if (!algebraic_isos(build_family(ds[a]), build_family(ds[b])).empty()) ++violations;
    }
  }
  for (auto& d : ds) {
    if (d.i == 1) continue;
    const auto ring = build_family(d);
    const auto s = FourP::of(ring.group());
    const auto& c = ring.constants();
    for (auto x : highest_classes(ring, d)) {
      ++parity_checked;
      bool some_odd = false, all_even = true;
      for (std::uint32_t y = 0; y < ring.rank(); ++y) {
        if (!ring.basic_set(y).is_subset_of(s.p.elements())) continue;
        if (c.at(x, x, y) % 2) some_odd = true;
        else continue;
        all_even = false;
      }
      if (d.i == 2 ? !some_odd : !all_even) ++parity_bad;
    }
  }
  return {violations == 0 && parity_bad == 0 && parity_checked > 0,
          fmt("p=", p, " pairs=", pairs, " isomorphic_pairs=", violations, " parity_classes=", parity_checked,
              " parity_violations=", parity_bad)};
}

std::pair<bool, std::string> Runner::generate(std::uint32_t p) {
  std::size_t families = 0, classes = 0, highest = 0, violations = 0;
  for (auto& d : family_descriptors(p)) {
    ++families;
    const auto ring = build_family(d);
    const auto& g = ring.group();
    const auto n = g.order();
    const auto s = FourP::of(g);
    const auto o = regular_orbit(d);
    const auto hs = highest_classes(ring, d);
    if (hs.empty() || !is_a_subgroup(ring, s.e) || !is_a_subgroup(ring, s.p)) ++violations;
    const auto listed = highest_basic_sets(ring);
    if (listed.size() != hs.size()) ++violations;
    for (std::uint32_t i = 0; i < ring.rank(); ++i) {
      ++classes;
      const auto& x = ring.basic_set(i);
      const bool is_highest = std::find(hs.begin(), hs.end(), i) != hs.end();
      const bool generates = generated_subgroup(g, x).order() == n;
      if (x.size() > d.k) ++violations;
      if (is_highest != generates) ++violations;
      const auto closure = closure_of(ring, x);
      if (is_highest != sections_equal(closure, ring)) ++violations;
      if (!is_highest) continue;
      ++highest;
      const std::size_t per_p = d.k / d.sigma_order();
      for (auto v : x.elements()) {
        std::size_t in_e = 0, in_p = 0;
        for (auto w : x.elements()) {
          const auto q = g.mul(w, g.inv(v));
          in_e += s.e.contains(q);
          in_p += s.p.contains(q);
        }
        if (in_e != 1 || in_p != per_p) ++violations;
      }
      if (!(schur_wielandt(ring, x, p) == o)) ++violations;
    }
  }
  return {violations == 0, fmt("p=", p, " families=", families, " classes=", classes, " highest=", highest,
                               " violations=", violations)};
}

std::pair<bool, std::string> Runner::cayleyisom(std::uint32_t p) {
  const auto targets = cache_.of_order(4 * p);
  std::size_t families = 0, matched = 0, violations = 0;
  for (auto& d : family_descriptors(p)) {
    for (bool xi : {false, true}) {
      if (xi && d.i != 1) continue;
      ++families;
      const auto ring = build_family(d, xi);
      for (auto& b : targets) {
        if (algebraic_isos(ring, *b).empty()) continue;
        ++matched;
        if (!find_cayley_iso(ring, *b)) ++violations;
      }
    }
  }
  return {violations == 0 && matched >= families,
          fmt("p=", p, " families=", families, " algebraic_matches=", matched, " without_cayley=", violations)};
}

std::pair<bool, std::string> Runner::burn() {
  const auto rings = rings_up_to(opts_.multiplier_max_order);
  std::vector<std::size_t> checks(rings.size()), bad(rings.size());
  parallel_for(opts_.exec, rings.size(), [&](std::size_t r) {
    const auto& ring = *rings[r];
    const auto& g = ring.group();
    for (auto m : multiplier_units(g)) {
      const auto pm = power_map(g, m);
      for (auto& x : ring.classes()) {
        ++checks[r];
        try {
          const auto y = rational_conjugate(ring, x, m);
          if (!(y == image(x, pm, g.order())) || !ring.find_class(y)) ++bad[r];
        } catch (const SchurError&) {
          ++bad[r];
        }
      }
    }
  });
  std::size_t total = 0, violations = 0;
  for (std::size_t r = 0; r < rings.size(); ++r) total += checks[r], violations += bad[r];
  return {violations == 0, fmt("orders<=", opts_.multiplier_max_order, " srings=", rings.size(), " checks=", total,
                               " violations=", violations)};
}

std::pair<bool, std::string> Runner::sch() {
  const auto rings = rings_up_to(opts_.multiplier_max_order);
  std::vector<std::size_t> checks(rings.size()), bad(rings.size());
  parallel_for(opts_.exec, rings.size(), [&](std::size_t r) {
    const auto& ring = *rings[r];
    const auto& g = ring.group();
    const auto primes = prime_divisors(g.order());
    const auto k = ring.rank();
    auto test = [&](const ElementSet& x) {
      for (auto p : primes) {
        ++checks[r];
        try {
          if (!is_a_set(ring, schur_wielandt(ring, x, p))) ++bad[r];
        } catch (const SchurError&) {
          ++bad[r];
        }
      }
    };
    for (std::size_t a = 0; a < k; ++a) {
      const auto& xa = ring.basic_set(a);
      test(xa);
      for (std::size_t b = a + 1; b < k; ++b) {
        const auto xab = xa | ring.basic_set(b);
        test(xab);
        for (std::size_t c = b + 1; c < k; ++c) test(xab | ring.basic_set(c));
      }
    }
  });
  std::size_t total = 0, violations = 0;
  for (std::size_t r = 0; r < rings.size(); ++r) total += checks[r], violations += bad[r];
  return {violations == 0, fmt("orders<=", opts_.multiplier_max_order, " srings=", rings.size(), " checks=", total,
                               " violations=", violations)};
}

std::pair<bool, std::string> Runner::subdirect() {
  std::size_t cases = 0, violations = 0;
  for (std::uint32_t v = 1; v <= opts_.subdirect_max_order; ++v) {
    const AbelianGroup cv({v});
    for (std::uint32_t u = 1; u <= v; ++u) {
      if (v % u) continue;
      const AbelianGroup cu({u});
      const auto w = cyclic_subgroup_of_index(cv, u);
      const auto sec = quotient(cv, Subgroup::whole(cv), w);
      const auto& q = sec.quotient;
      for (Elem t = 0; t < q.order(); ++t) {
        if (q.order_of(t) != u) continue;
        ++cases;
        const auto psi = GroupMorphism::from_generator_images(cu, q, {t});
        const auto a = subdirect_product(cu, cv, psi);
        std::size_t direct = 0;
        for (Elem x = 0; x < u; ++x)
          for (Elem y = 0; y < v; ++y) direct += static_cast<std::int32_t>(psi(x)) == sec.projection[y];
        if (a.order() != v || direct != v) ++violations;
      }
    }
  }
  return {violations == 0,
          fmt("orders<=", opts_.subdirect_max_order, " cases=", cases, " violations=", violations)};
}

GroupRingVector random_vector(std::size_t n, std::mt19937_64& rng) {
  auto v = GroupRingVector::zero(n);
  std::uniform_int_distribution<int> coin(0, 1), coef(1, 3);
  for (auto& c : v.coefficients)
    if (coin(rng)) c = coef(rng);
  return v;
}

std::pair<bool, std::string> Runner::uniq() {
  std::mt19937_64 rng(opts_.seed);
  std::vector<AbelianGroup> groups;
  for (std::size_t n = 1; n <= opts_.uniq_max_order; ++n)
    for (auto& g : abelian_groups_of_order(n)) groups.push_back(g);
  std::map<const SRing*, std::vector<AlgebraicIso>> iso_cache;
  auto isos_from = [&](const SRingRef& a) -> const std::vector<AlgebraicIso>& {
    auto& slot = iso_cache[a.get()];
    if (slot.empty())
      for (auto& b : cache_.of_order(a->group().order())) {
        auto found = algebraic_isos(a, b);
        slot.insert(slot.end(), found.begin(), found.end());
      }
    return slot;
  };
  std::size_t transported = 0, violations = 0, unique = 0;
  for (std::size_t t = 0; t < opts_.uniq_instances; ++t) {
    const auto& g = groups[std::uniform_int_distribution<std::size_t>(0, groups.size() - 1)(rng)];
    const auto& rings = cache_.over(g);
    const auto& a = rings[std::uniform_int_distribution<std::size_t>(0, rings.size() - 1)(rng)];
    const auto& isos = isos_from(a);
    const auto& phi = isos[std::uniform_int_distribution<std::size_t>(0, isos.size() - 1)(rng)];
    const auto xi = random_vector(g.order(), rng);
    GroupRingVector xi_prime;
    std::optional<CombinatorialIso> f;
    if (std::uniform_int_distribution<int>(0, 1)(rng)) f = find_inducing_isomorphism(phi);
    if (f) {
      ++transported;
      xi_prime = GroupRingVector::zero(g.order());
      for (Elem x = 0; x < g.order(); ++x) xi_prime.coefficients[(*f)(x)] = xi.coefficients[x];
    } else {
      xi_prime = random_vector(g.order(), rng);
    }
    const auto count = count_extensions(phi, xi, xi_prime);
    violations += count > 1;
    unique += count == 1;
  }
  return {violations == 0, fmt("instances=", opts_.uniq_instances, " seed=", opts_.seed, " transported=", transported,
                               " unique_extension=", unique, " violations=", violations)};
}

std::pair<bool, std::string> Runner::corollary(std::size_t n) {
  const auto r = wl_dimension_experiment(n, false, opts_.exec);
  return {r.indistinguishable_nonisomorphic.empty(),
          fmt("wl n=", n, " groups=", r.groups.size(), " graphs=", r.graph_count, " fingerprint_classes=",
              r.fingerprint_classes, " oracle_calls=", r.oracle_calls,
              " indistinguishable_nonisomorphic=", r.indistinguishable_nonisomorphic.size())};
}

VerifyReport Runner::run() {
  for (auto p : opts_.primes)
    if (!is_prime(p)) throw SchurError(ErrorCode::Usage, fmt("not a prime: ", p));
  const auto odd = odd_primes();

  if (has_prime(2)) check("Sring0", "C2xC2xC2", [&] { return sring0(); });
  check("oracle", fmt("orders<=", opts_.oracle_max_order), [&] { return oracle(); });
  for (auto p : opts_.primes) check("main", fmt("p=", p), [&] { return separability(p); });
  for (auto p : opts_.primes) check("classify", fmt("p=", p), [&] { return classify(p); });
  for (auto p : odd) check("Sring1", fmt("p=", p), [&] { return sring1(p); });
  for (auto p : odd) check("Sring2", fmt("p=", p), [&] { return sring2(p); });
  for (auto p : odd) check("conj", fmt("p=", p), [&] { return conj(p); });
  for (auto p : odd) check("nonisom", fmt("p=", p), [&] { return nonisom(p); });
  for (auto p : odd) check("generate", fmt("p=", p), [&] { return generate(p); });
  for (auto p : odd) check("cayleyisom", fmt("p=", p), [&] { return cayleyisom(p); });
  check("burn", fmt("orders<=", opts_.multiplier_max_order), [&] { return burn(); });
  check("sch", fmt("orders<=", opts_.multiplier_max_order), [&] { return sch(); });
  check("subdirect", fmt("orders<=", opts_.subdirect_max_order), [&] { return subdirect(); });
  check("uniq", fmt("instances=", opts_.uniq_instances), [&] { return uniq(); });
  for (auto p : opts_.primes) {
    const auto n = 4 * std::size_t(p);
    if (n > opts_.wl_max_order && !skipped(opts_, "corollary")) {
      CheckResult r{"corollary", fmt("wl n=", n, " above wl max order ", opts_.wl_max_order), CheckStatus::Skipped, 0};
      if (sink_) sink_(r);
      report_.checks.push_back(std::move(r));
      continue;
    }
    check("corollary", fmt("wl n=", n), [&] { return corollary(n); });
  }
  return std::move(report_);
}

}  // namespace

std::vector<std::string> verify_check_names() {
  std::set<std::string> names;
  for (auto& n : check_names()) {
    names.insert(n.key);
    for (auto* a : n.aliases) names.insert(a);
  }
  return {names.begin(), names.end()};
}

VerifyReport run_verification(const VerifyOptions& options, const std::function<void(const CheckResult&)>& sink) {
  for (auto& s : options.skip) {
    const auto names = verify_check_names();
    if (std::find(names.begin(), names.end(), s) == names.end())
      throw SchurError(ErrorCode::Usage, "unknown check '" + s + "'");
  }
  return Runner(options, sink).run();
}

}  // namespace schur
