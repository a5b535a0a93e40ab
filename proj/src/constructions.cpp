#include "schur/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "schur/errors.hpp"
#include "schur/isomorphism.hpp"

namespace schur {

SRing tensor_product(const SRing& a1, const SRing& a2) {
  auto factors = a1.group().factors();
  const auto& f2 = a2.group().factors();
  factors.insert(factors.end(), f2.begin(), f2.end());
  const AbelianGroup g(factors);
  const auto n2 = static_cast<Elem>(a2.group().order());
  std::vector<ElementSet> classes;
  for (auto& x1 : a1.classes())
    for (auto& x2 : a2.classes()) {
      ElementSet x(g.order());
      for (auto u : x1.elements())
        for (auto v : x2.elements()) x.insert(u * n2 + v);
      classes.push_back(std::move(x));
    }
  return validate_sring(g, classes);
}

SRing wreath_product(const SRing& a_lower, const SRing& a_upper, const AbelianGroup& group, const Subgroup& lower) {
  const auto inner = quotient(group, lower, Subgroup::trivial(group));
  const auto outer = quotient(group, Subgroup::whole(group), lower);
  if (!(a_lower.group() == inner.quotient))
    throw SchurError(ErrorCode::Usage, "wreath_product: lower factor lives on " + a_lower.group().spec() +
                                           ", expected " + inner.quotient.spec());
  if (!(a_upper.group() == outer.quotient))
    throw SchurError(ErrorCode::Usage, "wreath_product: upper factor lives on " + a_upper.group().spec() +
                                           ", expected " + outer.quotient.spec());
  const auto n = group.order();
  std::vector<ElementSet> classes;
  for (auto& x : a_lower.classes()) {
    ElementSet y(n);
    for (auto q : x.elements()) y.insert(inner.lift[q]);
    classes.push_back(std::move(y));
  }
  for (std::uint32_t c = 1; c < a_upper.rank(); ++c) {
    const auto& x = a_upper.basic_set(c);
    ElementSet y(n);
    for (Elem g = 0; g < n; ++g)
      if (x.contains(static_cast<Elem>(outer.projection[g]))) y.insert(g);
    classes.push_back(std::move(y));
  }
  return validate_sring(group, classes);
}

WreathTest is_generalized_wreath(const SRing& ring, const Subgroup& upper, const Subgroup& lower) {
  if (!lower.is_subgroup_of(upper) || !is_a_set(ring, upper.elements()) || !is_a_set(ring, lower.elements()))
    throw SchurError(ErrorCode::Precondition, "is_generalized_wreath: U/L is not an A-section");
  const auto& g = ring.group();
  WreathTest t;
  t.proper = lower.order() > 1 && upper.order() < g.order();
  t.holds = true;
  for (auto& x : ring.classes()) {
    if (x.is_subset_of(upper.elements())) continue;
    if (!lower.is_subgroup_of(radical(g, x))) {
      t.holds = false;
      break;
    }
  }
  return t;
}

SRing cyclotomic(const std::vector<GroupMorphism>& automorphisms, const AbelianGroup& group) {
  const auto n = group.order();
  std::vector<std::vector<Elem>> tables;
  for (auto& f : automorphisms) {
    if (!(f.domain() == group) || !(f.codomain() == group) || !f.is_bijective())
      throw SchurError(ErrorCode::Precondition, "cyclotomic: not an automorphism of " + group.spec());
    tables.push_back(f.table());
  }
  std::sort(tables.begin(), tables.end());
  tables.erase(std::unique(tables.begin(), tables.end()), tables.end());
  std::vector<Elem> id(n);
  for (Elem g = 0; g < n; ++g) id[g] = g;
  if (!std::binary_search(tables.begin(), tables.end(), id))
    throw SchurError(ErrorCode::Precondition, "cyclotomic: the set does not contain the identity");
  std::vector<Elem> comp(n);
  for (auto& f : tables)
    for (auto& h : tables) {
      for (Elem g = 0; g < n; ++g) comp[g] = f[h[g]];
      if (!std::binary_search(tables.begin(), tables.end(), comp))
        throw SchurError(ErrorCode::Precondition, "cyclotomic: the set is not closed under composition");
    }
  std::vector<std::uint32_t> labels(n, ~0U);
  std::uint32_t next = 0;
  for (Elem g = 0; g < n; ++g) {
    if (labels[g] != ~0U) continue;
    for (auto& f : tables) labels[f[g]] = next;
    ++next;
  }
  return sring_from_labels(group, labels);
}

Subgroup cyclic_subgroup_of_index(const AbelianGroup& cyclic, std::uint32_t index) {
  if (cyclic.factors().size() != 1 || cyclic.order() % index != 0)
    throw SchurError(ErrorCode::Precondition, "no subgroup of index " + std::to_string(index) + " in " + cyclic.spec());
  ElementSet w(cyclic.order());
  for (Elem g = 0; g < cyclic.order(); g += index) w.insert(g);
  return Subgroup::from_set(cyclic, w);
}

Subgroup subdirect_product(const AbelianGroup& u, const AbelianGroup& v, const GroupMorphism& psi) {
  if (u.factors().size() != 1 || v.factors().size() != 1)
    throw SchurError(ErrorCode::Precondition, "subdirect_product: U and V must be cyclic");
  const auto nu = static_cast<std::uint32_t>(u.order());
  const auto nv = static_cast<std::uint32_t>(v.order());
  if (nv % nu != 0) throw SchurError(ErrorCode::Precondition, "subdirect_product: |U| must divide |V|");
  const auto w = cyclic_subgroup_of_index(v, nu);
  const auto section = quotient(v, Subgroup::whole(v), w);
  if (!(psi.domain() == u) || !(psi.codomain() == section.quotient) || !psi.is_bijective())
    throw SchurError(ErrorCode::Precondition, "subdirect_product: psi must be an isomorphism U -> V/W");
  const AbelianGroup uv({nu, nv});
  ElementSet members(uv.order());
  for (Elem x = 0; x < nu; ++x)
    for (Elem y = 0; y < nv; ++y)
      if (psi(x) == static_cast<Elem>(section.projection[y])) members.insert(x * nv + y);
  auto s = Subgroup::from_set(uv, members);
  if (s.order() != nv)
    throw SchurError(ErrorCode::InvariantViolation, "subdirect_product: order " + std::to_string(s.order()) +
                                                        " differs from |V| = " + std::to_string(nv));
  return s;
}

std::uint32_t least_primitive_root(std::uint32_t p) {
  if (!is_prime(p)) throw SchurError(ErrorCode::Precondition, std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  const auto qs = prime_divisors(p - 1);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool primitive = true;
    for (auto q : qs) {
      std::uint64_t r = 1;
      for (std::uint32_t t = 0; t < (p - 1) / q; ++t) r = r * g % p;
      if (r == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  return 1;
}

CyclicAutGroup CyclicAutGroup::make(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p) || (p - 1) % k != 0)
    throw SchurError(ErrorCode::Precondition, "Aut(C" + std::to_string(p) + ") has no subgroup of order " +
                                                  std::to_string(k));
  const AbelianGroup cp({p});
  std::uint64_t r = 1;
  const auto g = least_primitive_root(p);
  for (std::uint32_t t = 0; t < (p - 1) / k; ++t) r = r * g % p;
  auto theta = GroupMorphism::from_generator_images(cp, cp, {static_cast<Elem>(r % p)});
  CyclicAutGroup k_group{cp, theta, k, static_cast<std::uint32_t>(r % p), {}};
  auto power = GroupMorphism::identity(cp);
  for (std::uint32_t t = 0; t < k; ++t) {
    k_group.elements.push_back(power);
    power = theta.after(power);
  }
  return k_group;
}

FamilyDescriptor FamilyDescriptor::parse(std::string_view text) {
  constexpr std::string_view prefix = "family:";
  if (text.substr(0, prefix.size()) != prefix) throw ParseError("family descriptor must start with 'family:'", 0);
  FamilyDescriptor d;
  bool seen[3] = {false, false, false};
  std::size_t pos = prefix.size();
  while (pos < text.size()) {
    const auto eq = text.find('=', pos);
    if (eq == std::string_view::npos) throw ParseError("expected '='", pos);
    const auto key = text.substr(pos, eq - pos);
    auto end = text.find(',', eq);
    if (end == std::string_view::npos) end = text.size();
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + eq + 1, text.data() + end, value);
    if (ec != std::errc() || ptr != text.data() + end || end == eq + 1) throw ParseError("expected a number", eq + 1);
    int slot = key == "i" ? 0 : key == "p" ? 1 : key == "k" ? 2 : -1;
    if (slot < 0) throw ParseError("unknown key '" + std::string(key) + "'", pos);
    if (seen[slot]) throw ParseError("repeated key '" + std::string(key) + "'", pos);
    seen[slot] = true;
    (slot == 0 ? d.i : slot == 1 ? d.p : d.k) = value;
    pos = end + 1;
  }
  if (!seen[0] || !seen[1] || !seen[2]) throw ParseError("family descriptor needs i, p and k", text.size());
  d.check();
  return d;
}

std::string FamilyDescriptor::to_string() const {
  return "family:i=" + std::to_string(i) + ",p=" + std::to_string(p) + ",k=" + std::to_string(k);
}

void FamilyDescriptor::check() const {
  if (i < 1 || i > 3) throw SchurError(ErrorCode::Precondition, "family index must be 1, 2 or 3");
  if (p < 3 || !is_prime(p)) throw SchurError(ErrorCode::Precondition, "family prime must be an odd prime");
  if (k == 0 || (p - 1) % k != 0)
    throw SchurError(ErrorCode::Precondition, "|K| = " + std::to_string(k) + " does not divide p-1 = " +
                                                  std::to_string(p - 1));
  if (k % sigma_order() != 0)
    throw SchurError(ErrorCode::Precondition, "|sigma_" + std::to_string(i) + "| = " + std::to_string(sigma_order()) +
                                                  " must divide |K| = " + std::to_string(k));
}

AbelianGroup FamilyDescriptor::group() const {
  return i == 3 ? AbelianGroup({4, p}) : AbelianGroup({2, 2, p});
}

GroupMorphism FamilyDescriptor::sigma() const {
  const auto g = group();
  if (i == 3) {
    const auto c = g.generator(0), z = g.generator(1);
    return GroupMorphism::from_generator_images(g, g, {g.inv(c), z});
  }
  const auto a = g.generator(0), b = g.generator(1), z = g.generator(2);
  if (i == 1) return GroupMorphism::from_generator_images(g, g, {b, g.mul(a, b), z});
  return GroupMorphism::from_generator_images(g, g, {b, a, z});
}

GroupMorphism FamilyDescriptor::theta() const {
  const auto g = group();
  const auto r = CyclicAutGroup::make(p, k).multiplier;
  std::vector<Elem> images;
  const auto last = g.factors().size() - 1;
  for (std::size_t t = 0; t < last; ++t) images.push_back(g.generator(t));
  images.push_back(g.pow(g.generator(last), r));
  return GroupMorphism::from_generator_images(g, g, images);
}

std::vector<FamilyDescriptor> family_descriptors(std::uint32_t p) {
  std::vector<FamilyDescriptor> out;
  if (p < 3 || !is_prime(p)) return out;
  for (std::uint32_t i = 1; i <= 3; ++i)
    for (std::uint32_t k = 1; k <= p - 1; ++k) {
      FamilyDescriptor d{i, p, k};
      if ((p - 1) % k == 0 && k % d.sigma_order() == 0) out.push_back(d);
    }
  return out;
}

std::vector<GroupMorphism> family_automorphisms(const FamilyDescriptor& d, bool use_xi) {
  d.check();
  const auto s = d.sigma_order();
  const AbelianGroup u({s});
  const AbelianGroup v({d.k});
  const auto w = cyclic_subgroup_of_index(v, s);
  const auto kq = quotient(v, Subgroup::whole(v), w);
  // psi: sigma -> M theta, xi: sigma -> M theta^-1
  const Elem theta_power = use_xi ? v.inv(v.generator(0)) : v.generator(0);
  const auto psi =
      GroupMorphism::from_generator_images(u, kq.quotient, {static_cast<Elem>(kq.projection[theta_power])});
  const auto a = subdirect_product(u, v, psi);

  const auto sigma = d.sigma();
  const auto theta = d.theta();
  const auto g = d.group();
  std::vector<GroupMorphism> sigma_pow{GroupMorphism::identity(g)}, theta_pow{GroupMorphism::identity(g)};
  for (std::uint32_t t = 1; t < s; ++t) sigma_pow.push_back(sigma.after(sigma_pow.back()));
  for (std::uint32_t t = 1; t < d.k; ++t) theta_pow.push_back(theta.after(theta_pow.back()));
  std::vector<GroupMorphism> out;
  for (auto e : a.elements().elements()) out.push_back(sigma_pow[e / d.k].after(theta_pow[e % d.k]));
  return out;
}

SRing build_family(const FamilyDescriptor& d, bool use_xi) {
  return cyclotomic(family_automorphisms(d, use_xi), d.group());
}

std::vector<ElementSet> highest_basic_sets(const SRing& ring) {
  std::vector<ElementSet> out;
  const auto& g = ring.group();
  for (auto& x : ring.classes())
    if (generated_subgroup(g, x).order() == g.order()) out.push_back(x);
  return out;
}

std::optional<Subgroup> unique_subgroup_of_order(const AbelianGroup& group, std::size_t order) {
  std::optional<Subgroup> found;
  for (auto& h : all_subgroups(group)) {
    if (h.order() != order) continue;
    if (found) return std::nullopt;
    found = h;
  }
  return found;
}

namespace {

// g -> (h, l) for G = H x L; empty if H and L are not complements.
std::optional<std::vector<std::pair<Elem, Elem>>> complement_coordinates(const AbelianGroup& g, const Subgroup& h,
                                                                         const Subgroup& l) {
  if (h.order() * l.order() != g.order()) return std::nullopt;
  std::vector<std::pair<Elem, Elem>> coords(g.order(), {0, 0});
  std::vector<char> hit(g.order(), 0);
  for (auto x : h.elements().elements())
    for (auto y : l.elements().elements()) {
      const auto z = g.mul(x, y);
      if (hit[z]) return std::nullopt;
      hit[z] = 1;
      coords[z] = {x, y};
    }
  return coords;
}

}  // namespace

bool is_tensor_decomposition(const SRing& ring, const Subgroup& h, const Subgroup& l) {
  const auto& g = ring.group();
  const auto coords = complement_coordinates(g, h, l);
  if (!coords) return false;
  if (!is_a_set(ring, h.elements()) || !is_a_set(ring, l.elements())) return false;
  for (auto& x : ring.classes()) {
    ElementSet xh(g.order()), xl(g.order());
    for (auto z : x.elements()) {
      xh.insert((*coords)[z].first);
      xl.insert((*coords)[z].second);
    }
    if (xh.size() * xl.size() != x.size()) return false;
  }
  return true;
}

const char* to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::Rank2: return "Rank2";
    case CaseLabel::TrivialZG: return "TrivialZG";
    case CaseLabel::Family: return "Family";
    case CaseLabel::TensorEP: return "TensorEP";
    case CaseLabel::TensorDecomposition: return "TensorDecomposition";
    case CaseLabel::ProperGeneralizedWreath: return "ProperGeneralizedWreath";
    case CaseLabel::CitedSeparable: return "CitedSeparable";
  }
  return "?";
}

namespace {

std::string subgroup_text(const Subgroup& s) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (auto g : s.elements().elements()) {
    out << (first ? "" : ",") << g;
    first = false;
  }
  out << "}";
  return out.str();
}

}  // namespace

std::string Classification::describe() const {
  std::string s = to_string(label);
  switch (label) {
    case CaseLabel::ProperGeneralizedWreath:
      s += "(U=" + subgroup_text(*upper) + ",L=" + subgroup_text(*lower) +
           ",|U/L|=" + std::to_string(upper->order() / lower->order()) + ")";
      break;
    case CaseLabel::TensorEP:
    case CaseLabel::TensorDecomposition:
      s += "(H=" + subgroup_text(*left) + ",L=" + subgroup_text(*right) + ")";
      break;
    case CaseLabel::Family:
      s += "(" + std::to_string(family->i) + "," + std::to_string(family->k) + ")";
      break;
    default:
      break;
  }
  return s;
}

Classification classify_4p(const SRing& ring) {
  const auto& g = ring.group();
  const auto n = g.order();
  if (n % 4 != 0 || !is_prime(n / 4))
    throw SchurError(ErrorCode::Precondition, "classify_4p: |G| = " + std::to_string(n) + " is not 4p");
  const auto p = static_cast<std::uint32_t>(n / 4);
  Classification c;

  if (ring.rank() == 2) {
    c.label = CaseLabel::Rank2;
    return c;
  }
  if (ring.rank() == n) {
    c.label = CaseLabel::TrivialZG;
    return c;
  }

  const auto subgroups = a_subgroups(ring);
  if (p >= 3) {
    const auto e = unique_subgroup_of_order(g, 4);
    const auto pp = unique_subgroup_of_order(g, p);
    const bool e_and_p = is_a_set(ring, e->elements()) && is_a_set(ring, pp->elements());
    const bool tensor_ep = e_and_p && is_tensor_decomposition(ring, *e, *pp);
    if (e_and_p && !tensor_ep) {
      const bool klein = g.exponent() % 4 != 0;
      for (auto& d : family_descriptors(p)) {
        if ((d.i == 3) == klein) continue;
        const auto fam = build_family(d);
        if (fam.rank() != ring.rank()) continue;
        if (auto f = find_cayley_iso(ring, fam)) {
          std::vector<Elem> images;
          for (std::size_t t = 0; t < g.factors().size(); ++t) images.push_back(f->map[g.generator(t)]);
          c.label = CaseLabel::Family;
          c.family = d;
          c.cayley_witness = GroupMorphism::from_generator_images(g, fam.group(), images);
          return c;
        }
      }
    }
    if (tensor_ep) {
      c.label = CaseLabel::TensorEP;
      c.left = e;
      c.right = pp;
      return c;
    }
  }

  for (std::size_t x = 0; x < subgroups.size(); ++x)
    for (std::size_t y = x + 1; y < subgroups.size(); ++y) {
      const auto& h = subgroups[x];
      const auto& l = subgroups[y];
      if (h.order() == 1 || l.order() == 1) continue;
      if (is_tensor_decomposition(ring, h, l)) {
        c.label = CaseLabel::TensorDecomposition;
        c.left = h;
        c.right = l;
        return c;
      }
    }

  std::optional<std::pair<Subgroup, Subgroup>> best;
  for (auto& u : subgroups) {
    if (u.order() == n) continue;
    for (auto& l : subgroups) {
      if (l.order() == 1 || !l.is_subgroup_of(u)) continue;
      if (!is_generalized_wreath(ring, u, l).holds) continue;
      if (!best || u.order() / l.order() < best->first.order() / best->second.order()) best.emplace(u, l);
    }
  }
  if (best) {
    c.label = CaseLabel::ProperGeneralizedWreath;
    c.upper = best->first;
    c.lower = best->second;
    return c;
  }

  if (p == 2 && g.exponent() > 2) {
    c.label = CaseLabel::CitedSeparable;
    return c;
  }
  throw SchurError(ErrorCode::ClassificationGap, "classify_4p: no case applies to an S-ring of rank " +
                                                     std::to_string(ring.rank()) + " over " + g.spec());
}

}  // namespace schur
