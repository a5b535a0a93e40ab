#include "schur/abelian_group.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>

#include "schur/errors.hpp"

namespace schur {

namespace {

std::atomic<std::size_t>& capacity_slot() {
  static std::atomic<std::size_t> slot = [] {
    std::size_t bound = 64;
    if (const char* env = std::getenv("SCHUR_CAPACITY")) {
      char* end = nullptr;
      auto v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) bound = std::min<std::size_t>(v, kMaxTableOrder);
    }
    return bound;
  }();
  return slot;
}

std::uint32_t lcm32(std::uint32_t a, std::uint32_t b) { return static_cast<std::uint32_t>(a / gcd(a, b) * b); }

}  // namespace

std::size_t capacity_bound() { return capacity_slot().load(); }

void set_capacity_bound(std::size_t bound) { capacity_slot().store(std::min(bound, kMaxTableOrder)); }

void require_capacity(std::size_t order, std::string_view operation) {
  if (order > capacity_bound())
    throw SchurError(ErrorCode::Capacity, std::string(operation) + ": group order " + std::to_string(order) +
                                              " exceeds capacity bound " + std::to_string(capacity_bound()));
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint32_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<std::uint32_t>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

// ---------------------------------------------------------------------------
// AbelianGroup

AbelianGroup::AbelianGroup() : AbelianGroup(std::vector<std::uint32_t>{}) {}

AbelianGroup::AbelianGroup(std::vector<std::uint32_t> factors) {
  if (factors.empty()) factors.push_back(1);
  auto d = std::make_shared<Data>();
  std::size_t order = 1;
  for (auto f : factors) {
    if (f == 0) throw SchurError(ErrorCode::Precondition, "cyclic factor of order 0");
    order *= f;
    if (order > kMaxTableOrder)
      throw SchurError(ErrorCode::Capacity, "group order exceeds table limit " + std::to_string(kMaxTableOrder));
  }
  d->factors = std::move(factors);
  d->order = order;
  const auto k = d->factors.size();
  d->strides.assign(k, 1);
  for (std::size_t i = k; i-- > 1;) d->strides[i - 1] = d->strides[i] * d->factors[i];
  for (auto f : d->factors) d->exponent = lcm32(d->exponent, f);

  // residues of every element, then tables
  std::vector<std::uint32_t> res(order * k);
  for (std::size_t g = 0; g < order; ++g)
    for (std::size_t i = 0; i < k; ++i) res[g * k + i] = static_cast<std::uint32_t>(g / d->strides[i] % d->factors[i]);

  d->mul.resize(order * order);
  d->inv.resize(order);
  d->elem_order.resize(order);
  for (std::size_t g = 0; g < order; ++g) {
    std::size_t inv = 0;
    std::uint32_t ord = 1;
    for (std::size_t i = 0; i < k; ++i) {
      const auto n = d->factors[i];
      const auto a = res[g * k + i];
      inv += ((n - a) % n) * d->strides[i];
      ord = lcm32(ord, n / static_cast<std::uint32_t>(gcd(a, n)));
    }
    d->inv[g] = static_cast<Elem>(inv);
    d->elem_order[g] = ord;
    for (std::size_t h = 0; h < order; ++h) {
      std::size_t prod = 0;
      for (std::size_t i = 0; i < k; ++i)
        prod += ((res[g * k + i] + res[h * k + i]) % d->factors[i]) * d->strides[i];
      d->mul[g * order + h] = static_cast<Elem>(prod);
    }
  }
  data_ = std::move(d);
}

AbelianGroup AbelianGroup::parse(std::string_view spec) {
  std::vector<std::uint32_t> factors;
  std::size_t pos = 0;
  if (spec.empty()) throw ParseError("empty group spec", 0);
  while (true) {
    if (pos >= spec.size() || spec[pos] != 'C') throw ParseError("expected 'C'", pos);
    ++pos;
    const auto start = pos;
    std::uint64_t value = 0;
    while (pos < spec.size() && spec[pos] >= '0' && spec[pos] <= '9') {
      value = value * 10 + static_cast<std::uint64_t>(spec[pos] - '0');
      if (value > kMaxTableOrder) throw ParseError("cyclic factor too large", start);
      ++pos;
    }
    if (pos == start) throw ParseError("expected decimal factor order", pos);
    if (value == 0) throw ParseError("factor order must be at least 1", start);
    factors.push_back(static_cast<std::uint32_t>(value));
    if (pos == spec.size()) break;
    if (spec[pos] != 'x') throw ParseError("expected 'x' or end of spec", pos);
    ++pos;
  }
  return AbelianGroup(std::move(factors));
}

std::string AbelianGroup::spec() const {
  std::string out;
  for (std::size_t i = 0; i < factors().size(); ++i) {
    if (i) out += 'x';
    out += 'C' + std::to_string(factors()[i]);
  }
  return out;
}

Elem AbelianGroup::encode(std::span<const std::uint32_t> residues) const {
  if (residues.size() != factors().size()) throw SchurError(ErrorCode::Usage, "residue tuple has wrong length");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < residues.size(); ++i) idx += (residues[i] % factors()[i]) * data_->strides[i];
  return static_cast<Elem>(idx);
}

std::vector<std::uint32_t> AbelianGroup::decode(Elem g) const {
  std::vector<std::uint32_t> out(factors().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::uint32_t>(g / data_->strides[i] % factors()[i]);
  return out;
}

Elem AbelianGroup::pow(Elem g, long long m) const {
  const auto ord = static_cast<long long>(order_of(g));
  long long r = m % ord;
  if (r < 0) r += ord;
  Elem acc = identity();
  for (long long i = 0; i < r; ++i) acc = mul(acc, g);
  return acc;
}

Elem AbelianGroup::generator(std::size_t i) const {
  std::vector<std::uint32_t> res(factors().size(), 0);
  res.at(i) = 1;
  return encode(res);
}

// ---------------------------------------------------------------------------
// checked element arithmetic

namespace {
void require_same_group(const GroupElement& g, const GroupElement& h) {
  if (!(g.group == h.group))
    throw SchurError(ErrorCode::Usage, "elements of different groups: " + g.group.spec() + " vs " + h.group.spec());
}
}  // namespace

GroupElement mul(const GroupElement& g, const GroupElement& h) {
  require_same_group(g, h);
  return {g.group, g.group.mul(g.index, h.index)};
}

GroupElement inv(const GroupElement& g) { return {g.group, g.group.inv(g.index)}; }

std::uint32_t elem_order(const GroupElement& g) { return g.group.order_of(g.index); }

// ---------------------------------------------------------------------------
// subgroups

Subgroup Subgroup::from_set(const AbelianGroup& group, ElementSet elements) {
  if (elements.universe() != group.order()) throw SchurError(ErrorCode::Usage, "set universe does not match group");
  if (!elements.contains(group.identity())) throw SchurError(ErrorCode::Precondition, "subgroup must contain identity");
  const auto members = elements.elements();
  for (auto x : members) {
    if (!elements.contains(group.inv(x))) throw SchurError(ErrorCode::Precondition, "set not closed under inverses");
    for (auto y : members)
      if (!elements.contains(group.mul(x, y)))
        throw SchurError(ErrorCode::Precondition, "set not closed under multiplication");
  }
  if (group.order() % members.size() != 0)
    throw SchurError(ErrorCode::InvariantViolation, "subgroup order does not divide group order");
  return Subgroup(std::move(elements));
}

Subgroup Subgroup::trivial(const AbelianGroup& group) { return Subgroup(ElementSet(group.order(), {0})); }

Subgroup Subgroup::whole(const AbelianGroup& group) { return Subgroup(ElementSet::full(group.order())); }

Subgroup generated_subgroup(const AbelianGroup& group, const ElementSet& generators) {
  ElementSet closure(group.order(), {group.identity()});
  std::vector<Elem> members{group.identity()};
  // In a finite group, closing the identity under right multiplication by the
  // generators yields the generated subgroup.
  const auto gens = generators.elements();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto s : gens) {
      const auto y = group.mul(members[i], s);
      if (!closure.contains(y)) {
        closure.insert(y);
        members.push_back(y);
      }
    }
  }
  return Subgroup::from_set(group, std::move(closure));
}

std::vector<Subgroup> all_subgroups(const AbelianGroup& group) {
  require_capacity(group.order(), "all_subgroups");
  std::vector<ElementSet> found{ElementSet(group.order(), {0})};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Elem g = 1; g < group.order(); ++g) {
      if (found[i].contains(g)) continue;
      auto gens = found[i];
      gens.insert(g);
      auto h = generated_subgroup(group, gens).elements();
      if (std::find(found.begin(), found.end(), h) == found.end()) found.push_back(std::move(h));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& s : found) out.push_back(Subgroup::from_set(group, std::move(s)));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    auto ea = a.elements().elements();
    auto eb = b.elements().elements();
    return ea < eb;
  });
  return out;
}

// ---------------------------------------------------------------------------
// morphisms

namespace {

// Table of the homomorphism determined by generator images, or empty if a
// relation n_i * image_i = 0 fails.
std::vector<Elem> morphism_table(const AbelianGroup& domain, const AbelianGroup& codomain,
                                 const std::vector<Elem>& images) {
  const auto& f = domain.factors();
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] % codomain.order_of(images[i]) != 0) return {};
  std::vector<Elem> table(domain.order());
  for (Elem g = 0; g < domain.order(); ++g) {
    const auto res = domain.decode(g);
    Elem acc = codomain.identity();
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::uint32_t a = 0; a < res[i]; ++a) acc = codomain.mul(acc, images[i]);
    table[g] = acc;
  }
  return table;
}

}  // namespace

GroupMorphism GroupMorphism::from_generator_images(const AbelianGroup& domain, const AbelianGroup& codomain,
                                                   std::vector<Elem> images) {
  if (images.size() != domain.factors().size())
    throw SchurError(ErrorCode::Usage, "need one image per cyclic factor");
  for (auto x : images)
    if (x >= codomain.order()) throw SchurError(ErrorCode::Usage, "generator image out of range");
  auto table = morphism_table(domain, codomain, images);
  if (table.empty()) throw SchurError(ErrorCode::Precondition, "generator image violates its order relation");
  return GroupMorphism(domain, codomain, std::move(images), std::move(table));
}

GroupMorphism GroupMorphism::identity(const AbelianGroup& group) {
  std::vector<Elem> images;
  for (std::size_t i = 0; i < group.factors().size(); ++i) images.push_back(group.generator(i));
  return from_generator_images(group, group, std::move(images));
}

bool GroupMorphism::is_bijective() const {
  if (domain_.order() != codomain_.order()) return false;
  std::vector<char> hit(codomain_.order(), 0);
  for (auto y : table_) {
    if (hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

bool GroupMorphism::is_homomorphism() const {
  for (Elem x = 0; x < domain_.order(); ++x)
    for (Elem y = 0; y < domain_.order(); ++y)
      if (table_[domain_.mul(x, y)] != codomain_.mul(table_[x], table_[y])) return false;
  return true;
}

GroupMorphism GroupMorphism::after(const GroupMorphism& first) const {
  if (!(first.codomain_ == domain_)) throw SchurError(ErrorCode::Usage, "morphism composition type mismatch");
  std::vector<Elem> images;
  for (auto x : first.images_) images.push_back(table_[x]);
  return from_generator_images(first.domain_, codomain_, std::move(images));
}

GroupMorphism GroupMorphism::inverse() const {
  if (!is_bijective()) throw SchurError(ErrorCode::Precondition, "morphism is not invertible");
  std::vector<Elem> inv(table_.size());
  for (Elem x = 0; x < table_.size(); ++x) inv[table_[x]] = x;
  std::vector<Elem> images;
  for (std::size_t i = 0; i < codomain_.factors().size(); ++i) images.push_back(inv[codomain_.generator(i)]);
  return from_generator_images(codomain_, domain_, std::move(images));
}

namespace {

// Generator-image search into an abstract finite abelian group of size
// `target_order` given by `op` (product), `elem_order` and identity 0. Calls
// `emit(images)` for every injective homomorphism from `domain`.
// Candidates are pruned by element order first, then by injectivity on the
// partial span of the images chosen so far.
void search_embeddings(const AbelianGroup& domain, std::size_t target_order,
                       const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& op,
                       const std::function<std::uint32_t(std::uint32_t)>& elem_order,
                       const std::function<bool(const std::vector<std::uint32_t>&)>& emit) {
  const auto& f = domain.factors();
  std::vector<std::vector<std::uint32_t>> candidates(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::uint32_t y = 0; y < target_order; ++y)
      if (elem_order(y) == f[i]) candidates[i].push_back(y);

  std::vector<std::uint32_t> images(f.size());
  std::vector<std::vector<std::uint32_t>> spans(f.size() + 1);
  spans[0] = {0};
  std::vector<char> mark(target_order, 0);
  bool stop = false;

  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (stop) return;
    if (depth == f.size()) {
      if (!emit(images)) stop = true;
      return;
    }
    for (auto y : candidates[depth]) {
      // extend the span by multiples of y; injectivity means no collisions
      auto& prev = spans[depth];
      auto& next = spans[depth + 1];
      next.clear();
      std::fill(mark.begin(), mark.end(), 0);
      bool ok = true;
      std::uint32_t step = 0;  // y^a
      for (std::uint32_t a = 0; a < f[depth] && ok; ++a) {
        for (auto s : prev) {
          auto z = op(s, step);
          if (mark[z]) {
            ok = false;
            break;
          }
          mark[z] = 1;
          next.push_back(z);
        }
        step = op(step, y);
      }
      if (!ok) continue;
      images[depth] = y;
      rec(depth + 1);
      if (stop) return;
    }
  };
  rec(0);
}

}  // namespace

std::vector<GroupMorphism> isomorphisms(const AbelianGroup& from, const AbelianGroup& to) {
  require_capacity(from.order(), "isomorphisms");
  require_capacity(to.order(), "isomorphisms");
  std::vector<GroupMorphism> out;
  if (from.order() != to.order()) return out;
  search_embeddings(
      from, to.order(), [&](std::uint32_t a, std::uint32_t b) { return to.mul(a, b); },
      [&](std::uint32_t a) { return to.order_of(a); },
      [&](const std::vector<std::uint32_t>& images) {
        out.push_back(GroupMorphism::from_generator_images(from, to, images));
        return true;
      });
  return out;
}

std::vector<GroupMorphism> automorphisms(const AbelianGroup& group) { return isomorphisms(group, group); }

bool are_isomorphic(const AbelianGroup& a, const AbelianGroup& b) {
  if (a.order() != b.order()) return false;
  bool found = false;
  search_embeddings(
      a, b.order(), [&](std::uint32_t x, std::uint32_t y) { return b.mul(x, y); },
      [&](std::uint32_t x) { return b.order_of(x); },
      [&](const std::vector<std::uint32_t>&) {
        found = true;
        return false;
      });
  return found;
}

// ---------------------------------------------------------------------------
// canonical presentations

AbelianGroup canonical_group(std::vector<std::uint32_t> factors) {
  std::erase(factors, 1U);
  if (factors.empty()) return AbelianGroup();
  auto key = [](std::uint32_t q) { return prime_divisors(q).front(); };
  for (auto q : factors)
    if (prime_divisors(q).size() != 1) throw SchurError(ErrorCode::Usage, "canonical_group needs prime-power factors");
  std::sort(factors.begin(), factors.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (key(a) != key(b)) return key(a) < key(b);
    return a > b;
  });
  return AbelianGroup(std::move(factors));
}

namespace {

// partitions of n into parts, largest part first, in decreasing lexicographic order
void partitions(std::uint32_t n, std::uint32_t max_part, std::vector<std::uint32_t>& cur,
                std::vector<std::vector<std::uint32_t>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (std::uint32_t part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(n - part, part, cur, out);
    cur.pop_back();
  }
}

std::uint32_t ipow(std::uint32_t b, std::uint32_t e) {
  std::uint32_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

std::vector<AbelianGroup> abelian_groups_of_order(std::size_t order) {
  if (order == 1) return {AbelianGroup(std::vector<std::uint32_t>{1})};
  std::vector<std::vector<std::vector<std::uint32_t>>> per_prime;  // choices of factor lists per prime
  auto n = order;
  for (auto p : prime_divisors(order)) {
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    std::vector<std::vector<std::uint32_t>> parts, cur_out;
    std::vector<std::uint32_t> cur;
    partitions(e, e, cur, parts);
    for (auto& part : parts) {
      std::vector<std::uint32_t> fs;
      for (auto k : part) fs.push_back(ipow(p, k));
      cur_out.push_back(fs);
    }
    per_prime.push_back(std::move(cur_out));
  }
  std::vector<AbelianGroup> out;
  std::vector<std::uint32_t> acc;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == per_prime.size()) {
      out.push_back(canonical_group(acc));
      return;
    }
    for (auto& choice : per_prime[i]) {
      const auto mark = acc.size();
      acc.insert(acc.end(), choice.begin(), choice.end());
      rec(i + 1);
      acc.resize(mark);
    }
  };
  rec(0);
  return out;
}

// ---------------------------------------------------------------------------
// sections

Section quotient(const AbelianGroup& group, const Subgroup& upper, const Subgroup& lower) {
  if (!lower.is_subgroup_of(upper)) throw SchurError(ErrorCode::Usage, "quotient: L is not contained in U");
  const auto n = group.order();
  // coset label = smallest element of the coset
  std::vector<std::int32_t> coset_rep(n, -1);
  std::vector<Elem> reps;
  const auto lower_elems = lower.elements().elements();
  for (Elem u = 0; u < n; ++u) {
    if (!upper.contains(u) || coset_rep[u] >= 0) continue;
    reps.push_back(u);
    for (auto l : lower_elems) coset_rep[group.mul(u, l)] = static_cast<std::int32_t>(reps.size() - 1);
  }
  const auto m = static_cast<std::uint32_t>(reps.size());
  auto cop = [&](std::uint32_t a, std::uint32_t b) {
    return static_cast<std::uint32_t>(coset_rep[group.mul(reps[a], reps[b])]);
  };
  std::vector<std::uint32_t> cord(m);
  for (std::uint32_t a = 0; a < m; ++a) {
    std::uint32_t k = 1;
    for (std::uint32_t x = a; x != 0; x = cop(x, a)) ++k;
    cord[a] = k;
  }

  // isomorphism type from the number of elements killed by p^k
  std::vector<std::uint32_t> factors;
  for (auto p : prime_divisors(m)) {
    std::vector<std::uint32_t> log_counts{0};
    for (std::uint32_t pk = p;; pk *= p) {
      std::uint32_t cnt = 0;
      for (std::uint32_t a = 0; a < m; ++a)
        if (pk % cord[a] == 0) ++cnt;
      std::uint32_t lg = 0;
      for (auto c = cnt; c > 1; c /= p) ++lg;
      if (lg == log_counts.back()) break;
      log_counts.push_back(lg);
    }
    // number of cyclic factors of order >= p^k is log_counts[k] - log_counts[k-1]
    const auto K = log_counts.size() - 1;
    for (std::size_t k = 1; k <= K; ++k) {
      const auto at_least_k = log_counts[k] - log_counts[k - 1];
      const auto at_least_k1 = k < K ? log_counts[k + 1] - log_counts[k] : 0;
      for (auto c = at_least_k1; c < at_least_k; ++c) factors.push_back(ipow(p, static_cast<std::uint32_t>(k)));
    }
  }
  auto q = canonical_group(factors);

  // an explicit isomorphism q -> coset group
  std::vector<std::uint32_t> to_coset;
  search_embeddings(
      q, m, cop, [&](std::uint32_t a) { return cord[a]; },
      [&](const std::vector<std::uint32_t>& images) {
        to_coset.assign(q.order(), 0);
        for (Elem x = 0; x < q.order(); ++x) {
          const auto res = q.decode(x);
          std::uint32_t acc = 0;
          for (std::size_t i = 0; i < res.size(); ++i)
            for (std::uint32_t a = 0; a < res[i]; ++a) acc = cop(acc, images[i]);
          to_coset[x] = acc;
        }
        return false;
      });
  if (to_coset.size() != m) throw SchurError(ErrorCode::InvariantViolation, "quotient decomposition failed");

  std::vector<std::int32_t> coset_to_q(m);
  for (Elem x = 0; x < m; ++x) coset_to_q[to_coset[x]] = static_cast<std::int32_t>(x);
  Section s{upper, lower, q, std::vector<std::int32_t>(n, -1), std::vector<Elem>(m)};
  for (Elem g = 0; g < n; ++g)
    if (coset_rep[g] >= 0) s.projection[g] = coset_to_q[static_cast<std::size_t>(coset_rep[g])];
  for (Elem x = 0; x < m; ++x) s.lift[x] = reps[to_coset[x]];
  return s;
}

}  // namespace schur
