#include "schur/wl.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <numeric>
#include <unordered_set>

#include "schur/errors.hpp"

namespace schur {

std::size_t ArcColoring::color_count() const {
  std::vector<std::uint32_t> c = colors;
  std::sort(c.begin(), c.end());
  return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
}

ArcColoring cayley_graph(const AbelianGroup& group, const ElementSet& connection) {
  if (connection.contains(group.identity()))
    throw SchurError(ErrorCode::Precondition, "cayley_graph: the connection set contains the identity");
  const auto n = group.order();
  ArcColoring c(n);
  for (Elem g = 0; g < n; ++g)
    for (Elem h = 0; h < n; ++h)
      c.at(g, h) = g == h ? 2 : connection.contains(group.mul(h, group.inv(g))) ? 1 : 0;
  return c;
}

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Relabels `colors` by rank of (diagonal flag, colour); returns the count.
std::size_t initial_ranks(std::size_t n, const std::vector<std::uint32_t>& in, std::vector<std::uint32_t>& out) {
  std::vector<std::uint64_t> key(in.size());
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) key[u * n + v] = (std::uint64_t(u == v) << 32) | in[u * n + v];
  auto sorted = key;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  out.resize(in.size());
  for (std::size_t i = 0; i < key.size(); ++i)
    out[i] = static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), key[i]) - sorted.begin());
  return sorted.size();
}

}  // namespace

StableColoring wl2_refine(const ArcColoring& coloring) {
  const auto n = coloring.n;
  StableColoring out;
  std::vector<std::uint32_t> cur;
  auto count = initial_ranks(n, coloring.colors, cur);
  const auto width = n + 1;
  std::vector<std::uint64_t> sig(n * n * width);
  std::vector<std::uint32_t> idx(n * n), next(n * n);
  while (true) {
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) {
        auto* s = sig.data() + (u * n + v) * width;
        s[0] = cur[u * n + v];
        for (std::size_t w = 0; w < n; ++w) s[1 + w] = (std::uint64_t(cur[u * n + w]) << 32) | cur[w * n + v];
        std::sort(s + 1, s + width);
      }
    std::iota(idx.begin(), idx.end(), 0U);
    auto row = [&](std::uint32_t i) { return sig.data() + std::size_t(i) * width; };
    std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
      return std::lexicographical_compare(row(a), row(a) + width, row(b), row(b) + width);
    });
    std::uint32_t id = 0;
    for (std::size_t t = 0; t < idx.size(); ++t) {
      if (t > 0 && !std::equal(row(idx[t]), row(idx[t]) + width, row(idx[t - 1]))) ++id;
      next[idx[t]] = id;
    }
    const std::size_t new_count = idx.empty() ? 0 : id + 1;
    cur.swap(next);
    if (new_count == count) break;
    count = new_count;
    ++out.rounds;
  }
  out.coloring.n = n;
  out.coloring.colors = cur;
  std::map<std::uint32_t, std::size_t> hist;
  for (auto c : cur) ++hist[c];
  out.histogram.assign(hist.begin(), hist.end());
  return out;
}

bool wl2_distinguishes(const ArcColoring& a, const ArcColoring& b) {
  if (a.n != b.n) return true;
  const auto n = a.n;
  const auto m = 2 * n;
  std::uint32_t cross = 0;
  for (auto c : a.colors) cross = std::max(cross, c + 1);
  for (auto c : b.colors) cross = std::max(cross, c + 1);
  ArcColoring joint(m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      if (u < n && v < n) joint.at(u, v) = a.at(u, v);
      else if (u >= n && v >= n) joint.at(u, v) = b.at(u - n, v - n);
      else joint.at(u, v) = cross;
    }
  const auto stable = wl2_refine(joint);
  std::map<std::uint32_t, std::size_t> ha, hb;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      ++ha[stable.coloring.at(u, v)];
      ++hb[stable.coloring.at(u + n, v + n)];
    }
  return ha != hb;
}

WlFingerprint wl2_fingerprint(const ArcColoring& coloring) {
  const auto n = coloring.n;
  std::vector<std::uint64_t> cur(n * n), next(n * n), buf(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) cur[u * n + v] = mix((std::uint64_t(u == v) << 32) | coloring.at(u, v));
  auto distinct = [](std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
  };
  WlFingerprint fp;
  auto count = distinct(cur);
  while (true) {
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t w = 0; w < n; ++w) buf[w] = mix(cur[u * n + w] * 0x100000001b3ULL ^ mix(cur[w * n + v]));
        std::sort(buf.begin(), buf.end());
        std::uint64_t h = mix(cur[u * n + v]);
        for (auto x : buf) h = mix(h ^ x);
        next[u * n + v] = h;
      }
    const auto new_count = distinct(next);
    cur.swap(next);
    if (new_count == count) break;
    count = new_count;
    ++fp.rounds;
  }
  std::map<std::uint64_t, std::size_t> hist;
  for (auto c : cur) ++hist[c];
  fp.histogram.assign(hist.begin(), hist.end());
  return fp;
}

namespace {

class GraphIsoSearch {
 public:
  GraphIsoSearch(const ArcColoring& a, const ArcColoring& b) : a_(a), b_(b), n_(a.n), words_((a.n + 63) / 64) {}

  bool run() {
    // vertices can only map to vertices with the same in/out colour profile
    auto profile = [](const ArcColoring& c, std::size_t u) {
      std::vector<std::uint64_t> p;
      for (std::size_t v = 0; v < c.n; ++v) p.push_back((std::uint64_t(c.at(u, v)) << 32) | c.at(v, u));
      std::sort(p.begin(), p.end());
      return p;
    };
    std::vector<std::vector<std::uint64_t>> pa(n_), pb(n_);
    for (std::size_t u = 0; u < n_; ++u) {
      pa[u] = profile(a_, u);
      pb[u] = profile(b_, u);
    }
    std::vector<std::uint64_t> dom(n_ * words_, 0);
    for (std::size_t u = 0; u < n_; ++u) {
      bool any = false;
      for (std::size_t x = 0; x < n_; ++x)
        if (pa[u] == pb[x]) {
          dom[u * words_ + x / 64] |= std::uint64_t{1} << (x % 64);
          any = true;
        }
      if (!any) return false;
    }
    std::vector<std::int64_t> f(n_, -1);
    return rec(dom, f, 0);
  }

 private:
  bool rec(const std::vector<std::uint64_t>& dom, std::vector<std::int64_t>& f, std::size_t assigned) {
    if (assigned == n_) return true;
    std::size_t pick = n_, best = n_ + 1;
    for (std::size_t u = 0; u < n_; ++u) {
      if (f[u] >= 0) continue;
      std::size_t c = 0;
      for (std::size_t w = 0; w < words_; ++w) c += std::popcount(dom[u * words_ + w]);
      if (c < best) {
        best = c;
        pick = u;
      }
    }
    if (best == 0) return false;
    for (std::size_t x = 0; x < n_; ++x) {
      if (!((dom[pick * words_ + x / 64] >> (x % 64)) & 1U)) continue;
      auto next = dom;
      f[pick] = static_cast<std::int64_t>(x);
      bool ok = true;
      for (std::size_t w = 0; w < n_ && ok; ++w) {
        if (f[w] >= 0) continue;
        auto* dw = next.data() + w * words_;
        bool any = false;
        for (std::size_t y = 0; y < n_; ++y) {
          if (!((dw[y / 64] >> (y % 64)) & 1U)) continue;
          if (y == x || b_.at(x, y) != a_.at(pick, w) || b_.at(y, x) != a_.at(w, pick))
            dw[y / 64] &= ~(std::uint64_t{1} << (y % 64));
          else
            any = true;
        }
        ok = any;
      }
      if (ok && rec(next, f, assigned + 1)) return true;
      f[pick] = -1;
    }
    return false;
  }

  const ArcColoring& a_;
  const ArcColoring& b_;
  std::size_t n_;
  std::size_t words_;
};

}  // namespace

bool colorings_isomorphic(const ArcColoring& a, const ArcColoring& b) {
  if (a.n != b.n) return false;
  auto ca = a.colors, cb = b.colors;
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  if (ca != cb) return false;
  return GraphIsoSearch(a, b).run();
}

std::vector<std::uint32_t> wl_partition_of_group(const AbelianGroup& group, const StableColoring& stable) {
  const auto n = group.order();
  if (stable.coloring.n != n) throw SchurError(ErrorCode::Usage, "wl_partition_of_group: size mismatch");
  std::vector<std::uint32_t> labels(n);
  for (Elem x = 0; x < n; ++x) labels[x] = stable.coloring.at(group.identity(), x);
  std::map<std::uint32_t, std::uint32_t> remap;
  for (auto& l : labels) l = remap.emplace(l, static_cast<std::uint32_t>(remap.size())).first->second;
  return labels;
}

std::vector<ElementSet> connection_sets(const AbelianGroup& group, bool directed) {
  const auto n = group.order();
  std::vector<ElementSet> blocks;
  std::vector<char> seen(n, 0);
  for (Elem g = 1; g < n; ++g) {
    if (seen[g]) continue;
    ElementSet b(n);
    b.insert(g);
    seen[g] = 1;
    if (!directed) {
      b.insert(group.inv(g));
      seen[group.inv(g)] = 1;
    }
    blocks.push_back(b);
  }
  if (blocks.size() > 24)
    throw SchurError(ErrorCode::Capacity, "connection_sets: 2^" + std::to_string(blocks.size()) + " sets over " +
                                              group.spec() + " is too many");
  std::vector<ElementSet> out;
  const std::uint64_t total = std::uint64_t{1} << blocks.size();
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    ElementSet x(n);
    for (std::size_t i = 0; i < blocks.size(); ++i)
      if ((mask >> i) & 1U) x |= blocks[i];
    out.push_back(std::move(x));
  }
  return out;
}

WlExperimentReport wl_dimension_experiment(std::size_t order, bool directed, const Exec& exec) {
  const auto start = std::chrono::steady_clock::now();
  require_capacity(order, "wl_dimension_experiment");
  WlExperimentReport report;
  report.order = order;
  report.directed = directed;

  struct Graph {
    std::size_t group;
    ElementSet connection;
  };
  const auto groups = abelian_groups_of_order(order);
  std::vector<Graph> graphs;
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    report.groups.push_back(groups[gi].spec());
    auto sets = connection_sets(groups[gi], directed);
    report.graphs_per_group.push_back(sets.size());
    for (auto& x : sets) graphs.push_back({gi, std::move(x)});
  }
  report.graph_count = graphs.size();
  report.pair_count = graphs.size() * (graphs.size() - 1) / 2;

  std::vector<WlFingerprint> fps(graphs.size());
  parallel_for(exec, graphs.size(), [&](std::size_t i) {
    fps[i] = wl2_fingerprint(cayley_graph(groups[graphs[i].group], graphs[i].connection));
  });

  std::map<WlFingerprint, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < graphs.size(); ++i) buckets[fps[i]].push_back(i);
  report.fingerprint_classes = buckets.size();
  std::vector<const std::vector<std::size_t>*> shared;
  for (auto& [fp, members] : buckets)
    if (members.size() > 1) shared.push_back(&members);

  auto ref = [&](std::size_t i) {
    return WlGraphRef{groups[graphs[i].group].spec(), graphs[i].connection.elements()};
  };
  // within a bucket: split into isomorphism classes; any two classes that the
  // literal disjoint-union refinement cannot tell apart are a failure
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> failures(shared.size());
  std::vector<std::size_t> calls(shared.size(), 0);
  parallel_for(exec, shared.size(), [&](std::size_t b) {
    std::vector<std::pair<std::size_t, ArcColoring>> reps;
    for (auto i : *shared[b]) {
      auto g = cayley_graph(groups[graphs[i].group], graphs[i].connection);
      bool matched = false;
      for (auto& [r, rc] : reps) {
        ++calls[b];
        if (colorings_isomorphic(g, rc)) {
          matched = true;
          break;
        }
      }
      if (matched) continue;
      for (auto& [r, rc] : reps)
        if (!wl2_distinguishes(g, rc)) failures[b].emplace_back(r, i);
      reps.emplace_back(i, std::move(g));
    }
  });
  for (std::size_t b = 0; b < shared.size(); ++b) {
    report.oracle_calls += calls[b];
    for (auto [x, y] : failures[b]) report.indistinguishable_nonisomorphic.emplace_back(ref(x), ref(y));
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace schur
