// Brute-force reference implementations used only by tests. They are
// deliberately naive: exhaustive over all maps or subsets, no pruning.
#ifndef HRLB_TESTS_ORACLES_HPP
#define HRLB_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <vector>

#include "hrlb/kgraph.hpp"

namespace hrlb::oracle {

// Calls fn(map) for every map [0,from_n) -> [0,to_n); fn returns false to stop.
inline void for_each_map(Vertex from_n, Vertex to_n, const std::function<bool(const std::vector<Vertex>&)>& fn) {
  std::vector<Vertex> m(from_n, 0);
  if (to_n == 0 && from_n > 0) return;
  while (true) {
    if (!fn(m)) return;
    Vertex i = 0;
    while (i < from_n && ++m[i] == to_n) m[i++] = 0;
    if (i == from_n) return;
  }
}

inline bool maps_edges(const KGraph& from, const KGraph& to, const std::vector<Vertex>& m) {
  for (auto e : from.edge_range()) {
    Edge img;
    for (Vertex x : e) img.push_back(m[x]);
    if (!to.has_edge_unsorted(img)) return false;
  }
  return true;
}

inline bool has_homomorphism(const KGraph& from, const KGraph& to) {
  bool found = false;
  for_each_map(from.num_vertices(), to.num_vertices(), [&](const std::vector<Vertex>& m) {
    found = maps_edges(from, to, m);
    return !found;
  });
  return found;
}

inline KGraph image_graph(const KGraph& f, const std::vector<Vertex>& m) {
  std::set<Edge> es;
  for (auto e : f.edge_range()) {
    Edge img;
    for (Vertex x : e) img.push_back(m[x]);
    std::sort(img.begin(), img.end());
    es.insert(img);
  }
  // Compact the used vertices.
  std::vector<Vertex> used;
  for (const auto& e : es) used.insert(used.end(), e.begin(), e.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<Edge> out;
  for (auto e : es) {
    for (auto& x : e) x = static_cast<Vertex>(std::lower_bound(used.begin(), used.end(), x) - used.begin());
    out.push_back(e);
  }
  return KGraph(f.k(), static_cast<Vertex>(used.size()), out);
}

// Image with fewest edges over all endomorphisms. Any homomorphism into a
// subgraph composes to an endomorphism with no more edges, so this is the core.
inline KGraph core_by_endomorphisms(const KGraph& f) {
  std::optional<std::vector<Vertex>> best;
  std::size_t best_edges = SIZE_MAX;
  for_each_map(f.num_vertices(), f.num_vertices(), [&](const std::vector<Vertex>& m) {
    if (!maps_edges(f, f, m)) return true;
    auto img = image_graph(f, m);
    if (img.num_edges() < best_edges) {
      best_edges = img.num_edges();
      best = m;
    }
    return true;
  });
  return image_graph(f, *best);
}

// Every endomorphism is a bijection.
inline bool is_core_naive(const KGraph& f) {
  bool ok = true;
  for_each_map(f.num_vertices(), f.num_vertices(), [&](const std::vector<Vertex>& m) {
    if (!maps_edges(f, f, m)) return true;
    std::vector<Vertex> s = m;
    std::sort(s.begin(), s.end());
    ok = std::unique(s.begin(), s.end()) == s.end();
    return ok;
  });
  return ok;
}

inline bool isomorphic_naive(const KGraph& a, const KGraph& b) {
  if (a.k() != b.k() || a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  std::vector<Vertex> p(a.num_vertices());
  std::iota(p.begin(), p.end(), Vertex{0});
  do {
    if (maps_edges(a, b, p)) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Every colouring with k colours; edges must be rainbow.
inline bool is_k_partite_naive(const KGraph& f) {
  bool found = false;
  for_each_map(f.num_vertices(), f.k(), [&](const std::vector<Vertex>& c) {
    bool ok = true;
    for (auto e : f.edge_range()) {
      std::vector<bool> seen(f.k(), false);
      for (Vertex x : e) {
        if (seen[c[x]]) ok = false;
        seen[c[x]] = true;
      }
      if (!ok) break;
    }
    found = ok;
    return !found;
  });
  return found;
}

// For every v(F)-subset of host vertices, the distinct edge sets sigma(E(F))
// over all bijections sigma that land inside E(host).
inline std::uint64_t count_copies_naive(const KGraph& host, const KGraph& f) {
  const Vertex n = host.num_vertices(), v = f.num_vertices();
  if (v > n) return 0;
  std::uint64_t total = 0;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + v, true);
  do {
    std::vector<Vertex> sub;
    for (Vertex i = 0; i < n; ++i)
      if (pick[i]) sub.push_back(i);
    std::set<std::vector<Edge>> seen;
    std::vector<Vertex> p(v);
    std::iota(p.begin(), p.end(), Vertex{0});
    do {
      std::vector<Vertex> m(v);
      for (Vertex i = 0; i < v; ++i) m[i] = sub[p[i]];
      if (!maps_edges(f, host, m)) continue;
      std::vector<Edge> es;
      for (auto e : f.edge_range()) {
        Edge img;
        for (Vertex x : e) img.push_back(m[x]);
        std::sort(img.begin(), img.end());
        es.push_back(img);
      }
      std::sort(es.begin(), es.end());
      seen.insert(es);
    } while (std::next_permutation(p.begin(), p.end()));
    total += seen.size();
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return total;
}

// Tuples (y_1..y_t) over B with y_1 + .. + y_{t-1} = (t-1) y_t, not all equal.
inline std::optional<std::vector<std::int64_t>> find_solution_naive(std::span<const std::int64_t> b, unsigned t) {
  if (b.empty()) return std::nullopt;
  std::vector<std::size_t> idx(t, 0);
  while (true) {
    std::int64_t lhs = 0;
    for (unsigned i = 0; i + 1 < t; ++i) lhs += b[idx[i]];
    bool all_equal = std::all_of(idx.begin(), idx.end(), [&](std::size_t x) { return b[x] == b[idx[0]]; });
    if (!all_equal && lhs == static_cast<std::int64_t>(t - 1) * b[idx[t - 1]]) {
      std::vector<std::int64_t> out;
      for (auto i : idx) out.push_back(b[i]);
      return out;
    }
    unsigned i = 0;
    while (i < t && ++idx[i] == b.size()) idx[i++] = 0;
    if (i == t) return std::nullopt;
  }
}

// Largest solution-free subset of [1, m] by trying every subset.
inline std::size_t max_solution_free_naive(std::int64_t m, unsigned t) {
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= best) continue;
    std::vector<std::int64_t> b;
    for (std::int64_t x = 1; x <= m; ++x)
      if (mask >> (x - 1) & 1) b.push_back(x);
    if (!find_solution_naive(b, t)) best = size;
  }
  return best;
}

// Length of the shortest induced cycle of length >= 4, via all vertex subsets.
inline std::optional<std::size_t> shortest_hole_naive(const Graph& g) {
  const Vertex n = g.num_vertices();
  std::optional<std::size_t> best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<Vertex> vs;
    for (Vertex i = 0; i < n; ++i)
      if (mask >> i & 1) vs.push_back(i);
    if (vs.size() < 4 || (best && vs.size() >= *best)) continue;
    // Induced cycle: 2-regular and connected.
    bool two_regular = true;
    for (Vertex x : vs) {
      std::size_t d = 0;
      for (Vertex y : vs) d += g.adjacent(x, y);
      if (d != 2) two_regular = false;
    }
    if (!two_regular) continue;
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{vs[0]};
    seen[vs[0]] = true;
    std::size_t reached = 0;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      ++reached;
      for (Vertex y : vs)
        if (!seen[y] && g.adjacent(x, y)) seen[y] = true, stack.push_back(y);
    }
    if (reached == vs.size()) best = vs.size();
  }
  return best;
}

// Every k-graph on v vertices given by the bits of `mask` over the
// lexicographic list of k-subsets.
inline std::vector<Edge> all_k_subsets(unsigned k, Vertex v) {
  std::vector<Edge> out;
  std::vector<Vertex> cur;
  std::function<void(Vertex)> rec = [&](Vertex from) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (Vertex x = from; x < v; ++x) {
      cur.push_back(x);
      rec(x + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

inline KGraph graph_from_mask(unsigned k, Vertex v, const std::vector<Edge>& all, std::uint64_t mask) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (mask >> i & 1) es.push_back(all[i]);
  return KGraph(k, v, es);
}

inline KGraph random_kgraph(unsigned k, Vertex v, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (const auto& e : all_k_subsets(k, v))
    if (coin(rng)) es.push_back(e);
  return KGraph(k, v, es);
}

// Fixed corpus: every nonempty graph and 3-graph on 3..5 vertices without
// isolated vertices, plus `random_six` seeded random ones on 6 vertices each.
inline std::vector<KGraph> small_corpus(std::size_t random_six, std::uint64_t seed = 2024) {
  std::vector<KGraph> out;
  for (unsigned k : {2u, 3u})
    for (Vertex v = k; v <= 5; ++v) {
      auto all = all_k_subsets(k, v);
      for (std::uint64_t mask = 1; mask < (1ULL << all.size()); ++mask) {
        auto g = graph_from_mask(k, v, all, mask);
        if (!g.has_isolated_vertices()) out.push_back(std::move(g));
      }
    }
  std::mt19937_64 rng(seed);
  for (unsigned k : {2u, 3u}) {
    std::size_t made = 0;
    while (made < random_six) {
      auto g = random_kgraph(k, 6, k == 2 ? 0.5 : 0.3, rng);
      if (g.num_edges() == 0 || g.has_isolated_vertices()) continue;
      out.push_back(std::move(g));
      ++made;
    }
  }
  return out;
}

}  // namespace hrlb::oracle

#endif  // HRLB_TESTS_ORACLES_HPP
