#include "hrlb/structure.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "hrlb/error.hpp"
#include "subsets.hpp"

namespace hrlb {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

// Shortest path from `from` to `to` avoiding `blocked`, neighbours explored
// in increasing id order.
std::optional<std::vector<Vertex>> bfs_path(const Graph& g, Vertex from, Vertex to,
                                            const Bitset& blocked) {
  const Vertex n = g.num_vertices();
  std::vector<Vertex> parent(n, n);
  std::vector<bool> seen(n, false);
  std::deque<Vertex> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    if (x == to) break;
    const auto& nb = g.neighbors(x);
    for (auto y = nb.find_first(); y != Bitset::npos; y = nb.find_next(y)) {
      if (seen[y] || blocked.test(y)) continue;
      seen[y] = true;
      parent[y] = x;
      queue.push_back(static_cast<Vertex>(y));
    }
  }
  if (!seen[to]) return std::nullopt;
  std::vector<Vertex> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

// Hole through b whose neighbours on the hole are a and c (a, c non-adjacent).
std::optional<std::vector<Vertex>> hole_through(const Graph& g, Vertex b, Vertex a, Vertex c) {
  Bitset blocked = g.neighbors(b);
  blocked.set(b);
  blocked.reset(a);
  blocked.reset(c);
  auto path = bfs_path(g, a, c, blocked);
  if (!path) return std::nullopt;
  std::vector<Vertex> cycle{b};
  cycle.insert(cycle.end(), path->begin(), path->end());
  return cycle;
}

// Length of a shortest hole, scanning every vertex and pair of its
// non-adjacent neighbours. Every hole arises this way, and any path found
// this way closes a hole, so the minimum is exact.
std::size_t shortest_hole_length(const Graph& g) {
  std::size_t best = kUnreached;
  for (Vertex b = 0; b < g.num_vertices(); ++b) {
    const auto& nb = g.neighbors(b);
    for (auto a = nb.find_first(); a != Bitset::npos; a = nb.find_next(a))
      for (auto c = nb.find_next(a); c != Bitset::npos; c = nb.find_next(c)) {
        if (g.adjacent(static_cast<Vertex>(a), static_cast<Vertex>(c))) continue;
        auto h = hole_through(g, b, static_cast<Vertex>(a), static_cast<Vertex>(c));
        if (h) best = std::min(best, h->size());
      }
  }
  return best;
}

std::size_t girth(const Graph& g) {
  std::size_t best = kUnreached;
  const Vertex n = g.num_vertices();
  for (Vertex root = 0; root < n; ++root) {
    std::vector<std::size_t> dist(n, kUnreached);
    std::vector<Vertex> parent(n, n);
    std::deque<Vertex> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      const auto& nb = g.neighbors(x);
      for (auto y = nb.find_first(); y != Bitset::npos; y = nb.find_next(y)) {
        if (dist[y] == kUnreached) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(static_cast<Vertex>(y));
        } else if (parent[x] != y) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  return best;
}

// Lexicographically first cycle of exactly `length` vertices written from its
// minimum vertex toward the smaller of its two neighbours.
std::optional<std::vector<Vertex>> first_cycle_of_length(const Graph& g, std::size_t length,
                                                         bool induced) {
  const Vertex n = g.num_vertices();
  std::vector<Vertex> path;
  std::vector<bool> on_path(n, false);

  auto admissible = [&](Vertex x) {
    const std::size_t j = path.size();
    const bool closing = j + 1 == length;
    if (closing && (!g.adjacent(x, path[0]) || !(path[1] < x))) return false;
    if (!induced) return true;
    // x may touch only its predecessor (and path[0] when closing).
    const std::size_t from = closing ? 1 : 0;
    for (std::size_t i = from; i + 1 < j; ++i)
      if (g.adjacent(x, path[i])) return false;
    return true;
  };

  auto dfs = [&](auto& self) -> bool {
    if (path.size() == length) return true;
    const auto& nb = g.neighbors(path.back());
    for (auto y = nb.find_next(path[0]); y != Bitset::npos; y = nb.find_next(y)) {
      auto x = static_cast<Vertex>(y);
      if (on_path[x] || !admissible(x)) continue;
      path.push_back(x);
      on_path[x] = true;
      if (self(self)) return true;
      on_path[x] = false;
      path.pop_back();
    }
    return false;
  };

  for (Vertex a = 0; a < n; ++a) {
    path.assign(1, a);
    on_path.assign(n, false);
    on_path[a] = true;
    if (dfs(dfs)) return path;
  }
  return std::nullopt;
}

bool subset_in_edge(const KGraph& f, std::span<const Vertex> sorted_subset) {
  for (auto e : f.edge_range())
    if (std::includes(e.begin(), e.end(), sorted_subset.begin(), sorted_subset.end())) return true;
  return false;
}

std::size_t intersection_size(std::span<const Vertex> sorted_a, const std::vector<Vertex>& sorted_b) {
  std::size_t count = 0;
  auto i = sorted_a.begin();
  auto j = sorted_b.begin();
  while (i != sorted_a.end() && j != sorted_b.end()) {
    if (*i < *j)
      ++i;
    else if (*j < *i)
      ++j;
    else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace

std::vector<Vertex> lex_bfs(const Graph& g) {
  const Vertex n = g.num_vertices();
  std::vector<std::vector<Vertex>> slices;
  if (n > 0) {
    slices.emplace_back(n);
    for (Vertex v = 0; v < n; ++v) slices[0][v] = v;
  }
  std::vector<Vertex> order;
  order.reserve(n);
  while (!slices.empty()) {
    Vertex v = slices.front().front();
    slices.front().erase(slices.front().begin());
    if (slices.front().empty()) slices.erase(slices.begin());
    order.push_back(v);
    std::vector<std::vector<Vertex>> refined;
    refined.reserve(slices.size() * 2);
    for (auto& slice : slices) {
      std::vector<Vertex> in, out;
      for (Vertex x : slice) (g.adjacent(v, x) ? in : out).push_back(x);
      if (!in.empty()) refined.push_back(std::move(in));
      if (!out.empty()) refined.push_back(std::move(out));
    }
    slices = std::move(refined);
  }
  return order;
}

bool is_perfect_elimination_order(const Graph& g, std::span<const Vertex> order) {
  const Vertex n = g.num_vertices();
  if (order.size() != n) return false;
  std::vector<std::size_t> pos(n, kUnreached);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || pos[order[i]] != kUnreached) return false;
    pos[order[i]] = i;
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vertex> later;
    const auto& nb = g.neighbors(order[i]);
    for (auto y = nb.find_first(); y != Bitset::npos; y = nb.find_next(y))
      if (pos[y] > i) later.push_back(static_cast<Vertex>(y));
    if (!g.is_clique(later)) return false;
  }
  return true;
}

bool is_cycle(const Graph& g, std::span<const Vertex> cycle) {
  const std::size_t len = cycle.size();
  if (len < 3) return false;
  std::vector<Vertex> sorted(cycle.begin(), cycle.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (sorted.back() >= g.num_vertices()) return false;
  for (std::size_t i = 0; i < len; ++i)
    if (!g.adjacent(cycle[i], cycle[(i + 1) % len])) return false;
  return true;
}

bool is_chordless_cycle(const Graph& g, std::span<const Vertex> cycle) {
  const std::size_t len = cycle.size();
  if (len < 4 || !is_cycle(g, cycle)) return false;
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 2; j < len; ++j) {
      if (i == 0 && j == len - 1) continue;
      if (g.adjacent(cycle[i], cycle[j])) return false;
    }
  return true;
}

ChordalityResult chordality(const Graph& g) {
  auto visit = lex_bfs(g);
  std::vector<Vertex> peo(visit.rbegin(), visit.rend());
  const Vertex n = g.num_vertices();
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[peo[i]] = i;

  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = peo[i];
    std::vector<Vertex> later;
    const auto& nb = g.neighbors(v);
    for (auto y = nb.find_first(); y != Bitset::npos; y = nb.find_next(y))
      if (pos[y] > i) later.push_back(static_cast<Vertex>(y));
    if (later.empty()) continue;
    auto parent = *std::min_element(later.begin(), later.end(),
                                    [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
    for (Vertex w : later) {
      if (w == parent || g.adjacent(parent, w)) continue;
      // parent - v - w is an induced path; close it around v.
      auto hole = hole_through(g, v, parent, w);
      if (!hole) {
        // Fall back to the exhaustive scan (never observed on LexBFS orders).
        hole = shortest_chordless_cycle(g);
      }
      check(hole && is_chordless_cycle(g, *hole), "chordality: failed to certify a chordless cycle");
      return ChordlessCycle{std::move(*hole)};
    }
  }
  check(is_perfect_elimination_order(g, peo), "chordality: LexBFS order is not a PEO");
  return PerfectEliminationOrder{std::move(peo)};
}

std::vector<Vertex> max_clique_chordal(const Graph& g, std::span<const Vertex> peo) {
  if (!is_perfect_elimination_order(g, peo))
    throw ParameterError("max_clique_chordal: not a perfect elimination ordering");
  const Vertex n = g.num_vertices();
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[peo[i]] = i;
  std::vector<Vertex> best;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vertex> clique{peo[i]};
    const auto& nb = g.neighbors(peo[i]);
    for (auto y = nb.find_first(); y != Bitset::npos; y = nb.find_next(y))
      if (pos[y] > i) clique.push_back(static_cast<Vertex>(y));
    if (clique.size() > best.size()) best = std::move(clique);
  }
  std::sort(best.begin(), best.end());
  return best;
}

std::optional<std::vector<Vertex>> shortest_chordless_cycle(const Graph& g) {
  const std::size_t len = shortest_hole_length(g);
  if (len == kUnreached) return std::nullopt;
  auto cycle = first_cycle_of_length(g, len, true);
  check(cycle && is_chordless_cycle(g, *cycle), "shortest_chordless_cycle: enumeration disagrees with scan");
  return cycle;
}

std::optional<std::vector<Vertex>> shortest_cycle(const Graph& g) {
  const std::size_t len = girth(g);
  if (len == kUnreached) return std::nullopt;
  auto cycle = first_cycle_of_length(g, len, false);
  check(cycle && is_cycle(g, *cycle), "shortest_cycle: enumeration disagrees with girth");
  return cycle;
}

const std::vector<Vertex>& witness_vertices(const Witness& w) {
  return std::visit([](const auto& x) -> const std::vector<Vertex>& { return x.vertices; }, w);
}

std::optional<std::string> witness_violation(const KGraph& f, const Witness& w) {
  const auto& vs = witness_vertices(w);
  if (!std::is_sorted(vs.begin(), vs.end()) || std::adjacent_find(vs.begin(), vs.end()) != vs.end())
    return "witness vertex set must be sorted and duplicate-free";
  if (!vs.empty() && vs.back() >= f.num_vertices()) return "witness vertex out of range";

  if (const auto* cw = std::get_if<CycleWitness>(&w)) {
    Graph s = shadow_graph(f);
    if (!is_cycle(s, cw->cycle)) return "cycle is not a cycle of the 2-shadow";
    for (Vertex x : cw->cycle)
      if (!std::binary_search(vs.begin(), vs.end(), x)) return "cycle leaves I";
    for (auto e : f.edge_range())
      if (intersection_size(e, vs) > 2) return "an edge meets I in more than two vertices";
    return std::nullopt;
  }

  const auto& kw = std::get<CliqueWitness>(w);
  if (kw.s != vs.size()) return "s differs from |I|";
  if (kw.s < 3 || kw.s > f.k() + 1) return "s outside [3, k+1]";
  for (auto e : f.edge_range())
    if (intersection_size(e, vs) > kw.s - 1) return "an edge contains I";
  // (∂_{s-1}F)[I] is complete: every (s-1)-subset of I lies in an edge.
  std::optional<std::string> bad;
  detail::for_each_subset(vs.size(), kw.s - 1, [&](std::span<const std::size_t> pos) {
    std::vector<Vertex> sub;
    for (auto p : pos) sub.push_back(vs[p]);
    if (!subset_in_edge(f, sub)) {
      bad = "an (s-1)-subset of I is not covered by an edge";
      return false;
    }
    return true;
  });
  return bad;
}

Witness find_witness(const KGraph& f, const SearchLimits& limits) {
  if (f.has_isolated_vertices()) throw PreconditionError("find_witness: input has isolated vertices");
  if (is_k_partite(f)) throw PreconditionError("find_witness: input is k-partite");
  if (!is_core(f, limits)) throw PreconditionError("find_witness: input is not a core; reduce with core()");

  const Graph g = shadow_graph(f);
  Witness w;
  if (auto hole = shortest_chordless_cycle(g)) {
    CycleWitness cw{*hole, *hole};
    std::sort(cw.vertices.begin(), cw.vertices.end());
    w = std::move(cw);
  } else {
    auto chordal = chordality(g);
    const auto* peo = std::get_if<PerfectEliminationOrder>(&chordal);
    check(peo != nullptr, "find_witness: hole-free shadow is not chordal");
    auto clique = max_clique_chordal(g, peo->order);
    // Chordal graphs are perfect, so a non-k-colourable shadow has a (k+1)-clique.
    check(clique.size() >= f.k() + 1, "find_witness: chordal shadow has no (k+1)-clique");
    clique.resize(f.k() + 1);

    std::optional<std::vector<Vertex>> chosen;
    for (std::size_t size = 3; size <= clique.size() && !chosen; ++size) {
      detail::for_each_subset(clique.size(), size, [&](std::span<const std::size_t> pos) {
        std::vector<Vertex> sub;
        for (auto p : pos) sub.push_back(clique[p]);
        if (subset_in_edge(f, sub)) return true;
        chosen = std::move(sub);
        return false;
      });
    }
    check(chosen.has_value(), "find_witness: every subset of the clique is covered by an edge");
    w = CliqueWitness{*chosen, static_cast<unsigned>(chosen->size())};
  }
  if (auto why = witness_violation(f, w)) throw VerificationError("find_witness: " + *why);
  return w;
}

AnalysisReport analyze(const KGraph& f, const SearchLimits& limits) {
  AnalysisReport r;
  auto norm = normalize(f);
  r.input = std::move(norm.graph);
  r.original_ids = std::move(norm.original);
  r.removed_isolated = std::move(norm.removed);
  r.partition = is_k_partite(r.input);
  r.core = core(r.input, limits);
  r.is_core_already = r.core.core.num_edges() == r.input.num_edges();
  const bool single_edge_core = r.core.core.num_edges() == 1;
  check(single_edge_core == r.partition.has_value(),
        "analyze: k-partiteness disagrees with the core being a single edge");
  if (!r.partition) r.witness = find_witness(r.core.core, limits);
  return r;
}

}  // namespace hrlb
