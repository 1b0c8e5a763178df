#include "matcher.hpp"

#include <algorithm>

#include "hrlb/error.hpp"

namespace hrlb::detail {

Matcher::Matcher(const KGraph& pattern, const KGraph& host)
    : pattern_(pattern), host_(host), host_shadow_(shadow_graph(host)) {
  if (pattern.k() != host.k()) throw ParameterError("pattern and host uniformity differ");
  host_edge_degree_ = host.degrees();
  pattern_edge_degree_ = pattern.degrees();

  const Vertex n = pattern.num_vertices();
  Graph ps = shadow_graph(pattern);
  pattern_shadow_degree_.resize(n);
  for (Vertex v = 0; v < n; ++v) pattern_shadow_degree_[v] = ps.degree(v);

  std::vector<bool> placed(n, false);
  std::vector<std::size_t> placed_nb(n, 0);
  for (Vertex step = 0; step < n; ++step) {
    Vertex best = n;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best == n || placed_nb[v] > placed_nb[best] ||
          (placed_nb[v] == placed_nb[best] &&
           pattern_shadow_degree_[v] > pattern_shadow_degree_[best]))
        best = v;
    }
    placed[best] = true;
    order_.push_back(best);
    const auto& nb = ps.neighbors(best);
    for (auto u = nb.find_first(); u != Bitset::npos; u = nb.find_next(u)) ++placed_nb[u];
  }

  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order_[i]] = i;
  steps_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    steps_[i].vertex = order_[i];
    const auto& nb = ps.neighbors(order_[i]);
    for (auto u = nb.find_first(); u != Bitset::npos; u = nb.find_next(u))
      if (position[u] < i) steps_[i].placed_neighbours.push_back(static_cast<Vertex>(u));
  }
  // For graphs, adjacency to placed neighbours already certifies every edge.
  if (pattern.k() > 2) {
    for (auto e : pattern.edge_range()) {
      std::size_t last = 0;
      for (Vertex x : e) last = std::max(last, position[x]);
      steps_[last].closing_edges.emplace_back(e.begin(), e.end());
    }
  }
}

Bitset Matcher::initial_domain(Vertex p, const MatchOptions& opt) const {
  const Vertex hn = host_.num_vertices();
  Bitset d(hn);
  if (opt.domains) {
    d = (*opt.domains)[p];
    if (d.size() != hn) throw ParameterError("domain bitset has wrong size");
  } else {
    d.set();
  }
  for (Vertex x = 0; x < hn; ++x) {
    if (!d.test(x)) continue;
    if (opt.injective) {
      if (host_edge_degree_[x] < pattern_edge_degree_[p] ||
          host_shadow_.degree(x) < pattern_shadow_degree_[p])
        d.reset(x);
    } else if (pattern_edge_degree_[p] > 0 && host_edge_degree_[x] == 0) {
      d.reset(x);
    }
  }
  return d;
}

}  // namespace hrlb::detail
