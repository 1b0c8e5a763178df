#include "hrlb/kgraph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "hrlb/error.hpp"
#include "subsets.hpp"

namespace hrlb {

using detail::for_each_subset;

namespace {

bool edge_less(std::span<const Vertex> a, std::span<const Vertex> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

// ---------------------------------------------------------------- KGraph

KGraph::KGraph(unsigned k, Vertex num_vertices, std::vector<Edge> edges)
    : k_(k), v_(num_vertices) {
  if (k < 2 || k > kMaxUniformity)
    throw ParameterError("uniformity must be in [2, " + std::to_string(kMaxUniformity) + "]");
  for (auto& e : edges) {
    if (e.size() != k)
      throw ParameterError("edge has " + std::to_string(e.size()) + " vertices, expected " +
                           std::to_string(k));
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw ParameterError("edge repeats a vertex");
    if (e.back() >= num_vertices)
      throw ParameterError("edge vertex " + std::to_string(e.back()) + " out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw ParameterError("duplicate edge");
  flat_.reserve(edges.size() * k);
  for (const auto& e : edges) flat_.insert(flat_.end(), e.begin(), e.end());
}

std::vector<Edge> KGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (auto e : edge_range()) out.emplace_back(e.begin(), e.end());
  return out;
}

std::optional<std::size_t> KGraph::edge_index(std::span<const Vertex> e) const {
  if (e.size() != k_) return std::nullopt;
  std::size_t lo = 0, hi = num_edges();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (edge_less(edge(mid), e))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < num_edges() && std::ranges::equal(edge(lo), e)) return lo;
  return std::nullopt;
}

bool KGraph::has_edge(std::span<const Vertex> e) const { return edge_index(e).has_value(); }

bool KGraph::has_edge_unsorted(std::span<const Vertex> e) const {
  if (e.size() != k_) return false;
  std::array<Vertex, kMaxUniformity> buf;
  std::copy(e.begin(), e.end(), buf.begin());
  std::sort(buf.begin(), buf.begin() + k_);
  if (std::adjacent_find(buf.begin(), buf.begin() + k_) != buf.begin() + k_) return false;
  return has_edge(std::span<const Vertex>(buf.data(), k_));
}

std::vector<std::size_t> KGraph::degrees() const {
  std::vector<std::size_t> deg(v_, 0);
  for (Vertex x : flat_) ++deg[x];
  return deg;
}

bool KGraph::has_isolated_vertices() const {
  auto deg = degrees();
  return std::ranges::any_of(deg, [](std::size_t d) { return d == 0; });
}

// ----------------------------------------------------------------- Graph

Graph::Graph(Vertex n) : adj_(n, Bitset(n)) {}

Graph::Graph(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw ParameterError("self-loop");
  if (u >= num_vertices() || v >= num_vertices()) throw ParameterError("vertex out of range");
  adj_[u].set(v);
  adj_[v].set(u);
}

std::size_t Graph::num_edges() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edge_list() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < num_vertices(); ++u)
    for (auto v = adj_[u].find_next(u); v != Bitset::npos; v = adj_[u].find_next(v))
      out.emplace_back(u, static_cast<Vertex>(v));
  return out;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  Graph g(static_cast<Vertex>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (adjacent(keep[i], keep[j])) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return g;
}

bool Graph::is_clique(std::span<const Vertex> vs) const {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!adjacent(vs[i], vs[j])) return false;
  return true;
}

KGraph Graph::as_kgraph() const {
  std::vector<Edge> edges;
  for (auto [u, v] : edge_list()) edges.push_back({u, v});
  return KGraph(2, num_vertices(), std::move(edges));
}

// ------------------------------------------------------------- VertexMap

bool VertexMap::injective() const {
  std::vector<bool> hit(codomain_size, false);
  for (Vertex y : image) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

VertexMap identity_map(Vertex n) {
  VertexMap m{n, std::vector<Vertex>(n)};
  std::iota(m.image.begin(), m.image.end(), Vertex{0});
  return m;
}

VertexMap compose(const VertexMap& outer, const VertexMap& inner) {
  if (inner.codomain_size != outer.domain_size())
    throw ParameterError("compose: codomain/domain size mismatch");
  VertexMap m{outer.codomain_size, std::vector<Vertex>(inner.domain_size())};
  for (std::size_t i = 0; i < inner.domain_size(); ++i) m.image[i] = outer(inner(static_cast<Vertex>(i)));
  return m;
}

VertexMap inverse_permutation(const VertexMap& perm) {
  if (perm.domain_size() != perm.codomain_size || !perm.injective())
    throw ParameterError("inverse_permutation: map is not a bijection");
  VertexMap inv{perm.codomain_size, std::vector<Vertex>(perm.domain_size())};
  for (std::size_t i = 0; i < perm.domain_size(); ++i) inv.image[perm.image[i]] = static_cast<Vertex>(i);
  return inv;
}

bool is_homomorphism(const KGraph& from, const KGraph& to, const VertexMap& phi) {
  if (from.k() != to.k()) return false;
  if (phi.domain_size() != from.num_vertices() || phi.codomain_size != to.num_vertices()) return false;
  std::vector<Vertex> img(from.k());
  for (auto e : from.edge_range()) {
    for (std::size_t i = 0; i < e.size(); ++i) img[i] = phi(e[i]);
    if (!to.has_edge_unsorted(img)) return false;
  }
  return true;
}

// ------------------------------------------------------------ operations

KGraph shadow(const KGraph& f, unsigned ell) {
  if (ell < 2 || ell > f.k())
    throw ParameterError("shadow: ell must lie in [2, k]");
  std::vector<Edge> out;
  for (auto e : f.edge_range()) {
    for_each_subset(e.size(), ell, [&](std::span<const std::size_t> pos) {
      Edge sub;
      sub.reserve(ell);
      for (auto p : pos) sub.push_back(e[p]);
      out.push_back(std::move(sub));
    });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return KGraph(ell, f.num_vertices(), std::move(out));
}

Graph shadow_graph(const KGraph& f) {
  Graph g(f.num_vertices());
  for (auto e : f.edge_range())
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j) g.add_edge(e[i], e[j]);
  return g;
}

Blowup blowup(const KGraph& h, Vertex b) {
  if (b < 1) throw ParameterError("blowup factor must be >= 1");
  const unsigned k = h.k();
  std::vector<Edge> out;
  std::vector<Vertex> digit(k);
  for (auto e : h.edge_range()) {
    std::fill(digit.begin(), digit.end(), 0);
    while (true) {
      Edge ne(k);
      for (unsigned i = 0; i < k; ++i) ne[i] = clone_id(e[i], digit[i], b);
      out.push_back(std::move(ne));
      unsigned i = k;
      while (i > 0 && digit[i - 1] + 1 == b) digit[--i] = 0;
      if (i == 0) break;
      ++digit[i - 1];
    }
  }
  VertexMap natural{h.num_vertices(), std::vector<Vertex>(std::size_t{h.num_vertices()} * b)};
  for (Vertex v = 0; v < h.num_vertices(); ++v)
    for (Vertex j = 0; j < b; ++j) natural.image[clone_id(v, j, b)] = v;
  return {KGraph(k, h.num_vertices() * b, std::move(out)), std::move(natural)};
}

namespace {

struct Colorer {
  const Graph& g;
  unsigned colors;
  std::vector<int> color;
  // forbidden[v][c]: number of coloured neighbours of v with colour c
  std::vector<std::vector<unsigned>> forbidden;

  Colorer(const Graph& graph, unsigned c)
      : g(graph), colors(c), color(graph.num_vertices(), -1),
        forbidden(graph.num_vertices(), std::vector<unsigned>(c, 0)) {}

  unsigned saturation(Vertex v) const {
    return static_cast<unsigned>(std::ranges::count_if(forbidden[v], [](unsigned x) { return x > 0; }));
  }

  void assign(Vertex v, int c, int delta) {
    const auto& nb = g.neighbors(v);
    for (auto u = nb.find_first(); u != Bitset::npos; u = nb.find_next(u))
      forbidden[u][static_cast<std::size_t>(c)] += delta;
  }

  bool solve(std::size_t colored, int used) {
    const Vertex n = g.num_vertices();
    if (colored == n) return true;
    Vertex best = n;
    unsigned best_sat = 0;
    std::size_t best_deg = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (color[v] >= 0) continue;
      unsigned sat = saturation(v);
      std::size_t deg = g.degree(v);
      if (best == n || sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    // colours beyond used+1 are symmetric to used+1
    const int limit = std::min<int>(static_cast<int>(colors), used + 1);
    for (int c = 0; c < limit; ++c) {
      if (forbidden[best][static_cast<std::size_t>(c)] > 0) continue;
      color[best] = c;
      assign(best, c, 1);
      if (solve(colored + 1, std::max(used, c + 1))) return true;
      assign(best, c, -1);
      color[best] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<unsigned>> color_graph(const Graph& g, unsigned colors) {
  if (g.num_vertices() == 0) return std::vector<unsigned>{};
  if (colors == 0) return std::nullopt;
  Colorer c(g, colors);
  if (!c.solve(0, 0)) return std::nullopt;
  std::vector<unsigned> out(c.color.begin(), c.color.end());
  for (auto [u, v] : g.edge_list()) check(out[u] != out[v], "color_graph: improper colouring");
  return out;
}

std::optional<Partition> is_k_partite(const KGraph& f) {
  auto coloring = color_graph(shadow_graph(f), f.k());
  if (!coloring) return std::nullopt;
  for (auto e : f.edge_range()) {
    std::vector<bool> seen(f.k(), false);
    for (Vertex x : e) {
      check(!seen[(*coloring)[x]], "is_k_partite: edge meets a class twice");
      seen[(*coloring)[x]] = true;
    }
  }
  return coloring;
}

Normalized normalize(const KGraph& f) {
  auto deg = f.degrees();
  Normalized out;
  std::vector<Vertex> new_id(f.num_vertices(), 0);
  for (Vertex v = 0; v < f.num_vertices(); ++v) {
    if (deg[v] == 0) {
      out.removed.push_back(v);
    } else {
      new_id[v] = static_cast<Vertex>(out.original.size());
      out.original.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (auto e : f.edge_range()) {
    Edge ne;
    for (Vertex x : e) ne.push_back(new_id[x]);
    edges.push_back(std::move(ne));
  }
  out.graph = KGraph(f.k(), static_cast<Vertex>(out.original.size()), std::move(edges));
  return out;
}

KGraph induced_subgraph(const KGraph& f, std::span<const Vertex> keep) {
  constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> new_id(f.num_vertices(), kAbsent);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= f.num_vertices() || new_id[keep[i]] != kAbsent)
      throw ParameterError("induced_subgraph: bad vertex list");
    new_id[keep[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (auto e : f.edge_range()) {
    if (std::ranges::all_of(e, [&](Vertex x) { return new_id[x] != kAbsent; })) {
      Edge ne;
      for (Vertex x : e) ne.push_back(new_id[x]);
      edges.push_back(std::move(ne));
    }
  }
  return KGraph(f.k(), static_cast<Vertex>(keep.size()), std::move(edges));
}

KGraph edge_subgraph(const KGraph& f, std::span<const std::size_t> edge_ids) {
  std::vector<Edge> edges;
  for (auto i : edge_ids) {
    if (i >= f.num_edges()) throw ParameterError("edge_subgraph: edge index out of range");
    auto e = f.edge(i);
    edges.emplace_back(e.begin(), e.end());
  }
  return KGraph(f.k(), f.num_vertices(), std::move(edges));
}

KGraph image(const KGraph& f, const VertexMap& phi) {
  if (phi.domain_size() != f.num_vertices()) throw ParameterError("image: map domain mismatch");
  std::vector<Edge> edges;
  for (auto e : f.edge_range()) {
    Edge ne;
    for (Vertex x : e) ne.push_back(phi(x));
    std::sort(ne.begin(), ne.end());
    if (std::adjacent_find(ne.begin(), ne.end()) != ne.end())
      throw ParameterError("image: map collapses an edge");
    edges.push_back(std::move(ne));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return KGraph(f.k(), phi.codomain_size, std::move(edges));
}

KGraph relabel(const KGraph& f, const VertexMap& perm) {
  if (perm.domain_size() != f.num_vertices() || perm.codomain_size != f.num_vertices() ||
      !perm.injective())
    throw ParameterError("relabel: map is not a permutation of the vertex set");
  return image(f, perm);
}

KGraph complete_kgraph(unsigned k, Vertex v) {
  std::vector<Edge> edges;
  for_each_subset(v, k, [&](std::span<const std::size_t> pos) {
    Edge e;
    for (auto p : pos) e.push_back(static_cast<Vertex>(p));
    edges.push_back(std::move(e));
  });
  return KGraph(k, v, std::move(edges));
}

KGraph cycle_graph(Vertex n) {
  if (n < 3) throw ParameterError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return KGraph(2, n, std::move(edges));
}

KGraph single_edge(unsigned k) { return complete_kgraph(k, k); }

}  // namespace hrlb
