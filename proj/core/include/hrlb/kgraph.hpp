#ifndef HRLB_KGRAPH_HPP
#define HRLB_KGRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ranges>
#include <span>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace hrlb {

using Vertex = std::uint32_t;
using Edge = std::vector<Vertex>;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

inline constexpr unsigned kMaxUniformity = 32;

// k-uniform hypergraph on the dense vertex set 0..v-1.
//
// Edges are kept sorted internally and the edge list is kept in
// lexicographic order, so two KGraphs with the same edge set compare equal
// and serialize identically. Construction rejects malformed input
// (wrong edge size, repeated or out-of-range vertex, duplicate edge).
class KGraph {
 public:
  KGraph() = default;
  KGraph(unsigned k, Vertex num_vertices, std::vector<Edge> edges);

  unsigned k() const { return k_; }
  Vertex num_vertices() const { return v_; }
  std::size_t num_edges() const { return k_ == 0 ? 0 : flat_.size() / k_; }

  std::span<const Vertex> edge(std::size_t i) const {
    return {flat_.data() + i * k_, k_};
  }
  auto edge_range() const {
    return std::views::iota(std::size_t{0}, num_edges()) |
           std::views::transform([this](std::size_t i) { return edge(i); });
  }
  std::vector<Edge> edges() const;

  // `e` must be sorted.
  bool has_edge(std::span<const Vertex> e) const;
  // Sorts a copy of `e` first; returns false if `e` repeats a vertex.
  bool has_edge_unsorted(std::span<const Vertex> e) const;
  std::optional<std::size_t> edge_index(std::span<const Vertex> e) const;

  std::vector<std::size_t> degrees() const;
  bool has_isolated_vertices() const;

  friend bool operator==(const KGraph&, const KGraph&) = default;

 private:
  unsigned k_ = 0;
  Vertex v_ = 0;
  std::vector<Vertex> flat_;
};

// Simple undirected graph with bitset adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Vertex n);
  Graph(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges);

  void add_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(v); }
  const Bitset& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].count(); }
  Vertex num_vertices() const { return static_cast<Vertex>(adj_.size()); }
  std::size_t num_edges() const;
  std::vector<std::pair<Vertex, Vertex>> edge_list() const;

  // Subgraph induced on `keep`, relabelled so keep[i] becomes i.
  Graph induced(std::span<const Vertex> keep) const;
  bool is_clique(std::span<const Vertex> vs) const;

  KGraph as_kgraph() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Bitset> adj_;
};

// Total map between dense vertex sets.
struct VertexMap {
  Vertex codomain_size = 0;
  std::vector<Vertex> image;

  Vertex operator()(Vertex v) const { return image[v]; }
  std::size_t domain_size() const { return image.size(); }
  bool injective() const;

  friend bool operator==(const VertexMap&, const VertexMap&) = default;
};

VertexMap identity_map(Vertex n);
// outer ∘ inner
VertexMap compose(const VertexMap& outer, const VertexMap& inner);
VertexMap inverse_permutation(const VertexMap& perm);

bool is_homomorphism(const KGraph& from, const KGraph& to, const VertexMap& phi);

// ℓ-shadow: every ℓ-subset of some edge. Vertex set is preserved.
KGraph shadow(const KGraph& f, unsigned ell);
// 2-shadow as an adjacency structure.
Graph shadow_graph(const KGraph& f);

struct Blowup {
  KGraph graph;
  VertexMap natural;  // clone -> original
};

inline Vertex clone_id(Vertex v, Vertex j, Vertex b) { return v * b + j; }

// Replaces each vertex v by clones v*b..v*b+b-1 and each edge by all b^k
// transversals.
Blowup blowup(const KGraph& h, Vertex b);

// Class index per vertex such that every edge meets every class exactly once,
// or nullopt if the 2-shadow is not k-colourable.
using Partition = std::vector<unsigned>;
std::optional<Partition> is_k_partite(const KGraph& f);

// Proper colouring with at most `colors` colours (DSATUR-ordered backtracking).
std::optional<std::vector<unsigned>> color_graph(const Graph& g, unsigned colors);

struct Normalized {
  KGraph graph;
  std::vector<Vertex> original;  // new id -> old id
  std::vector<Vertex> removed;   // isolated vertices that were dropped
};
Normalized normalize(const KGraph& f);

// Edges of `f` lying inside `keep`, relabelled so keep[i] becomes i.
KGraph induced_subgraph(const KGraph& f, std::span<const Vertex> keep);
// Same vertex set, edges restricted to the given indices.
KGraph edge_subgraph(const KGraph& f, std::span<const std::size_t> edge_ids);
// Edge set {phi(e)}; vertex set is phi's codomain.
KGraph image(const KGraph& f, const VertexMap& phi);
// Applies a vertex bijection.
KGraph relabel(const KGraph& f, const VertexMap& perm);

KGraph complete_kgraph(unsigned k, Vertex v);
KGraph cycle_graph(Vertex n);
KGraph single_edge(unsigned k);

}  // namespace hrlb

#endif  // HRLB_KGRAPH_HPP
