#ifndef HRLB_COUNTING_HPP
#define HRLB_COUNTING_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "hrlb/instance.hpp"
#include "hrlb/kgraph.hpp"

namespace hrlb {

struct CountOptions {
  std::uint64_t node_budget = 0;  // search-tree nodes in total; 0 = unlimited
  unsigned threads = 1;           // first-level branches are split across threads
};

enum class CountMode { general, canonical_partite };
std::string_view to_string(CountMode m);

// A copy of F is a vertex set together with an edge set isomorphic to F, so
// general mode reports labeled embeddings / |Aut(F)|. Canonical mode counts
// tuples (v_1..v_s) with v_i in part i spanning a canonical copy, which are
// already labeled; there `count` equals `labeled`.
struct CountReport {
  std::uint64_t count = 0;
  std::uint64_t labeled = 0;
  std::uint64_t automorphisms = 1;
  std::uint64_t nodes = 0;
  bool exceeded = false;  // count is then only a lower bound
  double elapsed_seconds = 0;
  CountMode mode = CountMode::general;
  Vertex host_vertices = 0;
  std::size_t host_edges = 0;
};

CountReport count_copies(const KGraph& host, const KGraph& f, const CountOptions& opt = {});

// Target vertex i is restricted to part i (vertices i*n .. i*n+n-1).
CountReport count_canonical_copies(const KGraph& host, Vertex n, const KGraph& target,
                                   const CountOptions& opt = {});
CountReport count_canonical_copies(const PartiteInstance& inst, const KGraph& target,
                                   const CountOptions& opt = {});

// Every injective homomorphism F -> host, in search order. Throws
// BudgetExceeded if `limit` maps would be exceeded (0 = no limit).
std::vector<VertexMap> enumerate_embeddings(const KGraph& host, const KGraph& f, std::size_t limit = 0);

// Each copy once: vertex tuple (image of F's vertices under one
// representative embedding) plus its sorted edge set, in search order.
struct Copy {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};
std::vector<Copy> enumerate_copies(const KGraph& host, const KGraph& f, std::size_t limit = 0);

struct DisjointnessCheck {
  bool ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> violation;  // (i, j), i < j
  std::size_t shared = 0;  // vertices (or edges) the violating pair shares
};

// Pairwise: every two tuples share at most ell-1 vertices. Reports the
// lexicographically first violating pair.
DisjointnessCheck verify_pairwise_disjoint(const CopyFamily& fam, unsigned ell);

// No edge lies in two copies. Reports the lexicographically first pair of
// copies that share an edge.
DisjointnessCheck verify_edge_disjoint(std::span<const std::vector<Edge>> copies);
DisjointnessCheck verify_edge_disjoint(const KGraph& target, const CopyFamily& copies);

}  // namespace hrlb

#endif  // HRLB_COUNTING_HPP
