#ifndef HRLB_STRUCTURE_HPP
#define HRLB_STRUCTURE_HPP

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hrlb/homomorphism.hpp"
#include "hrlb/kgraph.hpp"

namespace hrlb {

struct PerfectEliminationOrder {
  std::vector<Vertex> order;
};
struct ChordlessCycle {
  std::vector<Vertex> cycle;
};
using ChordalityResult = std::variant<PerfectEliminationOrder, ChordlessCycle>;

// Visit order of lexicographic breadth-first search (ties: lowest id).
std::vector<Vertex> lex_bfs(const Graph& g);

// Either a perfect elimination ordering (reverse LexBFS order) or, when the
// graph is not chordal, an induced cycle of length >= 4 extracted from the
// first elimination violation. Both certificates are checked before return.
ChordalityResult chordality(const Graph& g);

bool is_perfect_elimination_order(const Graph& g, std::span<const Vertex> order);
// Cycle of length >= 4 with no chords.
bool is_chordless_cycle(const Graph& g, std::span<const Vertex> cycle);
bool is_cycle(const Graph& g, std::span<const Vertex> cycle);

// Largest set {v} ∪ (later neighbours of v) over the ordering, sorted.
// Throws ParameterError if `peo` is not a perfect elimination ordering.
std::vector<Vertex> max_clique_chordal(const Graph& g, std::span<const Vertex> peo);

// Shortest induced cycle of length >= 4; among those, the lexicographically
// smallest when written from its minimum vertex toward its smaller neighbour.
std::optional<std::vector<Vertex>> shortest_chordless_cycle(const Graph& g);
// Shortest cycle (length >= 3) with the same tie-breaking.
std::optional<std::vector<Vertex>> shortest_cycle(const Graph& g);

struct CycleWitness {
  std::vector<Vertex> vertices;  // I, sorted
  std::vector<Vertex> cycle;     // cyclic order, cycle ⊆ I
};
struct CliqueWitness {
  std::vector<Vertex> vertices;  // I, sorted
  unsigned s = 0;                // |I|
};
using Witness = std::variant<CycleWitness, CliqueWitness>;

const std::vector<Vertex>& witness_vertices(const Witness& w);

// Empty if `w` satisfies its type invariants for `f`; otherwise a reason.
std::optional<std::string> witness_violation(const KGraph& f, const Witness& w);

// Picks the structure that drives the hard-instance construction for a
// non-k-partite core: an induced cycle of length >= 4 in the 2-shadow if one
// exists, else a smallest subset of a (k+1)-clique of the (then chordal)
// shadow that no edge contains.
Witness find_witness(const KGraph& f, const SearchLimits& limits = {});

struct AnalysisReport {
  KGraph input;                       // normalized
  std::vector<Vertex> original_ids;   // normalized id -> id in the given graph
  std::vector<Vertex> removed_isolated;
  std::optional<Partition> partition;  // set iff k-partite
  CoreResult core;
  bool is_core_already = false;
  std::optional<Witness> witness;  // in core labels; set iff not k-partite
};

AnalysisReport analyze(const KGraph& f, const SearchLimits& limits = {});

}  // namespace hrlb

#endif  // HRLB_STRUCTURE_HPP
