#ifndef HRLB_HOMOMORPHISM_HPP
#define HRLB_HOMOMORPHISM_HPP

#include <cstdint>
#include <optional>

#include "hrlb/kgraph.hpp"

namespace hrlb {

struct SearchLimits {
  std::uint64_t node_budget = 0;  // search-tree nodes per call; 0 = unlimited
};

// First homomorphism from -> to under the matcher's fixed vertex order, or
// nullopt if none exists. Throws BudgetExceeded if the budget runs out
// before the search is complete and ParameterError on a uniformity mismatch.
std::optional<VertexMap> find_homomorphism(const KGraph& from, const KGraph& to,
                                           const SearchLimits& limits = {});
std::optional<VertexMap> find_injective_homomorphism(const KGraph& from, const KGraph& to,
                                                     const SearchLimits& limits = {});

std::optional<VertexMap> find_isomorphism(const KGraph& a, const KGraph& b,
                                          const SearchLimits& limits = {});
bool isomorphic(const KGraph& a, const KGraph& b, const SearchLimits& limits = {});

std::uint64_t count_automorphisms(const KGraph& f, const SearchLimits& limits = {});

struct CoreResult {
  KGraph core;
  VertexMap retraction;  // F -> core, a homomorphism
  VertexMap embedding;   // core -> F, identifies the core as a subgraph of F
};

// Minimal-edge subgraph of F receiving a homomorphism from F, found by
// repeated retraction: while some homomorphism F -> F misses a vertex,
// replace F by its image. A normalized F whose every endomorphism is
// surjective on vertices is a core, so the fixpoint is exact.
// Requires F without isolated vertices (PreconditionError otherwise).
CoreResult core(const KGraph& f, const SearchLimits& limits = {});

// True iff every endomorphism of F is an automorphism.
bool is_core(const KGraph& f, const SearchLimits& limits = {});

}  // namespace hrlb

#endif  // HRLB_HOMOMORPHISM_HPP
