#ifndef HRLB_CONSTRUCTIONS_HPP
#define HRLB_CONSTRUCTIONS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "hrlb/behrend.hpp"
#include "hrlb/homomorphism.hpp"
#include "hrlb/instance.hpp"
#include "hrlb/kgraph.hpp"
#include "hrlb/structure.hpp"

namespace hrlb {

// s-partite graph with parts of size n holding, for x in [n/s] and y in B,
// the canonical copy of S on v_i = x + i*y (0-based positions along a
// shortest cycle of S, whose length must equal B.t). Placed copies are
// pairwise 2-disjoint and reported in S's own labeling.
PartiteInstance rs_graph(const KGraph& s_graph, Vertex n, const BehrendSet& b);

// s-partite (s-1)-graph: for x in [n/s]^(s-2) and y in B (t = 3) the copy of
// K_s^(s-1) on (x_1, .., x_{s-2}, y + sum x, 2y + sum x). Placed copies are
// pairwise (s-1)-disjoint.
PartiteInstance rs_simplex(unsigned s, Vertex n, const BehrendSet& b);

struct ExtensionParams {
  unsigned s = 0;  // coordinates already fixed by the input family
  unsigned r = 0;  // new coordinates
  unsigned k = 0;
  unsigned l = 0;  // input family is pairwise l-disjoint
  Vertex n = 0;
  std::uint64_t seed = 0;
  unsigned retry_cap = 64;
};

struct ExtensionResult {
  CopyFamily family;  // tuples over parts 0..s+r-1
  std::uint64_t K = 0;  // sum over d of C(r,d) C(s, max(0,k-d))
  std::uint64_t C = 1;  // max(1, 2K)
  double beta = 0;      // 1 / (4C)
  double lower_bound = 0;  // beta |S| n^(k-l)
  unsigned attempts = 0;
  std::uint64_t sampled = 0;  // kept before the deletion pass (last attempt)
  std::uint64_t deleted = 0;
};

std::uint64_t extension_constant(unsigned r, unsigned s, unsigned k, unsigned l);

// Keeps each (S, A), S in the family and A in [n]^r, independently with
// probability 1 / (C n^(r-k+l)), then deletes the later member of every pair
// that shares >= k coordinates and agrees on >= k-l new ones. Reseeds while
// 4C|F| < |S| n^(k-l); throws ConstructionError past retry_cap.
ExtensionResult extend_family(const CopyFamily& s_family, const ExtensionParams& p);

// First violation of the extension property, if any: a pair sharing >= k
// coordinates and agreeing on >= k-l of the coordinates s..s+r-1.
std::optional<std::pair<std::size_t, std::size_t>> find_extension_violation(const CopyFamily& f, unsigned s,
                                                                           unsigned k, unsigned l);

struct DesignOptions {
  bool deterministic = false;
  unsigned retry_cap = 64;
};

// Pairwise k-disjoint tuples in [n]^r (parts of size n). The random route is
// extend_family with s = l = 0. The deterministic route uses the full grid
// (r = k), a sum-mod-n check coordinate (r = k+1), or evaluations of the
// polynomials of degree < k over the smallest prime p >= max(n, r), keeping
// tuples whose coordinates are all < n.
ExtensionResult disjoint_family(Vertex n, unsigned r, unsigned k, std::uint64_t seed,
                                const DesignOptions& opt = {});

struct HardInstanceOptions {
  std::uint64_t seed = 0;
  unsigned retry_cap = 64;
  BehrendOptions behrend;
  SearchLimits limits;
};

// Edge-disjoint canonical copies of F in a v(F)-partite k-graph with parts of
// size n. Cycle witnesses go through rs_graph with l = 2, clique witnesses
// through rs_simplex with l = s-1, then extend_family. Asserts edge-
// disjointness, the part-collapse homomorphism onto F, and the size bound.
PartiteInstance hard_instance(const KGraph& f, const Witness& w, Vertex n, const HardInstanceOptions& opt = {});

struct AmplifyOptions {
  std::uint64_t seed = 0;
  DesignOptions design;
};

struct AmplifyResult {
  KGraph graph;
  Vertex b = 0;
  VertexMap psi;      // G -> H, clone collapse
  VertexMap phi_psi;  // G -> F
  CopyFamily copies;  // coordinate j plays F's vertex j
};

// b = floor(N / v(H)) blowup of H, with a k-disjoint family of transversal
// copies inside the blowup of every placed copy. Requires F = H.meta.target
// and the part collapse to be a homomorphism H -> F.
AmplifyResult amplify_blowup(const PartiteInstance& h, const KGraph& f, Vertex big_n,
                             const AmplifyOptions& opt = {});

struct LiftResult {
  KGraph graph;         // v(F)-blowup of the host
  VertexMap hom;        // F -> C
  VertexMap embedding;  // F -> blowup(C, v(F)), injective
  CopyFamily copies;    // coordinate j plays F's vertex j
};

// c_copies[i][j] is the host vertex playing C's vertex j in copy i. Requires
// C to embed in F, a homomorphism F -> C, and edge-disjoint input copies.
LiftResult lift_to_supergraph(const KGraph& host, std::span<const std::vector<Vertex>> c_copies,
                              const KGraph& c, const KGraph& f, const SearchLimits& limits = {});

}  // namespace hrlb

#endif  // HRLB_CONSTRUCTIONS_HPP
