#include <numeric>

#include "hrlb/constructions.hpp"
#include "hrlb/counting.hpp"
#include "hrlb/error.hpp"
#include "hrlb/random.hpp"

namespace hrlb {

AmplifyResult amplify_blowup(const PartiteInstance& h, const KGraph& f, Vertex big_n, const AmplifyOptions& opt) {
  if (h.graph.k() != f.k()) throw ParameterError("amplify_blowup: uniformity mismatch");
  if (h.num_parts != f.num_vertices() || h.placed.tuple_length() != f.num_vertices())
    throw ParameterError("amplify_blowup: instance is not partite over V(F)");
  const Vertex vh = h.graph.num_vertices();
  if (vh == 0 || big_n < vh) throw ParameterError("amplify_blowup: requires N >= v(H)");
  const VertexMap phi = h.part_collapse();
  if (!is_homomorphism(h.graph, f, phi)) throw PreconditionError("amplify_blowup: H is not homomorphic to F");
  if (!is_core(f)) throw PreconditionError("amplify_blowup: F is not a core");

  AmplifyResult res;
  res.b = big_n / vh;
  auto bl = blowup(h.graph, res.b);
  res.graph = std::move(bl.graph);
  res.psi = std::move(bl.natural);
  res.phi_psi = compose(phi, res.psi);

  const Vertex v = f.num_vertices();
  res.copies = CopyFamily(v);
  if (res.b == 1) {
    for (std::size_t i = 0; i < h.placed.size(); ++i) res.copies.push_back(h.placed[i]);
  } else {
    std::optional<ExtensionResult> shared;
    if (opt.design.deterministic) shared = disjoint_family(res.b, v, f.k(), opt.seed, opt.design);
    std::vector<Vertex> tuple(v);
    for (std::size_t i = 0; i < h.placed.size(); ++i) {
      const auto fam = shared ? *shared : disjoint_family(res.b, v, f.k(), derive_seed(opt.seed, i), opt.design);
      auto u = h.placed[i];
      for (std::size_t d = 0; d < fam.family.size(); ++d) {
        auto clones = fam.family[d];
        for (Vertex j = 0; j < v; ++j) tuple[j] = clone_id(u[j], clones[j] - j * res.b, res.b);
        res.copies.push_back(tuple);
      }
    }
  }

  check(is_homomorphism(res.graph, f, res.phi_psi), "amplify_blowup: phi o psi is not a homomorphism");
  check(verify_edge_disjoint(f, res.copies).ok, "amplify_blowup: copies share an edge");
  return res;
}

LiftResult lift_to_supergraph(const KGraph& host, std::span<const std::vector<Vertex>> c_copies, const KGraph& c,
                              const KGraph& f, const SearchLimits& limits) {
  if (host.k() != c.k() || c.k() != f.k()) throw ParameterError("lift_to_supergraph: uniformity mismatch");
  LiftResult res;
  if (c == f) {
    res.hom = identity_map(f.num_vertices());
  } else {
    auto hom = find_homomorphism(f, c, limits);
    if (!hom) throw PreconditionError("lift_to_supergraph: no homomorphism F -> C");
    if (!find_injective_homomorphism(c, f, limits)) throw PreconditionError("lift_to_supergraph: C is not a subgraph of F");
    res.hom = std::move(*hom);
  }

  std::vector<std::vector<Edge>> input_edges;
  for (const auto& copy : c_copies) {
    VertexMap m{host.num_vertices(), copy};
    if (copy.size() != c.num_vertices() || !m.injective() || !is_homomorphism(c, host, m))
      throw ParameterError("lift_to_supergraph: input is not a copy of C in the host");
    input_edges.push_back(copy_edges(c, copy));
  }
  if (!verify_edge_disjoint(input_edges).ok)
    throw PreconditionError("lift_to_supergraph: input copies of C are not edge-disjoint");

  const Vertex b = f.num_vertices();
  // F embeds in the v(F)-blowup of C by sending x to clone x of hom(x).
  const auto c_blown = blowup(c, b);
  res.embedding = VertexMap{c_blown.graph.num_vertices(), std::vector<Vertex>(b)};
  for (Vertex x = 0; x < b; ++x) res.embedding.image[x] = clone_id(res.hom(x), x, b);
  check(res.embedding.injective() && is_homomorphism(f, c_blown.graph, res.embedding),
        "lift_to_supergraph: F does not embed in the blowup of C");

  res.graph = blowup(host, b).graph;
  res.copies = CopyFamily(b);
  std::vector<Vertex> tuple(b);
  for (const auto& copy : c_copies) {
    for (Vertex x = 0; x < b; ++x) tuple[x] = clone_id(copy[res.hom(x)], x, b);
    res.copies.push_back(tuple);
  }
  check(verify_edge_disjoint(f, res.copies).ok, "lift_to_supergraph: lifted copies share an edge");
  for (std::size_t i = 0; i < res.copies.size(); ++i)
    check(is_homomorphism(f, res.graph, VertexMap{res.graph.num_vertices(),
                                                  std::vector<Vertex>(res.copies[i].begin(), res.copies[i].end())}),
          "lift_to_supergraph: lifted copy is not in the blowup");
  return res;
}

}  // namespace hrlb
