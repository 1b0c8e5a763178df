#include <algorithm>
#include <numeric>

#include "hrlb/constructions.hpp"
#include "hrlb/counting.hpp"
#include "hrlb/error.hpp"

namespace hrlb {

PartiteInstance hard_instance(const KGraph& f, const Witness& w, Vertex n, const HardInstanceOptions& opt) {
  if (f.has_isolated_vertices()) throw PreconditionError("hard_instance: F has isolated vertices");
  if (is_k_partite(f)) throw PreconditionError("hard_instance: F is k-partite, so its removal lemma is polynomial");
  if (auto why = witness_violation(f, w)) throw PreconditionError("hard_instance: invalid witness: " + *why);
  if (!is_core(f, opt.limits)) throw PreconditionError("hard_instance: F is not a core");

  const auto& in_i = witness_vertices(w);
  const Vertex v = f.num_vertices();
  const auto s = static_cast<unsigned>(in_i.size());
  const unsigned r = v - s;
  const unsigned k = f.k();
  if (n < s) throw ParameterError("hard_instance: n must be at least |I|");

  // Role i is played by F vertex perm[i]: I first, then the rest.
  std::vector<Vertex> perm = in_i;
  std::vector<bool> in_set(v, false);
  for (Vertex x : perm) in_set[x] = true;
  for (Vertex x = 0; x < v; ++x)
    if (!in_set[x]) perm.push_back(x);
  VertexMap to_role{v, std::vector<Vertex>(v)};
  for (Vertex i = 0; i < v; ++i) to_role.image[perm[i]] = i;
  const KGraph rel = relabel(f, to_role);
  std::vector<Vertex> roles_i(s);
  std::iota(roles_i.begin(), roles_i.end(), Vertex{0});

  PartiteInstance base;
  unsigned l = 0;
  std::string path;
  if (std::holds_alternative<CycleWitness>(w)) {
    const KGraph s_graph = induced_subgraph(shadow(rel, 2), roles_i);
    auto cyc = shortest_cycle(shadow_graph(s_graph));
    check(cyc.has_value(), "hard_instance: witness cycle missing from the shadow");
    const auto t = static_cast<unsigned>(cyc->size());
    base = rs_graph(s_graph, n, behrend_set(n / s, t, opt.behrend));
    l = 2;
    path = "cycle";
  } else {
    base = rs_simplex(s, n, behrend_set(n / s, 3, opt.behrend));
    l = s - 1;
    path = "clique";
  }

  auto ext = extend_family(base.placed, ExtensionParams{s, r, k, l, n, opt.seed, opt.retry_cap});

  PartiteInstance inst;
  inst.n = n;
  inst.num_parts = v;
  inst.placed = CopyFamily(v);
  inst.placed.reserve(ext.family.size());
  std::vector<Vertex> tuple(v);
  for (std::size_t i = 0; i < ext.family.size(); ++i) {
    auto u = ext.family[i];
    for (Vertex role = 0; role < v; ++role) {
      const Vertex value = u[role] - role * n + 1;
      tuple[perm[role]] = part_vertex(perm[role], n, value);
    }
    inst.placed.push_back(tuple);
  }
  inst.graph = union_of_copies(f, inst.placed, v * n);

  auto& m = inst.meta;
  m.seed = opt.seed;
  m.s = s;
  m.r = r;
  m.l = l;
  m.C = ext.C;
  m.b_m = base.meta.b_m;
  m.b_t = base.meta.b_t;
  m.b_elements = base.meta.b_elements;
  m.permutation = perm;
  m.path = path;
  m.attempts = ext.attempts;
  m.target = f;

  check(verify_edge_disjoint(f, inst.placed).ok, "hard_instance: placed copies of F share an edge");
  check(is_homomorphism(inst.graph, f, inst.part_collapse()), "hard_instance: part collapse is not a homomorphism");
  check(static_cast<double>(inst.placed.size()) >= ext.lower_bound,
        "hard_instance: fewer copies than the extension bound");
  return inst;
}

}  // namespace hrlb
