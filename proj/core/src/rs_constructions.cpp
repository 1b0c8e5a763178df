#include <algorithm>
#include <numeric>

#include "hrlb/constructions.hpp"
#include "hrlb/counting.hpp"
#include "hrlb/error.hpp"

namespace hrlb {

namespace {

void require_progression_free(const BehrendSet& b, unsigned t, Vertex m, const char* who) {
  if (b.t != t)
    throw ParameterError(std::string(who) + ": B avoids the equation for t = " + std::to_string(b.t) +
                         " but t = " + std::to_string(t) + " is needed");
  for (auto y : b.elements)
    if (y < 1 || y > static_cast<std::int64_t>(m))
      throw ParameterError(std::string(who) + ": B is not within [1, n/s] = [1, " + std::to_string(m) + "]");
  if (m == 0) return;
  auto status = verify_solution_free(b.elements, t, m);
  if (status.status == SolutionStatus::violated)
    throw ParameterError(std::string(who) + ": B has a non-trivial solution");
}

void record_b(InstanceMeta& meta, const BehrendSet& b) {
  meta.b_m = b.m;
  meta.b_t = b.t;
  meta.b_elements = b.elements;
}

}  // namespace

PartiteInstance rs_graph(const KGraph& s_graph, Vertex n, const BehrendSet& b) {
  if (s_graph.k() != 2) throw ParameterError("rs_graph: S must be a graph");
  const Vertex s = s_graph.num_vertices();
  auto cycle = shortest_cycle(shadow_graph(s_graph));
  if (!cycle) throw ParameterError("rs_graph: S has no cycle");
  const auto t = static_cast<unsigned>(cycle->size());
  const Vertex m = n / s;
  require_progression_free(b, t, m, "rs_graph");

  // Role i is played by S vertex perm[i]: the cycle first, then the rest.
  std::vector<Vertex> perm = *cycle;
  std::vector<bool> on_cycle(s, false);
  for (Vertex v : perm) on_cycle[v] = true;
  for (Vertex v = 0; v < s; ++v)
    if (!on_cycle[v]) perm.push_back(v);

  PartiteInstance inst;
  inst.n = n;
  inst.num_parts = s;
  inst.placed = CopyFamily(s, 2);
  inst.placed.reserve(static_cast<std::size_t>(m) * b.size());
  std::vector<Vertex> tuple(s);
  for (Vertex x = 1; x <= m; ++x) {
    for (auto y : b.elements) {
      for (Vertex i = 0; i < s; ++i) {
        const auto value = static_cast<std::int64_t>(x) + static_cast<std::int64_t>(i) * y;
        check(value <= static_cast<std::int64_t>(n), "rs_graph: copy does not fit into [n]");
        tuple[perm[i]] = part_vertex(perm[i], n, static_cast<Vertex>(value));
      }
      inst.placed.push_back(tuple);
    }
  }
  inst.graph = union_of_copies(s_graph, inst.placed, s * n);

  inst.meta.s = s;
  inst.meta.l = 2;
  inst.meta.permutation = perm;
  inst.meta.path = "rs_graph";
  inst.meta.target = s_graph;
  record_b(inst.meta, b);

  check(inst.placed.size() == static_cast<std::size_t>(m) * b.size(), "rs_graph: wrong number of copies");
  check(verify_pairwise_disjoint(inst.placed, 2).ok, "rs_graph: placed copies are not 2-disjoint");
  return inst;
}

PartiteInstance rs_simplex(unsigned s, Vertex n, const BehrendSet& b) {
  if (s < 3) throw ParameterError("rs_simplex: s must be >= 3");
  if (s - 1 > kMaxUniformity) throw ParameterError("rs_simplex: s too large");
  const Vertex m = n / s;
  require_progression_free(b, 3, m, "rs_simplex");

  PartiteInstance inst;
  inst.n = n;
  inst.num_parts = s;
  inst.placed = CopyFamily(s, s - 1);
  const KGraph target = complete_kgraph(s - 1, s);

  if (m > 0 && !b.elements.empty()) {
    std::vector<Vertex> x(s - 2, 1);
    std::vector<Vertex> tuple(s);
    while (true) {
      const std::int64_t sum = std::accumulate(x.begin(), x.end(), std::int64_t{0});
      for (auto y : b.elements) {
        for (unsigned i = 0; i + 2 < s; ++i) tuple[i] = part_vertex(i, n, x[i]);
        const std::int64_t a = y + sum, c = 2 * y + sum;
        check(c <= static_cast<std::int64_t>(n), "rs_simplex: copy does not fit into [n]");
        tuple[s - 2] = part_vertex(s - 2, n, static_cast<Vertex>(a));
        tuple[s - 1] = part_vertex(s - 1, n, static_cast<Vertex>(c));
        inst.placed.push_back(tuple);
      }
      // Next x in lexicographic order.
      int pos = static_cast<int>(x.size()) - 1;
      while (pos >= 0 && x[static_cast<std::size_t>(pos)] == m) x[static_cast<std::size_t>(pos--)] = 1;
      if (pos < 0) break;
      ++x[static_cast<std::size_t>(pos)];
    }
  }
  inst.graph = union_of_copies(target, inst.placed, s * n);

  inst.meta.s = s;
  inst.meta.l = s - 1;
  inst.meta.permutation.resize(s);
  std::iota(inst.meta.permutation.begin(), inst.meta.permutation.end(), Vertex{0});
  inst.meta.path = "rs_simplex";
  inst.meta.target = target;
  record_b(inst.meta, b);

  std::size_t expected = b.size();
  for (unsigned i = 0; i + 2 < s; ++i) expected *= m;
  check(inst.placed.size() == expected, "rs_simplex: wrong number of copies");
  check(verify_pairwise_disjoint(inst.placed, s - 1).ok, "rs_simplex: placed copies are not (s-1)-disjoint");
  return inst;
}

}  // namespace hrlb
