#include "hrlb/homomorphism.hpp"

#include <algorithm>

#include "hrlb/error.hpp"
#include "matcher.hpp"

namespace hrlb {

namespace {

std::optional<VertexMap> first_match(const KGraph& from, const KGraph& to, bool injective,
                                     const SearchLimits& limits,
                                     const std::vector<Bitset>* domains = nullptr) {
  detail::Matcher m(from, to);
  detail::MatchOptions opt;
  opt.injective = injective;
  opt.node_budget = limits.node_budget;
  opt.domains = domains;
  std::optional<VertexMap> found;
  auto stats = m.run(opt, [&](std::span<const Vertex> map) {
    found = VertexMap{to.num_vertices(), std::vector<Vertex>(map.begin(), map.end())};
    return false;
  });
  if (!found && stats.budget_exceeded)
    throw BudgetExceeded("homomorphism search exceeded node budget of " +
                         std::to_string(limits.node_budget));
  return found;
}

// Endomorphism of f whose image avoids `missing`, if any.
std::optional<VertexMap> retract_avoiding(const KGraph& f, Vertex missing, const SearchLimits& limits) {
  Bitset allowed(f.num_vertices());
  allowed.set();
  allowed.reset(missing);
  std::vector<Bitset> domains(f.num_vertices(), allowed);
  return first_match(f, f, false, limits, &domains);
}

void require_normalized(const KGraph& f, const char* who) {
  if (f.has_isolated_vertices())
    throw PreconditionError(std::string(who) + ": input has isolated vertices; normalize first");
}

}  // namespace

std::optional<VertexMap> find_homomorphism(const KGraph& from, const KGraph& to,
                                           const SearchLimits& limits) {
  if (from.k() != to.k()) throw ParameterError("find_homomorphism: uniformity mismatch");
  auto phi = first_match(from, to, false, limits);
  if (phi) check(is_homomorphism(from, to, *phi), "find_homomorphism: map is not a homomorphism");
  return phi;
}

std::optional<VertexMap> find_injective_homomorphism(const KGraph& from, const KGraph& to,
                                                     const SearchLimits& limits) {
  if (from.k() != to.k()) throw ParameterError("find_injective_homomorphism: uniformity mismatch");
  if (from.num_vertices() > to.num_vertices()) return std::nullopt;
  auto phi = first_match(from, to, true, limits);
  if (phi) check(phi->injective() && is_homomorphism(from, to, *phi), "injective search returned a bad map");
  return phi;
}

std::optional<VertexMap> find_isomorphism(const KGraph& a, const KGraph& b, const SearchLimits& limits) {
  if (a.k() != b.k() || a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges())
    return std::nullopt;
  auto da = a.degrees(), db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return std::nullopt;
  // Injective and edge-preserving with |E(a)| = |E(b)| forces a bijection on edges.
  return find_injective_homomorphism(a, b, limits);
}

bool isomorphic(const KGraph& a, const KGraph& b, const SearchLimits& limits) {
  return find_isomorphism(a, b, limits).has_value();
}

std::uint64_t count_automorphisms(const KGraph& f, const SearchLimits& limits) {
  detail::Matcher m(f, f);
  detail::MatchOptions opt;
  opt.injective = true;
  opt.node_budget = limits.node_budget;
  auto stats = m.run(opt, [](std::span<const Vertex>) { return true; });
  if (stats.budget_exceeded) throw BudgetExceeded("automorphism count exceeded node budget");
  return stats.matches;
}

CoreResult core(const KGraph& f, const SearchLimits& limits) {
  require_normalized(f, "core");
  KGraph current = f;
  VertexMap embedding = identity_map(f.num_vertices());
  VertexMap retraction = identity_map(f.num_vertices());

  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (Vertex v = 0; v < current.num_vertices(); ++v) {
      auto phi = retract_avoiding(current, v, limits);
      if (!phi) continue;
      // Keep only the vertices hit by the image, relabelled in increasing order.
      std::vector<bool> hit(current.num_vertices(), false);
      for (Vertex y : phi->image) hit[y] = true;
      std::vector<Vertex> kept;
      std::vector<Vertex> new_id(current.num_vertices(), 0);
      for (Vertex y = 0; y < current.num_vertices(); ++y) {
        if (!hit[y]) continue;
        new_id[y] = static_cast<Vertex>(kept.size());
        kept.push_back(y);
      }
      const auto m = static_cast<Vertex>(kept.size());
      VertexMap squeeze{m, std::vector<Vertex>(current.num_vertices())};
      for (Vertex x = 0; x < current.num_vertices(); ++x) squeeze.image[x] = new_id[(*phi)(x)];
      VertexMap back{current.num_vertices(), kept};

      KGraph next = image(current, squeeze);
      retraction = compose(squeeze, retraction);
      embedding = compose(embedding, back);
      current = std::move(next);
      shrunk = true;
      break;
    }
  }

  check(is_homomorphism(f, current, retraction), "core: retraction is not a homomorphism");
  check(embedding.injective() && is_homomorphism(current, f, embedding),
        "core: embedding is not a subgraph embedding");
  return {std::move(current), std::move(retraction), std::move(embedding)};
}

bool is_core(const KGraph& f, const SearchLimits& limits) {
  require_normalized(f, "is_core");
  for (Vertex v = 0; v < f.num_vertices(); ++v)
    if (retract_avoiding(f, v, limits)) return false;
  return true;
}

}  // namespace hrlb
