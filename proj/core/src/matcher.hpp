#ifndef HRLB_SRC_MATCHER_HPP
#define HRLB_SRC_MATCHER_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "hrlb/kgraph.hpp"

namespace hrlb::detail {

struct MatchOptions {
  bool injective = false;
  std::uint64_t node_budget = 0;  // 0 = unlimited
  // Optional allowed host vertices per pattern vertex.
  const std::vector<Bitset>* domains = nullptr;
  // Only first-level candidates with (rank % stride == offset) are explored.
  std::uint32_t stride = 1;
  std::uint32_t offset = 0;
};

struct MatchStats {
  std::uint64_t nodes = 0;
  std::uint64_t matches = 0;
  bool budget_exceeded = false;
  bool stopped = false;  // visitor asked to stop
};

// Backtracking search for maps pattern -> host sending every pattern edge
// onto a host edge. Pattern vertices are visited in a fixed order: most
// shadow-neighbours already placed first, then higher shadow degree, then
// lower id. Candidates for a vertex are the intersection of the host shadow
// neighbourhoods of its placed shadow neighbours, so for a non-injective
// search every edge still lands on k distinct vertices.
class Matcher {
 public:
  Matcher(const KGraph& pattern, const KGraph& host);

  const std::vector<Vertex>& order() const { return order_; }

  // visit(std::span<const Vertex> map) -> bool; map[p] is the image of
  // pattern vertex p. Returning false stops the search.
  template <class Visit>
  MatchStats run(const MatchOptions& opt, Visit&& visit) const;

 private:
  struct Step {
    Vertex vertex;
    std::vector<Vertex> placed_neighbours;          // pattern vertices
    std::vector<std::vector<Vertex>> closing_edges;  // pattern edges completed here
  };

  Bitset initial_domain(Vertex p, const MatchOptions& opt) const;

  const KGraph& pattern_;
  const KGraph& host_;
  Graph host_shadow_;
  std::vector<std::size_t> host_edge_degree_;
  std::vector<std::size_t> pattern_edge_degree_;
  std::vector<std::size_t> pattern_shadow_degree_;
  std::vector<Vertex> order_;
  std::vector<Step> steps_;
};

template <class Visit>
MatchStats Matcher::run(const MatchOptions& opt, Visit&& visit) const {
  MatchStats stats;
  const std::size_t n = order_.size();
  const Vertex hn = host_.num_vertices();
  std::vector<Bitset> domain(n);
  for (Vertex p = 0; p < n; ++p) domain[p] = initial_domain(p, opt);
  std::vector<Bitset> cand(n, Bitset(hn));
  Bitset used(hn);
  std::vector<Vertex> map(n, 0);
  std::vector<Vertex> img(pattern_.k());

  auto rec = [&](auto& self, std::size_t depth) -> bool {
    if (depth == n) {
      ++stats.matches;
      if (!visit(std::span<const Vertex>(map))) {
        stats.stopped = true;
        return false;
      }
      return true;
    }
    const Step& step = steps_[depth];
    Bitset& c = cand[depth];
    c = domain[step.vertex];
    for (Vertex q : step.placed_neighbours) c &= host_shadow_.neighbors(map[q]);
    if (opt.injective) c -= used;
    std::uint32_t rank = 0;
    for (auto x = c.find_first(); x != Bitset::npos; x = c.find_next(x), ++rank) {
      if (depth == 0 && opt.stride > 1 && rank % opt.stride != opt.offset) continue;
      if (opt.node_budget && stats.nodes >= opt.node_budget) {
        stats.budget_exceeded = true;
        return false;
      }
      ++stats.nodes;
      map[step.vertex] = static_cast<Vertex>(x);
      bool ok = true;
      for (const auto& e : step.closing_edges) {
        for (std::size_t i = 0; i < e.size(); ++i) img[i] = map[e[i]];
        if (!host_.has_edge_unsorted(img)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used.set(x);
      bool cont = self(self, depth + 1);
      used.reset(x);
      if (!cont) return false;
    }
    return true;
  };
  if (n == 0) {
    ++stats.matches;
    stats.stopped = !visit(std::span<const Vertex>(map));
    return stats;
  }
  rec(rec, 0);
  return stats;
}

}  // namespace hrlb::detail

#endif  // HRLB_SRC_MATCHER_HPP
