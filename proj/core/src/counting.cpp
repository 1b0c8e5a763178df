#include "hrlb/counting.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <thread>

#include "hrlb/error.hpp"
#include "hrlb/homomorphism.hpp"
#include "matcher.hpp"

namespace hrlb {

namespace {

struct Tally {
  std::uint64_t labeled = 0;
  std::uint64_t nodes = 0;
  bool exceeded = false;
};

Tally count_labeled(const KGraph& host, const KGraph& f, const CountOptions& opt,
                    const std::vector<Bitset>* domains) {
  detail::Matcher m(f, host);
  const unsigned threads = std::max(1u, opt.threads);
  auto run_slice = [&](std::uint32_t offset, std::uint64_t budget) {
    detail::MatchOptions mo;
    mo.injective = true;
    mo.node_budget = budget;
    mo.domains = domains;
    mo.stride = threads;
    mo.offset = offset;
    auto stats = m.run(mo, [](std::span<const Vertex>) { return true; });
    return Tally{stats.matches, stats.nodes, stats.budget_exceeded};
  };
  if (threads == 1) return run_slice(0, opt.node_budget);

  const std::uint64_t share = opt.node_budget ? std::max<std::uint64_t>(1, opt.node_budget / threads) : 0;
  std::vector<Tally> parts(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] { parts[t] = run_slice(t, share); });
  for (auto& th : pool) th.join();
  Tally total;
  for (const auto& p : parts) {
    total.labeled += p.labeled;
    total.nodes += p.nodes;
    total.exceeded = total.exceeded || p.exceeded;
  }
  return total;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::string_view to_string(CountMode m) {
  return m == CountMode::general ? "general" : "canonical-partite";
}

CountReport count_copies(const KGraph& host, const KGraph& f, const CountOptions& opt) {
  if (host.k() != f.k()) throw ParameterError("count_copies: uniformity mismatch");
  const auto start = std::chrono::steady_clock::now();
  CountReport rep;
  rep.mode = CountMode::general;
  rep.host_vertices = host.num_vertices();
  rep.host_edges = host.num_edges();
  rep.automorphisms = count_automorphisms(f);
  if (f.num_vertices() <= host.num_vertices()) {
    auto t = count_labeled(host, f, opt, nullptr);
    rep.labeled = t.labeled;
    rep.nodes = t.nodes;
    rep.exceeded = t.exceeded;
  }
  if (!rep.exceeded)
    check(rep.labeled % rep.automorphisms == 0, "count_copies: embeddings not divisible by |Aut(F)|");
  rep.count = rep.labeled / rep.automorphisms;
  rep.elapsed_seconds = seconds_since(start);
  return rep;
}

CountReport count_canonical_copies(const KGraph& host, Vertex n, const KGraph& target, const CountOptions& opt) {
  if (host.k() != target.k()) throw ParameterError("count_canonical_copies: uniformity mismatch");
  if (n == 0 || static_cast<std::uint64_t>(target.num_vertices()) * n > host.num_vertices())
    throw ParameterError("count_canonical_copies: host has fewer parts than the target has vertices");
  const auto start = std::chrono::steady_clock::now();
  CountReport rep;
  rep.mode = CountMode::canonical_partite;
  rep.host_vertices = host.num_vertices();
  rep.host_edges = host.num_edges();
  std::vector<Bitset> domains(target.num_vertices(), Bitset(host.num_vertices()));
  for (Vertex i = 0; i < target.num_vertices(); ++i)
    for (Vertex a = 0; a < n; ++a) domains[i].set(i * n + a);
  auto t = count_labeled(host, target, opt, &domains);
  rep.labeled = rep.count = t.labeled;
  rep.nodes = t.nodes;
  rep.exceeded = t.exceeded;
  rep.elapsed_seconds = seconds_since(start);
  return rep;
}

CountReport count_canonical_copies(const PartiteInstance& inst, const KGraph& target, const CountOptions& opt) {
  return count_canonical_copies(inst.graph, inst.n, target, opt);
}

std::vector<VertexMap> enumerate_embeddings(const KGraph& host, const KGraph& f, std::size_t limit) {
  if (host.k() != f.k()) throw ParameterError("enumerate_embeddings: uniformity mismatch");
  std::vector<VertexMap> out;
  if (f.num_vertices() > host.num_vertices()) return out;
  detail::Matcher m(f, host);
  detail::MatchOptions mo;
  mo.injective = true;
  bool over = false;
  m.run(mo, [&](std::span<const Vertex> map) {
    if (limit && out.size() == limit) {
      over = true;
      return false;
    }
    out.push_back(VertexMap{host.num_vertices(), std::vector<Vertex>(map.begin(), map.end())});
    return true;
  });
  if (over) throw BudgetExceeded("enumerate_embeddings: more than " + std::to_string(limit) + " embeddings");
  return out;
}

std::vector<Copy> enumerate_copies(const KGraph& host, const KGraph& f, std::size_t limit) {
  std::vector<Copy> out;
  std::map<std::pair<std::vector<Vertex>, std::vector<Edge>>, std::size_t> seen;
  for (const auto& phi : enumerate_embeddings(host, f, limit)) {
    std::vector<Vertex> vs = phi.image;
    std::sort(vs.begin(), vs.end());
    auto es = copy_edges(f, phi.image);
    std::sort(es.begin(), es.end());
    if (seen.emplace(std::make_pair(vs, es), out.size()).second) out.push_back(Copy{phi.image, std::move(es)});
  }
  return out;
}

DisjointnessCheck verify_pairwise_disjoint(const CopyFamily& fam, unsigned ell) {
  std::vector<std::vector<Vertex>> sorted(fam.size());
  for (std::size_t i = 0; i < fam.size(); ++i) {
    sorted[i].assign(fam[i].begin(), fam[i].end());
    std::sort(sorted[i].begin(), sorted[i].end());
  }
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      const auto& a = sorted[i];
      const auto& b = sorted[j];
      std::size_t shared = 0, x = 0, y = 0;
      while (x < a.size() && y < b.size() && shared < ell) {
        if (a[x] < b[y]) ++x;
        else if (b[y] < a[x]) ++y;
        else ++shared, ++x, ++y;
      }
      if (shared >= ell) return {false, std::make_pair(i, j), shared};
    }
  }
  return {};
}

DisjointnessCheck verify_edge_disjoint(std::span<const std::vector<Edge>> copies) {
  std::vector<std::pair<Edge, std::size_t>> owners;
  for (std::size_t i = 0; i < copies.size(); ++i)
    for (const auto& e : copies[i]) {
      Edge s = e;
      std::sort(s.begin(), s.end());
      owners.emplace_back(std::move(s), i);
    }
  std::sort(owners.begin(), owners.end());
  owners.erase(std::unique(owners.begin(), owners.end()), owners.end());
  std::optional<std::pair<std::size_t, std::size_t>> first;
  for (std::size_t a = 0; a + 1 < owners.size(); ++a) {
    if (owners[a].first != owners[a + 1].first) continue;
    // Owners of one edge are sorted, so the first two are its smallest pair.
    auto p = std::make_pair(owners[a].second, owners[a + 1].second);
    if (!first || p < *first) first = p;
    while (a + 1 < owners.size() && owners[a].first == owners[a + 1].first) ++a;
  }
  if (!first) return {};
  const auto& ea = copies[first->first];
  const auto& eb = copies[first->second];
  std::vector<Edge> sa, sb;
  for (auto e : ea) std::sort(e.begin(), e.end()), sa.push_back(std::move(e));
  for (auto e : eb) std::sort(e.begin(), e.end()), sb.push_back(std::move(e));
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  std::vector<Edge> common;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
  return {false, first, common.size()};
}

DisjointnessCheck verify_edge_disjoint(const KGraph& target, const CopyFamily& copies) {
  std::vector<std::vector<Edge>> edges(copies.size());
  for (std::size_t i = 0; i < copies.size(); ++i) edges[i] = copy_edges(target, copies[i]);
  return verify_edge_disjoint(edges);
}

}  // namespace hrlb
