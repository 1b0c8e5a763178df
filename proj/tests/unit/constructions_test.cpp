#include <gtest/gtest.h>

#include <set>

#include "hrlb/constructions.hpp"
#include "hrlb/counting.hpp"
#include "hrlb/error.hpp"

using namespace hrlb;

namespace {

BehrendSet set_of(std::int64_t m, unsigned t, std::vector<std::int64_t> elems) {
  BehrendSet b;
  b.m = m;
  b.t = t;
  b.elements = std::move(elems);
  return b;
}

std::set<std::vector<Vertex>> tuples(const CopyFamily& f) {
  std::set<std::vector<Vertex>> out;
  for (std::size_t i = 0; i < f.size(); ++i) out.emplace(f[i].begin(), f[i].end());
  return out;
}

bool spans_copy(const KGraph& host, const KGraph& f, std::span<const Vertex> tuple) {
  for (const auto& e : copy_edges(f, tuple))
    if (!host.has_edge_unsorted(e)) return false;
  return true;
}

// A one-copy instance: F itself with each vertex in its own part of size 1.
PartiteInstance single_copy(const KGraph& f) {
  PartiteInstance h;
  h.graph = f;
  h.n = 1;
  h.num_parts = f.num_vertices();
  h.placed = CopyFamily(f.num_vertices(), 1);
  std::vector<Vertex> id(f.num_vertices());
  for (Vertex i = 0; i < id.size(); ++i) id[i] = i;
  h.placed.push_back(id);
  h.meta.target = f;
  h.meta.path = "manual";
  return h;
}

}  // namespace

TEST(RsGraph, TriangleExample) {
  auto inst = rs_graph(cycle_graph(3), 9, set_of(3, 3, {1, 2}));
  EXPECT_EQ(inst.placed.size(), 6u);
  EXPECT_EQ(inst.num_parts, 3u);
  EXPECT_EQ(inst.graph.num_vertices(), 27u);
  std::vector<Vertex> x1y2{part_vertex(0, 9, 1), part_vertex(1, 9, 3), part_vertex(2, 9, 5)};
  EXPECT_TRUE(tuples(inst.placed).count(x1y2));
  for (std::size_t i = 0; i < inst.placed.size(); ++i)
    for (unsigned j = 0; j < 3; ++j) EXPECT_EQ(inst.part_of(inst.placed[i][j]), j);
  EXPECT_EQ(inst.meta.l, 2u);
}

TEST(RsGraph, EmptySet) {
  auto inst = rs_graph(cycle_graph(5), 20, set_of(4, 5, {}));
  EXPECT_EQ(inst.placed.size(), 0u);
  EXPECT_EQ(inst.graph.num_edges(), 0u);
}

TEST(RsGraph, FourCycle) {
  auto b = behrend_set(4, 4);
  auto inst = rs_graph(cycle_graph(4), 16, b);
  EXPECT_EQ(inst.placed.size(), 4 * b.size());
  EXPECT_TRUE(verify_pairwise_disjoint(inst.placed, 2).ok);
  auto canon = count_canonical_copies(inst, cycle_graph(4));
  EXPECT_EQ(canon.count, inst.placed.size());
}

TEST(RsGraph, ParameterErrors) {
  EXPECT_THROW(rs_graph(cycle_graph(3), 9, set_of(3, 3, {1, 2, 3})), ParameterError);
  EXPECT_THROW(rs_graph(cycle_graph(3), 9, set_of(4, 3, {4})), ParameterError);
  EXPECT_THROW(rs_graph(cycle_graph(3), 9, set_of(3, 4, {1})), ParameterError);
  EXPECT_THROW(rs_graph(KGraph(2, 3, {{0, 1}, {1, 2}}), 9, set_of(3, 3, {1})), ParameterError);
}

TEST(RsSimplex, TriangleExample) {
  auto inst = rs_simplex(3, 9, set_of(3, 3, {1, 2}));
  EXPECT_EQ(inst.placed.size(), 6u);
  std::vector<Vertex> x1y1{part_vertex(0, 9, 1), part_vertex(1, 9, 2), part_vertex(2, 9, 3)};
  EXPECT_TRUE(tuples(inst.placed).count(x1y1));
  EXPECT_EQ(rs_simplex(3, 9, set_of(3, 3, {})).placed.size(), 0u);
}

TEST(RsSimplex, NoOtherCopies) {
  auto b = max_solution_free_bruteforce(10, 3);
  BehrendSet bs = set_of(10, 3, b.elements);
  auto inst = rs_simplex(4, 40, bs);
  EXPECT_EQ(inst.placed.size(), 100 * b.size);
  EXPECT_EQ(count_copies(inst.graph, complete_kgraph(3, 4)).count, inst.placed.size());
  EXPECT_TRUE(verify_pairwise_disjoint(inst.placed, 3).ok);
}

TEST(Extension, ConstantAndBeta) {
  // s=3, r=1, k=3, l=2: d ranges over {1}: C(1,1) C(3,2) = 3.
  EXPECT_EQ(extension_constant(1, 3, 3, 2), 3u);
  EXPECT_EQ(extension_constant(3, 0, 2, 0), 4u);
}

TEST(Extension, EmptyBaseGivesDisjointFamily) {
  CopyFamily root(0);
  root.push_back({});
  auto res = extend_family(root, ExtensionParams{0, 3, 2, 0, 10, 5});
  EXPECT_TRUE(verify_pairwise_disjoint(res.family, 2).ok);
  EXPECT_GE(static_cast<double>(res.family.size()), res.lower_bound);
}

TEST(Extension, ZeroExponentKeepsConstantFraction) {
  for (Vertex n : {30u, 60u}) {
    auto base = rs_graph(cycle_graph(3), n, behrend_set(n / 3, 3));
    auto res = extend_family(base.placed, ExtensionParams{3, 1, 3, 2, n, 11});
    EXPECT_EQ(res.C, 6u);
    // Keep probability 1/C: sampled is near |S| n / C, far from |S| n.
    const double expected = static_cast<double>(base.placed.size()) * n / res.C;
    EXPECT_GT(res.sampled, expected / 2);
    EXPECT_LT(res.sampled, expected * 2);
  }
}

TEST(Extension, ItemsHoldAfterDeletion) {
  auto base = rs_graph(cycle_graph(3), 30, behrend_set(10, 3));
  auto base_tuples = tuples(base.placed);
  auto res = extend_family(base.placed, ExtensionParams{3, 1, 3, 2, 30, 1});
  ASSERT_EQ(res.family.tuple_length(), 4u);
  for (std::size_t i = 0; i < res.family.size(); ++i) {
    auto t = res.family[i];
    EXPECT_TRUE(base_tuples.count(std::vector<Vertex>(t.begin(), t.begin() + 3)));
    EXPECT_EQ(t[3] / 30, 3u);
  }
  EXPECT_FALSE(find_extension_violation(res.family, 3, 3, 2).has_value());
  EXPECT_GE(static_cast<double>(res.family.size()), res.lower_bound);
  EXPECT_DOUBLE_EQ(res.beta, 1.0 / (4.0 * res.C));
}

TEST(Extension, Preconditions) {
  CopyFamily twins(2, 1);
  twins.push_back(std::vector<Vertex>{0, 5});
  twins.push_back(std::vector<Vertex>{0, 6});
  EXPECT_THROW(extend_family(twins, ExtensionParams{2, 1, 2, 1, 5, 0}), PreconditionError);
  CopyFamily root(0);
  root.push_back({});
  EXPECT_THROW(extend_family(root, ExtensionParams{0, 1, 3, 0, 5, 0}), ParameterError);
}

TEST(Extension, RetryCapIsExplicit) {
  // With one candidate the keep probability 1/C can fail every attempt.
  CopyFamily root(0);
  root.push_back({});
  bool threw = false;
  for (std::uint64_t seed = 0; seed < 40 && !threw; ++seed) {
    try {
      extend_family(root, ExtensionParams{0, 1, 1, 0, 1, seed, 1});
    } catch (const ConstructionError&) {
      threw = true;
    }
  }
  EXPECT_TRUE(threw);
}

TEST(DisjointFamily, DeterministicShapes) {
  DesignOptions det{true};
  EXPECT_EQ(disjoint_family(5, 2, 2, 0, det).family.size(), 25u);
  auto matching = disjoint_family(7, 2, 1, 0, det);
  EXPECT_EQ(matching.family.size(), 7u);
  EXPECT_TRUE(verify_pairwise_disjoint(matching.family, 1).ok);
  EXPECT_EQ(disjoint_family(10, 3, 2, 0, det).family.size(), 100u);
  auto rs = disjoint_family(10, 5, 2, 0, det);
  EXPECT_TRUE(verify_pairwise_disjoint(rs.family, 2).ok);
  EXPECT_GT(rs.family.size(), 0u);
}

TEST(DisjointFamily, RandomRoute) {
  auto res = disjoint_family(10, 3, 2, 42);
  EXPECT_TRUE(verify_pairwise_disjoint(res.family, 2).ok);
  EXPECT_GE(static_cast<double>(res.family.size()), res.lower_bound);
  EXPECT_EQ(res.family, disjoint_family(10, 3, 2, 42).family);
  EXPECT_THROW(disjoint_family(10, 2, 3, 0), ParameterError);
}

TEST(HardInstance, Triangle) {
  auto k3 = complete_kgraph(2, 3);
  auto inst = hard_instance(k3, find_witness(k3), 60);
  EXPECT_EQ(inst.meta.path, "clique");
  EXPECT_EQ(count_copies(inst.graph, k3).count, inst.placed.size());
  EXPECT_LE(inst.placed.size(), 3600u);
}

TEST(HardInstance, Pentagon) {
  auto c5 = cycle_graph(5);
  auto inst = hard_instance(c5, find_witness(c5), 50);
  EXPECT_EQ(inst.meta.path, "cycle");
  EXPECT_TRUE(verify_edge_disjoint(c5, inst.placed).ok);
  EXPECT_LE(count_canonical_copies(inst, c5).count, 50ull * 50 * 50 * 50);
}

TEST(HardInstance, CompleteThreeGraph) {
  auto f = complete_kgraph(3, 4);
  auto inst = hard_instance(f, find_witness(f), 40);
  EXPECT_EQ(count_copies(inst.graph, f).count, inst.placed.size());
  EXPECT_TRUE(is_homomorphism(inst.graph, f, inst.part_collapse()));
}

TEST(HardInstance, RejectsBadInput) {
  auto c5 = cycle_graph(5);
  EXPECT_THROW(hard_instance(c5, CliqueWitness{{0, 1, 2}, 3}, 30), PreconditionError);
  EXPECT_THROW(hard_instance(cycle_graph(6), CycleWitness{{0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5}}, 30),
               PreconditionError);
}

TEST(HardInstance, SameSeedSameInstance) {
  auto f = complete_kgraph(3, 4);
  HardInstanceOptions opt;
  opt.seed = 9;
  EXPECT_EQ(hard_instance(f, find_witness(f), 20, opt), hard_instance(f, find_witness(f), 20, opt));
}

TEST(Amplify, TrivialBlowup) {
  auto k3 = complete_kgraph(2, 3);
  auto h = single_copy(k3);
  auto res = amplify_blowup(h, k3, 5);
  EXPECT_EQ(res.b, 1u);
  EXPECT_EQ(res.graph, h.graph);
  EXPECT_EQ(tuples(res.copies), tuples(h.placed));
}

TEST(Amplify, TriangleIntoFourBlowup) {
  auto k3 = complete_kgraph(2, 3);
  auto h = single_copy(k3);
  AmplifyOptions det;
  det.design.deterministic = true;
  auto res = amplify_blowup(h, k3, 12, det);
  EXPECT_EQ(res.b, 4u);
  EXPECT_EQ(res.copies.size(), 16u);
  EXPECT_TRUE(verify_edge_disjoint(k3, res.copies).ok);
  EXPECT_TRUE(is_homomorphism(res.graph, k3, res.phi_psi));

  auto random = amplify_blowup(h, k3, 12);
  EXPECT_GE(random.copies.size(), 1u);
  EXPECT_TRUE(verify_edge_disjoint(k3, random.copies).ok);
  for (std::size_t i = 0; i < random.copies.size(); ++i)
    EXPECT_TRUE(spans_copy(random.graph, k3, random.copies[i]));

  EXPECT_LE(count_copies(res.graph, k3).count, 64u);
}

TEST(Lift, IdentityWhenEqual) {
  auto k3 = complete_kgraph(2, 3);
  std::vector<std::vector<Vertex>> copies{{0, 1, 2}};
  auto res = lift_to_supergraph(k3, copies, k3, k3);
  EXPECT_EQ(res.hom, identity_map(3));
  EXPECT_TRUE(res.embedding.injective());
  EXPECT_EQ(res.graph.num_vertices(), 9u);
  ASSERT_EQ(res.copies.size(), 1u);
  EXPECT_TRUE(spans_copy(res.graph, k3, res.copies[0]));
}

TEST(Lift, TriangleWithPendantEdge) {
  auto k3 = complete_kgraph(2, 3);
  KGraph f(2, 4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  KGraph bowtie(2, 5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
  std::vector<std::vector<Vertex>> copies{{0, 1, 2}, {0, 3, 4}};
  auto res = lift_to_supergraph(bowtie, copies, k3, f);
  ASSERT_EQ(res.copies.size(), 2u);
  EXPECT_TRUE(verify_edge_disjoint(f, res.copies).ok);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_TRUE(spans_copy(res.graph, f, res.copies[i]));
  EXPECT_TRUE(is_homomorphism(f, k3, res.hom));
}

TEST(Lift, Preconditions) {
  auto k3 = complete_kgraph(2, 3);
  std::vector<std::vector<Vertex>> shared{{0, 1, 2}, {0, 1, 2}};
  EXPECT_THROW(lift_to_supergraph(k3, shared, k3, k3), PreconditionError);
  // K3 does not embed in C5.
  std::vector<std::vector<Vertex>> one{{0, 1, 2}};
  EXPECT_THROW(lift_to_supergraph(k3, one, k3, cycle_graph(5)), PreconditionError);
}
