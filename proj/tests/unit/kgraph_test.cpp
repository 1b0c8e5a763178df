#include <gtest/gtest.h>

#include "hrlb/error.hpp"
#include "hrlb/kgraph.hpp"
#include "support/oracles.hpp"

using namespace hrlb;

TEST(KGraph, RejectsMalformedEdges) {
  EXPECT_THROW(KGraph(3, 4, {{0, 1}}), ParameterError);
  EXPECT_THROW(KGraph(3, 4, {{0, 1, 1}}), ParameterError);
  EXPECT_THROW(KGraph(3, 4, {{0, 1, 4}}), ParameterError);
  EXPECT_THROW(KGraph(2, 3, {{0, 1}, {1, 0}}), ParameterError);
  EXPECT_THROW(KGraph(1, 3, {}), ParameterError);
}

TEST(KGraph, EdgesAreCanonicallyOrdered) {
  KGraph a(3, 5, {{4, 2, 0}, {1, 0, 3}});
  KGraph b(3, 5, {{0, 1, 3}, {0, 2, 4}});
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.has_edge_unsorted(std::vector<Vertex>{2, 4, 0}));
  EXPECT_FALSE(a.has_edge_unsorted(std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(a.edge_index(std::vector<Vertex>{0, 2, 4}), 1u);
}

TEST(KGraph, IsolatedVertices) {
  KGraph g(2, 4, {{0, 1}, {1, 2}});
  EXPECT_TRUE(g.has_isolated_vertices());
  auto norm = normalize(g);
  EXPECT_EQ(norm.graph.num_vertices(), 3u);
  EXPECT_EQ(norm.removed, std::vector<Vertex>{3});
  EXPECT_FALSE(norm.graph.has_isolated_vertices());
}

TEST(Shadow, CompleteThreeGraphHasCompleteShadow) {
  auto k43 = complete_kgraph(3, 4);
  auto s = shadow(k43, 2);
  EXPECT_EQ(s.num_edges(), 6u);
  EXPECT_EQ(shadow(k43, 3), k43);
  EXPECT_THROW(shadow(k43, 1), ParameterError);
  EXPECT_THROW(shadow(k43, 4), ParameterError);
}

TEST(Shadow, SingleEdge) {
  auto s = shadow_graph(single_edge(4));
  EXPECT_EQ(s.num_edges(), 6u);
  EXPECT_TRUE(s.is_clique(std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(Blowup, SizesAndNaturalHomomorphism) {
  auto tri = complete_kgraph(2, 3);
  auto b = blowup(tri, 2);
  EXPECT_EQ(b.graph.num_vertices(), 6u);
  EXPECT_EQ(b.graph.num_edges(), 12u);
  EXPECT_TRUE(is_homomorphism(b.graph, tri, b.natural));
  EXPECT_EQ(b.natural(clone_id(2, 1, 2)), 2u);

  auto one = blowup(tri, 1);
  EXPECT_EQ(one.graph, tri);
}

TEST(Blowup, ThreeGraphTransversals) {
  auto e = single_edge(3);
  auto b = blowup(e, 3);
  EXPECT_EQ(b.graph.num_edges(), 27u);
  EXPECT_TRUE(is_homomorphism(b.graph, e, b.natural));
}

TEST(Partite, Examples) {
  EXPECT_TRUE(is_k_partite(single_edge(3)).has_value());
  EXPECT_FALSE(is_k_partite(complete_kgraph(3, 4)).has_value());
  EXPECT_FALSE(is_k_partite(cycle_graph(5)).has_value());
  auto c6 = cycle_graph(6);
  auto p = is_k_partite(c6);
  ASSERT_TRUE(p.has_value());
  for (auto e : c6.edge_range()) EXPECT_NE((*p)[e[0]], (*p)[e[1]]);
}

TEST(Partite, AgreesWithColouringOracle) {
  for (const auto& g : oracle::small_corpus(20)) {
    auto p = is_k_partite(g);
    EXPECT_EQ(p.has_value(), oracle::is_k_partite_naive(g));
    if (p) {
      for (auto e : g.edge_range()) {
        std::vector<bool> seen(g.k(), false);
        for (Vertex x : e) {
          ASSERT_LT((*p)[x], g.k());
          EXPECT_FALSE(seen[(*p)[x]]);
          seen[(*p)[x]] = true;
        }
      }
    }
  }
}

TEST(VertexMaps, ComposeAndInverse) {
  VertexMap a{3, {2, 0, 1}};
  auto inv = inverse_permutation(a);
  EXPECT_EQ(compose(a, inv), identity_map(3));
  EXPECT_EQ(compose(inv, a), identity_map(3));
  EXPECT_TRUE(a.injective());
  EXPECT_FALSE((VertexMap{3, {0, 0, 1}}).injective());
}

TEST(Subgraphs, InducedAndImage) {
  auto k4 = complete_kgraph(2, 4);
  auto tri = induced_subgraph(k4, std::vector<Vertex>{0, 2, 3});
  EXPECT_EQ(tri, complete_kgraph(2, 3));
  VertexMap fold{3, {0, 1, 2, 0}};
  EXPECT_THROW(image(k4, fold), ParameterError);
  auto c4 = cycle_graph(4);
  VertexMap squash{2, {0, 1, 0, 1}};
  EXPECT_EQ(image(c4, squash).num_edges(), 1u);
}

TEST(Colouring, Cycles) {
  auto c5 = shadow_graph(cycle_graph(5));
  EXPECT_FALSE(color_graph(c5, 2).has_value());
  auto col = color_graph(c5, 3);
  ASSERT_TRUE(col.has_value());
  for (auto [u, v] : c5.edge_list()) EXPECT_NE((*col)[u], (*col)[v]);
}
