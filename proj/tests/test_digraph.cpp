#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace cyclo;
using cyclo::testing::random_connected_digraph;
using cyclo::testing::random_digraph;

TEST(Digraph, PairStatesSeenFromEitherEnd) {
  Digraph d(3);
  d.add_arc(2, 0);
  d.add_digon(1, 2);
  EXPECT_EQ(d.state(2, 0), PairState::Forward);
  EXPECT_EQ(d.state(0, 2), PairState::Backward);
  EXPECT_EQ(d.state(2, 1), PairState::Digon);
  EXPECT_EQ(d.state(0, 1), PairState::None);
  EXPECT_EQ(d.entry(2, 0), GaussInt(0, 1));
  EXPECT_EQ(d.entry(0, 2), GaussInt(0, -1));
  EXPECT_THROW(d.add_digon(1, 1), ContractViolation);
  EXPECT_THROW(d.state(0, 3), ContractViolation);
}

TEST(Digraph, ColexPairOrder) {
  EXPECT_EQ(pair_index(0, 1), 0);
  EXPECT_EQ(pair_index(0, 2), 1);
  EXPECT_EQ(pair_index(1, 2), 2);
  EXPECT_EQ(pair_index(3, 0), 3);
  EXPECT_EQ(pair_count(5), 10);
}

TEST(Digraph, HermitianRoundTrip) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    const Digraph d = random_digraph(rng, 1 + static_cast<int>(rng() % 9));
    const HermMatrix h = d.hermitian_adjacency();
    EXPECT_TRUE(h.is_adjacency_class());
    EXPECT_EQ(Digraph::from_hermitian(h), d);
    EXPECT_EQ(d.converse().hermitian_adjacency(), h.conjugated());
    EXPECT_EQ(d.converse().converse(), d);
  }
}

TEST(Digraph, FromHermitianRejectsEntriesOutsideTheAlphabet) {
  HermMatrix h(2);
  h.set(0, 1, GaussInt(-1));
  EXPECT_THROW(Digraph::from_hermitian(h), InvalidAdjacency);
  h.set(0, 1, GaussInt(1, 1));
  EXPECT_THROW(Digraph::from_hermitian(h), InvalidAdjacency);
  HermMatrix g(2);
  g.set(0, 0, GaussInt(1));
  EXPECT_THROW(Digraph::from_hermitian(g), InvalidAdjacency);
}

TEST(Digraph, SubdigraphRenumbersInListOrder) {
  Digraph d(4);
  d.add_arc(3, 1);
  d.add_digon(0, 3);
  const std::vector<int> w{3, 1};
  const Digraph s = d.subdigraph(w);
  EXPECT_EQ(s.state(0, 1), PairState::Forward);
  EXPECT_EQ(s.hermitian_adjacency(), d.hermitian_adjacency().principal_submatrix(w));
  const std::vector<int> bad{1, 1};
  EXPECT_THROW(d.subdigraph(bad), ContractViolation);
}

TEST(Digraph, ArcAndDigonLists) {
  Digraph d(4);
  d.add_arc(3, 0);
  d.add_digon(1, 2);
  d.add_arc(1, 3);
  EXPECT_EQ(d.digons(), (std::vector<std::pair<int, int>>{{1, 2}}));
  EXPECT_EQ(d.arcs(), (std::vector<std::pair<int, int>>{{3, 0}, {1, 3}}));
}

TEST(Digraph, Connectivity) {
  Digraph d(3);
  d.add_arc(0, 1);
  EXPECT_FALSE(d.is_connected());
  d.add_arc(2, 1);
  EXPECT_TRUE(d.is_connected());
  EXPECT_TRUE(Digraph(1).is_connected());
}

TEST(OddArcCycle, SpecExamples) {
  EXPECT_TRUE(small_family(CatalogRef::dn(3)).has_odd_arc_cycle());
  Digraph c4(4);
  for (int x = 0; x < 4; ++x) c4.add_digon(x, (x + 1) % 4);
  EXPECT_FALSE(c4.has_odd_arc_cycle());
  EXPECT_FALSE(small_family(CatalogRef::ctilde(4)).has_odd_arc_cycle());
  Digraph split(3);
  split.add_arc(0, 1);
  EXPECT_THROW(split.has_odd_arc_cycle(), ContractViolation);
}

TEST(OddArcCycle, EquivalentToConnectedAssociatedSignedGraph) {
  std::mt19937_64 rng(32);
  int odd = 0;
  for (int t = 0; t < 400; ++t) {
    const Digraph d = random_connected_digraph(rng, 2 + static_cast<int>(rng() % 7));
    const bool has = d.has_odd_arc_cycle();
    odd += has;
    EXPECT_EQ(has, associated_signed_graph(d).is_connected());
  }
  EXPECT_GT(odd, 50);
  EXPECT_LT(odd, 400);
}

TEST(Graph, BipartitionAndComponents) {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  EXPECT_FALSE(g.is_connected());
  const auto id = g.component_ids();
  EXPECT_EQ(id[0], id[2]);
  EXPECT_NE(id[0], id[3]);
  ASSERT_TRUE(g.bipartition());
  EXPECT_NE((*g.bipartition())[0], (*g.bipartition())[1]);
  g.add_edge(0, 2);
  EXPECT_FALSE(g.bipartition());
}
