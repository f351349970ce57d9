#include <gtest/gtest.h>

#include <bit>

#include "gpos/distance_matrix.hpp"
#include "gpos/generators.hpp"
#include "gpos/graph_spec.hpp"

using namespace gpos;

TEST(Hypercube, SizesAndEdges) {
  EXPECT_EQ(hypercube(3).order(), 8u);
  EXPECT_EQ(hypercube(3).edge_count(), 12u);
  EXPECT_EQ(hypercube(1).edge_count(), 1u);
  EXPECT_EQ(hypercube(6).order(), 64u);
  EXPECT_EQ(hypercube(6).edge_count(), 192u);
  EXPECT_THROW(hypercube(0), std::invalid_argument);
  EXPECT_THROW(hypercube(kMaxHypercubeDimension + 1), std::invalid_argument);
}

TEST(Hypercube, RegularAndHammingMetric) {
  for (unsigned dim = 1; dim <= 6; ++dim) {
    const auto g = hypercube(dim);
    const auto d = all_pairs_distances(g);
    for (Vertex u = 0; u < g.order(); ++u) {
      EXPECT_EQ(g.degree(u), dim);
      for (Vertex v = 0; v < g.order(); ++v) EXPECT_EQ(d(u, v), static_cast<Distance>(std::popcount(u ^ v)));
    }
  }
}

TEST(Circulant, TableInstances) {
  const std::size_t a[] = {1, 3, 6, 8};
  const auto g = circulant(9, a);
  EXPECT_EQ(g.order(), 9u);
  EXPECT_EQ(g.edge_count(), 18u);
  for (Vertex v = 0; v < 9; ++v) EXPECT_EQ(g.degree(v), 4u);

  const std::size_t b[] = {1, 3, 17, 19};
  const auto h = circulant(20, b);
  EXPECT_EQ(h.order(), 20u);
  EXPECT_EQ(h.edge_count(), 40u);
}

TEST(Circulant, UnitStepsGiveCycle) {
  const std::size_t steps[] = {1, 4};
  EXPECT_EQ(circulant(5, steps), cycle(5));
}

TEST(Circulant, RotationIsAutomorphism) {
  const std::vector<std::pair<std::size_t, std::vector<std::size_t>>> cases = {
      {9, {1, 3, 6, 8}}, {9, {1, 2, 3, 6, 7, 8}}, {20, {1, 3, 17, 19}}, {12, {2, 5, 7, 10}}, {10, {5, 1, 9}}};
  for (const auto& [n, conn] : cases) {
    const auto g = circulant(n, conn);
    for (Vertex u = 0; u < n; ++u) {
      EXPECT_EQ(g.degree(u), conn.size());
      for (Vertex v = 0; v < n; ++v)
        EXPECT_EQ(g.adjacent(u, v), g.adjacent(static_cast<Vertex>((u + 1) % n), static_cast<Vertex>((v + 1) % n)));
    }
  }
}

TEST(Circulant, RejectsBadConnectionSets) {
  const std::size_t asym[] = {1, 3};
  EXPECT_THROW(circulant(9, asym), std::invalid_argument);
  const std::size_t zero[] = {0, 1, 8};
  EXPECT_THROW(circulant(9, zero), std::invalid_argument);
  const std::size_t ok[] = {1};
  EXPECT_THROW(circulant(2, ok), std::invalid_argument);
  EXPECT_THROW(circulant(9, std::span<const std::size_t>{}), std::invalid_argument);
}

TEST(BasicFamilies, EdgeCounts) {
  EXPECT_EQ(cycle(4).edge_count(), 4u);
  EXPECT_EQ(path(5).edge_count(), 4u);
  EXPECT_EQ(complete(5).edge_count(), 10u);
  EXPECT_EQ(path(1).order(), 1u);
  EXPECT_THROW(cycle(2), std::invalid_argument);
  EXPECT_THROW(path(0), std::invalid_argument);
  EXPECT_THROW(complete(0), std::invalid_argument);
}

TEST(GraphSpec, ParsesBuiltIns) {
  EXPECT_EQ(parse_graph_spec("q3").name(), "Q3");
  EXPECT_EQ(parse_graph_spec("c6").name(), "C6");
  EXPECT_EQ(parse_graph_spec("p4").name(), "P4");
  EXPECT_EQ(parse_graph_spec("k5").name(), "K5");
  EXPECT_EQ(parse_graph_spec("cay:9:8,6,3,1").name(), "Cay(Z9,{1,3,6,8})");
  EXPECT_EQ(make_graph(parse_graph_spec("cay:20:1,3,17,19")).edge_count(), 40u);

  const auto f = parse_graph_spec("file:data/C46.g6");
  EXPECT_EQ(f.family, GraphFamily::file);
  EXPECT_EQ(f.format, GraphFormat::graph6);
  EXPECT_EQ(f.name(), "C46");
  const auto f2 = parse_graph_spec("file:data/x.bin:edge-list");
  EXPECT_EQ(f2.file, "data/x.bin");
  EXPECT_EQ(f2.format, GraphFormat::edge_list);
}

TEST(GraphSpec, Errors) {
  EXPECT_THROW(parse_graph_spec("z9"), SpecError);
  EXPECT_THROW(parse_graph_spec("q"), SpecError);
  EXPECT_THROW(parse_graph_spec("qx"), SpecError);
  EXPECT_THROW(parse_graph_spec("cay:9"), SpecError);
  EXPECT_THROW(make_graph(parse_graph_spec("cay:9:1,3")), SpecError);
  EXPECT_THROW(make_graph(parse_graph_spec("q0")), SpecError);
  EXPECT_THROW(make_graph(parse_graph_spec("file:/nonexistent/graph.txt")), SpecError);
}
