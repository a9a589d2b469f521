#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fcomplex/error.hpp"
#include "fcomplex/graph.hpp"
#include "fcomplex/metrics.hpp"
#include "oracles.hpp"

using namespace fcomplex;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected fcomplex::Error";
  return ErrorKind::kIo;
}

void expect_invariants(const Graph& g) {
  int ordered_pairs = 0;
  for (Vertex u = 0; u < g.node_count(); ++u) {
    EXPECT_FALSE(g.adjacent(u, u));
    for (Vertex v = 0; v < g.node_count(); ++v) {
      EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
      ordered_pairs += g.adjacent(u, v);
    }
  }
  EXPECT_EQ(g.edge_count() * 2, ordered_pairs);
  EXPECT_GE(g.node_count(), 1);
  EXPECT_LE(g.node_count(), kMaxVertices);
}

}  // namespace

TEST(BuildGraph, PathGraph) {
  const Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(g.node_count(), 3);
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_FALSE(g.adjacent(0, 2));
}

TEST(BuildGraph, DuplicateCollapses) {
  EXPECT_EQ(Graph::from_edges(3, {{0, 1}, {1, 0}}).edge_count(), 1);
}

TEST(BuildGraph, Errors) {
  EXPECT_EQ(kind_of([] { Graph::from_edges(2, {{0, 0}}); }), ErrorKind::kSelfLoop);
  EXPECT_EQ(kind_of([] { Graph::from_edges(65, {}); }), ErrorKind::kCapExceeded);
  EXPECT_EQ(kind_of([] { Graph::from_edges(3, {{0, 3}}); }), ErrorKind::kOutOfRange);
  EXPECT_EQ(kind_of([] { Graph::from_edges(3, {{-1, 2}}); }), ErrorKind::kOutOfRange);
  EXPECT_NO_THROW(Graph::from_edges(64, {{0, 63}}));
}

TEST(BuildGraph, FromAdjacencyRejectsAsymmetry) {
  EXPECT_EQ(kind_of([] { Graph::from_adjacency({0b10, 0b00}); }), ErrorKind::kInvalidArgument);
}

TEST(Generate, FamilySizes) {
  for (int n = 2; n <= 16; ++n) {
    const Graph bus = generate(TopologyFamily::bus(n));
    const Graph star = generate(TopologyFamily::star(n));
    const Graph mesh = generate(TopologyFamily::mesh(n));
    const Graph empty = generate(TopologyFamily::empty(n));
    for (const Graph* g : {&bus, &star, &mesh, &empty}) expect_invariants(*g);
    EXPECT_EQ(bus.edge_count(), n - 1);
    EXPECT_EQ(star.edge_count(), n - 1);
    EXPECT_EQ(mesh.edge_count(), n * (n - 1) / 2);
    EXPECT_EQ(empty.edge_count(), 0);
    if (n >= 3) {
      const Graph ring = generate(TopologyFamily::ring(n));
      expect_invariants(ring);
      EXPECT_EQ(ring.edge_count(), n);
    }
  }
}

TEST(Generate, StarHasNoLeafEdges) {
  const Graph g = generate(TopologyFamily::star(7));
  EXPECT_EQ(g.degree(0), 6);
  for (Vertex v = 1; v < 7; ++v) EXPECT_EQ(g.degree(v), 1);
}

TEST(Generate, MeshDegrees) {
  const Graph g = generate(TopologyFamily::mesh(5));
  EXPECT_EQ(g.edge_count(), 10);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(g.degree(v), 4);
}

TEST(Generate, MooreMotif) {
  const Graph g = generate(TopologyFamily::moore_motif());
  EXPECT_EQ(g.node_count(), 9);
  EXPECT_EQ(g.edge_count(), 20);
  std::vector<int> degrees;
  for (Vertex v = 0; v < 9; ++v) degrees.push_back(g.degree(v));
  std::sort(degrees.begin(), degrees.end());
  EXPECT_EQ(degrees, (std::vector<int>{3, 3, 3, 3, 5, 5, 5, 5, 8}));
  // corners 0,2,6,8 have degree 3; edge midpoints 1,3,5,7 degree 5; centre 8
  for (Vertex v : {0, 2, 6, 8}) EXPECT_EQ(g.degree(v), 3);
  for (Vertex v : {1, 3, 5, 7}) EXPECT_EQ(g.degree(v), 5);
  EXPECT_EQ(g.degree(4), 8);
  EXPECT_EQ(diameter(g), 2);
  // moore_motif ignores any requested size
  EXPECT_EQ(generate({TopologyKind::kMooreMotif, 4}), g);
}

TEST(Generate, MooreMotifSymmetry) {
  // the dihedral symmetries of the grid are automorphisms
  const Graph g = generate(TopologyFamily::moore_motif());
  auto cell = [](int r, int c) { return r * 3 + c; };
  std::vector<Vertex> rotate(9), mirror(9);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      rotate[cell(r, c)] = cell(c, 2 - r);
      mirror[cell(r, c)] = cell(r, 2 - c);
    }
  EXPECT_EQ(g.relabeled(rotate), g);
  EXPECT_EQ(g.relabeled(mirror), g);
}

TEST(Generate, EmptyNine) { EXPECT_EQ(generate(TopologyFamily::empty(9)).edge_count(), 0); }

TEST(Generate, InvalidParameters) {
  EXPECT_EQ(kind_of([] { generate(TopologyFamily::ring(2)); }), ErrorKind::kInvalidArgument);
  EXPECT_EQ(kind_of([] { generate(TopologyFamily::bus(1)); }), ErrorKind::kInvalidArgument);
  EXPECT_EQ(kind_of([] { generate(TopologyFamily::erdos_renyi(5, 0.0, 1)); }),
            ErrorKind::kInvalidArgument);
  EXPECT_EQ(kind_of([] { generate(TopologyFamily::erdos_renyi(5, 1.0, 1)); }),
            ErrorKind::kInvalidArgument);
  EXPECT_EQ(kind_of([] { generate(TopologyFamily::mesh(65)); }), ErrorKind::kCapExceeded);
}

TEST(Generate, ErdosRenyiIsSeedDeterministic) {
  const auto a = generate(TopologyFamily::erdos_renyi(20, 0.3, 99));
  const auto b = generate(TopologyFamily::erdos_renyi(20, 0.3, 99));
  const auto c = generate(TopologyFamily::erdos_renyi(20, 0.3, 100));
  expect_invariants(a);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
}

TEST(Generate, ErdosRenyiPinnedStream) {
  // mt19937_64 seeded with 5489 starts 14514284786278117030, whose top 53
  // bits give u = 0.786820954...; the first pair (0,1) is present iff p > u.
  EXPECT_FALSE(generate(TopologyFamily::erdos_renyi(2, 0.78, 5489)).adjacent(0, 1));
  EXPECT_TRUE(generate(TopologyFamily::erdos_renyi(2, 0.79, 5489)).adjacent(0, 1));
}

TEST(Generate, ErdosRenyiDensity) {
  ErdosRenyiSource source(40, 0.25, 7);
  long edges = 0;
  for (int k = 0; k < 50; ++k) edges += source.next().edge_count();
  const double density = edges / (50.0 * 40 * 39 / 2);
  EXPECT_NEAR(density, 0.25, 0.01);
}

TEST(EdgeList, Parse) {
  const Graph g = parse_edge_list("3 2\n0 1\n1 2\n");
  EXPECT_EQ(g, Graph::from_edges(3, {{0, 1}, {1, 2}}));
}

TEST(EdgeList, CommentsAndMissingTrailingNewline) {
  const Graph g = parse_edge_list("# a path\n3 2\n# middle\n 0   1 \n2 1");
  EXPECT_EQ(g, Graph::from_edges(3, {{0, 1}, {1, 2}}));
}

TEST(EdgeList, WriteCanonicalOrder) {
  EXPECT_EQ(write_edge_list(generate(TopologyFamily::mesh(3))), "3 3\n0 1\n0 2\n1 2\n");
  EXPECT_EQ(write_edge_list(Graph::from_edges(4, {{3, 1}, {2, 0}})), "4 2\n0 2\n1 3\n");
}

TEST(EdgeList, Errors) {
  EXPECT_EQ(kind_of([] { parse_edge_list("3 1\n0 5\n"); }), ErrorKind::kOutOfRange);
  EXPECT_EQ(kind_of([] { parse_edge_list("3 1\n1 1\n"); }), ErrorKind::kSelfLoop);
  EXPECT_EQ(kind_of([] { parse_edge_list("three 1\n0 1\n"); }), ErrorKind::kMalformed);
  EXPECT_EQ(kind_of([] { parse_edge_list("3\n"); }), ErrorKind::kMalformed);
  EXPECT_EQ(kind_of([] { parse_edge_list("3 2\n0 1\n"); }), ErrorKind::kMalformed);
  EXPECT_EQ(kind_of([] { parse_edge_list("3 1\n0 1\n1 2\n"); }), ErrorKind::kMalformed);
  EXPECT_EQ(kind_of([] { parse_edge_list("3 1\n0 1 2\n"); }), ErrorKind::kMalformed);
  EXPECT_EQ(kind_of([] { parse_edge_list(""); }), ErrorKind::kMalformed);
  EXPECT_EQ(kind_of([] { parse_edge_list("100 0\n"); }), ErrorKind::kCapExceeded);
  EXPECT_EQ(kind_of([] { read_edge_list_file("/nonexistent/graph.txt"); }), ErrorKind::kIo);
}

TEST(EdgeList, RoundTripProperty) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 30);
    const Graph g = oracle::random_graph(rng, n, 0.2);
    EXPECT_EQ(parse_edge_list(write_edge_list(g)), g);
  }
}

TEST(Dot, EmptyGraphDeclaresVertices) {
  EXPECT_EQ(write_dot(generate(TopologyFamily::empty(2))), "graph G {\n  0;\n  1;\n}\n");
}

TEST(Dot, StatementCounts) {
  auto count = [](const std::string& text, const std::string& needle) {
    std::size_t hits = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++hits;
    return hits;
  };
  const std::string path = write_dot(Graph::from_edges(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(count(path, " -- "), 2U);
  EXPECT_EQ(count(path, ";\n"), 5U);
  EXPECT_EQ(count(write_dot(generate(TopologyFamily::mesh(3))), " -- "), 3U);
}

TEST(Relabel, RejectsNonPermutation) {
  const Graph g = generate(TopologyFamily::bus(3));
  EXPECT_EQ(kind_of([&] { g.relabeled(std::vector<Vertex>{0, 0, 1}); }), ErrorKind::kInvalidArgument);
}
