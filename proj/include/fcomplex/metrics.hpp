#pragma once

#include <vector>

#include "fcomplex/graph.hpp"

namespace fcomplex {

/// Hop distances from one source inside an induced subgraph.
struct DistanceRow {
  static constexpr int kUnreachable = -1;

  Vertex source = 0;
  NodeSet restriction;
  std::vector<int> distances;  // indexed by vertex id; kUnreachable outside restriction

  bool reachable(Vertex v) const { return distances[static_cast<std::size_t>(v)] >= 0; }
};

/// Breadth-first search confined to g[restriction].
/// Throws Error{kOutOfRange} when source is not in restriction.
DistanceRow bfs_within(const Graph& g, NodeSet restriction, Vertex source);

/// Vertices of `restriction` within `scale` hops of `source` inside
/// g[restriction], source included.
NodeSet ball_within(const Graph& g, NodeSet restriction, Vertex source, int scale);

/// Reachability count: number of vertices of `restriction` at distance at
/// most `scale` from `node` in g[restriction], counting `node` itself.
int reach_count(const Graph& g, NodeSet restriction, Vertex node, int scale);

/// Largest finite shortest-path distance; 0 for edgeless graphs. For a
/// disconnected graph this is the largest per-component diameter.
int diameter(const Graph& g);

/// Mean distance over unordered vertex pairs. Throws Error{kDisconnected}
/// for a disconnected graph and Error{kInvalidArgument} when n < 2.
double average_path_length(const Graph& g);

/// Fraction of neighbor pairs of v that are adjacent; 0 when deg(v) < 2.
double local_clustering(const Graph& g, Vertex v);
double average_clustering(const Graph& g);

bool is_connected(const Graph& g);

/// Maximal connected vertex sets, ordered by lowest member.
std::vector<NodeSet> connected_components(const Graph& g);

/// True when g[set] is connected (the empty set is not).
bool induces_connected(const Graph& g, NodeSet set);

}  // namespace fcomplex
