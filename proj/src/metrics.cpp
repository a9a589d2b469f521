#include "fcomplex/metrics.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "fcomplex/error.hpp"

namespace fcomplex {

namespace {

void require_member(NodeSet restriction, Vertex v) {
  if (!restriction.contains(v)) {
    throw Error(ErrorKind::kOutOfRange, fmt::format("vertex {} is not in the restriction", v));
  }
}

// Breadth-first layers over masks; calls visit(layer_mask, depth) for depth >= 1.
template <class Visit>
void bfs_layers(const Graph& g, NodeSet restriction, Vertex source, int max_depth, Visit&& visit) {
  VertexMask seen = bit(source);
  VertexMask frontier = seen;
  for (int depth = 1; depth <= max_depth && frontier; ++depth) {
    frontier = g.neighbors_of(NodeSet{frontier}) & restriction.mask() & ~seen;
    seen |= frontier;
    if (frontier) visit(frontier, depth);
  }
}

}  // namespace

DistanceRow bfs_within(const Graph& g, NodeSet restriction, Vertex source) {
  require_member(restriction, source);
  restriction = NodeSet{restriction.mask() & low_mask(g.node_count())};
  DistanceRow row;
  row.source = source;
  row.restriction = restriction;
  row.distances.assign(static_cast<std::size_t>(g.node_count()), DistanceRow::kUnreachable);
  row.distances[static_cast<std::size_t>(source)] = 0;
  bfs_layers(g, restriction, source, g.node_count(), [&](VertexMask layer, int depth) {
    for (Vertex v : NodeSet{layer}) row.distances[static_cast<std::size_t>(v)] = depth;
  });
  return row;
}

NodeSet ball_within(const Graph& g, NodeSet restriction, Vertex source, int scale) {
  VertexMask seen = bit(source);
  VertexMask frontier = seen;
  for (int step = 0; step < scale && frontier; ++step) {
    frontier = g.neighbors_of(NodeSet{frontier}) & restriction.mask() & ~seen;
    seen |= frontier;
  }
  return NodeSet{seen};
}

int reach_count(const Graph& g, NodeSet restriction, Vertex node, int scale) {
  require_member(restriction, node);
  if (scale < 1) {
    throw Error(ErrorKind::kOutOfRange, fmt::format("scale must be >= 1, got {}", scale));
  }
  return ball_within(g, restriction, node, scale).size();
}

int diameter(const Graph& g) {
  int best = 0;
  const NodeSet all = g.vertices();
  for (Vertex s = 0; s < g.node_count(); ++s) {
    bfs_layers(g, all, s, g.node_count(), [&](VertexMask, int depth) { best = std::max(best, depth); });
  }
  return best;
}

double average_path_length(const Graph& g) {
  const int n = g.node_count();
  if (n < 2) {
    throw Error(ErrorKind::kInvalidArgument, "average path length needs at least two vertices");
  }
  if (!is_connected(g)) {
    throw Error(ErrorKind::kDisconnected, "average path length is undefined for a disconnected graph");
  }
  long long total = 0;
  const NodeSet all = g.vertices();
  for (Vertex s = 0; s < n; ++s) {
    bfs_layers(g, all, s, n, [&](VertexMask layer, int depth) {
      total += static_cast<long long>(depth) * std::popcount(layer);
    });
  }
  // every unordered pair was counted twice
  return static_cast<double>(total) / (static_cast<double>(n) * (n - 1));
}

double local_clustering(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.node_count()) {
    throw Error(ErrorKind::kOutOfRange, fmt::format("vertex {} out of range", v));
  }
  const VertexMask nbrs = g.neighbors(v);
  const int degree = std::popcount(nbrs);
  if (degree < 2) return 0.0;
  int twice_links = 0;
  for (Vertex u : NodeSet{nbrs}) twice_links += std::popcount(g.neighbors(u) & nbrs);
  const double possible = static_cast<double>(degree) * (degree - 1);
  return static_cast<double>(twice_links) / possible;
}

double average_clustering(const Graph& g) {
  double sum = 0.0;
  for (Vertex v = 0; v < g.node_count(); ++v) sum += local_clustering(g, v);
  return sum / g.node_count();
}

bool induces_connected(const Graph& g, NodeSet set) {
  if (set.empty()) return false;
  return ball_within(g, set, set.lowest(), kMaxVertices) == set;
}

bool is_connected(const Graph& g) { return induces_connected(g, g.vertices()); }

std::vector<NodeSet> connected_components(const Graph& g) {
  std::vector<NodeSet> out;
  VertexMask remaining = g.vertices().mask();
  while (remaining) {
    const Vertex root = std::countr_zero(remaining);
    const NodeSet component = ball_within(g, g.vertices(), root, kMaxVertices);
    out.push_back(component);
    remaining &= ~component.mask();
  }
  return out;
}

}  // namespace fcomplex
