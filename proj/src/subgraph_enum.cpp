#include "fcomplex/subgraph_enum.hpp"

#include <fmt/format.h>

#include "fcomplex/error.hpp"
#include "fcomplex/metrics.hpp"

namespace fcomplex {

namespace detail {

void check_subgraph_size(const Graph& g, int size) {
  if (size < 1 || size > g.node_count()) {
    throw Error(ErrorKind::kOutOfRange, fmt::format("subgraph size {} outside [1, {}]", size,
                                                    g.node_count()));
  }
}

}  // namespace detail

std::vector<NodeSet> enumerate_connected_subgraphs(const Graph& g, int size) {
  std::vector<NodeSet> out;
  for_each_connected_subgraph(g, size, [&](NodeSet s) { out.push_back(s); });
  return out;
}

std::vector<NodeSet> brute_force_connected_subsets(const Graph& g, int size) {
  if (g.node_count() > kBruteForceMaxVertices) {
    throw Error(ErrorKind::kGuardExceeded,
                fmt::format("brute-force enumeration is limited to {} vertices, graph has {}",
                            kBruteForceMaxVertices, g.node_count()));
  }
  detail::check_subgraph_size(g, size);
  std::vector<NodeSet> out;
  const VertexMask limit = VertexMask{1} << g.node_count();
  for (VertexMask mask = 1; mask < limit; ++mask) {
    const NodeSet set{mask};
    if (set.size() != size) continue;
    const DistanceRow row = bfs_within(g, set, set.lowest());
    bool connected = true;
    for (Vertex v : set) connected = connected && row.reachable(v);
    if (connected) out.push_back(set);
  }
  return out;
}

SubgraphCensus census(const Graph& g) {
  SubgraphCensus result;
  result.counts_by_size.assign(static_cast<std::size_t>(g.node_count()) + 1, 0);
  for (int size = 1; size <= g.node_count(); ++size) {
    std::uint64_t count = 0;
    for_each_connected_subgraph(g, size, [&](NodeSet) { ++count; });
    result.counts_by_size[static_cast<std::size_t>(size)] = count;
  }
  return result;
}

}  // namespace fcomplex
