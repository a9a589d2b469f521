#pragma once

// Connected induced subgraph enumeration.
//
// The streaming engine is ESU (Wernicke): every connected vertex set is grown
// from its lowest-labelled member (the root), extending only through
// "exclusive" neighbors, i.e. vertices above the root that are adjacent to the
// newly added vertex but not to anything already in the set or its
// neighborhood. Each set is therefore reached along exactly one path and no
// seen-set is needed. Order is deterministic: roots ascend, and within a
// root the extension set is consumed lowest vertex first.

#include <cstdint>
#include <vector>

#include "fcomplex/graph.hpp"

namespace fcomplex {

/// counts_by_size[j] = number of connected induced subgraphs with j vertices
/// (index 0 is unused and always 0).
struct SubgraphCensus {
  std::vector<std::uint64_t> counts_by_size;

  int node_count() const { return static_cast<int>(counts_by_size.size()) - 1; }
  std::uint64_t count(int size) const { return counts_by_size.at(static_cast<std::size_t>(size)); }

  friend bool operator==(const SubgraphCensus&, const SubgraphCensus&) = default;
};

namespace detail {

void check_subgraph_size(const Graph& g, int size);

template <class Visitor>
void esu_extend(const Graph& g, int target, VertexMask members, int member_count,
                VertexMask extension, VertexMask closed_nbhd, VertexMask above_root,
                Visitor& visit) {
  if (member_count == target) {
    visit(NodeSet{members});
    return;
  }
  while (extension) {
    const Vertex w = std::countr_zero(extension);
    extension &= extension - 1;
    const VertexMask w_nbrs = g.neighbors(w);
    const VertexMask exclusive = w_nbrs & ~closed_nbhd & above_root;
    esu_extend(g, target, members | bit(w), member_count + 1, extension | exclusive,
               closed_nbhd | w_nbrs, above_root, visit);
  }
}

}  // namespace detail

/// Visits every connected vertex set of size `size` whose lowest member is
/// `root`. Work for distinct roots is independent.
template <class Visitor>
void for_each_connected_subgraph_rooted(const Graph& g, int size, Vertex root, Visitor&& visit) {
  detail::check_subgraph_size(g, size);
  const VertexMask above_root = low_mask(g.node_count()) & ~low_mask(root + 1);
  const VertexMask root_nbrs = g.neighbors(root);
  detail::esu_extend(g, size, bit(root), 1, root_nbrs & above_root, root_nbrs | bit(root),
                     above_root, visit);
}

/// Streams every connected induced subgraph with `size` vertices exactly once.
/// Throws Error{kOutOfRange} unless 1 <= size <= node_count.
template <class Visitor>
void for_each_connected_subgraph(const Graph& g, int size, Visitor&& visit) {
  detail::check_subgraph_size(g, size);
  for (Vertex root = 0; root < g.node_count(); ++root) {
    for_each_connected_subgraph_rooted(g, size, root, visit);
  }
}

/// The ESU stream materialized, in stream order.
std::vector<NodeSet> enumerate_connected_subgraphs(const Graph& g, int size);

/// Independent oracle: tests every subset mask for size and connectivity
/// (via bfs_within). Sorted ascending by mask. Requires node_count <= 24.
std::vector<NodeSet> brute_force_connected_subsets(const Graph& g, int size);

inline constexpr int kBruteForceMaxVertices = 24;

SubgraphCensus census(const Graph& g);

}  // namespace fcomplex
