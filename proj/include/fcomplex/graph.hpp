#pragma once

// Undirected simple graphs of at most 64 vertices with one adjacency word per
// vertex, plus the named topology generators and text I/O.

#include <bit>
#include <cstdint>
#include <iterator>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fcomplex {

using Vertex = int;
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexMask bit(Vertex v) noexcept { return VertexMask{1} << v; }

/// Mask with the low `n` bits set.
inline constexpr VertexMask low_mask(int n) noexcept {
  return n >= kMaxVertices ? ~VertexMask{0} : bit(n) - 1;
}

/// A set of vertices of one graph, stored as a bit mask.
class NodeSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Vertex;

    iterator() = default;
    explicit iterator(VertexMask rest) : rest_(rest) {}
    Vertex operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const iterator&) const = default;

   private:
    VertexMask rest_ = 0;
  };

  constexpr NodeSet() = default;
  constexpr explicit NodeSet(VertexMask members) : members_(members) {}

  static NodeSet all(int node_count) { return NodeSet{low_mask(node_count)}; }
  static NodeSet single(Vertex v) { return NodeSet{bit(v)}; }

  constexpr VertexMask mask() const noexcept { return members_; }
  int size() const noexcept { return std::popcount(members_); }
  bool empty() const noexcept { return members_ == 0; }
  bool contains(Vertex v) const noexcept {
    return v >= 0 && v < kMaxVertices && (members_ >> v) & 1U;
  }
  Vertex lowest() const noexcept { return std::countr_zero(members_); }

  iterator begin() const { return iterator{members_}; }
  iterator end() const { return iterator{}; }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  friend constexpr bool operator==(NodeSet, NodeSet) = default;
  friend constexpr auto operator<=>(NodeSet a, NodeSet b) { return a.members_ <=> b.members_; }

 private:
  VertexMask members_ = 0;
};

using Edge = std::pair<Vertex, Vertex>;

/// Immutable undirected simple graph. Vertices are 0..node_count()-1.
class Graph {
 public:
  /// Builds a graph from an edge list. Duplicate and reversed pairs collapse.
  /// Throws Error{kCapExceeded | kOutOfRange | kSelfLoop}.
  static Graph from_edges(int node_count, std::span<const Edge> edges);
  static Graph from_edges(int node_count, std::initializer_list<Edge> edges) {
    return from_edges(node_count, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Builds a graph from neighbor masks; rows must be symmetric and irreflexive.
  static Graph from_adjacency(std::vector<VertexMask> rows);

  int node_count() const noexcept { return static_cast<int>(rows_.size()); }
  int edge_count() const noexcept { return edge_count_; }

  VertexMask neighbors(Vertex v) const { return rows_[static_cast<std::size_t>(v)]; }
  bool adjacent(Vertex u, Vertex v) const { return (neighbors(u) >> v) & 1U; }
  int degree(Vertex v) const { return std::popcount(neighbors(v)); }
  NodeSet vertices() const { return NodeSet::all(node_count()); }

  /// Union of the open neighborhoods of every vertex in `set`.
  VertexMask neighbors_of(NodeSet set) const {
    VertexMask out = 0;
    for (Vertex v : set) out |= neighbors(v);
    return out;
  }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Graph with vertex v renamed to permutation[v].
  Graph relabeled(std::span<const Vertex> permutation) const;

  std::span<const VertexMask> adjacency_rows() const noexcept { return rows_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  explicit Graph(std::vector<VertexMask> rows);

  std::vector<VertexMask> rows_;
  int edge_count_ = 0;
};

enum class TopologyKind { kBus, kRing, kStar, kMesh, kEmpty, kMooreMotif, kErdosRenyi };

struct TopologyFamily {
  TopologyKind kind = TopologyKind::kEmpty;
  int node_count = 0;
  double edge_probability = 0.0;  // erdos_renyi only
  std::uint64_t seed = 0;         // erdos_renyi only

  static TopologyFamily bus(int n) { return {TopologyKind::kBus, n}; }
  static TopologyFamily ring(int n) { return {TopologyKind::kRing, n}; }
  static TopologyFamily star(int n) { return {TopologyKind::kStar, n}; }
  static TopologyFamily mesh(int n) { return {TopologyKind::kMesh, n}; }
  static TopologyFamily empty(int n) { return {TopologyKind::kEmpty, n}; }
  static TopologyFamily moore_motif() { return {TopologyKind::kMooreMotif, 9}; }
  static TopologyFamily erdos_renyi(int n, double p, std::uint64_t seed) {
    return {TopologyKind::kErdosRenyi, n, p, seed};
  }
};

/// Parses "bus", "ring", "star", "mesh", "empty", "moore" or "erdos-renyi".
TopologyKind parse_topology_kind(std::string_view name);
std::string_view to_string(TopologyKind kind) noexcept;

/// bus = path, ring = cycle, star = vertex 0 joined to every other vertex,
/// mesh = complete graph, moore_motif = 3x3 king graph (node_count ignored),
/// erdos_renyi = every pair kept independently with the given probability.
Graph generate(const TopologyFamily& family);

/// Deterministic G(n, p) draws. Uses std::mt19937_64 (whose output sequence
/// the standard fixes) and converts each 64-bit draw to a uniform in [0, 1)
/// as (x >> 11) * 2^-53; pair (u, v), u < v, is visited in lexicographic
/// order and kept when its uniform is below p. Bit-identical on every
/// conforming platform.
class ErdosRenyiSource {
 public:
  ErdosRenyiSource(int node_count, double edge_probability, std::uint64_t seed);
  Graph next();

 private:
  int node_count_;
  double edge_probability_;
  std::mt19937_64 engine_;
};

/// Edge-list text format: first non-comment line "N M", then M lines "u v".
/// Lines starting with '#' are comments. Throws Error{kMalformed} for
/// malformed or inconsistent content and Error{kCapExceeded} for N > 64.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// Undirected DOT document; every vertex is declared, then every edge.
std::string write_dot(const Graph& g);

/// Reads and parses an edge-list file. Throws Error{kIo} when unreadable.
Graph read_edge_list_file(const std::string& path);

}  // namespace fcomplex
