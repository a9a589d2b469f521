#include "fcomplex/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "fcomplex/error.hpp"

namespace fcomplex {

namespace {

void check_node_count(int node_count) {
  if (node_count > kMaxVertices) {
    throw Error(ErrorKind::kCapExceeded,
                fmt::format("graph has {} vertices; at most {} are supported", node_count,
                            kMaxVertices));
  }
  if (node_count < 1) {
    throw Error(ErrorKind::kOutOfRange,
                fmt::format("graph needs at least one vertex, got {}", node_count));
  }
}

}  // namespace

Graph::Graph(std::vector<VertexMask> rows) : rows_(std::move(rows)) {
  int twice = 0;
  for (VertexMask row : rows_) twice += std::popcount(row);
  edge_count_ = twice / 2;
}

Graph Graph::from_edges(int node_count, std::span<const Edge> edges) {
  check_node_count(node_count);
  std::vector<VertexMask> rows(static_cast<std::size_t>(node_count), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= node_count || v >= node_count) {
      throw Error(ErrorKind::kOutOfRange,
                  fmt::format("edge ({}, {}) has an endpoint outside [0, {})", u, v, node_count));
    }
    if (u == v) {
      throw Error(ErrorKind::kSelfLoop, fmt::format("self-loop at vertex {}", u));
    }
    rows[static_cast<std::size_t>(u)] |= bit(v);
    rows[static_cast<std::size_t>(v)] |= bit(u);
  }
  return Graph(std::move(rows));
}

Graph Graph::from_adjacency(std::vector<VertexMask> rows) {
  const int n = static_cast<int>(rows.size());
  check_node_count(n);
  const VertexMask valid = low_mask(n);
  for (Vertex v = 0; v < n; ++v) {
    const VertexMask row = rows[static_cast<std::size_t>(v)];
    if (row & ~valid) {
      throw Error(ErrorKind::kOutOfRange, fmt::format("row {} names a vertex >= {}", v, n));
    }
    if (row & bit(v)) throw Error(ErrorKind::kSelfLoop, fmt::format("self-loop at vertex {}", v));
    for (Vertex u : NodeSet{row}) {
      if (!(rows[static_cast<std::size_t>(u)] & bit(v))) {
        throw Error(ErrorKind::kInvalidArgument,
                    fmt::format("adjacency is not symmetric for ({}, {})", v, u));
      }
    }
  }
  return Graph(std::move(rows));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Vertex u = 0; u < node_count(); ++u) {
    for (Vertex v : NodeSet{neighbors(u) & ~low_mask(u + 1)}) out.emplace_back(u, v);
  }
  return out;
}

Graph Graph::relabeled(std::span<const Vertex> permutation) const {
  const int n = node_count();
  if (static_cast<int>(permutation.size()) != n) {
    throw Error(ErrorKind::kInvalidArgument, "permutation size differs from vertex count");
  }
  VertexMask seen = 0;
  for (Vertex p : permutation) {
    if (p < 0 || p >= n || (seen & bit(p))) {
      throw Error(ErrorKind::kInvalidArgument, "relabeling is not a permutation");
    }
    seen |= bit(p);
  }
  std::vector<VertexMask> rows(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    VertexMask mapped = 0;
    for (Vertex u : NodeSet{neighbors(v)}) mapped |= bit(permutation[static_cast<std::size_t>(u)]);
    rows[static_cast<std::size_t>(permutation[static_cast<std::size_t>(v)])] = mapped;
  }
  return Graph(std::move(rows));
}

TopologyKind parse_topology_kind(std::string_view name) {
  if (name == "bus") return TopologyKind::kBus;
  if (name == "ring") return TopologyKind::kRing;
  if (name == "star") return TopologyKind::kStar;
  if (name == "mesh") return TopologyKind::kMesh;
  if (name == "empty") return TopologyKind::kEmpty;
  if (name == "moore") return TopologyKind::kMooreMotif;
  if (name == "erdos-renyi") return TopologyKind::kErdosRenyi;
  throw Error(ErrorKind::kInvalidArgument, fmt::format("unknown topology '{}'", name));
}

std::string_view to_string(TopologyKind kind) noexcept {
  switch (kind) {
    case TopologyKind::kBus: return "bus";
    case TopologyKind::kRing: return "ring";
    case TopologyKind::kStar: return "star";
    case TopologyKind::kMesh: return "mesh";
    case TopologyKind::kEmpty: return "empty";
    case TopologyKind::kMooreMotif: return "moore";
    case TopologyKind::kErdosRenyi: return "erdos-renyi";
  }
  return "unknown";
}

namespace {

Graph king_graph_3x3() {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < 9; ++a) {
    for (Vertex b = a + 1; b < 9; ++b) {
      const int dr = std::abs(a / 3 - b / 3);
      const int dc = std::abs(a % 3 - b % 3);
      if (std::max(dr, dc) == 1) edges.emplace_back(a, b);
    }
  }
  return Graph::from_edges(9, edges);
}

void require_nodes(const TopologyFamily& family, int minimum) {
  if (family.node_count < minimum) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("{} topology needs at least {} vertices, got {}",
                            to_string(family.kind), minimum, family.node_count));
  }
}

}  // namespace

Graph generate(const TopologyFamily& family) {
  const int n = family.node_count;
  std::vector<Edge> edges;
  switch (family.kind) {
    case TopologyKind::kMooreMotif:
      return king_graph_3x3();
    case TopologyKind::kErdosRenyi:
      return ErdosRenyiSource(n, family.edge_probability, family.seed).next();
    case TopologyKind::kBus:
      require_nodes(family, 2);
      for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      break;
    case TopologyKind::kRing:
      require_nodes(family, 3);
      for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
      break;
    case TopologyKind::kStar:
      require_nodes(family, 2);
      for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;
    case TopologyKind::kMesh:
      require_nodes(family, 2);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      break;
    case TopologyKind::kEmpty:
      require_nodes(family, 1);
      break;
  }
  return Graph::from_edges(n, edges);
}

ErdosRenyiSource::ErdosRenyiSource(int node_count, double edge_probability, std::uint64_t seed)
    : node_count_(node_count), edge_probability_(edge_probability), engine_(seed) {
  check_node_count(node_count);
  if (!(edge_probability > 0.0 && edge_probability < 1.0)) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("edge probability must lie in (0, 1), got {}", edge_probability));
  }
}

Graph ErdosRenyiSource::next() {
  constexpr double kTwoPowMinus53 = 1.0 / 9007199254740992.0;
  std::vector<VertexMask> rows(static_cast<std::size_t>(node_count_), 0);
  for (Vertex u = 0; u < node_count_; ++u) {
    for (Vertex v = u + 1; v < node_count_; ++v) {
      const double uniform = static_cast<double>(engine_() >> 11) * kTwoPowMinus53;
      if (uniform < edge_probability_) {
        rows[static_cast<std::size_t>(u)] |= bit(v);
        rows[static_cast<std::size_t>(v)] |= bit(u);
      }
    }
  }
  return Graph::from_adjacency(std::move(rows));
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

long long parse_integer(std::string_view token, int line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw Error(ErrorKind::kMalformed,
                fmt::format("line {}: '{}' is not an integer", line_no, token));
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  long long node_count = -1;
  long long expected_edges = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (tokens.size() != 2) {
      throw Error(ErrorKind::kMalformed,
                  fmt::format("line {}: expected two fields, found {}", line_no, tokens.size()));
    }
    const long long a = parse_integer(tokens[0], line_no);
    const long long b = parse_integer(tokens[1], line_no);
    if (node_count < 0) {
      if (a > kMaxVertices) {
        throw Error(ErrorKind::kCapExceeded,
                    fmt::format("graph has {} vertices; at most {} are supported", a,
                                kMaxVertices));
      }
      if (a < 1 || b < 0) {
        throw Error(ErrorKind::kMalformed, fmt::format("line {}: invalid header", line_no));
      }
      node_count = a;
      expected_edges = b;
    } else {
      if (static_cast<long long>(edges.size()) == expected_edges) {
        throw Error(ErrorKind::kMalformed,
                    fmt::format("line {}: more than the declared {} edges", line_no,
                                expected_edges));
      }
      if (a < 0 || b < 0 || a >= node_count || b >= node_count) {
        throw Error(ErrorKind::kOutOfRange,
                    fmt::format("line {}: endpoint outside [0, {})", line_no, node_count));
      }
      if (a == b) {
        throw Error(ErrorKind::kSelfLoop, fmt::format("line {}: self-loop at {}", line_no, a));
      }
      edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (end == text.size()) break;
  }
  if (node_count < 0) throw Error(ErrorKind::kMalformed, "missing 'N M' header line");
  if (static_cast<long long>(edges.size()) != expected_edges) {
    throw Error(ErrorKind::kMalformed, fmt::format("declared {} edges but found {}",
                                                   expected_edges, edges.size()));
  }
  return Graph::from_edges(static_cast<int>(node_count), edges);
}

std::string write_edge_list(const Graph& g) {
  std::string out = fmt::format("{} {}\n", g.node_count(), g.edge_count());
  for (auto [u, v] : g.edges()) out += fmt::format("{} {}\n", u, v);
  return out;
}

std::string write_dot(const Graph& g) {
  std::string out = "graph G {\n";
  for (Vertex v = 0; v < g.node_count(); ++v) out += fmt::format("  {};\n", v);
  for (auto [u, v] : g.edges()) out += fmt::format("  {} -- {};\n", u, v);
  out += "}\n";
  return out;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, fmt::format("cannot open '{}'", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::kIo, fmt::format("failed reading '{}'", path));
  return parse_edge_list(buffer.str());
}

}  // namespace fcomplex
