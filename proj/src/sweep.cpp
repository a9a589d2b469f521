#include "fcomplex/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>

#include <fmt/format.h>

#include "fcomplex/complexity.hpp"
#include "fcomplex/error.hpp"
#include "fcomplex/metrics.hpp"
#include "fcomplex/parallel.hpp"
#include "fcomplex/statistics.hpp"

namespace fcomplex {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

int pair_count(int n) { return n * (n - 1) / 2; }

// Pairs in key order: (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),...
std::vector<Edge> column_pairs(int n) {
  std::vector<Edge> pairs;
  pairs.reserve(static_cast<std::size_t>(pair_count(n)));
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) pairs.emplace_back(u, v);
  return pairs;
}

std::string bits_to_hex(const std::vector<bool>& bits) {
  std::string out((bits.size() + 3) / 4, '0');
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k]) {
      const std::size_t digit = k / 4;
      const int value = static_cast<int>(std::string_view(kHexDigits).find(out[digit]));
      out[digit] = kHexDigits[value | (8 >> (k % 4))];
    }
  }
  return out;
}

// Graph whose pair k (column order) is present iff bit k of `mask` is set.
Graph graph_from_pair_mask(int n, const std::vector<Edge>& pairs, std::uint64_t mask) {
  std::vector<VertexMask> rows(static_cast<std::size_t>(n), 0);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if ((mask >> k) & 1U) {
      auto [u, v] = pairs[k];
      rows[static_cast<std::size_t>(u)] |= bit(v);
      rows[static_cast<std::size_t>(v)] |= bit(u);
    }
  }
  return Graph::from_adjacency(std::move(rows));
}

bool rows_connected(const std::vector<VertexMask>& rows, int n) {
  VertexMask seen = 1;
  VertexMask frontier = 1;
  while (frontier) {
    VertexMask next = 0;
    for (Vertex v : NodeSet{frontier}) next |= rows[static_cast<std::size_t>(v)];
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen == low_mask(n);
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g)
      : g_(g),
        n_(g.node_count()),
        order_(static_cast<std::size_t>(n_)),
        best_columns_(static_cast<std::size_t>(n_), kUnset) {}

  CanonicalLabeling run() {
    descend(0, 0);
    CanonicalLabeling result;
    result.permutation.resize(static_cast<std::size_t>(n_));
    for (int position = 0; position < n_; ++position) {
      result.permutation[static_cast<std::size_t>(best_order_[static_cast<std::size_t>(position)])] = position;
    }
    result.automorphisms = automorphisms_;
    result.key = adjacency_key(g_.relabeled(result.permutation));
    return result;
  }

 private:
  static constexpr std::uint64_t kUnset = std::numeric_limits<std::uint64_t>::max();

  // Bits adj(order[i], v) for i < position, position 0 most significant.
  std::uint64_t column(int position, Vertex v) const {
    std::uint64_t c = 0;
    for (int i = 0; i < position; ++i) {
      c = (c << 1) | (g_.adjacent(order_[static_cast<std::size_t>(i)], v) ? 1U : 0U);
    }
    return c;
  }

  // Invariant: the placed prefix equals best_columns_[0..position). The first
  // leaf after any best column is lowered is a new minimum; every other leaf
  // reproduces the current minimum and so witnesses an automorphism.
  void descend(int position, VertexMask used) {
    if (position == n_) {
      if (new_minimum_) {
        best_order_ = order_;
        automorphisms_ = 1;
        new_minimum_ = false;
      } else {
        ++automorphisms_;
      }
      return;
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (used & bit(v)) continue;
      const std::uint64_t c = column(position, v);
      std::uint64_t& best = best_columns_[static_cast<std::size_t>(position)];
      if (c > best) continue;
      if (c < best) {
        best = c;
        std::fill(best_columns_.begin() + position + 1, best_columns_.end(), kUnset);
        new_minimum_ = true;
      }
      order_[static_cast<std::size_t>(position)] = v;
      descend(position + 1, used | bit(v));
    }
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> order_;
  std::vector<Vertex> best_order_;
  std::vector<std::uint64_t> best_columns_;
  std::uint64_t automorphisms_ = 0;
  bool new_minimum_ = false;
};

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

void check_labeled_guard(int n) {
  if (n < 2 || n > kLabeledMaxVertices) {
    throw Error(ErrorKind::kGuardExceeded,
                fmt::format("labeled enumeration needs 2 <= n <= {}, got {}", kLabeledMaxVertices, n));
  }
}

std::vector<std::uint64_t> labeled_connected_masks(int n) {
  check_labeled_guard(n);
  const auto pairs = column_pairs(n);
  std::vector<std::uint64_t> masks;
  std::vector<VertexMask> rows(static_cast<std::size_t>(n));
  const std::uint64_t limit = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::fill(rows.begin(), rows.end(), 0);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((mask >> k) & 1U) {
        rows[static_cast<std::size_t>(pairs[k].first)] |= bit(pairs[k].second);
        rows[static_cast<std::size_t>(pairs[k].second)] |= bit(pairs[k].first);
      }
    }
    if (rows_connected(rows, n)) masks.push_back(mask);
  }
  return masks;
}

template <class MakeRecord>
std::vector<SweepRecord> compute_records(std::size_t count, unsigned threads, MakeRecord&& make) {
  std::vector<SweepRecord> records(count);
  parallel_for(count, threads, [&](std::size_t i) { records[i] = make(i); });
  std::stable_sort(records.begin(), records.end(),
                   [](const SweepRecord& a, const SweepRecord& b) { return a.graph_key < b.graph_key; });
  return records;
}

}  // namespace

std::string adjacency_key(const Graph& g) {
  const int n = g.node_count();
  std::vector<bool> bits;
  bits.reserve(static_cast<std::size_t>(pair_count(n)));
  for (auto [u, v] : column_pairs(n)) bits.push_back(g.adjacent(u, v));
  return bits_to_hex(bits);
}

Graph graph_from_key(int node_count, std::string_view key) {
  if (node_count < 1 || node_count > kMaxVertices) {
    throw Error(node_count > kMaxVertices ? ErrorKind::kCapExceeded : ErrorKind::kOutOfRange,
                fmt::format("invalid vertex count {}", node_count));
  }
  const auto pairs = column_pairs(node_count);
  if (key.size() != (pairs.size() + 3) / 4) {
    throw Error(ErrorKind::kMalformed,
                fmt::format("key '{}' has the wrong length for {} vertices", key, node_count));
  }
  std::vector<VertexMask> rows(static_cast<std::size_t>(node_count), 0);
  for (std::size_t digit = 0; digit < key.size(); ++digit) {
    const auto value = std::string_view(kHexDigits).find(key[digit]);
    if (value == std::string_view::npos) {
      throw Error(ErrorKind::kMalformed, fmt::format("key '{}' is not lowercase hex", key));
    }
    for (std::size_t b = 0; b < 4; ++b) {
      if (!((value >> (3 - b)) & 1U)) continue;
      const std::size_t k = digit * 4 + b;
      if (k >= pairs.size()) {
        throw Error(ErrorKind::kMalformed, fmt::format("key '{}' has non-zero padding", key));
      }
      auto [u, v] = pairs[k];
      rows[static_cast<std::size_t>(u)] |= bit(v);
      rows[static_cast<std::size_t>(v)] |= bit(u);
    }
  }
  return Graph::from_adjacency(std::move(rows));
}

CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.node_count() > kCanonicalMaxVertices) {
    throw Error(ErrorKind::kGuardExceeded,
                fmt::format("canonical form is limited to {} vertices, graph has {}",
                            kCanonicalMaxVertices, g.node_count()));
  }
  return CanonicalSearch(g).run();
}

std::string canonical_form(const Graph& g) { return canonical_labeling(g).key; }

void for_each_labeled_connected_graph(int n, const std::function<void(const Graph&)>& visit) {
  const auto pairs = column_pairs(n);
  for (std::uint64_t mask : labeled_connected_masks(n)) visit(graph_from_pair_mask(n, pairs, mask));
}

std::vector<Graph> enumerate_labeled_connected_graphs(int n) {
  std::vector<Graph> out;
  for_each_labeled_connected_graph(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<IsomorphismClass> connected_isomorphism_classes(int n) {
  if (n < 1 || n > kCanonicalMaxVertices) {
    throw Error(ErrorKind::kGuardExceeded,
                fmt::format("isomorphism classes need 1 <= n <= {}, got {}", kCanonicalMaxVertices, n));
  }
  // Every class with m + 1 edges arises from a class with m edges plus one
  // missing pair, so growing canonical keys level by level reaches them all.
  std::set<std::string> level{adjacency_key(generate(TopologyFamily::empty(n)))};
  std::vector<IsomorphismClass> out;
  const auto pairs = column_pairs(n);
  while (!level.empty()) {
    std::set<std::string> next;
    for (const std::string& key : level) {
      const Graph g = graph_from_key(n, key);
      if (is_connected(g)) {
        const auto labeling = canonical_labeling(g);
        out.push_back({g, key, factorial(n) / labeling.automorphisms});
      }
      for (auto [u, v] : pairs) {
        if (g.adjacent(u, v)) continue;
        auto edges = g.edges();
        edges.emplace_back(u, v);
        next.insert(canonical_form(Graph::from_edges(n, edges)));
      }
    }
    level = std::move(next);
  }
  std::sort(out.begin(), out.end(),
            [](const IsomorphismClass& a, const IsomorphismClass& b) { return a.key < b.key; });
  return out;
}

std::vector<Graph> sample_connected_graphs(int n, int count, double edge_probability,
                                           std::uint64_t seed) {
  if (count < 1) {
    throw Error(ErrorKind::kInvalidArgument, fmt::format("sample count must be >= 1, got {}", count));
  }
  ErdosRenyiSource source(n, edge_probability, seed);
  std::vector<Graph> out;
  out.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(out.size()) < count) {
    std::uint64_t rejections = 0;
    for (;;) {
      Graph g = source.next();
      if (is_connected(g)) {
        out.push_back(std::move(g));
        break;
      }
      if (++rejections >= kSampleRejectionLimit) {
        throw Error(ErrorKind::kRejectionLimit,
                    fmt::format("{} consecutive disconnected draws at n={}, p={}",
                                kSampleRejectionLimit, n, edge_probability));
      }
    }
  }
  return out;
}

SweepMode parse_sweep_mode(std::string_view name) {
  if (name == "labeled") return SweepMode::kLabeled;
  if (name == "canonical") return SweepMode::kCanonical;
  if (name == "sampled") return SweepMode::kSampled;
  throw Error(ErrorKind::kInvalidArgument, fmt::format("unknown sweep mode '{}'", name));
}

std::string_view to_string(SweepMode mode) noexcept {
  switch (mode) {
    case SweepMode::kLabeled: return "labeled";
    case SweepMode::kCanonical: return "canonical";
    case SweepMode::kSampled: return "sampled";
  }
  return "unknown";
}

SweepRecord make_record(const Graph& g, std::string key, std::uint64_t multiplicity) {
  SweepRecord record;
  record.graph_key = std::move(key);
  record.node_count = g.node_count();
  record.edge_count = g.edge_count();
  record.multiplicity = multiplicity;
  record.complexity = functional_complexity(g).complexity;
  record.avg_path_length = average_path_length(g);
  record.avg_clustering = average_clustering(g);
  return record;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
  const int n = config.node_count;
  switch (config.mode) {
    case SweepMode::kLabeled: {
      const auto masks = labeled_connected_masks(n);
      const auto pairs = column_pairs(n);
      return compute_records(masks.size(), config.threads, [&](std::size_t i) {
        const Graph g = graph_from_pair_mask(n, pairs, masks[i]);
        return make_record(g, adjacency_key(g), 1);
      });
    }
    case SweepMode::kCanonical: {
      if (n < 2) {
        throw Error(ErrorKind::kGuardExceeded, "canonical sweep needs at least two vertices");
      }
      const auto classes = connected_isomorphism_classes(n);
      return compute_records(classes.size(), config.threads, [&](std::size_t i) {
        return make_record(classes[i].representative, classes[i].key, classes[i].multiplicity);
      });
    }
    case SweepMode::kSampled: {
      if (!config.has_seed) {
        throw Error(ErrorKind::kInvalidArgument, "sampled sweeps need an explicit seed");
      }
      if (n < 2) throw Error(ErrorKind::kInvalidArgument, "sampled sweep needs at least two vertices");
      const auto graphs = sample_connected_graphs(n, config.sample_count, config.edge_probability, config.seed);
      return compute_records(graphs.size(), config.threads, [&](std::size_t i) {
        return make_record(graphs[i], adjacency_key(graphs[i]), 1);
      });
    }
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown sweep mode");
}

CorrelationSummary summarize(const std::vector<SweepRecord>& records, SweepMode mode, bool weighted) {
  CorrelationSummary summary;
  summary.mode = mode;
  summary.weighted = weighted;
  summary.sample_count = records.size();
  summary.node_count = records.empty() ? 0 : records.front().node_count;
  std::vector<double> cf;
  std::vector<double> apl;
  std::vector<double> cc;
  std::vector<double> weights;
  for (const auto& r : records) {
    cf.push_back(r.complexity);
    apl.push_back(r.avg_path_length);
    cc.push_back(r.avg_clustering);
    weights.push_back(weighted ? static_cast<double>(r.multiplicity) : 1.0);
  }
  if (records.size() < 3) {
    throw Error(ErrorKind::kDegenerate,
                fmt::format("correlation summary needs at least 3 records, got {}", records.size()));
  }
  summary.pearson_apl_cf = weighted_pearson(apl, cf, weights);
  summary.pearson_cc_cf = weighted_pearson(cc, cf, weights);
  summary.pearson_apl_cc = weighted_pearson(apl, cc, weights);
  summary.multiple_r =
      multiple_correlation_from(summary.pearson_apl_cf, summary.pearson_cc_cf, summary.pearson_apl_cc);
  return summary;
}

std::vector<CorrelationSummary> correlation_vs_size(int min_nodes, int max_nodes,
                                                    const SweepConfig& config) {
  if (min_nodes > max_nodes) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("empty size range [{}, {}]", min_nodes, max_nodes));
  }
  std::vector<CorrelationSummary> out;
  for (int n = min_nodes; n <= max_nodes; ++n) {
    SweepConfig at_n = config;
    at_n.node_count = n;
    out.push_back(summarize(run_sweep(at_n), config.mode));
  }
  return out;
}

std::string format_real(double value) {
  if (value == 0.0) return "0";
  return fmt::format("{:.12g}", value);
}

namespace {

constexpr std::string_view kCsvHeader =
    "graph_key,n,edges,multiplicity,complexity,avg_path_length,avg_clustering";

template <class T>
T parse_field(std::string_view field, std::size_t line_no) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw Error(ErrorKind::kMalformed, fmt::format("line {}: bad field '{}'", line_no, field));
  }
  return value;
}

}  // namespace

std::string write_sweep_csv(const std::vector<SweepRecord>& records) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : records) {
    out += fmt::format("{},{},{},{},{},{},{}\n", r.graph_key, r.node_count, r.edge_count, r.multiplicity,
                       format_real(r.complexity), format_real(r.avg_path_length),
                       format_real(r.avg_clustering));
  }
  return out;
}

std::vector<SweepRecord> parse_sweep_csv(std::string_view text) {
  std::vector<SweepRecord> records;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kCsvHeader) {
        throw Error(ErrorKind::kMalformed, fmt::format("unexpected CSV header '{}'", line));
      }
      header_seen = true;
      continue;
    }
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 7) {
      throw Error(ErrorKind::kMalformed,
                  fmt::format("line {}: expected 7 fields, found {}", line_no, fields.size()));
    }
    SweepRecord r;
    r.graph_key = std::string(fields[0]);
    r.node_count = parse_field<int>(fields[1], line_no);
    r.edge_count = parse_field<int>(fields[2], line_no);
    r.multiplicity = parse_field<std::uint64_t>(fields[3], line_no);
    r.complexity = parse_field<double>(fields[4], line_no);
    r.avg_path_length = parse_field<double>(fields[5], line_no);
    r.avg_clustering = parse_field<double>(fields[6], line_no);
    records.push_back(std::move(r));
  }
  if (!header_seen) throw Error(ErrorKind::kMalformed, "CSV is empty");
  return records;
}

}  // namespace fcomplex
