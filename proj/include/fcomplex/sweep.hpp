#pragma once

// Sweeps over graph space: exhaustive labeled enumeration, isomorphism
// classes, or seeded sampling, with per-graph (complexity, average path
// length, average clustering) and correlation summaries over a sweep.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "fcomplex/graph.hpp"

namespace fcomplex {

inline constexpr int kLabeledMaxVertices = 7;
inline constexpr int kCanonicalMaxVertices = 8;
inline constexpr std::uint64_t kSampleRejectionLimit = 1'000'000;

/// Upper-triangle adjacency bits in column order (0,1),(0,2),(1,2),(0,3),...
/// written as hex, first pair in the most significant bit of the first digit,
/// zero-padded to a whole digit. Keys of equal-size graphs compare like the
/// underlying bit strings.
std::string adjacency_key(const Graph& g);

/// Inverse of adjacency_key. Throws Error{kMalformed} on a bad key.
Graph graph_from_key(int node_count, std::string_view key);

struct CanonicalLabeling {
  std::vector<Vertex> permutation;  // vertex v moves to permutation[v]
  std::uint64_t automorphisms = 0;
  std::string key;                  // adjacency_key of the relabeled graph
};

/// Exact minimum of adjacency_key over all n! relabelings, found by
/// branch-and-bound on the column-ordered bit prefix. Equal keys iff
/// isomorphic. Throws Error{kGuardExceeded} above kCanonicalMaxVertices.
CanonicalLabeling canonical_labeling(const Graph& g);
std::string canonical_form(const Graph& g);

/// Every connected labeled graph on n vertices, in edge-mask order.
/// Throws Error{kGuardExceeded} unless 2 <= n <= kLabeledMaxVertices.
void for_each_labeled_connected_graph(int n, const std::function<void(const Graph&)>& visit);
std::vector<Graph> enumerate_labeled_connected_graphs(int n);

struct IsomorphismClass {
  Graph representative;  // canonically labeled
  std::string key;
  std::uint64_t multiplicity = 0;  // labeled graphs in the class
};

/// One entry per isomorphism class of connected graphs on n vertices, sorted
/// by key. Throws Error{kGuardExceeded} unless 1 <= n <= kCanonicalMaxVertices.
std::vector<IsomorphismClass> connected_isomorphism_classes(int n);

/// `count` seeded G(n, p) draws, each redrawn until connected. Throws
/// Error{kRejectionLimit} after kSampleRejectionLimit consecutive rejections.
std::vector<Graph> sample_connected_graphs(int n, int count, double edge_probability,
                                           std::uint64_t seed);

enum class SweepMode { kLabeled, kCanonical, kSampled };

SweepMode parse_sweep_mode(std::string_view name);
std::string_view to_string(SweepMode mode) noexcept;

struct SweepConfig {
  int node_count = 6;
  SweepMode mode = SweepMode::kCanonical;
  int sample_count = 0;
  double edge_probability = 0.0;
  std::uint64_t seed = 0;
  bool has_seed = false;
  unsigned threads = 1;  // 0 = hardware concurrency; output does not depend on it
};

struct SweepRecord {
  std::string graph_key;
  int node_count = 0;
  int edge_count = 0;
  std::uint64_t multiplicity = 1;
  double complexity = 0.0;
  double avg_path_length = 0.0;
  double avg_clustering = 0.0;

  friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

SweepRecord make_record(const Graph& g, std::string key, std::uint64_t multiplicity);

/// Records sorted by graph_key (stable for repeated sampled keys).
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

struct CorrelationSummary {
  int node_count = 0;
  std::size_t sample_count = 0;
  double pearson_apl_cf = 0.0;
  double pearson_cc_cf = 0.0;
  double pearson_apl_cc = 0.0;
  double multiple_r = 0.0;
  SweepMode mode = SweepMode::kCanonical;
  bool weighted = false;
};

/// Correlations over the records, each record counted once, or
/// `multiplicity` times when weighted. Throws Error{kDegenerate}.
CorrelationSummary summarize(const std::vector<SweepRecord>& records, SweepMode mode,
                             bool weighted = false);

std::vector<CorrelationSummary> correlation_vs_size(int min_nodes, int max_nodes,
                                                    const SweepConfig& config);

/// CSV with header graph_key,n,edges,multiplicity,complexity,avg_path_length,avg_clustering
/// and reals at 12 significant digits.
std::string write_sweep_csv(const std::vector<SweepRecord>& records);
std::vector<SweepRecord> parse_sweep_csv(std::string_view text);

/// Real-number text used in every output: 12 significant digits, "0" for zero.
std::string format_real(double value);

}  // namespace fcomplex
