#pragma once

// Functional complexity of a topology.
//
// For a scale r (maximum hop count at which two vertices interact) and a
// connected vertex set S of size j, every vertex n in S gets a reachability
// count i = |{m in S : dist_{g[S]}(m, n) <= r}| (n itself included) and the
// Bernoulli interaction probability p = i / j. The information of S is the sum
// of the binary entropies H(p) of its vertices. Averaging that information
// over all connected sets of one size and comparing the resulting curve with
// the straight line from 0 at j = r + 1 to the information of the whole graph
// at j = N gives the single-scale deviation; the complexity is the summed
// absolute deviation averaged over scales 1..R-1, where R is the diameter.

#include <cmath>
#include <cstdint>
#include <vector>

#include "fcomplex/graph.hpp"
#include "fcomplex/subgraph_enum.hpp"

namespace fcomplex {

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double value) noexcept {
    const double t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
  }
  void merge(const CompensatedSum& other) noexcept {
    add(other.sum_);
    add(other.compensation_);
  }
  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// p = reach / size. Throws Error{kOutOfRange} unless 0 <= reach <= size, size >= 1.
double interaction_probability(int reach, int size);

/// Binary Shannon entropy in bits, with 0 * log(1/0) = 0.
/// Throws Error{kOutOfRange} for p outside [0, 1].
double node_entropy(double p);

/// Sum of node entropies over `subset` at scale r, reachability measured
/// inside g[subset]. Throws Error{kInvalidArgument} for an empty subset.
double subgraph_information(const Graph& g, NodeSet subset, int scale);

/// Mean information over the connected sets of one size; 0 when there are none.
double average_information(const Graph& g, int size, int scale, const SubgraphCensus& census);

struct ScaleCurve {
  int scale = 0;
  std::vector<int> sizes;  // scale + 1 .. N
  std::vector<double> average_information;
  std::vector<double> linear_reference;
  std::vector<double> deviation;

  double deviation_sum() const;
};

/// Throws Error{kOutOfRange} unless 1 <= scale <= diameter(g) - 1.
ScaleCurve single_scale_curve(const Graph& g, int scale, const SubgraphCensus& census);

struct ComplexityReport {
  double complexity = 0.0;
  int max_scale = 0;
  int node_count = 0;
  int edge_count = 0;
  std::vector<ScaleCurve> curves;  // one per scale 1..max_scale-1
  SubgraphCensus census;
  // False for disconnected graphs that still have edges; the metric was only
  // ever characterised on connected or edgeless topologies.
  bool within_evaluated_domain = true;
};

struct ComplexityOptions {
  // 0 means std::thread::hardware_concurrency(). Results do not depend on it.
  unsigned threads = 1;
};

ComplexityReport functional_complexity(const Graph& g, const ComplexityOptions& options = {});

}  // namespace fcomplex
