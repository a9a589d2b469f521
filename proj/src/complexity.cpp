#include "fcomplex/complexity.hpp"

#include <fmt/format.h>

#include "fcomplex/error.hpp"
#include "fcomplex/metrics.hpp"
#include "fcomplex/parallel.hpp"

namespace fcomplex {

double interaction_probability(int reach, int size) {
  if (size < 1 || reach < 0 || reach > size) {
    throw Error(ErrorKind::kOutOfRange,
                fmt::format("reach count {} invalid for subgraph size {}", reach, size));
  }
  return static_cast<double>(reach) / static_cast<double>(size);
}

double node_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::kOutOfRange, fmt::format("probability {} outside [0, 1]", p));
  }
  if (p == 0.0 || p == 1.0) return 0.0;
  const double q = 1.0 - p;
  return p * std::log2(1.0 / p) + q * std::log2(1.0 / q);
}

double ScaleCurve::deviation_sum() const {
  CompensatedSum sum;
  for (double d : deviation) sum.add(d);
  return sum.value();
}

namespace {

// H(i / size) for i = 0..size.
std::vector<double> entropy_table(int size) {
  std::vector<double> table(static_cast<std::size_t>(size) + 1);
  for (int i = 0; i <= size; ++i) {
    table[static_cast<std::size_t>(i)] = node_entropy(interaction_probability(i, size));
  }
  return table;
}

// Adds I_r(subset) for r = first..last into info[r - first]. Vertices are
// visited in ascending order so every route through here sums identically.
void information_profile(const Graph& g, NodeSet subset, int first, int last,
                         const std::vector<double>& entropy, double* info) {
  for (Vertex n : subset) {
    VertexMask seen = bit(n);
    VertexMask frontier = seen;
    for (int step = 1; step <= last; ++step) {
      if (frontier) {
        frontier = g.neighbors_of(NodeSet{frontier}) & subset.mask() & ~seen;
        seen |= frontier;
      }
      if (step >= first) {
        info[step - first] += entropy[static_cast<std::size_t>(std::popcount(seen))];
      }
    }
  }
}

void check_subset(const Graph& g, NodeSet subset) {
  if (subset.empty()) throw Error(ErrorKind::kInvalidArgument, "subset is empty");
  if (subset.mask() & ~low_mask(g.node_count())) {
    throw Error(ErrorKind::kOutOfRange, "subset names a vertex outside the graph");
  }
}

struct RootPartial {
  std::uint64_t count = 0;
  std::vector<CompensatedSum> per_scale;
};

struct SizeTotals {
  std::uint64_t count = 0;
  std::vector<double> per_scale;  // summed information, scales first..last
};

// Information summed over every connected set of each size in `sizes`, for
// scales first..last. Partial sums are kept per ESU root and merged in root
// order, which makes the result independent of the thread count.
std::vector<SizeTotals> accumulate_information(const Graph& g, const std::vector<int>& sizes,
                                               int first, int last, unsigned threads) {
  const int n = g.node_count();
  const int scales = last - first + 1;
  std::vector<std::vector<double>> tables;
  tables.reserve(sizes.size());
  for (int size : sizes) tables.push_back(entropy_table(size));

  const std::size_t items = sizes.size() * static_cast<std::size_t>(n);
  std::vector<RootPartial> partials(items);
  parallel_for(items, threads, [&](std::size_t item) {
    const std::size_t size_index = item / static_cast<std::size_t>(n);
    const Vertex root = static_cast<Vertex>(item % static_cast<std::size_t>(n));
    RootPartial& out = partials[item];
    out.per_scale.resize(static_cast<std::size_t>(scales));
    std::vector<double> info(static_cast<std::size_t>(scales));
    for_each_connected_subgraph_rooted(g, sizes[size_index], root, [&](NodeSet subset) {
      std::fill(info.begin(), info.end(), 0.0);
      information_profile(g, subset, first, last, tables[size_index], info.data());
      for (int s = 0; s < scales; ++s) out.per_scale[static_cast<std::size_t>(s)].add(info[static_cast<std::size_t>(s)]);
      ++out.count;
    });
  });

  std::vector<SizeTotals> totals(sizes.size());
  for (std::size_t size_index = 0; size_index < sizes.size(); ++size_index) {
    std::vector<CompensatedSum> merged(static_cast<std::size_t>(scales));
    for (Vertex root = 0; root < n; ++root) {
      const RootPartial& part = partials[size_index * static_cast<std::size_t>(n) + static_cast<std::size_t>(root)];
      totals[size_index].count += part.count;
      for (int s = 0; s < scales; ++s) merged[static_cast<std::size_t>(s)].merge(part.per_scale[static_cast<std::size_t>(s)]);
    }
    for (const auto& sum : merged) totals[size_index].per_scale.push_back(sum.value());
  }
  return totals;
}

double mean_or_zero(double total, std::uint64_t count) {
  return count == 0 ? 0.0 : total / static_cast<double>(count);
}

double linear_reference(int scale, int size, int node_count, double whole_information) {
  const double weight = static_cast<double>(scale + 1 - size) / static_cast<double>(scale + 1 - node_count);
  return weight * whole_information;
}

}  // namespace

double subgraph_information(const Graph& g, NodeSet subset, int scale) {
  check_subset(g, subset);
  if (scale < 1) throw Error(ErrorKind::kOutOfRange, fmt::format("scale must be >= 1, got {}", scale));
  const std::vector<double> table = entropy_table(subset.size());
  double info = 0.0;
  information_profile(g, subset, scale, scale, table, &info);
  return info;
}

double average_information(const Graph& g, int size, int scale, const SubgraphCensus& census) {
  detail::check_subgraph_size(g, size);
  if (scale < 1) throw Error(ErrorKind::kOutOfRange, fmt::format("scale must be >= 1, got {}", scale));
  const std::uint64_t beta = census.count(size);
  if (beta == 0) return 0.0;
  const auto totals = accumulate_information(g, {size}, scale, scale, 1);
  return mean_or_zero(totals.front().per_scale.front(), beta);
}

namespace {

ScaleCurve build_curve(const Graph& g, int scale, const std::vector<int>& sizes,
                       const std::vector<SizeTotals>& totals, int first_scale,
                       const SubgraphCensus& census, double whole_information) {
  const int n = g.node_count();
  ScaleCurve curve;
  curve.scale = scale;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    const int size = sizes[k];
    if (size < scale + 1) continue;
    const double average =
        mean_or_zero(totals[k].per_scale[static_cast<std::size_t>(scale - first_scale)], census.count(size));
    const double reference = linear_reference(scale, size, n, whole_information);
    curve.sizes.push_back(size);
    curve.average_information.push_back(average);
    curve.linear_reference.push_back(reference);
    curve.deviation.push_back(std::abs(average - reference));
  }
  return curve;
}

std::vector<int> size_range(int first, int last) {
  std::vector<int> sizes;
  for (int j = first; j <= last; ++j) sizes.push_back(j);
  return sizes;
}

}  // namespace

ScaleCurve single_scale_curve(const Graph& g, int scale, const SubgraphCensus& census) {
  const int max_scale = diameter(g);
  if (scale < 1 || scale > max_scale - 1) {
    throw Error(ErrorKind::kOutOfRange,
                fmt::format("scale {} outside [1, {}] (diameter {})", scale, max_scale - 1, max_scale));
  }
  const std::vector<int> sizes = size_range(scale + 1, g.node_count());
  const auto totals = accumulate_information(g, sizes, scale, scale, 1);
  const double whole = subgraph_information(g, g.vertices(), scale);
  return build_curve(g, scale, sizes, totals, scale, census, whole);
}

ComplexityReport functional_complexity(const Graph& g, const ComplexityOptions& options) {
  ComplexityReport report;
  report.node_count = g.node_count();
  report.edge_count = g.edge_count();
  report.max_scale = diameter(g);
  report.within_evaluated_domain = g.edge_count() == 0 || is_connected(g);

  if (report.max_scale <= 1) {
    report.census = census(g);
    return report;
  }

  const int first = 1;
  const int last = report.max_scale - 1;
  const std::vector<int> sizes = size_range(2, g.node_count());
  const auto totals = accumulate_information(g, sizes, first, last, options.threads);

  report.census.counts_by_size.assign(static_cast<std::size_t>(g.node_count()) + 1, 0);
  report.census.counts_by_size[1] = static_cast<std::uint64_t>(g.node_count());
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    report.census.counts_by_size[static_cast<std::size_t>(sizes[k])] = totals[k].count;
  }

  CompensatedSum total;
  for (int scale = first; scale <= last; ++scale) {
    const double whole = subgraph_information(g, g.vertices(), scale);
    report.curves.push_back(build_curve(g, scale, sizes, totals, first, report.census, whole));
    for (double d : report.curves.back().deviation) total.add(d);
  }
  report.complexity = total.value() / static_cast<double>(report.max_scale - 1);
  return report;
}

}  // namespace fcomplex
