#include "cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "fcomplex/complexity.hpp"
#include "fcomplex/error.hpp"
#include "fcomplex/graph.hpp"
#include "fcomplex/report_io.hpp"
#include "fcomplex/sweep.hpp"

namespace fcomplex::cli {

namespace {

struct Failure {
  int code;
  std::string message;
};

struct GraphSource {
  std::string path;
  std::string topology;
  int nodes = 0;
  double edge_prob = 0.0;
  std::optional<std::uint64_t> seed;
};

struct Options {
  unsigned threads = 0;
  GraphSource source;
  std::string format = "text";
  int nodes = 0;
  std::string mode = "canonical";
  int count = 0;
  double edge_prob = 0.0;
  std::optional<std::uint64_t> seed;
  std::string out_path;
  std::string in_path;
  std::optional<std::string> correlate_mode;
  bool weighted = false;
  std::vector<std::string> families{"bus", "ring", "star", "mesh"};
  int min_nodes = 6;
  int max_nodes = 10;
};

const std::vector<std::string> kTopologyNames{"bus",  "ring",  "star",       "mesh",
                                              "empty", "moore", "erdos-renyi"};

Failure domain_failure(const Error& e) { return {kDomain, e.what()}; }

// Loading: anything wrong with the file itself is an input error, but a graph
// that is well-formed and merely too large is a domain error.
Graph load_graph(const GraphSource& source) {
  if (!source.path.empty()) {
    try {
      return read_edge_list_file(source.path);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kCapExceeded) throw domain_failure(e);
      throw Failure{kInput, e.what()};
    }
  }
  TopologyFamily family;
  family.kind = parse_topology_kind(source.topology);
  family.node_count = source.nodes;
  if (family.kind == TopologyKind::kErdosRenyi) {
    if (!source.seed) throw Failure{kUsage, "--seed is required for erdos-renyi"};
    family.edge_probability = source.edge_prob;
    family.seed = *source.seed;
  } else if (family.kind != TopologyKind::kMooreMotif && source.nodes == 0) {
    throw Failure{kUsage, fmt::format("--nodes is required for topology '{}'", source.topology)};
  }
  return generate(family);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kInput, fmt::format("cannot open '{}'", path)};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Failure{kInput, fmt::format("cannot write '{}'", path)};
  file << text;
  if (!file) throw Failure{kInput, fmt::format("failed writing '{}'", path)};
}

void add_source_flags(CLI::App& cmd, GraphSource& source) {
  auto* graph = cmd.add_option("--graph", source.path, "edge-list file");
  auto* topology = cmd.add_option("--topology", source.topology, "named topology")
                       ->check(CLI::IsMember(kTopologyNames));
  graph->excludes(topology);
  cmd.add_option("--nodes", source.nodes, "vertex count for --topology");
  cmd.add_option("--edge-prob", source.edge_prob, "edge probability for erdos-renyi");
  cmd.add_option("--seed", source.seed, "seed for erdos-renyi");
  cmd.callback([graph, topology] {
    if (graph->count() + topology->count() != 1) {
      throw CLI::ValidationError("exactly one of --graph or --topology is required");
    }
  });
}

void cmd_complexity(const Options& opt, std::ostream& out) {
  const Graph g = load_graph(opt.source);
  const auto report = functional_complexity(g, {opt.threads});
  out << (opt.format == "csv" ? report_to_csv(report) : report_to_json(report));
}

void cmd_curve(const Options& opt, std::ostream& out) {
  const Graph g = load_graph(opt.source);
  const auto report = functional_complexity(g, {opt.threads});
  if (report.max_scale <= 1) {
    throw Failure{kDomain, fmt::format("diameter is {}: no scale r with 1 <= r <= R-1, so there is "
                                       "no curve (complexity is 0)",
                                       report.max_scale)};
  }
  out << curves_to_csv(report);
}

SweepConfig sweep_config(const Options& opt, SweepMode mode) {
  SweepConfig config;
  config.node_count = opt.nodes;
  config.mode = mode;
  config.sample_count = opt.count;
  config.edge_probability = opt.edge_prob;
  config.has_seed = opt.seed.has_value();
  config.seed = opt.seed.value_or(0);
  config.threads = opt.threads;
  if (mode == SweepMode::kSampled && !opt.seed) {
    throw Failure{kUsage, "--seed is required when sampling"};
  }
  return config;
}

void cmd_sweep(const Options& opt, std::ostream& out) {
  const auto records = run_sweep(sweep_config(opt, parse_sweep_mode(opt.mode)));
  emit(write_sweep_csv(records), opt.out_path, out);
}

void cmd_sample(const Options& opt, std::ostream& out) {
  const auto records = run_sweep(sweep_config(opt, SweepMode::kSampled));
  emit(write_sweep_csv(records), opt.out_path, out);
}

void cmd_correlate(const Options& opt, std::ostream& out) {
  std::vector<SweepRecord> records;
  try {
    records = parse_sweep_csv(read_file(opt.in_path));
  } catch (const Error& e) {
    throw Failure{kInput, e.what()};
  }
  SweepMode mode = SweepMode::kLabeled;
  if (opt.correlate_mode) {
    mode = parse_sweep_mode(*opt.correlate_mode);
  } else {
    for (const auto& r : records) {
      if (r.multiplicity > 1) mode = SweepMode::kCanonical;
    }
  }
  const auto summary = summarize(records, mode, opt.weighted);
  out << (opt.format == "csv" ? summary_to_csv(summary) : summary_to_json(summary));
}

void cmd_topologies(const Options& opt, std::ostream& out) {
  if (opt.min_nodes > opt.max_nodes) {
    throw Failure{kUsage, fmt::format("--min {} exceeds --max {}", opt.min_nodes, opt.max_nodes)};
  }
  std::string text = "family,n,complexity\n";
  for (const auto& name : opt.families) {
    const TopologyKind kind = parse_topology_kind(name);
    if (kind == TopologyKind::kErdosRenyi) {
      throw Failure{kUsage, "erdos-renyi is not a deterministic family; use sample"};
    }
    for (int n = opt.min_nodes; n <= opt.max_nodes; ++n) {
      TopologyFamily family{kind, n};
      const Graph g = generate(family);
      const auto report = functional_complexity(g, {opt.threads});
      text += fmt::format("{},{},{}\n", name, g.node_count(), format_real(report.complexity));
      if (kind == TopologyKind::kMooreMotif) break;
    }
  }
  out << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Functional complexity of network-function topologies", "fcomplex"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--threads", opt.threads, "worker threads (0 = all cores); output is identical for any value");

  const std::vector<std::string> formats{"csv", "text"};

  auto* complexity = app.add_subcommand("complexity", "complexity report for one graph");
  add_source_flags(*complexity, opt.source);
  complexity->add_option("--format", opt.format, "csv or text")->check(CLI::IsMember(formats));

  auto* curve = app.add_subcommand("curve", "per-scale deviation curves as CSV");
  add_source_flags(*curve, opt.source);

  auto* sweep = app.add_subcommand("sweep", "metrics for every connected graph on N vertices");
  sweep->add_option("--nodes", opt.nodes, "vertex count")->required();
  sweep->add_option("--mode", opt.mode, "labeled, canonical or sampled")
      ->check(CLI::IsMember({"labeled", "canonical", "sampled"}));
  sweep->add_option("--count", opt.count, "samples (sampled mode)");
  sweep->add_option("--edge-prob", opt.edge_prob, "edge probability (sampled mode)");
  sweep->add_option("--seed", opt.seed, "seed (sampled mode)");
  sweep->add_option("--out", opt.out_path, "output CSV path ('-' for stdout)");

  auto* correlate = app.add_subcommand("correlate", "correlation summary of a sweep CSV");
  correlate->add_option("--in", opt.in_path, "sweep CSV")->required();
  correlate->add_option("--mode", opt.correlate_mode, "label for the summary")
      ->check(CLI::IsMember({"labeled", "canonical", "sampled"}));
  correlate->add_flag("--weighted", opt.weighted, "weight records by multiplicity");
  correlate->add_option("--format", opt.format, "csv or text")->check(CLI::IsMember(formats));

  auto* topologies = app.add_subcommand("topologies", "complexity of named families over a size range");
  topologies->add_option("--families", opt.families, "comma-separated family names")
      ->delimiter(',')
      ->check(CLI::IsMember(kTopologyNames));
  topologies->add_option("--min", opt.min_nodes, "smallest vertex count");
  topologies->add_option("--max", opt.max_nodes, "largest vertex count");

  auto* sample = app.add_subcommand("sample", "metrics for seeded random connected graphs");
  sample->add_option("--nodes", opt.nodes, "vertex count")->required();
  sample->add_option("--count", opt.count, "number of graphs")->required();
  sample->add_option("--edge-prob", opt.edge_prob, "edge probability")->required();
  sample->add_option("--seed", opt.seed, "seed")->required();
  sample->add_option("--out", opt.out_path, "output CSV path ('-' for stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsage;
  }

  try {
    if (*complexity) cmd_complexity(opt, out);
    if (*curve) cmd_curve(opt, out);
    if (*sweep) cmd_sweep(opt, out);
    if (*correlate) cmd_correlate(opt, out);
    if (*topologies) cmd_topologies(opt, out);
    if (*sample) cmd_sample(opt, out);
  } catch (const Failure& f) {
    err << "error: " << f.message << "\n";
    return f.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  }
  out.flush();
  return kSuccess;
}

}  // namespace fcomplex::cli
