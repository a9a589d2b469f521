#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "fcomplex/sweep.hpp"

using namespace fcomplex;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "fcomplex");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("fcomplex_cli_test_" + name);
  std::ofstream(path) << content;
  return path;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) rows.push_back(line);
  return rows;
}

}  // namespace

TEST(Cli, MooreReport) {
  const auto r = run({"complexity", "--topology", "moore"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["format_version"], 1);
  EXPECT_EQ(doc["max_scale"], 2);
  EXPECT_NEAR(doc["complexity"].get<double>(), 1.69, 0.01);
  EXPECT_EQ(doc["census"].size(), 9U);
  EXPECT_EQ(r.out.find("{\n  \"format_version\""), 0U);
}

TEST(Cli, MeshIsZero) {
  const auto r = run({"complexity", "--topology", "mesh", "--nodes", "8"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["complexity"].get<double>(), 0.0);
}

TEST(Cli, CsvReport) {
  const auto r = run({"complexity", "--topology", "ring", "--nodes", "5", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  const auto rows = lines(r.out);
  EXPECT_EQ(rows.front(), "record,scale,size,value");
  EXPECT_EQ(rows[1], "node_count,,,5");
}

TEST(Cli, GraphFile) {
  const auto path = temp_file("path.txt", "# a path\n3 2\n0 1\n1 2\n");
  const auto r = run({"complexity", "--graph", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["node_count"], 3);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"complexity"}).code, cli::kUsage);
  EXPECT_EQ(run({"complexity", "--topology", "moore", "--graph", "x"}).code, cli::kUsage);
  EXPECT_EQ(run({"complexity", "--topology", "star"}).code, cli::kUsage);
  EXPECT_EQ(run({"complexity", "--topology", "erdos-renyi", "--nodes", "5", "--edge-prob", "0.5"}).code,
            cli::kUsage);
  EXPECT_EQ(run({"complexity", "--graph", "/nonexistent/missing.txt"}).code, cli::kInput);
  EXPECT_EQ(run({"complexity", "--graph", temp_file("bad.txt", "3 1\n0 x\n").string()}).code, cli::kInput);
  EXPECT_EQ(run({"complexity", "--graph", temp_file("big.txt", "70 1\n0 69\n").string()}).code, cli::kDomain);
  EXPECT_EQ(run({"complexity", "--topology", "ring", "--nodes", "2"}).code, cli::kDomain);
  EXPECT_EQ(run({"curve", "--topology", "mesh", "--nodes", "6"}).code, cli::kDomain);
  EXPECT_EQ(run({"sweep", "--nodes", "9", "--mode", "canonical"}).code, cli::kDomain);
  EXPECT_EQ(run({"sweep", "--nodes", "5", "--mode", "sampled", "--count", "3", "--edge-prob", "0.5"}).code,
            cli::kUsage);
  EXPECT_EQ(run({"correlate", "--in", "/nonexistent/in.csv"}).code, cli::kInput);
}

TEST(Cli, CurveMatchesComplexity) {
  for (const std::vector<std::string> source :
       {std::vector<std::string>{"--topology", "moore"}, {"--topology", "bus", "--nodes", "7"},
        {"--topology", "erdos-renyi", "--nodes", "8", "--edge-prob", "0.4", "--seed", "3"}}) {
    auto curve_args = source, complexity_args = source;
    curve_args.insert(curve_args.begin(), "curve");
    complexity_args.insert(complexity_args.begin(), "complexity");
    const auto curve = run(curve_args);
    const auto report = run(complexity_args);
    if (curve.code == cli::kDomain) continue;  // disconnected draw with R <= 1
    ASSERT_EQ(curve.code, 0) << curve.err;
    const auto doc = nlohmann::json::parse(report.out);
    const auto rows = lines(curve.out);
    EXPECT_EQ(rows.front(), "scale,size,average_information,linear_reference,deviation");
    double total = 0.0;
    for (std::size_t k = 1; k < rows.size(); ++k) total += std::stod(rows[k].substr(rows[k].rfind(',') + 1));
    EXPECT_NEAR(total / (doc["max_scale"].get<int>() - 1), doc["complexity"].get<double>(), 1e-9);
  }
}

TEST(Cli, MooreCurveRows) {
  const auto rows = lines(run({"curve", "--topology", "moore"}).out);
  ASSERT_EQ(rows.size(), 9U);  // header + j = 2..9
  EXPECT_EQ(rows[1].substr(0, 4), "1,2,");
  EXPECT_EQ(rows[1].substr(rows[1].rfind(',') + 1), "0");
}

TEST(Cli, Topologies) {
  const auto r = run({"topologies", "--families", "bus,ring,star,mesh", "--min", "6", "--max", "10"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 21U);
  EXPECT_EQ(rows.front(), "family,n,complexity");
  int mesh_rows = 0;
  for (const auto& row : rows) {
    if (row.rfind("mesh,", 0) == 0) {
      ++mesh_rows;
      EXPECT_EQ(row.substr(row.rfind(',') + 1), "0");
    }
  }
  EXPECT_EQ(mesh_rows, 5);
}

TEST(Cli, SweepCorrelatePipeline) {
  const auto csv = std::filesystem::temp_directory_path() / "fcomplex_cli_test_sweep5.csv";
  ASSERT_EQ(run({"sweep", "--nodes", "5", "--out", csv.string()}).code, 0);
  const auto r = run({"correlate", "--in", csv.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["mode"], "canonical");
  EXPECT_EQ(doc["sample_count"], 21);
  EXPECT_LE(std::abs(doc["pearson_apl_cf"].get<double>()), 1.0);
  EXPECT_GE(doc["multiple_r"].get<double>() + 1e-12, std::abs(doc["pearson_apl_cf"].get<double>()));
}

TEST(Cli, CorrelateDegenerate) {
  const auto one = temp_file("one.csv",
                             "graph_key,n,edges,multiplicity,complexity,avg_path_length,avg_clustering\n"
                             "e,3,3,1,0,1,1\n");
  EXPECT_EQ(run({"correlate", "--in", one.string()}).code, cli::kDomain);
  const auto bad = temp_file("bad.csv", "nonsense\n");
  EXPECT_EQ(run({"correlate", "--in", bad.string()}).code, cli::kInput);
}

TEST(Cli, SampleDeterministic) {
  const std::vector<std::string> args{"sample", "--nodes", "6", "--count", "25", "--edge-prob", "0.4", "--seed", "11"};
  const auto a = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(lines(a.out).size(), 26U);
  EXPECT_EQ(run(args).out, a.out);
}

// Byte-identical output for repeated runs and for any thread count.
TEST(Cli, DeterministicAcrossThreads) {
  const std::vector<std::vector<std::string>> commands{
      {"complexity", "--topology", "moore"},
      {"complexity", "--topology", "star", "--nodes", "9", "--format", "csv"},
      {"curve", "--topology", "ring", "--nodes", "9"},
      {"sweep", "--nodes", "6"},
      {"sweep", "--nodes", "5", "--mode", "labeled"},
      {"sweep", "--nodes", "6", "--mode", "sampled", "--count", "40", "--edge-prob", "0.5", "--seed", "4"},
      {"topologies", "--min", "6", "--max", "8"},
      {"sample", "--nodes", "7", "--count", "20", "--edge-prob", "0.3", "--seed", "9"},
  };
  for (const auto& command : commands) {
    const auto baseline = run(command);
    ASSERT_EQ(baseline.code, 0) << command.front() << ": " << baseline.err;
    EXPECT_EQ(run(command).out, baseline.out);
    for (const std::string threads : {"1", "4"}) {
      auto args = command;
      args.insert(args.begin(), {"--threads", threads});
      EXPECT_EQ(run(args).out, baseline.out) << command.front() << " --threads " << threads;
    }
  }
}
