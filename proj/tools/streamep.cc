/*******************************************************************************
 * streamep command line.
 *
 * Exit codes: 0 success, 2 usage, 3 I/O or parse error, 4 balance
 * infeasibility.
 *
 * @file:   streamep.cc
 ******************************************************************************/
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "bench.h"
#include "streamep/assignment_io.h"
#include "streamep/freighte.h"
#include "streamep/graph_io.h"
#include "streamep/heistreame.h"
#include "streamep/rmat.h"
#include "streamep/run.h"

using namespace streamep;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitInfeasible = 4;

struct RunOptions {
  RunConfig config;
  std::string delta = "32768";
  std::string mode = "minimal";
  std::string alpha = "batch";
  std::string output;
  std::string summary;
  bool compact = false;
};

NodeID parse_delta(const std::string &text) {
  if (text == "32x") {
    return 32768;
  }
  if (text == "256x") {
    return 262144;
  }
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(text, &used);
    if (used == text.size() && value >= 1 && value < kInvalidNode) {
      return static_cast<NodeID>(value);
    }
  } catch (const std::exception &) {
  }
  throw ConfigError("invalid delta '" + text + "' (expected a positive integer, 32x or 256x)");
}

void add_run_options(CLI::App *app, RunOptions &options, bool multilevel) {
  app->add_option("--graph", options.config.graph_path, "METIS text or binary adjacency graph")->required();
  app->add_option("--k", options.config.k, "number of blocks")->required();
  app->add_option("--eps", options.config.epsilon, "allowed imbalance")->capture_default_str();
  app->add_option("--seed", options.config.seed, "random seed")->capture_default_str();
  app->add_option("--output", options.output, "assignment file (u v block per line)");
  app->add_flag("--compact", options.compact, "write one block id per line instead of triples");
  app->add_option("--summary", options.summary, "JSON summary file (default: stdout)");
  app->add_option("--delta", options.delta, "buffer size: integer, 32x or 256x")->capture_default_str();
  if (multilevel) {
    app->add_option("--mode", options.mode, "minimal | maximal | rsubset:R")->capture_default_str();
    app->add_option("--alpha", options.alpha, "static:Y | batch | dynamic")->capture_default_str();
    app->add_option("--rounds", options.config.rounds, "label propagation rounds")->capture_default_str();
    app->add_option("--threshold", options.config.threshold_multiplier, "coarsening threshold multiplier")
        ->capture_default_str();
  }
}

void emit_summary(const std::string &path, const std::string &json) {
  if (path.empty()) {
    std::cout << json << std::endl;
    return;
  }
  std::ofstream out(path, std::ios::trunc);
  if (!(out << json << '\n')) {
    throw IoError("cannot write summary '" + path + "'");
  }
}

void run_partitioner(const std::string &algorithm, RunOptions &options) {
  options.config.delta = parse_delta(options.delta);
  options.config.mode = ModelMode::parse(options.mode);
  options.config.alpha = AlphaPolicy::parse(options.alpha);
  options.config.validate();

  RunResult result;
  if (algorithm == "heistreame") {
    result = partition_stream(options.config);
  } else if (algorithm == "freighte") {
    result = freighte_partition_stream(options.config);
  } else {
    result = hash_partition_stream(options.config);
  }

  if (!options.output.empty()) {
    write_assignment_file(options.output, result.assignments, options.compact);
  }
  SummaryContext context{algorithm, options.config.graph_path, options.config.k,
                         algorithm == "heistreame" ? options.config.delta : 0, options.config.seed};
  emit_summary(options.summary, summary_json(context, result.report));
}

void run_evaluate(const std::string &graph_path, const std::string &assignment_path, BlockID k, double epsilon,
                  const std::string &summary) {
  if (k < 1) {
    throw ConfigError("k must be at least 1");
  }
  auto stream = open_graph_stream(graph_path);
  const GraphHeader header = stream->header();
  std::vector<std::uint64_t> graph_edges;
  graph_edges.reserve(header.m);
  std::vector<NodeID> neighbors;
  for (NodeID u = 0; stream->next(neighbors); ++u) {
    for (const NodeID v : neighbors) {
      if (u < v) {
        graph_edges.push_back((static_cast<std::uint64_t>(u) << 32) | v);
      }
    }
  }

  const auto assignment = read_assignment_file(assignment_path);
  std::vector<std::uint64_t> assigned_edges;
  assigned_edges.reserve(assignment.size());
  for (const auto &a : assignment) {
    if (a.u >= header.n || a.v >= header.n) {
      throw FormatError("assignment references a vertex outside the graph");
    }
    assigned_edges.push_back((static_cast<std::uint64_t>(std::min(a.u, a.v)) << 32) | std::max(a.u, a.v));
  }
  std::sort(graph_edges.begin(), graph_edges.end());
  std::sort(assigned_edges.begin(), assigned_edges.end());
  if (graph_edges != assigned_edges) {
    throw FormatError("assignment does not cover every graph edge exactly once");
  }

  const MetricsReport report = evaluate_assignment(assignment, header.n, header.m, k, epsilon);
  emit_summary(summary, summary_json({"evaluate", graph_path, k, 0, 0}, report));
}

std::vector<std::string> split(const std::string &text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(',', start), text.size());
    if (end > start) {
      parts.push_back(text.substr(start, end - start));
    }
    start = end + 1;
  }
  return parts;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Streaming edge partitioning"};
  app.require_subcommand(1);

  RunOptions heistreame_options;
  RunOptions freighte_options;
  RunOptions hash_options;
  auto *heistreame_cmd = app.add_subcommand("heistreame", "buffered multilevel streaming edge partitioner");
  add_run_options(heistreame_cmd, heistreame_options, true);
  auto *freighte_cmd = app.add_subcommand("freighte", "one-pass dual-hypergraph streaming edge partitioner");
  add_run_options(freighte_cmd, freighte_options, false);
  freighte_cmd->add_flag("--full-net-record", freighte_options.config.full_net_record, "keep every block per net");
  auto *hash_cmd = app.add_subcommand("hash", "hashing baseline");
  add_run_options(hash_cmd, hash_options, false);

  std::string eval_graph;
  std::string eval_assignment;
  BlockID eval_k = 0;
  double eval_eps = 0.03;
  std::string eval_summary;
  auto *evaluate_cmd = app.add_subcommand("evaluate", "metrics of an assignment file");
  evaluate_cmd->add_option("--graph", eval_graph)->required();
  evaluate_cmd->add_option("--assignment", eval_assignment)->required();
  evaluate_cmd->add_option("--k", eval_k)->required();
  evaluate_cmd->add_option("--eps", eval_eps)->capture_default_str();
  evaluate_cmd->add_option("--summary", eval_summary);

  std::string convert_in;
  std::string convert_out;
  auto *convert_cmd = app.add_subcommand("convert", "METIS text to binary adjacency");
  convert_cmd->add_option("--input", convert_in)->required();
  convert_cmd->add_option("--output", convert_out)->required();

  NodeID gen_n = 0;
  EdgeID gen_m = 0;
  std::uint64_t gen_seed = 1;
  RmatParams gen_params;
  std::string gen_out;
  auto *generate_cmd = app.add_subcommand("generate", "R-MAT graph in METIS text");
  generate_cmd->add_option("--n", gen_n)->required();
  generate_cmd->add_option("--m", gen_m)->required();
  generate_cmd->add_option("--seed", gen_seed)->capture_default_str();
  generate_cmd->add_option("--a", gen_params.a)->capture_default_str();
  generate_cmd->add_option("--b", gen_params.b)->capture_default_str();
  generate_cmd->add_option("--c", gen_params.c)->capture_default_str();
  generate_cmd->add_option("--output", gen_out)->required();

  bench::BenchConfig bench_config;
  std::string bench_ks = "2,32,1024";
  std::string bench_algos = "heistreame,freighte,hash";
  std::string bench_out;
  auto *bench_cmd = app.add_subcommand("bench", "benchmark harness (TSV with per-k geometric means)");
  bench_cmd->add_option("--graphs", bench_config.graphs_dir)->required();
  bench_cmd->add_option("--ks", bench_ks)->capture_default_str();
  bench_cmd->add_option("--algos", bench_algos)->capture_default_str();
  bench_cmd->add_option("--delta", bench_config.delta)->capture_default_str();
  bench_cmd->add_option("--eps", bench_config.epsilon)->capture_default_str();
  bench_cmd->add_option("--seed", bench_config.seed)->capture_default_str();
  bench_cmd->add_option("--output", bench_out, "TSV file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (heistreame_cmd->parsed()) {
      run_partitioner("heistreame", heistreame_options);
    } else if (freighte_cmd->parsed()) {
      run_partitioner("freighte", freighte_options);
    } else if (hash_cmd->parsed()) {
      run_partitioner("hash", hash_options);
    } else if (evaluate_cmd->parsed()) {
      run_evaluate(eval_graph, eval_assignment, eval_k, eval_eps, eval_summary);
    } else if (convert_cmd->parsed()) {
      convert_metis_to_binary(convert_in, convert_out);
    } else if (generate_cmd->parsed()) {
      write_rmat_metis(gen_out, gen_n, gen_m, gen_seed, gen_params);
    } else if (bench_cmd->parsed()) {
      for (const auto &k : split(bench_ks)) {
        bench_config.ks.push_back(static_cast<std::uint32_t>(std::stoul(k)));
      }
      bench_config.algorithms = split(bench_algos);
      for (const auto &algorithm : bench_config.algorithms) {
        if (algorithm != "heistreame" && algorithm != "freighte" && algorithm != "hash") {
          throw ConfigError("unknown algorithm '" + algorithm + "'");
        }
      }
      const auto self = std::filesystem::read_symlink("/proc/self/exe").string();
      const auto rows = bench::run_bench(bench_config, self);
      if (bench_out.empty()) {
        bench::write_bench_tsv(std::cout, rows);
      } else {
        std::ofstream out(bench_out, std::ios::trunc);
        bench::write_bench_tsv(out, rows);
        if (!out) {
          throw IoError("cannot write '" + bench_out + "'");
        }
      }
    }
  } catch (const ConfigError &e) {
    std::cerr << "error [config]: " << e.what() << std::endl;
    return kExitUsage;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error [config]: " << e.what() << std::endl;
    return kExitUsage;
  } catch (const FormatError &e) {
    std::cerr << "error [parse]: " << e.what() << std::endl;
    return kExitIo;
  } catch (const IoError &e) {
    std::cerr << "error [io]: " << e.what() << std::endl;
    return kExitIo;
  } catch (const InfeasibleError &e) {
    std::cerr << "error [partition]: " << e.what() << std::endl;
    return kExitInfeasible;
  }
  return 0;
}
