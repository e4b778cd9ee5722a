/*******************************************************************************
 * @file:   bench.cc
 ******************************************************************************/
#include "bench.h"

#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>

#include <json.hpp>

#include "streamep/definitions.h"

extern char **environ;

namespace streamep::bench {

namespace {

namespace fs = std::filesystem;

int run_child(const std::vector<std::string> &args) {
  std::vector<char *> argv;
  for (const auto &arg : args) {
    argv.push_back(const_cast<char *>(arg.c_str()));
  }
  argv.push_back(nullptr);
  pid_t pid = 0;
  if (posix_spawn(&pid, argv[0], nullptr, nullptr, argv.data(), environ) != 0) {
    throw IoError("cannot spawn '" + args[0] + "'");
  }
  int status = 0;
  if (waitpid(pid, &status, 0) < 0) {
    throw IoError("waitpid failed");
  }
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<fs::path> list_graphs(const std::string &dir) {
  std::vector<fs::path> graphs;
  std::error_code ec;
  for (const auto &entry : fs::directory_iterator(dir, ec)) {
    if (entry.is_regular_file()) {
      graphs.push_back(entry.path());
    }
  }
  if (ec) {
    throw IoError("cannot list '" + dir + "': " + ec.message());
  }
  std::sort(graphs.begin(), graphs.end());
  return graphs;
}

} // namespace

double geometric_mean(const std::vector<double> &values) {
  double log_sum = 0.0;
  std::size_t count = 0;
  for (const double value : values) {
    if (value > 0.0) {
      log_sum += std::log(value);
      ++count;
    }
  }
  return count == 0 ? 0.0 : std::exp(log_sum / static_cast<double>(count));
}

std::vector<BenchRow> run_bench(const BenchConfig &config, const std::string &self_executable) {
  const auto graphs = list_graphs(config.graphs_dir);
  const fs::path summary = fs::temp_directory_path() / ("streamep_bench_" + std::to_string(getpid()) + ".json");

  std::vector<BenchRow> rows;
  for (const auto &graph : graphs) {
    for (const auto k : config.ks) {
      for (const auto &algorithm : config.algorithms) {
        const int code = run_child({self_executable, algorithm, "--graph", graph.string(), "--k", std::to_string(k),
                                    "--delta", std::to_string(config.delta), "--eps", std::to_string(config.epsilon),
                                    "--seed", std::to_string(config.seed), "--summary", summary.string()});
        if (code != 0) {
          throw IoError(algorithm + " failed on " + graph.string() + " (k=" + std::to_string(k) + ", exit " +
                        std::to_string(code) + ")");
        }
        std::ifstream in(summary);
        const auto json = nlohmann::json::parse(in);
        BenchRow row;
        row.graph = graph.filename().string();
        row.k = k;
        row.algorithm = algorithm;
        row.rf = json.at("rf").get<double>();
        row.runtime_ms = json.at("runtime_ms").get<double>();
        row.peak_rss_bytes = json.at("peak_rss_bytes").is_null() ? 0 : json.at("peak_rss_bytes").get<std::uint64_t>();
        rows.push_back(std::move(row));
      }
    }
  }
  std::error_code ec;
  fs::remove(summary, ec);
  return rows;
}

void write_bench_tsv(std::ostream &out, const std::vector<BenchRow> &rows) {
  out << std::setprecision(12);
  out << "graph\tk\talgo\trf\truntime_ms\tpeak_rss\n";
  std::map<std::pair<std::uint32_t, std::string>, std::vector<const BenchRow *>> groups;
  for (const auto &row : rows) {
    out << row.graph << '\t' << row.k << '\t' << row.algorithm << '\t' << row.rf << '\t' << row.runtime_ms << '\t'
        << row.peak_rss_bytes << '\n';
    groups[{row.k, row.algorithm}].push_back(&row);
  }
  for (const auto &[key, group] : groups) {
    std::vector<double> rf;
    std::vector<double> runtime;
    std::vector<double> rss;
    for (const BenchRow *row : group) {
      rf.push_back(row->rf);
      runtime.push_back(row->runtime_ms);
      rss.push_back(static_cast<double>(row->peak_rss_bytes));
    }
    out << "geomean\t" << key.first << '\t' << key.second << '\t' << geometric_mean(rf) << '\t'
        << geometric_mean(runtime) << '\t' << static_cast<std::uint64_t>(std::llround(geometric_mean(rss))) << '\n';
  }
}

} // namespace streamep::bench
