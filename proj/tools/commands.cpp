#include "commands.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "kcl/engine.hpp"
#include "kcl/graph.hpp"
#include "kcl/oracle.hpp"
#include "kcl/parallel.hpp"
#include "kcl/sink.hpp"

namespace kcl::cli {
namespace {

using Clock = std::chrono::steady_clock;

std::uint32_t default_threads() {
  if (const char* env = std::getenv("KCL_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::uint32_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

std::optional<Clock::time_point> deadline_after(double seconds) {
  if (seconds <= 0) return std::nullopt;
  return Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

struct ListOptions {
  std::string input;
  std::uint32_t k = 0;
  std::string algo = "dist";
  bool no_memo = false;
  bool no_prune = false;
  std::uint64_t tau = kDefaultTau;
  std::uint32_t threads = 0;
  bool count_only = false;
  std::string output;
  double time_limit = 0;
  std::string dense_policy = "turan";
};

struct BenchOptions {
  std::string input;
  std::uint32_t kmin = 0;
  std::uint32_t kmax = 0;
  std::string csv;
  std::vector<std::string> configs{"baseline", "memo", "memo+prune"};
  std::uint32_t threads = 0;
  double time_limit = 0;
};

struct OracleOptions {
  std::string input;
  std::uint32_t k = 0;
};

int load(const std::string& path, UndirectedGraph& g, std::ostream& err) {
  try {
    g = load_edge_list_file(path);
    return kOk;
  } catch (const ParseError& e) {
    err << "kcl: " << path << ": " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    err << "kcl: " << e.what() << '\n';
    return kParseError;
  }
}

int cmd_list(const ListOptions& o, std::ostream& out, std::ostream& err) {
  EngineConfig config;
  config.k = o.k;
  config.memo_enabled = o.algo == "dist" && !o.no_memo;
  config.prune_enabled = o.algo == "dist" && !o.no_prune;
  config.tau = o.tau;
  config.threads = o.threads ? o.threads : default_threads();
  config.dense_policy = o.dense_policy == "always" ? DensePolicy::always : DensePolicy::turan;
  try {
    config.validate();
  } catch (const ConfigError& e) {
    err << "kcl list: " << e.what() << '\n';
    return kBadArguments;
  }

  UndirectedGraph g;
  if (int rc = load(o.input, g, err); rc != kOk) return rc;

  const bool write = !o.count_only && !o.output.empty();
  std::ofstream file;
  if (write) {
    file.open(o.output);
    if (!file) {
      err << "kcl list: cannot open " << o.output << '\n';
      return kBadArguments;
    }
  }

  const auto start = Clock::now();
  config.deadline = deadline_after(o.time_limit);
  EngineStats stats;
  std::uint64_t count = 0;
  try {
    if (write) {
      WriterSink sink(file, g);
      stats = node_parallel_list(g, config, sink);
      count = sink.count();
    } else {
      CountingSink sink;
      stats = node_parallel_list(g, config, sink);
      count = sink.count();
    }
  } catch (const TimeLimitExceeded&) {
    err << "kcl list: time limit exceeded\n";
    if (write) {
      file.close();
      std::filesystem::remove(o.output);
    }
    return kTimeLimit;
  }
  const double ms = elapsed_ms(start);

  out << "cliques=" << count << " time_ms=" << format_ms(ms) << " peak_kN=" << stats.peak_weighted_size
      << " resets=" << stats.trie_resets << " pruned=" << stats.pruned_subgraphs << '\n';
  return kOk;
}

int cmd_bench(const BenchOptions& o, std::ostream& err) {
  if (o.kmin < 2 || o.kmin > o.kmax) {
    err << "kcl bench: need 2 <= kmin <= kmax\n";
    return kBadArguments;
  }
  for (const auto& c : o.configs) {
    if (c != "baseline" && c != "memo" && c != "memo+prune") {
      err << "kcl bench: unknown config '" << c << "'\n";
      return kBadArguments;
    }
  }
  UndirectedGraph g;
  if (int rc = load(o.input, g, err); rc != kOk) return rc;

  std::ofstream csv(o.csv);
  if (!csv) {
    err << "kcl bench: cannot open " << o.csv << '\n';
    return kBadArguments;
  }
  const std::string dataset = std::filesystem::path(o.input).stem().string();
  const std::uint32_t threads = o.threads ? o.threads : default_threads();

  csv << "dataset,k,config,threads,time_ms,clique_count,listing_calls,dense_calls,ist_calls,pruned,peak_kN,"
         "resets,status\n";
  for (std::uint32_t k = o.kmin; k <= o.kmax; ++k) {
    for (const auto& name : o.configs) {
      EngineConfig config;
      config.k = k;
      config.memo_enabled = name != "baseline";
      config.prune_enabled = name == "memo+prune";
      config.threads = threads;

      csv << dataset << ',' << k << ',' << name << ',' << threads << ',';
      const auto start = Clock::now();
      config.deadline = deadline_after(o.time_limit);
      try {
        CountingSink sink;
        // Preprocessing is part of the measured time.
        const EngineStats s = node_parallel_list(g, config, sink);
        const double ms = elapsed_ms(start);
        csv << format_ms(ms) << ',' << sink.count() << ',' << s.listing_calls << ',' << s.listing_dense_calls
            << ',' << s.listing_ist_calls << ',' << s.pruned_subgraphs << ',' << s.peak_weighted_size << ','
            << s.trie_resets << ",ok\n";
      } catch (const TimeLimitExceeded&) {
        csv << ",,,,,,,,timeout\n";
      }
      csv.flush();
    }
  }
  return kOk;
}

int cmd_oracle(const OracleOptions& o, std::ostream& out, std::ostream& err) {
  UndirectedGraph g;
  if (int rc = load(o.input, g, err); rc != kOk) return rc;
  if (g.vertex_count() > oracle::kBruteForceMaxVertices) {
    err << "kcl oracle: graph has " << g.vertex_count() << " vertices; brute force is limited to "
        << oracle::kBruteForceMaxVertices << '\n';
    return kBadArguments;
  }
  auto cliques = oracle::brute_force_k_cliques(g, o.k);
  out << "cliques=" << cliques.size() << '\n';
  if (cliques.size() <= 1000) {
    for (const auto& c : cliques) {
      for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << g.original_label(c[i]);
      out << '\n';
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-clique listing with induced-subgraph-trie memoization", "kcl"};
  app.require_subcommand(1);

  ListOptions list;
  auto* list_cmd = app.add_subcommand("list", "List or count k-cliques");
  list_cmd->add_option("--input", list.input, "Edge-list file")->required()->check(CLI::ExistingFile);
  list_cmd->add_option("--k", list.k, "Clique size")->required();
  list_cmd->add_option("--algo", list.algo, "dist or baseline")->check(CLI::IsMember({"dist", "baseline"}));
  list_cmd->add_flag("--no-memo", list.no_memo, "Disable trie memoization");
  list_cmd->add_flag("--no-prune", list.no_prune, "Disable soft-embedding pruning");
  list_cmd->add_option("--tau", list.tau, "Soft bound on k*N per worker");
  list_cmd->add_option("--threads", list.threads, "Worker threads (default $KCL_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  list_cmd->add_flag("--count-only", list.count_only, "Do not write cliques");
  list_cmd->add_option("--output", list.output, "Write cliques here, one per line");
  list_cmd->add_option("--time-limit", list.time_limit, "Seconds; 0 means none");
  list_cmd->add_option("--dense-policy", list.dense_policy, "turan or always")
      ->check(CLI::IsMember({"turan", "always"}));

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run a k sweep over configurations and write CSV");
  bench_cmd->add_option("--input", bench.input, "Edge-list file")->required()->check(CLI::ExistingFile);
  bench_cmd->add_option("--kmin", bench.kmin)->required();
  bench_cmd->add_option("--kmax", bench.kmax)->required();
  bench_cmd->add_option("--csv", bench.csv, "Output CSV path")->required();
  bench_cmd->add_option("--configs", bench.configs, "Comma-separated: baseline,memo,memo+prune")->delimiter(',');
  bench_cmd->add_option("--threads", bench.threads)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--time-limit", bench.time_limit, "Seconds per run; 0 means none");

  OracleOptions orc;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference listing (n <= 64)");
  oracle_cmd->add_option("--input", orc.input, "Edge-list file")->required()->check(CLI::ExistingFile);
  oracle_cmd->add_option("--k", orc.k)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int rc = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return rc == 0 ? kOk : kBadArguments;
  }

  if (*list_cmd) return cmd_list(list, out, err);
  if (*bench_cmd) return cmd_bench(bench, err);
  return cmd_oracle(orc, out, err);
}

}  // namespace kcl::cli
