// Command-line surface of the toolkit: instance generation, compression,
// matching, verification, and benchmark sweeps. All outputs are plain CSV or
// the text formats documented in the README.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cpgc/cpgc.hpp"

namespace {

// Relative output paths land in $CPGC_OUT_DIR when it is set.
std::string out_path(const std::string& path) {
  const char* dir = std::getenv("CPGC_OUT_DIR");
  if (!dir || !*dir || path.empty()) return path;
  std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  std::filesystem::create_directories(dir);
  return (std::filesystem::path(dir) / p).string();
}

std::ofstream open_out(const std::string& path) {
  const std::string resolved = out_path(path);
  std::ofstream out(resolved);
  if (!out) throw cpgc::IoError(resolved, 0, "cannot open for writing");
  return out;
}

cpgc::CompressionResult run_compressor(const cpgc::BipartiteGraph& g,
                                       const std::string& algo, double delta) {
  if (algo == "cpgc") return cpgc::cpgc_compress(g, {delta});
  if (algo == "fm") return cpgc::fm_compress(g, delta);
  throw CLI::ValidationError("--algo", "must be 'cpgc' or 'fm'");
}

constexpr const char* kMatchCsvHeader =
    "engine,input_kind,n,m_or_mstar,cardinality,phases,wall_ms\n";
constexpr const char* kBenchCsvHeader =
    "algo,n,p,delta,seed,m,m_star,ratio,cliques,iterations,wall_ms\n";

int cmd_gen(std::uint32_t n, double p, std::uint64_t seed,
            const std::string& out) {
  const auto g = cpgc::generate({n, p, seed});
  cpgc::write_graph_file(out_path(out), g);
  std::cout << "wrote n=" << n << " p=" << p << " seed=" << seed
            << " m=" << g.m() << " to " << out_path(out) << "\n";
  return 0;
}

int cmd_compress(const std::string& in, const std::string& algo, double delta,
                 const std::string& out, const std::string& report_path,
                 bool general) {
  cpgc::CompressionResult result;
  if (general) {
    const auto file = cpgc::read_general_file(in);
    auto gres = cpgc::compress_general(
        file.graph, delta, algo == "fm" ? cpgc::Algo::fm : cpgc::Algo::cpgc,
        file.undirected);
    result.graph = std::move(gres.graph.core);
    result.report = std::move(gres.report);
  } else {
    const auto g = cpgc::read_graph_file(in);
    result = run_compressor(g, algo, delta);
  }
  if (!out.empty()) cpgc::write_compressed_file(out_path(out), result.graph);
  if (!report_path.empty()) open_out(report_path) << result.report.to_csv();
  const auto& r = result.report;
  std::printf("algo=%s m=%llu m_star=%llu ratio=%.6f cliques=%llu "
              "iterations=%zu wall_ms=%.3f",
              r.algo.c_str(), static_cast<unsigned long long>(r.m),
              static_cast<unsigned long long>(r.m_star), r.ratio(),
              static_cast<unsigned long long>(r.clique_count), r.trace.size(),
              r.wall_ms);
  if (general) std::printf(" back_edges=%u", r.back_edges);
  std::printf("\n");
  return 0;
}

int cmd_match(const std::string& in, const std::string& kind,
              const std::string& out) {
  cpgc::MatchingResult res;
  std::uint32_t n = 0;
  std::uint64_t edges = 0;
  double wall_ms = 0;
  if (kind == "original") {
    const auto g = cpgc::read_graph_file(in);
    n = std::max(g.n_u(), g.n_w());
    edges = g.m();
    const auto t0 = std::chrono::steady_clock::now();
    res = cpgc::dinitz_bipartite(g);
    wall_ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  } else if (kind == "compressed") {
    const auto c = cpgc::read_compressed_file(in);
    n = std::max(c.n_u, c.n_w);
    edges = c.m_star;
    const auto t0 = std::chrono::steady_clock::now();
    res = cpgc::dinitz_compressed(c);
    wall_ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  } else {
    throw CLI::ValidationError("--input", "must be 'original' or 'compressed'");
  }
  char row[192];
  std::snprintf(row, sizeof(row), "dinitz,%s,%u,%llu,%llu,%u,%.3f\n",
                kind.c_str(), n, static_cast<unsigned long long>(edges),
                static_cast<unsigned long long>(res.cardinality), res.phases,
                wall_ms);
  if (out.empty()) {
    std::cout << kMatchCsvHeader << row;
  } else {
    open_out(out) << kMatchCsvHeader << row;
  }
  return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& compressed_path) {
  const auto g = cpgc::read_graph_file(graph_path);
  const auto c = cpgc::read_compressed_file(compressed_path);
  const auto v = cpgc::verify_compression(g, c);
  std::cout << "path preservation: " << (v.paths_ok ? "ok" : "FAIL") << "\n"
            << "edge partition: " << (v.partition_ok ? "ok" : "FAIL") << "\n"
            << "m_star bookkeeping: " << (v.bookkeeping_ok ? "ok" : "FAIL")
            << "\n";
  for (const auto& issue : v.issues) std::cerr << "issue: " << issue << "\n";
  return v.ok() ? 0 : 1;
}

struct BenchAccumulator {
  std::vector<std::vector<double>> columns{6};  // m, m*, ratio, cliques, iters, wall

  void add(const cpgc::RunReport& r) {
    columns[0].push_back(static_cast<double>(r.m));
    columns[1].push_back(static_cast<double>(r.m_star));
    columns[2].push_back(r.ratio());
    columns[3].push_back(static_cast<double>(r.clique_count));
    columns[4].push_back(static_cast<double>(r.trace.size()));
    columns[5].push_back(r.wall_ms);
  }

  static double mean(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x;
    return v.empty() ? 0.0 : s / static_cast<double>(v.size());
  }

  static double stddev(const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    const double mu = mean(v);
    double s = 0;
    for (double x : v) s += (x - mu) * (x - mu);
    return std::sqrt(s / static_cast<double>(v.size() - 1));
  }
};

int cmd_bench(std::vector<std::uint32_t> ns, std::vector<double> ps,
              std::vector<double> deltas, std::uint32_t seeds,
              std::vector<std::string> algos, std::uint32_t fm_max_n,
              bool no_verify, const std::string& out) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out.empty()) {
    file = open_out(out);
    os = &file;
  }
  *os << kBenchCsvHeader;
  char row[256];
  bool all_ok = true;
  for (std::uint32_t n : ns) {
    for (double p : ps) {
      for (double delta : deltas) {
        for (const auto& algo : algos) {
          if (algo == "fm" && n > fm_max_n) continue;
          BenchAccumulator acc;
          for (std::uint32_t seed = 0; seed < seeds; ++seed) {
            const auto g = cpgc::generate({n, p, seed});
            const auto result = run_compressor(g, algo, delta);
            const auto& r = result.report;
            if (!no_verify) {
              const auto v = cpgc::verify_compression(g, result.graph);
              if (!v.ok()) {
                all_ok = false;
                for (const auto& issue : v.issues)
                  std::cerr << "verification failure (algo=" << algo
                            << " n=" << n << " p=" << p << " delta=" << delta
                            << " seed=" << seed << "): " << issue << "\n";
              }
              if (r.clique_count > 0 && r.m_star > r.m) {
                all_ok = false;
                std::cerr << "ratio below 1 despite materialized cliques "
                          << "(algo=" << algo << " n=" << n << " p=" << p
                          << " delta=" << delta << " seed=" << seed << ")\n";
              }
              const auto bound =
                  cpgc::theoretical_edge_bound(r.n, g.m(), delta);
              if (bound && static_cast<double>(r.m_star) > *bound) {
                all_ok = false;
                std::cerr << "edge bound exceeded (algo=" << algo
                          << " n=" << n << " p=" << p << " delta=" << delta
                          << " seed=" << seed << "): m_star=" << r.m_star
                          << " bound=" << *bound << "\n";
              }
            }
            acc.add(r);
            std::snprintf(row, sizeof(row),
                          "%s,%u,%g,%g,%u,%llu,%llu,%.6f,%llu,%zu,%.3f\n",
                          algo.c_str(), n, p, delta, seed,
                          static_cast<unsigned long long>(r.m),
                          static_cast<unsigned long long>(r.m_star), r.ratio(),
                          static_cast<unsigned long long>(r.clique_count),
                          r.trace.size(), r.wall_ms);
            *os << row;
          }
          for (const char* stat : {"mean", "stddev"}) {
            const bool is_mean = stat[0] == 'm';
            auto f = [&](int c) {
              return is_mean ? BenchAccumulator::mean(acc.columns[c])
                             : BenchAccumulator::stddev(acc.columns[c]);
            };
            std::snprintf(row, sizeof(row),
                          "%s,%u,%g,%g,%s,%.3f,%.3f,%.6f,%.3f,%.3f,%.3f\n",
                          algo.c_str(), n, p, delta, stat, f(0), f(1), f(2),
                          f(3), f(4), f(5));
            *os << row;
          }
        }
      }
    }
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bipartite graph compression toolkit: partitions dense "
               "bipartite graphs into bicliques and rewires each through an "
               "auxiliary vertex, preserving all u-w path information"};
  app.require_subcommand(1);

  // gen
  std::uint32_t gen_n = 128;
  double gen_p = 0.9;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a random bipartite instance");
  gen->add_option("--n", gen_n, "Vertices per side")->required();
  gen->add_option("--p", gen_p, "Edge probability")->required();
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--out", gen_out, "Output graph file")->required();

  // compress
  std::string cmp_in, cmp_algo = "cpgc", cmp_out, cmp_report;
  double cmp_delta = 1.0;
  auto* cmp = app.add_subcommand("compress", "Compress a bipartite graph");
  cmp->add_option("input", cmp_in, "Input graph file")->required();
  cmp->add_option("--algo", cmp_algo, "Compressor: cpgc or fm")
      ->check(CLI::IsMember({"cpgc", "fm"}));
  cmp->add_option("--delta", cmp_delta, "Clique width parameter in [0,1]");
  cmp->add_option("--out", cmp_out, "Output compressed graph file");
  cmp->add_option("--report", cmp_report, "Per-run report CSV");
  bool cmp_general = false;
  cmp->add_flag("--general", cmp_general,
                "Input is a general graph ('n m d|u' format); compresses its "
                "double cover and reports the back-edge count separately");

  // match
  std::string match_in, match_kind = "original", match_out;
  auto* match = app.add_subcommand(
      "match", "Maximum-cardinality matching via Dinitz's algorithm");
  match->add_option("--in", match_in, "Input file")->required();
  match->add_option("--input", match_kind, "Input kind: original or compressed")
      ->check(CLI::IsMember({"original", "compressed"}));
  match->add_option("--out", match_out, "CSV output (default stdout)");

  // verify
  std::string ver_graph, ver_compressed;
  auto* ver = app.add_subcommand(
      "verify", "Check a (graph, compressed) pair; exit 0 iff all checks pass");
  ver->add_option("--graph", ver_graph, "Original graph file")->required();
  ver->add_option("--compressed", ver_compressed, "Compressed graph file")
      ->required();

  // bench
  std::vector<std::uint32_t> bench_n = {32, 64, 128, 256, 512, 1024};
  std::vector<double> bench_p = {0.8, 0.9, 0.98};
  std::vector<double> bench_delta = {0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  std::uint32_t bench_seeds = 10;
  std::vector<std::string> bench_algos = {"cpgc", "fm"};
  std::uint32_t bench_fm_max_n = 1024;
  bool bench_no_verify = false;
  std::string bench_out;
  auto* bench = app.add_subcommand(
      "bench", "Sweep {n} x {p} x {delta} x {seeds} x {algos}, emit CSV with "
               "per-cell mean/stddev rows");
  bench->add_option("--n-list", bench_n, "Vertices per side")->delimiter(',');
  bench->add_option("--p-list", bench_p, "Densities")->delimiter(',');
  bench->add_option("--delta-list", bench_delta, "Delta values")
      ->delimiter(',');
  bench->add_option("--seeds", bench_seeds, "Seeds 0..N-1 per cell");
  bench->add_option("--algos", bench_algos, "Compressors to run")
      ->delimiter(',')
      ->check(CLI::IsMember({"cpgc", "fm"}));
  bench->add_option("--fm-max-n", bench_fm_max_n,
                    "Skip fm above this n (ordered-set counts get costly)");
  bench->add_flag("--no-verify", bench_no_verify,
                  "Skip per-run verification and bound checks");
  bench->add_option("--out", bench_out, "CSV output (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen(gen_n, gen_p, gen_seed, gen_out);
    if (cmp->parsed())
      return cmd_compress(cmp_in, cmp_algo, cmp_delta, cmp_out, cmp_report,
                          cmp_general);
    if (match->parsed()) return cmd_match(match_in, match_kind, match_out);
    if (ver->parsed()) return cmd_verify(ver_graph, ver_compressed);
    if (bench->parsed())
      return cmd_bench(bench_n, bench_p, bench_delta, bench_seeds,
                       bench_algos, bench_fm_max_n, bench_no_verify,
                       bench_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
