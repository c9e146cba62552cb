#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

namespace cpgc {

/// One clique-extraction iteration. m_hat is the edge count the iteration
/// started from (the value that determined k_hat); c_evals counts ordered-set
/// evaluations and is only nonzero for the tree-based compressor.
struct IterationRecord {
  std::uint32_t iter = 0;
  std::uint64_t m_hat = 0;
  std::uint32_t k_hat = 0;
  std::uint32_t cliques = 0;
  std::uint64_t c_evals = 0;
};

/// Metrics of one compression run.
///
/// CSV layout (see README): a leading '#' metadata line, the per-iteration
/// section `iter,m_hat,k_hat,cliques_this_iter,cum_cliques` (with a trailing
/// `c_eval_count` column for algo "fm"), then the summary section
/// `m,m_star,ratio,wall_ms`.
struct RunReport {
  std::string algo;  // "cpgc" or "fm"
  std::uint32_t n_u = 0;
  std::uint32_t n_w = 0;
  std::uint32_t n = 0;  // max(n_u, n_w), the n the k formula uses
  double delta = 0.0;

  std::uint64_t m = 0;
  std::uint64_t m_star = 0;
  std::uint64_t clique_count = 0;
  std::uint64_t final_m_hat = 0;
  std::uint32_t final_k_hat = 0;
  double wall_ms = 0.0;

  // Stopping-rule context. threshold_trivial is the minimum edge count below
  // which clique extraction cannot compress (also where k_hat drops to 1);
  // threshold_fm_loop is the tree-based algorithm's own loop guard n^(2-delta).
  std::uint64_t threshold_trivial = 0;
  double threshold_fm_loop = 0.0;
  bool unbalanced = false;       // n_u != n_w; formulas then use n = max
  std::uint32_t back_edges = 0;  // general-graph runs only, reported separately

  std::vector<IterationRecord> trace;

  double ratio() const {
    return m_star == 0 ? 1.0 : static_cast<double>(m) / static_cast<double>(m_star);
  }

  std::string to_csv() const {
    char buf[256];
    std::string out;
    std::snprintf(buf, sizeof(buf),
                  "# algo=%s n_u=%u n_w=%u n=%u delta=%g unbalanced=%d "
                  "threshold_trivial=%llu threshold_fm_loop=%g back_edges=%u "
                  "final_m_hat=%llu final_k_hat=%u\n",
                  algo.c_str(), n_u, n_w, n, delta, unbalanced ? 1 : 0,
                  static_cast<unsigned long long>(threshold_trivial),
                  threshold_fm_loop, back_edges,
                  static_cast<unsigned long long>(final_m_hat), final_k_hat);
    out += buf;
    const bool fm = algo == "fm";
    out += fm ? "iter,m_hat,k_hat,cliques_this_iter,cum_cliques,c_eval_count\n"
              : "iter,m_hat,k_hat,cliques_this_iter,cum_cliques\n";
    std::uint64_t cum = 0;
    for (const auto& r : trace) {
      cum += r.cliques;
      if (fm) {
        std::snprintf(buf, sizeof(buf), "%u,%llu,%u,%u,%llu,%llu\n", r.iter,
                      static_cast<unsigned long long>(r.m_hat), r.k_hat,
                      r.cliques, static_cast<unsigned long long>(cum),
                      static_cast<unsigned long long>(r.c_evals));
      } else {
        std::snprintf(buf, sizeof(buf), "%u,%llu,%u,%u,%llu\n", r.iter,
                      static_cast<unsigned long long>(r.m_hat), r.k_hat,
                      r.cliques, static_cast<unsigned long long>(cum));
      }
      out += buf;
    }
    out += "m,m_star,ratio,wall_ms\n";
    std::snprintf(buf, sizeof(buf), "%llu,%llu,%.6f,%.3f\n",
                  static_cast<unsigned long long>(m),
                  static_cast<unsigned long long>(m_star), ratio(), wall_ms);
    out += buf;
    return out;
  }
};

}  // namespace cpgc
