#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cpgc/bipartite_graph.hpp"
#include "cpgc/compressed_graph.hpp"
#include "cpgc/run_report.hpp"

namespace cpgc {

struct CpgcParams {
  double delta = 1.0;
};

inline void validate_delta(double delta) {
  if (!(delta >= 0.0 && delta <= 1.0))
    throw std::invalid_argument("delta must lie in [0, 1]");
}

/// Guaranteed right-partition width of an extractable clique:
/// floor(delta * log n / log(2n^2 / m_hat)). The ratio of logarithms is
/// base-independent; computed here in base 2. Quotients that land a floating
/// rounding error below an integer are snapped up before flooring so the
/// formula cannot lose a unit at exact boundaries.
inline std::uint32_t k_hat(std::uint64_t n, std::uint64_t m_hat, double delta) {
  validate_delta(delta);
  if (m_hat == 0 || n < 2) return 0;
  const double n_sq = static_cast<double>(n) * static_cast<double>(n);
  if (static_cast<double>(m_hat) > n_sq)
    throw std::invalid_argument("m_hat exceeds n^2");
  const double denom = std::log2(2.0 * n_sq / static_cast<double>(m_hat));
  double q = delta * std::log2(static_cast<double>(n)) / denom;
  const double nearest = std::round(q);
  if (nearest > q && nearest - q < 1e-9) q = nearest;
  return static_cast<std::uint32_t>(std::floor(q));
}

/// Minimum edge count for clique extraction to compress at all:
/// ceil(2 * n^(2 - delta/2)). Below it every extractable clique is trivial.
inline std::uint64_t min_edges_for_compression(std::uint64_t n, double delta) {
  validate_delta(delta);
  const double x = 2.0 * std::pow(static_cast<double>(n), 2.0 - delta / 2.0);
  const double nearest = std::round(x);
  if (std::abs(nearest - x) < 1e-9) return static_cast<std::uint64_t>(nearest);
  return static_cast<std::uint64_t>(std::ceil(x));
}

/// Closed-form ceiling on the compressed edge count,
/// 2m(2/k + 4/(delta log2 n) + 1/n^(1-delta)) + 2n^(2-delta/2), valid when
/// m > 2n^(2-delta/2). Outside that regime there is no guarantee and the
/// bound is reported as not applicable.
inline std::optional<double> theoretical_edge_bound(std::uint64_t n,
                                                    std::uint64_t m,
                                                    double delta) {
  validate_delta(delta);
  if (n < 2) return std::nullopt;
  const double trivial_tail =
      2.0 * std::pow(static_cast<double>(n), 2.0 - delta / 2.0);
  if (!(static_cast<double>(m) > trivial_tail)) return std::nullopt;
  const std::uint32_t k = k_hat(n, m, delta);
  const double dm = static_cast<double>(m);
  return 2.0 * dm *
             (2.0 / k + 4.0 / (delta * std::log2(static_cast<double>(n))) +
              std::pow(static_cast<double>(n), delta - 1.0)) +
         trivial_tail;
}

/// Result of one clique-stripping pass.
struct CsaResult {
  std::vector<CliqueRecord> new_cliques;
  std::uint32_t gamma = 0;  // cliques materialized by this call
  // Candidate set: every w whose degree reaches the k_hat-th largest,
  // in (degree desc, id asc) order. Kept for diagnostics.
  std::vector<vertex_t> candidates;
};

/// Clique stripping: selects the W vertices whose degree reaches the
/// k_hat-th largest, partitions them into consecutive blocks of exactly
/// k_hat (leftovers wait for a later call), and extracts each block together
/// with its common neighbors as one clique. Extracted edges are removed from
/// g and the block's degrees are reduced by the left-partition size.
///
/// A block only materializes when it strictly shrinks the graph
/// (|left| >= 2 and |left|*k_hat > |left| + k_hat); other blocks are skipped
/// untouched. q is the number of cliques extracted so far; new cliques are
/// indexed consecutively after it.
inline CsaResult csa_strip(std::uint32_t q, std::uint32_t k, BipartiteGraph& g,
                           DegreeVector& d_w) {
  if (k < 2) throw std::invalid_argument("csa_strip requires k_hat >= 2");
  CsaResult res;
  if (k > g.n_w()) return res;

  std::vector<vertex_t> order(g.n_w());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](vertex_t a, vertex_t b) {
    if (d_w[a] != d_w[b]) return d_w[a] > d_w[b];
    return a < b;
  });

  const std::uint32_t threshold = d_w[order[k - 1]];
  for (vertex_t w : order) {
    if (d_w[w] < threshold) break;
    res.candidates.push_back(w);
  }

  const std::size_t blocks = res.candidates.size() / k;
  for (std::size_t c = 0; c < blocks; ++c) {
    std::span<const vertex_t> block(res.candidates.data() + c * k, k);
    std::vector<vertex_t> left = g.common_neighbors(block);
    const std::uint64_t nl = left.size();
    if (nl < 2 || nl * k <= nl + k) continue;  // would not shrink the graph
    CliqueRecord rec;
    rec.index_q = q + res.gamma;
    rec.right_K.assign(block.begin(), block.end());
    rec.left_U = std::move(left);
    g.remove_biclique(rec.left_U, rec.right_K);
    for (vertex_t w : rec.right_K) d_w[w] -= static_cast<std::uint32_t>(nl);
    res.new_cliques.push_back(std::move(rec));
    ++res.gamma;
  }
  return res;
}

struct CompressionResult {
  CompressedGraph graph;
  RunReport report;
};

namespace detail {
inline void init_report(RunReport& rep, const BipartiteGraph& g,
                        double delta, const char* algo) {
  rep.algo = algo;
  rep.n_u = g.n_u();
  rep.n_w = g.n_w();
  rep.n = std::max(g.n_u(), g.n_w());
  rep.delta = delta;
  rep.m = g.m();
  rep.unbalanced = g.n_u() != g.n_w();
  rep.threshold_trivial = min_edges_for_compression(rep.n, delta);
  rep.threshold_fm_loop =
      std::pow(static_cast<double>(rep.n), 2.0 - delta);
}
}  // namespace detail

/// Full compression loop: repeatedly strips cliques while k_hat > 1,
/// recomputing m_hat and k_hat after every pass, then assembles the
/// tripartite graph from the extracted cliques and the leftover edges.
/// A pass that materializes nothing cannot change m_hat, so it exits the
/// loop directly. The input graph is not modified.
inline CompressionResult cpgc_compress(const BipartiteGraph& g,
                                       const CpgcParams& params) {
  validate_delta(params.delta);
  CompressionResult out;
  RunReport& rep = out.report;
  detail::init_report(rep, g, params.delta, "cpgc");

  const auto t0 = std::chrono::steady_clock::now();
  BipartiteGraph work = g;
  DegreeVector d_w = degrees_w(work);
  std::uint64_t m_hat = work.m();
  std::uint32_t k = std::min<std::uint32_t>(k_hat(rep.n, m_hat, params.delta),
                                            work.n_w());

  std::vector<CliqueRecord> cliques;
  std::uint32_t iter = 0;
  while (k > 1) {
    CsaResult pass = csa_strip(static_cast<std::uint32_t>(cliques.size()), k,
                               work, d_w);
    ++iter;
    rep.trace.push_back({iter, m_hat, k, pass.gamma, 0});
    for (auto& c : pass.new_cliques) cliques.push_back(std::move(c));
    m_hat = std::accumulate(d_w.begin(), d_w.end(), std::uint64_t{0});
    if (m_hat != work.m())
      throw std::logic_error("degree bookkeeping diverged from edge count");
    if (pass.gamma == 0) break;  // m_hat unchanged, k_hat would not move
    k = std::min<std::uint32_t>(k_hat(rep.n, m_hat, params.delta), work.n_w());
  }
  rep.final_m_hat = m_hat;
  rep.final_k_hat = std::min<std::uint32_t>(
      k_hat(rep.n, m_hat, params.delta), work.n_w());

  out.graph = assemble_compressed(std::move(work), std::move(cliques));
  const auto t1 = std::chrono::steady_clock::now();
  rep.m_star = out.graph.m_star;
  rep.clique_count = out.graph.cliques.size();
  rep.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return out;
}

}  // namespace cpgc
