#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cpgc/bipartite_graph.hpp"
#include "cpgc/compress_cpgc.hpp"
#include "cpgc/compressed_graph.hpp"
#include "cpgc/run_report.hpp"

namespace cpgc {

/// d * (d-1) * ... * (d-count+1): the number of ordered count-subsets of a
/// d-set. Zero whenever d < count; exact for any operand size.
inline mpz_class falling_factorial(std::int64_t d, std::uint32_t count) {
  if (count == 0) return 1;
  if (d < static_cast<std::int64_t>(count)) return 0;
  mpz_class acc = 1;
  for (std::uint32_t i = 0; i < count; ++i) acc *= (d - i);
  return acc;
}

/// Per-u binary counter tree over a halving partition of W.
///
/// Nodes live in heap order (root at 1, children of i at 2i and 2i+1); the
/// node labeled by bit string omega sits at heap index (1 << |omega|) + omega.
/// W is padded to the next power of two; pad leaves hold a permanent zero so
/// no descent can reach them. At build time node omega counts
/// |N(u) ∩ W_omega|; selection decrements along root-to-leaf paths, which may
/// legitimately push counters of non-adjacent owners below zero.
class NeighborhoodTree {
 public:
  NeighborhoodTree(const BipartiteGraph& g, vertex_t owner)
      : owner_u_(owner), depth_r_(depth_for(g.n_w())) {
    const std::size_t leaves = std::size_t{1} << depth_r_;
    counters_.assign(2 * leaves, 0);
    for (vertex_t j = 0; j < g.n_w(); ++j)
      if (g.has_edge(owner, j)) counters_[leaves + j] = 1;
    for (std::size_t i = leaves - 1; i >= 1; --i)
      counters_[i] = counters_[2 * i] + counters_[2 * i + 1];
  }

  static std::uint32_t depth_for(vertex_t n_w) {
    std::uint32_t r = 0;
    while ((vertex_t{1} << r) < n_w) ++r;
    return r;
  }

  vertex_t owner_u() const { return owner_u_; }
  std::uint32_t depth_r() const { return depth_r_; }
  std::size_t leaf_count() const { return std::size_t{1} << depth_r_; }

  std::int64_t value(std::size_t node) const { return counters_[node]; }
  std::int64_t root_value() const { return counters_[1]; }
  std::size_t leaf_node(vertex_t w) const { return leaf_count() + w; }

  /// Counter addressed by its bit-string label ("" is the root, "10" the
  /// right child's left child, ...).
  std::int64_t counter_at(std::string_view label) const {
    if (label.size() > depth_r_)
      throw std::out_of_range("label longer than tree depth");
    std::size_t node = 1;
    for (char c : label) {
      if (c != '0' && c != '1') throw std::invalid_argument("label must be bits");
      node = 2 * node + (c == '1');
    }
    return counters_[node];
  }

  void decrement_path_to(vertex_t w) {
    for (std::size_t node = leaf_node(w); node >= 1; node /= 2)
      --counters_[node];
  }

 private:
  vertex_t owner_u_;
  std::uint32_t depth_r_;
  std::vector<std::int64_t> counters_;
};

inline std::vector<NeighborhoodTree> build_trees(const BipartiteGraph& g) {
  std::vector<NeighborhoodTree> trees;
  trees.reserve(g.n_u());
  for (vertex_t i = 0; i < g.n_u(); ++i) trees.emplace_back(g, i);
  return trees;
}

/// Selection bookkeeping for one clique: stage t, surviving candidates U_t,
/// and the W vertices already chosen.
struct FmSelectionState {
  std::uint32_t t = 1;
  std::vector<vertex_t> u_t;
  std::vector<vertex_t> chosen_y;
};

/// c_j over the given node's j-child: the number of ordered sets counted as
/// sum over u in U_t of d_{u, omega.j} * (d_u - 1)^[k - t], where d_u is the
/// root counter and x^[c] the falling factorial. Exact integer arithmetic.
inline mpz_class count_ordered_sets(const FmSelectionState& state,
                                    const std::vector<NeighborhoodTree>& trees,
                                    std::size_t node, int j, std::uint32_t k) {
  if (j != 0 && j != 1) throw std::invalid_argument("j must be 0 or 1");
  if (k < state.t) throw std::invalid_argument("k must be >= stage t");
  const std::size_t child = 2 * node + j;
  mpz_class total = 0;
  for (vertex_t u : state.u_t) {
    const std::int64_t d_child = trees[u].value(child);
    if (d_child == 0) continue;
    total += d_child * falling_factorial(trees[u].root_value() - 1,
                                         k - state.t);
  }
  return total;
}

/// Label-addressed convenience overload.
inline mpz_class count_ordered_sets(const FmSelectionState& state,
                                    const std::vector<NeighborhoodTree>& trees,
                                    std::string_view node_label, int j,
                                    std::uint32_t k) {
  std::size_t node = 1;
  for (char c : node_label) node = 2 * node + (c == '1');
  return count_ordered_sets(state, trees, node, j, k);
}

struct FmSelection {
  bool found = false;
  std::vector<vertex_t> right_K;  // ordered y_1 ... y_k
  std::vector<vertex_t> left_U;   // common neighbors of right_K
  std::uint64_t c_evaluations = 0;
};

/// Selects k vertices of W by k root-to-leaf descents over the counter
/// trees, going left when c_0 >= c_1. After each selected leaf y_t the
/// candidate set shrinks to the u adjacent to y_t, and every tree of the
/// pre-shrink candidate set U_t is decremented along the root-to-y_t path,
/// which zeroes y_t out of future descents. Aborts (found = false) when a
/// stage has no completable ordered set left, i.e. no clique of width k
/// exists in the remaining graph.
inline FmSelection fm_select_k(const BipartiteGraph& g,
                               std::vector<NeighborhoodTree>& trees,
                               std::uint32_t k) {
  if (k < 1) throw std::invalid_argument("fm_select_k requires k >= 1");
  FmSelection sel;
  const std::uint32_t r = trees.empty() ? 0 : trees[0].depth_r();

  FmSelectionState state;
  state.u_t.resize(g.n_u());
  for (vertex_t i = 0; i < g.n_u(); ++i) state.u_t[i] = i;

  for (std::uint32_t t = 1; t <= k; ++t) {
    state.t = t;
    // Falling factorials depend only on root counters, which are stable
    // during one descent; compute them per stage.
    std::vector<mpz_class> weight(state.u_t.size());
    mpz_class stage_total = 0;
    for (std::size_t idx = 0; idx < state.u_t.size(); ++idx) {
      const auto& tree = trees[state.u_t[idx]];
      weight[idx] = falling_factorial(tree.root_value() - 1, k - t);
      stage_total += tree.root_value() * weight[idx];
    }
    if (stage_total == 0) return sel;  // no ordered k-set completes from here

    std::size_t node = 1;
    for (std::uint32_t level = 0; level < r; ++level) {
      mpz_class c0 = 0, c1 = 0;
      for (std::size_t idx = 0; idx < state.u_t.size(); ++idx) {
        const auto& tree = trees[state.u_t[idx]];
        const std::int64_t l = tree.value(2 * node);
        const std::int64_t h = tree.value(2 * node + 1);
        if (l != 0) c0 += l * weight[idx];
        if (h != 0) c1 += h * weight[idx];
      }
      sel.c_evaluations += 2;
      node = (c0 >= c1) ? 2 * node : 2 * node + 1;
    }

    const vertex_t y =
        static_cast<vertex_t>(node - (std::size_t{1} << r));
    if (y >= g.n_w())
      throw std::logic_error("descent reached a padded leaf");
    for (vertex_t prev : state.chosen_y)
      if (prev == y)
        throw std::logic_error("descent re-selected leaf w_" +
                               std::to_string(y));

    for (vertex_t u : state.u_t) trees[u].decrement_path_to(y);
    std::vector<vertex_t> next;
    next.reserve(state.u_t.size());
    for (vertex_t u : state.u_t)
      if (g.has_edge(u, y)) next.push_back(u);
    state.u_t = std::move(next);
    state.chosen_y.push_back(y);
  }

  sel.found = true;
  sel.right_K = std::move(state.chosen_y);
  sel.left_U = std::move(state.u_t);
  return sel;
}

/// Tree-guided baseline compressor: one clique per iteration while
/// m_hat >= n^(2-delta) and k_hat > 1, with all trees rebuilt from the
/// post-removal adjacency between cliques so every iteration starts from
/// counters consistent with the true graph. Remaining edges are trivial
/// cliques and stay direct; that phase and assembly are excluded from the
/// reported wall time.
inline CompressionResult fm_compress(const BipartiteGraph& g, double delta) {
  validate_delta(delta);
  CompressionResult out;
  RunReport& rep = out.report;
  detail::init_report(rep, g, delta, "fm");

  const auto t0 = std::chrono::steady_clock::now();
  BipartiteGraph work = g;
  std::uint64_t m_hat = work.m();
  std::vector<CliqueRecord> cliques;
  std::vector<NeighborhoodTree> trees = build_trees(work);
  std::uint32_t iter = 0;
  std::uint32_t k = 0;
  while (static_cast<double>(m_hat) >= rep.threshold_fm_loop - 1e-9) {
    k = std::min<std::uint32_t>(k_hat(rep.n, m_hat, delta), work.n_w());
    if (k < 2) break;  // only trivial cliques remain
    FmSelection sel = fm_select_k(work, trees, k);
    ++iter;
    rep.trace.push_back(
        {iter, m_hat, k, sel.found ? 1u : 0u, sel.c_evaluations});
    if (!sel.found) break;  // no clique of width k: m_hat cannot move
    CliqueRecord rec;
    rec.index_q = static_cast<std::uint32_t>(cliques.size());
    rec.right_K = std::move(sel.right_K);
    rec.left_U = std::move(sel.left_U);
    work.remove_biclique(rec.left_U, rec.right_K);
    cliques.push_back(std::move(rec));
    m_hat = work.m();
    trees = build_trees(work);
  }
  const auto t1 = std::chrono::steady_clock::now();
  rep.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  rep.final_m_hat = m_hat;
  rep.final_k_hat =
      std::min<std::uint32_t>(k_hat(rep.n, m_hat, delta), work.n_w());

  out.graph = assemble_compressed(std::move(work), std::move(cliques));
  rep.m_star = out.graph.m_star;
  rep.clique_count = out.graph.cliques.size();
  return out;
}

}  // namespace cpgc
