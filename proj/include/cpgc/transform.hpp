#pragma once

#include <cstdint>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cpgc/bipartite_graph.hpp"
#include "cpgc/compress_cpgc.hpp"
#include "cpgc/compress_fm.hpp"

namespace cpgc {

/// General (non-bipartite) graph as a directed edge list. Undirected inputs
/// are expanded to both directions at conversion time.
struct GeneralGraph {
  std::uint32_t n = 0;
  std::vector<std::pair<vertex_t, vertex_t>> directed_edges;
};

/// Double cover of a general graph: every vertex v splits into v_L and v_R,
/// every directed edge (a, b) becomes the bipartite edge (a_L, b_R). A
/// self-loop maps to (v_L, v_R), which coexists with the back-edge added
/// later in the opposite direction.
inline BipartiteGraph to_bipartite(const GeneralGraph& h, bool undirected) {
  BipartiteGraph g(h.n, h.n);
  for (const auto& [a, b] : h.directed_edges) {
    if (a >= h.n || b >= h.n)
      throw std::out_of_range("general-graph edge id out of range");
    g.add_edge(a, b);
    if (undirected) g.add_edge(b, a);
  }
  return g;
}

/// Compressed double cover plus the n back-edges v_R -> v_L that close the
/// cover into the original reachability structure.
struct CompressedGeneralGraph {
  CompressedGraph core;
  std::vector<std::pair<vertex_t, vertex_t>> back_edges;  // (v_R, v_L) = (v, v)
};

enum class Algo { cpgc, fm };

struct GeneralCompressionResult {
  CompressedGeneralGraph graph;
  RunReport report;
};

inline GeneralCompressionResult compress_general(const GeneralGraph& h,
                                                 double delta, Algo algo,
                                                 bool undirected = false) {
  BipartiteGraph g = to_bipartite(h, undirected);
  CompressionResult core = algo == Algo::cpgc
                               ? cpgc_compress(g, CpgcParams{delta})
                               : fm_compress(g, delta);
  GeneralCompressionResult out;
  out.graph.core = std::move(core.graph);
  out.graph.back_edges.reserve(h.n);
  for (vertex_t v = 0; v < h.n; ++v) out.graph.back_edges.push_back({v, v});
  out.report = std::move(core.report);
  out.report.back_edges = h.n;  // reported separately, not part of m_star
  return out;
}

/// Vertices of the original graph reachable from `a` when traversing the
/// compressed cover: residual and star edges move left-to-right
/// (u_L -> w_R directly or u_L -> z -> w_R), back-edges move w_R -> w_L.
/// Index v of the result is true iff v_L is reachable from a_L.
inline std::vector<bool> reachable_in_compressed_general(
    const CompressedGeneralGraph& cg, vertex_t a) {
  const CompressedGraph& c = cg.core;
  const std::uint32_t n = c.n_u;
  if (a >= n) throw std::out_of_range("start vertex out of range");

  // Left-to-right adjacency through z is precomputed per clique.
  std::vector<std::vector<std::uint32_t>> cliques_of_u(n);
  for (const auto& rec : c.cliques)
    for (vertex_t i : rec.left_U) cliques_of_u[i].push_back(rec.index_q);

  std::vector<bool> seen_l(n, false), seen_r(n, false);
  std::vector<bool> seen_z(c.n_z(), false);
  std::queue<vertex_t> left_frontier;
  seen_l[a] = true;
  left_frontier.push(a);
  while (!left_frontier.empty()) {
    const vertex_t u = left_frontier.front();
    left_frontier.pop();
    std::vector<vertex_t> reached_r;
    for (vertex_t j = 0; j < n; ++j)
      if (!seen_r[j] && c.residual.has_edge(u, j)) reached_r.push_back(j);
    for (std::uint32_t q : cliques_of_u[u]) {
      if (seen_z[q]) continue;
      seen_z[q] = true;
      for (vertex_t j : c.cliques[q].right_K)
        if (!seen_r[j]) reached_r.push_back(j);
    }
    for (vertex_t j : reached_r) {
      if (seen_r[j]) continue;
      seen_r[j] = true;
      // back-edge j_R -> j_L
      if (!seen_l[j]) {
        seen_l[j] = true;
        left_frontier.push(j);
      }
    }
  }
  return seen_l;
}

}  // namespace cpgc
