#pragma once

#include <string>
#include <vector>

#include "cpgc/bipartite_graph.hpp"
#include "cpgc/compressed_graph.hpp"

namespace cpgc {

struct VerifyResult {
  bool bookkeeping_ok = true;  // stored m_star equals recomputed m_star
  bool partition_ok = true;    // cliques pairwise disjoint, none overlap residual
  bool paths_ok = true;        // (u,w) in E <=> direct xor through-one-z
  std::vector<std::string> issues;

  bool ok() const { return bookkeeping_ok && partition_ok && paths_ok; }
};

/// Checks a (graph, compressed) pair: m* bookkeeping, the edge partition
/// (clique bicliques pairwise disjoint, disjoint from the residual), and
/// path preservation in both directions (every original edge is direct or
/// crosses exactly one z, and nothing else is connected).
inline VerifyResult verify_compression(const BipartiteGraph& original,
                                       const CompressedGraph& c) {
  VerifyResult res;
  if (original.n_u() != c.n_u || original.n_w() != c.n_w) {
    res.paths_ok = false;
    res.issues.push_back("partition sizes differ between graph and compressed graph");
    return res;
  }
  if (c.m_star != c.recompute_m_star()) {
    res.bookkeeping_ok = false;
    res.issues.push_back("stored m_star " + std::to_string(c.m_star) +
                         " != recomputed " +
                         std::to_string(c.recompute_m_star()));
  }

  BipartiteGraph cover(c.n_u, c.n_w);
  for (const auto& rec : c.cliques) {
    if (rec.right_K.empty() || rec.left_U.empty()) {
      res.partition_ok = false;
      res.issues.push_back("clique " + std::to_string(rec.index_q) +
                           " has an empty partition");
      continue;
    }
    for (vertex_t j : rec.right_K) {
      for (vertex_t i : rec.left_U) {
        if (i >= c.n_u || j >= c.n_w) {
          res.partition_ok = false;
          res.issues.push_back("clique " + std::to_string(rec.index_q) +
                               " holds an out-of-range vertex");
          return res;
        }
        if (cover.has_edge(i, j)) {
          res.partition_ok = false;
          res.issues.push_back("clique edge (" + std::to_string(i) + ", " +
                               std::to_string(j) + ") is covered twice");
          return res;
        }
        cover.add_edge(i, j);
      }
    }
  }

  for (vertex_t j = 0; j < c.n_w; ++j) {
    auto orig = original.neighbor_bits_w(j);
    auto direct = c.residual.neighbor_bits_w(j);
    auto via_z = cover.neighbor_bits_w(j);
    for (std::size_t w = 0; w < orig.size(); ++w) {
      if (direct[w] & via_z[w]) {
        res.partition_ok = false;
        res.issues.push_back("an edge of column w_" + std::to_string(j) +
                             " is both direct and clique-covered");
        break;
      }
      if ((direct[w] | via_z[w]) != orig[w]) {
        res.paths_ok = false;
        res.issues.push_back("path preservation fails in column w_" +
                             std::to_string(j));
        break;
      }
    }
  }
  return res;
}

}  // namespace cpgc
