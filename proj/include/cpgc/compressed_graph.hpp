#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cpgc/bipartite_graph.hpp"

namespace cpgc {

/// One extracted biclique: ordered right partition K_q over W and its set of
/// common neighbors over U. index_q is 0-based and doubles as the id of the
/// auxiliary z vertex that replaces the clique.
struct CliqueRecord {
  std::uint32_t index_q = 0;
  std::vector<vertex_t> right_K;
  std::vector<vertex_t> left_U;

  std::uint64_t covered_edges() const {
    return std::uint64_t(left_U.size()) * right_K.size();
  }
  std::uint64_t star_edges() const {
    return std::uint64_t(left_U.size()) + right_K.size();
  }
};

/// Tripartite compressed graph (U, W, Z, E*): the residual direct U-W edges
/// plus, per clique q, star edges {(u, z_q) : u in left_U} and
/// {(z_q, w) : w in right_K}.
struct CompressedGraph {
  vertex_t n_u = 0;
  vertex_t n_w = 0;
  BipartiteGraph residual;
  std::vector<CliqueRecord> cliques;
  std::uint64_t m_star = 0;

  std::uint32_t n_z() const { return static_cast<std::uint32_t>(cliques.size()); }

  std::uint64_t recompute_m_star() const {
    std::uint64_t total = residual.m();
    for (const auto& c : cliques) total += c.star_edges();
    return total;
  }

  /// Bit matrix of the edges covered by cliques (the union of their
  /// bicliques). Throws if two cliques overlap.
  BipartiteGraph clique_cover() const {
    BipartiteGraph cover(n_u, n_w);
    for (const auto& c : cliques) {
      for (vertex_t j : c.right_K) {
        for (vertex_t i : c.left_U) {
          if (cover.has_edge(i, j))
            throw std::logic_error("cliques overlap at edge (" +
                                   std::to_string(i) + ", " +
                                   std::to_string(j) + ")");
          cover.add_edge(i, j);
        }
      }
    }
    return cover;
  }

  /// Replaces every star by its full biclique and unions in the residual,
  /// reconstructing the original graph.
  BipartiteGraph expand() const {
    BipartiteGraph g = clique_cover();
    residual.for_each_edge([&](vertex_t i, vertex_t j) {
      if (g.has_edge(i, j))
        throw std::logic_error("edge (" + std::to_string(i) + ", " +
                               std::to_string(j) +
                               ") is both direct and clique-covered");
      g.add_edge(i, j);
    });
    return g;
  }
};

/// Clears the clique's biclique out of the graph; every covered pair must
/// currently be an edge.
inline void remove_clique_edges(BipartiteGraph& g, const CliqueRecord& c) {
  g.remove_biclique(c.left_U, c.right_K);
}

namespace detail {
inline void check_clique_record(const CliqueRecord& c, vertex_t n_u,
                                vertex_t n_w) {
  if (c.right_K.empty() || c.left_U.empty())
    throw std::logic_error("clique " + std::to_string(c.index_q) +
                           " has an empty partition");
  std::unordered_set<vertex_t> seen;
  for (vertex_t j : c.right_K) {
    if (j >= n_w) throw std::out_of_range("clique w id out of range");
    if (!seen.insert(j).second)
      throw std::logic_error("duplicate w id in clique right partition");
  }
  seen.clear();
  for (vertex_t i : c.left_U) {
    if (i >= n_u) throw std::out_of_range("clique u id out of range");
    if (!seen.insert(i).second)
      throw std::logic_error("duplicate u id in clique left partition");
  }
}
}  // namespace detail

/// Assembles the tripartite graph from the leftover direct edges and the
/// extracted cliques. Verifies the edge partition as it goes: cliques must be
/// pairwise disjoint and disjoint from the residual.
inline CompressedGraph assemble_compressed(BipartiteGraph residual,
                                           std::vector<CliqueRecord> cliques) {
  CompressedGraph out;
  out.n_u = residual.n_u();
  out.n_w = residual.n_w();
  for (const auto& c : cliques)
    detail::check_clique_record(c, out.n_u, out.n_w);
  out.residual = std::move(residual);
  out.cliques = std::move(cliques);
  // Builds the cover matrix purely to detect overlaps, including with the
  // residual.
  BipartiteGraph cover = out.clique_cover();
  out.residual.for_each_edge([&](vertex_t i, vertex_t j) {
    if (cover.has_edge(i, j))
      throw std::logic_error("residual edge (" + std::to_string(i) + ", " +
                             std::to_string(j) + ") is clique-covered");
  });
  out.m_star = out.recompute_m_star();
  return out;
}

}  // namespace cpgc
