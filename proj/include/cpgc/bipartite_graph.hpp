#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cpgc {

using vertex_t = std::uint32_t;

/// Per-vertex degrees of the W partition. Sum equals the edge count of the
/// graph it was taken from, and stays equal when callers update it in step
/// with edge removals.
using DegreeVector = std::vector<std::uint32_t>;

/// Dense bipartite graph over partitions U and W.
///
/// The adjacency bit matrix is stored as one word-packed neighbor set per
/// W-vertex (bit i of the set for w_j <=> edge (u_i, w_j)). That makes
/// W-degrees and common-neighbor queries word-parallel AND/popcount over U,
/// which is where compression spends its time on dense graphs. The U-side
/// view is derived from the same bits on demand, so the two views cannot
/// diverge. Edge count m is maintained incrementally and always equals the
/// population count of the matrix.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  BipartiteGraph(vertex_t n_u, vertex_t n_w)
      : n_u_(n_u),
        n_w_(n_w),
        words_(word_count(n_u)),
        bits_(static_cast<std::size_t>(n_w) * words_, 0) {}

  /// Builds a graph from an edge list. Duplicate pairs collapse to one edge;
  /// out-of-range ids are an input error.
  static BipartiteGraph build(
      vertex_t n_u, vertex_t n_w,
      std::span<const std::pair<vertex_t, vertex_t>> edges) {
    BipartiteGraph g(n_u, n_w);
    for (const auto& [i, j] : edges) {
      if (i >= n_u || j >= n_w) {
        throw std::out_of_range("edge (" + std::to_string(i) + ", " +
                                std::to_string(j) + ") outside " +
                                std::to_string(n_u) + "x" +
                                std::to_string(n_w) + " graph");
      }
      g.add_edge(i, j);
    }
    return g;
  }

  vertex_t n_u() const { return n_u_; }
  vertex_t n_w() const { return n_w_; }
  std::uint64_t m() const { return m_; }
  std::size_t words_per_set() const { return words_; }

  bool has_edge(vertex_t i, vertex_t j) const {
    return (word(j, i >> 6) >> (i & 63)) & 1u;
  }

  void add_edge(vertex_t i, vertex_t j) {
    std::uint64_t& w = word(j, i >> 6);
    const std::uint64_t bit = 1ull << (i & 63);
    if (!(w & bit)) {
      w |= bit;
      ++m_;
    }
  }

  /// Neighbor set of w_j as a word span over U.
  std::span<const std::uint64_t> neighbor_bits_w(vertex_t j) const {
    return {bits_.data() + static_cast<std::size_t>(j) * words_, words_};
  }

  std::uint32_t degree_w(vertex_t j) const {
    std::uint32_t d = 0;
    for (std::uint64_t w : neighbor_bits_w(j)) d += std::popcount(w);
    return d;
  }

  std::vector<vertex_t> neighbors_w(vertex_t j) const {
    return ids_from_mask(neighbor_bits_w(j));
  }

  /// Neighbor list of u_i, ascending. Derived by scanning the W sets.
  std::vector<vertex_t> neighbors_u(vertex_t i) const {
    std::vector<vertex_t> out;
    for (vertex_t j = 0; j < n_w_; ++j)
      if (has_edge(i, j)) out.push_back(j);
    return out;
  }

  /// Word mask over U of the vertices adjacent to every member of K.
  std::vector<std::uint64_t> common_neighbor_mask(
      std::span<const vertex_t> K) const {
    if (K.empty()) throw std::invalid_argument("common neighbors of empty K");
    for (vertex_t j : K)
      if (j >= n_w_) throw std::out_of_range("w id out of range");
    std::vector<std::uint64_t> mask(neighbor_bits_w(K[0]).begin(),
                                    neighbor_bits_w(K[0]).end());
    for (std::size_t t = 1; t < K.size(); ++t) {
      auto row = neighbor_bits_w(K[t]);
      for (std::size_t w = 0; w < words_; ++w) mask[w] &= row[w];
    }
    return mask;
  }

  /// {u : K subset of N(u)}, ascending.
  std::vector<vertex_t> common_neighbors(std::span<const vertex_t> K) const {
    return ids_from_mask(common_neighbor_mask(K));
  }

  /// Removes the complete biclique left x right. Every pair must currently
  /// be an edge; a missing pair means the caller's clique bookkeeping is
  /// broken and raises a logic error.
  void remove_biclique(std::span<const vertex_t> left,
                       std::span<const vertex_t> right) {
    std::vector<std::uint64_t> mask(words_, 0);
    for (vertex_t i : left) {
      if (i >= n_u_) throw std::out_of_range("u id out of range");
      if (mask[i >> 6] & (1ull << (i & 63)))
        throw std::logic_error("duplicate u id in biclique left partition");
      mask[i >> 6] |= 1ull << (i & 63);
    }
    for (vertex_t j : right) {
      if (j >= n_w_) throw std::out_of_range("w id out of range");
      auto row = neighbor_bits_w(j);
      for (std::size_t w = 0; w < words_; ++w) {
        if ((row[w] & mask[w]) != mask[w]) {
          throw std::logic_error(
              "biclique removal hit a missing edge in column w_" +
              std::to_string(j));
        }
      }
    }
    for (vertex_t j : right) {
      std::uint64_t* row = bits_.data() + static_cast<std::size_t>(j) * words_;
      for (std::size_t w = 0; w < words_; ++w) row[w] &= ~mask[w];
      m_ -= left.size();
    }
  }

  /// Visits edges in ascending (i, j) lexicographic order.
  template <typename Fn>
  void for_each_edge(Fn&& fn) const {
    for (vertex_t i = 0; i < n_u_; ++i)
      for (vertex_t j = 0; j < n_w_; ++j)
        if (has_edge(i, j)) fn(i, j);
  }

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.n_u_ == b.n_u_ && a.n_w_ == b.n_w_ && a.bits_ == b.bits_;
  }

 private:
  static std::size_t word_count(vertex_t n) { return (std::size_t(n) + 63) / 64; }

  std::uint64_t& word(vertex_t j, std::size_t w) {
    return bits_[static_cast<std::size_t>(j) * words_ + w];
  }
  const std::uint64_t& word(vertex_t j, std::size_t w) const {
    return bits_[static_cast<std::size_t>(j) * words_ + w];
  }

  static std::vector<vertex_t> ids_from_mask(
      std::span<const std::uint64_t> mask) {
    std::vector<vertex_t> out;
    for (std::size_t w = 0; w < mask.size(); ++w) {
      std::uint64_t bits = mask[w];
      while (bits) {
        out.push_back(static_cast<vertex_t>(w * 64 +
                                            std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  vertex_t n_u_ = 0;
  vertex_t n_w_ = 0;
  std::size_t words_ = 0;
  std::uint64_t m_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Degrees of all W vertices; sums to m.
inline DegreeVector degrees_w(const BipartiteGraph& g) {
  DegreeVector d(g.n_w());
  for (vertex_t j = 0; j < g.n_w(); ++j) d[j] = g.degree_w(j);
  return d;
}

}  // namespace cpgc
