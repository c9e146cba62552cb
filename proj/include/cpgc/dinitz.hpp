#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cpgc/bipartite_graph.hpp"
#include "cpgc/compressed_graph.hpp"

namespace cpgc {

struct MatchingResult {
  std::uint64_t cardinality = 0;
  std::vector<std::pair<vertex_t, vertex_t>> pairs;
  std::uint32_t phases = 0;
};

/// Unit-capacity flow network with residual bookkeeping, solved by Dinitz's
/// algorithm: repeated BFS level graphs plus blocking flow found by an
/// iterative DFS with current-arc pointers. Arc insertion order is preserved,
/// so callers control determinism by adding arcs in ascending target order.
class FlowNetwork {
 public:
  FlowNetwork(std::uint32_t node_count, std::uint32_t source,
              std::uint32_t sink)
      : node_count_(node_count), source_(source), sink_(sink),
        head_(node_count, kNone) {}

  std::uint32_t node_count() const { return node_count_; }
  std::uint32_t source() const { return source_; }
  std::uint32_t sink() const { return sink_; }

  std::uint32_t add_arc(std::uint32_t from, std::uint32_t to,
                        std::int32_t cap) {
    const std::uint32_t id = static_cast<std::uint32_t>(arcs_.size());
    arcs_.push_back({to, head_[from], cap});
    head_[from] = id;
    arcs_.push_back({from, head_[to], 0});
    head_[to] = id + 1;
    return id;
  }

  std::int32_t residual_cap(std::uint32_t arc) const { return arcs_[arc].cap; }
  /// Flow pushed over a forward arc equals its paired reverse capacity.
  std::int32_t flow_on(std::uint32_t arc) const { return arcs_[arc ^ 1].cap; }

  /// Runs Dinitz to completion; returns total flow and counts phases.
  std::uint64_t max_flow(std::uint32_t* phases_out = nullptr) {
    std::uint64_t flow = 0;
    std::uint32_t phases = 0;
    std::vector<std::uint32_t> level(node_count_);
    std::vector<std::uint32_t> it(node_count_);
    while (bfs_levels(level)) {
      ++phases;
      it = head_;
      flow += blocking_flow(level, it);
    }
    if (phases_out) *phases_out = phases;
    return flow;
  }

 private:
  static constexpr std::uint32_t kNone =
      std::numeric_limits<std::uint32_t>::max();

  struct Arc {
    std::uint32_t to;
    std::uint32_t next;  // next arc out of the same node
    std::int32_t cap;    // residual capacity
  };

  bool bfs_levels(std::vector<std::uint32_t>& level) {
    std::fill(level.begin(), level.end(), kNone);
    std::queue<std::uint32_t> q;
    level[source_] = 0;
    q.push(source_);
    while (!q.empty()) {
      const std::uint32_t v = q.front();
      q.pop();
      for (std::uint32_t a = head_[v]; a != kNone; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && level[arcs_[a].to] == kNone) {
          level[arcs_[a].to] = level[v] + 1;
          q.push(arcs_[a].to);
        }
      }
    }
    return level[sink_] != kNone;
  }

  std::uint64_t blocking_flow(const std::vector<std::uint32_t>& level,
                              std::vector<std::uint32_t>& it) {
    std::uint64_t pushed_total = 0;
    std::vector<std::uint32_t> path;  // arcs of the current partial path
    std::uint32_t v = source_;
    for (;;) {
      if (v == sink_) {
        // Unit capacities: saturate the whole path and restart from s.
        for (std::uint32_t a : path) {
          --arcs_[a].cap;
          ++arcs_[a ^ 1].cap;
        }
        ++pushed_total;
        path.clear();
        v = source_;
        continue;
      }
      std::uint32_t& cursor = it[v];
      while (cursor != kNone) {
        const Arc& arc = arcs_[cursor];
        if (arc.cap > 0 && level[arc.to] == level[v] + 1) break;
        cursor = arc.next;
      }
      if (cursor == kNone) {
        if (v == source_) break;  // level graph exhausted
        // Dead end: retreat one arc and advance past it.
        const std::uint32_t back = path.back();
        path.pop_back();
        v = arcs_[back ^ 1].to;
        it[v] = arcs_[back].next;
        continue;
      }
      path.push_back(cursor);
      v = arcs_[cursor].to;
    }
    return pushed_total;
  }

  std::uint32_t node_count_;
  std::uint32_t source_;
  std::uint32_t sink_;
  std::vector<std::uint32_t> head_;
  std::vector<Arc> arcs_;
};

namespace detail {

// Node ids: s, then U, then W, then Z, then t.
struct MatchNodes {
  std::uint32_t s, u0, w0, z0, t, total;
};

inline MatchNodes layout(vertex_t n_u, vertex_t n_w, std::uint32_t n_z) {
  MatchNodes n{};
  n.s = 0;
  n.u0 = 1;
  n.w0 = 1 + n_u;
  n.z0 = 1 + n_u + n_w;
  n.t = 1 + n_u + n_w + n_z;
  n.total = n.t + 1;
  return n;
}

}  // namespace detail

/// Maximum-cardinality matching on the bipartite graph via unit-capacity
/// flow: s -> u_i, u_i -> w_j per edge, w_j -> t, all capacity 1.
inline MatchingResult dinitz_bipartite(const BipartiteGraph& g) {
  const auto nodes = detail::layout(g.n_u(), g.n_w(), 0);
  FlowNetwork net(nodes.total, nodes.s, nodes.t);
  for (vertex_t i = 0; i < g.n_u(); ++i) net.add_arc(nodes.s, nodes.u0 + i, 1);
  std::vector<std::pair<std::uint32_t, std::pair<vertex_t, vertex_t>>> uw_arcs;
  for (vertex_t i = 0; i < g.n_u(); ++i)
    for (vertex_t j = 0; j < g.n_w(); ++j)
      if (g.has_edge(i, j))
        uw_arcs.push_back({net.add_arc(nodes.u0 + i, nodes.w0 + j, 1), {i, j}});
  for (vertex_t j = 0; j < g.n_w(); ++j) net.add_arc(nodes.w0 + j, nodes.t, 1);

  MatchingResult res;
  res.cardinality = net.max_flow(&res.phases);
  for (const auto& [arc, edge] : uw_arcs)
    if (net.flow_on(arc) > 0) res.pairs.push_back(edge);
  return res;
}

/// Maximum-cardinality matching run on the compressed tripartite graph:
/// residual edges stay u -> w arcs; each clique contributes u -> z_q and
/// z_q -> w arcs (capacity 1 each, no node capacity at z, so several flow
/// units may cross one z over distinct arc pairs). Units routed through a z
/// are decoded back to (u, w) pairs by zipping the saturated in- and
/// out-arcs in arc order; any such pair is an edge of the original graph
/// because the clique was complete.
inline MatchingResult dinitz_compressed(const CompressedGraph& c) {
  std::vector<bool> z_seen(c.n_z(), false);
  for (const auto& rec : c.cliques) {
    try {
      detail::check_clique_record(rec, c.n_u, c.n_w);
    } catch (const std::exception& e) {
      throw std::invalid_argument(std::string("invalid compressed graph: ") +
                                  e.what());
    }
    if (rec.index_q >= c.n_z() || z_seen[rec.index_q])
      throw std::invalid_argument("invalid compressed graph: bad clique index");
    z_seen[rec.index_q] = true;
  }
  if (c.residual.n_u() != c.n_u || c.residual.n_w() != c.n_w)
    throw std::invalid_argument("invalid compressed graph: size mismatch");

  const auto nodes = detail::layout(c.n_u, c.n_w, c.n_z());
  FlowNetwork net(nodes.total, nodes.s, nodes.t);
  for (vertex_t i = 0; i < c.n_u; ++i) net.add_arc(nodes.s, nodes.u0 + i, 1);

  // Per-u targets in ascending node id order: residual w first, then z.
  std::vector<std::vector<std::uint32_t>> z_of_u(c.n_u);
  for (const auto& rec : c.cliques)
    for (vertex_t i : rec.left_U) z_of_u[i].push_back(rec.index_q);
  std::vector<std::pair<std::uint32_t, std::pair<vertex_t, vertex_t>>> uw_arcs;
  std::vector<std::vector<std::pair<std::uint32_t, vertex_t>>> in_arcs_of_z(
      c.n_z());
  for (vertex_t i = 0; i < c.n_u; ++i) {
    for (vertex_t j = 0; j < c.n_w; ++j)
      if (c.residual.has_edge(i, j))
        uw_arcs.push_back(
            {net.add_arc(nodes.u0 + i, nodes.w0 + j, 1), {i, j}});
    std::sort(z_of_u[i].begin(), z_of_u[i].end());
    for (std::uint32_t q : z_of_u[i])
      in_arcs_of_z[q].push_back(
          {net.add_arc(nodes.u0 + i, nodes.z0 + q, 1), i});
  }
  std::vector<std::vector<std::pair<std::uint32_t, vertex_t>>> out_arcs_of_z(
      c.n_z());
  for (const auto& rec : c.cliques) {
    std::vector<vertex_t> right_sorted = rec.right_K;
    std::sort(right_sorted.begin(), right_sorted.end());
    for (vertex_t j : right_sorted)
      out_arcs_of_z[rec.index_q].push_back(
          {net.add_arc(nodes.z0 + rec.index_q, nodes.w0 + j, 1), j});
  }
  for (vertex_t j = 0; j < c.n_w; ++j) net.add_arc(nodes.w0 + j, nodes.t, 1);

  MatchingResult res;
  res.cardinality = net.max_flow(&res.phases);
  for (const auto& [arc, edge] : uw_arcs)
    if (net.flow_on(arc) > 0) res.pairs.push_back(edge);
  for (std::uint32_t q = 0; q < c.n_z(); ++q) {
    std::vector<vertex_t> in_u, out_w;
    for (const auto& [arc, i] : in_arcs_of_z[q])
      if (net.flow_on(arc) > 0) in_u.push_back(i);
    for (const auto& [arc, j] : out_arcs_of_z[q])
      if (net.flow_on(arc) > 0) out_w.push_back(j);
    if (in_u.size() != out_w.size())
      throw std::logic_error("flow conservation violated at z node");
    for (std::size_t idx = 0; idx < in_u.size(); ++idx)
      res.pairs.push_back({in_u[idx], out_w[idx]});
  }
  return res;
}

}  // namespace cpgc
