#include "cpgc/dinitz.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <iostream>

#include "cpgc/compress_cpgc.hpp"
#include "cpgc/compress_fm.hpp"
#include "cpgc/generator.hpp"
#include "test_util.hpp"

namespace cpgc {
namespace {

using testutil::golden_graph;
using testutil::kuhn_max_matching;
using testutil::valid_matching;

void log_phase_ceiling(const MatchingResult& res, std::uint32_t node_count) {
  const double ceiling = 4.0 * std::sqrt(static_cast<double>(node_count)) + 10;
  if (res.phases > ceiling)
    std::cerr << "[ note ] phase count " << res.phases
              << " above sanity ceiling " << ceiling << " for "
              << node_count << " nodes\n";
}

TEST(DinitzBipartite, CompleteGraphsHavePerfectMatchings) {
  for (vertex_t n : {1u, 2u, 5u, 16u}) {
    BipartiteGraph g(n, n);
    for (vertex_t i = 0; i < n; ++i)
      for (vertex_t j = 0; j < n; ++j) g.add_edge(i, j);
    auto res = dinitz_bipartite(g);
    EXPECT_EQ(res.cardinality, n);
    EXPECT_TRUE(valid_matching(g, res.pairs));
    EXPECT_EQ(res.pairs.size(), res.cardinality);
  }
}

TEST(DinitzBipartite, EmptyGraph) {
  BipartiteGraph g(4, 4);
  auto res = dinitz_bipartite(g);
  EXPECT_EQ(res.cardinality, 0u);
  EXPECT_TRUE(res.pairs.empty());
}

TEST(DinitzBipartite, GoldenInstanceMatchesAugmentingPathOracle) {
  auto g = golden_graph();
  auto res = dinitz_bipartite(g);
  EXPECT_EQ(res.cardinality, kuhn_max_matching(g));
  EXPECT_TRUE(valid_matching(g, res.pairs));
}

TEST(DinitzBipartite, RandomGraphsMatchOracle) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    auto g = generate({seed % 2 ? 16u : 32u, 0.2 + 0.05 * (seed % 5), seed});
    auto res = dinitz_bipartite(g);
    EXPECT_EQ(res.cardinality, kuhn_max_matching(g)) << "seed=" << seed;
    EXPECT_TRUE(valid_matching(g, res.pairs));
    log_phase_ceiling(res, 2 + g.n_u() + g.n_w());
  }
}

TEST(DinitzBipartite, UnbalancedPartitions) {
  BipartiteGraph g(3, 7);
  for (vertex_t i = 0; i < 3; ++i)
    for (vertex_t j = 0; j < 7; ++j) g.add_edge(i, j);
  auto res = dinitz_bipartite(g);
  EXPECT_EQ(res.cardinality, 3u);
}

TEST(DinitzCompressed, GoldenCompressionKeepsCardinality) {
  auto g = golden_graph();
  auto original = dinitz_bipartite(g);
  auto compressed = cpgc_compress(g, {1.0}).graph;
  auto res = dinitz_compressed(compressed);
  EXPECT_EQ(res.cardinality, original.cardinality);
  EXPECT_TRUE(valid_matching(g, res.pairs))
      << "decoded pairs must be edges of the original graph";
}

TEST(DinitzCompressed, ZeroCliqueCompressionIsIdenticalToBipartite) {
  auto g = golden_graph();
  auto compressed = assemble_compressed(g, {});
  auto a = dinitz_bipartite(g);
  auto b = dinitz_compressed(compressed);
  EXPECT_EQ(a.cardinality, b.cardinality);
  EXPECT_EQ(a.pairs, b.pairs);  // same arcs in the same order
}

TEST(DinitzCompressed, RandomDenseInstances) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = generate({128, 0.9, seed + 40});
    auto original = dinitz_bipartite(g);
    auto compressed = cpgc_compress(g, {0.7}).graph;
    auto res = dinitz_compressed(compressed);
    EXPECT_EQ(res.cardinality, original.cardinality) << "seed=" << seed;
    EXPECT_TRUE(valid_matching(g, res.pairs));
    log_phase_ceiling(res, 2 + g.n_u() + g.n_w() + compressed.n_z());
  }
}

TEST(DinitzCompressed, TreeCompressorOutputWorksToo) {
  auto g = generate({48, 0.95, 9});
  auto compressed = fm_compress(g, 1.0).graph;
  auto res = dinitz_compressed(compressed);
  EXPECT_EQ(res.cardinality, dinitz_bipartite(g).cardinality);
  EXPECT_TRUE(valid_matching(g, res.pairs));
}

TEST(DinitzCompressed, StructurallyInvalidInputRejected) {
  auto g = golden_graph();
  auto compressed = cpgc_compress(g, {1.0}).graph;
  auto broken = compressed;
  broken.cliques[0].right_K.push_back(99);  // out of range
  EXPECT_THROW(dinitz_compressed(broken), std::invalid_argument);

  broken = compressed;
  broken.cliques[0].left_U.clear();
  EXPECT_THROW(dinitz_compressed(broken), std::invalid_argument);

  broken = compressed;
  broken.cliques[1].index_q = broken.cliques[0].index_q;
  EXPECT_THROW(dinitz_compressed(broken), std::invalid_argument);
}

TEST(DinitzCompressed, FlowMayFanThroughOneZ) {
  // One clique covering a complete 3x3 block: all three matched pairs must
  // route through the single z vertex.
  BipartiteGraph residual(3, 3);
  std::vector<CliqueRecord> cliques = {{0, {0, 1, 2}, {0, 1, 2}}};
  auto compressed = assemble_compressed(residual, cliques);
  auto res = dinitz_compressed(compressed);
  BipartiteGraph full(3, 3);
  for (vertex_t i = 0; i < 3; ++i)
    for (vertex_t j = 0; j < 3; ++j) full.add_edge(i, j);
  EXPECT_EQ(res.cardinality, 3u);
  EXPECT_TRUE(valid_matching(full, res.pairs));
}

}  // namespace
}  // namespace cpgc
