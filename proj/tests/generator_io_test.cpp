#include "cpgc/generator.hpp"
#include "cpgc/io.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <sstream>

#include "cpgc/compress_cpgc.hpp"
#include "test_util.hpp"

namespace cpgc {
namespace {

using testutil::golden_graph;

// Reference outputs of the documented generators (see README): SplitMix64 and
// xoshiro256** seeded through it. Computed with an independent
// implementation.
TEST(Prng, SplitMix64ReferenceVectors) {
  SplitMix64 a(0);
  EXPECT_EQ(a.next(), 0xE220A8397B1DCDAFull);
  EXPECT_EQ(a.next(), 0x6E789E6AA1B965F4ull);
  EXPECT_EQ(a.next(), 0x06C45D188009454Full);
  EXPECT_EQ(a.next(), 0xF88BB8A8724C81ECull);
  SplitMix64 b(42);
  EXPECT_EQ(b.next(), 0xBDD732262FEB6E95ull);
  EXPECT_EQ(b.next(), 0x28EFE333B266F103ull);
}

TEST(Prng, XoshiroReferenceVectors) {
  Xoshiro256StarStar a(0);
  EXPECT_EQ(a.next(), 0x99EC5F36CB75F2B4ull);
  EXPECT_EQ(a.next(), 0xBF6E1F784956452Aull);
  EXPECT_EQ(a.next(), 0x1A5F849D4933E6E0ull);
  EXPECT_EQ(a.next(), 0x6AA594F1262D2D2Cull);
  Xoshiro256StarStar b(42);
  EXPECT_EQ(b.next(), 0x15780B2E0C2EC716ull);
  EXPECT_EQ(b.next(), 0x6104D9866D113A7Eull);
}

TEST(Prng, UnitDoublesFromTopBits) {
  Xoshiro256StarStar rng(42);
  EXPECT_NEAR(rng.next_unit(), 0.08386297105988216, 1e-15);
  EXPECT_NEAR(rng.next_unit(), 0.3789802506626686, 1e-15);
  EXPECT_NEAR(rng.next_unit(), 0.6800434110281394, 1e-15);
  EXPECT_NEAR(rng.next_unit(), 0.9246929453253876, 1e-15);
}

TEST(Generate, ExtremeProbabilities) {
  auto complete = generate({16, 1.0, 3});
  EXPECT_EQ(complete.m(), 256u);
  auto empty = generate({16, 0.0, 3});
  EXPECT_EQ(empty.m(), 0u);
}

TEST(Generate, RowMajorDrawOrderPinned) {
  // First four unit draws for seed 42 are 0.0839, 0.3790, 0.6800, 0.9247;
  // with p = 0.5 exactly the cells (0,0) and (0,1) become edges.
  auto g = generate({2, 0.5, 42});
  EXPECT_EQ(g.m(), 2u);
  EXPECT_TRUE(g.has_edge(0, 0));
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_FALSE(g.has_edge(1, 0));
  EXPECT_FALSE(g.has_edge(1, 1));
}

TEST(Generate, DeterministicByFullStructure) {
  GenSpec spec{128, 0.9, 77};
  EXPECT_TRUE(generate(spec) == generate(spec));
}

TEST(Generate, BinomialConcentration) {
  // 10 instances at n=1024, p=0.9: the sample mean of m stays within three
  // single-instance standard deviations of p * n^2
  // (sigma = sqrt(n^2 p (1-p)) = 307.2).
  const double expected = 0.9 * 1024.0 * 1024.0;
  const double sigma = std::sqrt(1024.0 * 1024.0 * 0.9 * 0.1);
  double total = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    total += static_cast<double>(generate({1024, 0.9, seed}).m());
  EXPECT_NEAR(total / 10.0, expected, 3.0 * sigma);
}

TEST(Generate, InvalidProbabilityRejected) {
  EXPECT_THROW(generate({4, -0.1, 0}), std::invalid_argument);
  EXPECT_THROW(generate({4, 1.5, 0}), std::invalid_argument);
}

TEST(GraphIo, GoldenRoundTrip) {
  auto g = golden_graph();
  std::stringstream buf;
  write_graph(buf, g);
  EXPECT_TRUE(read_graph(buf) == g);
}

TEST(GraphIo, CanonicalWriteIsSortedHeaderFirst) {
  auto g = BipartiteGraph::build(
      2, 2, std::vector<std::pair<vertex_t, vertex_t>>{{1, 0}, {0, 1}});
  std::stringstream buf;
  write_graph(buf, g);
  EXPECT_EQ(buf.str(), "2 2 2\n0 1\n1 0\n");
}

TEST(GraphIo, ReadAcceptsAnyEdgeOrder) {
  std::stringstream buf("3 3 2\n2 2\n0 1\n");
  auto g = read_graph(buf);
  EXPECT_EQ(g.m(), 2u);
  EXPECT_TRUE(g.has_edge(2, 2));
  EXPECT_TRUE(g.has_edge(0, 1));
}

TEST(GraphIo, MalformationsAreDistinctAndLineNumbered) {
  {
    std::stringstream buf("2 2\n");
    EXPECT_THROW(read_graph(buf), IoError);
  }
  {
    // Header promises one edge, two are present: mismatch reported on the
    // extra line.
    std::stringstream buf("2 2 1\n0 0\n1 1\n");
    try {
      read_graph(buf);
      FAIL() << "expected IoError";
    } catch (const IoError& e) {
      EXPECT_NE(std::string(e.what()).find("edge count mismatch"),
                std::string::npos);
      EXPECT_EQ(e.line(), 3u);
    }
  }
  {
    std::stringstream buf("2 2 2\n0 0\n");
    try {
      read_graph(buf);
      FAIL() << "expected IoError";
    } catch (const IoError& e) {
      EXPECT_NE(std::string(e.what()).find("edge count mismatch"),
                std::string::npos);
    }
  }
  {
    std::stringstream buf("2 2 1\n0 5\n");
    try {
      read_graph(buf);
      FAIL() << "expected IoError";
    } catch (const IoError& e) {
      EXPECT_NE(std::string(e.what()).find("out of range"), std::string::npos);
      EXPECT_EQ(e.line(), 2u);
    }
  }
  {
    std::stringstream buf("2 2 2\n0 0\n0 0\n");
    try {
      read_graph(buf);
      FAIL() << "expected IoError";
    } catch (const IoError& e) {
      EXPECT_NE(std::string(e.what()).find("duplicate edge"),
                std::string::npos);
      EXPECT_EQ(e.line(), 3u);
    }
  }
  {
    std::stringstream buf("x 2 1\n0 0\n");
    EXPECT_THROW(read_graph(buf), IoError);
  }
}

TEST(CompressedIo, RoundTripWithTwoCliques) {
  auto g = golden_graph();
  auto compressed = cpgc_compress(g, {1.0}).graph;
  ASSERT_EQ(compressed.n_z(), 2u);
  std::stringstream buf;
  write_compressed(buf, compressed);
  auto back = read_compressed(buf);
  EXPECT_EQ(back.m_star, compressed.m_star);
  EXPECT_TRUE(back.residual == compressed.residual);
  ASSERT_EQ(back.cliques.size(), compressed.cliques.size());
  for (std::size_t q = 0; q < back.cliques.size(); ++q) {
    EXPECT_EQ(back.cliques[q].right_K, compressed.cliques[q].right_K);
    EXPECT_EQ(back.cliques[q].left_U, compressed.cliques[q].left_U);
  }
}

TEST(CompressedIo, HeaderEdgeCountMismatchRejected) {
  auto compressed = cpgc_compress(golden_graph(), {1.0}).graph;
  std::stringstream buf;
  write_compressed(buf, compressed);
  std::string text = buf.str();
  text.replace(text.find("44"), 2, "45");  // lie about m_star
  std::stringstream tampered(text);
  EXPECT_THROW(read_compressed(tampered), IoError);
}

TEST(CompressedIo, OverlappingFileRejected) {
  // Clique 0 covers (0,0); a D line repeats it.
  std::stringstream buf("1 1 1 3\nD 0 0\nL 0 0\nR 0 0\n");
  EXPECT_THROW(read_compressed(buf), IoError);
}

TEST(GeneralIo, RoundTrip) {
  GeneralGraph h{4, {{0, 1}, {1, 2}, {3, 0}}};
  std::stringstream buf;
  write_general(buf, h, true);
  auto back = read_general(buf);
  EXPECT_TRUE(back.undirected);
  EXPECT_EQ(back.graph.n, 4u);
  EXPECT_EQ(back.graph.directed_edges, h.directed_edges);
}

TEST(GeneralIo, BadDirectionFlagRejected) {
  std::stringstream buf("4 0 x\n");
  EXPECT_THROW(read_general(buf), IoError);
}

}  // namespace
}  // namespace cpgc
