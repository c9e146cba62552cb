#pragma once

#include <cstdint>
#include <stdexcept>

#include "cpgc/bipartite_graph.hpp"

namespace cpgc {

/// SplitMix64 (Steele, Lea, Flood). Used to expand a user seed into the
/// xoshiro state. First outputs for seed 0:
/// 0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// xoshiro256** (Blackman, Vigna), state seeded by four SplitMix64 draws.
/// First outputs for seed 0: 0x99EC5F36CB75F2B4, 0xBF6E1F784956452A.
class Xoshiro256StarStar {
 public:
  explicit Xoshiro256StarStar(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& s : s_) s = sm.next();
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  double next_unit() { return (next() >> 11) * 0x1.0p-53; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t s_[4];
};

/// Random bipartite instance: n vertices per side, each of the n^2 cells an
/// edge independently with probability p.
struct GenSpec {
  vertex_t n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

/// Pure function of (n, p, seed): cells are drawn row-major (u ascending,
/// then w ascending), one draw per cell, edge iff draw < p. Same spec, same
/// bits, on any platform.
inline BipartiteGraph generate(const GenSpec& spec) {
  if (!(spec.p >= 0.0 && spec.p <= 1.0))
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  Xoshiro256StarStar rng(spec.seed);
  BipartiteGraph g(spec.n, spec.n);
  for (vertex_t i = 0; i < spec.n; ++i)
    for (vertex_t j = 0; j < spec.n; ++j)
      if (rng.next_unit() < spec.p) g.add_edge(i, j);
  return g;
}

}  // namespace cpgc
