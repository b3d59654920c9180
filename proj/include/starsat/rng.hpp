#pragma once

#include <cstdint>
#include <string_view>

#include "starsat/graph.hpp"

namespace starsat {

struct RngSeed {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  friend bool operator==(const RngSeed&, const RngSeed&) = default;
};

// Identifier written into every experiment record.
inline constexpr std::string_view kRngId = "xoshiro256ss-splitmix64";

std::uint64_t splitmix64(std::uint64_t& state) noexcept;

// Stateless mix of a single word (one splitmix64 step from `x`).
std::uint64_t mix64(std::uint64_t x) noexcept;

// xoshiro256** (Blackman & Vigna). State is filled by four splitmix64 draws
// starting from mix64(seed) ^ mix64(stream + 0x9E3779B97F4A7C15).
class Xoshiro256ss {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256ss(RngSeed seed) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  result_type operator()() noexcept;

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) noexcept;

 private:
  std::uint64_t s_[4];
};

// G(n, p): pairs (u, v), u < v, visited lexicographically, one uniform01()
// per pair, pair kept iff the draw is < p. Boundary p in {0, 1} is allowed.
Graph sample_gnp(Vertex n, double p, RngSeed seed);

}  // namespace starsat
