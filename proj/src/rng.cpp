#include "starsat/rng.hpp"

#include "starsat/error.hpp"

namespace starsat {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }
}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += kGolden);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t mix64(std::uint64_t x) noexcept { return splitmix64(x); }

Xoshiro256ss::Xoshiro256ss(RngSeed seed) noexcept {
  std::uint64_t state = mix64(seed.seed) ^ mix64(seed.stream + kGolden);
  for (auto& word : s_) word = splitmix64(state);
}

Xoshiro256ss::result_type Xoshiro256ss::operator()() noexcept {
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

std::uint64_t Xoshiro256ss::below(std::uint64_t bound) noexcept {
  const std::uint64_t limit = max() - max() % bound;
  std::uint64_t x;
  do x = (*this)();
  while (x >= limit);
  return x % bound;
}

Graph sample_gnp(Vertex n, double p, RngSeed seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("edge probability must lie in [0, 1]");
  if (n < 0) throw DomainError("vertex count must be nonnegative");
  Xoshiro256ss rng(seed);
  EdgeList e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.uniform01() < p) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

}  // namespace starsat
