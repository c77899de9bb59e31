#pragma once

#include <cstdint>
#include <random>

namespace gnsscorr {

namespace detail {

// splitmix64; used to decorrelate derived stream seeds.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

// Deterministic seeded generator. Every stochastic operation in the library
// takes one of these (or a seed) explicitly. split() derives an independent
// stream from (seed, key) without consuming state, so per-epoch work can be
// parallelized while staying reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed)
      : seed_(seed), engine_(detail::mix64(seed)) {}

  std::uint64_t seed() const { return seed_; }

  Rng split(std::uint64_t key) const {
    return Rng(detail::mix64(seed_ ^ detail::mix64(key + 0x51ed270b2f6c72c5ULL)));
  }

  std::uint64_t next_u64() { return engine_(); }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  double normal(double mean, double stddev) {
    return std::normal_distribution<double>(mean, stddev)(engine_);
  }

  int poisson(double rate) {
    if (rate <= 0.0) return 0;
    return std::poisson_distribution<int>(rate)(engine_);
  }

  // Uniform integer in [0, n).
  std::size_t index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace gnsscorr
