#pragma once

#include <cstddef>
#include <cstdint>
#include <algorithm>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

namespace depseq {

/// Seeded random stream with portable, bit-reproducible draws.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. The standard distributions are not, so every draw used by the
/// library goes through the members below instead.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0);

  std::uint64_t seed() const noexcept { return seed_; }

  /// Independent stream keyed by (this stream's seed, path). Does not touch
  /// this stream's state, so it can be called at any time.
  Rng substream(std::initializer_list<std::uint64_t> path) const;

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01();

  /// Uniform on {0, ..., n-1}. n == 1 returns 0 without consuming a draw.
  std::size_t uniform_index(std::size_t n);

  bool bernoulli(double p) { return uniform01() < p; }

  /// Box-Muller; consumes exactly two draws.
  double standard_normal();

  /// First k elements of a partial Fisher-Yates shuffle of pool.
  template <class T>
  std::vector<T> choose(std::vector<T> pool, std::size_t k) {
    for (std::size_t i = 0; i < k && i < pool.size(); ++i) {
      const std::size_t j = i + uniform_index(pool.size() - i);
      std::swap(pool[i], pool[j]);
    }
    if (k < pool.size()) pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k), pool.end());
    return pool;
  }

  static std::uint64_t entropy_seed();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace depseq
