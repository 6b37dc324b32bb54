#include "depseq/rng.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace depseq {
namespace {

std::uint32_t low32(std::uint64_t v) { return static_cast<std::uint32_t>(v & 0xffffffffu); }
std::uint32_t high32(std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); }

}  // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed) {
  std::seed_seq seq{low32(seed), high32(seed)};
  engine_.seed(seq);
}

Rng Rng::substream(std::initializer_list<std::uint64_t> path) const {
  std::vector<std::uint32_t> material{low32(seed_), high32(seed_),
                                      static_cast<std::uint32_t>(path.size())};
  for (std::uint64_t part : path) {
    material.push_back(low32(part));
    material.push_back(high32(part));
  }
  std::seed_seq seq(material.begin(), material.end());
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return Rng((static_cast<std::uint64_t>(out[1]) << 32) | out[0]);
}

double Rng::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t Rng::uniform_index(std::size_t n) {
  if (n == 0) throw std::invalid_argument("uniform_index over an empty range");
  if (n == 1) return 0;
  const std::uint64_t range = n;
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t excess = (max % range + 1) % range;
  const std::uint64_t limit = max - excess;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x <= limit) return static_cast<std::size_t>(x % range);
  }
}

double Rng::standard_normal() {
  const double u1 = 1.0 - uniform01();  // (0, 1]
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t Rng::entropy_seed() {
  std::random_device device;
  return (static_cast<std::uint64_t>(device()) << 32) | device();
}

}  // namespace depseq
