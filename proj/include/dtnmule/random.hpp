#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace dtnmule {

/// Deterministic random stream used by every sampler in the library.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The variate transforms are implemented here rather than taken
/// from <random>'s distributions, whose algorithms are implementation
/// defined, so a seed reproduces the same samples with any standard library:
///
///   uniform01()        = (engine() >> 11) * 2^-53          in [0, 1)
///   uniform(a, b)      = a + (b - a) * uniform01()
///   exponential(mean)  = -mean * log1p(-uniform01())
class RandomStream {
 public:
  using result_type = std::uint64_t;

  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for replication `index` of a run seeded with `seed`.
  static RandomStream substream(std::uint64_t seed, std::uint64_t index) {
    return RandomStream(splitmix64(seed ^ splitmix64(index + 0x9E3779B97F4A7C15ULL)));
  }

  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lower, double upper) {
    return lower + (upper - lower) * uniform01();
  }

  double exponential(double mean) {
    return -mean * std::log1p(-uniform01());
  }

  std::uint64_t next_u64() { return engine_(); }

  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dtnmule
