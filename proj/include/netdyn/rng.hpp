#pragma once

#include <cstdint>
#include <random>

namespace netdyn {

/// Seeded random stream shared by all generators.
///
/// The engine is `std::mt19937_64`, whose output sequence is fixed by the C++
/// standard. The `<random>` distributions are not (their algorithms are
/// implementation-defined), so the two draws below are spelled out here:
///
///   uniform01()      = (next() >> 11) * 2^-53            in [0, 1)
///   uniform_index(n) = next() mod n, rejecting draws below (2^64 mod n)
///
/// Any implementation reproducing these two formulas on top of MT19937-64
/// produces identical graphs for identical seeds.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n). `n` must be positive.
  std::uint64_t uniform_index(std::uint64_t n) {
    const std::uint64_t limit = -n % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t x = next();
      if (x >= limit) return x % n;
    }
  }

  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace netdyn
