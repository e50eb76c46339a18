#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>

namespace csitq {

/// Seedable, portable random source for the Monte Carlo paths.
///
/// The raw stream is std::mt19937_64 (fully specified by the C++ standard,
/// so identical on every platform). Derived draws are pinned as:
///   - next_double(): (raw >> 11) * 2^-53, uniform on [0, 1), one raw word.
///   - bernoulli(p):  next_double() < p, one raw word.
///   - next_index(n): floor(next_double() * n), one raw word.
///   - sample(dist):  cumulative scan against one next_double().
/// Every consumer documents its draw order, so runs are bit-reproducible.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return next_double() < p; }

  int next_index(int n) {
    if (n <= 0) throw std::invalid_argument("Rng::next_index: n must be positive");
    int i = static_cast<int>(next_double() * n);
    return i < n ? i : n - 1;
  }

  /// Draws from a distribution given as probabilities summing to ~1.
  int sample(std::span<const double> dist) {
    double u = next_double();
    double acc = 0.0;
    for (size_t i = 0; i < dist.size(); ++i) {
      acc += dist[i];
      if (u < acc) return static_cast<int>(i);
    }
    return static_cast<int>(dist.size()) - 1;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace csitq
