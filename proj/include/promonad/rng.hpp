#pragma once

#include <cstdint>
#include <utility>

namespace promonad {

/// Deterministic splitmix64 stepper. Each draw returns the value together
/// with the advanced generator; the receiver is never mutated.
class Rng {
 public:
  constexpr explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

  constexpr std::pair<std::uint64_t, Rng> next() const {
    std::uint64_t s = state_ + 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return {z, Rng(s)};
  }

  /// Uniform in [0, 1) with 53 bits of resolution.
  std::pair<double, Rng> uniform_real() const;

  /// Uniform in [lo, hi], unbiased. Precondition: lo <= hi.
  std::pair<std::int64_t, Rng> uniform_int(std::int64_t lo, std::int64_t hi) const;

  constexpr std::uint64_t state() const { return state_; }

  friend constexpr bool operator==(const Rng&, const Rng&) = default;

 private:
  std::uint64_t state_;
};

/// Mutable convenience wrapper for test and sampling loops.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : rng_(seed) {}
  explicit RngStream(Rng rng) : rng_(rng) {}

  std::uint64_t bits() {
    auto [v, next] = rng_.next();
    rng_ = next;
    return v;
  }
  double real() {
    auto [v, next] = rng_.uniform_real();
    rng_ = next;
    return v;
  }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    auto [v, next] = rng_.uniform_int(lo, hi);
    rng_ = next;
    return v;
  }
  bool chance(double p) { return real() < p; }

  Rng current() const { return rng_; }
  void reset(Rng rng) { rng_ = rng; }

 private:
  Rng rng_;
};

}  // namespace promonad
