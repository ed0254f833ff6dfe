#include "promonad/rng.hpp"

namespace promonad {

std::pair<double, Rng> Rng::uniform_real() const {
  auto [bits, next] = this->next();
  return {static_cast<double>(bits >> 11) * 0x1.0p-53, next};
}

std::pair<std::int64_t, Rng> Rng::uniform_int(std::int64_t lo, std::int64_t hi) const {
  auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  auto [bits, next] = this->next();
  if (span == UINT64_MAX) return {static_cast<std::int64_t>(bits), next};
  std::uint64_t range = span + 1;
  // Reject the top partial bucket so every residue is equally likely.
  std::uint64_t limit = UINT64_MAX - (UINT64_MAX % range + 1) % range;
  while (bits > limit) {
    auto drawn = next.next();
    bits = drawn.first;
    next = drawn.second;
  }
  return {static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + bits % range), next};
}

}  // namespace promonad
