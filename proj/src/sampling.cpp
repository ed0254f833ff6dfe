#include "promonad/sampling.hpp"

#include <string>

namespace promonad::sampling {

char32_t scalar(RngStream& rng) {
  switch (rng.between(0, 3)) {
    case 0:
      return static_cast<char32_t>(U'0' + rng.between(0, 9));
    case 1:
      return rng.chance(0.5) ? U' ' : static_cast<char32_t>(rng.between(0x21, 0x7E));
    default: {
      // Uniform over scalar values: [0, 0xD7FF] and [0xE000, 0x10FFFF].
      auto x = rng.between(0, 0x10FFFF - 0x800);
      return static_cast<char32_t>(x < 0xD800 ? x : x + 0x800);
    }
  }
}

Text text(RngStream& rng, std::size_t max_len) {
  auto n = static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(max_len)));
  Text out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(scalar(rng));
  return out;
}

Text digit_run(RngStream& rng, std::size_t max_digits, bool canonical) {
  auto n = rng.between(1, static_cast<std::int64_t>(max_digits));
  Text out;
  for (std::int64_t i = 0; i < n; ++i) {
    auto lo = (canonical && i == 0 && n > 1) ? 1 : 0;
    out.push_back(static_cast<char32_t>(U'0' + rng.between(lo, 9)));
  }
  out.push_back(U' ');
  return out;
}

Tree tree(RngStream& rng, int max_depth, int lo, int hi) {
  if (max_depth <= 0 || rng.chance(0.3)) return Tree::leaf();
  auto l = tree(rng, max_depth - 1, lo, hi);
  auto n = static_cast<int>(rng.between(lo, hi));
  auto r = tree(rng, max_depth - 1, lo, hi);
  return Tree::node(std::move(l), n, std::move(r));
}

Tree tree_with_spine(RngStream& rng, std::size_t length, int lo, int hi) {
  if (length == 0) return Tree::leaf();
  auto l = tree(rng, 2, lo, hi);
  auto n = static_cast<int>(rng.between(lo, hi));
  return Tree::node(std::move(l), n, tree_with_spine(rng, length - 1, lo, hi));
}

Key key(RngStream& rng) {
  static const char* const pool[] = {"a", "b", "c", "k", "key", "x", "y", "z"};
  return pool[rng.between(0, 7)];
}

Value value(RngStream& rng) {
  auto n = rng.between(0, 4);
  std::string out;
  for (std::int64_t i = 0; i < n; ++i) out.push_back(static_cast<char>('a' + rng.between(0, 3)));
  return out;
}

KvMap kvmap(RngStream& rng, std::size_t max_entries) {
  KvMap m;
  auto n = rng.between(0, static_cast<std::int64_t>(max_entries));
  for (std::int64_t i = 0; i < n; ++i) m.insert_or_assign(key(rng), value(rng));
  return m;
}

std::vector<Key> keys(RngStream& rng, std::size_t max_count) {
  std::vector<Key> ks;
  auto n = rng.between(0, static_cast<std::int64_t>(max_count));
  for (std::int64_t i = 0; i < n; ++i) ks.push_back(key(rng));
  return ks;
}

std::vector<Value> values(RngStream& rng, std::size_t count) {
  std::vector<Value> vs;
  for (std::size_t i = 0; i < count; ++i) vs.push_back(value(rng));
  return vs;
}

}  // namespace promonad::sampling
