#pragma once

// Random inputs for property checks.

#include <cstddef>
#include <vector>

#include "promonad/kvmap.hpp"
#include "promonad/rng.hpp"
#include "promonad/text.hpp"
#include "promonad/tree.hpp"

namespace promonad::sampling {

/// Any unicode scalar value, biased towards ASCII digits and spaces so that
/// length-prefix-like fragments show up often.
char32_t scalar(RngStream& rng);

/// Length uniform in [0, max_len].
Text text(RngStream& rng, std::size_t max_len);

/// A digit run (possibly with redundant leading zeros) and one space.
Text digit_run(RngStream& rng, std::size_t max_digits, bool canonical);

/// Trees of bounded depth with labels in [lo, hi]; not necessarily ordered.
Tree tree(RngStream& rng, int max_depth, int lo, int hi);

/// A tree whose right spine has exactly `length` nodes.
Tree tree_with_spine(RngStream& rng, std::size_t length, int lo, int hi);

/// Keys drawn from a small pool so that lookups hit often.
Key key(RngStream& rng);
Value value(RngStream& rng);
KvMap kvmap(RngStream& rng, std::size_t max_entries);
std::vector<Key> keys(RngStream& rng, std::size_t max_count);
std::vector<Value> values(RngStream& rng, std::size_t count);

}  // namespace promonad::sampling
