#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace promonad {

using Key = std::string;
using Value = std::string;
using KvMap = std::map<Key, Value>;

/// One `key=value` pair per line. Empty lines are skipped. Fails on a line
/// without `=`, on a second `=`, or on a repeated key.
std::optional<KvMap> parse_kvmap(std::string_view content);

/// Inverse of parse_kvmap; nullopt if a key or value cannot be represented
/// (contains `=` or a newline).
std::optional<std::string> format_kvmap(const KvMap& m);

bool representable(std::string_view key_or_value);

}  // namespace promonad
