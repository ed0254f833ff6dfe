#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace promonad {

/// Text is a sequence of unicode scalar values; lengths count scalars, not bytes.
using Text = std::u32string;
using TextView = std::u32string_view;

bool is_scalar_value(char32_t c);

/// Decodes strict UTF-8. Returns nullopt on malformed input, overlong forms,
/// surrogates, or code points above U+10FFFF.
std::optional<Text> from_utf8(std::string_view bytes);

/// Encodes scalar values as UTF-8. Non-scalar code units are replaced by U+FFFD.
std::string to_utf8(TextView text);

/// ASCII-only convenience for tests and literals.
Text text_of(std::string_view ascii);

}  // namespace promonad
