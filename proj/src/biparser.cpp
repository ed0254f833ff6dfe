#include "promonad/biparser.hpp"

#include <limits>

namespace promonad {

namespace {

bool is_digit(char32_t c) { return c >= U'0' && c <= U'9'; }

// Decimal value of a digit run with its terminating space, or nullopt if the
// run is empty or does not fit.
std::optional<biparsers::Int> read_digits(TextView ds) {
  if (!ds.empty() && ds.back() == U' ') ds.remove_suffix(1);
  if (ds.empty()) return std::nullopt;
  biparsers::Int n = 0;
  constexpr auto max = std::numeric_limits<biparsers::Int>::max();
  for (char32_t c : ds) {
    if (!is_digit(c)) return std::nullopt;
    auto d = static_cast<biparsers::Int>(c - U'0');
    if (n > (max - d) / 10) return std::nullopt;
    n = n * 10 + d;
  }
  return n;
}

}  // namespace

Text show_int(biparsers::Int n) {
  auto s = std::to_string(n);
  return Text(s.begin(), s.end());
}

namespace biparsers {

Biparser<char32_t, char32_t> character() {
  return mk_biparser<char32_t, char32_t>(
      [](TextView s) -> Parsed<char32_t> {
        if (s.empty()) return std::nullopt;
        return std::pair(s.front(), s.substr(1));
      },
      [](const char32_t& c) -> Printed<char32_t> { return std::pair(c, Text(1, c)); });
}

Biparser<Text, Text> digits_composed() {
  using P = Biparser<Text, Text>;
  return and_then(upon(character(), safe_head<Text>()), [](const char32_t& d) -> P {
    if (is_digit(d)) {
      return and_then(upon(digits_composed(), safe_tail<Text>()), [d](const Text& igits) { return P::pure(d + igits); });
    }
    if (d == U' ') return P::pure(Text(U" "));
    return P::fail();
  });
}

Biparser<Text, Text> digits() {
  return mk_biparser<Text, Text>(
      [](TextView s) -> Parsed<Text> {
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (s[i] == U' ') return std::pair(Text(s.substr(0, i + 1)), s.substr(i + 1));
          if (!is_digit(s[i])) return std::nullopt;
        }
        return std::nullopt;
      },
      [](const Text& u) -> Printed<Text> {
        // Prints up to and including the first space; anything after it is ignored.
        for (std::size_t i = 0; i < u.size(); ++i) {
          if (u[i] == U' ') {
            Text run = u.substr(0, i + 1);
            return std::pair(run, run);
          }
          if (!is_digit(u[i])) return std::nullopt;
        }
        return std::nullopt;
      });
}

Biparser<Int, Int> integer() {
  PartialFn<Int, Text> printed_int([](const Int& n) -> std::optional<Text> {
    if (n < 0) return std::nullopt;
    return show_int(n) + U" ";
  });
  return and_then(upon(digits(), printed_int), [](const Text& ds) {
    auto n = read_digits(ds);
    return n ? Biparser<Int, Int>::pure(*n) : Biparser<Int, Int>::fail();
  });
}

Biparser<Text, Text> string() {
  auto length = partial_total<Text>([](const Text& s) { return static_cast<Int>(s.size()); });
  return and_then(upon(integer(), length), [](const Int& n) { return replicate_as<Text, Text>(n, character()); });
}

}  // namespace biparsers

std::optional<std::pair<Text, Text>> oracle_parse_string(TextView s) {
  std::size_t pos = 0;
  Text ds;
  while (true) {
    if (pos >= s.size()) return std::nullopt;
    char32_t c = s[pos++];
    if (c == U' ') break;
    if (!is_digit(c)) return std::nullopt;
    ds.push_back(c);
  }
  if (ds.empty()) return std::nullopt;
  std::uint64_t len = 0;
  for (char32_t c : ds) {
    if (len > (std::numeric_limits<std::uint64_t>::max() >> 4)) return std::nullopt;
    len = len * 10 + (c - U'0');
  }
  if (len > s.size() - pos) return std::nullopt;
  return std::pair(Text(s.substr(pos, len)), Text(s.substr(pos + len)));
}

Text oracle_print_string(TextView x) {
  return show_int(static_cast<biparsers::Int>(x.size())) + U" " + Text(x);
}

}  // namespace promonad
