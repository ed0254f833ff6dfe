#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "promonad/partial.hpp"
#include "promonad/show.hpp"
#include "promonad/text.hpp"

namespace promonad {

/// Result of running a parser: the value and the unconsumed suffix of the input.
template <class V>
using Parsed = std::optional<std::pair<V, TextView>>;

/// Result of running a printer: the printed value and the emitted text.
template <class V>
using Printed = std::optional<std::pair<V, Text>>;

/// A parser paired with a printer.
///
/// The forward half consumes a prefix of the input text. The backward half
/// takes a pre-view `U`, prints the part of it this biparser is responsible
/// for, and returns that part as a `V` alongside the text it emitted.
template <class U, class V>
class Biparser {
 public:
  using preview_type = U;
  using value_type = V;
  using Forward = std::function<Parsed<V>(TextView)>;
  using Backward = std::function<Printed<V>(const U&)>;

  Biparser(Forward forward, Backward backward) : forward_(std::move(forward)), backward_(std::move(backward)) {}

  /// Remainder views point into `input`.
  Parsed<V> run_forward(TextView input) const { return forward_(input); }
  Printed<V> run_backward(const U& u) const { return backward_(u); }

  static Biparser pure(V x) {
    return Biparser([x](TextView s) -> Parsed<V> { return std::pair(x, s); },
                    [x](const U&) -> Printed<V> { return std::pair(x, Text()); });
  }

  static Biparser fail() {
    return Biparser([](TextView) -> Parsed<V> { return std::nullopt; },
                    [](const U&) -> Printed<V> { return std::nullopt; });
  }

 private:
  Forward forward_;
  Backward backward_;
};

template <class U, class V>
Biparser<U, V> mk_biparser(typename Biparser<U, V>::Forward fwd, typename Biparser<U, V>::Backward bwd) {
  return Biparser<U, V>(std::move(fwd), std::move(bwd));
}

template <class U, class V>
std::optional<std::pair<V, Text>> parse(const Biparser<U, V>& p, TextView s) {
  auto r = p.run_forward(s);
  if (!r) return std::nullopt;
  return std::pair(std::move(r->first), Text(r->second));
}

template <class U, class V>
Printed<V> print(const Biparser<U, V>& p, const U& u) {
  return p.run_backward(u);
}

/// Failure lift of the printer effect: success emits nothing.
template <class V>
Printed<V> to_failure(std::optional<V> x) {
  if (!x) return std::nullopt;
  return std::pair(std::move(*x), Text());
}

template <class U, class V, class K>
auto and_then(const Biparser<U, V>& p, K k) {
  using Next = std::invoke_result_t<const K&, const V&>;
  using W = typename Next::value_type;
  static_assert(std::is_same_v<typename Next::preview_type, U>, "continuation must keep the pre-view type");
  return Biparser<U, W>(
      [p, k](TextView s) -> Parsed<W> {
        auto first = p.run_forward(s);
        if (!first) return std::nullopt;
        return k(first->first).run_forward(first->second);
      },
      [p, k](const U& u) -> Printed<W> {
        auto first = p.run_backward(u);
        if (!first) return std::nullopt;
        auto second = k(first->first).run_backward(u);
        if (!second) return std::nullopt;
        return std::pair(std::move(second->first), first->second + second->second);
      });
}

template <class U, class U2, class V>
Biparser<U, V> comap(PartialFn<U, U2> f, const Biparser<U2, V>& p) {
  return Biparser<U, V>([p](TextView s) { return p.run_forward(s); },
                        [f = std::move(f), p](const U& u) -> Printed<V> {
                          auto lifted = to_failure(f(u));
                          if (!lifted) return std::nullopt;
                          return p.run_backward(lifted->first);
                        });
}

/// `comap` with its arguments flipped: `p` applied upon the part `f` extracts.
template <class U, class U2, class V>
Biparser<U, V> upon(const Biparser<U2, V>& p, PartialFn<U, U2> f) {
  return comap(std::move(f), p);
}

/// Drops the printed text: the pure projection into partial functions.
template <class U, class V>
PartialFn<U, V> purify(const Biparser<U, V>& p) {
  return PartialFn<U, V>([p](const U& u) -> std::optional<V> {
    auto r = p.run_backward(u);
    if (!r) return std::nullopt;
    return std::move(r->first);
  });
}

namespace biparsers {

using Int = std::int64_t;

Biparser<char32_t, char32_t> character();

/// A run of decimal digits terminated by one space; the value keeps the space.
Biparser<Text, Text> digits();

/// Nonnegative decimal integer followed by one space. Prints canonically.
Biparser<Int, Int> integer();

/// Length-prefixed text: `<length> <payload>`.
Biparser<Text, Text> string();

/// The literal recursive definition of `digits` in terms of bind/comap.
Biparser<Text, Text> digits_composed();

/// Repeats `p` exactly n times. As a printer, consumes the first n elements
/// of the pre-view list and fails if there are fewer. `Us`/`Vs` are the list
/// types (e.g. Text for lists of characters).
template <class Us, class Vs, class U, class V>
Biparser<Us, Vs> replicate_composed_as(Int n, Biparser<U, V> p) {
  using Out = Biparser<Us, Vs>;
  if (n <= 0) return Out::pure(Vs{});
  return and_then(upon(p, safe_head<Us>()), [n, p](const V& v) {
    return and_then(upon(replicate_composed_as<Us, Vs>(n - 1, p), safe_tail<Us>()), [v](const Vs& vs) {
      Vs out;
      out.reserve(vs.size() + 1);
      out.push_back(v);
      out.insert(out.end(), vs.begin(), vs.end());
      return Out::pure(std::move(out));
    });
  });
}

template <class U, class V>
Biparser<std::vector<U>, std::vector<V>> replicate_composed(Int n, Biparser<U, V> p) {
  return replicate_composed_as<std::vector<U>, std::vector<V>>(n, std::move(p));
}

/// Same observable behaviour as replicate_composed_as, run as a loop.
template <class Us, class Vs, class U, class V>
Biparser<Us, Vs> replicate_as(Int n, Biparser<U, V> p) {
  using Out = Biparser<Us, Vs>;
  if (n <= 0) return Out::pure(Vs{});
  return Out(
      [n, p](TextView s) -> Parsed<Vs> {
        Vs out;
        for (Int i = 0; i < n; ++i) {
          auto r = p.run_forward(s);
          if (!r) return std::nullopt;
          out.push_back(std::move(r->first));
          s = r->second;
        }
        return std::pair(std::move(out), s);
      },
      [n, p](const Us& us) -> Printed<Vs> {
        if (static_cast<std::uint64_t>(n) > us.size()) return std::nullopt;
        Vs out;
        Text emitted;
        for (Int i = 0; i < n; ++i) {
          auto r = p.run_backward(us[static_cast<std::size_t>(i)]);
          if (!r) return std::nullopt;
          out.push_back(std::move(r->first));
          emitted += r->second;
        }
        return std::pair(std::move(out), std::move(emitted));
      });
}

template <class U, class V>
Biparser<std::vector<U>, std::vector<V>> replicate(Int n, Biparser<U, V> p) {
  return replicate_as<std::vector<U>, std::vector<V>>(n, std::move(p));
}

}  // namespace biparsers

// Standalone parser/printer for the length-prefixed format, written without
// combinators. Used as an independent cross-check.
std::optional<std::pair<Text, Text>> oracle_parse_string(TextView s);
Text oracle_print_string(TextView x);

/// Canonical decimal rendering, "0" for zero.
Text show_int(biparsers::Int n);

// Round-tripping properties, stated for single instances.

/// print p x = some s  ==>  parse p (s ++ suffix) = some (x, suffix)
template <class U>
bool backward_round_trip(const Biparser<U, U>& p, const U& x, TextView suffix) {
  auto printed = p.run_backward(x);
  if (!printed) return true;
  Text input = printed->second + Text(suffix);
  auto parsed = p.run_forward(input);
  return parsed && parsed->first == x && parsed->second == suffix;
}

/// parse p s = some (x, "")  ==>  print p x emits exactly s
template <class U>
bool forward_round_trip(const Biparser<U, U>& p, TextView s) {
  auto parsed = p.run_forward(s);
  if (!parsed || !parsed->second.empty()) return true;
  auto printed = p.run_backward(parsed->first);
  return printed && printed->second == s;
}

/// print p x = some (y, s)  ==>  parse p (s ++ suffix) = some (y, suffix)
template <class U, class V>
bool weak_backward_round_trip(const Biparser<U, V>& p, const U& x, TextView suffix) {
  auto printed = p.run_backward(x);
  if (!printed) return true;
  Text input = printed->second + Text(suffix);
  auto parsed = p.run_forward(input);
  return parsed && parsed->first == printed->first && parsed->second == suffix;
}

/// parse p s01 = some (y, s1) and print p x = some (y, s0)  ==>  s01 = s0 ++ s1
template <class U, class V>
bool weak_forward_round_trip(const Biparser<U, V>& p, const U& x, TextView s01) {
  auto parsed = p.run_forward(s01);
  auto printed = p.run_backward(x);
  if (!parsed || !printed || !(parsed->first == printed->first)) return true;
  return s01 == printed->second + Text(parsed->second);
}

/// Law-subject policy: observes biparsers by parsing every probe text and
/// printing every probe pre-view.
struct BiparserOps {
  template <class U, class V>
  using type = Biparser<U, V>;

  std::vector<Text> texts;

  template <class U, class V>
  static Biparser<U, V> pure(V x) {
    return Biparser<U, V>::pure(std::move(x));
  }

  template <class P, class K>
  static auto bind(const P& p, K k) {
    return promonad::and_then(p, std::move(k));
  }

  template <class U, class U2, class V>
  static Biparser<U, V> comap(PartialFn<U, U2> f, const Biparser<U2, V>& p) {
    return promonad::comap(std::move(f), p);
  }

  template <class U, class V>
  std::optional<std::string> distinguish(const Biparser<U, V>& p, const Biparser<U, V>& q,
                                         const std::vector<U>& previews) const {
    for (const auto& s : texts) {
      auto a = parse(p, s);
      auto b = parse(q, s);
      if (a != b) return "parse " + describe(s) + ": " + describe(a) + " vs " + describe(b);
    }
    for (const auto& u : previews) {
      auto a = print(p, u);
      auto b = print(q, u);
      if (a != b) return "print " + describe(u) + ": " + describe(a) + " vs " + describe(b);
    }
    return std::nullopt;
  }
};

}  // namespace promonad
