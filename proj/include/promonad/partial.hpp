#pragma once

#include <functional>
#include <optional>
#include <type_traits>
#include <utility>

namespace promonad {

/// A total function into `std::optional`, i.e. a partial function from U to V.
///
/// Partial functions are the argument type of every `comap` in this library
/// and the codomain of the purification homomorphisms.
template <class U, class V>
class PartialFn {
 public:
  using input_type = U;
  using output_type = V;
  using function_type = std::function<std::optional<V>(const U&)>;

  PartialFn() = default;

  template <class F>
    requires std::is_invocable_r_v<std::optional<V>, const F&, const U&> &&
             (!std::is_same_v<std::remove_cvref_t<F>, PartialFn>)
  PartialFn(F f) : fn_(std::move(f)) {}  // NOLINT(google-explicit-constructor)

  std::optional<V> operator()(const U& u) const { return fn_(u); }
  std::optional<V> apply(const U& u) const { return fn_(u); }

 private:
  function_type fn_;
};

template <class U>
PartialFn<U, U> partial_identity() {
  return PartialFn<U, U>([](const U& u) { return std::optional<U>(u); });
}

/// Left-to-right Kleisli composition: run f, then g on its result.
template <class U, class V, class W>
PartialFn<U, W> partial_compose(PartialFn<U, V> f, PartialFn<V, W> g) {
  return PartialFn<U, W>([f = std::move(f), g = std::move(g)](const U& u) -> std::optional<W> {
    auto v = f(u);
    if (!v) return std::nullopt;
    return g(*v);
  });
}

/// Lifts a total function.
template <class U, class F>
auto partial_total(F f) {
  using V = std::invoke_result_t<const F&, const U&>;
  return PartialFn<U, V>([f = std::move(f)](const U& u) { return std::optional<V>(f(u)); });
}

// Monadic-profunctor structure of partial functions: the reader-over-optional monad.

template <class U, class V>
PartialFn<U, V> partial_pure(V x) {
  return PartialFn<U, V>([x = std::move(x)](const U&) { return std::optional<V>(x); });
}

template <class U, class V, class K>
auto partial_bind(PartialFn<U, V> p, K k) {
  using Next = std::invoke_result_t<const K&, const V&>;
  using W = typename Next::output_type;
  return PartialFn<U, W>([p = std::move(p), k = std::move(k)](const U& u) -> std::optional<W> {
    auto v = p(u);
    if (!v) return std::nullopt;
    return k(*v)(u);
  });
}

template <class U, class U2, class V>
PartialFn<U, V> partial_comap(PartialFn<U, U2> f, PartialFn<U2, V> p) {
  return partial_compose(std::move(f), std::move(p));
}

template <class Seq>
PartialFn<Seq, typename Seq::value_type> safe_head() {
  using T = typename Seq::value_type;
  return PartialFn<Seq, T>([](const Seq& s) -> std::optional<T> {
    if (s.empty()) return std::nullopt;
    return s.front();
  });
}

template <class Seq>
PartialFn<Seq, Seq> safe_tail() {
  return PartialFn<Seq, Seq>([](const Seq& s) -> std::optional<Seq> {
    if (s.empty()) return std::nullopt;
    return Seq(std::next(s.begin()), s.end());
  });
}

template <class U, class V>
PartialFn<U, V> partial_fail() {
  return PartialFn<U, V>([](const U&) { return std::optional<V>(); });
}

}  // namespace promonad
