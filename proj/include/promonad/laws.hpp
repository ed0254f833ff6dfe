#pragma once

// Extensional law checking for monadic profunctors.
//
// A law subject is an "Ops" policy for one instantiation:
//
//   template <class U, class V> using type = ...;         // the profunctor P
//   template <class U, class V> static type<U, V> pure(V);
//   static auto bind(const type<U, V>&, K);               // K : V -> type<U, W>
//   static auto comap(PartialFn<U, U2>, const type<U2, V>&);
//   std::optional<std::string> distinguish(p, q, const std::vector<U>& previews) const;
//
// `distinguish` runs both values on every probe (the domain probes are held
// by the Ops object, the pre-view probes are passed in) and reports the first
// observable difference. Two values are equivalent when it returns nullopt.
//
// Every P type exposes `preview_type` and `value_type`.

#include <concepts>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "promonad/partial.hpp"
#include "promonad/show.hpp"

namespace promonad {

/// Outcome of a law check. Converts to bool; carries the first counterexample.
struct Verdict {
  bool ok = true;
  std::string counterexample;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }

  explicit operator bool() const { return ok; }
};

inline Verdict all_of(std::initializer_list<Verdict> verdicts) {
  for (const auto& v : verdicts)
    if (!v.ok) return v;
  return Verdict::pass();
}

template <class Ops, class U, class V>
concept LawSubject = requires(const Ops& ops, const typename Ops::template type<U, V>& p,
                              const std::vector<U>& previews) {
  { ops.distinguish(p, p, previews) } -> std::same_as<std::optional<std::string>>;
  { Ops::template pure<U>(std::declval<V>()) } -> std::same_as<typename Ops::template type<U, V>>;
};

namespace detail {

template <class Ops, class P>
Verdict equivalent(const Ops& ops, const P& lhs, const P& rhs,
                   const std::vector<typename P::preview_type>& previews, const char* law) {
  if (auto diff = ops.distinguish(lhs, rhs, previews)) return Verdict::fail(std::string(law) + ": " + *diff);
  return Verdict::pass();
}

template <class P>
using preview_t = typename P::preview_type;
template <class P>
using value_t = typename P::value_type;

}  // namespace detail

/// comap Just = id
template <class Ops, class P>
Verdict law_comap_identity(const Ops& ops, const P& p, const std::vector<detail::preview_t<P>>& previews) {
  using U = detail::preview_t<P>;
  return detail::equivalent(ops, Ops::comap(partial_identity<U>(), p), p, previews, "comap identity");
}

/// comap (f >=> g) = comap f . comap g
template <class Ops, class U, class V, class P>
Verdict law_comap_compose(const Ops& ops, const PartialFn<U, V>& f, const PartialFn<V, detail::preview_t<P>>& g,
                          const P& p, const std::vector<U>& previews) {
  auto lhs = Ops::comap(partial_compose(f, g), p);
  auto rhs = Ops::comap(f, Ops::comap(g, p));
  return detail::equivalent(ops, lhs, rhs, previews, "comap composition");
}

/// Left identity, right identity and associativity of the monad on `P u`.
template <class Ops, class P, class K, class H>
Verdict law_monad(const Ops& ops, const P& p, K k, H h, const detail::value_t<P>& x0,
                  const std::vector<detail::preview_t<P>>& previews) {
  using U = detail::preview_t<P>;
  auto ret = [](const auto& y) { return Ops::template pure<U>(y); };

  auto left = detail::equivalent(ops, Ops::bind(Ops::template pure<U>(x0), k), k(x0), previews, "left identity");
  if (!left) return left;
  auto right = detail::equivalent(ops, Ops::bind(p, ret), p, previews, "right identity");
  if (!right) return right;
  auto assoc_l = Ops::bind(Ops::bind(p, k), h);
  auto assoc_r = Ops::bind(p, [k, h](const auto& y) { return Ops::bind(k(y), h); });
  return detail::equivalent(ops, assoc_l, assoc_r, previews, "associativity");
}

/// comap f (return y) = return y
/// comap f (p >>= k) = comap f p >>= \y -> comap f (k y)
///
/// The return clause only holds on the domain of f: where f fails, the
/// backward direction of comap f (return y) fails too, while return y does
/// not. It is checked on the pre-views f accepts; the bind clause on all.
template <class Ops, class U, class P, class K>
Verdict law_promonad(const Ops& ops, const PartialFn<U, detail::preview_t<P>>& f, const P& p, K k,
                     const detail::value_t<P>& x0, const std::vector<U>& previews) {
  std::vector<U> domain;
  for (const auto& u : previews)
    if (f(u)) domain.push_back(u);
  auto ret = detail::equivalent(ops, Ops::comap(f, Ops::template pure<detail::preview_t<P>>(x0)),
                                Ops::template pure<U>(x0), domain, "comap/return");
  if (!ret) return ret;
  auto lhs = Ops::comap(f, Ops::bind(p, k));
  auto rhs = Ops::bind(Ops::comap(f, p), [f, k](const auto& y) { return Ops::comap(f, k(y)); });
  return detail::equivalent(ops, lhs, rhs, previews, "comap/bind");
}

/// Checks that `proj` is a monadic profunctor homomorphism into partial
/// functions, pointwise on the probes. `proj` must be callable on every
/// P<u, v> it is handed (a generic lambda works).
template <class Ops, class Proj, class U, class P, class K>
Verdict law_purify_homomorphism(const Ops&, Proj proj, const PartialFn<U, detail::preview_t<P>>& f, const P& p,
                                K k, const detail::value_t<P>& x0, const std::vector<U>& outer,
                                const std::vector<detail::preview_t<P>>& inner) {
  using U2 = detail::preview_t<P>;

  auto via_comap = proj(Ops::comap(f, p));
  auto comap_of = partial_comap(f, proj(p));
  for (const auto& u : outer) {
    auto a = via_comap(u);
    auto b = comap_of(u);
    if (a != b)
      return Verdict::fail("proj/comap at " + describe(u) + ": " + describe(a) + " vs " + describe(b));
  }

  auto via_bind = proj(Ops::bind(p, k));
  auto bind_of = partial_bind(proj(p), [&proj, k](const auto& y) { return proj(k(y)); });
  auto via_pure = proj(Ops::template pure<U2>(x0));
  for (const auto& u : inner) {
    auto a = via_bind(u);
    auto b = bind_of(u);
    if (a != b) return Verdict::fail("proj/bind at " + describe(u) + ": " + describe(a) + " vs " + describe(b));
    auto r = via_pure(u);
    if (r != std::optional(x0))
      return Verdict::fail("proj/return at " + describe(u) + ": " + describe(r) + " vs " + describe(x0));
  }
  return Verdict::pass();
}

/// Checks that `k` has `k_inv` as a left arrow inverse on every sample:
///   k x >>= \y -> return (x, y)  ==  k x >>= \y -> return (k_inv y, y)
template <class Ops, class V, class K, class KInv>
Verdict check_injective_arrow(const Ops& ops, K k, KInv k_inv, const std::vector<V>& samples,
                              const std::vector<detail::preview_t<std::invoke_result_t<K, const V&>>>& previews) {
  using P = std::invoke_result_t<K, const V&>;
  using U = detail::preview_t<P>;
  for (const auto& x : samples) {
    auto lhs = Ops::bind(k(x), [x](const auto& y) { return Ops::template pure<U>(std::pair(x, y)); });
    auto rhs = Ops::bind(k(x), [k_inv](const auto& y) { return Ops::template pure<U>(std::pair(V(k_inv(y)), y)); });
    if (auto diff = ops.distinguish(lhs, rhs, previews))
      return Verdict::fail("left arrow inverse at " + describe(x) + ": " + *diff);
  }
  return Verdict::pass();
}

}  // namespace promonad
