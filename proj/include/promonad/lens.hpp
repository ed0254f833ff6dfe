#pragma once

#include <functional>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "promonad/kvmap.hpp"
#include "promonad/partial.hpp"
#include "promonad/show.hpp"
#include "promonad/tree.hpp"

namespace promonad {

/// Predicate over sources returned by a put. It holds on sources that still
/// agree with what the put wrote. Monoid: always-true unit, conjunction.
template <class S>
class SourcePredicate {
 public:
  using Test = std::function<bool(const S&)>;

  explicit SourcePredicate(Test test) : test_(std::move(test)) {}

  static SourcePredicate always() {
    return SourcePredicate([](const S&) { return true; });
  }

  bool operator()(const S& s) const { return test_(s); }

  friend SourcePredicate operator&&(const SourcePredicate& a, const SourcePredicate& b) {
    return SourcePredicate([a, b](const S& s) { return a(s) && b(s); });
  }

 private:
  Test test_;
};

template <class S, class V>
struct PutResult {
  V view;
  S source;
  SourcePredicate<S> guard;
};

/// A monadic lens: a getter that may fail, and a putter that takes a pre-view
/// `U` and a source, and returns the view it wrote, the updated source, and a
/// conflict predicate.
template <class S, class U, class V>
class Lens {
 public:
  using source_type = S;
  using preview_type = U;
  using value_type = V;
  using Get = std::function<std::optional<V>(const S&)>;
  using Put = std::function<std::optional<PutResult<S, V>>(const U&, const S&)>;

  Lens(Get get, Put put) : get_(std::move(get)), put_(std::move(put)) {}

  std::optional<V> run_get(const S& s) const { return get_(s); }
  std::optional<PutResult<S, V>> run_put(const U& u, const S& s) const { return put_(u, s); }

  static Lens pure(V x) {
    return Lens([x](const S&) { return std::optional<V>(x); },
                [x](const U&, const S& s) {
                  return std::optional<PutResult<S, V>>(PutResult<S, V>{x, s, SourcePredicate<S>::always()});
                });
  }

  static Lens fail() {
    return Lens([](const S&) { return std::optional<V>(); },
                [](const U&, const S&) { return std::optional<PutResult<S, V>>(); });
  }

 private:
  Get get_;
  Put put_;
};

template <class S, class U, class V>
Lens<S, U, V> mk_lens(typename Lens<S, U, V>::Get get, typename Lens<S, U, V>::Put put) {
  return Lens<S, U, V>(std::move(get), std::move(put));
}

template <class S, class U, class V>
std::optional<V> get(const Lens<S, U, V>& l, const S& s) {
  return l.run_get(s);
}

template <class S, class U, class V>
std::optional<PutResult<S, V>> put(const Lens<S, U, V>& l, const U& u, const S& s) {
  return l.run_put(u, s);
}

/// Failure lift of the put effect: success leaves the source alone and
/// returns the always-true predicate.
template <class S, class V>
std::optional<PutResult<S, V>> to_failure(std::optional<V> x, const S& s) {
  if (!x) return std::nullopt;
  return PutResult<S, V>{std::move(*x), s, SourcePredicate<S>::always()};
}

template <class S, class U, class V>
Lens<S, U, V> lens_pure(V x) {
  return Lens<S, U, V>::pure(std::move(x));
}

template <class S, class U, class V, class K>
auto and_then(const Lens<S, U, V>& l, K k) {
  using Next = std::invoke_result_t<const K&, const V&>;
  using W = typename Next::value_type;
  static_assert(std::is_same_v<typename Next::preview_type, U>, "continuation must keep the pre-view type");
  static_assert(std::is_same_v<typename Next::source_type, S>, "continuation must keep the source type");
  return Lens<S, U, W>(
      [l, k](const S& s) -> std::optional<W> {
        auto v = l.run_get(s);
        if (!v) return std::nullopt;
        return k(*v).run_get(s);
      },
      [l, k](const U& u, const S& s) -> std::optional<PutResult<S, W>> {
        auto first = l.run_put(u, s);
        if (!first) return std::nullopt;
        auto second = k(first->view).run_put(u, first->source);
        if (!second) return std::nullopt;
        return PutResult<S, W>{std::move(second->view), std::move(second->source), first->guard && second->guard};
      });
}

template <class S, class U, class U2, class V>
Lens<S, U, V> comap(PartialFn<U, U2> f, const Lens<S, U2, V>& l) {
  return Lens<S, U, V>([l](const S& s) { return l.run_get(s); },
                       [f = std::move(f), l](const U& u, const S& s) -> std::optional<PutResult<S, V>> {
                         auto lifted = to_failure(f(u), s);
                         if (!lifted) return std::nullopt;
                         return l.run_put(lifted->view, lifted->source);
                       });
}

template <class S, class U, class U2, class V>
Lens<S, U, V> upon(const Lens<S, U2, V>& l, PartialFn<U, U2> f) {
  return comap(std::move(f), l);
}

/// Pure projection at a fixed source: the view a put would report.
template <class S, class U, class V>
PartialFn<U, V> lens_purify(S source, const Lens<S, U, V>& l) {
  return PartialFn<U, V>([source = std::move(source), l](const U& u) -> std::optional<V> {
    auto r = l.run_put(u, source);
    if (!r) return std::nullopt;
    return std::move(r->view);
  });
}

namespace lenses {

/// Classical sequential composition: view `s` as `t` through `outer`, then `t`
/// as `u` through `inner`. The put fails when the inner put's own predicate
/// rejects the intermediate source it produced.
template <class S, class T, class U>
Lens<S, U, U> compose(const Lens<S, T, T>& outer, const Lens<T, U, U>& inner) {
  return Lens<S, U, U>(
      [outer, inner](const S& s) -> std::optional<U> {
        auto t = outer.run_get(s);
        if (!t) return std::nullopt;
        return inner.run_get(*t);
      },
      [outer, inner](const U& xu, const S& s) -> std::optional<PutResult<S, U>> {
        auto t = outer.run_get(s);
        if (!t) return std::nullopt;
        auto in = inner.run_put(xu, *t);
        if (!in) return std::nullopt;
        auto out = outer.run_put(in->source, s);
        if (!out) return std::nullopt;
        if (!in->guard(in->source)) return std::nullopt;
        return PutResult<S, U>{std::move(in->view), std::move(out->source), std::move(out->guard)};
      });
}

Lens<KvMap, Value, Value> at_key(Key k);
Lens<KvMap, std::vector<Value>, std::vector<Value>> at_keys(std::vector<Key> ks);

using Label = std::optional<int>;

Lens<Tree, Label, Label> root();
Lens<Tree, Tree, Tree> right_child();
Lens<Tree, std::vector<int>, std::vector<int>> spine();

}  // namespace lenses

// Lens laws for single instances.

/// L-PutGet: put l x s = some ((_, s'), p) and p s'  ==>  get l s' = some x
template <class S, class V>
bool put_get(const Lens<S, V, V>& l, const V& x, const S& s) {
  auto r = l.run_put(x, s);
  if (!r || !r->guard(r->source)) return true;
  return l.run_get(r->source) == std::optional<V>(x);
}

/// L-GetPut: get l s = some x  ==>  put l x s = some ((_, s), _)
template <class S, class V>
bool get_put(const Lens<S, V, V>& l, const S& s) {
  auto x = l.run_get(s);
  if (!x) return true;
  auto r = l.run_put(*x, s);
  return r && r->source == s;
}

/// put l x s = some ((y, _), p) and p s2  ==>  get l s2 = some y
template <class S, class U, class V>
bool weak_backward_round_trip(const Lens<S, U, V>& l, const U& x, const S& s, const S& s2) {
  auto r = l.run_put(x, s);
  if (!r || !r->guard(s2)) return true;
  return l.run_get(s2) == std::optional<V>(r->view);
}

/// get l s = some y and put l x s = some ((y, s'), _)  ==>  s = s'
template <class S, class U, class V>
bool weak_forward_round_trip(const Lens<S, U, V>& l, const U& x, const S& s) {
  auto y = l.run_get(s);
  auto r = l.run_put(x, s);
  if (!y || !r || !(r->view == *y)) return true;
  return r->source == s;
}

/// Law-subject policy for lenses over a fixed source type. Observes gets on
/// every probe source, and puts of every probe pre-view into every probe
/// source, comparing conflict predicates by application to the probe sources.
template <class S>
struct LensOps {
  template <class U, class V>
  using type = Lens<S, U, V>;

  std::vector<S> sources;

  template <class U, class V>
  static Lens<S, U, V> pure(V x) {
    return Lens<S, U, V>::pure(std::move(x));
  }

  template <class L, class K>
  static auto bind(const L& l, K k) {
    return promonad::and_then(l, std::move(k));
  }

  template <class U, class U2, class V>
  static Lens<S, U, V> comap(PartialFn<U, U2> f, const Lens<S, U2, V>& l) {
    return promonad::comap(std::move(f), l);
  }

  template <class U, class V>
  std::optional<std::string> distinguish(const Lens<S, U, V>& p, const Lens<S, U, V>& q,
                                         const std::vector<U>& previews) const {
    for (const auto& s : sources) {
      auto a = p.run_get(s);
      auto b = q.run_get(s);
      if (a != b) return "get " + describe(s) + ": " + describe(a) + " vs " + describe(b);
    }
    for (const auto& u : previews) {
      for (const auto& s : sources) {
        auto a = p.run_put(u, s);
        auto b = q.run_put(u, s);
        std::string where = "put " + describe(u) + " into " + describe(s) + ": ";
        if (a.has_value() != b.has_value()) return where + (a ? "some" : "none") + " vs " + (b ? "some" : "none");
        if (!a) continue;
        if (!(a->view == b->view)) return where + "view " + describe(a->view) + " vs " + describe(b->view);
        if (!(a->source == b->source))
          return where + "source " + describe(a->source) + " vs " + describe(b->source);
        std::vector<S> witnesses = sources;
        witnesses.push_back(a->source);
        for (const auto& w : witnesses) {
          if (a->guard(w) != b->guard(w)) return where + "predicates disagree on " + describe(w);
        }
      }
    }
    return std::nullopt;
  }
};

}  // namespace promonad
