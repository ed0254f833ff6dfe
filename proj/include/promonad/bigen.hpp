#pragma once

#include <functional>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "promonad/partial.hpp"
#include "promonad/rng.hpp"
#include "promonad/show.hpp"
#include "promonad/tree.hpp"

namespace promonad {

/// A random generator paired with a checker. The checker maps a pre-view to
/// the value it accepts, or nullopt when the pre-view is rejected.
template <class U, class V>
class Bigen {
 public:
  using preview_type = U;
  using value_type = V;
  using Generate = std::function<std::pair<V, Rng>(Rng)>;
  using Check = std::function<std::optional<V>(const U&)>;

  Bigen(Generate generate, Check check) : generate_(std::move(generate)), check_(std::move(check)) {}

  std::pair<V, Rng> run_generate(Rng r) const { return generate_(r); }
  std::optional<V> run_check(const U& u) const { return check_(u); }

  /// Consumes no randomness.
  static Bigen pure(V x) {
    return Bigen([x](Rng r) { return std::pair(x, r); }, [x](const U&) { return std::optional<V>(x); });
  }

 private:
  Generate generate_;
  Check check_;
};

template <class U, class V>
Bigen<U, V> mk_g(typename Bigen<U, V>::Generate gen, typename Bigen<U, V>::Check chk) {
  return Bigen<U, V>(std::move(gen), std::move(chk));
}

template <class V, class Pred>
Bigen<V, V> mk_aligned_g(typename Bigen<V, V>::Generate gen, Pred pred) {
  return Bigen<V, V>(std::move(gen), [pred = std::move(pred)](const V& y) -> std::optional<V> {
    if (pred(y)) return y;
    return std::nullopt;
  });
}

template <class U, class V>
std::pair<V, Rng> generate(const Bigen<U, V>& g, Rng r) {
  return g.run_generate(r);
}

template <class U, class V>
std::optional<V> check(const Bigen<U, V>& g, const U& u) {
  return g.run_check(u);
}

template <class U, class V>
bool to_predicate(const Bigen<U, V>& g, const U& u) {
  return g.run_check(u).has_value();
}

template <class U, class V>
Bigen<U, V> g_pure(V x) {
  return Bigen<U, V>::pure(std::move(x));
}

template <class U, class V, class K>
auto and_then(const Bigen<U, V>& g, K k) {
  using Next = std::invoke_result_t<const K&, const V&>;
  using W = typename Next::value_type;
  static_assert(std::is_same_v<typename Next::preview_type, U>, "continuation must keep the pre-view type");
  return Bigen<U, W>(
      [g, k](Rng r) {
        auto [v, r1] = g.run_generate(r);
        return k(v).run_generate(r1);
      },
      [g, k](const U& u) -> std::optional<W> {
        auto v = g.run_check(u);
        if (!v) return std::nullopt;
        return k(*v).run_check(u);
      });
}

template <class U, class U2, class V>
Bigen<U, V> comap(PartialFn<U, U2> f, const Bigen<U2, V>& g) {
  return Bigen<U, V>([g](Rng r) { return g.run_generate(r); },
                     [f = std::move(f), g](const U& u) -> std::optional<V> {
                       auto inner = f(u);
                       if (!inner) return std::nullopt;
                       return g.run_check(*inner);
                     });
}

/// The checker is already a partial function.
template <class U, class V>
PartialFn<U, V> bigen_purify(const Bigen<U, V>& g) {
  return PartialFn<U, V>([g](const U& u) { return g.run_check(u); });
}

namespace bigens {

/// True with probability p; accepts every boolean.
Bigen<bool, bool> boolean(double p);

/// Uniform on [lo, hi]; accepts exactly the integers in range.
Bigen<int, int> in_range(int lo, int hi);

Bigen<Tree, Tree> leaf();

/// Binary search trees with labels in [lo, hi].
Bigen<Tree, Tree> bst(int lo, int hi);

}  // namespace bigens

/// Directly coded BST membership test with range narrowing.
bool check_bst(int lo, int hi, const Tree& t);

/// Every tree accepted by check_bst(lo, hi, .), without duplicates.
std::vector<Tree> enumerate_bsts(int lo, int hi);

/// Law-subject policy: observes bigenerators by generating under every probe
/// seed (value and final generator state) and checking every probe pre-view.
struct BigenOps {
  template <class U, class V>
  using type = Bigen<U, V>;

  std::vector<Rng> seeds;

  template <class U, class V>
  static Bigen<U, V> pure(V x) {
    return Bigen<U, V>::pure(std::move(x));
  }

  template <class G, class K>
  static auto bind(const G& g, K k) {
    return promonad::and_then(g, std::move(k));
  }

  template <class U, class U2, class V>
  static Bigen<U, V> comap(PartialFn<U, U2> f, const Bigen<U2, V>& g) {
    return promonad::comap(std::move(f), g);
  }

  template <class U, class V>
  std::optional<std::string> distinguish(const Bigen<U, V>& p, const Bigen<U, V>& q,
                                         const std::vector<U>& previews) const {
    for (const auto& r : seeds) {
      auto a = p.run_generate(r);
      auto b = q.run_generate(r);
      if (!(a.first == b.first) || !(a.second == b.second))
        return "generate from seed state " + std::to_string(r.state()) + ": " + describe(a.first) + " vs " +
               describe(b.first);
    }
    for (const auto& u : previews) {
      auto a = p.run_check(u);
      auto b = q.run_check(u);
      if (a != b) return "check " + describe(u) + ": " + describe(a) + " vs " + describe(b);
    }
    return std::nullopt;
  }
};

}  // namespace promonad
