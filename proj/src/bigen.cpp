#include "promonad/bigen.hpp"

namespace promonad {

namespace bigens {

namespace {

std::optional<int> node_value(const Tree& t) {
  if (t.is_leaf()) return std::nullopt;
  return t.label();
}

std::optional<Tree> node_left(const Tree& t) {
  if (t.is_leaf()) return std::nullopt;
  return t.left();
}

std::optional<Tree> node_right(const Tree& t) {
  if (t.is_leaf()) return std::nullopt;
  return t.right();
}

}  // namespace

Bigen<bool, bool> boolean(double p) {
  return mk_aligned_g<bool>(
      [p](Rng r) {
        auto [x, next] = r.uniform_real();
        return std::pair(x < p, next);
      },
      [](bool) { return true; });
}

Bigen<int, int> in_range(int lo, int hi) {
  return mk_aligned_g<int>(
      [lo, hi](Rng r) {
        auto [x, next] = r.uniform_int(lo, hi);
        return std::pair(static_cast<int>(x), next);
      },
      [lo, hi](int x) { return lo <= x && x <= hi; });
}

Bigen<Tree, Tree> leaf() {
  return mk_aligned_g<Tree>([](Rng r) { return std::pair(Tree::leaf(), r); },
                            [](const Tree& t) { return t.is_leaf(); });
}

Bigen<Tree, Tree> bst(int lo, int hi) {
  using G = Bigen<Tree, Tree>;
  if (lo > hi) return leaf();
  auto is_leaf = partial_total<Tree>([](const Tree& t) { return t.is_leaf(); });
  return and_then(comap(is_leaf, boolean(0.5)), [lo, hi](bool leaf_here) -> G {
    if (leaf_here) return G::pure(Tree::leaf());
    return and_then(comap(PartialFn<Tree, int>(node_value), in_range(lo, hi)), [lo, hi](int n) {
      return and_then(comap(PartialFn<Tree, Tree>(node_left), bst(lo, n - 1)), [hi, n](const Tree& l) {
        return and_then(comap(PartialFn<Tree, Tree>(node_right), bst(n + 1, hi)),
                    [l, n](const Tree& r) { return G::pure(Tree::node(l, n, r)); });
      });
    });
  });
}

}  // namespace bigens

bool check_bst(int lo, int hi, const Tree& t) {
  if (t.is_leaf()) return true;
  int n = t.label();
  return lo <= n && n <= hi && check_bst(lo, n - 1, t.left()) && check_bst(n + 1, hi, t.right());
}

std::vector<Tree> enumerate_bsts(int lo, int hi) {
  std::vector<Tree> out{Tree::leaf()};
  for (int n = lo; n <= hi; ++n) {
    auto lefts = enumerate_bsts(lo, n - 1);
    auto rights = enumerate_bsts(n + 1, hi);
    for (const auto& l : lefts)
      for (const auto& r : rights) out.push_back(Tree::node(l, n, r));
  }
  return out;
}

}  // namespace promonad
