#include "promonad/lens.hpp"

namespace promonad::lenses {

namespace {

std::optional<Value> lookup(const Key& k, const KvMap& m) {
  auto it = m.find(k);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

Label root_of(const Tree& t) {
  return t.is_node() ? Label(t.label()) : Label();
}

}  // namespace

Lens<KvMap, Value, Value> at_key(Key k) {
  return mk_lens<KvMap, Value, Value>(
      [k](const KvMap& m) { return lookup(k, m); },
      [k](const Value& v, const KvMap& m) -> std::optional<PutResult<KvMap, Value>> {
        KvMap updated = m;
        updated.insert_or_assign(k, v);
        SourcePredicate<KvMap> unchanged([k, v](const KvMap& m2) { return lookup(k, m2) == std::optional(v); });
        return PutResult<KvMap, Value>{v, std::move(updated), std::move(unchanged)};
      });
}

Lens<KvMap, std::vector<Value>, std::vector<Value>> at_keys(std::vector<Key> ks) {
  using Values = std::vector<Value>;
  using L = Lens<KvMap, Values, Values>;
  if (ks.empty()) return L::pure({});
  Key k = ks.front();
  std::vector<Key> rest(ks.begin() + 1, ks.end());
  return and_then(upon(at_key(k), safe_head<Values>()), [rest](const Value& x) {
    return and_then(upon(at_keys(rest), safe_tail<Values>()), [x](const Values& xs) {
      Values out{x};
      out.insert(out.end(), xs.begin(), xs.end());
      return L::pure(std::move(out));
    });
  });
}

Lens<Tree, Label, Label> root() {
  return mk_lens<Tree, Label, Label>(
      [](const Tree& t) { return std::optional<Label>(root_of(t)); },
      [](const Label& n, const Tree& t) -> std::optional<PutResult<Tree, Label>> {
        Tree updated;
        if (!n) {
          updated = Tree::leaf();
        } else if (t.is_leaf()) {
          updated = singleton(*n);
        } else {
          updated = Tree::node(t.left(), *n, t.right());
        }
        Label written = root_of(updated);
        SourcePredicate<Tree> same_root([written](const Tree& t2) { return root_of(t2) == written; });
        return PutResult<Tree, Label>{n, std::move(updated), std::move(same_root)};
      });
}

Lens<Tree, Tree, Tree> right_child() {
  return mk_lens<Tree, Tree, Tree>(
      [](const Tree& t) -> std::optional<Tree> {
        if (t.is_leaf()) return std::nullopt;
        return t.right();
      },
      [](const Tree& r, const Tree& t) -> std::optional<PutResult<Tree, Tree>> {
        if (t.is_leaf()) return std::nullopt;
        SourcePredicate<Tree> same_right([r](const Tree& t2) { return t2.is_node() && t2.right() == r; });
        return PutResult<Tree, Tree>{r, Tree::node(t.left(), t.label(), r), std::move(same_right)};
      });
}

Lens<Tree, std::vector<int>, std::vector<int>> spine() {
  using Spine = std::vector<int>;
  using L = Lens<Tree, Spine, Spine>;
  PartialFn<Spine, Label> head_label([](const Spine& xs) -> std::optional<Label> {
    return xs.empty() ? Label() : Label(xs.front());
  });
  return and_then(upon(root(), head_label), [](const Label& hd) -> L {
    if (!hd) return L::pure({});
    int n = *hd;
    return and_then(upon(compose(right_child(), spine()), safe_tail<Spine>()), [n](const Spine& tl) {
      Spine out{n};
      out.insert(out.end(), tl.begin(), tl.end());
      return L::pure(std::move(out));
    });
  });
}

}  // namespace promonad::lenses
