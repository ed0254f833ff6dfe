#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "promonad/kvmap.hpp"
#include "promonad/laws.hpp"
#include "promonad/lens.hpp"
#include "promonad/rng.hpp"
#include "promonad/sampling.hpp"

using namespace promonad;
using Values = std::vector<Value>;

namespace {

Tree t0() { return Tree::node(singleton(0), 1, singleton(2)); }

}  // namespace

TEST_CASE("mk_lens and lens_pure") {
  auto never = mk_lens<KvMap, int, int>([](const KvMap&) { return std::optional<int>(); },
                                        [](const int&, const KvMap&) { return std::optional<PutResult<KvMap, int>>(); });
  CHECK_FALSE(get(never, KvMap{}));
  auto five = lens_pure<KvMap, int, int>(5);
  KvMap m{{"a", "1"}};
  CHECK(get(five, m) == 5);
  auto r = put(five, 0, m);
  REQUIRE(r);
  CHECK(r->view == 5);
  CHECK(r->source == m);
  CHECK(r->guard(KvMap{}));
  CHECK(lens_purify(m, five)(1) == 5);
}

TEST_CASE("failure lift leaves the source alone") {
  KvMap m{{"a", "1"}};
  auto r = to_failure(std::optional<int>(3), m);
  REQUIRE(r);
  CHECK(r->view == 3);
  CHECK(r->source == m);
  CHECK(r->guard(KvMap{{"z", "z"}}));
  CHECK_FALSE(to_failure(std::optional<int>(), m));
}

TEST_CASE("at_key") {
  auto l = lenses::at_key("k");
  CHECK(get(l, KvMap{{"k", "v"}}) == Value("v"));
  CHECK_FALSE(get(l, KvMap{}));
  auto r = put(l, Value("w"), KvMap{{"k", "v"}});
  REQUIRE(r);
  CHECK(r->view == "w");
  CHECK(r->source == KvMap{{"k", "w"}});
  CHECK(r->guard(KvMap{{"k", "w"}}));
  CHECK_FALSE(r->guard(KvMap{{"k", "z"}}));
  CHECK(lens_purify(KvMap{{"q", "r"}}, l)(Value("v")) == Value("v"));
}

TEST_CASE("at_keys") {
  auto ab = lenses::at_keys({"a", "b"});
  auto r = put(ab, Values{"1", "2"}, KvMap{});
  REQUIRE(r);
  CHECK(r->view == Values{"1", "2"});
  CHECK(r->source == KvMap{{"a", "1"}, {"b", "2"}});
  CHECK(r->guard(r->source));
  CHECK_FALSE(put(ab, Values{"1"}, KvMap{}));

  auto a = put(lenses::at_keys({"a"}), Values{"1", "2"}, KvMap{});
  REQUIRE(a);
  CHECK(a->view == Values{"1"});
  CHECK(a->source == KvMap{{"a", "1"}});

  CHECK(get(ab, KvMap{{"a", "x"}, {"b", "y"}, {"c", "z"}}) == Values{"x", "y"});
  CHECK_FALSE(get(ab, KvMap{{"a", "x"}}));
  CHECK(lens_purify(KvMap{{"a", "0"}}, ab)(Values{"p", "q"}) == Values{"p", "q"});
}

TEST_CASE("root") {
  auto r = lenses::root();
  CHECK(get(r, Tree::leaf()) == std::optional<lenses::Label>(lenses::Label()));
  CHECK(get(r, t0()) == std::optional<lenses::Label>(lenses::Label(1)));
  CHECK(put(r, lenses::Label(), singleton(1))->source == Tree::leaf());
  CHECK(put(r, lenses::Label(5), Tree::leaf())->source == singleton(5));
  CHECK(put(r, lenses::Label(9), t0())->source == Tree::node(singleton(0), 9, singleton(2)));
}

TEST_CASE("right child") {
  auto r = lenses::right_child();
  auto a = singleton(3), b = singleton(4);
  CHECK(get(r, Tree::node(a, 1, b)) == b);
  CHECK_FALSE(get(r, Tree::leaf()));
  CHECK_FALSE(put(r, b, Tree::leaf()));
  CHECK(put(r, a, Tree::node(a, 1, b))->source == Tree::node(a, 1, a));
}

TEST_CASE("spine") {
  auto sp = lenses::spine();
  CHECK(get(sp, t0()) == std::vector<int>{1, 2});
  CHECK(get(sp, Tree::leaf()) == std::vector<int>{});
  auto r = put(sp, std::vector<int>{3, 4, 5}, t0());
  REQUIRE(r);
  CHECK(r->view == std::vector<int>{3, 4, 5});
  CHECK(to_text(r->source) == "(N (N L 0 L) 3 (N L 4 (N L 5 L)))");
  CHECK(r->guard(r->source));
  auto shrink = put(sp, std::vector<int>{}, t0());
  REQUIRE(shrink);
  CHECK(shrink->source == Tree::leaf());
}

TEST_CASE("sequential composition") {
  auto c = lenses::compose(lenses::right_child(), lenses::spine());
  CHECK(get(c, t0()) == std::vector<int>{2});
  CHECK_FALSE(get(c, Tree::leaf()));
  auto r = put(c, std::vector<int>{9}, t0());
  REQUIRE(r);
  CHECK(r->view == std::vector<int>{9});
  CHECK(r->source == Tree::node(singleton(0), 1, singleton(9)));
  CHECK_FALSE(put(c, std::vector<int>{9}, Tree::leaf()));
}

TEST_CASE("lens laws on random cases") {
  RngStream rng(3);
  for (int i = 0; i < 300; ++i) {
    auto m = sampling::kvmap(rng, 5);
    auto k = sampling::key(rng);
    CHECK(put_get(lenses::at_key(k), sampling::value(rng), m));
    CHECK(get_put(lenses::at_key(k), m));
    auto ks = sampling::keys(rng, 4);
    CHECK(put_get(lenses::at_keys(ks), sampling::values(rng, ks.size()), m));
    CHECK(get_put(lenses::at_keys(ks), m));
    auto t = sampling::tree(rng, 4, 0, 9);
    CHECK(get_put(lenses::spine(), t));
    CHECK(get_put(lenses::root(), t));
    CHECK(put_get(lenses::root(), lenses::Label(static_cast<int>(rng.between(0, 9))), t));
  }
}

TEST_CASE("law harness on lens subjects") {
  LensOps<KvMap> ops{{KvMap{}, KvMap{{"k", "v"}}, KvMap{{"a", "1"}, {"b", "2"}}}};
  std::vector<Value> values{"", "v"};
  std::vector<Values> lists{{}, {"1"}, {"1", "2"}};
  CHECK(law_comap_identity(ops, lenses::at_key("k"), values));
  CHECK(law_comap_compose(ops, safe_head<Values>(), partial_identity<Value>(), lenses::at_key("k"), lists));
  CHECK(law_promonad(ops, safe_tail<Values>(), lenses::at_keys({}), [](const Values&) { return lenses::at_keys({"c"}); },
                     Values{}, lists));
  auto proj = [s = KvMap{{"k", "v"}}](const auto& l) { return lens_purify(s, l); };
  CHECK(law_purify_homomorphism(ops, proj, safe_head<Values>(), lenses::at_key("k"),
                                [](const Value&) { return lenses::at_key("j"); }, Value("x"), lists, values));
}

TEST_CASE("kv file format") {
  CHECK(parse_kvmap("a=1\nb=2\n") == KvMap{{"a", "1"}, {"b", "2"}});
  CHECK(parse_kvmap("\na=\n\n") == KvMap{{"a", ""}});
  CHECK_FALSE(parse_kvmap("a"));
  CHECK_FALSE(parse_kvmap("a=1=2"));
  CHECK_FALSE(parse_kvmap("a=1\na=2"));
  CHECK(format_kvmap(KvMap{{"a", "1"}, {"b", "2"}}) == std::string("a=1\nb=2\n"));
  CHECK_FALSE(format_kvmap(KvMap{{"a", "x=y"}}));
}
