#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "promonad/biparser.hpp"
#include "promonad/laws.hpp"
#include "promonad/text.hpp"
#include "promonad/tree.hpp"

using namespace promonad;

TEST_CASE("partial identity") {
  CHECK(partial_identity<int>()(5) == 5);
  CHECK(partial_identity<std::string>()("") == std::string());
  auto t0 = Tree::node(singleton(0), 1, singleton(2));
  CHECK(partial_identity<Tree>()(t0) == t0);
}

TEST_CASE("partial composition") {
  PartialFn<int, int> inc([](const int& x) { return std::optional(x + 1); });
  PartialFn<int, int> dbl([](const int& x) { return std::optional(2 * x); });
  CHECK(partial_compose(inc, dbl)(3) == 8);
  CHECK_FALSE(partial_compose(partial_fail<int, int>(), dbl)(3));

  using Nested = std::vector<std::vector<int>>;
  auto twice = partial_compose(safe_head<Nested>(), safe_head<std::vector<int>>());
  CHECK(twice(Nested{{7}, {8}}) == 7);
  CHECK_FALSE(twice(Nested{{}, {8}}));
}

TEST_CASE("partial monad operations") {
  CHECK(partial_pure<int, int>(9)(123) == 9);
  auto p = partial_bind(partial_identity<int>(), [](int x) { return partial_pure<int, int>(x * 10); });
  CHECK(p(4) == 40);
  auto c = partial_comap(safe_head<std::vector<int>>(), partial_identity<int>());
  CHECK(c(std::vector<int>{3, 4}) == 3);
  CHECK_FALSE(c(std::vector<int>{}));
  CHECK(safe_tail<std::vector<int>>()(std::vector<int>{1, 2}) == std::vector<int>{2});
  CHECK_FALSE(safe_tail<std::vector<int>>()(std::vector<int>{}));
}

TEST_CASE("utf-8 decoding is strict") {
  CHECK(from_utf8("a\xC3\xA9") == Text{U'a', U'é'});
  CHECK_FALSE(from_utf8("\xC0\x80"));          // overlong
  CHECK_FALSE(from_utf8("\xED\xA0\x80"));      // surrogate
  CHECK_FALSE(from_utf8("\xF4\x90\x80\x80"));  // above U+10FFFF
  CHECK_FALSE(from_utf8("\xE2\x82"));          // truncated
  CHECK(to_utf8(*from_utf8("\xF0\x9F\x98\x80 x")) == "\xF0\x9F\x98\x80 x");
}

TEST_CASE("tree text format") {
  auto t0 = Tree::node(singleton(0), 1, singleton(2));
  CHECK(to_text(t0) == "(N (N L 0 L) 1 (N L 2 L))");
  CHECK(parse_tree("(N (N L 0 L) 1 (N L 2 L))") == t0);
  CHECK(parse_tree("(N L -3 L)") == singleton(-3));
  CHECK_FALSE(parse_tree("(N L 1 L) "));
  CHECK_FALSE(parse_tree("(N  L 1 L)"));
  CHECK_FALSE(parse_tree("(N L x L)"));
  CHECK(t0.size() == 3);
}

TEST_CASE("verdicts") {
  CHECK(static_cast<bool>(all_of({Verdict::pass(), Verdict::pass()})));
  auto v = all_of({Verdict::pass(), Verdict::fail("first"), Verdict::fail("second")});
  CHECK_FALSE(static_cast<bool>(v));
  CHECK(v.counterexample == "first");
}

TEST_CASE("law harness on small biparser cases") {
  BiparserOps ops{{text_of(""), text_of("ab"), text_of("x")}};
  std::vector<Text> texts{text_of(""), text_of("abc")};
  std::vector<char32_t> chars{U'a', U'z'};
  auto chr = biparsers::character();
  auto head = safe_head<Text>();

  CHECK(law_comap_identity(ops, chr, chars));
  CHECK(law_comap_compose(ops, head, partial_identity<char32_t>(), chr, texts));
  CHECK(law_comap_compose(ops, partial_fail<Text, Text>(), head, chr, texts));
  CHECK(law_monad(ops, chr, [](char32_t c) { return Biparser<char32_t, char32_t>::pure(c); },
                  [](char32_t) { return biparsers::character(); }, U'a', chars));
  auto k_pure = [](int x) { return Biparser<int, int>::pure(x); };
  CHECK(law_monad(ops, Biparser<int, int>::pure(1), k_pure, k_pure, 1, std::vector<int>{0, 1}));
  CHECK(law_promonad(ops, head, chr, [](char32_t) { return biparsers::character(); }, U'q', texts));
  CHECK(law_promonad(ops, partial_identity<char32_t>(), chr, [](char32_t) { return biparsers::character(); }, U'q',
                     chars));
}

TEST_CASE("comap of return fails where the partial function does") {
  // The return clause of the promonad law only holds on the domain of f.
  auto lhs = comap(safe_head<Text>(), Biparser<char32_t, char32_t>::pure(U'q'));
  auto rhs = Biparser<Text, char32_t>::pure(U'q');
  CHECK(print(lhs, text_of("a")) == print(rhs, text_of("a")));
  CHECK_FALSE(print(lhs, Text()));
  CHECK(print(rhs, Text()));
}

namespace {

// A "comap" whose printer always fails, whatever f does.
struct Broken : BiparserOps {
  template <class U, class U2, class V>
  static Biparser<U, V> comap(PartialFn<U, U2>, const Biparser<U2, V>& p) {
    return Biparser<U, V>([p](TextView s) { return p.run_forward(s); },
                          [](const U&) -> Printed<V> { return std::nullopt; });
  }
};

}  // namespace

TEST_CASE("harness reports a broken law") {
  Broken ops{{{text_of("a")}}};
  auto v = law_comap_identity(ops, biparsers::character(), std::vector<char32_t>{U'a'});
  CHECK_FALSE(static_cast<bool>(v));
  CHECK(v.counterexample.find("comap identity") != std::string::npos);
}

TEST_CASE("injective arrows") {
  BiparserOps ops{{text_of(""), text_of("0 ")}};
  std::vector<Text> previews{text_of(""), text_of("0"), text_of("00")};
  auto identity = [](const Text& x) { return Biparser<Text, Text>::pure(x); };
  CHECK(check_injective_arrow(ops, identity, [](const Text& y) { return y; }, previews, previews));

  auto constant = [](const Text&) { return Biparser<Text, int>::pure(0); };
  std::vector<Text> two{text_of("a"), text_of("b")};
  CHECK_FALSE(check_injective_arrow(ops, constant, [](int) { return text_of("a"); }, two, previews));

  auto read = [](const Text& ds) {
    int v = 0;
    for (char32_t c : ds) v = v * 10 + static_cast<int>(c - U'0');
    return Biparser<Text, int>::pure(v);
  };
  std::vector<Text> zeros{text_of("0"), text_of("00")};
  CHECK_FALSE(check_injective_arrow(ops, read, [](int) { return text_of("0"); }, zeros, previews));
  CHECK_FALSE(check_injective_arrow(ops, read, [](int) { return text_of("00"); }, zeros, previews));
}
