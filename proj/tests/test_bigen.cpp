#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <set>

#include "promonad/bigen.hpp"
#include "promonad/sampling.hpp"

using namespace promonad;

namespace {

Tree t0() { return Tree::node(singleton(0), 1, singleton(2)); }

}  // namespace

TEST_CASE("rng is deterministic") {
  Rng a(7), b(7);
  for (int i = 0; i < 10; ++i) {
    auto [x, a2] = a.next();
    auto [y, b2] = b.next();
    CHECK(x == y);
    a = a2;
    b = b2;
  }
  auto [r, _] = Rng(1).uniform_real();
  CHECK(r >= 0.0);
  CHECK(r < 1.0);
}

TEST_CASE("aligned constructors") {
  auto leafy = mk_aligned_g<Tree>([](Rng r) { return std::pair(Tree::leaf(), r); },
                                  [](const Tree& t) { return t.is_leaf(); });
  CHECK(check(leafy, Tree::leaf()) == Tree::leaf());
  auto none = mk_aligned_g<int>([](Rng r) { return std::pair(0, r); }, [](const int&) { return false; });
  CHECK_FALSE(check(none, 3));
  auto trivial = mk_g<int, int>([](Rng r) { return std::pair(1, r); }, [](const int& u) { return std::optional(u); });
  CHECK(check(trivial, 12) == 12);
}

TEST_CASE("pure, bind, comap") {
  Rng r(99);
  auto [v, r2] = generate(g_pure<int, int>(7), r);
  CHECK(v == 7);
  CHECK(r2 == r);
  CHECK_FALSE(check(comap(safe_head<std::vector<int>>(), g_pure<int, int>(1)), std::vector<int>{}));
  auto pair = and_then(bigens::in_range(0, 9), [](int x) { return bigens::in_range(x, x); });
  auto [w, _] = generate(pair, r);
  CHECK(w >= 0);
  CHECK(w <= 9);
}

TEST_CASE("boolean") {
  CHECK(to_predicate(bigens::boolean(0.5), false));
  Rng r(123);
  for (int i = 0; i < 100; ++i) {
    auto [t, r1] = generate(bigens::boolean(1.0), r);
    auto [f, r2] = generate(bigens::boolean(0.0), r1);
    CHECK(t);
    CHECK_FALSE(f);
    r = r2;
  }
}

TEST_CASE("in_range") {
  auto g = bigens::in_range(0, 10);
  CHECK(to_predicate(g, 5));
  CHECK_FALSE(to_predicate(g, 11));
  CHECK(generate(bigens::in_range(3, 3), Rng(5)).first == 3);

  std::array<int, 4> counts{};
  Rng r(42);
  for (int i = 0; i < 10000; ++i) {
    auto [v, next] = generate(bigens::in_range(0, 3), r);
    r = next;
    REQUIRE(v >= 0);
    REQUIRE(v <= 3);
    ++counts[static_cast<std::size_t>(v)];
  }
  for (int c : counts) {
    CHECK(c >= 2200);
    CHECK(c <= 2800);
  }
}

TEST_CASE("leaf") {
  Rng r(8);
  auto [t, r2] = generate(bigens::leaf(), r);
  CHECK(t == Tree::leaf());
  CHECK(r2 == r);
  CHECK(check(bigens::leaf(), Tree::leaf()) == Tree::leaf());
  CHECK_FALSE(check(bigens::leaf(), t0()));
  CHECK_FALSE(check(bigens::leaf(), singleton(1)));
}

TEST_CASE("bst") {
  CHECK(to_predicate(bigens::bst(0, 20), t0()));
  CHECK_FALSE(to_predicate(bigens::bst(0, 20), Tree::node(Tree::leaf(), 5, singleton(3))));
  CHECK(generate(bigens::bst(5, 4), Rng(1)).first == Tree::leaf());
  Rng r(2024);
  for (int i = 0; i < 1000; ++i) {
    auto [t, next] = generate(bigens::bst(0, 20), r);
    r = next;
    REQUIRE(check_bst(0, 20, t));
    CHECK(check(bigens::bst(0, 20), t) == t);
  }
}

TEST_CASE("check_bst") {
  CHECK(check_bst(0, 20, t0()));
  CHECK(check_bst(0, 20, Tree::leaf()));
  CHECK_FALSE(check_bst(0, 0, singleton(1)));
  CHECK_FALSE(check_bst(0, 20, Tree::node(singleton(1), 1, Tree::leaf())));
}

TEST_CASE("enumerate_bsts") {
  CHECK(enumerate_bsts(1, 0).size() == 1);
  CHECK(enumerate_bsts(0, 0).size() == 2);
  auto all = enumerate_bsts(0, 3);
  CHECK(all.size() == 1 + 4 + 12 + 20 + 14);
  std::set<std::string> distinct;
  for (const auto& t : all) {
    CHECK(check_bst(0, 3, t));
    distinct.insert(to_text(t));
  }
  CHECK(distinct.size() == all.size());
}

TEST_CASE("predicate agrees with the direct check") {
  auto g = bigens::bst(0, 3);
  for (const auto& t : enumerate_bsts(0, 3)) CHECK(to_predicate(g, t));
  RngStream rng(17);
  for (int i = 0; i < 1000; ++i) {
    auto t = sampling::tree(rng, 4, -1, 4);
    CHECK(to_predicate(g, t) == check_bst(0, 3, t));
  }
}

TEST_CASE("generation is deterministic per seed") {
  auto g = bigens::bst(0, 20);
  for (std::uint64_t s = 0; s < 50; ++s) CHECK(generate(g, Rng(s)).first == generate(g, Rng(s)).first);
}
