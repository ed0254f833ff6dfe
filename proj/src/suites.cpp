#include "promonad/suites.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

#include "promonad/bigen.hpp"
#include "promonad/laws.hpp"
#include "promonad/lens.hpp"
#include "promonad/sampling.hpp"

namespace promonad {

namespace {

using biparsers::Int;
using Values = std::vector<Value>;
using Spine = std::vector<int>;

// One random case; returns a counterexample description on failure.
using Case = std::function<std::optional<std::string>(RngStream&)>;

std::uint64_t suite_seed(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : name) h = (h ^ c) * 0x100000001b3ULL;
  return Rng(seed ^ h).next().first;
}

SuiteResult property(const std::string& name, std::size_t cases, std::uint64_t seed, const Case& body) {
  SuiteResult result{name, cases, true, {}};
  RngStream rng(suite_seed(seed, name));
  for (std::size_t i = 0; i < cases; ++i) {
    if (auto failure = body(rng)) {
      result.passed = false;
      result.counterexample = "case " + std::to_string(i) + ": " + *failure;
      break;
    }
  }
  return result;
}

// Runs a law bundle against probe sets drawn from the suite's seed.
SuiteResult laws(const std::string& name, const SuiteConfig& config,
                 const std::function<Verdict(RngStream&, std::size_t)>& body) {
  SuiteResult result{name, config.cases, true, {}};
  if (config.cases == 0) return result;
  RngStream rng(suite_seed(config.seed, name));
  auto random_probes = std::min<std::size_t>(config.cases, 24);
  auto verdict = body(rng, random_probes);
  result.passed = verdict.ok;
  result.counterexample = verdict.counterexample;
  return result;
}

std::optional<std::string> expect(bool ok, const std::function<std::string()>& why) {
  if (ok) return std::nullopt;
  return why();
}

// ---------------------------------------------------------------- core

SuiteResult partial_compose_associativity(const SuiteConfig& config) {
  // A small family of partial functions on int, indexed by three parameters.
  auto member = [](RngStream& rng) {
    auto modulus = rng.between(2, 5);
    auto hole = rng.between(0, modulus - 1);
    auto scale = rng.between(-3, 3);
    auto shift = rng.between(-5, 5);
    return PartialFn<int, int>([=](const int& x) -> std::optional<int> {
      if (((x % modulus) + modulus) % modulus == hole) return std::nullopt;
      return static_cast<int>(scale * x + shift);
    });
  };
  return property("core: partial composition is associative", config.cases, config.seed,
                  [&](RngStream& rng) -> std::optional<std::string> {
                    auto f = member(rng), g = member(rng), h = member(rng);
                    auto left = partial_compose(partial_compose(f, g), h);
                    auto right = partial_compose(f, partial_compose(g, h));
                    int x = static_cast<int>(rng.between(-50, 50));
                    return expect(left(x) == right(x), [&] {
                      return "at " + describe(x) + ": " + describe(left(x)) + " vs " + describe(right(x));
                    });
                  });
}

// ---------------------------------------------------------------- biparser

std::vector<Text> biparser_probe_texts(RngStream& rng, std::size_t n) {
  std::vector<Text> texts;
  for (const char* s : {"", "a", "abc", " x", "0 ", "0 rest", "12 x", "007 y", "3 abc", "5 ab", "6 lambda calculus",
                        "4a ", "1  ", "2 \xC3\xA9\xE2\x82\xAC!"})
    texts.push_back(*from_utf8(s));
  for (std::size_t i = 0; i < n; ++i) {
    texts.push_back(oracle_print_string(sampling::text(rng, 8)) + sampling::text(rng, 4));
    texts.push_back(sampling::text(rng, 10));
  }
  return texts;
}

std::vector<Text> biparser_probe_previews(RngStream& rng, std::size_t n) {
  std::vector<Text> us;
  for (const char* s : {"", "a", "SKI", "12 ", "4a ", "0 ", "lambda"}) us.push_back(text_of(s));
  for (std::size_t i = 0; i < n; ++i) us.push_back(sampling::text(rng, 8));
  return us;
}

SuiteResult biparser_laws(const SuiteConfig& config) {
  return laws("biparser: monadic profunctor laws", config, [](RngStream& rng, std::size_t n) {
    BiparserOps ops{biparser_probe_texts(rng, n)};
    auto texts = biparser_probe_previews(rng, n);
    std::vector<char32_t> chars{U'a', U'0', U' ', U'é'};
    for (std::size_t i = 0; i < n; ++i) chars.push_back(sampling::scalar(rng));
    std::vector<Int> ints{0, 1, 7, 42, 1000, -1};
    for (std::size_t i = 0; i < n; ++i) ints.push_back(rng.between(-5, 100000));

    auto chr = biparsers::character();
    auto ds = biparsers::digits();
    auto in = biparsers::integer();
    auto str = biparsers::string();
    auto head = safe_head<Text>();
    auto length = partial_total<Text>([](const Text& s) { return static_cast<Int>(s.size()); });
    PartialFn<Int, Int> nonneg([](const Int& x) -> std::optional<Int> {
      if (x < 0) return std::nullopt;
      return x;
    });
    auto k_pure = [](char32_t c) { return Biparser<char32_t, char32_t>::pure(c); };
    auto k_char = [](char32_t) { return biparsers::character(); };
    auto k_text_char = [](const Text&) { return upon(biparsers::character(), safe_head<Text>()); };
    auto proj = [](const auto& p) { return purify(p); };

    return all_of({
        law_comap_identity(ops, chr, chars),
        law_comap_identity(ops, ds, texts),
        law_comap_identity(ops, in, ints),
        law_comap_identity(ops, str, texts),
        law_comap_compose(ops, head, partial_identity<char32_t>(), chr, texts),
        law_comap_compose(ops, partial_fail<Text, Text>(), head, chr, texts),
        law_comap_compose(ops, length, nonneg, in, texts),
        law_monad(ops, chr, k_pure, k_char, U'a', chars),
        law_monad(ops, in, [](Int x) { return Biparser<Int, Int>::pure(x + 1); },
                  [](Int) { return biparsers::integer(); }, Int{7}, ints),
        law_monad(ops, str, [](const Text& s) { return Biparser<Text, Int>::pure(static_cast<Int>(s.size())); },
                  [](Int m) { return upon(biparsers::integer(), partial_pure<Text, Int>(m)); }, text_of("abc"), texts),
        law_promonad(ops, head, chr, k_char, U'q', texts),
        law_promonad(ops, length, in, [](Int x) { return Biparser<Int, Int>::pure(2 * x); }, Int{3}, texts),
        law_promonad(ops, partial_identity<Text>(), str, [](const Text&) { return biparsers::string(); },
                     text_of("x"), texts),
        law_purify_homomorphism(ops, proj, head, chr, k_char, U'z', texts, chars),
        law_purify_homomorphism(ops, proj, length, in, [](Int x) { return Biparser<Int, Int>::pure(x + 1); },
                                Int{9}, texts, ints),
        law_purify_homomorphism(ops, proj, partial_identity<Text>(), str, k_text_char, text_of("x"), texts, texts),
    });
  });
}


SuiteResult injective_arrows(const SuiteConfig& config) {
  return laws("core: injective arrows", config, [](RngStream& rng, std::size_t n) -> Verdict {
    BiparserOps ops{biparser_probe_texts(rng, n)};
    auto previews = biparser_probe_previews(rng, n);

    // Decimal reading is not injective: "0" and "00" read to the same integer.
    auto read_decimal = [](const Text& ds) {
      Int value = 0;
      for (char32_t c : ds) value = value * 10 + (c - U'0');
      return Biparser<Text, Int>::pure(value);
    };
    std::vector<Text> zeros{text_of("0"), text_of("00")};
    for (auto inverse : std::vector<std::function<Text(Int)>>{
             [](Int x) { return show_int(x); }, [](Int) { return text_of("0"); }, [](Int) { return text_of("00"); }}) {
      if (check_injective_arrow(ops, read_decimal, inverse, zeros, previews))
        return Verdict::fail("read-decimal accepted as injective on {\"0\", \"00\"}");
    }

    std::vector<Int> counts{0, 1, 2, 3, 5};
    std::vector<Text> samples{text_of("a"), text_of("b")};
    auto constant = [](const Text&) { return Biparser<Text, Int>::pure(0); };
    if (check_injective_arrow(ops, constant, [](Int) { return text_of("a"); }, samples, previews))
      return Verdict::fail("constant arrow accepted as injective");

    return all_of({
        check_injective_arrow(
            ops, [](const Text& x) { return Biparser<Text, Text>::pure(x); }, [](const Text& y) { return y; },
            previews, previews),
        check_injective_arrow(
            ops, [](Int m) { return biparsers::replicate_as<Text, Text>(m, biparsers::character()); },
            [](const Text& y) { return static_cast<Int>(y.size()); }, counts, previews),
    });
  });
}

template <class U>
std::optional<std::string> backward_case(const Biparser<U, U>& p, const U& x, const Text& suffix) {
  return expect(backward_round_trip(p, x, suffix), [&] {
    return "x = " + describe(x) + ", suffix = " + describe(suffix) + ", printed " + describe(print(p, x)) +
           ", reparsed " + describe(print(p, x) ? parse(p, print(p, x)->second + suffix) : std::nullopt);
  });
}

template <class U, class V>
std::optional<std::string> weak_backward_case(const Biparser<U, V>& p, const U& x, const Text& suffix) {
  return expect(weak_backward_round_trip(p, x, suffix), [&] {
    return "x = " + describe(x) + ", suffix = " + describe(suffix) + ", printed " + describe(print(p, x));
  });
}

template <class U, class V>
std::optional<std::string> weak_forward_case(const Biparser<U, V>& p, const U& x, const Text& s01) {
  return expect(weak_forward_round_trip(p, x, s01), [&] {
    return "x = " + describe(x) + ", s01 = " + describe(s01) + ", parsed " + describe(parse(p, s01)) + ", printed " +
           describe(print(p, x));
  });
}

Int sample_int(RngStream& rng) {
  switch (rng.between(0, 2)) {
    case 0:
      return rng.between(0, 9);
    case 1:
      return rng.between(0, 100000);
    default:
      return rng.between(0, std::numeric_limits<Int>::max());
  }
}

std::vector<char32_t> sample_chars(RngStream& rng, std::size_t max_len) {
  auto t = sampling::text(rng, max_len);
  return {t.begin(), t.end()};
}

std::vector<SuiteResult> biparser_round_trips(const SuiteConfig& config, const SuiteFixtures& fixtures) {
  const auto n = config.cases;
  const auto seed = config.seed;
  const auto& chr = fixtures.character;
  auto ds = biparsers::digits();
  auto in = biparsers::integer();
  auto str = biparsers::string();
  std::vector<SuiteResult> out;

  out.push_back(property("biparser: backward round tripping (char)", n, seed, [&](RngStream& rng) {
    return backward_case(chr, sampling::scalar(rng), sampling::text(rng, 6));
  }));
  out.push_back(property("biparser: backward round tripping (int)", n, seed, [&](RngStream& rng) {
    return backward_case(in, sample_int(rng), sampling::text(rng, 6));
  }));
  out.push_back(property("biparser: backward round tripping (string)", n, seed, [&](RngStream& rng) {
    return backward_case(str, sampling::text(rng, 100), sampling::text(rng, 10));
  }));

  out.push_back(property("biparser: weak backward round tripping", n, seed, [&](RngStream& rng) {
    auto suffix = sampling::text(rng, 6);
    Text pre = rng.chance(0.5) ? sampling::digit_run(rng, 6, false) + sampling::text(rng, 3) : sampling::text(rng, 8);
    auto count = rng.between(0, 10);
    if (auto f = weak_backward_case(chr, sampling::scalar(rng), suffix)) return f;
    if (auto f = weak_backward_case(ds, pre, suffix)) return f;
    if (auto f = weak_backward_case(in, rng.between(-10, 100000), suffix)) return f;
    if (auto f = weak_backward_case(biparsers::replicate(count, chr), sample_chars(rng, 12), suffix)) return f;
    if (auto f = weak_backward_case(str, sampling::text(rng, 100), suffix)) return f;
    if (auto f = weak_backward_case(upon(chr, safe_head<Text>()), pre, suffix)) return f;
    return weak_backward_case(upon(in, partial_total<Text>([](const Text& s) { return static_cast<Int>(s.size()); })),
                              pre, suffix);
  }));

  out.push_back(property("biparser: weak forward round tripping", n, seed, [&](RngStream& rng) {
    auto suffix = sampling::text(rng, 6);
    // Half the time the pre-view is what the parser produced, so the premise holds.
    auto aligned = rng.chance(0.5);

    Text s_char = sampling::text(rng, 4);
    auto c = parse(chr, s_char);
    if (auto f = weak_forward_case(chr, aligned && c ? c->first : sampling::scalar(rng), s_char)) return f;

    Text s_digits = sampling::digit_run(rng, 6, false) + suffix;
    auto d = parse(ds, s_digits);
    if (auto f = weak_forward_case(ds, aligned && d ? d->first : sampling::digit_run(rng, 3, false), s_digits))
      return f;

    Text s_int = sampling::digit_run(rng, 6, true) + suffix;
    auto i = parse(in, s_int);
    if (auto f = weak_forward_case(in, aligned && i ? i->first : rng.between(0, 1000), s_int)) return f;

    auto count = rng.between(0, 10);
    auto rep = biparsers::replicate(count, chr);
    Text s_rep = sampling::text(rng, 12);
    auto r = parse(rep, s_rep);
    if (auto f = weak_forward_case(rep, aligned && r ? r->first : sample_chars(rng, 12), s_rep)) return f;

    Text s_str = rng.chance(0.8) ? oracle_print_string(sampling::text(rng, 20)) + suffix : sampling::text(rng, 10);
    auto p = parse(str, s_str);
    return weak_forward_case(str, aligned && p ? p->first : sampling::text(rng, 20), s_str);
  }));

  out.push_back(property("biparser: forward round tripping (char)", n, seed, [&](RngStream& rng) {
    Text s(1, sampling::scalar(rng));
    return expect(forward_round_trip(chr, s), [&] { return "s = " + describe(s); });
  }));
  out.push_back(property("biparser: forward round tripping (string, canonical)", n, seed, [&](RngStream& rng) {
    Text s = oracle_print_string(sampling::text(rng, 100));
    return expect(forward_round_trip(str, s), [&] { return "s = " + describe(s); });
  }));

  out.push_back(property("biparser: identity projection of string", n, seed, [&](RngStream& rng) {
    auto x = sampling::text(rng, 100);
    auto y = purify(str)(x);
    return expect(y == std::optional(x), [&] { return "x = " + describe(x) + ", purified " + describe(y); });
  }));

  out.push_back(property("biparser: agrees with standalone parser/printer", n, seed, [&](RngStream& rng) {
    auto x = sampling::text(rng, 100);
    auto printed = print(str, x);
    if (!printed || printed->second != oracle_print_string(x)) return std::optional<std::string>("print " + describe(x));
    Text s;
    switch (rng.between(0, 2)) {
      case 0:
        s = oracle_print_string(x) + sampling::text(rng, 10);
        break;
      case 1:
        s = oracle_print_string(x).substr(0, static_cast<std::size_t>(rng.between(0, 8)));
        break;
      default:
        s = sampling::text(rng, 12);
    }
    auto a = parse(str, s);
    auto b = oracle_parse_string(s);
    return expect(a == b, [&] { return "parse " + describe(s) + ": " + describe(a) + " vs " + describe(b); });
  }));

  out.push_back(property("biparser: loop combinators match composed definitions", n, seed, [&](RngStream& rng) {
    auto count = rng.between(0, 6);
    auto fast = biparsers::replicate(count, chr);
    auto slow = biparsers::replicate_composed(count, chr);
    auto s = sampling::text(rng, 8);
    auto us = sample_chars(rng, 8);
    if (parse(fast, s) != parse(slow, s) || print(fast, us) != print(slow, us))
      return std::optional<std::string>("replicate " + std::to_string(count) + " on " + describe(s) + " / " +
                                        describe(us));
    Text d = rng.chance(0.6) ? sampling::digit_run(rng, 5, false) + sampling::text(rng, 3) : sampling::text(rng, 5);
    auto composed = biparsers::digits_composed();
    return expect(parse(ds, d) == parse(composed, d) && print(ds, d) == print(composed, d),
                  [&] { return "digits on " + describe(d); });
  }));

  return out;
}

// ---------------------------------------------------------------- lens

Tree t0() { return Tree::node(singleton(0), 1, singleton(2)); }

std::vector<KvMap> kv_probe_sources(RngStream& rng, std::size_t n) {
  std::vector<KvMap> sources{{}, {{"k", "v"}}, {{"a", "1"}, {"b", "2"}}, {{"a", "1"}, {"k", "x"}, {"j", "y"}}};
  for (std::size_t i = 0; i < n / 3; ++i) sources.push_back(sampling::kvmap(rng, 4));
  return sources;
}

std::vector<Tree> tree_probe_sources(RngStream& rng, std::size_t n) {
  std::vector<Tree> sources{Tree::leaf(), singleton(5), t0()};
  for (std::size_t i = 0; i < n / 3; ++i) sources.push_back(sampling::tree(rng, 3, 0, 9));
  return sources;
}

SuiteResult lens_laws(const SuiteConfig& config) {
  return laws("lens: monadic profunctor laws", config, [](RngStream& rng, std::size_t n) {
    LensOps<KvMap> kv{kv_probe_sources(rng, n)};
    LensOps<Tree> trees{tree_probe_sources(rng, n)};

    Values values{"", "v", "w"};
    std::vector<Values> lists{{}, {"1"}, {"1", "2"}, {"1", "2", "3"}};
    for (std::size_t i = 0; i < n / 3; ++i) lists.push_back(sampling::values(rng, static_cast<std::size_t>(rng.between(0, 3))));
    std::vector<std::vector<Values>> nested{{}, {{}}, {{"1"}}, {{"1", "2"}, {"3"}}};
    std::vector<lenses::Label> labels{std::nullopt, 0, 3};
    std::vector<Spine> spines{{}, {1}, {3, 4, 5}, {1, 2}};
    for (std::size_t i = 0; i < n / 3; ++i) {
      Spine sp;
      for (auto k = rng.between(0, 4); k > 0; --k) sp.push_back(static_cast<int>(rng.between(0, 9)));
      spines.push_back(sp);
    }

    using KvL = Lens<KvMap, Value, Value>;
    using KvLs = Lens<KvMap, Values, Values>;
    auto at_b = [](const Value&) { return lenses::at_key("b"); };
    auto bang = [](const Value& v) { return KvL::pure(v + "!"); };

    std::vector<Verdict> verdicts{
        law_comap_identity(kv, lenses::at_key("k"), values),
        law_comap_identity(kv, lenses::at_keys({"a", "b"}), lists),
        law_comap_compose(kv, safe_head<std::vector<Values>>(), safe_head<Values>(), lenses::at_key("k"), nested),
        law_comap_compose(kv, partial_identity<Values>(), safe_tail<Values>(), lenses::at_keys({"a"}), lists),
        law_monad(kv, lenses::at_key("a"), at_b, bang, Value("x"), values),
        law_monad(kv, lenses::at_keys({"a", "b"}), [](const Values&) { return lenses::at_keys({"c"}); },
                  [](const Values& vs) { return KvLs::pure(vs); }, Values{"q"}, lists),
        law_promonad(kv, safe_tail<Values>(), lenses::at_keys({}), [](const Values&) { return lenses::at_keys({"c"}); },
                     Values{}, lists),
        law_promonad(kv, safe_head<Values>(), lenses::at_key("a"), at_b, Value("x"), lists),
        law_comap_identity(trees, lenses::root(), labels),
        law_comap_identity(trees, lenses::spine(), spines),
        law_monad(trees, lenses::root(), [](const lenses::Label& l) { return Lens<Tree, lenses::Label, lenses::Label>::pure(l); },
                  [](const lenses::Label&) { return lenses::root(); }, lenses::Label(3), labels),
        law_promonad(trees, safe_tail<Spine>(), lenses::spine(),
                     [](const Spine& xs) { return Lens<Tree, Spine, Spine>::pure(xs); }, Spine{7}, spines),
    };
    for (const auto& s : kv.sources) {
      auto proj = [s](const auto& l) { return lens_purify(s, l); };
      verdicts.push_back(law_purify_homomorphism(kv, proj, safe_head<Values>(), lenses::at_key("k"),
                                                 [](const Value&) { return lenses::at_key("j"); }, Value("x0"), lists,
                                                 values));
      verdicts.push_back(law_purify_homomorphism(kv, proj, safe_tail<Values>(), lenses::at_keys({"a", "b"}),
                                                 [](const Values&) { return lenses::at_keys({"c"}); }, Values{"x0"},
                                                 lists, lists));
    }
    for (const auto& v : verdicts)
      if (!v) return v;
    return Verdict::pass();
  });
}

template <class S, class V>
std::optional<std::string> put_get_case(const Lens<S, V, V>& l, const V& x, const S& s) {
  return expect(put_get(l, x, s), [&] {
    auto r = put(l, x, s);
    return "x = " + describe(x) + ", s = " + describe(s) + ", put gave " + (r ? describe(r->source) : "none") +
           ", get after " + (r ? describe(get(l, r->source)) : "-");
  });
}

template <class S, class V>
std::optional<std::string> get_put_case(const Lens<S, V, V>& l, const S& s) {
  return expect(get_put(l, s), [&] {
    auto x = get(l, s);
    auto r = x ? put(l, *x, s) : std::nullopt;
    return "s = " + describe(s) + ", get " + describe(x) + ", put back " + (r ? describe(r->source) : "none");
  });
}

template <class S, class U, class V>
std::optional<std::string> weak_lens_case(const Lens<S, U, V>& l, const U& x, const S& s, const S& other) {
  auto r = put(l, x, s);
  // Check the predicate both on the source the put produced and on an unrelated one.
  if (r && !weak_backward_round_trip(l, x, s, r->source))
    return "weak backward: x = " + describe(x) + ", s = " + describe(s) + ", s' = " + describe(r->source);
  if (!weak_backward_round_trip(l, x, s, other))
    return "weak backward: x = " + describe(x) + ", s = " + describe(s) + ", s' = " + describe(other);
  if (!weak_forward_round_trip(l, x, s)) return "weak forward: x = " + describe(x) + ", s = " + describe(s);
  if constexpr (std::is_same_v<U, V>) {
    auto y = get(l, s);
    if (y && !weak_forward_round_trip(l, *y, s)) return "weak forward (aligned): s = " + describe(s);
  }
  return std::nullopt;
}

Spine sample_spine(RngStream& rng) {
  Spine sp;
  for (auto k = rng.between(0, 5); k > 0; --k) sp.push_back(static_cast<int>(rng.between(-5, 20)));
  return sp;
}

std::vector<SuiteResult> lens_round_trips(const SuiteConfig& config) {
  const auto n = config.cases;
  const auto seed = config.seed;
  std::vector<SuiteResult> out;

  out.push_back(property("lens: put-get", n, seed, [](RngStream& rng) -> std::optional<std::string> {
    auto m = sampling::kvmap(rng, 5);
    if (auto f = put_get_case(lenses::at_key(sampling::key(rng)), sampling::value(rng), m)) return f;
    auto ks = sampling::keys(rng, 4);
    if (auto f = put_get_case(lenses::at_keys(ks), sampling::values(rng, ks.size()), m)) return f;
    auto t = sampling::tree(rng, 4, 0, 9);
    lenses::Label label = rng.chance(0.2) ? lenses::Label() : lenses::Label(static_cast<int>(rng.between(0, 9)));
    if (auto f = put_get_case(lenses::root(), label, t)) return f;
    return put_get_case(lenses::spine(), sample_spine(rng), t);
  }));

  out.push_back(property("lens: get-put", n, seed, [](RngStream& rng) -> std::optional<std::string> {
    auto m = sampling::kvmap(rng, 5);
    if (auto f = get_put_case(lenses::at_key(sampling::key(rng)), m)) return f;
    if (auto f = get_put_case(lenses::at_keys(sampling::keys(rng, 4)), m)) return f;
    auto t = sampling::tree(rng, 4, 0, 9);
    if (auto f = get_put_case(lenses::root(), t)) return f;
    return get_put_case(lenses::spine(), t);
  }));

  out.push_back(property("lens: weak round tripping", n, seed, [](RngStream& rng) -> std::optional<std::string> {
    auto m = sampling::kvmap(rng, 5);
    auto m2 = sampling::kvmap(rng, 5);
    auto ks = sampling::keys(rng, 4);
    auto vs = sampling::values(rng, static_cast<std::size_t>(rng.between(0, 5)));  // lengths need not match
    if (auto f = weak_lens_case(lenses::at_key(sampling::key(rng)), sampling::value(rng), m, m2)) return f;
    if (auto f = weak_lens_case(lenses::at_keys(ks), vs, m, m2)) return f;
    if (auto f = weak_lens_case(upon(lenses::at_key("k"), safe_head<Values>()), vs, m, m2)) return f;
    auto t = sampling::tree(rng, 4, 0, 9);
    auto t2 = sampling::tree(rng, 4, 0, 9);
    lenses::Label label = rng.chance(0.2) ? lenses::Label() : lenses::Label(static_cast<int>(rng.between(0, 9)));
    if (auto f = weak_lens_case(lenses::root(), label, t, t2)) return f;
    if (auto f = weak_lens_case(lenses::right_child(), sampling::tree(rng, 2, 0, 9), t, t2)) return f;
    if (auto f = weak_lens_case(lenses::spine(), sample_spine(rng), t, t2)) return f;
    return weak_lens_case(lenses::compose(lenses::right_child(), lenses::spine()), sample_spine(rng), t, t2);
  }));

  out.push_back(property("lens: identity projection of at_keys", n, seed, [](RngStream& rng) {
    auto ks = sampling::keys(rng, 5);
    auto vs = sampling::values(rng, ks.size());
    auto m = sampling::kvmap(rng, 5);
    auto got = lens_purify(m, lenses::at_keys(ks))(vs);
    return expect(got == std::optional(vs), [&] {
      return "keys " + describe(ks) + ", values " + describe(vs) + ", source " + describe(m) + ": " + describe(got);
    });
  }));

  out.push_back(property("lens: put predicates accept the updated source", n, seed, [](RngStream& rng) {
    auto m = sampling::kvmap(rng, 5);
    auto ks = sampling::keys(rng, 4);
    std::set<Key> distinct(ks.begin(), ks.end());
    auto vs = sampling::values(rng, ks.size());
    auto r = put(lenses::at_keys(ks), vs, m);
    // Repeated keys legitimately conflict with each other.
    bool ok = r && (distinct.size() < ks.size() || r->guard(r->source));
    auto t = sampling::tree(rng, 4, 0, 9);
    auto sp = sample_spine(rng);
    auto rt = put(lenses::spine(), sp, t);
    ok = ok && rt && rt->guard(rt->source);
    return expect(ok, [&] { return "keys " + describe(ks) + " / spine " + describe(sp) + " on " + describe(t); });
  }));

  out.push_back(property("lens: predicate monoid", n, seed, [](RngStream& rng) {
    auto guard_of = [&](RngStream& r) {
      auto m = sampling::kvmap(r, 3);
      return put(lenses::at_key(sampling::key(r)), sampling::value(r), m)->guard;
    };
    auto a = guard_of(rng), b = guard_of(rng), c = guard_of(rng);
    auto unit = SourcePredicate<KvMap>::always();
    auto s = sampling::kvmap(rng, 5);
    bool ok = (unit && a)(s) == a(s) && (a && unit)(s) == a(s) && ((a && b) && c)(s) == (a && (b && c))(s);
    return expect(ok, [&] { return "source " + describe(s); });
  }));

  return out;
}

// ---------------------------------------------------------------- bigen

SuiteResult bigen_laws(const SuiteConfig& config) {
  return laws("bigen: monadic profunctor laws", config, [](RngStream& rng, std::size_t n) {
    BigenOps ops;
    for (std::size_t i = 0; i < n + 4; ++i) ops.seeds.emplace_back(rng.bits());
    std::vector<int> ints{-1, 0, 3, 5, 10, 11};
    std::vector<Tree> trees = enumerate_bsts(0, 2);
    for (std::size_t i = 0; i < n; ++i) trees.push_back(sampling::tree(rng, 3, -2, 8));
    std::vector<std::vector<int>> int_lists{{}, {0}, {11}, {4, 20}};

    PartialFn<Tree, int> node_value([](const Tree& t) -> std::optional<int> {
      if (t.is_leaf()) return std::nullopt;
      return t.label();
    });
    auto proj = [](const auto& g) { return bigen_purify(g); };

    return all_of({
        law_comap_identity(ops, bigens::in_range(0, 10), ints),
        law_comap_identity(ops, bigens::bst(0, 5), trees),
        law_comap_compose(ops, safe_head<std::vector<int>>(), partial_identity<int>(), bigens::in_range(0, 10), int_lists),
        law_monad(ops, bigens::in_range(0, 3), [](int x) { return Bigen<int, int>::pure(x); },
                  [](int x) { return bigens::in_range(0, x); }, 2, ints),
        law_monad(ops, bigens::bst(0, 3), [](const Tree& t) { return Bigen<Tree, Tree>::pure(t); },
                  [](const Tree&) { return bigens::leaf(); }, Tree::leaf(), trees),
        law_promonad(ops, node_value, bigens::in_range(0, 10), [](int x) { return bigens::in_range(x, x + 3); }, 4,
                     trees),
        law_purify_homomorphism(ops, proj, node_value, bigens::in_range(0, 10),
                                [](int x) { return bigens::in_range(x - 2, x + 2); }, 5, trees, ints),
        law_purify_homomorphism(ops, proj, partial_identity<Tree>(), bigens::bst(0, 4),
                                [](const Tree& t) { return bigens::bst(0, static_cast<int>(t.size())); }, Tree::leaf(),
                                trees, trees),
    });
  });
}

std::vector<SuiteResult> bigen_round_trips(const SuiteConfig& config) {
  const auto n = config.cases;
  const auto seed = config.seed;
  std::vector<SuiteResult> out;

  for (auto [lo, hi] : {std::pair(0, 3), std::pair(0, 20)}) {
    auto g = bigens::bst(lo, hi);
    std::string name = "bigen: soundness of bst(" + std::to_string(lo) + "," + std::to_string(hi) + ")";
    auto result = property(name, 10 * n, seed, [&, lo = lo, hi = hi](RngStream& rng) {
      auto t = generate(g, Rng(rng.bits())).first;
      return expect(to_predicate(g, t) && check_bst(lo, hi, t), [&] { return "generated " + to_text(t); });
    });
    out.push_back(result);
  }

  {
    SuiteResult result{"bigen: completeness of bst(0,3)", 0, true, {}};
    if (n > 0) {
      auto all = enumerate_bsts(0, 3);
      std::set<std::string> missing;
      for (const auto& t : all) missing.insert(to_text(t));
      auto g = bigens::bst(0, 3);
      Rng r(suite_seed(seed, result.name));
      constexpr std::size_t cap = 200000;
      while (!missing.empty() && result.cases < cap) {
        auto [t, next] = generate(g, r);
        r = next;
        missing.erase(to_text(t));
        ++result.cases;
      }
      if (!missing.empty()) {
        result.passed = false;
        result.counterexample = std::to_string(missing.size()) + " of " + std::to_string(all.size()) +
                                " trees never generated, e.g. " + *missing.begin();
      }
    }
    out.push_back(result);
  }

  out.push_back(property("bigen: predicate agrees with direct BST check", n, seed, [](RngStream& rng) {
    static const auto all = enumerate_bsts(0, 3);
    auto g = bigens::bst(0, 3);
    auto t = rng.chance(0.3) ? all[static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(all.size()) - 1))]
                             : sampling::tree(rng, 4, -1, 4);
    return expect(to_predicate(g, t) == check_bst(0, 3, t), [&] { return "tree " + to_text(t); });
  }));

  out.push_back(property("bigen: checkers return their input", n, seed, [](RngStream& rng) {
    auto t = sampling::tree(rng, 4, -1, 6);
    int x = static_cast<int>(rng.between(-3, 13));
    bool b = rng.chance(0.5);
    auto bst = bigens::bst(0, 5);
    auto ct = check(bst, t);
    auto ci = check(bigens::in_range(0, 10), x);
    auto cb = check(bigens::boolean(0.3), b);
    auto cl = check(bigens::leaf(), t);
    bool ok = (!ct || (*ct == t && to_predicate(bst, *ct))) && (!ci || *ci == x) && (cb && *cb == b) &&
              (!cl || *cl == t);
    return expect(ok, [&] { return "tree " + to_text(t) + ", int " + describe(x); });
  }));

  out.push_back(property("bigen: generation is deterministic per seed", n, seed, [](RngStream& rng) {
    Rng r(rng.bits());
    auto g = bigens::bst(0, 20);
    auto a = generate(g, r);
    auto b = generate(g, r);
    return expect(a.first == b.first && a.second == b.second, [&] { return "seed state " + std::to_string(r.state()); });
  }));

  return out;
}

}  // namespace

std::vector<SuiteResult> run_law_suites(const SuiteConfig& config, const SuiteFixtures& fixtures) {
  std::vector<SuiteResult> results;
  auto append = [&results](std::vector<SuiteResult> more) {
    results.insert(results.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  };
  results.push_back(partial_compose_associativity(config));
  results.push_back(injective_arrows(config));
  results.push_back(biparser_laws(config));
  append(biparser_round_trips(config, fixtures));
  results.push_back(lens_laws(config));
  append(lens_round_trips(config));
  results.push_back(bigen_laws(config));
  append(bigen_round_trips(config));
  return results;
}

std::string format_report(const std::vector<SuiteResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)";
    if (!r.passed) out << ": " << r.counterexample;
    out << '\n';
  }
  return out.str();
}

bool all_passed(const std::vector<SuiteResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.passed; });
}

}  // namespace promonad
