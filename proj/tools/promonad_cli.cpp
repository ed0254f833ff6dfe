// Command-line front-end: length-prefixed codec, tree and key-value lenses,
// BST sampling/checking, and the law suites.
//
// Exit codes: 0 success, 1 domain failure (parse, lens, check), 2 malformed input.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "promonad/bigen.hpp"
#include "promonad/biparser.hpp"
#include "promonad/kvmap.hpp"
#include "promonad/lens.hpp"
#include "promonad/suites.hpp"
#include "promonad/tree.hpp"

namespace {

using namespace promonad;

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kMalformed = 2;

int malformed(const std::string& what) {
  std::cerr << "error: " << what << '\n';
  return kMalformed;
}

int failed(const std::string& what) {
  std::cerr << "error: " << what << '\n';
  return kDomainFailure;
}

int cmd_encode(const std::string& payload) {
  auto text = from_utf8(payload);
  if (!text) return malformed("payload is not valid UTF-8");
  auto printed = print(biparsers::string(), *text);
  if (!printed) return failed("cannot print payload");
  std::cout << to_utf8(printed->second) << '\n';
  return kOk;
}

int cmd_decode(const std::string& input) {
  auto text = from_utf8(input);
  if (!text) return malformed("input is not valid UTF-8");
  auto parsed = parse(biparsers::string(), *text);
  if (!parsed) return failed("cannot parse a length-prefixed string");
  std::cout << to_utf8(parsed->first) << '\n' << to_utf8(parsed->second) << '\n';
  return kOk;
}

int cmd_spine_get(const std::string& tree_text) {
  auto tree = parse_tree(tree_text);
  if (!tree) return malformed("malformed tree: " + tree_text);
  auto spine = get(lenses::spine(), *tree);
  if (!spine) return failed("spine lens get failed");
  std::string line;
  for (std::size_t i = 0; i < spine->size(); ++i) {
    if (i) line += ' ';
    line += std::to_string((*spine)[i]);
  }
  std::cout << line << '\n';
  return kOk;
}

int cmd_spine_put(const std::string& tree_text, const std::vector<int>& labels) {
  auto tree = parse_tree(tree_text);
  if (!tree) return malformed("malformed tree: " + tree_text);
  auto result = put(lenses::spine(), labels, *tree);
  if (!result) return failed("spine lens put failed");
  std::cout << to_text(result->source) << '\n';
  return kOk;
}

std::optional<KvMap> read_kvmap(const std::string& path, bool missing_is_empty, int& status) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    if (missing_is_empty) return KvMap{};
    status = malformed("cannot read " + path);
    return std::nullopt;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  auto m = parse_kvmap(buffer.str());
  if (!m) status = malformed("malformed key-value file " + path);
  return m;
}

int cmd_kv_get(const std::string& path, const std::vector<std::string>& keys) {
  int status = kOk;
  auto m = read_kvmap(path, false, status);
  if (!m) return status;
  auto values = get(lenses::at_keys(keys), *m);
  if (!values) return failed("missing key");
  for (const auto& v : *values) std::cout << v << '\n';
  return kOk;
}

int cmd_kv_put(const std::string& path, const std::vector<std::string>& keys, const std::vector<std::string>& values) {
  for (const auto& s : keys)
    if (!representable(s)) return malformed("key cannot contain '=' or a newline: " + s);
  for (const auto& s : values)
    if (!representable(s)) return malformed("value cannot contain '=' or a newline: " + s);
  int status = kOk;
  auto m = read_kvmap(path, true, status);
  if (!m) return status;
  auto result = put(lenses::at_keys(keys), values, *m);
  if (!result) return failed("fewer values than keys");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << *format_kvmap(result->source);
  if (!out) return failed("cannot write " + path);
  for (const auto& v : result->view) std::cout << v << '\n';
  return kOk;
}

int cmd_bst_sample(int lo, int hi, std::size_t count, std::uint64_t seed) {
  auto g = bigens::bst(lo, hi);
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    auto [tree, next] = generate(g, rng);
    rng = next;
    std::cout << to_text(tree) << '\n';
  }
  return kOk;
}

int cmd_bst_check(int lo, int hi, const std::string& tree_text) {
  auto tree = parse_tree(tree_text);
  if (!tree) return malformed("malformed tree: " + tree_text);
  bool ok = to_predicate(bigens::bst(lo, hi), *tree);
  std::cout << (ok ? "true" : "false") << '\n';
  return ok ? kOk : kDomainFailure;
}

int cmd_laws(std::uint64_t seed, std::size_t cases) {
  auto results = run_law_suites(SuiteConfig{seed, cases});
  std::cout << format_report(results);
  bool ok = all_passed(results);
  std::size_t failures = 0;
  for (const auto& r : results) failures += r.passed ? 0 : 1;
  std::cout << (ok ? "all " + std::to_string(results.size()) + " suites passed"
                   : std::to_string(failures) + " of " + std::to_string(results.size()) + " suites failed")
            << '\n';
  return ok ? kOk : kDomainFailure;
}

struct BstArgs {
  int lo = 0;
  int hi = 20;
  std::size_t count = 10;
  std::uint64_t seed = 42;
  std::string tree;
};

void add_bst_sample(CLI::App& parent, const std::string& name, BstArgs& args, int& status) {
  auto* cmd = parent.add_subcommand(name, "Print random binary search trees, one per line");
  cmd->add_option("--lo", args.lo, "Smallest label")->capture_default_str();
  cmd->add_option("--hi", args.hi, "Largest label")->capture_default_str();
  cmd->add_option("--count", args.count, "Number of trees")->capture_default_str();
  cmd->add_option("--seed", args.seed, "Generator seed")->capture_default_str();
  cmd->callback([&] { status = cmd_bst_sample(args.lo, args.hi, args.count, args.seed); });
}

void add_bst_check(CLI::App& parent, const std::string& name, BstArgs& args, int& status) {
  auto* cmd = parent.add_subcommand(name, "Check that a tree is a BST with labels in range");
  cmd->add_option("--lo", args.lo, "Smallest label")->capture_default_str();
  cmd->add_option("--hi", args.hi, "Largest label")->capture_default_str();
  cmd->add_option("tree", args.tree, "Tree text, e.g. \"(N L 1 L)\"")->required();
  cmd->callback([&] { status = cmd_bst_check(args.lo, args.hi, args.tree); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bidirectional parsers, lenses and generators"};
  app.require_subcommand(1);
  int status = kOk;

  std::string payload;
  auto* encode = app.add_subcommand("encode", "Print a payload in the length-prefixed format");
  encode->add_option("payload", payload)->required();
  encode->callback([&] { status = cmd_encode(payload); });

  std::string encoded;
  auto* decode = app.add_subcommand("decode", "Parse a length-prefixed string; prints payload then remainder");
  decode->add_option("input", encoded)->required();
  decode->callback([&] { status = cmd_decode(encoded); });

  std::string tree_text;
  std::vector<int> labels;
  auto* spine_get = app.add_subcommand("spine-get", "Print the right spine of a tree");
  spine_get->add_option("tree", tree_text)->required();
  spine_get->callback([&] { status = cmd_spine_get(tree_text); });

  auto* spine_put = app.add_subcommand("spine-put", "Replace the right spine of a tree");
  spine_put->add_option("tree", tree_text)->required();
  spine_put->add_option("labels", labels, "New spine labels");
  spine_put->callback([&] { status = cmd_spine_put(tree_text, labels); });

  std::string path;
  std::vector<std::string> keys;
  std::vector<std::string> values;
  auto* kv_get = app.add_subcommand("kv-get", "Print the values stored under keys, one per line");
  kv_get->add_option("file", path)->required();
  kv_get->add_option("keys", keys)->required();
  kv_get->callback([&] { status = cmd_kv_get(path, keys); });

  auto* kv_put = app.add_subcommand("kv-put", "Store values under keys and rewrite the file");
  kv_put->add_option("file", path)->required();
  kv_put->add_option("-k,--keys", keys)->required();
  kv_put->add_option("-v,--values", values);
  kv_put->callback([&] { status = cmd_kv_put(path, keys, values); });

  BstArgs bst_args;
  auto* bst = app.add_subcommand("bst", "Sample or check binary search trees");
  bst->require_subcommand(1);
  add_bst_sample(*bst, "sample", bst_args, status);
  add_bst_check(*bst, "check", bst_args, status);
  add_bst_sample(app, "bst-sample", bst_args, status);
  add_bst_check(app, "bst-check", bst_args, status);

  std::uint64_t seed = 42;
  std::size_t cases = 1000;
  auto* laws = app.add_subcommand("laws", "Run every law and round-tripping suite");
  laws->add_option("--seed", seed)->capture_default_str();
  laws->add_option("--cases", cases, "Random cases per property")->capture_default_str();
  laws->callback([&] { status = cmd_laws(seed, cases); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kMalformed;
  }
  return status;
}
