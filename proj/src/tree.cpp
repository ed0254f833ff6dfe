#include "promonad/tree.hpp"

#include <charconv>

namespace promonad {

struct Tree::Node {
  Tree left;
  int label;
  Tree right;
};

Tree Tree::node(Tree left, int label, Tree right) {
  return Tree(std::make_shared<const Node>(Node{std::move(left), label, std::move(right)}));
}

const Tree& Tree::left() const { return node_->left; }
int Tree::label() const { return node_->label; }
const Tree& Tree::right() const { return node_->right; }

std::size_t Tree::size() const {
  return is_leaf() ? 0 : 1 + left().size() + right().size();
}

bool operator==(const Tree& a, const Tree& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_leaf() || b.is_leaf()) return false;
  return a.label() == b.label() && a.left() == b.left() && a.right() == b.right();
}

namespace {

void render(const Tree& t, std::string& out) {
  if (t.is_leaf()) {
    out += 'L';
    return;
  }
  out += "(N ";
  render(t.left(), out);
  out += ' ';
  out += std::to_string(t.label());
  out += ' ';
  render(t.right(), out);
  out += ')';
}

struct TreeReader {
  std::string_view s;
  std::size_t pos = 0;

  bool eat(char c) {
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::optional<int> label() {
    const char* first = s.data() + pos;
    const char* last = s.data() + s.size();
    // from_chars accepts a leading '-' but not '+'.
    int value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) return std::nullopt;
    pos += static_cast<std::size_t>(ptr - first);
    return value;
  }

  std::optional<Tree> tree() {
    if (eat('L')) return Tree::leaf();
    if (!eat('(') || !eat('N') || !eat(' ')) return std::nullopt;
    auto l = tree();
    if (!l || !eat(' ')) return std::nullopt;
    auto n = label();
    if (!n || !eat(' ')) return std::nullopt;
    auto r = tree();
    if (!r || !eat(')')) return std::nullopt;
    return Tree::node(std::move(*l), *n, std::move(*r));
  }
};

}  // namespace

std::string to_text(const Tree& t) {
  std::string out;
  render(t, out);
  return out;
}

std::optional<Tree> parse_tree(std::string_view s) {
  TreeReader reader{s};
  auto t = reader.tree();
  if (!t || reader.pos != s.size()) return std::nullopt;
  return t;
}

}  // namespace promonad
