#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace promonad {

/// Immutable binary tree labelled by integers. Copies share structure.
class Tree {
 public:
  Tree() = default;

  static Tree leaf() { return Tree(); }
  static Tree node(Tree left, int label, Tree right);

  bool is_leaf() const { return node_ == nullptr; }
  bool is_node() const { return node_ != nullptr; }

  // Precondition for the three accessors: is_node().
  const Tree& left() const;
  int label() const;
  const Tree& right() const;

  std::size_t size() const;

  friend bool operator==(const Tree& a, const Tree& b);

 private:
  struct Node;
  explicit Tree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// `L` for a leaf, `(N <left> <label> <right>)` for a node.
std::string to_text(const Tree& t);

/// Strict inverse of to_text: single spaces, no surrounding whitespace.
std::optional<Tree> parse_tree(std::string_view s);

inline std::string describe(const Tree& t) { return to_text(t); }

/// Node Leaf n Leaf
inline Tree singleton(int n) { return Tree::node(Tree(), n, Tree()); }

}  // namespace promonad
