#pragma once

#include <memory>
#include <string>
#include <vector>

namespace randwave {

/// Immutable full binary tree. Encoding: "." for a leaf, "(" left right ")"
/// for an internal node; two trees are equal iff their encodings are.
class BinaryTree {
 public:
  static BinaryTree leaf();
  static BinaryTree node(const BinaryTree& left, const BinaryTree& right);
  /// Throws std::invalid_argument for a malformed encoding.
  static BinaryTree parse(const std::string& encoding);

  bool is_leaf() const { return !node_->left; }
  /// Children; throw std::logic_error on a leaf.
  BinaryTree left() const;
  BinaryTree right() const;

  int leaves() const { return node_->leaves; }
  int internal_nodes() const { return node_->leaves - 1; }
  /// Edges from the root to the deepest leaf.
  int height() const { return node_->height; }
  const std::string& encoding() const { return node_->encoding; }

  bool operator==(const BinaryTree& other) const { return encoding() == other.encoding(); }

 private:
  struct Node {
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
    int leaves = 1;
    int height = 0;
    std::string encoding = ".";
  };
  explicit BinaryTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

inline constexpr int kMaxEnumeratedLeaves = 14;

/// All full binary trees with j leaves, 1 <= j <= 14, ordered by the leaf
/// count of the left subtree and then recursively. Throws std::invalid_argument
/// otherwise.
std::vector<BinaryTree> enumerate_trees(int j);

/// Left-subtree leaf counts i that can feed a j-leaf term at iterate level n:
/// 1..j-1 when j <= 2^(n-1), else j-2^(n-1)..2^(n-1). Requires 2 <= j <= 2^n.
std::vector<int> b_index_set(int j, int n);

/// Trees with j leaves realized at iterate level n, built by the induction
/// T(n, 1) = {leaf}, T(n, j) = {node(a, b) : i in B_j, a in T(n-1, i),
/// b in T(n-1, j-i)}. Empty when j > 2^n.
std::vector<BinaryTree> level_trees(int n, int j);

}  // namespace randwave
