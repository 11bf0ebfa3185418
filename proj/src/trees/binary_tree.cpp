#include "randwave/trees/binary_tree.hpp"

#include <stdexcept>

namespace randwave {

BinaryTree BinaryTree::leaf() {
  static const auto shared = std::make_shared<const Node>();
  return BinaryTree(shared);
}

BinaryTree BinaryTree::node(const BinaryTree& left, const BinaryTree& right) {
  auto n = std::make_shared<Node>();
  n->left = left.node_;
  n->right = right.node_;
  n->leaves = left.leaves() + right.leaves();
  n->height = 1 + std::max(left.height(), right.height());
  n->encoding = "(" + left.encoding() + right.encoding() + ")";
  return BinaryTree(std::move(n));
}

namespace {

BinaryTree parse_at(const std::string& s, std::size_t& pos) {
  if (pos >= s.size()) throw std::invalid_argument("truncated tree encoding: " + s);
  if (s[pos] == '.') {
    ++pos;
    return BinaryTree::leaf();
  }
  if (s[pos] != '(') throw std::invalid_argument("bad tree encoding: " + s);
  ++pos;
  BinaryTree l = parse_at(s, pos);
  BinaryTree r = parse_at(s, pos);
  if (pos >= s.size() || s[pos] != ')') throw std::invalid_argument("bad tree encoding: " + s);
  ++pos;
  return BinaryTree::node(l, r);
}

}  // namespace

BinaryTree BinaryTree::parse(const std::string& encoding) {
  std::size_t pos = 0;
  BinaryTree t = parse_at(encoding, pos);
  if (pos != encoding.size()) throw std::invalid_argument("trailing tree encoding: " + encoding);
  return t;
}

BinaryTree BinaryTree::left() const {
  if (is_leaf()) throw std::logic_error("leaf has no children");
  return BinaryTree(node_->left);
}

BinaryTree BinaryTree::right() const {
  if (is_leaf()) throw std::logic_error("leaf has no children");
  return BinaryTree(node_->right);
}

std::vector<BinaryTree> enumerate_trees(int j) {
  if (j < 1 || j > kMaxEnumeratedLeaves) {
    throw std::invalid_argument("tree enumeration needs 1 <= j <= " +
                                std::to_string(kMaxEnumeratedLeaves));
  }
  std::vector<std::vector<BinaryTree>> by_size(static_cast<std::size_t>(j) + 1);
  by_size[1] = {BinaryTree::leaf()};
  for (int s = 2; s <= j; ++s) {
    auto& out = by_size[static_cast<std::size_t>(s)];
    for (int i = 1; i < s; ++i) {
      for (const auto& a : by_size[static_cast<std::size_t>(i)])
        for (const auto& b : by_size[static_cast<std::size_t>(s - i)])
          out.push_back(BinaryTree::node(a, b));
    }
  }
  return std::move(by_size[static_cast<std::size_t>(j)]);
}

std::vector<int> b_index_set(int j, int n) {
  if (n < 1 || n > 30 || j < 2 || j > (1 << n)) {
    throw std::invalid_argument("B_j needs n >= 1 and 2 <= j <= 2^n");
  }
  const int half = 1 << (n - 1);
  std::vector<int> out;
  const int lo = j <= half ? 1 : j - half;
  const int hi = j <= half ? j - 1 : half;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

std::vector<BinaryTree> level_trees(int n, int j) {
  if (n < 0 || j < 1) throw std::invalid_argument("level trees need n >= 0 and j >= 1");
  if (j == 1) return {BinaryTree::leaf()};
  if (n == 0 || n > 30 || j > (1 << n)) return {};
  std::vector<BinaryTree> out;
  for (int i : b_index_set(j, n)) {
    const auto left = level_trees(n - 1, i);
    const auto right = level_trees(n - 1, j - i);
    for (const auto& a : left)
      for (const auto& b : right) out.push_back(BinaryTree::node(a, b));
  }
  return out;
}

}  // namespace randwave
