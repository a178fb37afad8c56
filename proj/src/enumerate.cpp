#include "topoidx/enumerate.hpp"

#include <algorithm>

namespace topoidx {

namespace {

struct Split {
  std::vector<std::size_t> left;
  std::vector<std::size_t> rest;
};

// Left subtree of the root (levels shifted up by one) and the remainder.
Split split_tree(const std::vector<std::size_t>& layout) {
  std::size_t m = layout.size();
  bool one_found = false;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] == 1) {
      if (one_found) {
        m = i;
        break;
      }
      one_found = true;
    }
  }
  Split s;
  for (std::size_t i = 1; i < m; ++i) s.left.push_back(layout[i] - 1);
  s.rest.push_back(0);
  for (std::size_t i = m; i < layout.size(); ++i) s.rest.push_back(layout[i]);
  return s;
}

std::size_t height(const std::vector<std::size_t>& levels) {
  return *std::max_element(levels.begin(), levels.end());
}

}  // namespace

TreeEnumerator::TreeEnumerator(std::size_t n) : n_(n) {
  if (n_ == 0) {
    done_ = true;
    return;
  }
  for (std::size_t i = 0; i <= n_ / 2; ++i) layout_.push_back(i);
  for (std::size_t i = 1; i < (n_ + 1) / 2; ++i) layout_.push_back(i);
}

// Successor of a rooted level sequence, regenerating from position p.
// Empties layout_ when no successor exists.
void TreeEnumerator::next_rooted(std::size_t p) {
  if (p == 0) {
    layout_.clear();
    return;
  }
  std::size_t q = p - 1;
  while (layout_[q] != layout_[p] - 1) --q;
  for (std::size_t i = p; i < layout_.size(); ++i) layout_[i] = layout_[i - p + q];
}

// Moves layout_ to the next level sequence that is a canonical free tree.
bool TreeEnumerator::advance_to_valid() {
  const Split s = split_tree(layout_);
  const std::size_t left_height = height(s.left);
  const std::size_t rest_height = height(s.rest);
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (s.left.size() > s.rest.size()) {
      valid = false;
    } else if (s.left.size() == s.rest.size() && s.left > s.rest) {
      valid = false;
    }
  }
  if (valid) return true;

  const std::size_t p = s.left.size();
  const bool tall = layout_[p] > 2;
  next_rooted(p);
  if (layout_.empty()) return false;
  if (tall) {
    const std::size_t new_left_height = height(split_tree(layout_).left);
    const std::size_t suffix = new_left_height + 1;
    for (std::size_t i = 0; i < suffix; ++i) layout_[layout_.size() - suffix + i] = i + 1;
  }
  return true;
}

std::optional<Tree> TreeEnumerator::next() {
  if (done_) return std::nullopt;
  if (n_ <= 2) {
    done_ = true;
    last_ = layout_;
    if (n_ == 1) return Tree::from_edge_list(1, std::span<const Edge>{});
    return Tree::from_edge_list(2, {{0, 1}});
  }
  if (layout_.empty() || !advance_to_valid()) {
    done_ = true;
    return std::nullopt;
  }
  last_ = layout_;
  Tree out = tree_from_level_sequence(last_);

  std::size_t p = layout_.size() - 1;
  while (p > 0 && layout_[p] == 1) --p;
  next_rooted(p);
  return out;
}

Tree tree_from_level_sequence(const std::vector<std::size_t>& levels) {
  std::vector<Edge> edges;
  edges.reserve(levels.size());
  std::vector<Vertex> last_at_level;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const std::size_t level = levels[i];
    last_at_level.resize(level + 1);
    last_at_level[level] = static_cast<Vertex>(i);
    if (level > 0) edges.push_back({last_at_level[level - 1], static_cast<Vertex>(i)});
  }
  return Tree::from_edge_list(levels.size(), edges);
}

std::vector<Tree> enumerate_trees(std::size_t n) {
  std::vector<Tree> out;
  TreeEnumerator it(n);
  while (auto t = it.next()) out.push_back(std::move(*t));
  return out;
}

std::size_t count_trees(std::size_t n) {
  std::size_t count = 0;
  TreeEnumerator it(n);
  while (it.next()) ++count;
  return count;
}

}  // namespace topoidx
