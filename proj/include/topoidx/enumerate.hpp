#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "topoidx/tree.hpp"

namespace topoidx {

/// Streams every free tree on n vertices exactly once.
///
/// Walks canonical level sequences of center-rooted trees in the order of
/// Wright, Richmond, Odlyzko and McKay. Deterministic; single consumer.
class TreeEnumerator {
public:
  explicit TreeEnumerator(std::size_t n);

  /// Next tree, or nullopt when exhausted.
  std::optional<Tree> next();

  /// Level sequence of the tree returned by the last next() call.
  const std::vector<std::size_t>& level_sequence() const noexcept { return last_; }

private:
  bool advance_to_valid();
  void next_rooted(std::size_t p);

  std::size_t n_;
  std::vector<std::size_t> layout_;
  std::vector<std::size_t> last_;
  bool done_ = false;
  bool small_emitted_ = false;
};

/// Builds the tree whose preorder depth sequence is `levels` (levels[0] == 0).
Tree tree_from_level_sequence(const std::vector<std::size_t>& levels);

/// Collects the whole stream.
std::vector<Tree> enumerate_trees(std::size_t n);

std::size_t count_trees(std::size_t n);

}  // namespace topoidx
