#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "topoidx/graph.hpp"

namespace topoidx {

using CanonicalCode = std::vector<std::uint8_t>;

/// A connected acyclic Graph together with its canonical code.
///
/// Two trees are isomorphic iff their codes compare equal.
class Tree {
public:
  /// Throws GraphError(NotATree) unless `g` is connected with n-1 edges.
  explicit Tree(Graph g);

  static Tree from_edge_list(std::size_t n, std::span<const Edge> edges) {
    return Tree(Graph::from_edge_list(n, edges));
  }
  static Tree from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
    return Tree(Graph::from_edge_list(n, edges));
  }

  const Graph& graph() const noexcept { return graph_; }
  std::size_t order() const noexcept { return graph_.order(); }
  const CanonicalCode& code() const noexcept { return code_; }
  std::string code_hex() const;

  bool isomorphic_to(const Tree& other) const { return code_ == other.code_; }

private:
  Graph graph_;
  CanonicalCode code_;
};

/// One or two centroids of a tree graph, ascending.
std::vector<Vertex> centroids(const Graph& tree);

/// AHU code of `tree` rooted at `root`. Byte 0x01 opens a subtree, 0x00 closes it.
CanonicalCode rooted_ahu_code(const Graph& tree, Vertex root);

/// Centroid-rooted AHU code; for two centroids the lexicographically smaller code.
CanonicalCode ahu_code(const Graph& tree);

std::string to_hex(const CanonicalCode& code);
/// Throws GraphError(BadFormat) on odd length or non-hex characters.
CanonicalCode from_hex(const std::string& hex);

/// Rebuilds a representative tree from a canonical code (root = vertex 0, preorder labels).
Tree tree_from_code(const CanonicalCode& code);

}  // namespace topoidx
