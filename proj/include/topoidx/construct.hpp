#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "topoidx/tree.hpp"

namespace topoidx {

/// Four-vertex spine v1-v2-v3-v4 with spine degrees (x, y, z, t).
struct CaterpillarSpec {
  int x = 1;
  int y = 2;
  int z = 2;
  int t = 2;
  /// Optional tail tree hung from v4 by its vertex `tail_root`.
  std::shared_ptr<const Tree> tail;
  Vertex tail_root = 0;

  /// Throws GraphError(InvalidArgument) on x < 1 or y, z, t < 2.
  void validate() const;
};

/// Spine vertices are labels 0..3. Without a tail v4 carries t-1 leaves,
/// with a tail it carries t-2 leaves plus the tail edge, so deg(v4) == t either way.
Tree build_caterpillar(const CaterpillarSpec& spec);

/// Disjoint union of host and sub plus the edge (at, sub_root). Sub vertices
/// are relabeled to host.order() + original label.
Tree attach_tree(const Tree& host, Vertex at, const Tree& sub, Vertex sub_root);

Tree path_tree(std::size_t n);
Tree star_tree(std::size_t leaves);

/// Connected graphs one edge deletion or one edge addition away from `g`.
/// Deletions first (in edge order), then additions (lexicographic).
std::vector<Graph> unit_edit_neighbors(const Graph& g);

}  // namespace topoidx
