#include "topoidx/construct.hpp"

#include <string>

namespace topoidx {

void CaterpillarSpec::validate() const {
  if (x < 1 || y < 2 || z < 2 || t < 2) {
    throw GraphError(GraphErrorCode::InvalidArgument,
                     "caterpillar needs x >= 1 and y, z, t >= 2; got (" + std::to_string(x) + "," +
                         std::to_string(y) + "," + std::to_string(z) + "," + std::to_string(t) + ")");
  }
  if (tail && tail_root >= tail->order()) {
    throw GraphError(GraphErrorCode::VertexOutOfRange, "caterpillar tail root out of range");
  }
}

Tree build_caterpillar(const CaterpillarSpec& spec) {
  spec.validate();
  std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}};
  Vertex next = 4;
  auto hang_leaves = [&](Vertex at, int count) {
    for (int i = 0; i < count; ++i) edges.push_back({at, next++});
  };
  hang_leaves(0, spec.x - 1);
  hang_leaves(1, spec.y - 2);
  hang_leaves(2, spec.z - 2);
  hang_leaves(3, spec.tail ? spec.t - 2 : spec.t - 1);
  Tree body = Tree::from_edge_list(next, edges);
  if (!spec.tail) return body;
  return attach_tree(body, 3, *spec.tail, spec.tail_root);
}

Tree attach_tree(const Tree& host, Vertex at, const Tree& sub, Vertex sub_root) {
  if (at >= host.order() || sub_root >= sub.order()) {
    throw GraphError(GraphErrorCode::VertexOutOfRange, "attachment vertex out of range");
  }
  const auto offset = static_cast<Vertex>(host.order());
  std::vector<Edge> edges = host.graph().edges();
  edges.reserve(host.order() + sub.order());
  for (const Edge& e : sub.graph().edges()) edges.push_back({e.u + offset, e.v + offset});
  edges.push_back({at, sub_root + offset});
  return Tree::from_edge_list(host.order() + sub.order(), edges);
}

Tree path_tree(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.push_back({static_cast<Vertex>(i - 1), static_cast<Vertex>(i)});
  return Tree::from_edge_list(n, edges);
}

Tree star_tree(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.push_back({0, static_cast<Vertex>(i)});
  return Tree::from_edge_list(leaves + 1, edges);
}

std::vector<Graph> unit_edit_neighbors(const Graph& g) {
  if (!g.is_connected()) throw GraphError(GraphErrorCode::Disconnected, "unit_edit_neighbors needs a connected graph");
  std::vector<Graph> out;
  for (const Edge& e : g.edges()) {
    Graph h = g.without_edge(e);
    if (h.is_connected()) out.push_back(std::move(h));
  }
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) out.push_back(g.with_edge({u, v}));
    }
  }
  return out;
}

}  // namespace topoidx
