#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace topoidx {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class GraphErrorCode {
  VertexOutOfRange,
  DuplicateEdge,
  Loop,
  Disconnected,
  NotATree,
  BadFormat,
  InvalidArgument,
};

class GraphError : public std::runtime_error {
public:
  GraphError(GraphErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  GraphErrorCode code() const noexcept { return code_; }

private:
  GraphErrorCode code_;
};

/// Thrown when a traversal cannot reach every vertex.
class DisconnectedError : public GraphError {
public:
  DisconnectedError(std::vector<Vertex> unreachable)
      : GraphError(GraphErrorCode::Disconnected, "graph is disconnected"),
        unreachable_(std::move(unreachable)) {}

  const std::vector<Vertex>& unreachable() const noexcept { return unreachable_; }

private:
  std::vector<Vertex> unreachable_;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are stored once, normalized to u < v and sorted. Adjacency lists are
/// sorted ascending. Immutable after construction.
class Graph {
public:
  Graph() = default;

  /// Validates and builds. Throws GraphError (VertexOutOfRange, Loop, DuplicateEdge).
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);
  static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  std::vector<std::size_t> degrees() const;

  bool has_edge(Vertex u, Vertex v) const;
  bool is_connected() const;

  /// Copy with `e` removed / added. Throws GraphError if absent / present.
  Graph without_edge(Edge e) const;
  Graph with_edge(Edge e) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.order() == b.order(); }

private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

/// Hop distances from `source`. Throws DisconnectedError listing unreachable vertices.
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);

/// Same as bfs_distances but marks unreachable vertices with SIZE_MAX instead of throwing.
std::vector<std::size_t> bfs_distances_unchecked(const Graph& g, Vertex source);

/// All-pairs hop distances (row per source). Throws DisconnectedError.
std::vector<std::vector<std::size_t>> all_pairs_distances(const Graph& g);

/// Edge-list text format: "n m" then m lines "u v".
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace topoidx
