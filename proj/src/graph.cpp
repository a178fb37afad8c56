#include "topoidx/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace topoidx {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

Edge normalized(Edge e) { return e.u < e.v ? e : Edge{e.v, e.u}; }

}  // namespace

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.adjacency_.resize(n);
  g.edges_.reserve(edges.size());
  for (const Edge& raw : edges) {
    if (raw.u >= n || raw.v >= n) {
      std::ostringstream msg;
      msg << "vertex out of range in edge (" << raw.u << "," << raw.v << ") for n=" << n;
      throw GraphError(GraphErrorCode::VertexOutOfRange, msg.str());
    }
    if (raw.u == raw.v) {
      throw GraphError(GraphErrorCode::Loop, "loop at vertex " + std::to_string(raw.u));
    }
    g.edges_.push_back(normalized(raw));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    std::ostringstream msg;
    msg << "duplicate edge (" << dup->u << "," << dup->v << ")";
    throw GraphError(GraphErrorCode::DuplicateEdge, msg.str());
  }
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
  return g;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(order());
  for (std::size_t v = 0; v < order(); ++v) out[v] = adjacency_[v].size();
  return out;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) return false;
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

bool Graph::is_connected() const {
  if (order() == 0) return true;
  const auto dist = bfs_distances_unchecked(*this, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::size_t d) { return d == kUnreached; });
}

Graph Graph::without_edge(Edge e) const {
  const Edge key = normalized(e);
  std::vector<Edge> rest;
  rest.reserve(edges_.size());
  bool found = false;
  for (const Edge& x : edges_) {
    if (x == key) {
      found = true;
    } else {
      rest.push_back(x);
    }
  }
  if (!found) throw GraphError(GraphErrorCode::InvalidArgument, "edge not present");
  return from_edge_list(order(), rest);
}

Graph Graph::with_edge(Edge e) const {
  std::vector<Edge> all = edges_;
  all.push_back(e);
  return from_edge_list(order(), all);
}

std::vector<std::size_t> bfs_distances_unchecked(const Graph& g, Vertex source) {
  if (source >= g.order()) {
    throw GraphError(GraphErrorCode::VertexOutOfRange, "bfs source out of range");
  }
  std::vector<std::size_t> dist(g.order(), kUnreached);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  auto dist = bfs_distances_unchecked(g, source);
  std::vector<Vertex> unreachable;
  for (std::size_t v = 0; v < dist.size(); ++v) {
    if (dist[v] == kUnreached) unreachable.push_back(static_cast<Vertex>(v));
  }
  if (!unreachable.empty()) throw DisconnectedError(std::move(unreachable));
  return dist;
}

std::vector<std::vector<std::size_t>> all_pairs_distances(const Graph& g) {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) out.push_back(bfs_distances(g, static_cast<Vertex>(v)));
  return out;
}

Graph read_edge_list(std::istream& in) {
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) {
    throw GraphError(GraphErrorCode::BadFormat, "expected header 'n m'");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = -1;
    long long v = -1;
    if (!(in >> u >> v)) {
      throw GraphError(GraphErrorCode::BadFormat, "expected " + std::to_string(m) + " edge lines, got " + std::to_string(i));
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError(GraphErrorCode::VertexOutOfRange,
                       "vertex out of range on edge line " + std::to_string(i + 1));
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  std::string trailing;
  if (in >> trailing) throw GraphError(GraphErrorCode::BadFormat, "trailing data after edge list");
  return Graph::from_edge_list(static_cast<std::size_t>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError(GraphErrorCode::BadFormat, "cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace topoidx
