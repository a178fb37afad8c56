#include "topoidx/tree.hpp"

#include <algorithm>

namespace topoidx {

Tree::Tree(Graph g) : graph_(std::move(g)) {
  if (graph_.order() == 0 || graph_.size() + 1 != graph_.order() || !graph_.is_connected()) {
    throw GraphError(GraphErrorCode::NotATree, "graph is not a tree");
  }
  code_ = ahu_code(graph_);
}

std::string Tree::code_hex() const { return to_hex(code_); }

namespace {

// BFS order from root plus parent links; parent[root] == root.
void root_tree(const Graph& tree, Vertex root, std::vector<Vertex>& order, std::vector<Vertex>& parent) {
  const std::size_t n = tree.order();
  order.clear();
  order.reserve(n);
  parent.assign(n, root);
  std::vector<bool> seen(n, false);
  order.push_back(root);
  seen[root] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Vertex u = order[head];
    for (Vertex w : tree.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = u;
        order.push_back(w);
      }
    }
  }
}

}  // namespace

std::vector<Vertex> centroids(const Graph& tree) {
  const std::size_t n = tree.order();
  if (n == 0) return {};
  std::vector<Vertex> order;
  std::vector<Vertex> parent;
  root_tree(tree, 0, order, parent);
  std::vector<std::size_t> subtree(n, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (*it != 0) subtree[parent[*it]] += subtree[*it];
  }
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t heaviest = n - subtree[v];
    for (Vertex w : tree.neighbors(static_cast<Vertex>(v))) {
      if (w != 0 && parent[w] == v) heaviest = std::max(heaviest, subtree[w]);
    }
    if (2 * heaviest <= n) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

CanonicalCode rooted_ahu_code(const Graph& tree, Vertex root) {
  const std::size_t n = tree.order();
  std::vector<Vertex> order;
  std::vector<Vertex> parent;
  root_tree(tree, root, order, parent);

  std::vector<CanonicalCode> codes(n);
  std::vector<std::vector<Vertex>> children(n);
  for (Vertex v : order) {
    if (v != root) children[parent[v]].push_back(v);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    auto& kids = children[v];
    std::sort(kids.begin(), kids.end(), [&](Vertex a, Vertex b) { return codes[a] < codes[b]; });
    CanonicalCode& code = codes[v];
    code.push_back(0x01);
    for (Vertex c : kids) {
      code.insert(code.end(), codes[c].begin(), codes[c].end());
      CanonicalCode().swap(codes[c]);
    }
    code.push_back(0x00);
  }
  return codes[root];
}

CanonicalCode ahu_code(const Graph& tree) {
  const auto roots = centroids(tree);
  CanonicalCode best = rooted_ahu_code(tree, roots.front());
  if (roots.size() == 2) best = std::min(best, rooted_ahu_code(tree, roots[1]));
  return best;
}

std::string to_hex(const CanonicalCode& code) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(code.size() * 2);
  for (std::uint8_t b : code) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xF]);
  }
  return out;
}

CanonicalCode from_hex(const std::string& hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  if (hex.size() % 2 != 0) throw GraphError(GraphErrorCode::BadFormat, "odd-length hex code");
  CanonicalCode out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    const int hi = nibble(hex[i]);
    const int lo = nibble(hex[i + 1]);
    if (hi < 0 || lo < 0) throw GraphError(GraphErrorCode::BadFormat, "invalid hex digit in code");
    out.push_back(static_cast<std::uint8_t>(hi * 16 + lo));
  }
  return out;
}

Tree tree_from_code(const CanonicalCode& code) {
  std::vector<Edge> edges;
  std::vector<Vertex> stack;
  Vertex next = 0;
  for (std::uint8_t b : code) {
    if (b == 0x01) {
      if (!stack.empty()) edges.push_back({stack.back(), next});
      else if (next != 0) throw GraphError(GraphErrorCode::BadFormat, "code has more than one root");
      stack.push_back(next++);
    } else if (b == 0x00 && !stack.empty()) {
      stack.pop_back();
    } else {
      throw GraphError(GraphErrorCode::BadFormat, "malformed canonical code");
    }
  }
  if (!stack.empty() || next == 0) throw GraphError(GraphErrorCode::BadFormat, "unbalanced canonical code");
  return Tree::from_edge_list(next, edges);
}

}  // namespace topoidx
