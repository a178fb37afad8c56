#include "topoidx/indices.hpp"

#include <numeric>
#include <stdexcept>

namespace topoidx {

std::string to_string(IndexKind kind) {
  switch (kind) {
    case IndexKind::Wiener: return "W";
    case IndexKind::Randic: return "R";
    case IndexKind::Energy: return "E";
    case IndexKind::Ig: return "Ig";
    case IndexKind::Ifk: return "If";
    case IndexKind::AvgDistance: return "mu";
  }
  return "?";
}

IndexKind parse_index_kind(const std::string& name) {
  if (name == "W") return IndexKind::Wiener;
  if (name == "R") return IndexKind::Randic;
  if (name == "E") return IndexKind::Energy;
  if (name == "Ig") return IndexKind::Ig;
  if (name == "If") return IndexKind::Ifk;
  if (name == "mu") return IndexKind::AvgDistance;
  throw std::invalid_argument("unknown index kind '" + name + "'");
}

LogBase::LogBase(double base) : base_(base), ln_base_(std::log(base)) {
  if (!std::isfinite(base) || base <= 1.0) throw std::invalid_argument("log base must be finite and > 1");
}

namespace {

void require_edges(const Graph& g, const char* what) {
  if (g.size() == 0) throw GraphError(GraphErrorCode::InvalidArgument, std::string(what) + " needs at least one edge");
}

}  // namespace

std::int64_t wiener_bfs(const Graph& g) {
  std::int64_t total = 0;
  for (std::size_t v = 0; v < g.order(); ++v) {
    const auto dist = bfs_distances(g, static_cast<Vertex>(v));
    for (std::size_t w = v + 1; w < g.order(); ++w) total += static_cast<std::int64_t>(dist[w]);
  }
  return total;
}

std::int64_t wiener_edge_cut(const Tree& t) {
  const Graph& g = t.graph();
  const std::size_t n = g.order();
  std::vector<Vertex> order{0};
  std::vector<Vertex> parent(n, 0);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Vertex w : g.neighbors(order[head])) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = order[head];
        order.push_back(w);
      }
    }
  }
  std::vector<std::int64_t> below(n, 1);
  std::int64_t total = 0;
  for (std::size_t i = order.size(); i-- > 1;) {
    const Vertex v = order[i];
    total += below[v] * (static_cast<std::int64_t>(n) - below[v]);
    below[parent[v]] += below[v];
  }
  return total;
}

IndexValue wiener(const Graph& g) {
  return {IndexKind::Wiener, static_cast<double>(wiener_bfs(g)), std::nullopt, std::nullopt};
}

IndexValue randic(const Graph& g) {
  const auto deg = g.degrees();
  for (std::size_t v = 0; v < deg.size(); ++v) {
    if (deg[v] == 0) throw GraphError(GraphErrorCode::InvalidArgument, "Randic index undefined: isolated vertex " + std::to_string(v));
  }
  double sum = 0;
  for (const Edge& e : g.edges()) sum += 1.0 / std::sqrt(static_cast<double>(deg[e.u] * deg[e.v]));
  return {IndexKind::Randic, sum, std::nullopt, std::nullopt};
}

IndexValue energy(const Spectrum& spectrum) {
  return {IndexKind::Energy, spectrum.abs_sum(), std::nullopt, std::nullopt};
}

IndexValue energy(const Graph& g) { return energy(eigenvalues(g)); }

IndexValue ig_entropy(const Spectrum& spectrum, LogBase base) {
  const double e = spectrum.abs_sum();
  if (!(e > 0)) throw GraphError(GraphErrorCode::InvalidArgument, "Ig undefined for zero energy");
  double weighted = 0;
  for (double lambda : spectrum.eigenvalues) {
    const double a = std::fabs(lambda);
    if (a <= kZeroEigenvalueTol) continue;
    weighted += a * base.log(a);
  }
  return {IndexKind::Ig, base.log(e) - weighted / e, std::nullopt, base.value()};
}

IndexValue ig_entropy(const Graph& g, LogBase base) {
  require_edges(g, "Ig");
  return ig_entropy(eigenvalues(g), base);
}

IndexValue ifk_entropy(const Graph& g, int k, LogBase base) {
  require_edges(g, "If_k");
  if (k < 1) throw std::invalid_argument("If_k needs k >= 1");
  double total = 0;
  double weighted = 0;
  for (std::size_t d : g.degrees()) {
    if (d == 0) continue;
    const double dd = static_cast<double>(d);
    const double power = std::pow(dd, k);
    total += power;
    weighted += power * k * base.log(dd);
  }
  return {IndexKind::Ifk, base.log(total) - weighted / total, k, base.value()};
}

double shannon_entropy(std::span<const double> p, LogBase base) {
  double sum = 0;
  for (double x : p) {
    if (!(x >= 0) || !std::isfinite(x)) throw std::invalid_argument("probability entries must be finite and non-negative");
    sum += x;
  }
  if (std::fabs(sum - 1.0) > 1e-12) throw std::invalid_argument("probabilities must sum to 1");
  double h = 0;
  for (double x : p) {
    if (x > 0) h -= x * base.log(x);
  }
  return h;
}

IndexValue avg_distance(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) throw GraphError(GraphErrorCode::InvalidArgument, "average distance needs n >= 2");
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  return {IndexKind::AvgDistance, static_cast<double>(wiener_bfs(g)) / pairs, std::nullopt, std::nullopt};
}

IndexValue compute_index(const Graph& g, IndexKind kind, int k, LogBase base) {
  switch (kind) {
    case IndexKind::Wiener: return wiener(g);
    case IndexKind::Randic: return randic(g);
    case IndexKind::Energy: return energy(g);
    case IndexKind::Ig: return ig_entropy(g, base);
    case IndexKind::Ifk: return ifk_entropy(g, k, base);
    case IndexKind::AvgDistance: return avg_distance(g);
  }
  throw std::invalid_argument("unknown index kind");
}

}  // namespace topoidx
