#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "topoidx/graph.hpp"
#include "topoidx/spectral.hpp"
#include "topoidx/tree.hpp"

namespace topoidx {

enum class IndexKind { Wiener, Randic, Energy, Ig, Ifk, AvgDistance };

std::string to_string(IndexKind kind);
/// Accepts "W", "R", "E", "Ig", "If", "mu". Throws std::invalid_argument.
IndexKind parse_index_kind(const std::string& name);

/// Base of the logarithm used by entropies. Natural log unless stated.
class LogBase {
public:
  constexpr LogBase() = default;
  /// Throws std::invalid_argument unless base > 1 and finite.
  explicit LogBase(double base);

  static LogBase natural() { return LogBase(); }

  double value() const noexcept { return base_; }
  double log(double x) const { return std::log(x) / ln_base_; }

private:
  double base_ = 2.718281828459045;
  double ln_base_ = 1.0;
};

struct IndexValue {
  IndexKind kind;
  double value;
  std::optional<int> k;
  std::optional<double> log_base;
};

// Wiener index over unordered pairs.
std::int64_t wiener_bfs(const Graph& g);
/// Sum over edges of s(e) * (n - s(e)), s(e) the size of one side.
std::int64_t wiener_edge_cut(const Tree& t);
IndexValue wiener(const Graph& g);

IndexValue randic(const Graph& g);

IndexValue energy(const Graph& g);
IndexValue energy(const Spectrum& spectrum);

IndexValue ig_entropy(const Graph& g, LogBase base = {});
IndexValue ig_entropy(const Spectrum& spectrum, LogBase base = {});

IndexValue ifk_entropy(const Graph& g, int k, LogBase base = {});

/// -sum p_i log p_i. Throws std::invalid_argument on negative entries or sum != 1 (1e-12).
double shannon_entropy(std::span<const double> p, LogBase base = {});

IndexValue avg_distance(const Graph& g);

/// Convenience dispatch used by the CLI and the search layer.
IndexValue compute_index(const Graph& g, IndexKind kind, int k = 1, LogBase base = {});

}  // namespace topoidx
