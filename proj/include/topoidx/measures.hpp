#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "topoidx/graph.hpp"
#include "topoidx/indices.hpp"

namespace topoidx {

/// Width parameter of the Gaussian-type distance. Always strictly positive.
class SigmaParam {
public:
  /// Throws std::invalid_argument unless sigma > 0 and finite.
  explicit SigmaParam(double sigma);
  double value() const noexcept { return sigma_; }

private:
  double sigma_;
};

struct DistanceResult {
  std::optional<IndexKind> kind;
  double value_g;
  double value_h;
  double gap;
  /// 1 - exp(-(gap/sigma)^2), kept strictly below 1.
  double distance;
  /// exp(-(gap/sigma)^2). Stays ordered after `distance` has saturated in double.
  double similarity;
};

/// Strict order on distances that stays exact where `distance` saturates.
bool distance_less(const DistanceResult& a, const DistanceResult& b);

DistanceResult d_index(double value_g, double value_h, SigmaParam sigma);
DistanceResult d_index(const IndexValue& g, const IndexValue& h, SigmaParam sigma);

/// True iff gap_a >= gap_b, which for every sigma is the same as d(gap_a) >= d(gap_b).
/// Throws std::invalid_argument on a negative or non-finite gap.
bool dominates(double gap_a, double gap_b);

/// sum_i p'_i log(1 + 1/p'_i) + log(p'_i + 1). Entries must be strictly positive.
double theorem1_A(std::span<const double> p_prime, LogBase base = {});

/// 1 - exp(-A^2 / sigma^2).
double theorem1_bound(std::span<const double> p_prime, SigmaParam sigma, LogBase base = {});

/// True iff p_i <= p'_i for every i. Since both sum to one, acceptance forces p == p'.
bool theorem1_degeneracy(std::span<const double> p, std::span<const double> p_prime);

/// W(g - e) - W(g). Throws GraphError(Disconnected) when e is a bridge.
std::int64_t wiener_deletion_gap(const Graph& g, Edge e);

/// (sqrt(2) - 1) / 6, the leading coefficient of the Wiener growth under one deletion.
double theorem3_coefficient();

struct AsymptoticBound {
  double value;
  /// Lower-order terms are dropped; the value is never asserted against data.
  bool asymptotic = true;
};

/// Leading-term bound 1 - exp(-(c n^3)^2 / sigma^2). Throws on n < 2.
AsymptoticBound theorem3_bound(std::size_t n, SigmaParam sigma);

}  // namespace topoidx
