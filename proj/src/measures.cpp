#include "topoidx/measures.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace topoidx {

namespace {

constexpr double kExponentCap = 700.0;

// -expm1(-x) for x >= 0, clamped into [0, 1).
double gaussian_distance(double x) {
  if (x > kExponentCap) return std::nextafter(1.0, 0.0);
  const double d = -std::expm1(-x);
  return d < 1.0 ? d : std::nextafter(1.0, 0.0);
}

void require_probability_vector(std::span<const double> p, const char* name) {
  double sum = 0;
  for (double x : p) {
    if (!std::isfinite(x) || x < 0 || x > 1) throw std::invalid_argument(std::string(name) + " has an entry outside [0,1]");
    sum += x;
  }
  if (p.empty() || std::fabs(sum - 1.0) > 1e-12) throw std::invalid_argument(std::string(name) + " does not sum to 1");
}

}  // namespace

SigmaParam::SigmaParam(double sigma) : sigma_(sigma) {
  if (!std::isfinite(sigma) || sigma <= 0) throw std::invalid_argument("sigma must be finite and > 0");
}

DistanceResult d_index(double value_g, double value_h, SigmaParam sigma) {
  if (!std::isfinite(value_g) || !std::isfinite(value_h)) throw std::invalid_argument("index values must be finite");
  const double gap = std::fabs(value_g - value_h);
  const double scaled = gap / sigma.value();
  double d = gaussian_distance(scaled * scaled);
  if (gap > 0 && d == 0) d = std::numeric_limits<double>::denorm_min();
  return {std::nullopt, value_g, value_h, gap, d, std::exp(-scaled * scaled)};
}

bool distance_less(const DistanceResult& a, const DistanceResult& b) {
  if (a.distance != b.distance) return a.distance < b.distance;
  return a.similarity > b.similarity;
}

DistanceResult d_index(const IndexValue& g, const IndexValue& h, SigmaParam sigma) {
  if (g.kind != h.kind) throw std::invalid_argument("index kinds differ");
  DistanceResult r = d_index(g.value, h.value, sigma);
  r.kind = g.kind;
  return r;
}

bool dominates(double gap_a, double gap_b) {
  if (!(gap_a >= 0) || !(gap_b >= 0) || !std::isfinite(gap_a) || !std::isfinite(gap_b)) {
    throw std::invalid_argument("gaps must be finite and non-negative");
  }
  return gap_a >= gap_b;
}

double theorem1_A(std::span<const double> p_prime, LogBase base) {
  require_probability_vector(p_prime, "p'");
  double a = 0;
  for (double p : p_prime) {
    if (!(p > 0)) throw std::invalid_argument("p' entries must be strictly positive");
    a += p * base.log(1.0 + 1.0 / p) + base.log(p + 1.0);
  }
  return a;
}

double theorem1_bound(std::span<const double> p_prime, SigmaParam sigma, LogBase base) {
  const double scaled = theorem1_A(p_prime, base) / sigma.value();
  return gaussian_distance(scaled * scaled);
}

bool theorem1_degeneracy(std::span<const double> p, std::span<const double> p_prime) {
  require_probability_vector(p, "p");
  require_probability_vector(p_prime, "p'");
  if (p.size() != p_prime.size()) throw std::invalid_argument("probability vectors differ in length");
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > p_prime[i]) return false;
  }
  return true;
}

std::int64_t wiener_deletion_gap(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) throw GraphError(GraphErrorCode::InvalidArgument, "edge not present");
  const Graph h = g.without_edge(e);
  if (!h.is_connected()) throw GraphError(GraphErrorCode::Disconnected, "edge is a bridge");
  return wiener_bfs(h) - wiener_bfs(g);
}

double theorem3_coefficient() { return (std::sqrt(2.0) - 1.0) / 6.0; }

AsymptoticBound theorem3_bound(std::size_t n, SigmaParam sigma) {
  if (n < 2) throw std::invalid_argument("theorem 3 bound needs n >= 2");
  const double nn = static_cast<double>(n);
  const double scaled = theorem3_coefficient() * nn * nn * nn / sigma.value();
  return {gaussian_distance(scaled * scaled), true};
}

}  // namespace topoidx
