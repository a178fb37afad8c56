#include "topoidx/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace topoidx {

namespace {

template <typename T>
std::vector<std::vector<T>> dense_adjacency(const Graph& g) {
  std::vector<std::vector<T>> a(g.order(), std::vector<T>(g.order(), T(0)));
  for (const Edge& e : g.edges()) {
    a[e.u][e.v] = T(1);
    a[e.v][e.u] = T(1);
  }
  return a;
}

template <typename T>
T off_diagonal_norm(const std::vector<std::vector<T>>& a) {
  T sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) sum += a[i][j] * a[i][j];
  }
  return std::sqrt(T(2) * sum);
}

// Cyclic Jacobi; returns eigenvalues sorted descending and the sweep count.
template <typename T>
std::pair<std::vector<T>, int> jacobi_eigenvalues(std::vector<std::vector<T>> a, const JacobiOptions& options) {
  const std::size_t n = a.size();
  int sweep = 0;
  while (sweep < options.max_sweeps && off_diagonal_norm(a) >= T(options.off_diagonal_threshold)) {
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const T apq = a[p][q];
        if (apq == T(0)) continue;
        const T theta = (a[q][q] - a[p][p]) / (T(2) * apq);
        const T t = (theta >= 0 ? T(1) : T(-1)) / (std::fabs(theta) + std::sqrt(theta * theta + T(1)));
        const T c = T(1) / std::sqrt(t * t + T(1));
        const T s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const T akp = a[k][p];
          const T akq = a[k][q];
          a[k][p] = a[p][k] = c * akp - s * akq;
          a[k][q] = a[q][k] = s * akp + c * akq;
        }
        a[p][p] -= t * apq;
        a[q][q] += t * apq;
        a[p][q] = a[q][p] = T(0);
      }
    }
  }
  std::vector<T> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a[i][i];
  std::sort(values.begin(), values.end(), std::greater<T>());
  return {std::move(values), sweep};
}

}  // namespace

double Spectrum::sum() const { return std::accumulate(eigenvalues.begin(), eigenvalues.end(), 0.0); }

double Spectrum::sum_of_squares() const {
  double s = 0;
  for (double x : eigenvalues) s += x * x;
  return s;
}

double Spectrum::abs_sum() const {
  double s = 0;
  for (double x : eigenvalues) s += std::fabs(x);
  return s;
}

Spectrum eigenvalues(const Graph& g, const JacobiOptions& options) {
  auto [values, sweeps] = jacobi_eigenvalues(dense_adjacency<double>(g), options);
  return Spectrum{std::move(values), g.order(), sweeps};
}

std::vector<long double> eigenvalues_extended(const Graph& g, const JacobiOptions& options) {
  return jacobi_eigenvalues(dense_adjacency<long double>(g), options).first;
}

long double CharPoly::evaluate(long double x) const {
  long double acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * x + it->convert_to<long double>();
  }
  return acc;
}

long double CharPoly::evaluation_scale(long double x) const {
  long double acc = 0;
  const long double ax = std::max(1.0L, std::fabs(x));
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * ax + boost::multiprecision::abs(*it).convert_to<long double>();
  }
  return acc;
}

std::string CharPoly::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coefficients_.size(); i-- > 0;) {
    const BigInt& c = coefficients_[i];
    if (c == 0) continue;
    const BigInt mag = boost::multiprecision::abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) out << mag;
    if (i >= 1) out << "x";
    if (i >= 2) out << "^" << i;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

CharPoly char_poly(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  // m holds M_k; am holds A * M_k.
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  std::vector<std::vector<BigInt>> am(n, std::vector<BigInt>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    if (k == 1) {
      for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    } else {
      m.swap(am);
      for (std::size_t i = 0; i < n; ++i) m[i][i] += c[n - k + 1];
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        BigInt s = 0;
        for (Vertex w : g.neighbors(static_cast<Vertex>(i))) s += m[w][j];
        am[i][j] = std::move(s);
      }
    }
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am[i][i];
    c[n - k] = -trace / static_cast<long>(k);
  }
  return CharPoly(std::move(c));
}

bool is_cospectral(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) {
    throw GraphError(GraphErrorCode::InvalidArgument, "cospectrality needs equal orders");
  }
  return char_poly(a) == char_poly(b);
}

}  // namespace topoidx
