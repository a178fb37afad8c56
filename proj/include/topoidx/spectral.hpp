#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "topoidx/graph.hpp"

namespace topoidx {

using BigInt = boost::multiprecision::cpp_int;

/// Eigenvalues at or below this magnitude are treated as zero.
inline constexpr double kZeroEigenvalueTol = 1e-9;

struct JacobiOptions {
  /// Stop once the off-diagonal Frobenius norm falls below this.
  double off_diagonal_threshold = 1e-12;
  int max_sweeps = 100;
};

/// Adjacency eigenvalues sorted descending.
struct Spectrum {
  std::vector<double> eigenvalues;
  std::size_t order = 0;
  int sweeps = 0;

  double sum() const;
  double sum_of_squares() const;
  double abs_sum() const;
};

Spectrum eigenvalues(const Graph& g, const JacobiOptions& options = {});

/// Same solver carried out in long double; used to re-certify close energy values.
std::vector<long double> eigenvalues_extended(const Graph& g, const JacobiOptions& options = {});

/// Characteristic polynomial det(xI - A) with exact integer coefficients.
class CharPoly {
public:
  CharPoly() = default;
  explicit CharPoly(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients)) {}

  /// coefficient(i) multiplies x^i.
  const BigInt& coefficient(std::size_t i) const { return coefficients_.at(i); }
  const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }
  std::size_t degree() const noexcept { return coefficients_.empty() ? 0 : coefficients_.size() - 1; }

  long double evaluate(long double x) const;
  /// Sum of |c_i| max(1, |x|)^i; evaluate(x) at an approximate root is small relative to this.
  long double evaluation_scale(long double x) const;

  /// e.g. "x^4 - 3x^2 + 1".
  std::string to_string() const;

  friend bool operator==(const CharPoly&, const CharPoly&) = default;

private:
  std::vector<BigInt> coefficients_;
};

/// Faddeev-LeVerrier over exact integers.
CharPoly char_poly(const Graph& g);

/// Throws GraphError(InvalidArgument) when orders differ.
bool is_cospectral(const Graph& a, const Graph& b);

}  // namespace topoidx
