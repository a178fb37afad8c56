#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "topoidx/construct.hpp"
#include "topoidx/enumerate.hpp"
#include "topoidx/spectral.hpp"

using namespace topoidx;

namespace {

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

void check_values(const Spectrum& s, const std::vector<double>& expected) {
  REQUIRE(s.eigenvalues.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(s.eigenvalues[i] == doctest::Approx(expected[i]).epsilon(1e-12));
}

std::vector<BigInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("eigenvalues of small trees") {
  check_values(eigenvalues(path_tree(2).graph()), {1.0, -1.0});
  check_values(eigenvalues(star_tree(3).graph()), {std::sqrt(3.0), 0.0, 0.0, -std::sqrt(3.0)});
  check_values(eigenvalues(path_tree(4).graph()), {kPhi, kPhi - 1.0, 1.0 - kPhi, -kPhi});
  check_values(eigenvalues(path_tree(1).graph()), {0.0});
}

TEST_CASE("path spectra match 2 cos(pi k / (n+1))") {
  for (std::size_t n = 2; n <= 30; ++n) {
    const Spectrum s = eigenvalues(path_tree(n).graph());
    for (std::size_t k = 1; k <= n; ++k) {
      const double expected = 2.0 * std::cos(M_PI * static_cast<double>(k) / static_cast<double>(n + 1));
      REQUIRE(std::fabs(s.eigenvalues[k - 1] - expected) <= 1e-10);
    }
  }
}

TEST_CASE("char_poly of small trees") {
  CHECK(char_poly(path_tree(2).graph()).coefficients() == ints({-1, 0, 1}));
  CHECK(char_poly(star_tree(3).graph()).coefficients() == ints({0, 0, -3, 0, 1}));
  CHECK(char_poly(path_tree(4).graph()).coefficients() == ints({1, 0, -3, 0, 1}));
  CHECK(char_poly(path_tree(4).graph()).to_string() == "x^4 - 3x^2 + 1");
}

TEST_CASE("char_poly structure and big coefficients") {
  // Path recurrence p_n = x p_{n-1} - p_{n-2}, carried out on BigInt vectors.
  std::vector<BigInt> prev{1};
  std::vector<BigInt> cur{0, 1};
  for (std::size_t n = 2; n <= 40; ++n) {
    std::vector<BigInt> next(n + 1);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = cur;
    cur = next;
    if (n % 13 == 0) CHECK(char_poly(path_tree(n).graph()).coefficients() == cur);
  }
  // A 30-leaf double star has coefficients well beyond the pattern check; compare with the spectrum.
  std::mt19937 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const Tree t = oracle::random_tree(24, rng);
    const CharPoly p = char_poly(t.graph());
    CHECK(p.coefficient(24) == 1);
    CHECK(p.coefficient(23) == 0);
    CHECK(p.coefficient(22) == -static_cast<long>(t.graph().size()));
  }
}

TEST_CASE("is_cospectral") {
  const Graph p4 = path_tree(4).graph();
  const Graph p4b = Graph::from_edge_list(4, {{3, 1}, {1, 0}, {0, 2}});
  CHECK(is_cospectral(p4, p4b));
  CHECK_FALSE(is_cospectral(p4, star_tree(3).graph()));
  CHECK_FALSE(is_cospectral(path_tree(5).graph(), star_tree(4).graph()));
  CHECK_THROWS_AS(is_cospectral(p4, path_tree(5).graph()), GraphError);
}

TEST_CASE("spectral invariants on every tree up to 10 vertices") {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const Tree& t : enumerate_trees(n)) {
      const Spectrum s = eigenvalues(t.graph());
      REQUIRE(std::fabs(s.sum()) <= 1e-9);
      REQUIRE(std::fabs(s.sum_of_squares() - 2.0 * static_cast<double>(n - 1)) <= 1e-9);
      for (std::size_t i = 0; i < n; ++i) REQUIRE(std::fabs(s.eigenvalues[i] + s.eigenvalues[n - 1 - i]) <= 1e-9);
      const CharPoly p = char_poly(t.graph());
      for (double lambda : s.eigenvalues) REQUIRE(std::fabs(p.evaluate(lambda)) <= 1e-6 * p.evaluation_scale(lambda));
    }
  }
}

TEST_CASE("isomorphic trees are cospectral") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    const Tree t = oracle::random_tree(5 + trial % 10, rng);
    const Graph moved = oracle::relabel(t.graph(), oracle::random_permutation(t.order(), rng));
    REQUIRE(is_cospectral(t.graph(), moved));
  }
}

TEST_CASE("extended precision solver agrees") {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Tree t = oracle::random_tree(15, rng);
    const Spectrum s = eigenvalues(t.graph());
    const auto ext = eigenvalues_extended(t.graph(), {1e-15, 200});
    for (std::size_t i = 0; i < ext.size(); ++i) REQUIRE(std::fabs(static_cast<double>(ext[i]) - s.eigenvalues[i]) <= 1e-10);
  }
}
