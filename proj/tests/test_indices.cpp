#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>
#include <random>

#include "oracles.hpp"
#include "topoidx/construct.hpp"
#include "topoidx/enumerate.hpp"
#include "topoidx/indices.hpp"

using namespace topoidx;

namespace {

Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
  return Graph::from_edge_list(n, edges);
}

}  // namespace

TEST_CASE("wiener") {
  CHECK(wiener(path_tree(4).graph()).value == 10);
  CHECK(wiener(star_tree(3).graph()).value == 9);
  CHECK(wiener(path_tree(5).graph()).value == 20);
  CHECK(wiener_bfs(cycle(4)) == 8);
  CHECK_THROWS_AS(wiener(Graph::from_edge_list(3, {{0, 1}})), DisconnectedError);
}

TEST_CASE("wiener strategies agree on every tree up to 12 vertices") {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (const Tree& t : enumerate_trees(n)) {
      const auto bfs = wiener_bfs(t.graph());
      REQUIRE(bfs == wiener_edge_cut(t));
      if (n <= 8) REQUIRE(bfs == oracle::floyd_wiener(t.graph()));
    }
  }
  for (std::size_t n = 2; n <= 30; ++n) {
    // C(n+1, 3) for paths
    CHECK(wiener_bfs(path_tree(n).graph()) == static_cast<std::int64_t>((n + 1) * n * (n - 1) / 6));
  }
}

TEST_CASE("randic") {
  CHECK(randic(star_tree(4).graph()).value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(randic(path_tree(4).graph()).value == doctest::Approx(0.5 + std::sqrt(2.0)).epsilon(1e-12));
  CHECK(randic(path_tree(3).graph()).value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(randic(Graph::from_edge_list(3, {{0, 1}})), GraphError);

  for (std::size_t q = 1; q <= 12; ++q) CHECK(std::fabs(randic(star_tree(q).graph()).value - std::sqrt(q)) <= 1e-12);
  for (std::size_t n = 3; n <= 20; ++n) {
    const double expected = (static_cast<double>(n) - 3.0) / 2.0 + std::sqrt(2.0);
    CHECK(std::fabs(randic(path_tree(n).graph()).value - expected) <= 1e-12);
  }
}

TEST_CASE("energy") {
  CHECK(energy(path_tree(2).graph()).value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(energy(star_tree(3).graph()).value == doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-12));
  CHECK(energy(path_tree(4).graph()).value == doctest::Approx(2.0 * std::sqrt(5.0)).epsilon(1e-12));
  CHECK(energy(Graph::from_edge_list(3, std::span<const Edge>{})).value == 0.0);

  for (std::size_t n = 2; n <= 9; ++n) {
    for (const Tree& t : enumerate_trees(n)) {
      const Spectrum s = eigenvalues(t.graph());
      double positive = 0;
      for (double x : s.eigenvalues) positive += x > 0 ? x : 0;
      REQUIRE(std::fabs(energy(s).value - 2 * positive) <= 1e-9);
    }
  }
}

TEST_CASE("ig entropy") {
  CHECK(ig_entropy(path_tree(2).graph()).value == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(ig_entropy(star_tree(3).graph()).value == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(ig_entropy(star_tree(5).graph()).value == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  for (std::size_t q = 2; q <= 12; ++q) {
    CHECK(std::fabs(ig_entropy(star_tree(q).graph()).value - std::log(2.0)) <= 1e-9);
    CHECK(std::fabs(ig_entropy(star_tree(q).graph(), LogBase(2.0)).value - 1.0) <= 1e-9);
  }
  CHECK_THROWS_AS(ig_entropy(Graph::from_edge_list(2, std::span<const Edge>{})), GraphError);
}

TEST_CASE("ifk entropy") {
  const double p4 = std::log(6.0) - 4.0 * std::log(2.0) / 6.0;
  const double k13 = std::log(6.0) - 3.0 * std::log(3.0) / 6.0;
  CHECK(ifk_entropy(path_tree(4).graph(), 1).value == doctest::Approx(p4).epsilon(1e-12));
  CHECK(ifk_entropy(star_tree(3).graph(), 1).value == doctest::Approx(k13).epsilon(1e-12));
  CHECK(p4 == doctest::Approx(1.329661).epsilon(1e-6));
  CHECK(k13 == doctest::Approx(1.242453).epsilon(1e-6));

  // Direct Shannon form: p_i = d_i^k / sum d^k.
  std::mt19937 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const Tree t = oracle::random_tree(2 + trial % 15, rng);
    for (int k = 1; k <= 5; ++k) {
      std::vector<double> p;
      double total = 0;
      for (std::size_t d : t.graph().degrees()) total += std::pow(static_cast<double>(d), k);
      for (std::size_t d : t.graph().degrees()) p.push_back(std::pow(static_cast<double>(d), k) / total);
      double s = 0;
      for (double x : p) s += x;
      for (double& x : p) x /= s;
      REQUIRE(std::fabs(ifk_entropy(t.graph(), k).value - shannon_entropy(p)) <= 1e-9);
    }
  }
  CHECK_THROWS_AS(ifk_entropy(path_tree(3).graph(), 0), std::invalid_argument);
}

TEST_CASE("ifk depends only on the degree multiset") {
  std::map<std::vector<std::size_t>, std::vector<Tree>> by_degrees;
  for (const Tree& t : enumerate_trees(10)) {
    auto d = t.graph().degrees();
    std::sort(d.begin(), d.end());
    by_degrees[d].push_back(t);
  }
  std::size_t compared = 0;
  for (const auto& [deg, trees] : by_degrees) {
    for (std::size_t i = 1; i < trees.size(); ++i) {
      for (int k = 1; k <= 5; ++k) {
        REQUIRE(std::fabs(ifk_entropy(trees[0].graph(), k).value - ifk_entropy(trees[i].graph(), k).value) <= 1e-12);
      }
      ++compared;
    }
  }
  CHECK(compared > 0);
}

TEST_CASE("shannon entropy") {
  const std::vector<double> one{1.0};
  const std::vector<double> bit{0.5, 0.5};
  const std::vector<double> four{0.25, 0.25, 0.25, 0.25};
  CHECK(shannon_entropy(one) == 0.0);
  CHECK(shannon_entropy(bit, LogBase(2.0)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(shannon_entropy(four) == doctest::Approx(std::log(4.0)).epsilon(1e-15));
  const std::vector<double> with_zero{0.0, 1.0};
  CHECK(shannon_entropy(with_zero) == 0.0);

  const std::vector<double> negative{-0.5, 1.5};
  const std::vector<double> short_sum{0.5, 0.4};
  CHECK_THROWS_AS(shannon_entropy(negative), std::invalid_argument);
  CHECK_THROWS_AS(shannon_entropy(short_sum), std::invalid_argument);

  std::mt19937 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> p(1 + trial % 9);
    double s = 0;
    for (double& x : p) s += (x = u(rng));
    for (double& x : p) x /= s;
    double sum = 0;
    for (double x : p) sum += x;
    p.back() += 1.0 - sum;
    REQUIRE(shannon_entropy(p) <= std::log(static_cast<double>(p.size())) + 1e-12);
  }
}

TEST_CASE("average distance") {
  CHECK(avg_distance(path_tree(2).graph()).value == 1.0);
  CHECK(avg_distance(cycle(4)).value == doctest::Approx(8.0 / 6.0).epsilon(1e-12));
  CHECK(avg_distance(path_tree(4).graph()).value == doctest::Approx(10.0 / 6.0).epsilon(1e-12));
  CHECK_THROWS_AS(avg_distance(path_tree(1).graph()), GraphError);
}

TEST_CASE("index kinds parse") {
  for (const char* k : {"W", "R", "E", "Ig", "If", "mu"}) CHECK(to_string(parse_index_kind(k)) == k);
  CHECK_THROWS_AS(parse_index_kind("X"), std::invalid_argument);
  CHECK_THROWS_AS(LogBase(1.0), std::invalid_argument);
}
