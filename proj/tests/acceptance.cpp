// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "topoidx/construct.hpp"
#include "topoidx/enumerate.hpp"
#include "topoidx/indices.hpp"
#include "topoidx/measures.hpp"
#include "topoidx/search.hpp"
#include "topoidx/spectral.hpp"

using namespace topoidx;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream notes;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      if (ok) notes << "; failed: ";
      else notes << ", ";
      notes << what;
      ok = false;
    }
  }
  void near(double got, double want, double tol, const std::string& what) {
    expect(std::fabs(got - want) <= tol, what);
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double time_limit_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (time_limit_s > 0) c.expect(secs < time_limit_s, "runtime over " + std::to_string(time_limit_s) + " s");
  if (!c.ok) ++failures;
  std::printf("AC%d %s  %s (%.3f s)%s\n", id, c.ok ? "PASS" : "FAIL", title.c_str(), secs, c.notes.str().c_str());
}

void closed_form_suite(Check& c) {
  c.near(wiener(path_tree(5).graph()).value, 20, 1e-9, "W(P5)");
  c.near(wiener(star_tree(3).graph()).value, 9, 1e-9, "W(K1,3)");
  for (std::size_t q = 1; q <= 12; ++q) c.near(randic(star_tree(q).graph()).value, std::sqrt(q), 1e-9, "R(K1,q)");
  c.near(randic(path_tree(4).graph()).value, 0.5 + std::sqrt(2.0), 1e-9, "R(P4)");
  c.near(energy(star_tree(3).graph()).value, 2 * std::sqrt(3.0), 1e-9, "E(K1,3)");
  c.near(energy(path_tree(4).graph()).value, 2 * std::sqrt(5.0), 1e-9, "E(P4)");
  for (std::size_t q = 2; q <= 12; ++q) c.near(ig_entropy(star_tree(q).graph()).value, std::log(2.0), 1e-9, "Ig(K1,q)");
  const CharPoly p4 = char_poly(path_tree(4).graph());
  c.expect(p4.coefficients() == std::vector<BigInt>{1, 0, -3, 0, 1}, "charpoly(P4)");
}

void caterpillar_identities(Check& c) {
  SearchConfig cfg;
  cfg.scan_limit = 64;
  cfg.fixed_t = 4;
  cfg.perfect_squares_only = true;
  const auto res = caterpillar_scan(cfg);
  auto find = [&](std::array<int, 4> a, std::array<int, 4> b) -> const CollisionPair* {
    for (const auto& p : res.pairs) {
      const auto& m = *p.caterpillar;
      const std::array<int, 4> f{m.first.x, m.first.y, m.first.z, m.first.t};
      const std::array<int, 4> s{m.second.x, m.second.y, m.second.z, m.second.t};
      if ((f == a && s == b) || (f == b && s == a)) return &p;
    }
    return nullptr;
  };
  const CollisionPair* one = find({9, 4, 9, 4}, {4, 16, 4, 4});
  const CollisionPair* two = find({36, 36, 4, 4}, {64, 9, 9, 4});
  c.expect(one != nullptr, "pair (9,4,9,4)/(4,16,4,4) missing");
  c.expect(two != nullptr, "pair (36,36,4,4)/(64,9,9,4) missing");
  for (const CollisionPair* p : {one, two}) {
    if (!p) continue;
    c.expect(p->caterpillar->exact_equal == std::optional<bool>(true), "exact rational gap not zero");
  }
  if (one) {
    const double spine_gap = std::fabs(one->caterpillar->spine_if1_first - one->caterpillar->spine_if1_second);
    const double paper_gap = std::fabs(18 * std::log(9.0) + 8 * std::log(4.0) - 16 * std::log(16.0) - 12 * std::log(4.0));
    c.near(spine_gap, paper_gap, 1e-9, "spine If1 sums");
    c.expect(spine_gap > 10, "If1 spine gap <= 10");
  }
}

void conjecture1_refutation(Check& c) {
  for (std::size_t n = 4; n <= 16; ++n) {
    const auto pairs = find_equal_wiener_pairs(n);
    const auto it = std::find_if(pairs.begin(), pairs.end(), [](const CollisionPair& p) { return p.secondary_gaps.at("R") > 1e-6; });
    if (it == pairs.end()) continue;
    const auto rep = verify_conjecture(1, n);
    const bool listed = std::any_of(rep.violations.begin(), rep.violations.end(), [&](const ViolationRecord& v) {
      return v.code_first == std::min(it->first.code_hex, it->second.code_hex) &&
             v.code_second == std::max(it->first.code_hex, it->second.code_hex) && v.gap_a == 0;
    });
    c.expect(listed, "equal-Wiener pair not reported by the verifier");
    const Tree a = it->first.to_tree();
    const Tree b = it->second.to_tree();
    c.expect(wiener_bfs(a.graph()) == wiener_edge_cut(b), "dual Wiener recheck");
    for (double sigma : {0.1, 1.0, 10.0}) {
      const auto dw = d_index(wiener(a.graph()), wiener(b.graph()), SigmaParam(sigma));
      const auto dr = d_index(randic(a.graph()), randic(b.graph()), SigmaParam(sigma));
      c.expect(dw.distance < dr.distance, "d_W < d_R at sigma " + std::to_string(sigma));
    }
    c.notes << " smallest n = " << n << ", |dR| = " << it->secondary_gaps.at("R");
    return;
  }
  c.expect(false, "no equal-Wiener pair up to n = 16");
}

void verifier_scale(Check& c) {
  std::vector<TreeProfile> profiles;
  for (const Tree& t : enumerate_trees(10)) profiles.push_back(profile_tree(t));
  for (int id : {1, 2, 3}) {
    const auto rep = verify_conjecture(id, 10);
    c.expect(rep.trees == 106 && rep.pairs_total == 5565, "tree/pair counts for conjecture " + std::to_string(id));
    const auto [ka, kb] = conjecture_indices(id);
    for (const auto& v : rep.violations) {
      const Tree a = tree_from_code(from_hex(v.code_first));
      const Tree b = tree_from_code(from_hex(v.code_second));
      const double ga = std::fabs(compute_index(a.graph(), ka).value - compute_index(b.graph(), ka).value);
      const double gb = std::fabs(compute_index(a.graph(), kb).value - compute_index(b.graph(), kb).value);
      c.near(gb - ga, v.margin, 1e-12, "violation replay");
    }
    c.notes << " c" << id << ":" << rep.violations.size();
  }
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::size_t> pick(0, profiles.size() - 1);
  for (int s = 0; s < 100; ++s) {
    const std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    while (j == i) j = pick(rng);
    const Graph& a = profiles[i].tree.graph();
    const Graph& b = profiles[j].tree.graph();
    for (IndexKind k : {IndexKind::Wiener, IndexKind::Randic, IndexKind::Energy, IndexKind::Ig, IndexKind::Ifk}) {
      const double stored = std::fabs(profile_value(profiles[i], k) - profile_value(profiles[j], k));
      const double direct = std::fabs(compute_index(a, k).value - compute_index(b, k).value);
      c.near(stored, direct, 1e-12, "sampled gap replay");
    }
  }
}

void enumeration(Check& c) {
  const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto start = std::chrono::steady_clock::now();
    const auto trees = enumerate_trees(n);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (n == 12) c.expect(secs < 10, "n = 12 enumeration over 10 s");
    c.expect(trees.size() == expected[n - 1], "count at n = " + std::to_string(n));
    std::set<CanonicalCode> codes;
    for (const auto& t : trees) codes.insert(t.code());
    c.expect(codes.size() == trees.size(), "duplicate at n = " + std::to_string(n));
    if (n <= 8) {
      std::set<std::uint64_t> want;
      for (const auto& g : oracle::generate_and_dedup_trees(n)) want.insert(oracle::brute_canonical(g));
      std::set<std::uint64_t> got;
      for (const auto& t : trees) got.insert(oracle::brute_canonical(t.graph()));
      c.expect(got == want, "oracle mismatch at n = " + std::to_string(n));
    }
  }
}

void spectral_invariants(Check& c) {
  double worst_residual = 0;
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const Tree& t : enumerate_trees(n)) {
      const Spectrum s = eigenvalues(t.graph());
      c.expect(std::fabs(s.sum()) <= 1e-9, "trace");
      c.expect(std::fabs(s.sum_of_squares() - 2.0 * static_cast<double>(n - 1)) <= 1e-9, "sum of squares");
      for (std::size_t i = 0; i < n; ++i) c.expect(std::fabs(s.eigenvalues[i] + s.eigenvalues[n - 1 - i]) <= 1e-9, "symmetry");
      const CharPoly p = char_poly(t.graph());
      for (double lambda : s.eigenvalues) {
        const double rel = static_cast<double>(std::fabs(p.evaluate(lambda)) / p.evaluation_scale(lambda));
        worst_residual = std::max(worst_residual, rel);
      }
    }
  }
  c.expect(worst_residual <= 1e-6, "char poly residual");
  c.notes << " worst relative residual " << worst_residual;
}

void further_results(Check& c) {
  std::size_t edges_checked = 0;
  for (std::size_t n = 3; n <= 8; ++n) {
    for (const Tree& t : enumerate_trees(n)) {
      for (const Graph& g : unit_edit_neighbors(t.graph())) {
        if (g.size() != n) continue;
        for (const Edge& e : g.edges()) {
          if (!g.without_edge(e).is_connected()) continue;
          c.expect(wiener_deletion_gap(g, e) >= 1, "deletion gap below 1");
          ++edges_checked;
        }
      }
    }
  }
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u(0.001, 1.0);
  std::size_t accepted = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<double> p(2 + trial % 8);
    double s = 0;
    for (double& x : p) s += (x = u(rng));
    for (double& x : p) x /= s;
    std::vector<double> q = p;
    if (trial % 3 == 1) {
      for (double& x : q) x = u(rng);
      double t = 0;
      for (double x : q) t += x;
      for (double& x : q) x /= t;
    } else if (trial % 3 == 2) {
      q[0] += 1e-9;
      q[1] -= 1e-9;
    }
    if (theorem1_degeneracy(p, q)) {
      ++accepted;
      for (std::size_t i = 0; i < p.size(); ++i) c.expect(std::fabs(p[i] - q[i]) <= 1e-12, "accepted unequal pair");
    }
  }
  const std::vector<double> one{1.0};
  const std::vector<double> two{0.5, 0.5};
  const std::vector<double> four{0.25, 0.25, 0.25, 0.25};
  c.near(theorem1_A(one), 1.3862943611198906, 1e-9, "A(1)");
  c.near(theorem1_A(two), 1.9095425048844386, 1e-9, "A(1/2,1/2)");
  c.near(theorem1_A(four), 2.5020121176909393, 1e-9, "A(1/4 x4)");
  c.notes << " cyclic edges " << edges_checked << ", degenerate pairs accepted " << accepted;
}

void equienergetic(Check& c) {
  SearchConfig cfg;
  cfg.n_min = 4;
  cfg.n_max = 13;
  const auto res = equienergetic_scan(cfg);
  std::size_t candidates = 0;
  std::size_t cospectral = 0;
  for (const auto& p : res.pairs) {
    if (p.conjecture2_candidate) {
      ++candidates;
      long double ea = 0;
      long double eb = 0;
      for (long double x : eigenvalues_extended(p.first.to_tree().graph(), {1e-12, 100})) ea += std::fabs(x);
      for (long double x : eigenvalues_extended(p.second.to_tree().graph(), {1e-12, 100})) eb += std::fabs(x);
      c.expect(std::fabs(ea - eb) <= cfg.energy_tol, "candidate energy not reproduced at 1e-12");
      c.expect(p.secondary_gaps.count("Ig") == 1 && p.secondary_gaps.at("Ig") > cfg.float_tol, "candidate dIg");
      c.notes << " n=" << p.first.order << " dIg=" << p.secondary_gaps.at("Ig");
    }
    if (p.cospectral == std::optional<bool>(true)) {
      ++cospectral;
      c.expect(p.secondary_gaps.at("Ig") <= 1e-8, "cospectral pair with dIg > 1e-8");
    }
  }
  c.notes << "; candidates " << candidates << ", cospectral pairs " << cospectral << ", trees " << res.trees_scanned;
}

}  // namespace

int main() {
  criterion(1, "closed-form index suite", 1.0, closed_form_suite);
  criterion(2, "caterpillar equal-Randic identities", 10.0, caterpillar_identities);
  criterion(3, "equal-Wiener refutation pattern", 0, conjecture1_refutation);
  criterion(4, "exhaustive verifier at n = 10", 60.0, verifier_scale);
  criterion(5, "free-tree enumeration", 0, enumeration);
  criterion(6, "spectral invariants n <= 10", 0, spectral_invariants);
  criterion(7, "edit-distance and entropy results", 0, further_results);
  criterion(8, "equienergetic search n <= 13", 600.0, equienergetic);
  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
