#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "topoidx/construct.hpp"
#include "topoidx/indices.hpp"
#include "topoidx/spectral.hpp"
#include "topoidx/tree.hpp"

namespace topoidx {

struct SearchConfig {
  std::size_t n_min = 4;
  std::size_t n_max = 10;
  double float_tol = 1e-9;
  int scan_limit = 100;
  int fixed_t = 4;
  bool perfect_squares_only = true;
  bool equal_order_only = false;
  double energy_tol = 1e-8;
  LogBase log_base{};
  /// Worker threads for pair checking; 0 picks hardware concurrency.
  unsigned threads = 0;

  /// Throws std::invalid_argument on non-positive tolerances or inverted ranges.
  void validate() const;
};

/// Every index the conjecture checks need, computed once per tree.
struct TreeProfile {
  Tree tree;
  std::int64_t wiener;
  double randic;
  double energy;
  double ig;
  double if1;
};

TreeProfile profile_tree(const Tree& t, LogBase base = {});

/// Conjecture ids: 1 compares (W, R), 2 compares (E, Ig), 3 compares (R, If_1).
/// Returns the (dominating, dominated) index kinds. Throws std::invalid_argument.
std::pair<IndexKind, IndexKind> conjecture_indices(int id);
double profile_value(const TreeProfile& p, IndexKind kind);

struct ViolationRecord {
  int conjecture;
  std::size_t order;
  std::string code_first;
  std::string code_second;
  /// Values of the dominating index (A) and dominated index (B) on both trees.
  double a_first;
  double a_second;
  double b_first;
  double b_second;
  double gap_a;
  double gap_b;
  /// gap_b - gap_a.
  double margin;
};

struct VerificationReport {
  int conjecture;
  std::size_t order;
  std::size_t trees = 0;
  std::size_t pairs_total = 0;
  /// Pairs that survived the sorted-window prune and were compared explicitly.
  std::size_t pairs_compared = 0;
  std::vector<ViolationRecord> violations;
  /// 0 < margin <= float_tol.
  std::vector<ViolationRecord> borderline;
};

/// Checks every unordered pair of trees on n vertices.
VerificationReport verify_conjecture(int id, std::size_t n, const SearchConfig& cfg = {});

enum class CollisionKind { Wiener, Randic, Energy };
std::string to_string(CollisionKind kind);

struct TreeRecord {
  std::string code_hex;
  std::size_t order;
  std::vector<Edge> edges;

  static TreeRecord of(const Tree& t);
  Tree to_tree() const;
};

struct CaterpillarMatch {
  CaterpillarSpec first;
  CaterpillarSpec second;
  double core_first;
  double core_second;
  /// Set when every coordinate is a perfect square and the cores were compared as rationals.
  std::optional<bool> exact_equal;
  /// Sum of d ln d over the four spine degrees.
  double spine_if1_first;
  double spine_if1_second;
};

struct CollisionPair {
  CollisionKind kind;
  TreeRecord first;
  TreeRecord second;
  double shared_value;
  /// Absolute differences of the other indices, keyed by index name.
  std::map<std::string, double> secondary_gaps;
  std::optional<bool> cospectral;
  bool conjecture2_candidate = false;
  std::optional<CaterpillarMatch> caterpillar;
};

/// Non-isomorphic pairs on n vertices with identical Wiener index.
std::vector<CollisionPair> find_equal_wiener_pairs(std::size_t n, LogBase base = {});

/// R(T) - R(T') for the two attachment trees of the equal-Wiener family,
/// x and y being the degrees of the two attachment vertices.
double fig1_randic_gap(double x, double y);

/// True iff the two attachment points have the same distance sums in both
/// trees and the same distance to each other. Then hanging any S at the first
/// point and any R at the second keeps the Wiener indices equal.
/// Throws std::invalid_argument if W(a) != W(b) or orders differ.
bool check_wiener_preserving_attachment(const Tree& a, const Tree& b, std::pair<Vertex, Vertex> attach_a,
                                        std::pair<Vertex, Vertex> attach_b);

struct AttachmentMatch {
  std::pair<Vertex, Vertex> attach_a;
  std::pair<Vertex, Vertex> attach_b;
};

/// Every attachment pairing accepted by check_wiener_preserving_attachment.
std::vector<AttachmentMatch> matching_attachments(const Tree& a, const Tree& b);

/// (x-1)/sqrt x + (y-2)/sqrt y + (z-2)/sqrt z + (t-2)/sqrt t + 1/sqrt(xy) + 1/sqrt(yz) + 1/sqrt(zt).
double caterpillar_randic_core(int x, int y, int z, int t);

/// Exact equality of two cores; nullopt unless all eight coordinates are perfect squares.
std::optional<bool> caterpillar_cores_equal_exact(const CaterpillarSpec& a, const CaterpillarSpec& b);

double spine_if1_sum(const CaterpillarSpec& spec);

struct CaterpillarScanResult {
  std::size_t quadruples = 0;
  /// Equal-core pairs dropped because the tail-less caterpillars are isomorphic (mirror images).
  std::size_t isomorphic_skipped = 0;
  std::vector<CollisionPair> pairs;

  /// Order-insensitive lookup by spine degrees.
  bool contains(const std::array<int, 4>& a, const std::array<int, 4>& b) const;
};

CaterpillarScanResult caterpillar_scan(const SearchConfig& cfg);

struct EquienergeticScanResult {
  std::size_t trees_scanned = 0;
  /// Candidates whose energy match did not survive the long double recomputation.
  std::size_t discarded_on_reverification = 0;
  std::vector<CollisionPair> pairs;
};

/// Equal-energy tree pairs for orders n_min..n_max. Each pair is flagged
/// cospectral or not; non-cospectral pairs with |dIg| > float_tol are
/// Conjecture-2 candidates and are only kept after re-certification.
EquienergeticScanResult equienergetic_scan(const SearchConfig& cfg);

}  // namespace topoidx
