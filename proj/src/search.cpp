#include "topoidx/search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

#include "topoidx/enumerate.hpp"
#include "topoidx/measures.hpp"

namespace topoidx {

namespace {

using Rational = boost::multiprecision::cpp_rational;

unsigned worker_count(unsigned requested, std::size_t work) {
  unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(work, 1)));
}

// Runs fn(worker, begin, end) over strided slices of [0, count).
template <typename Fn>
void parallel_slices(std::size_t count, unsigned workers, Fn fn) {
  if (workers <= 1) {
    fn(0u, std::size_t{0}, count);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(count, w * chunk);
    const std::size_t end = std::min(count, begin + chunk);
    pool.emplace_back([=, &fn] { fn(w, begin, end); });
  }
}

std::vector<TreeProfile> profile_all(std::vector<Tree> trees, const SearchConfig& cfg) {
  std::vector<std::optional<TreeProfile>> slots(trees.size());
  parallel_slices(trees.size(), worker_count(cfg.threads, trees.size() / 64), [&](unsigned, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) slots[i] = profile_tree(trees[i], cfg.log_base);
  });
  std::vector<TreeProfile> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

int integer_sqrt(int v) {
  int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(v))));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

bool is_perfect_square(int v) {
  const int r = integer_sqrt(v);
  return r * r == v;
}

Rational exact_core(int x, int y, int z, int t) {
  const int a = integer_sqrt(x);
  const int b = integer_sqrt(y);
  const int c = integer_sqrt(z);
  const int d = integer_sqrt(t);
  return Rational(x - 1, a) + Rational(y - 2, b) + Rational(z - 2, c) + Rational(t - 2, d) + Rational(1, a * b) +
         Rational(1, b * c) + Rational(1, c * d);
}

std::array<int, 4> spine(const CaterpillarSpec& s) { return {s.x, s.y, s.z, s.t}; }

}  // namespace

void SearchConfig::validate() const {
  if (!(float_tol > 0) || !(energy_tol > 0)) throw std::invalid_argument("tolerances must be positive");
  if (n_min > n_max) throw std::invalid_argument("n_min exceeds n_max");
  if (scan_limit < 1) throw std::invalid_argument("scan limit must be positive");
  if (fixed_t < 2) throw std::invalid_argument("fixed t must be at least 2");
}

TreeProfile profile_tree(const Tree& t, LogBase base) {
  TreeProfile p{t, wiener_bfs(t.graph()), 0.0, 0.0, 0.0, 0.0};
  if (t.order() < 2) return p;
  const Spectrum spectrum = eigenvalues(t.graph());
  p.randic = randic(t.graph()).value;
  p.energy = energy(spectrum).value;
  p.ig = ig_entropy(spectrum, base).value;
  p.if1 = ifk_entropy(t.graph(), 1, base).value;
  return p;
}

std::pair<IndexKind, IndexKind> conjecture_indices(int id) {
  switch (id) {
    case 1: return {IndexKind::Wiener, IndexKind::Randic};
    case 2: return {IndexKind::Energy, IndexKind::Ig};
    case 3: return {IndexKind::Randic, IndexKind::Ifk};
    default: throw std::invalid_argument("conjecture id must be 1, 2 or 3");
  }
}

double profile_value(const TreeProfile& p, IndexKind kind) {
  switch (kind) {
    case IndexKind::Wiener: return static_cast<double>(p.wiener);
    case IndexKind::Randic: return p.randic;
    case IndexKind::Energy: return p.energy;
    case IndexKind::Ig: return p.ig;
    case IndexKind::Ifk: return p.if1;
    case IndexKind::AvgDistance: break;
  }
  throw std::invalid_argument("index not part of a tree profile");
}

VerificationReport verify_conjecture(int id, std::size_t n, const SearchConfig& cfg) {
  cfg.validate();
  const auto [kind_a, kind_b] = conjecture_indices(id);
  VerificationReport report;
  report.conjecture = id;
  report.order = n;
  const std::vector<TreeProfile> profiles = profile_all(enumerate_trees(n), cfg);
  const std::size_t count = profiles.size();
  report.trees = count;
  report.pairs_total = count < 2 ? 0 : count * (count - 1) / 2;
  if (count < 2) return report;

  // Sort by the dominating index; a pair can only violate when its A-gap is
  // below the spread of B, so each row stops at that window.
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> a(count);
  std::vector<double> b(count);
  for (std::size_t i = 0; i < count; ++i) {
    a[i] = profile_value(profiles[i], kind_a);
    b[i] = profile_value(profiles[i], kind_b);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return a[l] < a[r]; });
  const auto [b_min, b_max] = std::minmax_element(b.begin(), b.end());
  const double window = (*b_max - *b_min) + cfg.float_tol;

  struct Partial {
    std::size_t compared = 0;
    std::vector<ViolationRecord> violations;
    std::vector<ViolationRecord> borderline;
  };
  const unsigned workers = worker_count(cfg.threads, count / 32);
  std::vector<Partial> partials(workers);
  parallel_slices(count, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
    Partial& out = partials[w];
    for (std::size_t oi = begin; oi < end; ++oi) {
      const std::size_t i = order[oi];
      for (std::size_t oj = oi + 1; oj < count; ++oj) {
        const std::size_t j = order[oj];
        const double gap_a = std::fabs(a[i] - a[j]);
        if (gap_a > window) break;
        ++out.compared;
        const double gap_b = std::fabs(b[i] - b[j]);
        if (dominates(gap_a, gap_b)) continue;
        std::size_t first = i;
        std::size_t second = j;
        if (profiles[second].tree.code() < profiles[first].tree.code()) std::swap(first, second);
        ViolationRecord rec{id,
                            n,
                            profiles[first].tree.code_hex(),
                            profiles[second].tree.code_hex(),
                            a[first],
                            a[second],
                            b[first],
                            b[second],
                            gap_a,
                            gap_b,
                            gap_b - gap_a};
        (rec.margin > cfg.float_tol ? out.violations : out.borderline).push_back(std::move(rec));
      }
    }
  });
  for (auto& p : partials) {
    report.pairs_compared += p.compared;
    std::move(p.violations.begin(), p.violations.end(), std::back_inserter(report.violations));
    std::move(p.borderline.begin(), p.borderline.end(), std::back_inserter(report.borderline));
  }
  auto by_margin = [](const ViolationRecord& l, const ViolationRecord& r) {
    return std::tie(r.margin, l.code_first, l.code_second) < std::tie(l.margin, r.code_first, r.code_second);
  };
  std::sort(report.violations.begin(), report.violations.end(), by_margin);
  std::sort(report.borderline.begin(), report.borderline.end(), by_margin);
  return report;
}

std::string to_string(CollisionKind kind) {
  switch (kind) {
    case CollisionKind::Wiener: return "wiener";
    case CollisionKind::Randic: return "randic";
    case CollisionKind::Energy: return "energy";
  }
  return "?";
}

TreeRecord TreeRecord::of(const Tree& t) { return {t.code_hex(), t.order(), t.graph().edges()}; }

Tree TreeRecord::to_tree() const { return Tree::from_edge_list(order, edges); }

namespace {

std::map<std::string, double> profile_gaps(const TreeProfile& l, const TreeProfile& r) {
  return {
      {"W", std::fabs(static_cast<double>(l.wiener - r.wiener))},
      {"R", std::fabs(l.randic - r.randic)},
      {"E", std::fabs(l.energy - r.energy)},
      {"Ig", std::fabs(l.ig - r.ig)},
      {"If1", std::fabs(l.if1 - r.if1)},
  };
}

}  // namespace

std::vector<CollisionPair> find_equal_wiener_pairs(std::size_t n, LogBase base) {
  SearchConfig cfg;
  cfg.log_base = base;
  std::vector<TreeProfile> profiles = profile_all(enumerate_trees(n), cfg);
  std::stable_sort(profiles.begin(), profiles.end(), [](const TreeProfile& l, const TreeProfile& r) {
    return std::tie(l.wiener, l.tree.code()) < std::tie(r.wiener, r.tree.code());
  });
  std::vector<CollisionPair> out;
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    for (std::size_t j = i + 1; j < profiles.size() && profiles[j].wiener == profiles[i].wiener; ++j) {
      auto gaps = profile_gaps(profiles[i], profiles[j]);
      gaps.erase("W");
      out.push_back({CollisionKind::Wiener, TreeRecord::of(profiles[i].tree), TreeRecord::of(profiles[j].tree),
                     static_cast<double>(profiles[i].wiener), std::move(gaps), std::nullopt, false, std::nullopt});
    }
  }
  return out;
}

double fig1_randic_gap(double x, double y) {
  if (!(x >= 1) || !(y >= 1)) throw std::invalid_argument("attachment degrees must be >= 1");
  const double with = 1.0 / 3.0 + 1.0 / std::sqrt(3 * x) + 1.0 / std::sqrt(3 * y) + 3.0 / 2.0 + 1.0 / (2.0 * std::sqrt(y));
  const double without = 1.0 / std::sqrt(6.0) + 1.0 / std::sqrt(2 * y) + 1.0 / std::sqrt(5 * y) + 3.0 / std::sqrt(5.0) +
                         1.0 / std::sqrt(5 * x);
  return with - without;
}

namespace {

struct DistanceData {
  std::vector<std::vector<std::size_t>> dist;
  std::vector<std::size_t> sums;
};

DistanceData distance_data(const Tree& t) {
  DistanceData d{all_pairs_distances(t.graph()), {}};
  for (const auto& row : d.dist) d.sums.push_back(std::accumulate(row.begin(), row.end(), std::size_t{0}));
  return d;
}

void require_wiener_equal(const Tree& a, const Tree& b) {
  if (a.order() != b.order()) throw std::invalid_argument("attachment check needs trees of equal order");
  if (wiener_bfs(a.graph()) != wiener_bfs(b.graph())) throw std::invalid_argument("attachment check needs equal Wiener indices");
}

}  // namespace

bool check_wiener_preserving_attachment(const Tree& a, const Tree& b, std::pair<Vertex, Vertex> attach_a,
                                        std::pair<Vertex, Vertex> attach_b) {
  require_wiener_equal(a, b);
  const auto n = a.order();
  if (attach_a.first >= n || attach_a.second >= n || attach_b.first >= n || attach_b.second >= n) {
    throw GraphError(GraphErrorCode::VertexOutOfRange, "attachment vertex out of range");
  }
  const DistanceData da = distance_data(a);
  const DistanceData db = distance_data(b);
  return da.sums[attach_a.first] == db.sums[attach_b.first] && da.sums[attach_a.second] == db.sums[attach_b.second] &&
         da.dist[attach_a.first][attach_a.second] == db.dist[attach_b.first][attach_b.second];
}

std::vector<AttachmentMatch> matching_attachments(const Tree& a, const Tree& b) {
  require_wiener_equal(a, b);
  const DistanceData da = distance_data(a);
  const DistanceData db = distance_data(b);
  const auto n = static_cast<Vertex>(a.order());
  std::vector<AttachmentMatch> out;
  for (Vertex a1 = 0; a1 < n; ++a1) {
    for (Vertex b1 = 0; b1 < n; ++b1) {
      if (da.sums[a1] != db.sums[b1]) continue;
      for (Vertex a2 = 0; a2 < n; ++a2) {
        for (Vertex b2 = 0; b2 < n; ++b2) {
          if (da.sums[a2] == db.sums[b2] && da.dist[a1][a2] == db.dist[b1][b2]) out.push_back({{a1, a2}, {b1, b2}});
        }
      }
    }
  }
  return out;
}

double caterpillar_randic_core(int x, int y, int z, int t) {
  const double sx = std::sqrt(static_cast<double>(x));
  const double sy = std::sqrt(static_cast<double>(y));
  const double sz = std::sqrt(static_cast<double>(z));
  const double st = std::sqrt(static_cast<double>(t));
  return (x - 1) / sx + (y - 2) / sy + (z - 2) / sz + (t - 2) / st + 1.0 / (sx * sy) + 1.0 / (sy * sz) + 1.0 / (sz * st);
}

std::optional<bool> caterpillar_cores_equal_exact(const CaterpillarSpec& a, const CaterpillarSpec& b) {
  for (int v : {a.x, a.y, a.z, a.t, b.x, b.y, b.z, b.t}) {
    if (v < 1 || !is_perfect_square(v)) return std::nullopt;
  }
  return exact_core(a.x, a.y, a.z, a.t) == exact_core(b.x, b.y, b.z, b.t);
}

double spine_if1_sum(const CaterpillarSpec& spec) {
  double s = 0;
  for (int d : spine(spec)) s += d * std::log(static_cast<double>(d));
  return s;
}

bool CaterpillarScanResult::contains(const std::array<int, 4>& a, const std::array<int, 4>& b) const {
  return std::any_of(pairs.begin(), pairs.end(), [&](const CollisionPair& p) {
    const auto first = spine(p.caterpillar->first);
    const auto second = spine(p.caterpillar->second);
    return (first == a && second == b) || (first == b && second == a);
  });
}

CaterpillarScanResult caterpillar_scan(const SearchConfig& cfg) {
  cfg.validate();
  std::vector<int> values;
  for (int v = 1; v <= cfg.scan_limit; ++v) {
    if (!cfg.perfect_squares_only || is_perfect_square(v)) values.push_back(v);
  }
  const int t = cfg.fixed_t;

  struct Candidate {
    double core;
    int x, y, z;
  };
  std::vector<Candidate> candidates;
  for (int x : values) {
    for (int y : values) {
      if (y < 2) continue;
      for (int z : values) {
        if (z < 2) continue;
        candidates.push_back({caterpillar_randic_core(x, y, z, t), x, y, z});
      }
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& l, const Candidate& r) {
    return std::tie(l.core, l.x, l.y, l.z) < std::tie(r.core, r.x, r.y, r.z);
  });

  CaterpillarScanResult result;
  result.quadruples = candidates.size();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size() && candidates[j].core - candidates[i].core <= cfg.float_tol; ++j) {
      const Candidate* l = &candidates[i];
      const Candidate* r = &candidates[j];
      if (cfg.equal_order_only && l->x + l->y + l->z != r->x + r->y + r->z) continue;
      if (std::tie(r->x, r->y, r->z) < std::tie(l->x, l->y, l->z)) std::swap(l, r);
      CaterpillarSpec first;
      first.x = l->x, first.y = l->y, first.z = l->z, first.t = t;
      CaterpillarSpec second;
      second.x = r->x, second.y = r->y, second.z = r->z, second.t = t;
      const auto exact = caterpillar_cores_equal_exact(first, second);
      if (exact == false) continue;
      const Tree tree_first = build_caterpillar(first);
      const Tree tree_second = build_caterpillar(second);
      if (tree_first.isomorphic_to(tree_second)) {
        ++result.isomorphic_skipped;
        continue;
      }
      const TreeProfile pf = profile_tree(tree_first, cfg.log_base);
      const TreeProfile ps = profile_tree(tree_second, cfg.log_base);
      auto gaps = profile_gaps(pf, ps);
      const double spine_first = spine_if1_sum(first);
      const double spine_second = spine_if1_sum(second);
      gaps["If1_spine"] = std::fabs(spine_first - spine_second);
      gaps["order"] = std::fabs(static_cast<double>(tree_first.order()) - static_cast<double>(tree_second.order()));
      CaterpillarMatch match{first, second, l->core, r->core, exact, spine_first, spine_second};
      result.pairs.push_back({CollisionKind::Randic, TreeRecord::of(tree_first), TreeRecord::of(tree_second), pf.randic,
                              std::move(gaps), std::nullopt, false, std::move(match)});
    }
  }
  std::sort(result.pairs.begin(), result.pairs.end(), [](const CollisionPair& l, const CollisionPair& r) {
    return std::make_pair(spine(l.caterpillar->first), spine(l.caterpillar->second)) <
           std::make_pair(spine(r.caterpillar->first), spine(r.caterpillar->second));
  });
  return result;
}

namespace {

long double extended_energy(const Graph& g) {
  long double e = 0;
  for (long double v : eigenvalues_extended(g, JacobiOptions{1e-15, 200})) e += std::fabs(v);
  return e;
}

}  // namespace

EquienergeticScanResult equienergetic_scan(const SearchConfig& cfg) {
  cfg.validate();
  EquienergeticScanResult result;
  for (std::size_t n = std::max<std::size_t>(cfg.n_min, 2); n <= cfg.n_max; ++n) {
    std::vector<TreeProfile> profiles = profile_all(enumerate_trees(n), cfg);
    result.trees_scanned += profiles.size();
    std::stable_sort(profiles.begin(), profiles.end(),
                     [](const TreeProfile& l, const TreeProfile& r) { return l.energy < r.energy; });
    std::map<std::size_t, CharPoly> polys;
    auto poly = [&](std::size_t i) -> const CharPoly& {
      auto it = polys.find(i);
      if (it == polys.end()) it = polys.emplace(i, char_poly(profiles[i].tree.graph())).first;
      return it->second;
    };
    for (std::size_t i = 0; i < profiles.size(); ++i) {
      for (std::size_t j = i + 1; j < profiles.size() && profiles[j].energy - profiles[i].energy <= cfg.energy_tol; ++j) {
        std::size_t f = i;
        std::size_t s = j;
        if (profiles[s].tree.code() < profiles[f].tree.code()) std::swap(f, s);
        const bool cospectral = poly(f) == poly(s);
        const double ig_gap = std::fabs(profiles[f].ig - profiles[s].ig);
        const bool candidate = !cospectral && ig_gap > cfg.float_tol;
        if (candidate) {
          const long double e_gap = std::fabs(extended_energy(profiles[f].tree.graph()) - extended_energy(profiles[s].tree.graph()));
          if (e_gap > static_cast<long double>(cfg.energy_tol)) {
            ++result.discarded_on_reverification;
            continue;
          }
        }
        result.pairs.push_back({CollisionKind::Energy, TreeRecord::of(profiles[f].tree), TreeRecord::of(profiles[s].tree),
                                profiles[f].energy, profile_gaps(profiles[f], profiles[s]), cospectral, candidate,
                                std::nullopt});
      }
    }
  }
  std::stable_sort(result.pairs.begin(), result.pairs.end(), [](const CollisionPair& l, const CollisionPair& r) {
    return std::tie(l.first.order, l.first.code_hex, l.second.code_hex) <
           std::tie(r.first.order, r.first.code_hex, r.second.code_hex);
  });
  return result;
}

}  // namespace topoidx
