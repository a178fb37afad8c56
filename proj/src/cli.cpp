#include "topoidx/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "topoidx/construct.hpp"
#include "topoidx/enumerate.hpp"
#include "topoidx/indices.hpp"
#include "topoidx/measures.hpp"
#include "topoidx/search.hpp"

namespace topoidx::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string format = "json";

  std::string file;
  std::string file_b;
  std::string kind = "W";
  int k = 1;
  double log_base = 0;  // 0 means natural log
  double sigma = 1.0;

  std::size_t n = 0;
  std::size_t n_min = 4;
  std::size_t n_max = 0;
  bool count_only = false;
  std::string out_dir;

  int conjecture = 1;
  double float_tol = 1e-9;
  unsigned threads = 0;

  int limit = 100;
  int t = 4;
  bool all_integers = false;
  bool equal_order = false;
  double energy_tol = 1e-8;

  int theorem = 1;
  std::vector<double> p;
  std::vector<double> p_prime;
};

// Thrown for bad input detected after parsing succeeded.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

LogBase log_base_of(const Options& o) { return o.log_base == 0 ? LogBase{} : LogBase(o.log_base); }

std::string csv_number(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

std::string edges_string(const std::vector<Edge>& edges) {
  std::string out;
  for (const Edge& e : edges) {
    if (!out.empty()) out += ';';
    out += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return out;
}

Json edges_json(const std::vector<Edge>& edges) {
  Json arr = Json::array();
  for (const Edge& e : edges) arr.push_back({e.u, e.v});
  return arr;
}

Json tree_json(const TreeRecord& t) {
  return Json{{"code", t.code_hex}, {"order", t.order}, {"edges", edges_json(t.edges)}};
}

Json index_json(const IndexValue& v) {
  Json j{{"kind", to_string(v.kind)}};
  if (v.kind == IndexKind::Wiener) {
    j["value"] = static_cast<std::int64_t>(v.value);
  } else {
    j["value"] = v.value;
  }
  j["k"] = v.k ? Json(*v.k) : Json(nullptr);
  j["log_base"] = v.log_base ? Json(*v.log_base) : Json(nullptr);
  return j;
}

Json violation_json(const ViolationRecord& r) {
  return Json{{"conjecture", r.conjecture}, {"order", r.order},       {"code_first", r.code_first},
              {"code_second", r.code_second}, {"a_first", r.a_first}, {"a_second", r.a_second},
              {"b_first", r.b_first},       {"b_second", r.b_second}, {"gap_a", r.gap_a},
              {"gap_b", r.gap_b},           {"margin", r.margin}};
}

Json spec_json(const CaterpillarSpec& s) { return Json::array({s.x, s.y, s.z, s.t}); }

Json collision_json(const CollisionPair& p) {
  Json j{{"kind", to_string(p.kind)}, {"first", tree_json(p.first)}, {"second", tree_json(p.second)},
         {"shared_value", p.shared_value}};
  Json gaps = Json::object();
  for (const auto& [name, gap] : p.secondary_gaps) gaps[name] = gap;
  j["secondary_gaps"] = gaps;
  if (p.kind == CollisionKind::Energy) {
    j["cospectral"] = p.cospectral.value_or(false);
    j["conjecture2_candidate"] = p.conjecture2_candidate;
  }
  if (p.caterpillar) {
    const auto& c = *p.caterpillar;
    j["caterpillar"] = Json{{"first", spec_json(c.first)},
                            {"second", spec_json(c.second)},
                            {"core_first", c.core_first},
                            {"core_second", c.core_second},
                            {"exact_equal", c.exact_equal ? Json(*c.exact_equal) : Json(nullptr)},
                            {"spine_if1_first", c.spine_if1_first},
                            {"spine_if1_second", c.spine_if1_second}};
  }
  return j;
}

const std::vector<std::string> kCollisionHeader{
    "kind",       "first_code", "second_code", "first_order", "second_order", "shared_value", "cospectral",
    "candidate",  "spine_first", "spine_second", "exact_equal", "gap_W",      "gap_R",        "gap_E",
    "gap_Ig",     "gap_If1",     "gap_If1_spine"};

std::vector<std::string> collision_row(const CollisionPair& p) {
  auto gap = [&](const std::string& key) {
    auto it = p.secondary_gaps.find(key);
    return it == p.secondary_gaps.end() ? std::string() : csv_number(it->second);
  };
  auto spine_text = [](const CaterpillarSpec& s) {
    return std::to_string(s.x) + " " + std::to_string(s.y) + " " + std::to_string(s.z) + " " + std::to_string(s.t);
  };
  std::string exact;
  if (p.caterpillar && p.caterpillar->exact_equal) exact = *p.caterpillar->exact_equal ? "true" : "false";
  return {to_string(p.kind),
          p.first.code_hex,
          p.second.code_hex,
          std::to_string(p.first.order),
          std::to_string(p.second.order),
          csv_number(p.shared_value),
          p.cospectral ? (*p.cospectral ? "true" : "false") : "",
          p.conjecture2_candidate ? "true" : "false",
          p.caterpillar ? spine_text(p.caterpillar->first) : "",
          p.caterpillar ? spine_text(p.caterpillar->second) : "",
          exact,
          gap("W"),
          gap("R"),
          gap("E"),
          gap("Ig"),
          gap("If1"),
          gap("If1_spine")};
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(std::ostream& out, const Table& table) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << '\n';
  };
  line(table.header);
  for (const auto& r : table.rows) line(r);
}

struct Outcome {
  Json config;
  Json payload;
  Table table;
};

Graph load_graph(const std::string& path) {
  if (!std::filesystem::exists(path)) throw InputError("no such file: " + path);
  return read_edge_list_file(path);
}

Outcome do_index(const Options& o) {
  const Graph g = load_graph(o.file);
  const IndexKind kind = parse_index_kind(o.kind);
  const IndexValue v = compute_index(g, kind, o.k, log_base_of(o));
  Outcome r;
  r.config = {{"file", o.file}, {"kind", o.kind}, {"k", o.k}, {"log_base", log_base_of(o).value()}};
  r.payload = index_json(v);
  r.table = {{"kind", "value", "k", "log_base"},
             {{to_string(v.kind), csv_number(v.value), v.k ? std::to_string(*v.k) : "",
               v.log_base ? csv_number(*v.log_base) : ""}}};
  return r;
}

Outcome do_distance(const Options& o) {
  const Graph g = load_graph(o.file);
  const Graph h = load_graph(o.file_b);
  const IndexKind kind = parse_index_kind(o.kind);
  const SigmaParam sigma(o.sigma);
  const DistanceResult d =
      d_index(compute_index(g, kind, o.k, log_base_of(o)), compute_index(h, kind, o.k, log_base_of(o)), sigma);
  Outcome r;
  r.config = {{"file_a", o.file}, {"file_b", o.file_b}, {"kind", o.kind},
              {"k", o.k},         {"sigma", o.sigma},   {"log_base", log_base_of(o).value()}};
  r.payload = {{"kind", o.kind}, {"value_g", d.value_g}, {"value_h", d.value_h}, {"gap", d.gap}, {"distance", d.distance}};
  r.table = {{"kind", "value_g", "value_h", "gap", "distance", "sigma"},
             {{o.kind, csv_number(d.value_g), csv_number(d.value_h), csv_number(d.gap), csv_number(d.distance),
               csv_number(o.sigma)}}};
  return r;
}

Outcome do_enumerate(const Options& o) {
  if (o.n < 1) throw InputError("--n must be at least 1");
  Outcome r;
  r.config = {{"n", o.n}, {"count_only", o.count_only}, {"out_dir", o.out_dir}};
  r.table.header = {"index", "order", "code", "edges"};
  Json trees = Json::array();
  std::size_t count = 0;
  if (!o.out_dir.empty()) std::filesystem::create_directories(o.out_dir);
  TreeEnumerator it(o.n);
  while (auto t = it.next()) {
    if (!o.out_dir.empty()) {
      std::ofstream f(std::filesystem::path(o.out_dir) / ("tree_" + std::to_string(count) + ".edges"));
      if (!f) throw InputError("cannot write into " + o.out_dir);
      write_edge_list(f, t->graph());
    }
    if (!o.count_only) {
      trees.push_back(tree_json(TreeRecord::of(*t)));
      r.table.rows.push_back({std::to_string(count), std::to_string(t->order()), t->code_hex(), edges_string(t->graph().edges())});
    }
    ++count;
  }
  r.payload = {{"n", o.n}, {"count", count}};
  if (!o.count_only) r.payload["trees"] = trees;
  if (o.count_only) r.table = {{"n", "count"}, {{std::to_string(o.n), std::to_string(count)}}};
  return r;
}

Outcome do_verify(const Options& o) {
  SearchConfig cfg;
  cfg.float_tol = o.float_tol;
  cfg.threads = o.threads;
  cfg.log_base = log_base_of(o);
  const std::size_t n_max = std::max(o.n, o.n_max);
  if (o.n < 1) throw InputError("--n must be at least 1");
  Outcome r;
  r.config = {{"conjecture", o.conjecture}, {"n", o.n},           {"n_max", n_max},
              {"float_tol", o.float_tol},   {"log_base", cfg.log_base.value()}};
  r.table.header = {"conjecture", "order", "code_first", "code_second", "a_first", "a_second",
                    "b_first",    "b_second", "gap_a",    "gap_b",       "margin",  "class"};
  Json reports = Json::array();
  for (std::size_t n = o.n; n <= n_max; ++n) {
    const VerificationReport rep = verify_conjecture(o.conjecture, n, cfg);
    Json v = Json::array();
    Json b = Json::array();
    auto add_rows = [&](const std::vector<ViolationRecord>& recs, Json& arr, const char* cls) {
      for (const auto& rec : recs) {
        arr.push_back(violation_json(rec));
        r.table.rows.push_back({std::to_string(rec.conjecture), std::to_string(rec.order), rec.code_first,
                                rec.code_second, csv_number(rec.a_first), csv_number(rec.a_second),
                                csv_number(rec.b_first), csv_number(rec.b_second), csv_number(rec.gap_a),
                                csv_number(rec.gap_b), csv_number(rec.margin), cls});
      }
    };
    add_rows(rep.violations, v, "violation");
    add_rows(rep.borderline, b, "borderline");
    reports.push_back({{"order", n},
                       {"trees", rep.trees},
                       {"pairs_total", rep.pairs_total},
                       {"pairs_compared", rep.pairs_compared},
                       {"violations", v},
                       {"borderline", b}});
  }
  r.payload = {{"conjecture", o.conjecture}, {"reports", reports}};
  return r;
}

Outcome collisions_outcome(const std::vector<CollisionPair>& pairs) {
  Outcome r;
  Json arr = Json::array();
  r.table.header = kCollisionHeader;
  for (const auto& p : pairs) {
    arr.push_back(collision_json(p));
    r.table.rows.push_back(collision_row(p));
  }
  r.payload = {{"count", pairs.size()}, {"pairs", arr}};
  return r;
}

Outcome do_scan_caterpillar(const Options& o) {
  SearchConfig cfg;
  cfg.scan_limit = o.limit;
  cfg.fixed_t = o.t;
  cfg.perfect_squares_only = !o.all_integers;
  cfg.equal_order_only = o.equal_order;
  cfg.float_tol = o.float_tol;
  cfg.log_base = log_base_of(o);
  const CaterpillarScanResult res = caterpillar_scan(cfg);
  Outcome r = collisions_outcome(res.pairs);
  r.config = {{"limit", o.limit},           {"t", o.t},
              {"perfect_squares_only", !o.all_integers}, {"equal_order_only", o.equal_order},
              {"float_tol", o.float_tol},   {"log_base", cfg.log_base.value()}};
  r.payload["quadruples"] = res.quadruples;
  r.payload["isomorphic_skipped"] = res.isomorphic_skipped;
  return r;
}

Outcome do_scan_equal_wiener(const Options& o) {
  if (o.n < 1) throw InputError("--n must be at least 1");
  Outcome r = collisions_outcome(find_equal_wiener_pairs(o.n, log_base_of(o)));
  r.config = {{"n", o.n}, {"log_base", log_base_of(o).value()}};
  return r;
}

Outcome do_scan_equienergetic(const Options& o) {
  SearchConfig cfg;
  cfg.n_min = o.n_min;
  cfg.n_max = o.n_max;
  cfg.energy_tol = o.energy_tol;
  cfg.float_tol = o.float_tol;
  cfg.threads = o.threads;
  cfg.log_base = log_base_of(o);
  if (o.n_max < 1) throw InputError("--n-max is required");
  const EquienergeticScanResult res = equienergetic_scan(cfg);
  Outcome r = collisions_outcome(res.pairs);
  r.config = {{"n_min", o.n_min},         {"n_max", o.n_max},     {"energy_tol", o.energy_tol},
              {"float_tol", o.float_tol}, {"log_base", cfg.log_base.value()}};
  r.payload["trees_scanned"] = res.trees_scanned;
  r.payload["discarded_on_reverification"] = res.discarded_on_reverification;
  std::size_t candidates = 0;
  for (const auto& p : res.pairs) candidates += p.conjecture2_candidate ? 1 : 0;
  r.payload["conjecture2_candidates"] = candidates;
  return r;
}

Outcome do_bounds(const Options& o) {
  Outcome r;
  const SigmaParam sigma(o.sigma);
  if (o.theorem == 1) {
    if (o.p_prime.empty()) throw InputError("--p-prime is required for theorem 1");
    const double a = theorem1_A(o.p_prime, log_base_of(o));
    const double bound = theorem1_bound(o.p_prime, sigma, log_base_of(o));
    r.config = {{"theorem", 1}, {"p_prime", o.p_prime}, {"p", o.p}, {"sigma", o.sigma}, {"log_base", log_base_of(o).value()}};
    r.payload = {{"A", a}, {"bound", bound}};
    std::string degenerate;
    if (!o.p.empty()) {
      const bool accepted = theorem1_degeneracy(o.p, o.p_prime);
      r.payload["degenerate"] = accepted;
      degenerate = accepted ? "true" : "false";
    }
    r.table = {{"theorem", "A", "bound", "degenerate"}, {{"1", csv_number(a), csv_number(bound), degenerate}}};
  } else if (o.theorem == 3) {
    if (o.n < 2) throw InputError("--n must be at least 2 for theorem 3");
    const AsymptoticBound b = theorem3_bound(o.n, sigma);
    r.config = {{"theorem", 3}, {"n", o.n}, {"sigma", o.sigma}};
    r.payload = {{"coefficient", theorem3_coefficient()}, {"bound", b.value}, {"asymptotic", b.asymptotic}};
    r.table = {{"theorem", "coefficient", "bound", "asymptotic"},
               {{"3", csv_number(theorem3_coefficient()), csv_number(b.value), "true"}}};
  } else {
    throw InputError("--theorem must be 1 or 3");
  }
  return r;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Topological indices, tree enumeration and counterexample search", "topoidx"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.set_version_flag("--version", kToolVersion);

  auto add_log_base = [&](CLI::App* sub) {
    sub->add_option("--log-base", o.log_base, "Logarithm base for entropies (default e)")->check(CLI::PositiveNumber);
  };
  const std::vector<std::string> kinds{"W", "R", "E", "Ig", "If", "mu"};

  auto* index = app.add_subcommand("index", "Compute one topological index of a graph");
  index->add_option("file", o.file, "Edge-list file")->required();
  index->add_option("--kind", o.kind, "W|R|E|Ig|If|mu")->check(CLI::IsMember(kinds));
  index->add_option("--k", o.k, "Exponent for If")->check(CLI::PositiveNumber);
  add_log_base(index);

  auto* distance = app.add_subcommand("distance", "Index-based distance between two graphs");
  distance->add_option("fileA", o.file, "First edge-list file")->required();
  distance->add_option("fileB", o.file_b, "Second edge-list file")->required();
  distance->add_option("--kind", o.kind, "W|R|E|Ig|If|mu")->check(CLI::IsMember(kinds));
  distance->add_option("--sigma", o.sigma, "Width parameter")->check(CLI::PositiveNumber);
  distance->add_option("--k", o.k, "Exponent for If")->check(CLI::PositiveNumber);
  add_log_base(distance);

  auto* enumerate = app.add_subcommand("enumerate", "List all free trees of an order");
  enumerate->add_option("--n", o.n, "Order")->required();
  enumerate->add_flag("--count-only", o.count_only, "Only report the count");
  enumerate->add_option("--out-dir", o.out_dir, "Also write each tree as an edge-list file");

  auto* verify = app.add_subcommand("verify", "Check a conjecture on all tree pairs");
  verify->add_option("--conjecture", o.conjecture, "1, 2 or 3")->required()->check(CLI::IsMember({1, 2, 3}));
  verify->add_option("--n", o.n, "Order")->required();
  verify->add_option("--n-max", o.n_max, "Check every order from --n up to this");
  verify->add_option("--float-tol", o.float_tol, "Decisiveness threshold")->check(CLI::PositiveNumber);
  verify->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  add_log_base(verify);

  auto* scan = app.add_subcommand("scan", "Counterexample searches");
  scan->require_subcommand(1);
  scan->fallthrough();
  auto* caterpillar = scan->add_subcommand("caterpillar", "Equal-Randic caterpillar spines");
  caterpillar->add_option("--limit", o.limit, "Largest spine degree")->check(CLI::PositiveNumber);
  caterpillar->add_option("--t", o.t, "Fixed last spine degree")->check(CLI::Range(2, 1 << 20));
  caterpillar->add_flag("--all-integers", o.all_integers, "Scan every integer, not only perfect squares");
  caterpillar->add_flag("--equal-order", o.equal_order, "Require equal vertex counts");
  caterpillar->add_option("--float-tol", o.float_tol, "Equality tolerance")->check(CLI::PositiveNumber);
  add_log_base(caterpillar);
  auto* equal_wiener = scan->add_subcommand("equal-wiener", "Tree pairs with equal Wiener index");
  equal_wiener->add_option("--n", o.n, "Order")->required();
  add_log_base(equal_wiener);
  auto* equienergetic = scan->add_subcommand("equienergetic", "Equal-energy tree pairs");
  equienergetic->add_option("--n-max", o.n_max, "Largest order")->required();
  equienergetic->add_option("--n-min", o.n_min, "Smallest order");
  equienergetic->add_option("--energy-tol", o.energy_tol, "Energy equality tolerance")->check(CLI::PositiveNumber);
  equienergetic->add_option("--float-tol", o.float_tol, "Ig separation threshold")->check(CLI::PositiveNumber);
  equienergetic->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  add_log_base(equienergetic);

  auto* bounds = app.add_subcommand("bounds", "Evaluate the entropy and edit-distance bounds");
  bounds->add_option("--theorem", o.theorem, "1 or 3")->required()->check(CLI::IsMember({1, 3}));
  bounds->add_option("--p-prime", o.p_prime, "Probability vector p' (theorem 1)")->delimiter(',');
  bounds->add_option("--p", o.p, "Probability vector p (theorem 1 degeneracy check)")->delimiter(',');
  bounds->add_option("--n", o.n, "Order (theorem 3)");
  bounds->add_option("--sigma", o.sigma, "Width parameter")->check(CLI::PositiveNumber);
  add_log_base(bounds);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }
  if (o.log_base != 0 && o.log_base <= 1) {
    err << "error: --log-base must be greater than 1\n";
    return kUsageError;
  }

  const auto started = std::chrono::steady_clock::now();
  Outcome outcome;
  std::string name;
  try {
    if (*index) {
      name = "index";
      outcome = do_index(o);
    } else if (*distance) {
      name = "distance";
      outcome = do_distance(o);
    } else if (*enumerate) {
      name = "enumerate";
      outcome = do_enumerate(o);
    } else if (*verify) {
      name = "verify";
      outcome = do_verify(o);
    } else if (*caterpillar) {
      name = "scan caterpillar";
      outcome = do_scan_caterpillar(o);
    } else if (*equal_wiener) {
      name = "scan equal-wiener";
      outcome = do_scan_equal_wiener(o);
    } else if (*equienergetic) {
      name = "scan equienergetic";
      outcome = do_scan_equienergetic(o);
    } else if (*bounds) {
      name = "bounds";
      outcome = do_bounds(o);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();

  if (o.format == "csv") {
    write_csv(out, outcome.table);
  } else {
    Json report{{"schema", kReportSchema},
                {"tool", "topoidx"},
                {"version", kToolVersion},
                {"subcommand", name},
                {"config", outcome.config},
                {"wall_time_ms", elapsed},
                {"payload", outcome.payload}};
    out << report.dump(2) << '\n';
  }
  return kSuccess;
}

}  // namespace topoidx::cli
