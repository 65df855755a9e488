#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "shannon/bounds.hpp"
#include "shannon/continued_fraction.hpp"
#include "shannon/discont.hpp"
#include "shannon/error.hpp"
#include "shannon/independence.hpp"
#include "shannon/io.hpp"
#include "shannon/orbit.hpp"
#include "shannon/rounding.hpp"

namespace shannon::cli {

namespace {

using nlohmann::json;

struct Common {
  unsigned threads = 0;
  std::uint64_t seed = 1;

  unsigned resolved_threads() const { return threads ? threads : std::max(1U, std::thread::hardware_concurrency()); }
};

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : " ") + p;
  return s;
}

ProductGraph graph_from_args(const std::vector<std::string>& factors, std::size_t power) {
  if (factors.empty()) throw InputError("no factors given");
  std::string d = join(factors);
  if (power > 1) {
    std::string rep;
    for (std::size_t i = 0; i < power; ++i) rep += (i ? " " : "") + d;
    d = rep;
  }
  return ProductGraph::parse(d);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
  if (!f) throw std::runtime_error("write failed for " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string set_text(const VertexSet& s) {
  std::ostringstream o;
  write_vertex_set(o, s);
  return o.str();
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("bad integer '" + item + "'");
    }
  }
  return v;
}

// ---- alpha ---------------------------------------------------------------

struct AlphaArgs {
  std::vector<std::string> factors;
  std::size_t power = 1;
  std::string method = "auto";
  std::string export_ilp;
  std::string witness;
  std::size_t exact_cap = 1400;
  std::size_t cap = 65536;
  double seconds = 0;
  std::uint64_t nodes = 0;
  std::uint64_t iterations = 0;
  unsigned restarts = 1;
  bool no_symmetry = false;
};

int cmd_alpha(const AlphaArgs& a, const Common& c, std::ostream& out) {
  const ProductGraph g = graph_from_args(a.factors, a.power);
  const std::uint64_t n = g.vertex_count();
  std::string method = a.method;
  if (method == "auto") method = n <= a.exact_cap ? "exact" : "heuristic";
  DenseGraph dg = materialize(g, a.cap);
  if (!a.export_ilp.empty()) export_ilp(dg, a.export_ilp);

  SolveResult r;
  if (method == "exact") {
    ExactOptions ex;
    ex.budget = {a.nodes, a.seconds};
    ex.symmetry = !a.no_symmetry;
    ex.threads = c.resolved_threads();
    ex.seed = c.seed;
    r = solve_exact(dg, ex);
  } else {
    HeuristicOptions h;
    h.seed = c.seed;
    h.max_seconds = a.seconds;
    h.iterations = a.iterations;
    h.restarts = a.restarts;
    r = solve_heuristic(dg, h);
  }
  const VertexSet w = to_vertex_set(dg, r.witness, true);
  const VerifyReport check = verify_independent(w, c.resolved_threads());
  if (!a.witness.empty()) write_file(a.witness, set_text(w));
  json j = solve_result_json(g.descriptor(), r, a.witness, c.seed);
  j["method"] = method;
  j["vertices"] = n;
  j["witness_verified"] = check.pass;
  emit(out, j);
  if (!check.pass) return kVerifyFail;
  return r.status == SolveStatus::timeout ? kBudgetExhausted : kOk;
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
  std::string file;
  std::string graph;
  std::string format = "auto";
};

int cmd_verify(const VerifyArgs& a, const Common& c, std::ostream& out) {
  const ProductGraph g = ProductGraph::parse(a.graph);
  const std::string text = read_file(a.file);
  std::string format = a.format;
  if (format == "auto") format = text.find(',') != std::string::npos ? "decimal" : "base15";
  VertexSet s;
  if (format == "base15") {
    s = parse_base15_set(text, g);
  } else if (format == "decimal") {
    std::istringstream in(text);
    s = read_vertex_set(in, g);
  } else {
    throw InputError("unknown set format '" + format + "'");
  }
  s.claimed_independent = true;
  const VerifyReport rep = verify_independent(s, c.resolved_threads());
  json j;
  j["graph"] = g.descriptor();
  j["format"] = format;
  j["pass"] = rep.pass;
  j["size"] = rep.size;
  j["reason"] = rep.reason;
  if (rep.first_violation) {
    auto [u, v] = *rep.first_violation;
    j["first_violation"] = {{"indices", {u, v}}, {"tuples", {s.tuples[u], s.tuples[v]}}};
  }
  emit(out, j);
  return rep.pass ? kOk : kVerifyFail;
}

// ---- orbit ---------------------------------------------------------------

struct OrbitArgs {
  std::string spec;
  std::int64_t m = 0;
  std::string gens;
  std::string qs;
  std::string expand;
  bool puncture = false;
  std::string puncture_out;
  bool search = false;
  bool random = false;
  std::uint64_t samples = 10000;
  std::uint64_t max_candidates = 0;
};

OrbitSpec orbit_from_args(const OrbitArgs& a) {
  if (!a.spec.empty()) return OrbitSpec::parse(a.spec);
  if (a.m <= 0 || a.gens.empty() || a.qs.empty()) throw InputError("orbit needs --spec or --m, --gens and --qs");
  std::vector<Tuple> gens;
  std::stringstream ss(a.gens);
  std::string part;
  while (std::getline(ss, part, ';')) gens.push_back(parse_int_list(part));
  return OrbitSpec(a.m, std::move(gens), parse_int_list(a.qs));
}

int cmd_orbit(const OrbitArgs& a, const Common& c, std::ostream& out) {
  if (a.search) {
    if (a.m <= 0 || a.qs.empty()) throw InputError("orbit --search needs --m and --qs");
    OrbitSearchOptions o;
    o.exhaustive = !a.random;
    o.samples = a.samples;
    o.max_candidates = a.max_candidates;
    o.seed = c.seed;
    o.threads = c.resolved_threads();
    json list = json::array();
    for (const auto& s : orbit_search(a.m, parse_int_list(a.qs), o)) list.push_back(s.str());
    emit(out, {{"m", a.m}, {"qs", a.qs}, {"seed", c.seed}, {"found", list}});
    return kOk;
  }
  const OrbitSpec s = orbit_from_args(a);
  const OrbitCheck chk = orbit_verify(s);
  json j;
  j["spec"] = s.str();
  j["graph"] = s.ambient().descriptor();
  j["independent"] = chk.independent;
  j["size"] = chk.size;
  if (chk.witness_t) j["witness_t"] = *chk.witness_t;
  if (chk.witness) j["witness_coefficients"] = *chk.witness;
  if (!a.expand.empty()) write_file(a.expand, set_text(orbit_expand(s)));
  bool ok = chk.independent;
  if (a.puncture) {
    const PunctureResult p = orbit_puncture(s);
    const VerifyReport rep = verify_independent(p.image, c.resolved_threads());
    json pf = json::array();
    for (const auto& f : p.punctured) pf.push_back(f.str());
    j["puncture"] = {{"punctured", pf},
                     {"graph", p.image.graph.descriptor()},
                     {"size", p.image.tuples.size()},
                     {"dropped", p.dropped},
                     {"zero_generator", p.zero_generator},
                     {"verified", rep.pass}};
    if (!a.puncture_out.empty()) write_file(a.puncture_out, set_text(p.image));
    ok = ok && rep.pass;
  }
  emit(out, j);
  return ok ? kOk : kVerifyFail;
}

// ---- round ---------------------------------------------------------------

struct RoundArgs {
  std::string config;
  std::string witness;
  std::string base15;
  double seconds = -1;
  bool sweep = false;
  bool no_search = false;
};

int cmd_round(const RoundArgs& a, const Common& c, std::ostream& out, bool seed_given) {
  json cfg;
  try {
    cfg = json::parse(read_file(a.config));
  } catch (const json::parse_error& e) {
    throw InputError(std::string("config is not JSON: ") + e.what());
  }
  PipelineConfig pc = parse_pipeline_config(cfg);
  if (seed_given) pc.heuristic.seed = c.seed;
  if (a.seconds >= 0) pc.heuristic.max_seconds = a.seconds;

  json j;
  j["orbit"] = pc.orbit.str();
  j["target"] = pc.rounding.target().descriptor();
  json eps = json::array();
  for (const auto& e : pc.rounding.eps) eps.push_back(to_string(e));
  j["eps"] = eps;
  j["seed"] = pc.heuristic.seed;

  if (a.sweep) {
    // |T| for every distinct arrangement of the eps values.
    std::vector<Rational> e = pc.rounding.eps;
    std::sort(e.begin(), e.end());
    json rows = json::array();
    do {
      RoundingSpec rs = pc.rounding;
      rs.eps = e;
      json er = json::array();
      for (const auto& x : e) er.push_back(to_string(x));
      rows.push_back({{"eps", er}, {"t_size", build_T(pc.orbit, rs).tuples.size()}});
    } while (std::next_permutation(e.begin(), e.end()));
    j["sweep"] = rows;
  }
  if (a.no_search) {
    j["t_size"] = build_T(pc.orbit, pc.rounding).tuples.size();
    emit(out, j);
    return kOk;
  }
  RoundSearchOptions o;
  o.heuristic = pc.heuristic;
  o.exact.threads = c.resolved_threads();
  o.exact.seed = pc.heuristic.seed;
  o.exact.budget.max_seconds = pc.heuristic.max_seconds;
  const RoundSearchResult r = round_and_search(pc.orbit, pc.rounding, o);
  j["t_size"] = r.t_size;
  j["alpha"] = r.search.alpha;
  j["status"] = to_string(r.search.status);
  j["verified"] = r.verified;
  j["iterations"] = r.search.nodes;
  j["seconds"] = r.search.seconds;
  j["witness_path"] = a.witness.empty() ? json(nullptr) : json(a.witness);
  if (!a.witness.empty()) write_file(a.witness, set_text(r.witness));
  if (!a.base15.empty()) write_file(a.base15, format_base15_set(r.witness));
  emit(out, j);
  return r.verified ? kOk : kVerifyFail;
}

// ---- theta, bounds -------------------------------------------------------

int cmd_theta(const std::vector<std::string>& factors, const Common& c, std::ostream& out) {
  const ProductGraph g = graph_from_args(factors, 1);
  json fs = json::array();
  for (const auto& f : g.factors()) {
    ThetaResult t = theta_circulant(f);
    fs.push_back({{"graph", f.label()}, {"theta", real_json(t.value)}, {"min_eigenvalue", t.min_eigenvalue}});
  }
  emit(out, {{"graph", g.descriptor()}, {"factors", fs}, {"theta", real_json(theta_product(g.factors(), c.resolved_threads()))}});
  return kOk;
}

struct BoundsArgs {
  std::vector<std::string> factors;
  std::size_t power = 1;
  std::size_t exact_cap = 1400;
  double seconds = 0;
  std::string witness;
};

int cmd_bounds(const BoundsArgs& a, const Common& c, std::ostream& out) {
  const ProductGraph g = graph_from_args(a.factors, a.power);
  SandwichOptions o;
  o.exact_cap = a.exact_cap;
  o.budget.max_seconds = a.seconds;
  o.heuristic.seed = c.seed;
  o.heuristic.max_seconds = a.seconds;
  o.threads = c.resolved_threads();
  const BoundReport rep = sandwich(g, o);
  const VerifyReport check = verify_independent(rep.witness, o.threads);
  if (!a.witness.empty()) write_file(a.witness, set_text(rep.witness));
  json j = bound_report_json(rep);
  j["witness_verified"] = check.pass;
  j["seed"] = c.seed;
  emit(out, j);
  return check.pass ? kOk : kVerifyFail;
}

// ---- distance, converge, convergents --------------------------------------

int cmd_distance(const std::string& parent, const std::string& child, std::ostream& out) {
  const Fraction p = parse_fraction(parent), q = parse_fraction(child);
  const Rational b = distance_bound(p, q);
  emit(out, {{"parent", p.str()}, {"child", q.str()}, {"bound", to_string(b)}, {"display", format_real(b.convert_to<double>())}});
  return kOk;
}

int cmd_converge(const std::string& target, std::size_t count, std::ostream& out) {
  const ConvergingSequence s = converging_sequence(parse_fraction(target), count);
  json terms = json::array();
  for (const auto& t : s.terms) {
    const RemovalPair rp = removal_pair(t);
    json row = {{"term", t.str()}, {"removal_child", rp.child.str()}};
    if (rp.child.value() >= 2) {
      const Rational b = distance_bound(t, rp.child);
      row["distance_bound"] = to_string(b);
      row["display"] = format_real(b.convert_to<double>());
    }
    terms.push_back(row);
  }
  emit(out, {{"target", s.target.str()}, {"start", {s.start.a.str(), s.start.b.str()}}, {"terms", terms}});
  return kOk;
}

int cmd_convergents(const std::string& surd, const std::string& decimal, std::size_t n, std::ostream& out) {
  if (surd.empty() == decimal.empty()) throw InputError("give exactly one of --surd and --decimal");
  RealDescriptor r = surd.empty() ? RealDescriptor(DecimalReal::parse(decimal)) : RealDescriptor(QuadraticSurd::parse(surd));
  const ConvergentSeq seq = convergents(r, n);
  const ConvergentCheck chk = check_convergents(seq, r);
  json coeffs = json::array(), terms = json::array();
  for (const auto& a : seq.coefficients) coeffs.push_back(a.str());
  for (const auto& t : seq.terms) terms.push_back(t.str());
  emit(out, {{"target", seq.target},
             {"coefficients", coeffs},
             {"terms", terms},
             {"terminated", seq.terminated},
             {"checks", {{"determinant", chk.determinant}, {"monotone", chk.monotone}, {"rounding", chk.rounding}}}});
  return chk.ok() ? kOk : kVerifyFail;
}

// ---- discont -------------------------------------------------------------

struct DiscontArgs {
  std::string range = "2:3";
  std::int64_t max_p = 27;
  std::string cache;
  std::string csv;
  std::string dot;
  std::string format = "csv";
  double seconds = 600;
  double large_seconds = 7200;
  bool verbose = false;
};

int cmd_discont(const DiscontArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  const auto colon = a.range.find(':');
  if (colon == std::string::npos) throw InputError("--range must look like lo:hi");
  ClassifyOptions o;
  o.lo = parse_rational(a.range.substr(0, colon));
  o.hi = parse_rational(a.range.substr(colon + 1));
  o.max_p = a.max_p;
  o.cache_path = a.cache;
  o.threads = c.resolved_threads();
  o.verbose = a.verbose;
  o.budget.max_seconds = a.seconds;
  o.large_budget.max_seconds = a.large_seconds;
  o.heuristic.seed = c.seed;
  const ScanResult s = classify(o);
  if (!a.csv.empty()) write_file(a.csv, scan_csv(s));
  if (!a.dot.empty()) write_file(a.dot, hasse_dot(s));
  if (a.format == "csv") {
    out << scan_csv(s);
  } else if (a.format == "dot") {
    out << hasse_dot(s);
  } else if (a.format == "json") {
    json pts = json::array(), open = json::array(), edges = json::array();
    for (auto i : s.discontinuities)
      pts.push_back({{"point", point_key(s.survivors[i].point)}, {"alpha", *s.survivors[i].alpha},
                     {"provenance", s.survivors[i].provenance}});
    for (const auto& r : s.survivors)
      if (r.status == DiscontStatus::undetermined)
        open.push_back({{"point", point_key(r.point)}, {"lower", r.lower}, {"upper", r.upper}});
    for (auto [u, v] : s.hasse) edges.push_back({point_key(s.survivors[u].point), point_key(s.survivors[v].point)});
    emit(out, {{"grid", s.grid_size},
               {"survivors", s.survivors.size()},
               {"pruned", {{"numerator", s.pruned_numerator}, {"theta", s.pruned_theta}, {"nested_floor", s.pruned_nested_floor}}},
               {"discontinuities", pts},
               {"hasse", edges},
               {"undetermined", open},
               {"monotonicity_violations", s.monotonicity_violations},
               {"complete", s.complete},
               {"seed", c.seed}});
  } else {
    throw InputError("unknown format '" + a.format + "'");
  }
  err << "grid " << s.grid_size << ", survivors " << s.survivors.size() << ", discontinuities "
      << s.discontinuities.size() << (s.complete ? "" : ", scan incomplete") << '\n';
  if (s.monotonicity_violations) return kVerifyFail;
  return s.complete ? kOk : kBudgetExhausted;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Independence numbers and Shannon capacity bounds for fraction graphs"};
  app.fallthrough();
  app.require_subcommand(1);
  Common common;
  app.add_option("--threads", common.threads, "Worker threads (0 = available cores)");
  auto* seed_opt = app.add_option("--seed", common.seed, "Random seed");

  int code = kOk;
  std::function<int()> action;

  AlphaArgs alpha;
  auto* s_alpha = app.add_subcommand("alpha", "Independence number of a product");
  s_alpha->add_option("factors", alpha.factors, "Factors p/q, or a descriptor such as 15/2^4")->required();
  s_alpha->add_option("--power", alpha.power, "Repeat the factor list this many times");
  s_alpha->add_option("--method", alpha.method)->check(CLI::IsMember({"exact", "heuristic", "auto"}));
  s_alpha->add_option("--export-ilp", alpha.export_ilp, "Write the 0/1 program in LP format");
  s_alpha->add_option("--witness", alpha.witness, "Write the witness set");
  s_alpha->add_option("--exact-cap", alpha.exact_cap, "Largest product solved exactly under --method auto");
  s_alpha->add_option("--cap", alpha.cap, "Materialization limit");
  s_alpha->add_option("--seconds", alpha.seconds, "Time budget (0 = none)");
  s_alpha->add_option("--nodes", alpha.nodes, "Node budget for the exact solver (0 = none)");
  s_alpha->add_option("--iterations", alpha.iterations, "Local-search iterations per restart");
  s_alpha->add_option("--restarts", alpha.restarts, "Local-search restarts");
  s_alpha->add_flag("--no-symmetry", alpha.no_symmetry, "Disable symmetry breaking");
  s_alpha->callback([&] { action = [&] { return cmd_alpha(alpha, common, out); }; });

  VerifyArgs verify;
  auto* s_verify = app.add_subcommand("verify", "Check that a vertex set is independent");
  s_verify->add_option("file", verify.file)->required();
  s_verify->add_option("--graph", verify.graph, "Graph descriptor, e.g. 15/2^4")->required();
  s_verify->add_option("--format", verify.format)->check(CLI::IsMember({"auto", "base15", "decimal"}));
  s_verify->callback([&] { action = [&] { return cmd_verify(verify, common, out); }; });

  OrbitArgs orbit;
  auto* s_orbit = app.add_subcommand("orbit", "Verify, expand, puncture or search orbit sets");
  s_orbit->add_option("--spec", orbit.spec, "\"m=.. gens=.. qs=..\"");
  s_orbit->add_option("--m", orbit.m);
  s_orbit->add_option("--gens", orbit.gens, "Comma-separated; several generators separated by ';'");
  s_orbit->add_option("--qs", orbit.qs);
  s_orbit->add_option("--expand", orbit.expand, "Write the orbit as a vertex set");
  s_orbit->add_flag("--puncture", orbit.puncture);
  s_orbit->add_option("--puncture-out", orbit.puncture_out);
  s_orbit->add_flag("--search", orbit.search);
  s_orbit->add_flag("--random", orbit.random);
  s_orbit->add_option("--samples", orbit.samples);
  s_orbit->add_option("--max-candidates", orbit.max_candidates);
  s_orbit->callback([&] { action = [&] { return cmd_orbit(orbit, common, out); }; });

  RoundArgs round;
  auto* s_round = app.add_subcommand("round", "Rounding pipeline: build T and search it");
  s_round->add_option("--config", round.config)->required();
  s_round->add_option("--witness", round.witness);
  s_round->add_option("--base15", round.base15, "Write the witness in the 4-character format");
  s_round->add_option("--seconds", round.seconds, "Override the configured time budget");
  s_round->add_flag("--sweep", round.sweep, "Report |T| for every arrangement of eps");
  s_round->add_flag("--no-search", round.no_search, "Only build T");
  s_round->callback([&] { action = [&] { return cmd_round(round, common, out, seed_opt->count() > 0); }; });

  std::vector<std::string> theta_factors;
  auto* s_theta = app.add_subcommand("theta", "Lovasz theta of a product of circulants");
  s_theta->add_option("factors", theta_factors)->required();
  s_theta->callback([&] { action = [&] { return cmd_theta(theta_factors, common, out); }; });

  BoundsArgs bounds;
  auto* s_bounds = app.add_subcommand("bounds", "Lower and upper bounds on alpha");
  s_bounds->add_option("factors", bounds.factors)->required();
  s_bounds->add_option("--power", bounds.power);
  s_bounds->add_option("--exact-cap", bounds.exact_cap);
  s_bounds->add_option("--seconds", bounds.seconds);
  s_bounds->add_option("--witness", bounds.witness);
  s_bounds->callback([&] { action = [&] { return cmd_bounds(bounds, common, out); }; });

  std::string d_parent, d_child;
  auto* s_distance = app.add_subcommand("distance", "Bound on the distance between a fraction and its removal child");
  s_distance->add_option("parent", d_parent)->required();
  s_distance->add_option("child", d_child)->required();
  s_distance->callback([&] { action = [&] { return cmd_distance(d_parent, d_child, out); }; });

  std::string c_target;
  std::size_t c_count = 3;
  auto* s_converge = app.add_subcommand("converge", "Fractions decreasing to a target");
  s_converge->add_option("target", c_target)->required();
  s_converge->add_option("--count", c_count);
  s_converge->callback([&] { action = [&] { return cmd_converge(c_target, c_count, out); }; });

  std::string cf_surd, cf_decimal;
  std::size_t cf_n = 10;
  auto* s_cf = app.add_subcommand("convergents", "Continued-fraction convergents");
  s_cf->add_option("--surd", cf_surd, "A,B,D,C meaning (A + B sqrt(D))/C");
  s_cf->add_option("--decimal", cf_decimal);
  s_cf->add_option("--n", cf_n);
  s_cf->callback([&] { action = [&] { return cmd_convergents(cf_surd, cf_decimal, cf_n, out); }; });

  DiscontArgs disc;
  auto* s_disc = app.add_subcommand("discont", "Scan for discontinuities of alpha_3");
  s_disc->add_option("--range", disc.range);
  s_disc->add_option("--max-p", disc.max_p);
  s_disc->add_option("--cache", disc.cache, "JSON-lines cache, reused across runs");
  s_disc->add_option("--csv", disc.csv);
  s_disc->add_option("--dot", disc.dot);
  s_disc->add_option("--format", disc.format)->check(CLI::IsMember({"csv", "dot", "json"}));
  s_disc->add_option("--seconds", disc.seconds, "Exact-search budget per point up to 1400 vertices");
  s_disc->add_option("--large-seconds", disc.large_seconds, "Exact-search budget per point above 1400 vertices");
  s_disc->add_flag("--verbose", disc.verbose);
  s_disc->callback([&] { action = [&] { return cmd_discont(disc, common, out, err); }; });

  std::vector<std::string> argv_store{"shannon"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kMalformedInput;
  }

  try {
    code = action ? action() : kMalformedInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const PrecisionError& e) {
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExhausted;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return code;
}

}  // namespace shannon::cli
