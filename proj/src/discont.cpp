#include "shannon/discont.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "shannon/bounds.hpp"
#include "shannon/error.hpp"
#include "shannon/orbit.hpp"

namespace shannon {

namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::json;

GridPoint sorted(GridPoint p) {
  std::sort(p.begin(), p.end());
  return p;
}

std::int64_t max_numerator(const GridPoint& p) {
  std::int64_t m = 0;
  for (const auto& f : p) m = std::max(m, to_int64(f.p()));
  return m;
}

json record_to_json(const DiscontRecord& r) {
  json j;
  j["point"] = point_key(r.point);
  j["alpha"] = r.alpha ? json(*r.alpha) : json(nullptr);
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  j["status"] = r.alpha ? "determined" : "open";
  j["provenance"] = r.provenance;
  j["vertices"] = r.vertices;
  j["seconds"] = r.seconds;
  return j;
}

DiscontRecord record_from_json(const json& j) {
  DiscontRecord r;
  r.point = parse_point(j.at("point").get<std::string>());
  if (!j.at("alpha").is_null()) r.alpha = j.at("alpha").get<std::int64_t>();
  r.lower = j.at("lower").get<std::int64_t>();
  r.upper = j.at("upper").get<std::int64_t>();
  r.provenance = j.at("provenance").get<std::string>();
  r.vertices = j.value("vertices", std::uint64_t{0});
  r.seconds = j.value("seconds", 0.0);
  return r;
}

std::map<std::string, DiscontRecord> load_cache(const std::string& path) {
  std::map<std::string, DiscontRecord> out;
  if (path.empty()) return out;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      DiscontRecord r = record_from_json(json::parse(line));
      out[point_key(r.point)] = std::move(r);
    } catch (const std::exception&) {
      // A torn final line from an interrupted run; the point is recomputed.
    }
  }
  return out;
}

// Looks for a cyclic orbit of size n in the product of E_{n/a_i} with
// n/a_i <= f_i, then pushes it into the product of the E_{f_i} by floor maps.
std::optional<OrbitSpec> orbit_lower(const GridPoint& p, std::int64_t n) {
  std::vector<std::int64_t> qs;
  for (const auto& f : p) {
    const BigInt num = BigInt(n) * f.q();
    const std::int64_t a = to_int64((num + f.p() - 1) / f.p());
    if (2 * a > n) return std::nullopt;
    qs.push_back(a);
  }
  OrbitSearchOptions opt;
  opt.max_candidates = 1'000'000;
  for (const auto& spec : orbit_search(n, qs, opt)) {
    VertexSet img;
    img.graph = ProductGraph::from_fractions(p);
    img.claimed_independent = true;
    for (const auto& t : orbit_expand(spec).tuples) {
      Tuple u(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) u[i] = t[i] * to_int64(p[i].p()) / n;
      img.tuples.push_back(std::move(u));
    }
    if (verify_independent(img).pass) return spec;
  }
  return std::nullopt;
}

}  // namespace

std::string point_key(const GridPoint& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i].str();
  return s;
}

GridPoint parse_point(std::string_view key) {
  GridPoint p;
  std::size_t pos = 0;
  while (pos <= key.size()) {
    std::size_t end = key.find(',', pos);
    if (end == std::string_view::npos) end = key.size();
    p.push_back(parse_fraction(key.substr(pos, end - pos)));
    pos = end + 1;
  }
  return sorted(std::move(p));
}

bool point_leq(const GridPoint& u, const GridPoint& v) {
  if (u.size() != v.size()) throw InputError("points of different arity");
  GridPoint a = sorted(u), b = sorted(v);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] < a[i]) return false;
  return true;
}

std::vector<Fraction> grid_fractions(const Rational& lo, const Rational& hi, std::int64_t max_p) {
  std::vector<Fraction> out;
  if (lo > hi || max_p < 1) return out;
  for (std::int64_t p = 1; p <= max_p; ++p)
    for (std::int64_t q = 1; q <= p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      Rational v(p, q);
      if (v >= lo && v <= hi) out.emplace_back(p, q);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GridPoint> candidate_grid(const Rational& lo, const Rational& hi, std::int64_t max_p, std::size_t k) {
  const auto fr = grid_fractions(lo, hi, max_p);
  std::vector<GridPoint> out;
  if (fr.empty() || k == 0) return out;
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    GridPoint p;
    for (auto i : idx) p.push_back(fr[i]);
    out.push_back(std::move(p));
    // Next nondecreasing index tuple.
    std::size_t j = k;
    while (j > 0 && idx[j - 1] == fr.size() - 1) --j;
    if (j == 0) break;
    ++idx[j - 1];
    for (std::size_t t = j; t < k; ++t) idx[t] = idx[j - 1];
  }
  return out;
}

std::string to_string(PruneReason r) {
  switch (r) {
    case PruneReason::none:
      return "none";
    case PruneReason::numerator:
      return "numerator";
    case PruneReason::theta:
      return "theta";
    case PruneReason::nested_floor:
      return "nested_floor";
  }
  return "unknown";
}

PruneResult prune(const GridPoint& point, const PruneThresholds& thresholds) {
  PruneResult res;
  const std::int64_t pmax = max_numerator(point);
  if (pmax > thresholds.max_p) {
    res.keep = false;
    res.reason = PruneReason::numerator;
    return res;
  }
  std::vector<CirculantFactor> fs;
  for (const auto& f : point) fs.push_back(CirculantFactor::from_fraction(f));
  res.theta = theta_product(fs);
  if (static_cast<double>(pmax) > res.theta + thresholds.theta_tol) {
    res.keep = false;
    res.reason = PruneReason::theta;
    return res;
  }
  res.nested_floor = nested_floor(point).value;
  if (BigInt(pmax) > res.nested_floor) {
    res.keep = false;
    res.reason = PruneReason::nested_floor;
  }
  return res;
}

std::string to_string(DiscontStatus s) {
  switch (s) {
    case DiscontStatus::confirmed:
      return "confirmed";
    case DiscontStatus::interior:
      return "interior";
    case DiscontStatus::pruned:
      return "pruned";
    case DiscontStatus::undetermined:
      return "undetermined";
  }
  return "unknown";
}

DiscontRecord evaluate_point(const GridPoint& point_in, const ClassifyOptions& options) {
  const auto start = Clock::now();
  DiscontRecord rec;
  rec.point = sorted(point_in);
  const GridPoint& p = rec.point;
  auto finish = [&] {
    rec.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return rec;
  };

  // E_n is n disjoint vertices, so alpha(E_n x G) = n alpha(G).
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p[i].is_integer()) continue;
    const std::int64_t n = to_int64(p[i].p());
    GridPoint rest = p;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    std::int64_t sub = 1;
    std::string how = "integer-reduction";
    if (rest.size() == 1) {
      sub = to_int64(rest[0].floor());
    } else if (rest.size() == 2) {
      sub = alpha_two_factor(rest[0], rest[1]).alpha;
    } else if (rest.size() > 2) {
      DiscontRecord inner = evaluate_point(rest, options);
      if (!inner.alpha) {
        rec.lower = n * inner.lower;
        rec.upper = n * inner.upper;
        rec.provenance = "integer-reduction";
        return finish();
      }
      sub = *inner.alpha;
    }
    rec.alpha = rec.lower = rec.upper = n * sub;
    rec.provenance = how;
    return finish();
  }
  if (p.size() == 2) {
    rec.alpha = rec.lower = rec.upper = alpha_two_factor(p[0], p[1]).alpha;
    rec.provenance = "two-factor";
    return finish();
  }

  const ProductGraph g = ProductGraph::from_fractions(p);
  rec.vertices = g.vertex_count();
  const BigInt nf = nested_floor(p).value;
  const double th = theta_product(g.factors());
  std::int64_t upper = to_int64(nf);
  upper = std::min<std::int64_t>(upper, static_cast<std::int64_t>(std::floor(th + 1e-9)));
  rec.upper = upper;
  rec.lower = 1;
  for (const auto& f : p) rec.lower *= to_int64(f.floor());

  for (std::int64_t n = upper; n > rec.lower; --n) {
    if (auto spec = orbit_lower(p, n)) {
      rec.lower = n;
      rec.provenance = "orbit " + spec->str();
      break;
    }
  }
  if (rec.lower == upper && !rec.provenance.empty()) {
    rec.alpha = upper;
    return finish();
  }
  if (rec.vertices <= options.heuristic_cap && rec.lower < upper) {
    DenseGraph dg = materialize(g, options.heuristic_cap);
    HeuristicOptions h = options.heuristic;
    h.target = static_cast<std::size_t>(upper);
    SolveResult r = solve_heuristic(dg, h);
    rec.lower = std::max<std::int64_t>(rec.lower, static_cast<std::int64_t>(r.alpha));
  }
  if (rec.lower == upper) {
    rec.alpha = upper;
    rec.provenance = "bracket";
    return finish();
  }
  if (rec.vertices <= options.symmetry_cap) {
    DenseGraph dg = materialize(g, options.symmetry_cap);
    ExactOptions ex;
    ex.symmetry = true;
    ex.budget = rec.vertices <= options.exact_cap ? options.budget : options.large_budget;
    ex.seed = options.heuristic.seed;
    SolveResult r = solve_exact(dg, ex);
    rec.lower = std::max<std::int64_t>(rec.lower, static_cast<std::int64_t>(r.alpha));
    if (r.status == SolveStatus::exact) {
      rec.alpha = rec.upper = static_cast<std::int64_t>(r.alpha);
      rec.provenance = "exact";
      return finish();
    }
    rec.provenance = "exact-timeout";
    return finish();
  }
  rec.provenance = "bracket-open";
  return finish();
}

ScanResult classify(const ClassifyOptions& options) {
  ScanResult scan;
  const auto grid = candidate_grid(options.lo, options.hi, options.max_p, options.k);
  const auto fr = grid_fractions(options.lo, options.hi, options.max_p);
  scan.grid_size = grid.size();
  PruneThresholds th;
  th.max_p = options.max_p;

  std::vector<GridPoint> keep;
  for (const auto& p : grid) {
    PruneResult pr = prune(p, th);
    if (pr.keep) {
      keep.push_back(p);
      continue;
    }
    switch (pr.reason) {
      case PruneReason::numerator:
        ++scan.pruned_numerator;
        break;
      case PruneReason::theta:
        ++scan.pruned_theta;
        break;
      default:
        ++scan.pruned_nested_floor;
        break;
    }
  }

  auto cache = load_cache(options.cache_path);
  std::ofstream cache_out;
  if (!options.cache_path.empty()) cache_out.open(options.cache_path, std::ios::app);
  std::mutex mu;
  scan.survivors.resize(keep.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= keep.size()) return;
      const std::string key = point_key(keep[i]);
      {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end() && it->second.alpha) {
          scan.survivors[i] = it->second;
          continue;
        }
      }
      DiscontRecord rec = evaluate_point(keep[i], options);
      std::lock_guard<std::mutex> lock(mu);
      if (cache_out.is_open()) {
        cache_out << record_to_json(rec).dump() << "\n";
        cache_out.flush();
      }
      if (options.verbose)
        std::cerr << "[discont] " << key << " alpha=" << (rec.alpha ? std::to_string(*rec.alpha) : "?") << " ("
                  << rec.provenance << ", " << rec.vertices << " vertices, " << rec.seconds << " s)\n";
      scan.survivors[i] = std::move(rec);
    }
  };
  unsigned threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  // Monotonicity narrows the open brackets using the settled survivors.
  for (bool changed = true; changed;) {
    changed = false;
    for (auto& v : scan.survivors) {
      if (v.alpha) continue;
      for (const auto& w : scan.survivors) {
        if (!w.alpha) continue;
        if (point_leq(w.point, v.point) && *w.alpha > v.lower) v.lower = *w.alpha;
        if (point_leq(v.point, w.point) && *w.alpha < v.upper) v.upper = *w.alpha;
      }
      if (v.lower == v.upper) {
        v.alpha = v.lower;
        v.provenance = "monotone";
        changed = true;
      }
    }
  }

  // alpha at an arbitrary grid point lies between the largest lower and the
  // largest upper value over survivors below it, since every discontinuity
  // survives pruning and alpha is the maximum over discontinuities below.
  auto alpha_range = [&](const GridPoint& u) {
    std::int64_t lo = 0, hi = 0;
    for (const auto& w : scan.survivors)
      if (point_leq(w.point, u)) {
        lo = std::max(lo, w.alpha ? *w.alpha : w.lower);
        hi = std::max(hi, w.alpha ? *w.alpha : w.upper);
      }
    return std::make_pair(lo, hi);
  };
  auto predecessor = [&](const Fraction& f) -> std::optional<Fraction> {
    auto it = std::lower_bound(fr.begin(), fr.end(), f);
    if (it == fr.begin()) return std::nullopt;
    return *std::prev(it);
  };

  for (auto& rec : scan.survivors) {
    if (!rec.alpha) {
      rec.status = DiscontStatus::undetermined;
      scan.complete = false;
      continue;
    }
    bool all_lower = true, ambiguous = false;
    for (std::size_t i = 0; i < rec.point.size(); ++i) {
      if (i > 0 && rec.point[i] == rec.point[i - 1]) continue;
      auto pred = predecessor(rec.point[i]);
      if (!pred) continue;  // lowering would leave the box
      GridPoint u = rec.point;
      u[i] = *pred;
      auto [lo, hi] = alpha_range(sorted(u));
      if (lo >= *rec.alpha) {
        all_lower = false;
      } else if (hi >= *rec.alpha) {
        ambiguous = true;
      }
    }
    if (!all_lower) {
      rec.status = DiscontStatus::interior;
    } else if (ambiguous) {
      rec.status = DiscontStatus::undetermined;
      scan.complete = false;
    } else {
      rec.status = DiscontStatus::confirmed;
    }
  }

  for (std::size_t a = 0; a < scan.survivors.size(); ++a)
    for (std::size_t b = 0; b < scan.survivors.size(); ++b) {
      const auto &u = scan.survivors[a], &v = scan.survivors[b];
      if (a != b && u.alpha && v.alpha && point_leq(u.point, v.point) && *u.alpha > *v.alpha)
        ++scan.monotonicity_violations;
    }

  for (std::size_t i = 0; i < scan.survivors.size(); ++i)
    if (scan.survivors[i].status == DiscontStatus::confirmed) scan.discontinuities.push_back(i);
  std::sort(scan.discontinuities.begin(), scan.discontinuities.end(), [&](std::size_t a, std::size_t b) {
    return scan.survivors[a].point < scan.survivors[b].point;
  });
  const auto& d = scan.discontinuities;
  auto below = [&](std::size_t a, std::size_t b) {
    return a != b && point_leq(scan.survivors[a].point, scan.survivors[b].point);
  };
  for (auto a : d)
    for (auto b : d) {
      if (!below(a, b)) continue;
      bool covered = true;
      for (auto c : d)
        if (below(a, c) && below(c, b)) {
          covered = false;
          break;
        }
      if (covered) scan.hasse.emplace_back(a, b);
    }
  return scan;
}

std::int64_t step_function(const Fraction& f) {
  const Rational v = f.value();
  if (v < 2 || v > 3) throw InputError("step function is defined on [2, 3], got " + f.str());
  if (v < Rational(5, 2)) return 8;
  if (v < Rational(8, 3)) return 10;
  if (v < Rational(11, 4)) return 12;
  if (v < Rational(14, 5)) return 13;
  if (v < 3) return 14;
  return 27;
}

std::string scan_csv(const ScanResult& scan) {
  std::ostringstream out;
  out << "point,alpha,provenance,vertices\n";
  for (auto i : scan.discontinuities) {
    const auto& r = scan.survivors[i];
    out << '"' << point_key(r.point) << "\"," << *r.alpha << ',' << r.provenance << ',' << r.vertices << '\n';
  }
  return out.str();
}

std::string hasse_dot(const ScanResult& scan) {
  std::ostringstream out;
  out << "digraph discontinuities {\n  rankdir=BT;\n  node [shape=box];\n";
  for (auto i : scan.discontinuities) {
    const auto& r = scan.survivors[i];
    out << "  n" << i << " [label=\"(" << point_key(r.point) << ")\\nalpha = " << *r.alpha << "\"];\n";
  }
  for (auto [a, b] : scan.hasse) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace shannon
