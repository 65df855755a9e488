#include "shannon/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <numeric>
#include <random>
#include <thread>

#include "shannon/error.hpp"
#include "shannon/simplex.hpp"

namespace shannon {

namespace {

BigInt floor_of(const Rational& r) { return boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r); }

BigInt evaluate_order(const std::vector<Rational>& values, const std::vector<std::size_t>& order) {
  BigInt v = floor_of(values[order[0]]);
  for (std::size_t i = 1; i < order.size(); ++i) v = floor_of(Rational(v) * values[order[i]]);
  return v;
}

// Sends a vertex of the reduced E_{p/q} into the circulant (s p, s q).
std::int64_t scale_into(std::int64_t x, const Fraction& reduced, const CirculantFactor& f) {
  return x * (f.m() / to_int64(reduced.p()));
}

}  // namespace

ThetaResult theta_circulant(const CirculantFactor& f, double tol) {
  const std::int64_t m = f.m(), q = f.q(), half = m / 2;
  std::vector<std::int64_t> ds;
  for (std::int64_t d = q; d <= half; ++d) ds.push_back(d);
  auto weight = [&](std::int64_t d) { return 2 * d == m ? 1.0L : 2.0L; };
  const long double two_pi = 2.0L * std::acos(-1.0L);
  auto cosine = [&](std::int64_t j, std::int64_t d) {
    return std::cos(two_pi * static_cast<long double>((j * d) % m) / static_cast<long double>(m));
  };

  // Eigenvalues of m B are 1 + sum_d w_d y_d cos(2 pi j d / m) with y_d = m b_d
  // free; theta is the j = 0 eigenvalue. Each y_d is split as y+ - y-.
  LinearProgram lp;
  const std::size_t nd = ds.size();
  lp.c.resize(2 * nd);
  for (std::size_t i = 0; i < nd; ++i) {
    lp.c[2 * i] = weight(ds[i]);
    lp.c[2 * i + 1] = -weight(ds[i]);
  }
  for (std::int64_t j = 0; j <= half; ++j) {
    std::vector<long double> row(2 * nd);
    for (std::size_t i = 0; i < nd; ++i) {
      long double a = weight(ds[i]) * cosine(j, ds[i]);
      row[2 * i] = -a;
      row[2 * i + 1] = a;
    }
    lp.a.push_back(std::move(row));
    lp.b.push_back(1);
  }
  LpSolution sol = solve_lp(lp);
  if (sol.status != LpSolution::Status::optimal)
    throw NumericalError("theta LP for " + f.label() + " did not reach an optimum");

  ThetaResult out;
  out.iterations = sol.iterations;
  long double min_eig = 0;
  long double top = 1;
  for (std::int64_t j = 0; j < m; ++j) {
    long double lam = 1;
    for (std::size_t i = 0; i < nd; ++i) lam += weight(ds[i]) * (sol.x[2 * i] - sol.x[2 * i + 1]) * cosine(j, ds[i]);
    if (j == 0) {
      top = lam;
      min_eig = lam;
    }
    min_eig = std::min(min_eig, lam);
  }
  out.value = static_cast<double>(top);
  out.min_eigenvalue = static_cast<double>(min_eig);
  if (min_eig < -tol * std::max<long double>(1, top))
    throw NumericalError("theta LP for " + f.label() + " left a negative eigenvalue " + std::to_string(out.min_eigenvalue));
  return out;
}

double theta_product(const std::vector<CirculantFactor>& factors, unsigned threads) {
  std::map<std::pair<std::int64_t, std::int64_t>, double> cache;
  std::vector<std::pair<std::int64_t, std::int64_t>> distinct;
  for (const auto& f : factors)
    if (cache.emplace(std::make_pair(f.m(), f.q()), 0.0).second) distinct.emplace_back(f.m(), f.q());
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  if (threads > 1 && distinct.size() > 1) {
    std::vector<std::future<double>> jobs;
    for (auto [m, q] : distinct)
      jobs.push_back(std::async(std::launch::async, [m, q] { return theta_circulant(CirculantFactor(m, q)).value; }));
    for (std::size_t i = 0; i < distinct.size(); ++i) cache[distinct[i]] = jobs[i].get();
  } else {
    for (auto key : distinct) cache[key] = theta_circulant(CirculantFactor(key.first, key.second)).value;
  }
  double prod = 1;
  for (const auto& f : factors) prod *= cache[{f.m(), f.q()}];
  return prod;
}

NestedFloor nested_floor(const std::vector<Rational>& values) {
  NestedFloor out;
  const std::size_t k = values.size();
  if (k == 0) {
    out.value = 1;
    return out;
  }
  for (const auto& v : values)
    if (v <= 0) throw InputError("nested floor needs positive values");
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  auto by_value = [&](std::size_t a, std::size_t b) { return values[a] < values[b]; };
  auto consider = [&](const std::vector<std::size_t>& o) {
    BigInt v = evaluate_order(values, o);
    if (out.order.empty() || v < out.value) {
      out.value = v;
      out.order = o;
    }
  };
  std::sort(order.begin(), order.end(), by_value);
  if (k <= 8) {
    do consider(order);
    while (std::next_permutation(order.begin(), order.end(), by_value));
  } else {
    out.exhaustive = false;
    consider(order);
    std::reverse(order.begin(), order.end());
    consider(order);
    std::vector<std::size_t> given(k);
    std::iota(given.begin(), given.end(), 0);
    consider(given);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 4096; ++i) {
      std::shuffle(order.begin(), order.end(), rng);
      consider(order);
    }
  }
  return out;
}

NestedFloor nested_floor(const std::vector<Fraction>& fractions) {
  std::vector<Rational> values;
  values.reserve(fractions.size());
  for (const auto& f : fractions) values.push_back(f.value());
  return nested_floor(values);
}

TwoFactor alpha_two_factor(const Fraction& f1, const Fraction& f2) {
  if (f1.value() < 2 || f2.value() < 2) throw InputError("two-factor formula needs both fractions >= 2");
  const BigInt a1 = f1.floor(), a2 = f2.floor();
  const BigInt na = floor_of(Rational(a1) * f2.value());
  const BigInt nb = floor_of(Rational(a2) * f1.value());
  TwoFactor out;
  const std::int64_t n = to_int64(na < nb ? na : nb);
  const std::int64_t b1 = to_int64(a1), b2 = to_int64(a2);
  out.alpha = n;
  Tuple gen = nb <= na ? Tuple{1, b1} : Tuple{b2, 1};
  out.orbit = OrbitSpec::cyclic(n, gen, {b2, b1});

  const std::int64_t p1 = to_int64(f1.p()), p2 = to_int64(f2.p());
  out.witness.graph = ProductGraph::from_fractions({f1, f2});
  for (std::int64_t t = 0; t < n; ++t) {
    std::int64_t x = (t * gen[0]) % n, y = (t * gen[1]) % n;
    out.witness.tuples.push_back({x * p1 / n, y * p2 / n});
  }
  out.witness.claimed_independent = verify_independent(out.witness).pass;
  return out;
}

Rational distance_bound(const Fraction& parent, const Fraction& child) {
  if (parent.value() < 2 || child.value() < 2) throw InputError("distance bound needs both fractions >= 2");
  if (removal_pair(parent).child != child)
    throw InputError(child.str() + " is not the vertex-removal child of " + parent.str());
  return Rational(BigInt(1), parent.p() - 1) * child.value();
}

BoundReport sandwich(const ProductGraph& g, const SandwichOptions& options) {
  BoundReport rep;
  rep.graph = g.descriptor();
  const auto& fs = g.factors();
  std::vector<Rational> values;
  rep.chi_f = 1;
  for (const auto& f : fs) {
    values.push_back(f.value());
    rep.chi_f *= f.value();
  }
  const NestedFloor nf = nested_floor(values);
  rep.nested_floor = nf.value;
  rep.nested_floor_exhaustive = nf.exhaustive;
  rep.theta = theta_product(fs, options.threads);

  // Product of per-factor sets {0, q, 2q, ...}.
  rep.witness.graph = g;
  {
    std::vector<std::vector<std::int64_t>> sets;
    for (const auto& f : fs) {
      std::vector<std::int64_t> s;
      for (std::int64_t x = 0; x + f.q() <= f.m(); x += f.q()) s.push_back(x);
      sets.push_back(std::move(s));
    }
    std::vector<std::size_t> pick(fs.size(), 0);
    bool done = fs.empty();
    while (!done) {
      Tuple t(fs.size());
      for (std::size_t i = 0; i < fs.size(); ++i) t[i] = sets[i][pick[i]];
      rep.witness.tuples.push_back(std::move(t));
      std::size_t i = fs.size();
      while (true) {
        if (i == 0) {
          done = true;
          break;
        }
        --i;
        if (++pick[i] < sets[i].size()) break;
        pick[i] = 0;
      }
    }
    rep.lower = {rep.witness.tuples.size(), "product", "product of per-factor independent sets"};
  }

  bool determined = false;
  if (fs.size() == 2 && values[0] >= 2 && values[1] >= 2) {
    const Fraction r1 = fs[0].fraction(), r2 = fs[1].fraction();
    TwoFactor two = alpha_two_factor(r1, r2);
    if (static_cast<std::size_t>(two.alpha) > rep.lower.value) {
      VertexSet w;
      w.graph = g;
      for (const auto& t : two.witness.tuples) w.tuples.push_back({scale_into(t[0], r1, fs[0]), scale_into(t[1], r2, fs[1])});
      rep.witness = std::move(w);
      rep.lower = {static_cast<std::size_t>(two.alpha), "orbit", "floor image of orbit " + two.orbit.str()};
    }
    determined = true;  // the two-factor value is exact
  }

  const BigInt lower_big(rep.lower.value);
  if (!determined && lower_big < rep.nested_floor) {
    const std::uint64_t n = g.vertex_count();
    if (n <= options.exact_cap) {
      DenseGraph dg = materialize(g, options.exact_cap);
      ExactOptions ex;
      ex.budget = options.budget;
      ex.symmetry = true;
      ex.threads = options.threads;
      SolveResult r = solve_exact(dg, ex);
      if (r.alpha > rep.lower.value) {
        rep.witness = to_vertex_set(dg, r.witness, true);
        rep.lower = {r.alpha, r.status == SolveStatus::exact ? "exact" : "heuristic",
                     r.status == SolveStatus::exact ? "branch and bound optimum" : "branch and bound incumbent"};
      }
      if (r.status == SolveStatus::exact) {
        determined = true;
        rep.lower.method = "exact";
      }
    } else if (n <= options.heuristic_cap) {
      DenseGraph dg = materialize(g, options.heuristic_cap);
      SolveResult r = solve_heuristic(dg, options.heuristic);
      if (r.alpha > rep.lower.value) {
        rep.witness = to_vertex_set(dg, r.witness, true);
        rep.lower = {r.alpha, "heuristic", "iterated local search"};
      }
    }
  }
  rep.witness.claimed_independent = true;
  const double lower = static_cast<double>(rep.lower.value);
  const double upper = std::min({static_cast<double>(rep.nested_floor), rep.chi_f.convert_to<double>(), rep.theta});
  rep.gap = upper - lower;
  rep.alpha_determined = determined || BigInt(rep.lower.value) >= rep.nested_floor ||
                         lower >= std::floor(rep.theta + 1e-9);
  return rep;
}

}  // namespace shannon
