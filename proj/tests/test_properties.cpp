// Randomized invariants with fixed seeds. Each case counts violations and
// requires zero.

#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "shannon/bounds.hpp"
#include "shannon/continued_fraction.hpp"
#include "shannon/error.hpp"
#include "shannon/independence.hpp"
#include "shannon/orbit.hpp"

using namespace shannon;

namespace {

using Factors = std::vector<std::pair<std::int64_t, std::int64_t>>;

// Random product of circulants E_{p/q} with at most max_n vertices, q <= p/2
// or q = 1.
Factors random_factors(std::mt19937_64& rng, std::int64_t max_n) {
  Factors fs;
  std::int64_t n = 1;
  const int k = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < k; ++i) {
    const std::int64_t room = max_n / n;
    if (room < 2) break;
    const std::int64_t p = 2 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(std::min<std::int64_t>(room, 12) - 1));
    const std::int64_t q = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p / 2));
    fs.emplace_back(p, q);
    n *= p;
  }
  if (fs.empty()) fs.emplace_back(2, 1);
  return fs;
}

ProductGraph to_product(const Factors& fs) {
  std::vector<CirculantFactor> cs;
  for (auto [p, q] : fs) cs.emplace_back(p, q);
  return ProductGraph(cs);
}

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("exact solver agrees with exhaustive subsets") {
    std::mt19937_64 rng(20240611);
    int violations = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const Factors fs = random_factors(rng, 24);
      const ProductGraph g = to_product(fs);
      REQUIRE(g.vertex_count() <= 24);
      const std::size_t want = oracle::max_independent(oracle::product_graph(fs));
      const DenseGraph dg = materialize(g);
      ExactOptions plain;
      const auto r = solve_exact(dg, plain);
      ExactOptions sym;
      sym.symmetry = true;
      const auto s = solve_exact(dg, sym);
      const bool ok = r.alpha == want && s.alpha == want && r.status == SolveStatus::exact &&
                      s.status == SolveStatus::exact && r.witness.size() == want && is_independent(dg, r.witness) &&
                      is_independent(dg, s.witness);
      if (!ok) {
        ++violations;
        MESSAGE("mismatch on " << g.descriptor() << ": oracle " << want << ", exact " << r.alpha << ", symmetric " << s.alpha);
      }
    }
    CHECK(violations == 0);
  }

  TEST_CASE("exact solver agrees with exhaustive subsets on unstructured graphs") {
    std::mt19937_64 rng(99);
    int violations = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 1 + rng() % 24;
      const auto og = oracle::random_graph(n, 0.1 + 0.8 * (rng() % 100) / 100.0, rng);
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
          if (og.adj[a][b]) edges.emplace_back(a, b);
      const auto dg = DenseGraph::from_edges(n, edges);
      if (solve_exact(dg).alpha != oracle::max_independent(og)) ++violations;
    }
    CHECK(violations == 0);
  }

  TEST_CASE("orbit difference test agrees with explicit expansion") {
    std::mt19937_64 rng(4242);
    int violations = 0, independent = 0, rejected = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const std::int64_t m = 2 + static_cast<std::int64_t>(rng() % 60);
      const std::size_t k = 1 + rng() % 4;
      Tuple gen(k);
      std::vector<std::int64_t> qs(k);
      for (std::size_t i = 0; i < k; ++i) {
        gen[i] = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(m));
        qs[i] = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(std::max<std::int64_t>(1, m / 2)));
      }
      // Bias toward specs that pass the distinctness rule.
      if (trial % 2 == 0) gen[0] = 1;
      const OrbitSpec s = OrbitSpec::cyclic(m, gen, qs);
      std::int64_t g = m;
      for (auto x : gen) g = std::gcd(g, x);
      if (g != 1) {
        bool threw = false;
        try {
          orbit_verify(s);
        } catch (const InputError&) {
          threw = true;
        }
        violations += !threw;
        ++rejected;
        continue;
      }
      const auto chk = orbit_verify(s);
      const auto set = orbit_expand(s);
      const auto rep = verify_independent(set);
      // Pairwise check straight from the definition of E_{m/q}.
      bool brute = true;
      for (std::int64_t t = 0; t < m && brute; ++t)
        for (std::int64_t u = t + 1; u < m && brute; ++u) {
          bool adjacent = true;
          for (std::size_t i = 0; i < k; ++i)
            adjacent &= mod(t * gen[i], m) == mod(u * gen[i], m) ||
                        oracle::fraction_adjacent(m, qs[i], mod(t * gen[i], m), mod(u * gen[i], m));
          brute = !adjacent;
        }
      if (chk.independent != rep.pass || chk.independent != brute || set.tuples.size() != static_cast<std::size_t>(m))
        ++violations;
      if (!chk.independent) {
        // The least failing t is adjacent to zero and no smaller one is.
        const auto t = chk.witness_t.value_or(0);
        auto adj_zero = [&](std::int64_t t) {
          for (std::size_t i = 0; i < k; ++i) {
            const std::int64_t x = mod(t * gen[i], m);
            if (std::min(x, m - x) >= qs[i]) return false;
          }
          return true;
        };
        if (t < 1 || !adj_zero(t)) ++violations;
        for (std::int64_t u = 1; u < t; ++u) violations += adj_zero(u);
      }
      independent += chk.independent;
    }
    CHECK(violations == 0);
    CHECK(independent > 0);
    CHECK(rejected > 0);
  }

  TEST_CASE("convergent identities on quadratic surds") {
    std::mt19937_64 rng(314159);
    int violations = 0, tested = 0;
    while (tested < 50) {
      const std::int64_t a = static_cast<std::int64_t>(rng() % 41) - 20;
      const std::int64_t b = 1 + static_cast<std::int64_t>(rng() % 5);
      const std::int64_t d = 2 + static_cast<std::int64_t>(rng() % 60);
      const std::int64_t c = 1 + static_cast<std::int64_t>(rng() % 10);
      const auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(d))));
      if (root * root == d) continue;
      const QuadraticSurd x(a, b, d, c);
      if (x.compare(Rational(1)) <= 0) continue;
      ++tested;
      const RealDescriptor r = x;
      const auto seq = convergents(r, 12);
      if (!check_convergents(seq, r).ok()) ++violations;
      for (std::size_t n = 0; n < seq.terms.size(); ++n) {
        const BigInt p = seq.terms[n].p(), q = seq.terms[n].q();
        if (n > 0) {
          const BigInt pp = seq.terms[n - 1].p(), qp = seq.terms[n - 1].q();
          const BigInt det = q * pp - p * qp;
          if (det != (n % 2 ? -1 : 1)) ++violations;
        }
        // Even orders lie below r, odd orders above.
        const int side = x.compare(Rational(p, q));
        if (side != (n % 2 ? -1 : 1)) ++violations;
        // ceil(p/r) = q for even n and floor(p/r) = q for odd n, i.e.
        // p/q <= r < p/(q-1) or p/(q+1) < r <= p/q respectively.
        if (n % 2 == 0) {
          if (q > 1 && x.compare(Rational(p, q - 1)) >= 0) ++violations;
        } else {
          if (x.compare(Rational(p, q + 1)) <= 0) ++violations;
        }
        // Best approximation bound |r - p/q| < 1/q^2.
        if (x.compare(Rational(p, q) + Rational(1, q * q)) >= 0 || x.compare(Rational(p, q) - Rational(1, q * q)) <= 0)
          ++violations;
      }
    }
    CHECK(violations == 0);
  }

  TEST_CASE("solved instances respect the upper bounds") {
    std::mt19937_64 rng(777);
    int violations = 0, solved = 0;
    for (int trial = 0; trial < 120; ++trial) {
      const Factors fs = random_factors(rng, 300);
      const ProductGraph g = to_product(fs);
      const DenseGraph dg = materialize(g);
      ExactOptions ex;
      ex.symmetry = true;
      ex.budget.max_seconds = 10;
      const auto r = solve_exact(dg, ex);
      if (r.status != SolveStatus::exact) continue;
      ++solved;
      std::vector<Rational> values;
      for (const auto& f : g.factors()) values.push_back(f.value());
      if (BigInt(r.alpha) > nested_floor(values).value) ++violations;
      if (static_cast<double>(r.alpha) > theta_product(g.factors()) + 1e-6) ++violations;

      // A heuristic set always verifies and never beats the optimum.
      HeuristicOptions h;
      h.seed = trial;
      const auto hs = solve_heuristic(dg, h);
      if (!verify_independent(to_vertex_set(dg, hs.witness, true)).pass || hs.alpha > r.alpha) ++violations;

      // Induced subgraphs never have larger independence number.
      std::vector<Tuple> sub;
      for (std::uint64_t v = 0; v < g.vertex_count(); ++v)
        if (rng() % 3) sub.push_back(g.unpack(v));
      // A timed-out incumbent is still a lower bound for the subgraph.
      ExactOptions limited;
      limited.budget.max_seconds = 10;
      if (!sub.empty() && solve_exact(materialize(g, sub), limited).alpha > r.alpha) ++violations;

      // An orbit for the first two factors, padded by a product set, is a lower bound.
      if (fs.size() >= 2 && fs[0].first >= 2 * fs[0].second && fs[1].first >= 2 * fs[1].second) {
        const auto two = alpha_two_factor(Fraction(fs[0].first, fs[0].second), Fraction(fs[1].first, fs[1].second));
        std::int64_t pad = 1;
        for (std::size_t i = 2; i < fs.size(); ++i) pad *= fs[i].first / fs[i].second;
        if (static_cast<std::size_t>(two.alpha * pad) > r.alpha) ++violations;
      }
    }
    CHECK(violations == 0);
    CHECK(solved >= 100);
  }
}
