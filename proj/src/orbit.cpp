#include "shannon/orbit.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "shannon/error.hpp"

namespace shannon {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

std::vector<std::int64_t> parse_list(std::string_view text, std::string_view what) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw InputError("bad integer '" + std::string(item) + "' in " + std::string(what));
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

std::string join(const std::vector<std::int64_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

// Calls f(coefficients, element) for every coefficient vector in Z_m^r in
// lexicographic order. Stops early when f returns false.
template <typename F>
void enumerate_orbit(const OrbitSpec& s, F&& f) {
  const std::size_t r = s.gens.size(), k = s.arity();
  std::vector<std::int64_t> coeff(r, 0);
  Tuple elem(k, 0);
  while (true) {
    if (!f(coeff, elem)) return;
    std::size_t j = r;
    while (j > 0) {
      --j;
      for (std::size_t i = 0; i < k; ++i) elem[i] = mod(elem[i] + s.gens[j][i], s.m);
      if (++coeff[j] < s.m) break;
      coeff[j] = 0;  // elem has wrapped back by m * g_j = 0
      if (j == 0) return;
    }
  }
}

// Throws when the orbit has repeated elements.
std::size_t checked_orbit_size(const OrbitSpec& s) {
  if (s.gens.size() == 1) {
    std::int64_t g = s.m;
    for (auto x : s.gens[0]) g = std::gcd(g, x);
    if (g != 1)
      throw InputError("gcd of generator and modulus is " + std::to_string(g) + ", so the orbit repeats tuples");
    return static_cast<std::size_t>(s.m);
  }
  std::set<Tuple> seen;
  bool repeated = false;
  enumerate_orbit(s, [&](const std::vector<std::int64_t>&, const Tuple& e) {
    repeated = !seen.insert(e).second;
    return !repeated;
  });
  if (repeated) throw InputError("generators produce repeated tuples");
  return seen.size();
}

bool far_from_zero(const std::vector<CirculantFactor>& fs, const Tuple& e) {
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (fs[i].circular_distance(e[i], 0) >= fs[i].q()) return true;
  return false;
}

}  // namespace

OrbitSpec::OrbitSpec(std::int64_t modulus, std::vector<Tuple> generators, std::vector<std::int64_t> thresholds)
    : m(modulus), gens(std::move(generators)), qs(std::move(thresholds)) {
  if (m < 1) throw InputError("orbit modulus must be positive");
  if (gens.empty()) throw InputError("orbit needs at least one generator");
  for (auto q : qs)
    if (q < 1) throw InputError("orbit thresholds must be positive");
  for (auto& g : gens) {
    if (g.size() != qs.size())
      throw InputError("generator arity " + std::to_string(g.size()) + " differs from " + std::to_string(qs.size()) +
                       " thresholds");
    for (auto& x : g) x = mod(x, m);
  }
}

OrbitSpec OrbitSpec::cyclic(std::int64_t m, Tuple gen, std::vector<std::int64_t> qs) {
  return OrbitSpec(m, {std::move(gen)}, std::move(qs));
}

ProductGraph OrbitSpec::ambient() const {
  std::vector<CirculantFactor> fs;
  for (auto q : qs) fs.emplace_back(m, q);
  return ProductGraph(std::move(fs));
}

std::string OrbitSpec::str() const {
  std::string s = "m=" + std::to_string(m) + " gens=";
  for (std::size_t j = 0; j < gens.size(); ++j) s += (j ? ";" : "") + join(gens[j]);
  return s + " qs=" + join(qs);
}

OrbitSpec OrbitSpec::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  std::optional<std::int64_t> m;
  std::vector<Tuple> gens;
  std::optional<std::vector<std::int64_t>> qs;
  while (in >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw InputError("expected key=value in orbit spec, got '" + tok + "'");
    std::string key = tok.substr(0, eq);
    std::string_view val = std::string_view(tok).substr(eq + 1);
    if (key == "m") {
      auto v = parse_list(val, "m");
      if (v.size() != 1) throw InputError("m takes one integer");
      m = v[0];
    } else if (key == "gens") {
      std::size_t pos = 0;
      while (pos <= val.size()) {
        std::size_t end = val.find(';', pos);
        if (end == std::string_view::npos) end = val.size();
        gens.push_back(parse_list(val.substr(pos, end - pos), "gens"));
        pos = end + 1;
      }
    } else if (key == "qs") {
      qs = parse_list(val, "qs");
    } else {
      throw InputError("unknown orbit spec key '" + key + "'");
    }
  }
  if (!m || gens.empty() || !qs) throw InputError("orbit spec needs m=, gens= and qs=");
  return OrbitSpec(*m, std::move(gens), std::move(*qs));
}

OrbitCheck orbit_verify(const OrbitSpec& s) {
  OrbitCheck out;
  out.size = checked_orbit_size(s);
  const auto fs = s.ambient().factors();
  out.independent = true;
  bool first = true;
  enumerate_orbit(s, [&](const std::vector<std::int64_t>& coeff, const Tuple& e) {
    if (first) {  // the zero element
      first = false;
      return true;
    }
    if (far_from_zero(fs, e)) return true;
    out.independent = false;
    out.witness = coeff;
    if (s.gens.size() == 1) out.witness_t = coeff[0];
    return false;
  });
  return out;
}

VertexSet orbit_expand(const OrbitSpec& s) {
  VertexSet out;
  out.claimed_independent = orbit_verify(s).independent;
  out.graph = s.ambient();
  enumerate_orbit(s, [&](const std::vector<std::int64_t>&, const Tuple& e) {
    out.tuples.push_back(e);
    return true;
  });
  return out;
}

PunctureResult orbit_puncture(const OrbitSpec& s) {
  PunctureResult out;
  std::vector<std::int64_t> pp;
  for (auto q : s.qs) {
    if (std::gcd(s.m, q) != 1 || s.m < 2 * q)
      throw InputError("puncturing needs reduced labels m/q >= 2; got " + std::to_string(s.m) + "/" + std::to_string(q));
    out.punctured.push_back(puncture(Fraction(s.m, q)));
    pp.push_back(to_int64(out.punctured.back().p()));
  }
  for (const auto& g : s.gens)
    for (auto x : g)
      if (x == 0) out.zero_generator = true;

  VertexSet full = orbit_expand(s);
  out.in_ambient.graph = full.graph;
  out.in_ambient.claimed_independent = full.claimed_independent;
  out.image.graph = ProductGraph::from_fractions(out.punctured);
  for (auto& t : full.tuples) {
    if (std::find(t.begin(), t.end(), 0) != t.end()) {
      ++out.dropped;
      continue;
    }
    Tuple rel(t.size()), img(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      rel[i] = t[i] - 1;
      img[i] = t[i] * pp[i] / s.m;
    }
    out.relabelled.push_back(std::move(rel));
    out.image.tuples.push_back(std::move(img));
    out.in_ambient.tuples.push_back(std::move(t));
  }
  out.image.claimed_independent = verify_independent(out.image).pass;
  return out;
}

std::vector<OrbitSpec> orbit_search(std::int64_t m, const std::vector<std::int64_t>& qs,
                                    const OrbitSearchOptions& options) {
  const std::size_t k = qs.size();
  if (k == 0) throw InputError("orbit search needs at least one threshold");
  if (m < 1) throw InputError("orbit modulus must be positive");
  std::vector<CirculantFactor> fs;
  for (auto q : qs) fs.emplace_back(m, q);

  // prev[i]: the closest earlier coordinate (>= 1) with the same threshold.
  std::vector<std::ptrdiff_t> prev(k, -1);
  for (std::size_t i = 2; i < k; ++i)
    for (std::size_t j = i - 1; j >= 1; --j)
      if (qs[j] == qs[i]) {
        prev[i] = static_cast<std::ptrdiff_t>(j);
        break;
      }

  auto independent = [&](const Tuple& g) {
    Tuple e(k, 0);
    for (std::int64_t t = 1; t < m; ++t) {
      for (std::size_t i = 0; i < k; ++i) e[i] = mod(e[i] + g[i], m);
      if (!far_from_zero(fs, e)) return false;
    }
    return true;
  };
  auto canonical = [&](const Tuple& g) {
    for (std::size_t i = 2; i < k; ++i)
      if (prev[i] >= 0 && g[static_cast<std::size_t>(prev[i])] > g[i]) return false;
    return true;
  };
  auto to_spec = [&](const Tuple& g) { return OrbitSpec::cyclic(m, g, qs); };

  std::vector<Tuple> found;
  if (!options.exhaustive) {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::int64_t> pick(0, m - 1);
    std::set<Tuple> uniq;
    for (std::uint64_t n = 0; n < options.samples; ++n) {
      Tuple g(k);
      g[0] = 1;
      for (std::size_t i = 1; i < k; ++i) g[i] = pick(rng);
      // Sort each equal-threshold class so the sample lands on its canonical form.
      for (std::size_t i = 1; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
          if (qs[i] == qs[j] && g[i] > g[j]) std::swap(g[i], g[j]);
      if (uniq.count(g)) continue;
      if (independent(g)) uniq.insert(g);
    }
    found.assign(uniq.begin(), uniq.end());
  } else if (k == 1) {
    if (independent({1})) found.push_back({1});
  } else {
    // Shard on g_2; the tail g_3..g_k runs as an odometer.
    auto scan = [&](std::int64_t g2, std::vector<Tuple>& out, std::uint64_t& budget_left, bool limited) {
      Tuple g(k, 0);
      g[0] = 1;
      g[1] = g2;
      while (true) {
        if (canonical(g)) {
          if (limited) {
            if (budget_left == 0) return false;
            --budget_left;
          }
          if (independent(g)) out.push_back(g);
        }
        std::size_t i = k;
        while (i > 2) {
          --i;
          if (++g[i] < m) break;
          g[i] = 0;
          if (i == 2) return true;
        }
        if (k == 2) return true;
      }
    };
    const bool limited = options.max_candidates > 0;
    unsigned threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
    if (limited) threads = 1;  // a candidate budget is consumed in lexicographic order
    if (threads <= 1) {
      std::uint64_t budget = options.max_candidates;
      for (std::int64_t g2 = 0; g2 < m; ++g2)
        if (!scan(g2, found, budget, limited)) break;
    } else {
      std::vector<std::vector<Tuple>> parts(threads);
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
          std::uint64_t unused = 0;
          for (std::int64_t g2 = t; g2 < m; g2 += threads) scan(g2, parts[t], unused, false);
        });
      for (auto& th : pool) th.join();
      for (auto& p : parts) found.insert(found.end(), p.begin(), p.end());
    }
    std::sort(found.begin(), found.end());
  }
  std::vector<OrbitSpec> out;
  out.reserve(found.size());
  for (auto& g : found) out.push_back(to_spec(g));
  return out;
}

}  // namespace shannon
