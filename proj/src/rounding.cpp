#include "shannon/rounding.hpp"

#include <algorithm>

#include "shannon/error.hpp"

namespace shannon {

void RoundingSpec::validate() const {
  if (source_m < 1 || target_n < 1 || target_q < 1) throw InputError("rounding sizes must be positive");
  for (const auto& e : eps)
    if (e < 0 || e >= Rational(1, 2)) throw InputError("eps must lie in [0, 1/2), got " + to_string(e));
}

ProductGraph RoundingSpec::target() const {
  return ProductGraph::power(CirculantFactor(target_n, target_q), eps.size());
}

std::vector<std::int64_t> round_candidates(std::int64_t x, const RoundingSpec& spec, std::size_t i) {
  if (i >= spec.eps.size()) throw InputError("coordinate index out of range");
  if (x < 0 || x >= spec.source_m) throw InputError("source vertex out of range");
  const std::int64_t n = spec.target_n;
  // r = n x / M = fl + rem / M exactly.
  const BigInt num = BigInt(n) * x;
  const std::int64_t fl = static_cast<std::int64_t>(num / spec.source_m);
  const Rational frac(BigInt(num % spec.source_m), BigInt(spec.source_m));
  std::vector<std::int64_t> out{fl % n};
  const Rational& e = spec.eps[i];
  if (frac > 1 - e)
    out.push_back((fl + 1) % n);
  else if (frac < e)
    out.push_back((fl - 1 + n) % n);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VertexSet build_T(const OrbitSpec& orbit, const RoundingSpec& spec) {
  spec.validate();
  if (orbit.m != spec.source_m) throw InputError("orbit modulus differs from the rounding source");
  if (orbit.arity() != spec.eps.size()) throw InputError("eps arity differs from orbit arity");
  VertexSet out;
  out.graph = spec.target();
  const std::size_t k = orbit.arity();

  // Candidates depend only on (coordinate, value); tabulate them once.
  std::vector<std::vector<std::vector<std::int64_t>>> table(k);
  for (std::size_t i = 0; i < k; ++i) {
    table[i].resize(static_cast<std::size_t>(orbit.m));
    for (std::int64_t x = 0; x < orbit.m; ++x) table[i][x] = round_candidates(x, spec, i);
  }
  std::vector<std::uint64_t> ids;
  const VertexSet orb = orbit_expand(orbit);
  Tuple t(k);
  for (const auto& v : orb.tuples) {
    // Odometer over the product of candidate sets.
    std::vector<std::size_t> pick(k, 0);
    bool done = false;
    while (!done) {
      for (std::size_t i = 0; i < k; ++i) t[i] = table[i][v[i]][pick[i]];
      ids.push_back(out.graph.pack(t));
      std::size_t i = k;
      while (true) {
        if (i == 0) {
          done = true;
          break;
        }
        --i;
        if (++pick[i] < table[i][v[i]].size()) break;
        pick[i] = 0;
      }
    }
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  out.tuples.reserve(ids.size());
  for (auto id : ids) out.tuples.push_back(out.graph.unpack(id));
  return out;
}

RoundSearchResult round_and_search(const OrbitSpec& orbit, const RoundingSpec& spec,
                                   const RoundSearchOptions& options) {
  RoundSearchResult res;
  VertexSet T = build_T(orbit, spec);
  res.t_size = T.tuples.size();
  DenseGraph g = materialize(T.graph, T.tuples, options.cap);
  res.search = solve_heuristic(g, options.heuristic);
  if (g.n <= options.exact_cap) {
    ExactOptions ex = options.exact;
    SolveResult exact = solve_exact(g, ex);
    if (exact.alpha >= res.search.alpha) res.search = exact;
  }
  res.witness = to_vertex_set(g, res.search.witness, true);
  res.verified = verify_independent(res.witness).pass;
  return res;
}

}  // namespace shannon
