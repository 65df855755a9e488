#include "shannon/product.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <thread>
#include <unordered_map>

#include "shannon/error.hpp"

namespace shannon {

ProductGraph::ProductGraph(std::vector<CirculantFactor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw InputError("product graph needs at least one factor");
  stride_.assign(factors_.size(), 1);
  count_ = 1;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    stride_[i] = count_;
    auto m = static_cast<std::uint64_t>(factors_[i].m());
    if (count_ > std::numeric_limits<std::uint64_t>::max() / m / 2)
      throw InputError("product graph vertex count overflows");
    count_ *= m;
  }
}

ProductGraph ProductGraph::from_fractions(const std::vector<Fraction>& fractions) {
  std::vector<CirculantFactor> fs;
  fs.reserve(fractions.size());
  for (const auto& f : fractions) fs.push_back(CirculantFactor::from_fraction(f));
  return ProductGraph(std::move(fs));
}

ProductGraph ProductGraph::power(const CirculantFactor& f, std::size_t k) {
  return ProductGraph(std::vector<CirculantFactor>(k, f));
}

ProductGraph ProductGraph::parse(std::string_view descriptor) {
  std::vector<CirculantFactor> fs;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    std::size_t reps = 1;
    auto caret = tok.find('^');
    std::string base = tok.substr(0, caret);
    if (caret != std::string::npos) {
      std::string exp = tok.substr(caret + 1);
      if (exp.empty() || !std::all_of(exp.begin(), exp.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw InputError("malformed power in graph descriptor '" + tok + "'");
      reps = std::stoul(exp);
      if (reps == 0) throw InputError("power must be positive in '" + tok + "'");
    }
    // Labels are taken as given: "10/4" is the 10-vertex graph, not E_{5/2}.
    auto slash = base.find('/');
    Fraction num = parse_fraction(base.substr(0, slash));
    Fraction den = slash == std::string::npos ? Fraction(1) : parse_fraction(base.substr(slash + 1));
    if (!num.is_integer() || !den.is_integer()) throw InputError("malformed factor '" + tok + "'");
    CirculantFactor f(to_int64(num.p()), to_int64(den.p()));
    for (std::size_t r = 0; r < reps; ++r) fs.push_back(f);
    tok.clear();
  };
  // An explicit 'x' or '*' must sit between two factors.
  bool pending_sep = false;
  for (char c : descriptor) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else if (c == 'x' || c == '*') {
      flush();
      if (fs.empty() || pending_sep) throw InputError("misplaced separator in graph descriptor");
      pending_sep = true;
    } else {
      if (tok.empty()) pending_sep = false;
      tok.push_back(c);
    }
  }
  flush();
  if (fs.empty()) throw InputError("empty graph descriptor");
  if (pending_sep) throw InputError("graph descriptor ends with a separator");
  return ProductGraph(std::move(fs));
}

bool ProductGraph::in_range(std::span<const std::int64_t> t) const {
  if (t.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] < 0 || t[i] >= factors_[i].m()) return false;
  return true;
}

std::uint64_t ProductGraph::pack(std::span<const std::int64_t> t) const {
  if (t.size() != factors_.size())
    throw InputError("tuple arity " + std::to_string(t.size()) + " does not match product arity " +
                     std::to_string(factors_.size()));
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < 0 || t[i] >= factors_[i].m()) throw InputError("tuple coordinate out of range");
    v += static_cast<std::uint64_t>(t[i]) * stride_[i];
  }
  return v;
}

Tuple ProductGraph::unpack(std::uint64_t v) const {
  Tuple t(factors_.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    t[i] = static_cast<std::int64_t>(v / stride_[i]);
    v %= stride_[i];
  }
  return t;
}

bool ProductGraph::adjacent(std::span<const std::int64_t> u, std::span<const std::int64_t> v) const {
  if (u.size() != factors_.size() || v.size() != factors_.size()) throw InputError("tuple arity mismatch");
  if (!in_range(u) || !in_range(v)) throw InputError("tuple coordinate out of range");
  bool equal = true;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == v[i]) continue;
    equal = false;
    if (!factors_[i].adjacent_unchecked(u[i], v[i])) return false;
  }
  return !equal;
}

bool ProductGraph::adjacent_packed(std::uint64_t u, std::uint64_t v) const {
  if (u == v) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    auto a = static_cast<std::int64_t>(u / stride_[i]);
    auto b = static_cast<std::int64_t>(v / stride_[i]);
    u %= stride_[i];
    v %= stride_[i];
    if (a != b && !factors_[i].adjacent_unchecked(a, b)) return false;
  }
  return true;
}

std::uint64_t ProductGraph::closed_neighborhood_size() const {
  std::uint64_t s = 1;
  for (const auto& f : factors_) s *= static_cast<std::uint64_t>(f.degree() + 1);
  return s;
}

std::vector<std::uint64_t> ProductGraph::neighbors_packed(std::uint64_t v) const {
  const std::size_t k = factors_.size();
  Tuple base = unpack(v);
  // Per-coordinate admissible values: equal or adjacent.
  std::vector<std::vector<std::int64_t>> options(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& f = factors_[i];
    if (f.q() >= f.m()) {
      for (std::int64_t x = 0; x < f.m(); ++x) options[i].push_back(x);
    } else {
      options[i].push_back(base[i]);
      for (std::int64_t d = 1; d < f.q(); ++d) {
        options[i].push_back((base[i] + d) % f.m());
        options[i].push_back(((base[i] - d) % f.m() + f.m()) % f.m());
      }
    }
  }
  std::vector<std::uint64_t> out;
  out.reserve(closed_neighborhood_size());
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < k; ++i) w += static_cast<std::uint64_t>(options[i][idx[i]]) * stride_[i];
    if (w != v) out.push_back(w);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++idx[i] < options[i].size()) break;
      idx[i] = 0;
      if (i == 0) {
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
      }
    }
  }
}

std::string ProductGraph::descriptor() const {
  std::string out;
  std::size_t i = 0;
  while (i < factors_.size()) {
    std::size_t j = i;
    while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
    if (!out.empty()) out += " x ";
    const auto& f = factors_[i];
    std::string lab = f.q() == 1 ? std::to_string(f.m()) : f.label();
    out += lab;
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

namespace {

using Violation = std::optional<std::pair<std::size_t, std::size_t>>;

Violation earlier(const Violation& a, const Violation& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

VerifyReport verify_independent(const VertexSet& s, unsigned threads) {
  VerifyReport rep;
  rep.size = s.tuples.size();
  const auto& g = s.graph;
  std::vector<std::uint64_t> packed(s.tuples.size());
  for (std::size_t i = 0; i < s.tuples.size(); ++i) {
    if (s.tuples[i].size() != g.arity()) {
      rep.reason = "arity";
      rep.first_violation = std::make_pair(i, i);
      return rep;
    }
    if (!g.in_range(s.tuples[i])) {
      rep.reason = "out of range";
      rep.first_violation = std::make_pair(i, i);
      return rep;
    }
    packed[i] = g.pack(s.tuples[i]);
  }

  // Duplicates: group equal ids, keep the lexicographically first pair.
  std::vector<std::size_t> order(packed.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return packed[a] != packed[b] ? packed[a] < packed[b] : a < b;
  });
  Violation dup;
  for (std::size_t k = 1; k < order.size(); ++k)
    if (packed[order[k]] == packed[order[k - 1]]) {
      // order[k-1] is the smallest index of its group only at the group start.
      std::size_t first = k - 1;
      while (first > 0 && packed[order[first - 1]] == packed[order[k]]) --first;
      dup = earlier(dup, std::make_pair(order[first], order[first + 1]));
    }
  const std::size_t n = packed.size();
  const bool use_lookup = g.closed_neighborhood_size() < n;
  std::unordered_map<std::uint64_t, std::size_t> index;
  if (use_lookup) {
    index.reserve(n * 2);
    for (std::size_t i = 0; i < n; ++i) index.emplace(packed[i], i);
  }

  auto scan = [&](std::size_t lo, std::size_t hi) -> Violation {
    for (std::size_t i = lo; i < hi; ++i) {
      std::optional<std::size_t> best;
      if (use_lookup) {
        for (std::uint64_t w : g.neighbors_packed(packed[i])) {
          auto it = index.find(w);
          if (it != index.end() && it->second > i && (!best || it->second < *best)) best = it->second;
        }
      } else {
        for (std::size_t j = i + 1; j < n; ++j)
          if (g.adjacent_packed(packed[i], packed[j])) {
            best = j;
            break;
          }
      }
      if (best) return std::make_pair(i, *best);
    }
    return std::nullopt;
  };

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  Violation found;
  if (threads <= 1 || n < 1024) {
    found = scan(0, n);
  } else {
    std::vector<Violation> parts(threads);
    std::vector<std::thread> pool;
    std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      std::size_t lo = std::min(n, t * chunk), hi = std::min(n, lo + chunk);
      pool.emplace_back([&, t, lo, hi] { parts[t] = scan(lo, hi); });
    }
    for (auto& th : pool) th.join();
    for (const auto& p : parts) found = earlier(found, p);
  }
  if (found || dup) {
    // Both kinds compete for the first pair; equal pairs cannot be adjacent.
    rep.first_violation = earlier(found, dup);
    rep.reason = rep.first_violation == dup ? "duplicate" : "adjacent";
    return rep;
  }
  rep.pass = true;
  return rep;
}

std::size_t DenseGraph::edge_count() const {
  std::size_t e = 0;
  for (const auto& nb : neighbors) e += nb.size();
  return e / 2;
}

std::string DenseGraph::descriptor() const {
  std::string d = source ? source->descriptor() : "abstract";
  if (!full_product) d += " [induced on " + std::to_string(n) + " vertices]";
  return d;
}

DenseGraph DenseGraph::from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  DenseGraph g;
  g.n = n;
  g.adj.assign(n, Bitset(n));
  g.neighbors.assign(n, {});
  g.labels.resize(n);
  for (std::size_t i = 0; i < n; ++i) g.labels[i] = i;
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw InputError("edge endpoint out of range");
    if (u == v || g.adj[u].test(v)) continue;
    g.adj[u].set(v);
    g.adj[v].set(u);
    g.neighbors[u].push_back(static_cast<std::uint32_t>(v));
    g.neighbors[v].push_back(static_cast<std::uint32_t>(u));
  }
  for (auto& nb : g.neighbors) std::sort(nb.begin(), nb.end());
  return g;
}

namespace {

void check_cap(std::uint64_t n, std::size_t cap) {
  if (n > cap)
    throw CapacityError("graph has " + std::to_string(n) + " vertices, above the materialization cap of " +
                        std::to_string(cap) + "; use the heuristic on an induced subgraph or export an ILP");
}

}  // namespace

DenseGraph materialize(const ProductGraph& g, std::size_t cap) {
  check_cap(g.vertex_count(), cap);
  const std::size_t n = g.vertex_count();
  DenseGraph out;
  out.n = n;
  out.adj.assign(n, Bitset(n));
  out.neighbors.assign(n, {});
  out.labels.resize(n);
  out.source = g;
  out.full_product = true;
  for (std::size_t v = 0; v < n; ++v) {
    out.labels[v] = v;
    for (std::uint64_t w : g.neighbors_packed(v)) {
      out.adj[v].set(w);
      out.neighbors[v].push_back(static_cast<std::uint32_t>(w));
    }
  }
  return out;
}

DenseGraph materialize(const ProductGraph& g, std::span<const Tuple> vertices, std::size_t cap) {
  check_cap(vertices.size(), cap);
  const std::size_t n = vertices.size();
  DenseGraph out;
  out.n = n;
  out.adj.assign(n, Bitset(n));
  out.neighbors.assign(n, {});
  out.labels.resize(n);
  out.source = g;
  out.full_product = false;
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  index.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    out.labels[i] = g.pack(vertices[i]);
    if (!index.emplace(out.labels[i], static_cast<std::uint32_t>(i)).second)
      throw InputError("duplicate vertex in induced-subgraph list");
  }
  const bool use_lookup = g.closed_neighborhood_size() < n;
  for (std::size_t v = 0; v < n; ++v) {
    if (use_lookup) {
      for (std::uint64_t w : g.neighbors_packed(out.labels[v])) {
        auto it = index.find(w);
        if (it != index.end()) {
          out.adj[v].set(it->second);
          out.neighbors[v].push_back(it->second);
        }
      }
      std::sort(out.neighbors[v].begin(), out.neighbors[v].end());
    } else {
      for (std::size_t w = 0; w < n; ++w)
        if (g.adjacent_packed(out.labels[v], out.labels[w])) {
          out.adj[v].set(w);
          out.neighbors[v].push_back(static_cast<std::uint32_t>(w));
        }
    }
  }
  if (n == g.vertex_count()) {
    bool identity = true;
    for (std::size_t i = 0; i < n && identity; ++i) identity = out.labels[i] == i;
    out.full_product = identity;
  }
  return out;
}

VertexSet to_vertex_set(const DenseGraph& g, const std::vector<std::uint32_t>& vertices, bool claimed_independent) {
  if (!g.source) throw InputError("graph has no product structure");
  VertexSet s{*g.source, {}, claimed_independent};
  s.tuples.reserve(vertices.size());
  for (auto v : vertices) s.tuples.push_back(g.source->unpack(g.labels[v]));
  return s;
}

}  // namespace shannon
