#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "shannon/error.hpp"
#include "shannon/independence.hpp"

namespace shannon {

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::exact:
      return "exact";
    case SolveStatus::lower_bound_only:
      return "lower-bound-only";
    case SolveStatus::timeout:
      return "timeout";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

// State shared by all workers of one solve.
struct Shared {
  const DenseGraph& g;
  std::vector<Bitset> non_adj;  // complement rows without the diagonal
  std::atomic<std::size_t> best{0};
  std::mutex witness_mutex;
  std::vector<std::uint32_t> witness;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> abort{false};
  SolveBudget budget;
  Clock::time_point start;

  explicit Shared(const DenseGraph& graph) : g(graph) {
    non_adj.reserve(g.n);
    for (std::size_t v = 0; v < g.n; ++v) {
      Bitset row = g.adj[v];
      row.flip_all();
      row.reset(v);
      non_adj.push_back(std::move(row));
    }
  }

  void offer(const std::vector<std::uint32_t>& set) {
    std::lock_guard<std::mutex> lock(witness_mutex);
    if (set.size() > best.load()) {
      witness = set;
      best.store(set.size());
    }
  }
};

// Branch and bound for a maximum clique in the complement: each colour class
// of the greedy colouring is a clique of g, so the number of classes bounds
// how many more independent vertices can be added.
class Worker {
 public:
  explicit Worker(Shared& s) : s_(s), order_(s.g.n + 2), colour_(s.g.n + 2) {}

  void expand(Bitset& candidates) {
    std::uint64_t count = s_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if ((count & 1023) == 0) check_budget(count);
    if (s_.abort.load(std::memory_order_relaxed)) return;

    const std::size_t depth = current_.size();
    auto& order = order_[depth];
    auto& colour = colour_[depth];
    const std::size_t best = s_.best.load(std::memory_order_relaxed);
    const std::size_t kmin = best >= depth ? best - depth + 1 : 1;
    colour_classes(candidates, kmin, order, colour);

    for (std::size_t i = order.size(); i-- > 0;) {
      if (depth + colour[i] <= s_.best.load(std::memory_order_relaxed)) return;
      if (s_.abort.load(std::memory_order_relaxed)) return;
      const std::uint32_t v = order[i];
      current_.push_back(v);
      Bitset next = candidates;
      next &= s_.non_adj[v];
      if (next.none()) {
        if (current_.size() > s_.best.load()) s_.offer(current_);
      } else {
        expand(next);
      }
      current_.pop_back();
      candidates.reset(v);
    }
  }

  void run_branch(std::vector<std::uint32_t> fixed, Bitset candidates) {
    current_ = std::move(fixed);
    if (current_.size() > s_.best.load()) s_.offer(current_);
    if (!candidates.none()) expand(candidates);
    current_.clear();
  }

  // Greedy clique partition of candidates; keeps vertices whose class index is
  // at least kmin, in class order.
  void colour_classes(const Bitset& candidates, std::size_t kmin, std::vector<std::uint32_t>& order,
                      std::vector<std::size_t>& colour) {
    order.clear();
    colour.clear();
    uncoloured_ = candidates;
    std::size_t k = 0;
    while (!uncoloured_.none()) {
      ++k;
      open_ = uncoloured_;
      while (!open_.none()) {
        auto v = static_cast<std::uint32_t>(open_.first());
        open_.reset(v);
        uncoloured_.reset(v);
        open_ &= s_.g.adj[v];
        if (k >= kmin) {
          order.push_back(v);
          colour.push_back(k);
        }
      }
    }
  }

 private:
  void check_budget(std::uint64_t count) {
    if (s_.budget.max_nodes && count >= s_.budget.max_nodes) s_.abort.store(true);
    if (s_.budget.max_seconds > 0 &&
        std::chrono::duration<double>(Clock::now() - s_.start).count() >= s_.budget.max_seconds)
      s_.abort.store(true);
  }

  Shared& s_;
  std::vector<std::uint32_t> current_;
  std::vector<std::vector<std::uint32_t>> order_;
  std::vector<std::vector<std::size_t>> colour_;
  Bitset uncoloured_;
  Bitset open_;
};

struct Branch {
  std::vector<std::uint32_t> fixed;
  Bitset candidates;
};

// Automorphisms of a product of circulants fixing the zero tuple: a reflection
// per coordinate and permutations of identical factors.
std::vector<std::vector<std::uint32_t>> zero_stabilizer(const ProductGraph& pg) {
  const std::size_t k = pg.arity();
  const auto& fs = pg.factors();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> perms;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) ok = fs[perm[i]] == fs[i];
    if (ok) perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  const std::uint64_t n = pg.vertex_count();
  std::vector<std::vector<std::uint32_t>> group;
  for (const auto& p : perms) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      std::vector<std::uint32_t> img(n);
      for (std::uint64_t v = 0; v < n; ++v) {
        Tuple t = pg.unpack(v);
        Tuple u(k);
        for (std::size_t i = 0; i < k; ++i) {
          std::int64_t x = t[i];
          if ((mask >> i) & 1U) x = (fs[i].m() - x) % fs[i].m();
          u[p[i]] = x;
        }
        img[v] = static_cast<std::uint32_t>(pg.pack(u));
      }
      group.push_back(std::move(img));
    }
  }
  return group;
}

std::vector<Branch> symmetric_branches(const DenseGraph& g) {
  // Every vertex-transitive graph has a maximum independent set through 0.
  std::vector<Branch> out;
  Bitset rest = g.adj[0];
  rest.flip_all();
  rest.reset(0);
  if (rest.none()) {
    out.push_back({{0}, rest});
    return out;
  }
  auto group = zero_stabilizer(*g.source);
  std::vector<std::uint32_t> rep(g.n, static_cast<std::uint32_t>(-1));
  std::vector<std::vector<std::uint32_t>> orbits;
  rest.for_each([&](std::size_t v) {
    if (rep[v] != static_cast<std::uint32_t>(-1)) return;
    std::vector<std::uint32_t> orbit;
    for (const auto& img : group) {
      std::uint32_t w = img[v];
      if (rep[w] == static_cast<std::uint32_t>(-1)) {
        rep[w] = static_cast<std::uint32_t>(v);
        orbit.push_back(w);
      }
    }
    orbits.push_back(std::move(orbit));
  });
  // Branch i takes the representative of orbit i and excludes orbits before it.
  Bitset remaining = rest;
  for (const auto& orbit : orbits) {
    const std::uint32_t r = rep[orbit.front()];
    Bitset cand = remaining;
    cand &= g.adj[r];
    cand.flip_all();
    cand &= remaining;
    cand.reset(r);
    out.push_back({{0, r}, std::move(cand)});
    for (auto w : orbit) remaining.reset(w);
  }
  return out;
}

std::vector<Branch> root_branches(Shared& shared, Worker& worker) {
  const DenseGraph& g = shared.g;
  Bitset all(g.n);
  all.set_all();
  std::vector<std::uint32_t> order;
  std::vector<std::size_t> colour;
  const std::size_t best = shared.best.load();
  worker.colour_classes(all, best + 1, order, colour);
  // Mirrors the sequential loop: branch i sees the candidates left after the
  // branches ordered after it have been removed.
  std::vector<Branch> out;
  Bitset cand = all;
  for (std::size_t i = order.size(); i-- > 0;) {
    if (colour[i] <= best) break;
    const std::uint32_t v = order[i];
    Bitset next = cand;
    next &= shared.non_adj[v];
    out.push_back({{v}, std::move(next)});
    cand.reset(v);
  }
  return out;
}

}  // namespace

SolveResult solve_exact(const DenseGraph& g, const ExactOptions& options) {
  const auto start = Clock::now();
  SolveResult res;
  if (g.n == 0) {
    res.status = SolveStatus::exact;
    return res;
  }
  if (options.symmetry && (!g.source || !g.full_product))
    throw InputError("symmetry breaking needs a fully materialized product graph");

  Shared shared(g);
  shared.budget = options.budget;
  shared.start = start;

  // Seed the incumbent with a short deterministic local search.
  HeuristicOptions seed_opts;
  seed_opts.seed = options.seed;
  seed_opts.restarts = 1;
  seed_opts.iterations = std::min<std::uint64_t>(20 * g.n, 200000);
  SolveResult seed = solve_heuristic(g, seed_opts);
  shared.offer(seed.witness);

  Worker root(shared);
  std::vector<Branch> branches = options.symmetry ? symmetric_branches(g) : root_branches(shared, root);

  unsigned threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(branches.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    Worker w(shared);
    while (!shared.abort.load()) {
      std::size_t i = next.fetch_add(1);
      if (i >= branches.size()) break;
      w.run_branch(branches[i].fixed, branches[i].candidates);
    }
  };
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  res.witness = shared.witness;
  std::sort(res.witness.begin(), res.witness.end());
  res.alpha = res.witness.size();
  res.status = shared.abort.load() ? SolveStatus::timeout : SolveStatus::exact;
  res.nodes = shared.nodes.load();
  res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return res;
}

std::uint64_t graph_checksum(const DenseGraph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t x) {
    for (int b = 0; b < 8; ++b) {
      h ^= (x >> (8 * b)) & 0xFF;
      h *= 1099511628211ULL;
    }
  };
  mix(g.n);
  for (std::size_t u = 0; u < g.n; ++u)
    for (auto v : g.neighbors[u])
      if (u < v) {
        mix(u);
        mix(v);
      }
  return h;
}

void export_ilp(const DenseGraph& g, std::ostream& out) {
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(graph_checksum(g)));
  out << "\\ Maximum independent set of " << g.descriptor() << "\n";
  out << "\\ vertices " << g.n << ", edges " << g.edge_count() << ", checksum " << hex << "\n";
  if (g.source)
    for (std::size_t v = 0; v < g.n; ++v) {
      Tuple t = g.source->unpack(g.labels[v]);
      out << "\\ x" << v << " = (";
      for (std::size_t i = 0; i < t.size(); ++i) out << (i ? "," : "") << t[i];
      out << ")\n";
    }
  out << "Maximize\n obj:";
  for (std::size_t v = 0; v < g.n; ++v) {
    out << (v ? " + x" : " x") << v;
    if (v % 16 == 15) out << "\n";
  }
  out << "\n";
  if (g.edge_count() > 0) {
    out << "Subject To\n";
    std::size_t e = 0;
    for (std::size_t u = 0; u < g.n; ++u)
      for (auto v : g.neighbors[u])
        if (u < v) out << " e" << e++ << ": x" << u << " + x" << v << " <= 1\n";
  }
  if (g.n > 0) {
    out << "Binary\n";
    for (std::size_t v = 0; v < g.n; ++v) out << " x" << v << ((v % 16 == 15 || v + 1 == g.n) ? "\n" : "");
  }
  out << "End\n";
}

void export_ilp(const DenseGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  export_ilp(g, out);
  out.flush();
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace shannon
