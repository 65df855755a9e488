#include <algorithm>
#include <chrono>
#include <random>

#include "shannon/independence.hpp"

namespace shannon {

namespace {

using Clock = std::chrono::steady_clock;

// Incremental independent-set state in the style of iterated local search
// with (1,2)-swaps: tightness counts solution neighbours of each vertex.
class SwapSearch {
 public:
  SwapSearch(const DenseGraph& g, std::uint64_t seed)
      : g_(g), rng_(seed), in_(g.n, 0), tight_(g.n, 0), pos_(g.n, npos), free_pos_(g.n, npos), stamp_(g.n, 0) {
    for (std::uint32_t v = 0; v < g.n; ++v) add_free(v);
  }

  std::size_t size() const { return sol_.size(); }
  const std::vector<std::uint32_t>& solution() const { return sol_; }

  void reset() {
    while (!sol_.empty()) remove(sol_.back());
  }

  // Min-degree greedy with random tie-breaking among equal residual degree.
  void greedy(bool randomized) {
    std::vector<std::uint32_t> deg(g_.n);
    std::vector<char> alive(g_.n, 0);
    std::vector<std::uint32_t> cand;
    for (std::uint32_t v = 0; v < g_.n; ++v) {
      if (in_[v] || tight_[v]) continue;
      alive[v] = 1;
      cand.push_back(v);
    }
    for (auto v : cand) {
      std::uint32_t d = 0;
      for (auto u : g_.neighbors[v]) d += alive[u];
      deg[v] = d;
    }
    // Bucket queue keyed by residual degree.
    std::size_t maxd = 0;
    for (auto v : cand) maxd = std::max<std::size_t>(maxd, deg[v]);
    std::vector<std::vector<std::uint32_t>> bucket(maxd + 1);
    if (randomized) std::shuffle(cand.begin(), cand.end(), rng_);
    for (auto it = cand.rbegin(); it != cand.rend(); ++it) bucket[deg[*it]].push_back(*it);
    std::size_t d = 0;
    while (true) {
      while (d < bucket.size() && bucket[d].empty()) ++d;
      if (d == bucket.size()) break;
      std::uint32_t v = bucket[d].back();
      bucket[d].pop_back();
      if (!alive[v] || deg[v] != d) continue;
      insert(v);
      alive[v] = 0;
      for (auto u : g_.neighbors[v]) {
        if (!alive[u]) continue;
        alive[u] = 0;
        for (auto w : g_.neighbors[u]) {
          if (!alive[w]) continue;
          --deg[w];
          bucket[deg[w]].push_back(w);
          if (deg[w] < d) d = deg[w];
        }
      }
    }
  }

  // Runs (1,2)-swaps and free insertions until a local optimum.
  void local_search(std::vector<std::uint32_t> queue) {
    fill_free();
    while (!queue.empty()) {
      std::uint32_t x = queue.back();
      queue.pop_back();
      if (!in_[x]) continue;
      one_tight_.clear();
      for (auto u : g_.neighbors[x])
        if (!in_[u] && tight_[u] == 1) one_tight_.push_back(u);
      if (one_tight_.size() < 2) continue;
      std::uint32_t added_u = 0, added_w = 0;
      bool swapped = false;
      for (std::size_t a = 0; a < one_tight_.size() && !swapped; ++a) {
        for (std::size_t b = a + 1; b < one_tight_.size(); ++b) {
          std::uint32_t u = one_tight_[a], w = one_tight_[b];
          if (g_.adjacent(u, w)) continue;
          remove(x);
          insert(u);
          insert(w);
          added_u = u;
          added_w = w;
          swapped = true;
          break;
        }
      }
      if (!swapped) continue;
      // Re-examine solution vertices whose 1-tight neighbourhoods may have grown.
      for (auto z : g_.neighbors[x]) {
        if (in_[z]) continue;
        if (tight_[z] == 1) queue.push_back(sole_solution_neighbor(z));
      }
      std::size_t before = sol_.size();
      fill_free();
      for (std::size_t i = before; i < sol_.size(); ++i) queue.push_back(sol_[i]);
      queue.push_back(added_u);
      queue.push_back(added_w);
    }
  }

  // Solution vertices within distance two of the touched vertices.
  // On dense graphs the whole solution is the cheaper superset.
  std::vector<std::uint32_t> neighborhood_queue(const std::vector<std::uint32_t>& touched) {
    std::size_t deg = 0;
    for (auto v : touched) deg += g_.neighbors[v].size();
    if (deg >= sol_.size()) return sol_;
    std::vector<std::uint32_t> q;
    for (auto v : touched) {
      if (in_[v]) q.push_back(v);
      for (auto u : g_.neighbors[v]) {
        if (in_[u]) q.push_back(u);
        for (auto w : g_.neighbors[u])
          if (in_[w]) q.push_back(w);
      }
    }
    std::sort(q.begin(), q.end());
    q.erase(std::unique(q.begin(), q.end()), q.end());
    return q;
  }

  // Forces v into the solution, evicting its solution neighbours.
  void force(std::uint32_t v) {
    for (auto u : g_.neighbors[v])
      if (in_[u]) remove(u);
    insert(v);
  }

  std::uint32_t pick_outside() {
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(g_.n - 1));
    std::uint32_t best = npos32;
    for (int tries = 0; tries < 8; ++tries) {
      std::uint32_t v = pick(rng_);
      if (in_[v]) continue;
      if (best == npos32 || stamp_[v] < stamp_[best]) best = v;
    }
    if (best == npos32) {
      for (std::uint32_t v = 0; v < g_.n; ++v)
        if (!in_[v]) return v;
    }
    return best;
  }

  void begin_log() {
    log_.clear();
    logging_ = true;
  }
  void end_log() { logging_ = false; }
  void undo_log() {
    logging_ = false;
    for (auto it = log_.rbegin(); it != log_.rend(); ++it) {
      if (it->inserted)
        remove(it->v);
      else
        insert(it->v);
    }
    log_.clear();
  }

  std::mt19937_64& rng() { return rng_; }
  void touch(std::uint32_t v, std::uint64_t now) { stamp_[v] = now; }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  static constexpr std::uint32_t npos32 = static_cast<std::uint32_t>(-1);

  struct Op {
    std::uint32_t v;
    bool inserted;
  };

  void add_free(std::uint32_t v) {
    if (free_pos_[v] != npos) return;
    free_pos_[v] = free_.size();
    free_.push_back(v);
  }
  void drop_free(std::uint32_t v) {
    std::size_t p = free_pos_[v];
    if (p == npos) return;
    std::uint32_t last = free_.back();
    free_[p] = last;
    free_pos_[last] = p;
    free_.pop_back();
    free_pos_[v] = npos;
  }

  void insert(std::uint32_t v) {
    in_[v] = 1;
    pos_[v] = sol_.size();
    sol_.push_back(v);
    drop_free(v);
    for (auto u : g_.neighbors[v])
      if (tight_[u]++ == 0) drop_free(u);
    if (logging_) log_.push_back({v, true});
  }

  void remove(std::uint32_t v) {
    in_[v] = 0;
    std::size_t p = pos_[v];
    std::uint32_t last = sol_.back();
    sol_[p] = last;
    pos_[last] = p;
    sol_.pop_back();
    pos_[v] = npos;
    if (tight_[v] == 0) add_free(v);
    for (auto u : g_.neighbors[v])
      if (--tight_[u] == 0 && !in_[u]) add_free(u);
    if (logging_) log_.push_back({v, false});
  }

  void fill_free() {
    while (!free_.empty()) insert(free_.back());
  }

  std::uint32_t sole_solution_neighbor(std::uint32_t z) const {
    for (auto u : g_.neighbors[z])
      if (in_[u]) return u;
    return z;
  }

  const DenseGraph& g_;
  std::mt19937_64 rng_;
  std::vector<char> in_;
  std::vector<std::uint32_t> tight_;
  std::vector<std::size_t> pos_;
  std::vector<std::size_t> free_pos_;
  std::vector<std::uint64_t> stamp_;
  std::vector<std::uint32_t> sol_;
  std::vector<std::uint32_t> free_;
  std::vector<std::uint32_t> one_tight_;
  std::vector<Op> log_;
  bool logging_ = false;
};

}  // namespace

bool is_independent(const DenseGraph& g, const std::vector<std::uint32_t>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.n) return false;
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j] || g.adjacent(vertices[i], vertices[j])) return false;
  }
  return true;
}

SolveResult solve_heuristic(const DenseGraph& g, const HeuristicOptions& options) {
  const auto start = Clock::now();
  SolveResult res;
  res.status = SolveStatus::lower_bound_only;
  if (g.n == 0) return res;

  auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - start).count(); };
  auto out_of_time = [&] { return options.max_seconds > 0 && elapsed() >= options.max_seconds; };

  SwapSearch search(g, options.seed);
  std::vector<std::uint32_t> best;

  search.greedy(false);
  best = search.solution();
  if (options.restarts > 0) {
    std::vector<std::uint32_t> all(search.solution());
    search.local_search(all);
    if (search.size() > best.size()) best = search.solution();
  }

  const std::uint64_t per_restart = options.iterations ? options.iterations : 50 * static_cast<std::uint64_t>(g.n);
  std::uint64_t clock = 0;
  bool done = options.target && best.size() >= options.target;
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  for (unsigned restart = 0; restart < options.restarts && !done; ++restart) {
    if (restart > 0) {
      search.reset();
      search.greedy(true);
      std::vector<std::uint32_t> all(search.solution());
      search.local_search(all);
      if (search.size() > best.size()) best = search.solution();
    }
    std::size_t local_best = search.size();
    if (search.size() == g.n) break;
    for (std::uint64_t it = 0; it < per_restart; ++it) {
      ++clock;
      ++res.nodes;
      if ((it & 255) == 0 && out_of_time()) {
        done = true;
        break;
      }
      const std::size_t before = search.size();
      search.begin_log();
      // Perturb with one forced vertex; occasionally more.
      std::size_t k = 1;
      while (k < 4 && unit(search.rng()) < 0.5 / static_cast<double>(k)) ++k;
      if (unit(search.rng()) >= 0.5) k = 1;
      std::vector<std::uint32_t> touched;
      for (std::size_t r = 0; r < k; ++r) {
        std::uint32_t v = search.pick_outside();
        search.force(v);
        search.touch(v, clock);
        touched.push_back(v);
      }
      search.local_search(search.neighborhood_queue(touched));
      search.end_log();
      const std::size_t after = search.size();
      if (after > best.size()) {
        best = search.solution();
        if (options.target && best.size() >= options.target) {
          done = true;
          break;
        }
      }
      local_best = std::max(local_best, after);
      if (after < before) {
        const double delta = static_cast<double>(before - after);
        const double gap = static_cast<double>(local_best - after);
        if (unit(search.rng()) >= 1.0 / (1.0 + delta * gap)) search.undo_log();
      }
    }
  }
  std::sort(best.begin(), best.end());
  res.alpha = best.size();
  res.witness = std::move(best);
  res.seconds = elapsed();
  return res;
}

}  // namespace shannon
