#pragma once

// Maximum independent set: exact branch-and-bound, iterated local search,
// and LP-format export for external ILP solvers.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "shannon/product.hpp"

namespace shannon {

enum class SolveStatus { exact, lower_bound_only, timeout };

std::string to_string(SolveStatus s);

struct SolveBudget {
  std::uint64_t max_nodes = 0;  ///< 0 = unlimited
  double max_seconds = 0;       ///< 0 = unlimited
};

struct ExactOptions {
  SolveBudget budget;
  /// Fix vertex 0 and split the second choice into orbits of its stabilizer.
  /// Only valid for full products (DenseGraph::full_product).
  bool symmetry = false;
  unsigned threads = 1;  ///< 0 = hardware concurrency
  std::uint64_t seed = 1;
};

struct HeuristicOptions {
  std::uint64_t seed = 1;
  unsigned restarts = 1;           ///< 0 = greedy construction only
  std::uint64_t iterations = 0;    ///< local-search iterations per restart; 0 = 50 n
  double max_seconds = 0;          ///< 0 = unlimited
  std::size_t target = 0;          ///< stop as soon as a set this large is found
};

struct SolveResult {
  std::size_t alpha = 0;
  std::vector<std::uint32_t> witness;  ///< vertex indices, sorted
  SolveStatus status = SolveStatus::lower_bound_only;
  std::uint64_t nodes = 0;
  double seconds = 0;
};

/// Branch-and-bound with greedy clique-cover bounds. Status is exact only when
/// the search space was exhausted; otherwise timeout with the best incumbent.
SolveResult solve_exact(const DenseGraph& g, const ExactOptions& options = {});

/// Greedy construction followed by iterated local search with (1,2)-swaps.
/// Always lower_bound_only; reproducible for a fixed seed and iteration budget.
SolveResult solve_heuristic(const DenseGraph& g, const HeuristicOptions& options = {});

/// Independence test on vertex indices of g.
bool is_independent(const DenseGraph& g, const std::vector<std::uint32_t>& vertices);

/// FNV-1a over the sorted edge list; identifies a graph in exported files.
std::uint64_t graph_checksum(const DenseGraph& g);

/// Writes max sum x_v s.t. x_u + x_v <= 1 per edge, x binary, in LP text format.
void export_ilp(const DenseGraph& g, std::ostream& out);
/// Throws std::runtime_error on I/O failure.
void export_ilp(const DenseGraph& g, const std::string& path);

}  // namespace shannon
