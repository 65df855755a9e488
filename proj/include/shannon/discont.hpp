#pragma once

// Discontinuities of alpha_k(f_1, ..., f_k) = alpha(E_{f_1} x ... x E_{f_k})
// over a box of fractions: candidate enumeration, pruning by necessary
// conditions, evaluation of alpha and the lowering test.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shannon/independence.hpp"
#include "shannon/rational.hpp"

namespace shannon {

/// Nondecreasing tuple of fractions; alpha_k is symmetric so this is canonical.
using GridPoint = std::vector<Fraction>;

std::string point_key(const GridPoint& p);  ///< "9/4,7/3,5/2"
GridPoint parse_point(std::string_view key);

/// u <= v in the product order up to permutation (sorted coordinatewise).
bool point_leq(const GridPoint& u, const GridPoint& v);

/// Reduced fractions in [lo, hi] with numerator at most max_p, ascending.
std::vector<Fraction> grid_fractions(const Rational& lo, const Rational& hi, std::int64_t max_p);

/// All nondecreasing k-tuples of grid fractions.
std::vector<GridPoint> candidate_grid(const Rational& lo, const Rational& hi, std::int64_t max_p, std::size_t k = 3);

enum class PruneReason { none, numerator, theta, nested_floor };
std::string to_string(PruneReason r);

struct PruneThresholds {
  std::int64_t max_p = 27;
  double theta_tol = 1e-6;
};

struct PruneResult {
  bool keep = true;
  PruneReason reason = PruneReason::none;
  double theta = 0;
  BigInt nested_floor;
};

/// Applies in order: max p_i <= max_p, max p_i <= theta, max p_i <= nested floor.
PruneResult prune(const GridPoint& point, const PruneThresholds& thresholds = {});

enum class DiscontStatus { confirmed, interior, pruned, undetermined };
std::string to_string(DiscontStatus s);

struct DiscontRecord {
  GridPoint point;
  std::optional<std::int64_t> alpha;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  DiscontStatus status = DiscontStatus::undetermined;
  std::optional<PruneReason> prune_reason;
  /// How alpha was obtained: "integer-reduction", "bracket", "exact", "cache".
  std::string provenance;
  std::uint64_t vertices = 0;
  double seconds = 0;
};

struct ClassifyOptions {
  Rational lo{2};
  Rational hi{3};
  std::int64_t max_p = 27;
  std::size_t k = 3;
  std::size_t exact_cap = 1400;     ///< exact search up to this size
  std::size_t symmetry_cap = 3000;  ///< exact search with the larger budget up to this size
  SolveBudget budget;               ///< per instance, below exact_cap
  SolveBudget large_budget;         ///< per instance, between the two caps
  HeuristicOptions heuristic;
  std::size_t heuristic_cap = kDefaultMaterializeCap;
  std::string cache_path;           ///< JSON lines; empty disables the cache
  unsigned threads = 1;
  bool verbose = false;
};

struct ScanResult {
  std::size_t grid_size = 0;
  std::vector<DiscontRecord> survivors;  ///< every unpruned point with its status
  std::vector<std::size_t> discontinuities;  ///< indices into survivors, sorted by point
  std::vector<std::pair<std::size_t, std::size_t>> hasse;  ///< covering pairs among discontinuities
  std::size_t pruned_numerator = 0, pruned_theta = 0, pruned_nested_floor = 0;
  std::size_t monotonicity_violations = 0;
  bool complete = true;  ///< false when some survivor's alpha is undetermined
};

/// Evaluates one point: integer coordinates reduce to a smaller product,
/// then lower/upper bracketing, then exact search within the caps.
DiscontRecord evaluate_point(const GridPoint& point, const ClassifyOptions& options);

/// Full scan over the candidate grid.
ScanResult classify(const ClassifyOptions& options);

/// alpha(E_f^{x3}) for f in [2, 3]. Throws InputError outside that range.
std::int64_t step_function(const Fraction& f);

std::string scan_csv(const ScanResult& scan);
std::string hasse_dot(const ScanResult& scan);

}  // namespace shannon
