#pragma once

// Upper bounds on independence numbers and Shannon capacity of products of
// fraction graphs, and the bracket they form with certified lower bounds.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shannon/independence.hpp"
#include "shannon/orbit.hpp"
#include "shannon/rational.hpp"

namespace shannon {

struct ThetaResult {
  double value = 0;
  /// Smallest eigenvalue of the optimal circulant matrix, scaled so the
  /// largest is theta; nonnegative up to rounding.
  double min_eigenvalue = 0;
  std::size_t iterations = 0;
};

/// Lovasz theta of a circulant via its symmetrized linear program. Throws
/// NumericalError when the a posteriori eigenvalue check fails by more than tol.
ThetaResult theta_circulant(const CirculantFactor& f, double tol = 1e-8);

/// Product of per-factor theta values. threads = 0 uses the hardware concurrency.
double theta_product(const std::vector<CirculantFactor>& factors, unsigned threads = 1);

struct NestedFloor {
  BigInt value;
  std::vector<std::size_t> order;  ///< a minimizing permutation of the inputs
  bool exhaustive = true;          ///< false when k > 8 and only sampled orders were tried
};

/// min over orderings of floor(...floor(floor(f_1) f_2)... f_k).
NestedFloor nested_floor(const std::vector<Rational>& values);
NestedFloor nested_floor(const std::vector<Fraction>& fractions);

struct TwoFactor {
  std::int64_t alpha = 0;
  /// Orbit {t (g_1, g_2)} in E_{N/a} x E_{N/b}, with each factor below the
  /// corresponding input.
  OrbitSpec orbit;
  /// The orbit pushed into E_{f1} x E_{f2} by floor maps; verified.
  VertexSet witness;
};

/// alpha(E_{f1} x E_{f2}) = min(floor(floor(f1) f2), floor(floor(f2) f1)).
TwoFactor alpha_two_factor(const Fraction& f1, const Fraction& f2);

/// (1/(p-1)) * p'/q' for a removal pair p/q -> p'/q', both at least 2.
/// Throws InputError when the pair is not a removal pair.
Rational distance_bound(const Fraction& parent, const Fraction& child);

struct BoundReport {
  std::string graph;
  struct Lower {
    std::size_t value = 0;
    std::string method;       ///< "product", "orbit", "heuristic" or "exact"
    std::string certificate;  ///< human-readable description of the witness
  } lower;
  VertexSet witness;
  BigInt nested_floor;
  bool nested_floor_exhaustive = true;
  Rational chi_f;
  double theta = 0;
  double gap = 0;  ///< min upper - lower
  bool alpha_determined = false;  ///< lower meets an integral upper bound
};

struct SandwichOptions {
  std::size_t exact_cap = 1400;  ///< exact search up to this many vertices
  std::size_t heuristic_cap = kDefaultMaterializeCap;
  SolveBudget budget;
  HeuristicOptions heuristic;
  unsigned threads = 1;
};

BoundReport sandwich(const ProductGraph& g, const SandwichOptions& options = {});

}  // namespace shannon
