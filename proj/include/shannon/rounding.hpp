#pragma once

// Nondeterministic rounding of an orbit on Z_M down to a power of E_{n/d}:
// coordinate x maps to floor(r) with r = n x / M, and also to floor(r) +- 1
// when r is within eps of the next or previous integer.

#include <cstdint>
#include <string>
#include <vector>

#include "shannon/independence.hpp"
#include "shannon/orbit.hpp"
#include "shannon/rational.hpp"

namespace shannon {

struct RoundingSpec {
  std::int64_t source_m = 1;
  std::int64_t target_n = 1;
  std::int64_t target_q = 2;  ///< target graph E_{target_n/target_q}; 2 gives the cycle C_n
  std::vector<Rational> eps;  ///< one per coordinate, each in [0, 1/2)

  /// Throws InputError unless 0 <= eps_i < 1/2 and the sizes are positive.
  void validate() const;
  ProductGraph target() const;
};

/// Candidate images of x in coordinate i, sorted; one or two vertices of Z_n.
std::vector<std::int64_t> round_candidates(std::int64_t x, const RoundingSpec& spec, std::size_t i);

/// Union over orbit elements of the products of candidate sets, sorted and
/// deduplicated. Independence is not claimed.
VertexSet build_T(const OrbitSpec& orbit, const RoundingSpec& spec);

struct RoundSearchOptions {
  HeuristicOptions heuristic;
  std::size_t cap = kDefaultMaterializeCap;  ///< materialization limit for T
  std::size_t exact_cap = 1400;              ///< run the exact solver only up to this |T|
  ExactOptions exact;
};

struct RoundSearchResult {
  std::size_t t_size = 0;
  SolveResult search;   ///< witness indices refer to T's tuple order
  VertexSet witness;    ///< in the target power, verified
  bool verified = false;
};

/// Builds T, searches its induced subgraph and verifies the best set found.
/// Propagates CapacityError when |T| exceeds the cap.
RoundSearchResult round_and_search(const OrbitSpec& orbit, const RoundingSpec& spec,
                                   const RoundSearchOptions& options = {});

}  // namespace shannon
