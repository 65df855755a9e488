#pragma once

// Dense primal simplex for small linear programs
//   maximize c^T x  subject to  A x <= b,  x >= 0,  with b >= 0,
// so the slack basis is an initial feasible point.

#include <cstddef>
#include <vector>

namespace shannon {

struct LinearProgram {
  std::vector<std::vector<long double>> a;  ///< rows of A
  std::vector<long double> b;
  std::vector<long double> c;
};

struct LpSolution {
  enum class Status { optimal, unbounded, iteration_limit };
  Status status = Status::iteration_limit;
  long double objective = 0;
  std::vector<long double> x;
  std::size_t iterations = 0;
};

/// Dantzig pricing, switching to Bland's rule after a run of degenerate pivots.
/// Throws InputError when some b_i < 0 or the dimensions disagree.
LpSolution solve_lp(const LinearProgram& lp, long double eps = 1e-13L, std::size_t max_iterations = 0);

}  // namespace shannon
