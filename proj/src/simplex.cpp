#include "shannon/simplex.hpp"

#include <cmath>
#include <utility>

#include "shannon/error.hpp"

namespace shannon {

namespace {

using Matrix = std::vector<std::vector<long double>>;

class Tableau {
 public:
  Tableau(const LinearProgram& lp, long double eps) : lp_(lp), eps_(eps), m_(lp.a.size()), n_(lp.c.size()) {
    cols_ = n_ + m_ + 1;
    basis_.resize(m_);
    t_.assign(m_ + 1, std::vector<long double>(cols_, 0));
    for (std::size_t i = 0; i < m_; ++i) {
      basis_[i] = n_ + i;
      for (std::size_t j = 0; j < n_; ++j) t_[i][j] = lp.a[i][j];
      t_[i][n_ + i] = 1;
      t_[i][cols_ - 1] = lp.b[i];
    }
    for (std::size_t j = 0; j < n_; ++j) t_[m_][j] = -lp.c[j];
  }

  // Column j of the original system [A | I].
  long double original(std::size_t i, std::size_t j) const {
    return j < n_ ? lp_.a[i][j] : (j - n_ == i ? 1.0L : 0.0L);
  }
  long double cost(std::size_t j) const { return j < n_ ? lp_.c[j] : 0.0L; }

  // Recomputes the tableau from the basis, discarding accumulated rounding.
  // Returns false when the basis matrix is numerically singular.
  bool rebuild() {
    Matrix inv(m_, std::vector<long double>(m_, 0));
    Matrix b(m_, std::vector<long double>(m_));
    for (std::size_t i = 0; i < m_; ++i) {
      inv[i][i] = 1;
      for (std::size_t k = 0; k < m_; ++k) b[i][k] = original(i, basis_[k]);
    }
    for (std::size_t c = 0; c < m_; ++c) {
      std::size_t piv = c;
      for (std::size_t r = c + 1; r < m_; ++r)
        if (std::fabs(b[r][c]) > std::fabs(b[piv][c])) piv = r;
      if (std::fabs(b[piv][c]) < 1e-30L) return false;
      std::swap(b[piv], b[c]);
      std::swap(inv[piv], inv[c]);
      const long double d = b[c][c];
      for (std::size_t k = 0; k < m_; ++k) {
        b[c][k] /= d;
        inv[c][k] /= d;
      }
      for (std::size_t r = 0; r < m_; ++r) {
        if (r == c || b[r][c] == 0) continue;
        const long double f = b[r][c];
        for (std::size_t k = 0; k < m_; ++k) {
          b[r][k] -= f * b[c][k];
          inv[r][k] -= f * inv[c][k];
        }
      }
    }
    t_.assign(m_ + 1, std::vector<long double>(cols_, 0));
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t k = 0; k < m_; ++k) {
        const long double f = inv[i][k];
        if (f == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) t_[i][j] += f * lp_.a[k][j];
        t_[i][n_ + k] += f;
        t_[i][cols_ - 1] += f * lp_.b[k];
      }
      if (t_[i][cols_ - 1] < 0 && t_[i][cols_ - 1] > -1e-12L) t_[i][cols_ - 1] = 0;
    }
    for (std::size_t j = 0; j + 1 < cols_; ++j) {
      long double z = -cost(j);
      for (std::size_t i = 0; i < m_; ++i) z += cost(basis_[i]) * t_[i][j];
      t_[m_][j] = z;
    }
    long double obj = 0;
    for (std::size_t i = 0; i < m_; ++i) obj += cost(basis_[i]) * t_[i][cols_ - 1];
    t_[m_][cols_ - 1] = obj;
    return true;
  }

  std::size_t entering(bool bland) const {
    std::size_t enter = cols_;
    long double best = -eps_;
    for (std::size_t j = 0; j + 1 < cols_; ++j)
      if (t_[m_][j] < best) {
        enter = j;
        if (bland) break;
        best = t_[m_][j];
      }
    return enter;
  }

  // Two-pass ratio test: among rows within tolerance of the minimum ratio,
  // prefer the largest pivot (or the lowest basis index under Bland's rule).
  std::pair<std::size_t, long double> leaving(std::size_t enter, bool bland) const {
    const long double piv_tol = 1e-11L;
    long double min_ratio = 0;
    bool any = false;
    for (std::size_t i = 0; i < m_; ++i) {
      if (t_[i][enter] <= piv_tol) continue;
      long double r = (t_[i][cols_ - 1] + eps_) / t_[i][enter];
      if (!any || r < min_ratio) min_ratio = r;
      any = true;
    }
    if (!any) return {m_, 0};
    std::size_t leave = m_;
    for (std::size_t i = 0; i < m_; ++i) {
      if (t_[i][enter] <= piv_tol) continue;
      if (t_[i][cols_ - 1] / t_[i][enter] > min_ratio) continue;
      if (leave == m_ || (bland ? basis_[i] < basis_[leave] : t_[i][enter] > t_[leave][enter])) leave = i;
    }
    return {leave, t_[leave][cols_ - 1] / t_[leave][enter]};
  }

  void pivot(std::size_t leave, std::size_t enter) {
    const long double piv = t_[leave][enter];
    for (auto& v : t_[leave]) v /= piv;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == leave) continue;
      const long double f = t_[i][enter];
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j) t_[i][j] -= f * t_[leave][j];
    }
    basis_[leave] = enter;
  }

  LpSolution solution() const {
    LpSolution s;
    s.x.assign(n_, 0);
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) s.x[basis_[i]] = t_[i][cols_ - 1];
    s.objective = t_[m_][cols_ - 1];
    return s;
  }

  std::size_t rows() const { return m_; }
  std::size_t columns() const { return cols_; }

 private:
  const LinearProgram& lp_;
  long double eps_;
  std::size_t m_, n_, cols_ = 0;
  std::vector<std::size_t> basis_;
  Matrix t_;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, long double eps, std::size_t max_iterations) {
  const std::size_t m = lp.a.size(), n = lp.c.size();
  if (lp.b.size() != m) throw InputError("LP: b has the wrong length");
  for (const auto& row : lp.a)
    if (row.size() != n) throw InputError("LP: ragged constraint matrix");
  for (auto bi : lp.b)
    if (bi < 0) throw InputError("LP: negative right-hand side");
  if (max_iterations == 0) max_iterations = 50 * (m + n) + 1000;
  // Refactorize less often on big tableaus, where it costs a cubic pass.
  const std::size_t refactor_every = m <= 200 ? 50 : (m <= 600 ? 200 : 500);

  Tableau tab(lp, eps);
  std::size_t iterations = 0, degenerate_run = 0, since_rebuild = 0;
  LpSolution::Status status = LpSolution::Status::iteration_limit;
  int final_checks = 0;
  while (iterations < max_iterations) {
    const bool bland = degenerate_run > 50;
    const std::size_t enter = tab.entering(bland);
    if (enter == tab.columns()) {
      // Confirm optimality on a freshly computed tableau.
      if (since_rebuild == 0 || final_checks >= 3) {
        status = LpSolution::Status::optimal;
        break;
      }
      ++final_checks;
      if (!tab.rebuild()) throw NumericalError("LP basis became singular");
      since_rebuild = 0;
      continue;
    }
    auto [leave, ratio] = tab.leaving(enter, bland);
    if (leave == tab.rows()) {
      status = LpSolution::Status::unbounded;
      break;
    }
    degenerate_run = ratio <= eps ? degenerate_run + 1 : 0;
    tab.pivot(leave, enter);
    ++iterations;
    if (++since_rebuild >= refactor_every) {
      if (!tab.rebuild()) throw NumericalError("LP basis became singular");
      since_rebuild = 0;
    }
  }
  LpSolution sol = tab.solution();
  sol.status = status;
  sol.iterations = iterations;
  return sol;
}

}  // namespace shannon
