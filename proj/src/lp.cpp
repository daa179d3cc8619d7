#include "toric/lp.hpp"

#include <cassert>
#include <limits>
#include <stdexcept>

#include "toric/errors.hpp"

namespace toric {

namespace {

// Dense tableau in the form  y_B(i) + sum_j a[i][j] y_j = b[i];
// objective z = z0 + sum_j d[j] y_j over non-basic j.
class Tableau {
 public:
  Tableau(std::vector<RatVector> a, RatVector b, std::vector<std::size_t> basis)
      : a_(std::move(a)), b_(std::move(b)), basis_(std::move(basis)) {}

  void set_objective(const RatVector& c) {
    const std::size_t n = c.size();
    d_ = c;
    z0_ = 0;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      const Rational cb = c[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < n; ++j) d_[j] -= cb * a_[i][j];
      z0_ += cb * b_[i];
    }
    for (std::size_t i = 0; i < a_.size(); ++i) d_[basis_[i]] = 0;
  }

  void pivot(std::size_t row, std::size_t col) {
    const std::size_t n = a_[row].size();
    Rational inv = 1 / a_[row][col];
    for (auto& x : a_[row]) x *= inv;
    b_[row] *= inv;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (i == row || a_[i][col] == 0) continue;
      Rational f = a_[i][col];
      for (std::size_t j = 0; j < n; ++j)
        if (a_[row][j] != 0) a_[i][j] -= f * a_[row][j];
      b_[i] -= f * b_[row];
    }
    if (d_[col] != 0) {
      Rational f = d_[col];
      for (std::size_t j = 0; j < n; ++j)
        if (a_[row][j] != 0) d_[j] -= f * a_[row][j];
      z0_ += f * b_[row];
    }
    basis_[row] = col;
  }

  // Bland's rule; returns false if unbounded.
  bool optimize() {
    for (;;) {
      std::size_t enter = d_.size();
      for (std::size_t j = 0; j < d_.size(); ++j)
        if (d_[j] > 0) {
          enter = j;
          break;
        }
      if (enter == d_.size()) return true;
      std::size_t leave = a_.size();
      Rational best;
      for (std::size_t i = 0; i < a_.size(); ++i) {
        if (a_[i][enter] <= 0) continue;
        Rational ratio = b_[i] / a_[i][enter];
        if (leave == a_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave == a_.size()) return false;
      pivot(leave, enter);
    }
  }

  RatVector solution(std::size_t n) const {
    RatVector y(n);
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (basis_[i] < n) y[basis_[i]] = b_[i];
    return y;
  }

  const Rational& value() const { return z0_; }
  std::vector<RatVector>& a() { return a_; }
  RatVector& b() { return b_; }
  std::vector<std::size_t>& basis() { return basis_; }

 private:
  std::vector<RatVector> a_;
  RatVector b_;
  std::vector<std::size_t> basis_;
  RatVector d_;
  Rational z0_;
};

}  // namespace

std::optional<RatVector> simplex_maximize(const std::vector<RatVector>& rows, const RatVector& rhs,
                                          const RatVector& objective) {
  const std::size_t m = rows.size();
  const std::size_t n = objective.size();
  // Columns: n originals, m slacks, one auxiliary (index n + m).
  const std::size_t aux = n + m;
  std::vector<RatVector> a(m, RatVector(n + m + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    assert(rows[i].size() == n);
    for (std::size_t j = 0; j < n; ++j) a[i][j] = rows[i][j];
    a[i][n + i] = 1;
    a[i][aux] = -1;
    basis[i] = n + i;
  }
  Tableau t(std::move(a), rhs, std::move(basis));

  std::size_t most_negative = m;
  for (std::size_t i = 0; i < m; ++i)
    if (rhs[i] < 0 && (most_negative == m || rhs[i] < rhs[most_negative])) most_negative = i;

  if (most_negative != m) {
    RatVector phase1(n + m + 1);
    phase1[aux] = -1;
    t.set_objective(phase1);
    t.pivot(most_negative, aux);
    t.optimize();
    if (t.value() < 0) return std::nullopt;
    for (std::size_t i = 0; i < m; ++i) {
      if (t.basis()[i] != aux) continue;
      for (std::size_t j = 0; j < aux; ++j)
        if (t.a()[i][j] != 0) {
          t.pivot(i, j);
          break;
        }
      break;
    }
  }
  // Forbid the auxiliary column from re-entering.
  for (auto& row : t.a()) row[aux] = 0;
  RatVector c(n + m + 1);
  for (std::size_t j = 0; j < n; ++j) c[j] = objective[j];
  t.set_objective(c);
  if (!t.optimize()) throw std::logic_error("simplex_maximize: unbounded objective");
  return t.solution(n);
}

std::optional<RatVector> lp_find_point(std::size_t num_vars, const std::vector<LinearInequality>& strict,
                                       const std::vector<LinearInequality>& weak,
                                       const std::vector<LinearEquation>& equations) {
  // Variables: x+ (n), x- (n), gap s; all >= 0. Rows are written as <=.
  const std::size_t n = num_vars;
  const std::size_t cols = 2 * n + 1;
  const std::size_t gap = 2 * n;
  std::vector<RatVector> rows;
  RatVector rhs;

  auto push = [&](const RatVector& coeffs, const Rational& b, const Rational& gap_coeff) {
    if (coeffs.size() != n) throw ValidationError("lp: coefficient vector has wrong length");
    RatVector row(cols);
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = coeffs[j];
      row[n + j] = -coeffs[j];
    }
    row[gap] = gap_coeff;
    rows.push_back(std::move(row));
    rhs.push_back(b);
  };
  auto negated = [](const RatVector& v) {
    RatVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
  };

  // a.x - s >= b  <=>  -a.x + s <= -b
  for (const auto& ineq : strict) push(negated(ineq.coeffs), -ineq.rhs, 1);
  for (const auto& ineq : weak) push(negated(ineq.coeffs), -ineq.rhs, 0);
  for (const auto& eq : equations) {
    push(eq.coeffs, eq.rhs, 0);
    push(negated(eq.coeffs), -eq.rhs, 0);
  }
  {
    RatVector row(cols);
    row[gap] = 1;
    rows.push_back(std::move(row));
    rhs.push_back(1);
  }
  RatVector objective(cols);
  objective[gap] = 1;

  std::optional<RatVector> y = simplex_maximize(rows, rhs, objective);
  if (!y) return std::nullopt;
  if (!strict.empty() && (*y)[gap] <= 0) return std::nullopt;
  RatVector x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = (*y)[j] - (*y)[n + j];
  return x;
}

bool lp_feasible(std::size_t num_vars, const std::vector<LinearInequality>& strict,
                 const std::vector<LinearInequality>& weak, const std::vector<LinearEquation>& equations) {
  return lp_find_point(num_vars, strict, weak, equations).has_value();
}

}  // namespace toric
