#include "toric/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <utility>

#include "toric/errors.hpp"

namespace toric {

IntVector make_int_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

RatVector to_rational(const IntVector& v) {
  RatVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

Integer dot(const IntVector& a, const IntVector& b) {
  assert(a.size() == b.size());
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RatVector& a, const RatVector& b) {
  assert(a.size() == b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const IntVector& a, const RatVector& b) {
  assert(a.size() == b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return g;
}

IntVector primitive(const IntVector& v) {
  Integer g = content(v);
  if (g == 0 || g == 1) return v;
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(r[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  return r;
}

IntVector primitive(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational s = v[i] * l;
    r[i] = s.get_num();
  }
  return primitive(r);
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

IntVector negate(const IntVector& v) {
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

IntVector add(const IntVector& a, const IntVector& b) {
  assert(a.size() == b.size());
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVector subtract(const IntVector& a, const IntVector& b) {
  assert(a.size() == b.size());
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ']';
  return os.str();
}

std::string to_string(const RatVector& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ValidationError("matrix rows have different lengths");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
  if (!columns.empty()) rows = columns.front().size();
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw ValidationError("matrix columns have different lengths");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<IntVector> IntMatrix::row_vectors() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

std::vector<IntVector> IntMatrix::column_vectors() const {
  std::vector<IntVector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::select_rows(std::size_t begin, std::size_t end) const {
  IntMatrix m(end - begin, cols_);
  for (std::size_t r = begin; r < end; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r - begin, c) = (*this)(r, c);
  return m;
}

IntMatrix IntMatrix::select_columns(std::size_t begin, std::size_t end) const {
  IntMatrix m(rows_, end - begin);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = begin; c < end; ++c) m(r, c - begin) = (*this)(r, c);
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(target, c) += factor * (*this)(source, c);
}

void IntMatrix::add_column_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, target) += factor * (*this)(r, source);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  assert(a.cols_ == b.rows_);
  IntMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += x * b(k, j);
    }
  return m;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  assert(v.size() == cols_);
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
  }
  return os << ']';
}

// ---------------------------------------------------------------------------
// Smith and Hermite forms

namespace {

// Rounded quotient toward -inf so remainders are non-negative for positive pivots.
Integer floor_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Smallest |value| nonzero entry in the lower-right block starting at t; ties
// resolved by smallest row then column.
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Integer best;
  for (std::size_t r = t; r < d.rows(); ++r)
    for (std::size_t c = t; c < d.cols(); ++c) {
      const Integer& x = d(r, c);
      if (x == 0) continue;
      Integer ax = abs(x);
      if (!found || ax < best) {
        found = true;
        best = ax;
        pr = r;
        pc = c;
      }
    }
  return found;
}

}  // namespace

std::vector<Integer> SnfResult::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(d(i, i));
  return out;
}

SnfResult smith_normal_form(const IntMatrix& a) {
  SnfResult res;
  res.d = a;
  res.u = IntMatrix::identity(a.rows());
  res.v = IntMatrix::identity(a.cols());
  IntMatrix& d = res.d;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    std::size_t pr = 0, pc = 0;
    if (!find_pivot(d, t, pr, pc)) break;
    d.swap_rows(t, pr);
    res.u.swap_rows(t, pr);
    d.swap_columns(t, pc);
    res.v.swap_columns(t, pc);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = floor_quotient(d(i, t), d(t, t));
        d.add_row_multiple(i, t, -q);
        res.u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = floor_quotient(d(t, j), d(t, t));
        d.add_column_multiple(j, t, -q);
        res.v.add_column_multiple(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        // Move the smallest remainder in row/column t into the pivot.
        std::size_t br = t, bc = t;
        Integer best = abs(d(t, t));
        for (std::size_t i = t + 1; i < m; ++i)
          if (d(i, t) != 0 && abs(d(i, t)) < best) {
            best = abs(d(i, t));
            br = i;
            bc = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(t, j) != 0 && abs(d(t, j)) < best) {
            best = abs(d(t, j));
            br = t;
            bc = j;
          }
        d.swap_rows(t, br);
        res.u.swap_rows(t, br);
        d.swap_columns(t, bc);
        res.v.swap_columns(t, bc);
        continue;
      }
      // Enforce divisibility of the remaining block by the pivot.
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n && !fixed; ++j) {
          Integer r;
          mpz_fdiv_r(r.get_mpz_t(), d(i, j).get_mpz_t(), d(t, t).get_mpz_t());
          if (r != 0) {
            d.add_row_multiple(t, i, 1);
            res.u.add_row_multiple(t, i, 1);
            fixed = true;
          }
        }
      if (!fixed) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      res.u.negate_row(t);
    }
  }
  res.rank = t;
  return res;
}

IntMatrix hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  const std::size_t m = h.rows();
  const std::size_t n = h.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    for (;;) {
      // smallest nonzero |entry| in this column at or below `row`
      std::size_t best = m;
      for (std::size_t r = row; r < m; ++r)
        if (h(r, col) != 0 && (best == m || abs(h(r, col)) < abs(h(best, col)))) best = r;
      if (best == m) break;
      h.swap_rows(row, best);
      bool clean = true;
      for (std::size_t r = row + 1; r < m; ++r) {
        if (h(r, col) == 0) continue;
        Integer q = floor_quotient(h(r, col), h(row, col));
        h.add_row_multiple(r, row, -q);
        if (h(r, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) h.negate_row(row);
    for (std::size_t r = 0; r < row; ++r) {
      Integer q = floor_quotient(h(r, col), h(row, col));
      h.add_row_multiple(r, row, -q);
    }
    ++row;
  }
  return h.select_rows(0, row);
}

IntMatrix kernel_basis(const IntMatrix& a) {
  SnfResult snf = smith_normal_form(a);
  const std::size_t n = a.cols();
  IntMatrix k = snf.v.select_columns(snf.rank, n);
  if (k.cols() == 0) return IntMatrix(n, 0);
  return hermite_normal_form(k.transpose()).transpose();
}

CokernelGrading cokernel_grading(const IntMatrix& a) {
  SnfResult snf = smith_normal_form(a);
  CokernelGrading out;
  const std::size_t r = a.rows();
  out.free_rank = r - snf.rank;
  IntMatrix proj = snf.u.select_rows(snf.rank, r);
  out.projection = out.free_rank ? hermite_normal_form(proj) : IntMatrix(0, r);
  std::vector<IntVector> torsion_rows;
  for (std::size_t i = 0; i < snf.rank; ++i) {
    if (snf.d(i, i) > 1) {
      out.torsion.push_back(snf.d(i, i));
      IntVector row = snf.u.row(i);
      for (auto& x : row) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), snf.d(i, i).get_mpz_t());
      torsion_rows.push_back(std::move(row));
    }
  }
  out.torsion_projection = IntMatrix::from_rows(torsion_rows, r);
  return out;
}

// ---------------------------------------------------------------------------
// Rational elimination

std::vector<std::size_t> row_reduce(std::vector<RatVector>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t n = rows.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < rows.size(); ++col) {
    std::size_t p = row;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[row], rows[p]);
    Rational inv = 1 / rows[row][col];
    for (auto& x : rows[row]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == row || rows[r][col] == 0) continue;
      Rational f = rows[r][col];
      for (std::size_t c = col; c < n; ++c) rows[r][c] -= f * rows[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(const std::vector<RatVector>& rows) {
  std::vector<RatVector> copy = rows;
  return row_reduce(copy).size();
}

std::size_t rank(const IntMatrix& a) {
  std::vector<RatVector> rows;
  rows.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(to_rational(a.row(r)));
  return rank(rows);
}

Integer determinant(const IntMatrix& a) {
  assert(a.rows() == a.cols());
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Integer lattice_index(const IntMatrix& a) {
  SnfResult snf = smith_normal_form(a);
  if (snf.rank < a.cols()) return 0;
  Integer p = 1;
  for (const auto& d : snf.invariant_factors()) p *= d;
  return p;
}

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
  assert(b.size() == a.rows());
  SnfResult snf = smith_normal_form(a);
  IntVector ub = snf.u * b;
  IntVector y(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i < snf.rank) {
      if (!mpz_divisible_p(ub[i].get_mpz_t(), snf.d(i, i).get_mpz_t())) return std::nullopt;
      mpz_divexact(y[i].get_mpz_t(), ub[i].get_mpz_t(), snf.d(i, i).get_mpz_t());
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.v * y;
}

std::optional<RatVector> solve_rational(const std::vector<RatVector>& a, const RatVector& b) {
  assert(a.size() == b.size());
  if (a.empty()) return RatVector{};
  const std::size_t n = a.front().size();
  std::vector<RatVector> aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  std::vector<std::size_t> pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  RatVector x(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][n];
  return x;
}

std::optional<std::vector<RatVector>> inverse(const std::vector<RatVector>& a) {
  const std::size_t n = a.size();
  std::vector<RatVector> aug(n);
  for (std::size_t r = 0; r < n; ++r) {
    assert(a[r].size() == n);
    aug[r] = a[r];
    aug[r].resize(2 * n);
    aug[r][n + r] = 1;
  }
  std::vector<std::size_t> pivots = row_reduce(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  std::vector<RatVector> inv(n);
  for (std::size_t r = 0; r < n; ++r) inv[r].assign(aug[r].begin() + static_cast<std::ptrdiff_t>(n), aug[r].end());
  return inv;
}

std::vector<IntVector> orthogonal_complement(const std::vector<IntVector>& rows, std::size_t dim) {
  IntMatrix k = kernel_basis(IntMatrix::from_rows(rows, dim));
  return k.column_vectors();
}

}  // namespace toric
