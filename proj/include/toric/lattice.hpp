#pragma once

// Exact integer and rational linear algebra over Z^n and Q^n.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

IntVector make_int_vector(std::initializer_list<long> values);
RatVector to_rational(const IntVector& v);

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const RatVector& b);
Rational dot(const IntVector& a, const RatVector& b);

/// gcd of all entries; 0 for the zero vector.
Integer content(const IntVector& v);
/// Divides by the content. The zero vector is returned unchanged.
IntVector primitive(const IntVector& v);
/// Smallest positive integer multiple of v with coprime entries.
IntVector primitive(const RatVector& v);
bool is_zero(const IntVector& v);
IntVector negate(const IntVector& v);
IntVector add(const IntVector& a, const IntVector& b);
IntVector subtract(const IntVector& a, const IntVector& b);

std::string to_string(const IntVector& v);
std::string to_string(const RatVector& v);

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  /// Rows must share one length; `cols` is used only when `rows` is empty.
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols = 0);
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  std::vector<IntVector> row_vectors() const;
  std::vector<IntVector> column_vectors() const;

  IntMatrix transpose() const;
  IntMatrix select_rows(std::size_t begin, std::size_t end) const;
  IntMatrix select_columns(std::size_t begin, std::size_t end) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void add_column_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t r);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  IntVector operator*(const IntVector& v) const;
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... , all >= 0.
struct SnfResult {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  std::size_t rank = 0;

  std::vector<Integer> invariant_factors() const;
};

SnfResult smith_normal_form(const IntMatrix& a);

/// Row-style Hermite normal form of the lattice spanned by the rows of `a`.
/// Zero rows are dropped; pivots are positive and entries above a pivot are
/// reduced into [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& a);

/// Columns form a saturated basis of {v in Z^n : a v = 0}, in Hermite form.
IntMatrix kernel_basis(const IntMatrix& a);

/// Cl = Z^rows / im(a) for a pairing matrix with one row per ray.
struct CokernelGrading {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1
  IntMatrix projection;          // free_rank x rows(a): degree of each ray in the free part
  IntMatrix torsion_projection;  // torsion.size() x rows(a), read modulo the matching factor
};

CokernelGrading cokernel_grading(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);
std::size_t rank(const std::vector<RatVector>& rows);

/// Determinant of a square matrix (Bareiss elimination).
Integer determinant(const IntMatrix& a);

/// Index of the lattice spanned by the columns of `a` inside its saturation;
/// 0 when the columns are linearly dependent.
Integer lattice_index(const IntMatrix& a);

/// Some integer solution of a x = b, or nullopt.
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);

/// Some rational solution of a x = b, or nullopt.
std::optional<RatVector> solve_rational(const std::vector<RatVector>& a, const RatVector& b);

/// Inverse of a square rational matrix, or nullopt if singular.
std::optional<std::vector<RatVector>> inverse(const std::vector<RatVector>& a);

/// Primitive integer basis of the rational orthogonal complement of the rows.
std::vector<IntVector> orthogonal_complement(const std::vector<IntVector>& rows, std::size_t dim);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<RatVector>& rows);

}  // namespace toric
