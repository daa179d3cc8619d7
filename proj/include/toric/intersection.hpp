#pragma once

// Chow rings of simplicial toric varieties and intersection numbers.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "toric/polyring.hpp"
#include "toric/toric_variety.hpp"

namespace toric {

class ChowRing {
 public:
  /// Throws UnsupportedInput for non-simplicial fans.
  explicit ChowRing(NormalToricVariety v);

  const NormalToricVariety& variety() const { return variety_; }
  const RingPtr& ring() const { return variety_.cox_ring(); }
  /// Linear relations followed by Stanley-Reisner generators.
  const PolyIdeal& ideal() const { return ideal_; }
  MultiPoly reduce(const MultiPoly& f) const { return normal_form(f, ideal_); }
  /// Standard monomials of total degree d.
  std::vector<MultiPoly> basis(int d) const;

  /// "Quotient of Multivariate Polynomial Ring in x1, x2 over Rational Field by ideal (...)"
  std::string to_string() const;

 private:
  NormalToricVariety variety_;
  PolyIdeal ideal_;
};

using ChowRingPtr = std::shared_ptr<const ChowRing>;

ChowRingPtr chow_ring(const NormalToricVariety& v);

class RationalEquivalenceClass {
 public:
  RationalEquivalenceClass(ChowRingPtr ring, MultiPoly representative, int grade);

  const ChowRingPtr& chow() const { return ring_; }
  /// Normal form with respect to the Chow ideal.
  const MultiPoly& representative() const { return rep_; }
  /// Codimension; meaningful only for nonzero classes.
  int grade() const { return grade_; }
  bool is_zero() const { return rep_.is_zero(); }

  friend RationalEquivalenceClass operator+(const RationalEquivalenceClass& a, const RationalEquivalenceClass& b);
  friend RationalEquivalenceClass operator-(const RationalEquivalenceClass& a, const RationalEquivalenceClass& b);
  friend RationalEquivalenceClass operator*(const RationalEquivalenceClass& a, const RationalEquivalenceClass& b);
  friend RationalEquivalenceClass operator*(const Rational& c, const RationalEquivalenceClass& a);

  /// "Trivial rational equivalence class on a normal toric variety" or
  /// "Rational equivalence class on a normal toric variety represented by ...".
  std::string to_string() const;

 private:
  ChowRingPtr ring_;
  MultiPoly rep_;
  int grade_;
};

/// Throws ValidationError unless f is homogeneous.
RationalEquivalenceClass rational_equivalence_class(const ChowRingPtr& ring, const MultiPoly& f);
RationalEquivalenceClass rational_equivalence_class(const ChowRingPtr& ring, std::string_view text);

/// Maximal cone of minimal multiplicity used to normalize degrees, and that multiplicity.
std::pair<std::size_t, Integer> degree_anchor(const ChowRing& ring);

/// lambda with a ~ lambda [point]. The variety must be complete and a of grade dim.
/// `anchor` selects the normalizing maximal cone; by default degree_anchor().
Rational degree(const RationalEquivalenceClass& a);
Rational degree(const RationalEquivalenceClass& a, std::size_t anchor);

/// Degrees of all degree-dim monomials, in descending degrevlex order.
std::vector<std::pair<MultiPoly, Rational>> intersection_form(const ChowRingPtr& ring);

}  // namespace toric
