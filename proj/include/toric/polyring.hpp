#pragma once

// Multivariate polynomials over Q, Gröbner bases and quotient-ring normal forms.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

struct PolyRing {
  std::vector<std::string> names;

  std::size_t num_vars() const { return names.size(); }
  friend bool operator==(const PolyRing&, const PolyRing&) = default;
};
using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> names);

using Exponent = std::vector<int>;

/// Monomial orders. Variables are ranked x1 > x2 > ... > xn in constructor
/// order. `elimination(k)` is the block order degrevlex(first k) then
/// degrevlex(rest), which eliminates the first k variables.
class TermOrder {
 public:
  enum class Kind { degrevlex, lex, elimination };

  static TermOrder degrevlex() { return TermOrder(Kind::degrevlex, 0); }
  static TermOrder lex() { return TermOrder(Kind::lex, 0); }
  static TermOrder elimination(std::size_t block) { return TermOrder(Kind::elimination, block); }

  Kind kind() const { return kind_; }
  std::size_t block() const { return block_; }

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Exponent& a, const Exponent& b) const;
  bool less(const Exponent& a, const Exponent& b) const { return compare(a, b) < 0; }

  friend bool operator==(const TermOrder&, const TermOrder&) = default;
  friend auto operator<=>(const TermOrder&, const TermOrder&) = default;

 private:
  TermOrder(Kind k, std::size_t block) : kind_(k), block_(block) {}
  Kind kind_;
  std::size_t block_;
};

class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Rational>;

  explicit MultiPoly(RingPtr ring);
  MultiPoly(RingPtr ring, TermMap terms);

  static MultiPoly constant(RingPtr ring, const Rational& c);
  static MultiPoly variable(RingPtr ring, std::size_t index);
  static MultiPoly monomial(RingPtr ring, Exponent exp, const Rational& c = 1);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;

  /// Largest term under `order`; requires a nonzero polynomial.
  std::pair<Exponent, Rational> leading_term(const TermOrder& order) const;
  /// Terms sorted descending under `order`.
  std::vector<std::pair<Exponent, Rational>> sorted_terms(const TermOrder& order) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& c, const MultiPoly& a);
  MultiPoly pow(unsigned e) const;

  /// Scales so the leading coefficient under `order` is 1.
  MultiPoly monic(const TermOrder& order = TermOrder::degrevlex()) const;

  /// Text form such as "-x1*x2 + x3^2", terms in descending degrevlex order.
  std::string to_string() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  RingPtr ring_;
  TermMap terms_;
};

std::string format_monomial(const PolyRing& ring, const Exponent& e);

/// Parses "+", "-", "*", "^", parentheses, integers and rationals "a/b"
/// over the ring's variable names. Throws ValidationError on bad input.
MultiPoly parse_polynomial(const RingPtr& ring, std::string_view text);

class PolyIdeal {
 public:
  PolyIdeal(RingPtr ring, std::vector<MultiPoly> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<MultiPoly>& generators() const { return gens_; }

  /// Reduced Gröbner basis, computed once per order and shared between copies.
  const std::vector<MultiPoly>& groebner_basis(const TermOrder& order = TermOrder::degrevlex()) const;

  /// "ideal(g1, g2, ...)"
  std::string to_string() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<TermOrder, std::vector<MultiPoly>> bases;
  };
  RingPtr ring_;
  std::vector<MultiPoly> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Reduced Gröbner basis: monic, sorted by ascending leading monomial.
std::vector<MultiPoly> groebner_basis(const PolyIdeal& ideal, const TermOrder& order);

/// Remainder of f after full reduction by a reduced Gröbner basis.
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis, const TermOrder& order);
MultiPoly normal_form(const MultiPoly& f, const PolyIdeal& ideal);

bool ideal_contains(const PolyIdeal& ideal, const MultiPoly& f);

/// I : f^oo, by adjoining t*f - 1 and eliminating t.
PolyIdeal saturate(const PolyIdeal& ideal, const MultiPoly& f);

/// Mutual membership of generators. Throws ValidationError on ring mismatch.
bool ideal_equal(const PolyIdeal& a, const PolyIdeal& b);

PolyIdeal ideal_sum(const PolyIdeal& a, const PolyIdeal& b);

/// Z^k grading of a polynomial ring: one degree vector per variable.
struct Grading {
  std::size_t rank = 0;
  std::vector<IntVector> degrees;

  IntVector degree_of(const Exponent& e) const;
  static Grading standard(std::size_t num_vars);
};

/// Monomial basis of the degree-d part of ring / modulo (standard monomials
/// of the degrevlex basis). The generators of `modulo` must be homogeneous
/// for the grading. Throws ValidationError when the component is not
/// guaranteed finite (no weight is positive on all variable degrees).
std::vector<MultiPoly> graded_component_basis(const RingPtr& ring, const Grading& grading, const IntVector& degree,
                                              const PolyIdeal& modulo);

}  // namespace toric
