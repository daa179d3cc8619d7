#include "toric/intersection.hpp"

#include <algorithm>
#include <sstream>

#include "toric/errors.hpp"

namespace toric {

namespace {

PolyIdeal chow_ideal(const NormalToricVariety& v) {
  if (!is_simplicial(v)) throw UnsupportedInput("Chow ring requires a simplicial fan");
  return ideal_sum(ideal_of_linear_relations(v), stanley_reisner_ideal(v));
}

std::string compact(const MultiPoly& f) {
  std::string s = f.to_string(), out;
  for (char ch : s)
    if (ch != ' ') out += ch;
  return out;
}

std::string format_rational(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

}  // namespace

ChowRing::ChowRing(NormalToricVariety v) : variety_(std::move(v)), ideal_(chow_ideal(variety_)) {}

std::vector<MultiPoly> ChowRing::basis(int d) const {
  if (d < 0) return {};
  return graded_component_basis(ring(), Grading::standard(ring()->num_vars()), make_int_vector({d}), ideal_);
}

std::string ChowRing::to_string() const {
  std::ostringstream os;
  os << "Quotient of Multivariate Polynomial Ring in ";
  for (std::size_t i = 0; i < variety_.names().size(); ++i) os << (i ? ", " : "") << variety_.names()[i];
  os << " over Rational Field by ideal (";
  for (std::size_t i = 0; i < ideal_.generators().size(); ++i) os << (i ? ", " : "") << compact(ideal_.generators()[i]);
  os << ')';
  return os.str();
}

ChowRingPtr chow_ring(const NormalToricVariety& v) { return std::make_shared<const ChowRing>(v); }

RationalEquivalenceClass::RationalEquivalenceClass(ChowRingPtr ring, MultiPoly representative, int grade)
    : ring_(std::move(ring)), rep_(std::move(representative)), grade_(grade) {}

namespace {
void check_same(const RationalEquivalenceClass& a, const RationalEquivalenceClass& b) {
  if (a.chow() != b.chow()) throw ValidationError("rational equivalence classes live on different varieties");
}

int combined_grade(const RationalEquivalenceClass& a, const RationalEquivalenceClass& b) {
  if (a.is_zero()) return b.grade();
  if (b.is_zero()) return a.grade();
  if (a.grade() != b.grade()) throw ValidationError("cannot add classes of different grades");
  return a.grade();
}
}  // namespace

RationalEquivalenceClass operator+(const RationalEquivalenceClass& a, const RationalEquivalenceClass& b) {
  check_same(a, b);
  int g = combined_grade(a, b);
  return RationalEquivalenceClass(a.ring_, a.ring_->reduce(a.rep_ + b.rep_), g);
}

RationalEquivalenceClass operator-(const RationalEquivalenceClass& a, const RationalEquivalenceClass& b) {
  check_same(a, b);
  int g = combined_grade(a, b);
  return RationalEquivalenceClass(a.ring_, a.ring_->reduce(a.rep_ - b.rep_), g);
}

RationalEquivalenceClass operator*(const RationalEquivalenceClass& a, const RationalEquivalenceClass& b) {
  check_same(a, b);
  return RationalEquivalenceClass(a.ring_, a.ring_->reduce(a.rep_ * b.rep_), a.grade_ + b.grade_);
}

RationalEquivalenceClass operator*(const Rational& c, const RationalEquivalenceClass& a) {
  return RationalEquivalenceClass(a.ring_, c * a.rep_, a.grade_);
}

std::string RationalEquivalenceClass::to_string() const {
  if (is_zero()) return "Trivial rational equivalence class on a normal toric variety";
  const auto& v = ring_->variety();
  std::vector<std::pair<Exponent, Rational>> terms;
  if (grade_ == static_cast<int>(v.dim()) && is_complete(v)) {
    // Top degree: lambda [point] = lambda * mult * V(anchor).
    auto [anchor, mult] = degree_anchor(*ring_);
    Exponent e(v.num_rays(), 0);
    for (auto i : v.max_cones()[anchor]) e[i] = 1;
    terms.push_back({e, degree(*this, anchor) * Rational(mult)});
  } else {
    terms = rep_.sorted_terms(TermOrder::degrevlex());
  }
  std::ostringstream os;
  os << "Rational equivalence class on a normal toric variety represented by ";
  for (std::size_t t = 0; t < terms.size(); ++t) {
    if (t) os << " + ";
    const auto& [e, c] = terms[t];
    if (c != 1) os << c;
    os << "V(";
    bool first = true;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) {
        os << (first ? "" : ",") << v.names()[i];
        first = false;
      }
    os << ')';
  }
  return os.str();
}

RationalEquivalenceClass rational_equivalence_class(const ChowRingPtr& ring, const MultiPoly& f) {
  if (!(*f.ring() == *ring->ring())) throw ValidationError("polynomial is not in the Cox ring of this variety");
  if (!f.is_homogeneous()) throw ValidationError("rational equivalence class needs a homogeneous polynomial");
  return RationalEquivalenceClass(ring, ring->reduce(f), std::max(0, f.total_degree()));
}

RationalEquivalenceClass rational_equivalence_class(const ChowRingPtr& ring, std::string_view text) {
  return rational_equivalence_class(ring, parse_polynomial(ring->ring(), text));
}

std::pair<std::size_t, Integer> degree_anchor(const ChowRing& ring) {
  const auto& v = ring.variety();
  std::size_t best = 0;
  Integer best_mult = 0;
  for (std::size_t k = 0; k < v.max_cones().size(); ++k) {
    std::vector<IntVector> cols;
    for (auto i : v.max_cones()[k]) cols.push_back(v.rays()[i]);
    Integer m = cols.empty() ? Integer(1) : lattice_index(IntMatrix::from_columns(cols));
    if (k == 0 || m < best_mult) {
      best = k;
      best_mult = m;
    }
  }
  return {best, best_mult};
}

Rational degree(const RationalEquivalenceClass& a) { return degree(a, degree_anchor(*a.chow()).first); }

Rational degree(const RationalEquivalenceClass& a, std::size_t anchor) {
  const ChowRing& ring = *a.chow();
  const auto& v = ring.variety();
  if (!is_complete(v)) throw UnsupportedInput("degree requires a complete variety");
  if (a.is_zero()) return 0;
  if (a.grade() != static_cast<int>(v.dim())) throw ValidationError("degree is defined on classes of top grade only");
  if (anchor >= v.max_cones().size()) throw ValidationError("anchor cone out of range");

  auto top = ring.basis(static_cast<int>(v.dim()));
  if (top.size() != 1) throw UnsupportedInput("top graded piece of the Chow ring is not one-dimensional");
  const Exponent& b = top.front().terms().begin()->first;

  std::vector<IntVector> cols;
  Exponent e(v.num_rays(), 0);
  for (auto i : v.max_cones()[anchor]) {
    cols.push_back(v.rays()[i]);
    e[i] = 1;
  }
  Integer mult = cols.empty() ? Integer(1) : lattice_index(IntMatrix::from_columns(cols));
  auto coeff_of = [&](const MultiPoly& f) {
    auto it = f.terms().find(b);
    return it == f.terms().end() ? Rational(0) : it->second;
  };
  Rational anchor_coeff = coeff_of(ring.reduce(MultiPoly::monomial(ring.ring(), e)));
  if (anchor_coeff == 0) throw UnsupportedInput("anchor cone monomial vanishes in the Chow ring");
  return coeff_of(a.representative()) / anchor_coeff / Rational(mult);
}

std::vector<std::pair<MultiPoly, Rational>> intersection_form(const ChowRingPtr& ring) {
  const auto& v = ring->variety();
  if (!v.torsion().empty()) throw UnsupportedInput("intersection form on a class group with torsion");
  if (!is_complete(v)) throw UnsupportedInput("intersection form requires a complete variety");
  const std::size_t r = v.num_rays();
  const int n = static_cast<int>(v.dim());
  std::vector<Exponent> monos;
  Exponent e(r, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == r) {
      e[i] = left;
      monos.push_back(e);
      e[i] = 0;
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
    e[i] = 0;
  };
  if (r > 0) rec(rec, 0, n);
  std::sort(monos.begin(), monos.end(),
            [](const Exponent& a, const Exponent& b) { return TermOrder::degrevlex().compare(a, b) > 0; });
  std::vector<std::pair<MultiPoly, Rational>> out;
  for (const auto& m : monos) {
    MultiPoly f = MultiPoly::monomial(ring->ring(), m);
    out.emplace_back(f, degree(rational_equivalence_class(ring, f)));
  }
  return out;
}

}  // namespace toric
