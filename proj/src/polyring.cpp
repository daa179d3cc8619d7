#include "toric/polyring.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <set>
#include <sstream>
#include <tuple>

#include "toric/errors.hpp"
#include "toric/lp.hpp"

namespace toric {

RingPtr make_ring(std::vector<std::string> names) {
  std::set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second) throw ValidationError("duplicate variable name '" + n + "'");
  return std::make_shared<const PolyRing>(PolyRing{std::move(names)});
}

// ---------------------------------------------------------------------------
// Term orders

namespace {

int degree(const Exponent& e, std::size_t begin, std::size_t end) {
  int d = 0;
  for (std::size_t i = begin; i < end; ++i) d += e[i];
  return d;
}

int compare_degrevlex(const Exponent& a, const Exponent& b, std::size_t begin, std::size_t end) {
  int da = degree(a, begin, end), db = degree(b, begin, end);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = end; i > begin; --i) {
    if (a[i - 1] != b[i - 1]) return a[i - 1] > b[i - 1] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int TermOrder::compare(const Exponent& a, const Exponent& b) const {
  assert(a.size() == b.size());
  switch (kind_) {
    case Kind::lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case Kind::degrevlex:
      return compare_degrevlex(a, b, 0, a.size());
    case Kind::elimination: {
      std::size_t k = std::min(block_, a.size());
      int c = compare_degrevlex(a, b, 0, k);
      if (c != 0) return c;
      return compare_degrevlex(a, b, k, a.size());
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly::MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

MultiPoly::MultiPoly(RingPtr ring, TermMap terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.size() != ring_->num_vars()) throw ValidationError("exponent length does not match ring");
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

MultiPoly MultiPoly::constant(RingPtr ring, const Rational& c) {
  Exponent zero(ring->num_vars(), 0);
  return monomial(std::move(ring), std::move(zero), c);
}

MultiPoly MultiPoly::variable(RingPtr ring, std::size_t index) {
  Exponent e(ring->num_vars(), 0);
  if (index >= e.size()) throw ValidationError("variable index out of range");
  e[index] = 1;
  return monomial(std::move(ring), std::move(e));
}

MultiPoly MultiPoly::monomial(RingPtr ring, Exponent exp, const Rational& c) {
  MultiPoly p(std::move(ring));
  if (exp.size() != p.ring_->num_vars()) throw ValidationError("exponent length does not match ring");
  if (c != 0) p.terms_.emplace(std::move(exp), c);
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && degree(terms_.begin()->first, 0, ring_->num_vars()) == 0;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, degree(e, 0, e.size()));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int de = degree(e, 0, e.size());
    if (d >= 0 && de != d) return false;
    d = de;
  }
  return true;
}

std::pair<Exponent, Rational> MultiPoly::leading_term(const TermOrder& order) const {
  assert(!terms_.empty());
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (order.compare(it->first, best->first) > 0) best = it;
  return *best;
}

std::vector<std::pair<Exponent, Rational>> MultiPoly::sorted_terms(const TermOrder& order) const {
  std::vector<std::pair<Exponent, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return order.compare(a.first, b.first) > 0; });
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

namespace {
void check_same_ring(const MultiPoly& a, const MultiPoly& b) {
  if (a.ring() != b.ring() && !(*a.ring() == *b.ring()))
    throw ValidationError("polynomials belong to different rings");
}
}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same_ring(*this, o);
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  check_same_ring(a, b);
  MultiPoly r(a.ring_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      Rational c = ca * cb;
      auto [it, inserted] = r.terms_.emplace(std::move(e), c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  return r;
}

MultiPoly operator*(const Rational& c, const MultiPoly& a) {
  MultiPoly r(a.ring_);
  if (c == 0) return r;
  for (const auto& [e, x] : a.terms_) r.terms_.emplace(e, c * x);
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(ring_, 1);
  MultiPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::monic(const TermOrder& order) const {
  if (terms_.empty()) return *this;
  Rational lc = leading_term(order).second;
  return Rational(1) / lc * *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return (a.ring_ == b.ring_ || *a.ring_ == *b.ring_) && a.terms_ == b.terms_;
}

std::string format_monomial(const PolyRing& ring, const Exponent& e) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) os << '*';
    os << ring.names[i];
    if (e[i] > 1) os << '^' << e[i];
    first = false;
  }
  return first ? "1" : os.str();
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted_terms(TermOrder::degrevlex())) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool unit = degree(e, 0, e.size()) == 0;
    if (unit) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << format_monomial(*ring_, e);
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  MultiPoly parse() {
    MultiPoly p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ValidationError("cannot parse polynomial '" + std::string(text_) + "': " + why + " at offset " +
                          std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expression() {
    MultiPoly acc(ring_);
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    MultiPoly t = term();
    acc = negative ? -t : t;
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  MultiPoly factor() {
    MultiPoly base = primary();
    if (accept('^')) {
      Integer e = integer();
      if (!e.fits_uint_p()) fail("exponent out of range");
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Integer integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  MultiPoly primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end");
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      MultiPoly p = expression();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      Integer num = integer();
      Rational value(num);
      if (accept('/')) {
        Integer den = integer();
        if (den == 0) fail("zero denominator");
        value = Rational(num, den);
        value.canonicalize();
      }
      return MultiPoly::constant(ring_, value);
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      const auto& names = ring_->names;
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) fail("unknown variable '" + name + "'");
      return MultiPoly::variable(ring_, static_cast<std::size_t>(it - names.begin()));
    }
    fail("unexpected character");
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_polynomial(const RingPtr& ring, std::string_view text) { return Parser(ring, text).parse(); }

// ---------------------------------------------------------------------------
// Buchberger

namespace {

struct Term {
  Exponent exp;
  Rational coeff;
};

// Terms sorted descending under the active order.
struct GPoly {
  std::vector<Term> terms;
  int sugar = 0;

  bool zero() const { return terms.empty(); }
  const Exponent& lm() const { return terms.front().exp; }
};

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = std::max(a[i], b[i]);
  return e;
}

Exponent minus(const Exponent& a, const Exponent& b) {
  Exponent e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] - b[i];
  return e;
}

bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

GPoly to_gpoly(const MultiPoly& p, const TermOrder& order) {
  GPoly g;
  for (auto& [e, c] : p.sorted_terms(order)) g.terms.push_back({e, c});
  g.sugar = std::max(0, p.total_degree());
  return g;
}

MultiPoly to_multipoly(const RingPtr& ring, const GPoly& g) {
  MultiPoly::TermMap m;
  for (const auto& t : g.terms) m.emplace(t.exp, t.coeff);
  return MultiPoly(ring, std::move(m));
}

void make_monic(GPoly& g) {
  if (g.zero()) return;
  Rational inv = 1 / g.terms.front().coeff;
  for (auto& t : g.terms) t.coeff *= inv;
}

// f[start..] - c * x^shift * g, merged in descending order.
std::vector<Term> subtract_multiple(const std::vector<Term>& f, std::size_t start, const Rational& c,
                                    const Exponent& shift, const GPoly& g, const TermOrder& order) {
  std::vector<Term> out;
  out.reserve(f.size() - start + g.terms.size());
  std::size_t i = start, j = 0;
  while (i < f.size() || j < g.terms.size()) {
    if (j == g.terms.size()) {
      out.push_back(f[i++]);
      continue;
    }
    Exponent ge(shift.size());
    for (std::size_t k = 0; k < ge.size(); ++k) ge[k] = g.terms[j].exp[k] + shift[k];
    int cmp = i < f.size() ? order.compare(f[i].exp, ge) : -1;
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(ge), -c * g.terms[j].coeff});
      ++j;
    } else {
      Rational v = f[i].coeff - c * g.terms[j].coeff;
      if (v != 0) out.push_back({std::move(ge), v});
      ++i;
      ++j;
    }
  }
  return out;
}

// Full reduction of f by the basis; returns the remainder.
GPoly reduce(const GPoly& f, const std::vector<const GPoly*>& basis, const TermOrder& order) {
  GPoly rem;
  rem.sugar = f.sugar;
  std::vector<Term> work = f.terms;
  std::size_t pos = 0;
  while (pos < work.size()) {
    const Term& lt = work[pos];
    const GPoly* divisor = nullptr;
    for (const GPoly* g : basis)
      if (divides(g->lm(), lt.exp)) {
        divisor = g;
        break;
      }
    if (!divisor) {
      rem.terms.push_back(lt);
      ++pos;
      continue;
    }
    Exponent shift = minus(lt.exp, divisor->lm());
    Rational c = lt.coeff / divisor->terms.front().coeff;
    rem.sugar = std::max(rem.sugar, divisor->sugar + degree(shift, 0, shift.size()));
    work = subtract_multiple(work, pos, c, shift, *divisor, order);
    pos = 0;
  }
  return rem;
}

GPoly s_polynomial(const GPoly& f, const GPoly& g, const TermOrder& order) {
  Exponent l = lcm(f.lm(), g.lm());
  Exponent sf = minus(l, f.lm());
  Exponent sg = minus(l, g.lm());
  // f and g are monic
  GPoly a;
  for (const auto& t : f.terms) {
    Exponent e(t.exp.size());
    for (std::size_t k = 0; k < e.size(); ++k) e[k] = t.exp[k] + sf[k];
    a.terms.push_back({std::move(e), t.coeff});
  }
  GPoly out;
  out.terms = subtract_multiple(a.terms, 0, Rational(1), sg, g, order);
  out.sugar = std::max(f.sugar + degree(sf, 0, sf.size()), g.sugar + degree(sg, 0, sg.size()));
  return out;
}

struct Pair {
  std::size_t i, j;
  Exponent lcm;
  int sugar;
};

std::vector<GPoly> buchberger(std::vector<GPoly> input, const TermOrder& order) {
  std::vector<GPoly> basis;
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add = [&](GPoly g) {
    make_monic(g);
    const std::size_t idx = basis.size();
    for (std::size_t k = 0; k < idx; ++k) {
      Exponent l = lcm(basis[k].lm(), g.lm());
      int s = std::max(basis[k].sugar + degree(minus(l, basis[k].lm()), 0, l.size()),
                       g.sugar + degree(minus(l, g.lm()), 0, l.size()));
      pairs.push_back({k, idx, std::move(l), s});
      pending.insert({k, idx});
    }
    basis.push_back(std::move(g));
  };

  for (auto& g : input)
    if (!g.zero()) add(std::move(g));

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      int c = order.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
    Pair p = *best;
    pairs.erase(best);
    pending.erase({p.i, p.j});

    if (coprime(basis[p.i].lm(), basis[p.j].lm())) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!divides(basis[k].lm(), p.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (!pending.count(key(p.i, k)) && !pending.count(key(p.j, k))) chain = true;
    }
    if (chain) continue;

    GPoly s = s_polynomial(basis[p.i], basis[p.j], order);
    std::vector<const GPoly*> refs;
    for (const auto& g : basis) refs.push_back(&g);
    GPoly h = reduce(s, refs, order);
    if (!h.zero()) add(std::move(h));
  }

  // Minimize, then interreduce tails.
  std::vector<GPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (divides(basis[j].lm(), basis[i].lm()) && (basis[j].lm() != basis[i].lm() || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<GPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const GPoly*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(&minimal[j]);
    GPoly r = reduce(minimal[i], others, order);
    make_monic(r);
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const GPoly& a, const GPoly& b) { return order.compare(a.lm(), b.lm()) < 0; });
  return reduced;
}

}  // namespace

std::vector<MultiPoly> groebner_basis(const PolyIdeal& ideal, const TermOrder& order) {
  std::vector<GPoly> input;
  for (const auto& g : ideal.generators())
    if (!g.is_zero()) input.push_back(to_gpoly(g, order));
  std::vector<MultiPoly> out;
  for (const auto& g : buchberger(std::move(input), order)) out.push_back(to_multipoly(ideal.ring(), g));
  return out;
}

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis, const TermOrder& order) {
  std::vector<GPoly> gs;
  gs.reserve(basis.size());
  for (const auto& b : basis) {
    check_same_ring(f, b);
    gs.push_back(to_gpoly(b, order));
  }
  std::vector<const GPoly*> refs;
  for (const auto& g : gs) refs.push_back(&g);
  return to_multipoly(f.ring(), reduce(to_gpoly(f, order), refs, order));
}

MultiPoly normal_form(const MultiPoly& f, const PolyIdeal& ideal) {
  return normal_form(f, ideal.groebner_basis(), TermOrder::degrevlex());
}

bool ideal_contains(const PolyIdeal& ideal, const MultiPoly& f) { return normal_form(f, ideal).is_zero(); }

// ---------------------------------------------------------------------------
// PolyIdeal

PolyIdeal::PolyIdeal(RingPtr ring, std::vector<MultiPoly> generators)
    : ring_(std::move(ring)), gens_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : gens_)
    if (!(*g.ring() == *ring_)) throw ValidationError("ideal generator belongs to a different ring");
}

const std::vector<MultiPoly>& PolyIdeal::groebner_basis(const TermOrder& order) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto it = cache_->bases.find(order);
  if (it == cache_->bases.end()) it = cache_->bases.emplace(order, toric::groebner_basis(*this, order)).first;
  return it->second;
}

std::string PolyIdeal::to_string() const {
  std::ostringstream os;
  os << "ideal(";
  for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? ", " : "") << gens_[i].to_string();
  os << ')';
  return os.str();
}

PolyIdeal saturate(const PolyIdeal& ideal, const MultiPoly& f) {
  if (f.is_zero()) throw ValidationError("saturate: cannot saturate by zero");
  check_same_ring(ideal.generators().empty() ? f : ideal.generators().front(), f);
  if (f.is_constant()) return ideal;

  const RingPtr& ring = ideal.ring();
  std::vector<std::string> names = ring->names;
  std::string t = "_t";
  while (std::find(names.begin(), names.end(), t) != names.end()) t += "_";
  names.insert(names.begin(), t);
  RingPtr big = make_ring(std::move(names));

  auto lift = [&](const MultiPoly& p) {
    MultiPoly::TermMap m;
    for (const auto& [e, c] : p.terms()) {
      Exponent le = e;
      le.insert(le.begin(), 0);
      m.emplace(std::move(le), c);
    }
    return MultiPoly(big, std::move(m));
  };

  std::vector<MultiPoly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(lift(g));
  gens.push_back(MultiPoly::variable(big, 0) * lift(f) - MultiPoly::constant(big, 1));
  PolyIdeal extended(big, std::move(gens));

  std::vector<MultiPoly> kept;
  for (const auto& g : toric::groebner_basis(extended, TermOrder::elimination(1))) {
    bool free_of_t = std::all_of(g.terms().begin(), g.terms().end(), [](const auto& kv) { return kv.first[0] == 0; });
    if (!free_of_t) continue;
    MultiPoly::TermMap m;
    for (const auto& [e, c] : g.terms()) m.emplace(Exponent(e.begin() + 1, e.end()), c);
    kept.emplace_back(ring, std::move(m));
  }
  return PolyIdeal(ring, std::move(kept));
}

bool ideal_equal(const PolyIdeal& a, const PolyIdeal& b) {
  if (!(*a.ring() == *b.ring())) throw ValidationError("ideal_equal: ideals live in different rings");
  for (const auto& g : a.generators())
    if (!ideal_contains(b, g)) return false;
  for (const auto& g : b.generators())
    if (!ideal_contains(a, g)) return false;
  return true;
}

PolyIdeal ideal_sum(const PolyIdeal& a, const PolyIdeal& b) {
  if (!(*a.ring() == *b.ring())) throw ValidationError("ideal_sum: ideals live in different rings");
  std::vector<MultiPoly> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return PolyIdeal(a.ring(), std::move(gens));
}

// ---------------------------------------------------------------------------
// Graded components

IntVector Grading::degree_of(const Exponent& e) const {
  IntVector d(rank);
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t k = 0; k < rank; ++k) d[k] += degrees[i][k] * e[i];
  return d;
}

Grading Grading::standard(std::size_t num_vars) {
  Grading g;
  g.rank = 1;
  g.degrees.assign(num_vars, make_int_vector({1}));
  return g;
}

std::vector<MultiPoly> graded_component_basis(const RingPtr& ring, const Grading& grading, const IntVector& degree,
                                              const PolyIdeal& modulo) {
  const std::size_t n = ring->num_vars();
  if (grading.degrees.size() != n) throw ValidationError("grading: one degree per variable required");
  if (degree.size() != grading.rank) throw ValidationError("grading: degree has wrong rank");
  for (const auto& d : grading.degrees)
    if (d.size() != grading.rank) throw ValidationError("grading: degree vector has wrong rank");

  // A weight positive on every variable degree bounds all exponents.
  std::vector<LinearInequality> strict;
  for (const auto& d : grading.degrees) strict.push_back({to_rational(d), Rational(0)});
  auto weight = lp_find_point(grading.rank, strict, {});
  if (!weight) throw ValidationError("graded component is not finite-dimensional for this grading");

  for (const auto& g : modulo.generators()) {
    std::set<IntVector> degs;
    for (const auto& [e, c] : g.terms()) degs.insert(grading.degree_of(e));
    if (degs.size() > 1) throw ValidationError("graded_component_basis: ideal is not homogeneous");
  }

  std::vector<Rational> var_weight(n);
  for (std::size_t i = 0; i < n; ++i) var_weight[i] = dot(grading.degrees[i], *weight);

  std::vector<Exponent> monomials;
  Exponent e(n, 0);
  IntVector remaining = degree;
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      if (is_zero(remaining)) monomials.push_back(e);
      return;
    }
    Rational budget = dot(remaining, *weight);
    if (budget < 0) return;
    IntVector saved = remaining;
    for (int k = 0;; ++k) {
      if (Rational(k) * var_weight[i] > budget) break;
      e[i] = k;
      self(self, i + 1);
      remaining = subtract(remaining, grading.degrees[i]);
    }
    e[i] = 0;
    remaining = saved;
  };
  recurse(recurse, 0);

  const auto& gb = modulo.groebner_basis();
  std::vector<Exponent> leads;
  for (const auto& g : gb) leads.push_back(g.leading_term(TermOrder::degrevlex()).first);
  std::vector<MultiPoly> out;
  for (const auto& m : monomials) {
    bool standard = std::none_of(leads.begin(), leads.end(), [&](const Exponent& l) { return divides(l, m); });
    if (standard) out.push_back(MultiPoly::monomial(ring, m));
  }
  std::sort(out.begin(), out.end(), [](const MultiPoly& a, const MultiPoly& b) {
    return TermOrder::degrevlex().compare(a.terms().begin()->first, b.terms().begin()->first) > 0;
  });
  return out;
}

}  // namespace toric
