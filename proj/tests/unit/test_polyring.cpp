#include <random>

#include "doctest.h"
#include "toric/errors.hpp"
#include "toric/polyring.hpp"

using namespace toric;

namespace {

struct Ctx {
  RingPtr ring;
  explicit Ctx(std::vector<std::string> names) : ring(make_ring(std::move(names))) {}
  MultiPoly p(const char* s) const { return parse_polynomial(ring, s); }
  PolyIdeal ideal(std::initializer_list<const char*> gens) const {
    std::vector<MultiPoly> g;
    for (auto s : gens) g.push_back(p(s));
    return PolyIdeal(ring, g);
  }
};

MultiPoly s_poly(const MultiPoly& f, const MultiPoly& g, const TermOrder& order) {
  auto [ef, cf] = f.leading_term(order);
  auto [eg, cg] = g.leading_term(order);
  Exponent l(ef.size()), af(ef.size()), ag(ef.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    l[i] = std::max(ef[i], eg[i]);
    af[i] = l[i] - ef[i];
    ag[i] = l[i] - eg[i];
  }
  return MultiPoly::monomial(f.ring(), af, 1 / cf) * f - MultiPoly::monomial(f.ring(), ag, 1 / cg) * g;
}

MultiPoly random_poly(std::mt19937& rng, const RingPtr& ring, int terms, int max_exp) {
  std::uniform_int_distribution<int> ex(0, max_exp), co(-3, 3);
  MultiPoly f(ring);
  for (int t = 0; t < terms; ++t) {
    Exponent e(ring->num_vars());
    for (auto& x : e) x = ex(rng);
    f += MultiPoly::monomial(ring, e, co(rng));
  }
  return f;
}

}  // namespace

TEST_CASE("parse and print round trip") {
  Ctx c({"x1", "x2", "x3"});
  CHECK(c.p("-x1*x2 + x3^2").to_string() == "-x1*x2 + x3^2");
  CHECK(c.p("x3^2 - x2*x1").to_string() == "-x1*x2 + x3^2");
  CHECK(c.p("(x1 + x2)^2 - 2*x1*x2").to_string() == "x1^2 + x2^2");
  CHECK(c.p("1/2*x1 - 3").to_string() == "1/2*x1 - 3");
  CHECK(c.p("0").to_string() == "0");
  CHECK(c.p("x1 - x1").is_zero());
  CHECK_THROWS_AS(c.p("x4"), ValidationError);
  CHECK_THROWS_AS(c.p("x1 +"), ValidationError);
  CHECK_THROWS_AS(c.p("1/0"), ValidationError);

  Ctx d({"x1", "x2", "x3", "e1"});
  CHECK(d.p("x1 - x3 + e1").to_string() == "x1 - x3 + e1");
}

TEST_CASE("term orders") {
  auto dr = TermOrder::degrevlex();
  // x1*x3 vs x2^2 in degrevlex: smaller last exponent wins
  CHECK(dr.compare({1, 0, 1}, {0, 2, 0}) < 0);
  CHECK(dr.compare({2, 0, 0}, {0, 0, 1}) > 0);
  auto lx = TermOrder::lex();
  CHECK(lx.compare({1, 0, 0}, {0, 5, 5}) > 0);
  auto el = TermOrder::elimination(1);
  CHECK(el.compare({1, 0, 0}, {0, 5, 5}) > 0);
  CHECK(el.compare({0, 2, 0}, {0, 1, 0}) > 0);
}

TEST_CASE("groebner bases") {
  Ctx c({"x", "y", "z"});
  auto lex = TermOrder::lex();
  CHECK(groebner_basis(c.ideal({"x^2 - y", "y"}), lex) == std::vector<MultiPoly>{c.p("y"), c.p("x^2")});
  CHECK(groebner_basis(c.ideal({"x - y", "y - z"}), lex) == std::vector<MultiPoly>{c.p("y - z"), c.p("x - z")});
  Ctx u({"x1", "x2", "x3"});
  auto gb = u.ideal({"x1*x2 - x3^2"}).groebner_basis();
  REQUIRE(gb.size() == 1);
  CHECK(gb[0] == u.p("x1*x2 - x3^2"));
  CHECK(u.ideal({"x1", "1 + x1"}).groebner_basis() == std::vector<MultiPoly>{u.p("1")});
  CHECK(u.ideal({}).groebner_basis().empty());
}

TEST_CASE("normal forms") {
  Ctx c({"x", "y"});
  CHECK(normal_form(c.p("x^2"), c.ideal({"x^2 - y"})) == c.p("y"));
  CHECK(normal_form(c.p("1"), c.ideal({"x*y"})) == c.p("1"));
  Ctx d({"x1", "x2", "x3", "e1"});
  CHECK(normal_form(d.p("x1*x2"), d.ideal({"x1*x2", "x3*e1"})).is_zero());
}

TEST_CASE("saturation") {
  Ctx c({"x", "y"});
  CHECK(ideal_equal(saturate(c.ideal({"x*y"}), c.p("x")), c.ideal({"y"})));
  CHECK(ideal_equal(saturate(c.ideal({"x^2"}), c.p("x")), c.ideal({"1"})));
  Ctx u({"x1", "x2", "x3"});
  PolyIdeal i = u.ideal({"x1*x2 - x3^2"});
  CHECK(ideal_equal(saturate(i, u.p("x1*x2*x3")), i));
  CHECK_THROWS_AS(saturate(i, u.p("0")), ValidationError);
  // lattice ideal of (2,-2): x^2 - y^2 saturates to x - y, x + y pieces stay separate
  CHECK(ideal_equal(saturate(c.ideal({"x^2*y - y^3"}), c.p("x*y")), c.ideal({"x^2 - y^2"})));
}

TEST_CASE("ideal equality") {
  Ctx d({"x1", "x2", "x3", "e1"});
  CHECK(ideal_equal(d.ideal({"x1 - x3 + e1", "x2 - x3 + e1"}), d.ideal({"x2 - x3 + e1", "x1 - x3 + e1"})));
  Ctx c({"x", "y"});
  CHECK_FALSE(ideal_equal(c.ideal({"x"}), c.ideal({"x^2"})));
  CHECK(ideal_equal(c.ideal({"x - y"}), c.ideal({"2*x - 2*y"})));
  CHECK_THROWS_AS(ideal_equal(c.ideal({"x"}), d.ideal({"x1"})), ValidationError);
}

TEST_CASE("graded components") {
  Ctx c({"x1", "x2", "x3", "x4"});
  Grading g{2, {make_int_vector({1, 0}), make_int_vector({1, 0}), make_int_vector({0, 1}), make_int_vector({0, 1})}};
  PolyIdeal zero = c.ideal({});
  CHECK(graded_component_basis(c.ring, g, make_int_vector({1, 1}), zero).size() == 4);
  CHECK(graded_component_basis(c.ring, g, make_int_vector({0, 0}), zero) == std::vector<MultiPoly>{c.p("1")});
  CHECK(graded_component_basis(c.ring, g, make_int_vector({-1, 0}), zero).empty());
  // (a+1)(b+1) monomials
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      CHECK(graded_component_basis(c.ring, g, make_int_vector({a, b}), zero).size() ==
            static_cast<std::size_t>((a + 1) * (b + 1)));

  Grading bad{1, {make_int_vector({1}), make_int_vector({-1}), make_int_vector({0}), make_int_vector({1})}};
  CHECK_THROWS_AS(graded_component_basis(c.ring, bad, make_int_vector({0}), zero), ValidationError);

  // dP1 Chow ring in the standard grading: the top component is one-dimensional
  Ctx d({"x1", "x2", "x3", "e1"});
  PolyIdeal chow = d.ideal({"x1 - x3 + e1", "x2 - x3 + e1", "x1*x2", "x3*e1"});
  auto top = graded_component_basis(d.ring, Grading::standard(4), make_int_vector({2}), chow);
  CHECK(top.size() == 1);
  CHECK(graded_component_basis(d.ring, Grading::standard(4), make_int_vector({1}), chow).size() == 2);
  CHECK(graded_component_basis(d.ring, Grading::standard(4), make_int_vector({3}), chow).empty());
}

TEST_CASE("property: groebner bases on random ideals") {
  std::mt19937 rng(424242);
  Ctx c({"a", "b", "c"});
  for (auto order : {TermOrder::degrevlex(), TermOrder::lex(), TermOrder::elimination(1)}) {
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<MultiPoly> gens;
      for (int k = 0; k < 2 + trial % 2; ++k) gens.push_back(random_poly(rng, c.ring, 2 + rng() % 2, 2));
      PolyIdeal i(c.ring, gens);
      auto gb = groebner_basis(i, order);
      for (const auto& g : gens) CHECK(normal_form(g, gb, order).is_zero());
      for (std::size_t a = 0; a < gb.size(); ++a) {
        CHECK(gb[a].leading_term(order).second == 1);
        for (std::size_t b = a + 1; b < gb.size(); ++b) CHECK(normal_form(s_poly(gb[a], gb[b], order), gb, order).is_zero());
      }
      // each basis element lies in the ideal spanned by gens: check via the degrevlex basis
      for (const auto& g : gb) CHECK(ideal_contains(i, g));
    }
  }
}

TEST_CASE("property: normal_form is idempotent and linear") {
  std::mt19937 rng(31337);
  Ctx c({"x", "y", "z"});
  for (int trial = 0; trial < 10; ++trial) {
    PolyIdeal i(c.ring, {random_poly(rng, c.ring, 2, 2), random_poly(rng, c.ring, 2, 2)});
    MultiPoly f = random_poly(rng, c.ring, 4, 3), g = random_poly(rng, c.ring, 4, 3);
    MultiPoly nf = normal_form(f, i);
    CHECK(normal_form(nf, i) == nf);
    Rational q(2, 3);
    CHECK(normal_form(f + q * g, i) == nf + q * normal_form(g, i));
  }
}

TEST_CASE("property: saturation contains I and its elements are f-power multiples") {
  std::mt19937 rng(2718);
  Ctx c({"x", "y", "z"});
  for (int trial = 0; trial < 8; ++trial) {
    MultiPoly m = MultiPoly::monomial(c.ring, {1, static_cast<int>(rng() % 2), 0});
    PolyIdeal i(c.ring, {m * random_poly(rng, c.ring, 2, 1), random_poly(rng, c.ring, 2, 2)});
    MultiPoly f = c.p("x");
    PolyIdeal s = saturate(i, f);
    for (const auto& g : i.generators()) CHECK(ideal_contains(s, g));
    for (const auto& g : s.generators()) {
      bool found = false;
      MultiPoly h = g;
      for (int k = 0; k <= 10 && !found; ++k) {
        if (ideal_contains(i, h)) found = true;
        h = f * h;
      }
      CHECK(found);
    }
  }
}
