#include <set>

#include "../support/corpus.hpp"
#include "doctest.h"
#include "toric/errors.hpp"
#include "toric/toric_variety.hpp"

using namespace toric;

namespace {

IntVector v(std::initializer_list<long> xs) { return make_int_vector(xs); }

std::vector<IntVector> vs(std::initializer_list<std::initializer_list<long>> xs) {
  std::vector<IntVector> out;
  for (auto x : xs) out.push_back(make_int_vector(x));
  return out;
}

PolyIdeal ideal_of(const RingPtr& ring, std::initializer_list<const char*> gens) {
  std::vector<MultiPoly> g;
  for (auto s : gens) g.push_back(parse_polynomial(ring, s));
  return PolyIdeal(ring, g);
}

std::vector<std::string> strings(const PolyIdeal& i) {
  std::vector<std::string> out;
  for (const auto& g : i.generators()) out.push_back(g.to_string());
  return out;
}

NormalToricVariety square_fan() {
  return normal_toric_variety(vs({{1, 1}, {-1, 1}, {1, -1}, {-1, -1}}), {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

NormalToricVariety rays_only() { return normal_toric_variety(vs({{1, 0}, {0, 1}, {-1, -1}}), {{0}, {1}, {2}}); }

}  // namespace

TEST_CASE("affine varieties") {
  auto u = affine_normal_toric_variety(positive_hull(vs({{1, 0}, {0, 1}})));
  CHECK(is_smooth(u));
  CHECK(u.dim() == 2);
  CHECK(u.is_affine());
  auto u2 = affine_normal_toric_variety(positive_hull(vs({{-1, 1}, {1, 1}})));
  CHECK_FALSE(is_smooth(u2));
  CHECK(is_simplicial(u2));
  REQUIRE(u2.torsion().size() == 1);
  CHECK(u2.torsion()[0] == 2);

  auto torus = affine_normal_toric_variety(Cone::from_generators(2, {}));
  CHECK(torus.num_rays() == 0);
  CHECK(torus.dim() == 2);
  CHECK(is_smooth(torus));
  CHECK(strings(ideal_of_linear_relations(torus)).empty());
  CHECK_THROWS_AS(affine_normal_toric_variety(Cone::from_generators(2, vs({{1, 0}, {-1, 0}}))), ValidationError);
}

TEST_CASE("general fans") {
  auto r = rays_only();
  CHECK_FALSE(is_complete(r));
  CHECK(is_simplicial(r));
  CHECK_FALSE(is_projective(r));

  auto p2 = normal_toric_variety(vs({{1, 0}, {0, 1}, {-1, -1}}), {{0, 1}, {1, 2}, {0, 2}});
  CHECK(is_complete(p2));
  CHECK(is_projective(p2));

  auto t1 = NormalToricVariety::from_fan(1, {}, {});
  CHECK(t1.num_rays() == 0);
  CHECK(t1.max_cones() == std::vector<IndexSet>{{}});
  CHECK_FALSE(is_complete(t1));
}

TEST_CASE("fan validation") {
  // (1,1) cone sits inside the quadrant
  CHECK_THROWS_AS(normal_toric_variety(vs({{1, 0}, {0, 1}, {1, 1}}), {{0, 1}, {1, 2}}), ValidationError);
  CHECK_THROWS_AS(normal_toric_variety(vs({{1, 0}, {-1, 0}}), {{0, 1}}), ValidationError);
  CHECK_THROWS_AS(normal_toric_variety(vs({{1, 0}, {1, 1}, {0, 1}}), {{0, 1, 2}}), ValidationError);
  CHECK_THROWS_AS(normal_toric_variety(vs({{1, 0}, {0, 1}}), {{0, 2}}), ValidationError);
  CHECK_THROWS_AS(normal_toric_variety(vs({{1, 0}, {0, 1}}), {{0, 1}, {1, 0}}), ValidationError);
  CHECK_THROWS_AS(normal_toric_variety(vs({{1, 0}, {2, 0}}), {{0}, {1}}), ValidationError);
  CHECK_THROWS_AS(normal_toric_variety(vs({{1, 0}, {0, 1}}), {{0, 1}}, {"a", "a"}), ValidationError);
  // two cones crossing through their interiors
  CHECK_THROWS_AS(normal_toric_variety(vs({{1, 0}, {0, 1}, {1, -1}, {-1, 2}}), {{0, 1}, {2, 3}}), ValidationError);

  auto w = normal_toric_variety(vs({{2, 0}, {0, 1}}), {{0, 1}});
  CHECK(w.rays() == vs({{1, 0}, {0, 1}}));
  CHECK(w.warnings().size() == 1);
}

TEST_CASE("del Pezzo 1") {
  auto d = del_pezzo_surface(1);
  CHECK(d.names() == std::vector<std::string>{"x1", "x2", "x3", "e1"});
  CHECK(d.degree(0) == v({1, 1}));
  CHECK(d.degree(1) == v({1, 1}));
  CHECK(d.degree(2) == v({1, 0}));
  CHECK(d.degree(3) == v({0, -1}));
  CHECK(strings(ideal_of_linear_relations(d)) == std::vector<std::string>{"x1 - x3 + e1", "x2 - x3 + e1"});
  CHECK(ideal_equal(ideal_of_linear_relations(d), ideal_of(d.cox_ring(), {"x1 - x3 + e1", "x2 - x3 + e1"})));
  CHECK(strings(stanley_reisner_ideal(d)) == std::vector<std::string>{"x1*x2", "x3*e1"});
  CHECK(canonical_divisor_class(d).coords == v({-3, -1}));
  CHECK(is_smooth(d));
  CHECK(is_complete(d));
  CHECK(is_projective(d));
}

TEST_CASE("named constructors") {
  auto p2 = projective_space(2);
  CHECK(canonical_divisor_class(p2).coords == v({-3}));
  CHECK(strings(stanley_reisner_ideal(p2)) == std::vector<std::string>{"x1*x2*x3"});
  CHECK(strings(ideal_of_linear_relations(p2)) == std::vector<std::string>{"x1 - x3", "x2 - x3"});
  CHECK(strings(irrelevant_ideal(projective_space(1))) == std::vector<std::string>{"x2", "x1"});

  for (long r = 0; r <= 3; ++r) {
    auto h = hirzebruch_surface(r);
    CHECK(is_smooth(h));
    CHECK(is_complete(h));
    CHECK(is_projective(h));
    CHECK(h.class_group_rank() == 2);
  }
  for (int k = 1; k <= 3; ++k) {
    auto d = del_pezzo_surface(k);
    CHECK(d.class_group_rank() == static_cast<std::size_t>(1 + k));
    CHECK(is_smooth(d));
    CHECK(is_complete(d));
  }
  CHECK_THROWS_AS(del_pezzo_surface(4), ValidationError);
  CHECK_THROWS_AS(projective_space(0), ValidationError);
  CHECK_THROWS_AS(hirzebruch_surface(-1), ValidationError);
  CHECK_THROWS_AS(cyclic_quotient_singularity(4, 2), ValidationError);
  CHECK_THROWS_AS(cyclic_quotient_singularity(3, 3), ValidationError);

  auto c = cyclic_quotient_singularity(2, 1);
  CHECK(hilbert_basis(c.cones().front()).size() == 3);
  CHECK_FALSE(is_smooth(c));
}

TEST_CASE("products") {
  auto p1 = projective_space(1);
  auto pp = product(p1, p1);
  CHECK(pp.num_rays() == 4);
  CHECK(pp.max_cones().size() == 4);
  CHECK(pp.class_group_rank() == 2);
  CHECK(pp.names() == std::vector<std::string>{"x1", "x2", "x3", "x4"});
  CHECK(canonical_divisor_class(pp).coords == v({-2, -2}));
  CHECK(is_projective(pp));

  auto t0 = NormalToricVariety::from_fan(0, {}, {});
  auto same = product(pp, t0);
  CHECK(same.rays() == pp.rays());
  CHECK(same.max_cones() == pp.max_cones());
  CHECK(same.grading() == pp.grading());

  auto big = product(pp, del_pezzo_surface(1));
  CHECK(big.class_group_rank() == 4);
  CHECK(big.dim() == 4);
  CHECK(big.max_cones().size() == 16);
  CHECK(big.names() == std::vector<std::string>{"x1_1", "x2_1", "x3_1", "x4", "x1_2", "x2_2", "x3_2", "e1"});
  CHECK(is_smooth(big));
  CHECK(is_complete(big));
}

TEST_CASE("square fan ideals") {
  auto s = square_fan();
  CHECK(strings(irrelevant_ideal(s)) == std::vector<std::string>{"x3*x4", "x2*x4", "x1*x3", "x1*x2"});
  CHECK(strings(stanley_reisner_ideal(s)) == std::vector<std::string>{"x1*x4", "x2*x3"});
  CHECK_FALSE(is_smooth(s));
  CHECK(is_complete(s));

  auto a = affine_normal_toric_variety(positive_hull(vs({{1, 0}, {0, 1}})));
  CHECK(strings(irrelevant_ideal(a)) == std::vector<std::string>{"1"});
}

TEST_CASE("simplicial predicate") {
  auto over_square = normal_toric_variety(vs({{1, 1, 1}, {-1, 1, 1}, {1, -1, 1}, {-1, -1, 1}}), {{0, 1, 2, 3}});
  CHECK_FALSE(is_simplicial(over_square));
  CHECK(is_simplicial(product(projective_space(1), projective_space(1))));
}

TEST_CASE("toric ideals") {
  auto u2 = affine_normal_toric_variety(positive_hull(vs({{-1, 1}, {1, 1}})));
  auto t = toric_ideal(u2);
  CHECK(t.generators == vs({{-1, 1}, {1, 1}, {0, 1}}));
  CHECK(ideal_equal(t.ideal, ideal_of(t.ideal.ring(), {"-x1*x2 + x3^2"})));

  auto u = affine_normal_toric_variety(positive_hull(vs({{1, 0}, {0, 1}})));
  auto tu = toric_ideal(u);
  CHECK(tu.generators.size() == 2);
  CHECK(tu.ideal.generators().empty());

  CHECK_THROWS_AS(toric_ideal(projective_space(1)), ValidationError);
  CHECK_THROWS_AS(toric_ideal(affine_normal_toric_variety(positive_hull(vs({{1, 0}})))), UnsupportedInput);
}

TEST_CASE("toric ideals of cyclic quotient singularities match a brute-force kernel") {
  // Binomials of degree <= 3 in the kernel of the monomial map must lie in the ideal,
  // and every generator must vanish under the parametrization.
  for (auto [n, q] : std::vector<std::pair<long, long>>{{3, 1}, {3, 2}, {5, 2}, {2, 1}}) {
    auto c = cyclic_quotient_singularity(n, q);
    auto t = toric_ideal(c);
    const auto& h = t.generators;
    const std::size_t k = h.size();
    for (const auto& g : t.ideal.generators()) {
      CHECK(g.terms().size() == 2);
      IntVector image(2);
      std::set<std::size_t> support[2];
      int side = 0;
      for (const auto& [e, coeff] : g.terms()) {
        for (std::size_t i = 0; i < k; ++i) {
          if (e[i] > 0) support[side].insert(i);
          for (int s = 0; s < e[i]; ++s) image = coeff > 0 ? add(image, h[i]) : subtract(image, h[i]);
        }
        ++side;
      }
      CHECK(is_zero(image));
      for (auto i : support[0]) CHECK(support[1].count(i) == 0);
    }
    std::vector<Exponent> monos;
    Exponent e(k, 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
      if (i == k) {
        monos.push_back(e);
        return;
      }
      for (int a = 0; a <= left; ++a) {
        e[i] = a;
        self(self, i + 1, left - a);
      }
      e[i] = 0;
    };
    rec(rec, 0, 3);
    for (const auto& a : monos)
      for (const auto& b : monos) {
        IntVector ia(2), ib(2);
        for (std::size_t i = 0; i < k; ++i)
          for (int s = 0; s < a[i]; ++s) ia = add(ia, h[i]);
        for (std::size_t i = 0; i < k; ++i)
          for (int s = 0; s < b[i]; ++s) ib = add(ib, h[i]);
        if (ia != ib) continue;
        MultiPoly f = MultiPoly::monomial(t.ideal.ring(), a) - MultiPoly::monomial(t.ideal.ring(), b);
        CHECK(ideal_contains(t.ideal, f));
      }
  }
  // cone((1,0),(-2,3)): one binomial among three dual generators
  auto t32 = toric_ideal(cyclic_quotient_singularity(3, 2));
  CHECK(t32.generators.size() == 3);
  CHECK(t32.ideal.generators().size() == 1);
  // cone((1,0),(-1,3)): twisted cubic cone, four dual generators
  auto t31 = toric_ideal(cyclic_quotient_singularity(3, 1));
  CHECK(t31.generators.size() == 4);
  CHECK(t31.ideal.groebner_basis().size() == 3);
}

TEST_CASE("property: corpus invariants") {
  for (const auto& x : testing::fan_corpus()) {
    if (is_smooth(x)) CHECK(is_simplicial(x));
    if (x.is_affine() && x.cones().front().is_full_dimensional()) CHECK(x.dim() == cone_dim(x.cones().front()));

    // each linear relation is a principal divisor, so its class is zero
    Grading g = x.cox_grading();
    PolyIdeal lin = ideal_of_linear_relations(x);
    for (const auto& f : lin.generators()) {
      RatVector cls(g.rank);
      for (const auto& [e, c] : f.terms()) {
        IntVector d = g.degree_of(e);
        for (std::size_t k = 0; k < g.rank; ++k) cls[k] += c * Rational(d[k]);
      }
      for (const auto& q : cls) CHECK(q == 0);
    }
    // grading kills the image of the pairing matrix
    CHECK(x.grading() * x.pairing_matrix() == IntMatrix(x.class_group_rank(), x.rank()));

    if (x.num_rays() > 6) continue;
    PolyIdeal sr = stanley_reisner_ideal(x), irr = irrelevant_ideal(x);
    const std::size_t r = x.num_rays();
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
      IndexSet s, comp;
      Exponent es(r, 0), ec(r, 0);
      for (std::size_t i = 0; i < r; ++i) {
        if (mask & (1u << i)) {
          s.push_back(i);
          es[i] = 1;
        } else {
          comp.push_back(i);
          ec[i] = 1;
        }
      }
      bool in_sr = ideal_contains(sr, MultiPoly::monomial(x.cox_ring(), es));
      bool comp_in_irr = ideal_contains(irr, MultiPoly::monomial(x.cox_ring(), ec));
      CHECK(in_sr == !is_face(x, s));
      CHECK(comp_in_irr == is_face(x, s));
    }
  }
}
