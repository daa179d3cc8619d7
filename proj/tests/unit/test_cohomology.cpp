#include "doctest.h"
#include "toric/cohomology.hpp"
#include "toric/errors.hpp"

using namespace toric;

namespace {

IntVector v(std::initializer_list<long> xs) { return make_int_vector(xs); }

std::vector<IntVector> vs(std::initializer_list<std::initializer_list<long>> xs) {
  std::vector<IntVector> out;
  for (auto x : xs) out.push_back(make_int_vector(x));
  return out;
}

ToricDivisorClass cls(std::initializer_list<long> xs) { return {make_int_vector(xs)}; }

NormalToricVariety p1xp1() { return product(projective_space(1), projective_space(1)); }

struct Expected {
  IndexSet rays;
  int index;
};

void check_sets(const NormalToricVariety& x, const std::vector<Expected>& expected) {
  auto sets = contribution_sets(x);
  REQUIRE(sets.size() == expected.size());
  for (std::size_t k = 0; k < sets.size(); ++k) {
    CHECK(sets[k].rays == expected[k].rays);
    CHECK(sets[k].index == expected[k].index);
    CHECK(sets[k].multiplicity == 1);
  }
}

// h^0 by counting lattice points m with <m, u_rho> >= -a_rho, done by brute force in a box.
Integer h0_by_sections(const NormalToricVariety& x, const IntVector& a, long box) {
  Integer count = 0;
  const std::size_t n = x.rank();
  IntVector m(n, Integer(-box));
  for (;;) {
    bool ok = true;
    for (std::size_t r = 0; r < x.num_rays(); ++r) ok = ok && dot(m, x.rays()[r]) >= -a[r];
    if (ok) ++count;
    std::size_t j = 0;
    while (j < n && m[j] == box) m[j++] = -box;
    if (j == n) break;
    m[j] += 1;
  }
  return count;
}

}  // namespace

TEST_CASE("reduced homology of subcomplexes") {
  auto pp = p1xp1();
  CHECK(reduced_homology(pp, {}) == std::vector<Integer>{1});
  CHECK(reduced_homology(pp, {0}) == std::vector<Integer>{0, 0});
  CHECK(reduced_homology(pp, {0, 1}) == std::vector<Integer>{0, 1});
  CHECK(reduced_homology(pp, {0, 1, 2, 3}) == std::vector<Integer>{0, 0, 1});
  // a face is contractible
  CHECK(reduced_homology(pp, {0, 2}) == std::vector<Integer>{0, 0, 0});
}

TEST_CASE("contribution sets") {
  check_sets(p1xp1(), {{{}, 0}, {{0, 1}, 1}, {{2, 3}, 1}, {{0, 1, 2, 3}, 2}});
  check_sets(del_pezzo_surface(1), {{{}, 0}, {{0, 1}, 1}, {{2, 3}, 1}, {{0, 1, 2, 3}, 2}});
  check_sets(projective_space(2), {{{}, 0}, {{0, 1, 2}, 2}});
}

TEST_CASE("cohomology dimensions") {
  auto pp = p1xp1();
  CHECK(cohomology_dim(pp, cls({0, 0}), 0) == 1);
  CHECK(cohomology_dim(pp, cls({1, 1}), 0) == 4);
  CHECK(cohomology_dims(pp, cls({-2, -2})) == std::vector<Integer>{0, 0, 1});
  CHECK(cohomology_dims(pp, cls({-1, -1})) == std::vector<Integer>{0, 0, 0});
  CHECK(cohomology_dims(pp, cls({-3, 1})) == std::vector<Integer>{0, 4, 0});

  auto p1 = projective_space(1);
  for (long k = -6; k <= 6; ++k) {
    auto h = cohomology_dims(p1, cls({k}));
    CHECK(h[0] == std::max(0L, k + 1));
    CHECK(h[1] == std::max(0L, -k - 1));
  }
  auto p2 = projective_space(2);
  // h^0(O(k)) = (k+1)(k+2)/2, h^2(O(k)) = h^0(O(-k-3))
  for (long k = -6; k <= 4; ++k) {
    auto h = cohomology_dims(p2, cls({k}));
    long k0 = k >= 0 ? (k + 1) * (k + 2) / 2 : 0;
    long j = -k - 3;
    long k2 = j >= 0 ? (j + 1) * (j + 2) / 2 : 0;
    CHECK(h == std::vector<Integer>{k0, 0, k2});
  }

  CHECK_THROWS_AS(cohomology_dim(pp, cls({0}), 0), ValidationError);
  CHECK_THROWS_AS(cohomology_dim(pp, cls({0, 0}), 3), ValidationError);
  auto open = normal_toric_variety(vs({{1, 0}, {0, 1}, {-1, -1}}), {{0}, {1}, {2}});
  CHECK_THROWS_AS(cohomology_dims(open, cls({0})), UnsupportedInput);
  auto square = normal_toric_variety(vs({{1, 1}, {-1, 1}, {1, -1}, {-1, -1}}), {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK_THROWS_AS(vanishing_sets(square), UnsupportedInput);
}

TEST_CASE("h0 agrees with section counting") {
  for (const auto& x : {p1xp1(), del_pezzo_surface(1), hirzebruch_surface(2), del_pezzo_surface(2)}) {
    for (long c = 0; c < 12; ++c) {
      IntVector a(x.num_rays());
      for (std::size_t r = 0; r < a.size(); ++r) a[r] = static_cast<long>((c * 7 + r * 3) % 5) - 1;
      CHECK(cohomology_dim(x, x.divisor_class(a), 0) == h0_by_sections(x, a, 12));
    }
  }
}

TEST_CASE("vanishing sets of P1 x P1") {
  auto sets = vanishing_sets(p1xp1());
  REQUIRE(sets.size() == 3);
  REQUIRE(sets[0].polyhedra.size() == 1);
  REQUIRE(sets[1].polyhedra.size() == 2);
  REQUIRE(sets[2].polyhedra.size() == 1);
  CHECK(sets[0].polyhedra[0].apex == v({0, 0}));
  CHECK(sets[1].polyhedra[0].apex == v({-2, 0}));
  CHECK(sets[1].polyhedra[1].apex == v({0, -2}));
  CHECK(sets[2].polyhedra[0].apex == v({-2, -2}));
  CHECK(sets[0].polyhedra[0].polyhedron.rays() == vs({{0, 1}, {1, 0}}));
  CHECK(sets[1].polyhedra[0].polyhedron.rays() == vs({{-1, 0}, {0, 1}}));
  CHECK(sets[1].polyhedra[1].polyhedron.rays() == vs({{0, -1}, {1, 0}}));
  CHECK(sets[2].polyhedra[0].polyhedron.rays() == vs({{-1, 0}, {0, -1}}));
  CHECK(print_constraints(sets[0].polyhedra[0].polyhedron) == "-x1 <= 0\n-x2 <= 0\n");
  CHECK(print_constraints(sets[2].polyhedra[0].polyhedron) == "x1 <= -2\nx2 <= -2\n");

  CHECK_FALSE(in_vanishing_set(sets[0], cls({0, 0})));
  for (int i = 0; i < 3; ++i) CHECK(in_vanishing_set(sets[i], cls({-1, -1})));
  CHECK_FALSE(in_vanishing_set(sets[1], cls({-2, 0})));
  CHECK_THROWS_AS(in_vanishing_set(sets[0], cls({0})), ValidationError);
}

TEST_CASE("vanishing sets of P1") {
  auto sets = vanishing_sets(projective_space(1));
  REQUIRE(sets.size() == 2);
  for (long k = -6; k <= 6; ++k) CHECK(in_vanishing_set(sets[1], cls({k})) == (k > -2));
}

TEST_CASE("vanishing sets of dP1") {
  auto sets = vanishing_sets(del_pezzo_surface(1));
  CHECK(sets[0].polyhedra[0].apex == v({0, 0}));
  CHECK(sets[2].polyhedra[0].apex == v({-3, -1}));
  CHECK(print_constraints(sets[0].polyhedra[0].polyhedron) == "-x1 <= 0\n-x1 + x2 <= 0\n");
  CHECK(print_constraints(sets[2].polyhedra[0].polyhedron) == "x1 - x2 <= -2\nx1 <= -3\n");
}

TEST_CASE("property: vanishing sets match the oracle, Serre duality, Euler characteristic") {
  for (const auto& x : {p1xp1(), del_pezzo_surface(1), hirzebruch_surface(1), del_pezzo_surface(2)}) {
    auto sets = vanishing_sets(x);
    ToricDivisorClass k = canonical_divisor_class(x);
    const std::size_t rank = x.class_group_rank();
    const long b = rank > 2 ? 2 : 3;
    IntVector d(rank, Integer(-b));
    for (;;) {
      ToricDivisorClass c{d};
      auto h = cohomology_dims(x, c);
      auto dual = cohomology_dims(x, k - c);
      for (std::size_t i = 0; i < h.size(); ++i) {
        CHECK((h[i] == 0) == in_vanishing_set(sets[i], c));
        CHECK(h[i] == dual[h.size() - 1 - i]);
      }
      std::size_t j = 0;
      while (j < rank && d[j] == b) d[j++] = -b;
      if (j == rank) break;
      d[j] += 1;
    }
  }

  // chi along a line is a polynomial of degree <= 2: third differences vanish
  auto pp = p1xp1();
  for (auto dir : {v({1, 0}), v({1, 1}), v({2, -1})}) {
    std::vector<Integer> chi;
    for (long t = -4; t <= 3; ++t) {
      IntVector d = {dir[0] * t, dir[1] * t};
      auto h = cohomology_dims(pp, {d});
      chi.push_back(h[0] - h[1] + h[2]);
    }
    for (std::size_t t = 0; t + 3 < chi.size(); ++t)
      CHECK(chi[t + 3] - 3 * chi[t + 2] + 3 * chi[t + 1] - chi[t] == 0);
  }
}

TEST_CASE("multiplicity facts") {
  for (const auto& x : {p1xp1(), del_pezzo_surface(3), projective_space(3)}) {
    auto sets = contribution_sets(x);
    REQUIRE(!sets.empty());
    CHECK(sets[0].rays.empty());
    CHECK(sets[0].index == 0);
    CHECK(sets[0].multiplicity == 1);
    for (const auto& s : sets)
      if (!s.rays.empty()) CHECK_FALSE(is_face(x, s.rays));
  }
}
