#include <random>
#include <set>

#include "doctest.h"
#include "toric/errors.hpp"
#include "toric/lp.hpp"
#include "toric/polyhedral.hpp"

using namespace toric;

namespace {

IntVector v(std::initializer_list<long> xs) { return make_int_vector(xs); }

std::vector<IntVector> vs(std::initializer_list<std::initializer_list<long>> xs) {
  std::vector<IntVector> out;
  for (auto x : xs) out.push_back(make_int_vector(x));
  return out;
}

RatVector rv(std::initializer_list<long> xs) { return to_rational(make_int_vector(xs)); }

// x in cone(gens) decided by LP on the multipliers, independent of the H-representation.
bool in_hull_by_lp(const std::vector<IntVector>& gens, const IntVector& x) {
  const std::size_t k = gens.size();
  std::vector<LinearEquation> eqs;
  for (std::size_t r = 0; r < x.size(); ++r) {
    RatVector row(k);
    for (std::size_t i = 0; i < k; ++i) row[i] = gens[i][r];
    eqs.push_back({row, Rational(x[r])});
  }
  std::vector<LinearInequality> nonneg;
  for (std::size_t i = 0; i < k; ++i) {
    RatVector row(k);
    row[i] = 1;
    nonneg.push_back({row, Rational(0)});
  }
  return lp_feasible(k, {}, nonneg, eqs);
}

}  // namespace

TEST_CASE("positive_hull") {
  CHECK(positive_hull(vs({{1, 0}, {0, 1}})).rays() == vs({{0, 1}, {1, 0}}));
  // (0,1) = 1/2 (-1,1) + 1/2 (1,1) is not extreme
  CHECK(positive_hull(vs({{-1, 1}, {0, 1}, {1, 1}})).rays() == vs({{-1, 1}, {1, 1}}));
  CHECK(positive_hull(vs({{2, 0}})).rays() == vs({{1, 0}}));
  CHECK_THROWS_AS(positive_hull(vs({{1, 0}, {1, 0, 0}})), ValidationError);
  CHECK_THROWS_AS(positive_hull({}), ValidationError);
}

TEST_CASE("dual_cone") {
  Cone quadrant = positive_hull(vs({{1, 0}, {0, 1}}));
  CHECK(dual_cone(quadrant) == quadrant);

  Cone c = positive_hull(vs({{-1, 1}, {1, 1}}));
  Cone d = dual_cone(c);
  CHECK(d.rays() == vs({{-1, 1}, {1, 1}}));
  for (const auto& m : d.rays())
    for (const auto& u : c.rays()) CHECK(dot(m, u) >= 0);

  Cone plane = positive_hull(vs({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
  CHECK(plane.rays().empty());
  CHECK(plane.lineality().size() == 2);
  Cone zero = dual_cone(plane);
  CHECK(zero.rays().empty());
  CHECK(zero.lineality().empty());
  CHECK(cone_dim(zero) == 0);

  Cone ray = positive_hull(vs({{1, 0}}));
  Cone half = dual_cone(ray);
  CHECK(half.lineality().size() == 1);
  CHECK(half.rays() == vs({{1, 0}}));
  CHECK(dual_cone(half) == ray);
}

TEST_CASE("cone_dim") {
  CHECK(cone_dim(positive_hull(vs({{1, 0}, {0, 1}}))) == 2);
  CHECK(cone_dim(positive_hull(vs({{0, 0}}))) == 0);
  CHECK(cone_dim(positive_hull(vs({{1, 1}}))) == 1);
}

TEST_CASE("hilbert_basis") {
  CHECK(hilbert_basis(positive_hull(vs({{1, 0}, {0, 1}}))) == vs({{0, 1}, {1, 0}}));
  CHECK(hilbert_basis(positive_hull(vs({{-1, 1}, {0, 1}, {1, 1}}))) == vs({{-1, 1}, {0, 1}, {1, 1}}));
  // fundamental parallelepiped of (1,0),(1,2) holds (0,0),(1,1)
  CHECK(parallelepiped_points(vs({{1, 0}, {1, 2}})) == vs({{0, 0}, {1, 1}}));
  CHECK(hilbert_basis(positive_hull(vs({{1, 0}, {1, 2}}))) == vs({{1, 0}, {1, 1}, {1, 2}}));
  CHECK(hilbert_basis(positive_hull(vs({{1, 0}, {-1, 2}}))).size() == 3);
  CHECK_THROWS_AS(hilbert_basis(positive_hull(vs({{1, 0}, {-1, 0}}))), ValidationError);
}

TEST_CASE("hilbert basis property: members in cone, irreducible, generate small points") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dist(-3, 3);
  int checked = 0;
  while (checked < 12) {
    std::size_t n = 2 + rng() % 2;
    std::vector<IntVector> gens;
    for (int i = 0; i < 3; ++i) {
      IntVector g(n);
      for (auto& x : g) x = dist(rng);
      gens.push_back(g);
    }
    Cone c = Cone::from_generators(n, gens);
    if (!c.is_pointed() || c.rays().empty()) continue;
    ++checked;
    auto hb = hilbert_basis(c);
    std::set<IntVector> hbset(hb.begin(), hb.end());
    for (const auto& h : hb) CHECK(c.contains(h));
    for (const auto& r : c.rays()) CHECK(hbset.count(r) == 1);

    // Brute force: all lattice points in a box; a point is irreducible iff it is
    // not the sum of two nonzero box points of the cone.
    std::vector<IntVector> pts;
    const int b = 4;
    IntVector x(n, Integer(-b));
    for (;;) {
      if (!is_zero(x) && c.contains(x)) pts.push_back(x);
      std::size_t pos = 0;
      while (pos < n && x[pos] == b) x[pos++] = -b;
      if (pos == n) break;
      x[pos] += 1;
    }
    std::set<IntVector> box(pts.begin(), pts.end());
    for (const auto& p : pts) {
      bool reducible = false;
      for (const auto& q : pts)
        if (q != p && c.contains(subtract(p, q)) && !is_zero(subtract(p, q))) reducible = true;
      if (!reducible) CHECK(hbset.count(p) == 1);
    }
    for (const auto& h : hb) {
      for (const auto& q : pts) {
        IntVector d = subtract(h, q);
        if (q != h && !is_zero(d)) CHECK_FALSE(c.contains(d));
      }
    }
  }
}

TEST_CASE("V/H consistency and double dual on random cones") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> dist(-2, 2);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = 2 + rng() % 3;
    std::vector<IntVector> gens;
    for (std::size_t i = 0; i < n + 2; ++i) {
      IntVector g(n);
      for (auto& x : g) x = dist(rng);
      gens.push_back(g);
    }
    Cone c = Cone::from_generators(n, gens);
    for (const auto& g : gens) CHECK(c.contains(g));
    for (const auto& f : c.facets())
      for (const auto& r : c.rays()) CHECK(dot(f, r) >= 0);
    CHECK(dual_cone(dual_cone(c)) == c);
    CHECK(Cone::from_inequalities(n, c.facets(), c.equations()) == c);
    for (int probe = 0; probe < 10; ++probe) {
      IntVector x(n);
      for (auto& e : x) e = dist(rng);
      CHECK(c.contains(x) == in_hull_by_lp(gens, x));
    }
  }
}

TEST_CASE("simplicial subdivision covers the cone over a square") {
  Cone c = positive_hull(vs({{1, 1, 1}, {-1, 1, 1}, {1, -1, 1}, {-1, -1, 1}}));
  auto pieces = simplicial_subdivision(c);
  CHECK(pieces.size() == 2);
  for (const auto& s : pieces) CHECK(s.size() == 3);
}

TEST_CASE("convex_hull and lattice_points") {
  Polyhedron sq = convex_hull(vs({{1, 1}, {-1, 1}, {1, -1}, {-1, -1}}));
  CHECK(sq.vertices().size() == 4);
  CHECK(sq.is_bounded());
  auto pts = lattice_points(sq);
  CHECK(pts.size() == 9);
  CHECK(polytope_volume(sq) == 4);

  Polyhedron pt = convex_hull(vs({{3, -2}}));
  CHECK(pt.vertices() == std::vector<RatVector>{rv({3, -2})});

  Polyhedron seg = convex_hull(vs({{0, 0}, {1, 1}, {2, 2}}));
  CHECK(seg.vertices().size() == 2);
  CHECK(seg.dim() == 1);

  Polyhedron unit = convex_hull(vs({{0}, {1}}));
  CHECK(lattice_points(unit) == vs({{0}, {1}}));

  Polyhedron empty = Polyhedron::from_inequalities(1, {{v({1}), Integer(-1)}, {v({-1}), Integer(0)}});
  CHECK(empty.is_empty());
  CHECK(lattice_points(empty).empty());

  Polyhedron half = Polyhedron::from_inequalities(2, {{v({1, 0}), Integer(0)}});
  CHECK_THROWS_AS(lattice_points(half), ValidationError);
}

TEST_CASE("lattice points agree with a bounding-box scan of the H-representation") {
  std::vector<HalfSpace> tri = {{v({-1, 0}), Integer(0)}, {v({0, -1}), Integer(0)}, {v({2, 3}), Integer(12)}};
  Polyhedron p = Polyhedron::from_inequalities(2, tri);
  std::vector<IntVector> scan;
  for (long x = -10; x <= 10; ++x)
    for (long y = -10; y <= 10; ++y) {
      bool in = true;
      for (const auto& h : tri)
        if (dot(h.normal, v({x, y})) > h.offset) in = false;
      if (in) scan.push_back(v({x, y}));
    }
  CHECK(lattice_points(p) == scan);

  Polyhedron q = convex_hull(std::vector<RatVector>{{Rational(1, 2), Rational(0)}, {Rational(7, 2), Rational(1)},
                                                    {Rational(2), Rational(5, 2)}});
  std::vector<IntVector> scan2;
  for (long x = -5; x <= 5; ++x)
    for (long y = -5; y <= 5; ++y)
      if (q.contains(rv({x, y}))) scan2.push_back(v({x, y}));
  CHECK(lattice_points(q) == scan2);
}

TEST_CASE("membership") {
  // P^0 of dP1 in the (H, -E1) grading: apex 0, rays (1,1), (0,-1)
  Polyhedron p0 = Polyhedron::from_generators(2, {rv({0, 0})}, vs({{1, 1}, {0, -1}}));
  CHECK(polyhedron_membership(p0, rv({1, 0})));
  CHECK_FALSE(polyhedron_membership(p0, rv({0, 1})));
  Polyhedron sq = convex_hull(vs({{1, 1}, {-1, 1}, {1, -1}, {-1, -1}}));
  CHECK(polyhedron_membership(sq, rv({0, 0})));
  CHECK_THROWS_AS(polyhedron_membership(sq, rv({0, 0, 0})), ValidationError);
}

TEST_CASE("print_constraints") {
  Polyhedron p0 = Polyhedron::from_generators(2, {rv({0, 0})}, vs({{1, 0}, {0, 1}}));
  CHECK(print_constraints(p0) == "-x1 <= 0\n-x2 <= 0\n");
  Polyhedron p2 = Polyhedron::from_generators(2, {rv({-2, -2})}, vs({{-1, 0}, {0, -1}}));
  CHECK(print_constraints(p2) == "x1 <= -2\nx2 <= -2\n");
  Polyhedron half = Polyhedron::from_inequalities(1, {{v({1}), Integer(0)}});
  CHECK(print_constraints(half) == "x1 <= 0\n");
  Polyhedron tri = Polyhedron::from_generators(2, {rv({0, 0})}, vs({{1, 1}, {0, -1}}));
  CHECK(print_constraints(tri) == "-x1 <= 0\n-x1 + x2 <= 0\n");
  Polyhedron scaled = Polyhedron::from_inequalities(1, {{v({2}), Integer(1)}, {v({-1}), Integer(3)}});
  CHECK(print_constraints(scaled) == "-x1 <= 3\n2x1 <= 1\n");
}
