#include "toric/polyhedral.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

#include "toric/errors.hpp"

namespace toric {

namespace {

std::vector<IntVector> hnf_rows(const std::vector<IntVector>& rows, std::size_t dim) {
  if (rows.empty()) return {};
  return hermite_normal_form(IntMatrix::from_rows(rows, dim)).row_vectors();
}

// Primitive representative of v modulo span(basis), orthogonal to that span.
IntVector project_out(const IntVector& v, const std::vector<IntVector>& basis) {
  if (basis.empty()) return primitive(v);
  const std::size_t k = basis.size();
  std::vector<RatVector> gram(k, RatVector(k));
  RatVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = Rational(dot(basis[i], basis[j]));
    rhs[i] = Rational(dot(basis[i], v));
  }
  auto c = solve_rational(gram, rhs);
  assert(c.has_value());
  RatVector out = to_rational(v);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < out.size(); ++j) out[j] -= (*c)[i] * Rational(basis[i][j]);
  return primitive(out);
}

std::vector<IntVector> canonical_rays(std::vector<IntVector> rays, const std::vector<IntVector>& lineality) {
  std::set<IntVector> unique;
  for (auto& r : rays) {
    IntVector p = project_out(r, lineality);
    if (!is_zero(p)) unique.insert(std::move(p));
  }
  return {unique.begin(), unique.end()};
}

void check_lengths(const std::vector<IntVector>& vs, std::size_t n, const char* what) {
  for (const auto& v : vs)
    if (v.size() != n) throw ValidationError(std::string(what) + ": vector length does not match ambient rank");
}

}  // namespace

// ---------------------------------------------------------------------------
// Double description

DdResult double_description(std::size_t dim, std::vector<IntVector> inequalities) {
  std::sort(inequalities.begin(), inequalities.end());
  inequalities.erase(std::unique(inequalities.begin(), inequalities.end()), inequalities.end());

  std::vector<IntVector> lineality;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVector e(dim);
    e[i] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<IntVector> rays;
  std::vector<IntVector> processed;

  for (const IntVector& a : inequalities) {
    if (a.size() != dim) throw ValidationError("double_description: inequality has wrong length");
    if (is_zero(a)) continue;

    std::size_t pivot = lineality.size();
    for (std::size_t i = 0; i < lineality.size(); ++i)
      if (dot(a, lineality[i]) != 0) {
        pivot = i;
        break;
      }

    if (pivot != lineality.size()) {
      IntVector l = lineality[pivot];
      Integer al = dot(a, l);
      if (al < 0) {
        l = negate(l);
        al = -al;
      }
      lineality.erase(lineality.begin() + static_cast<std::ptrdiff_t>(pivot));
      auto shift = [&](IntVector& v) {
        Integer av = dot(a, v);
        if (av == 0) return;
        for (std::size_t j = 0; j < dim; ++j) v[j] = al * v[j] - av * l[j];
        v = primitive(v);
      };
      for (auto& v : lineality) shift(v);
      for (auto& r : rays) shift(r);
      rays.push_back(std::move(l));
    } else {
      std::vector<IntVector> pos, zero, neg;
      std::vector<Integer> pos_val, neg_val;
      for (auto& r : rays) {
        Integer v = dot(a, r);
        if (v > 0) {
          pos.push_back(r);
          pos_val.push_back(v);
        } else if (v < 0) {
          neg.push_back(r);
          neg_val.push_back(v);
        } else {
          zero.push_back(r);
        }
      }
      std::vector<IntVector> next = pos;
      next.insert(next.end(), zero.begin(), zero.end());
      const std::size_t target = dim - lineality.size();
      for (std::size_t i = 0; i < pos.size(); ++i)
        for (std::size_t j = 0; j < neg.size(); ++j) {
          // Algebraic adjacency: the constraints tight at both rays cut out a 2-face.
          std::vector<RatVector> tight;
          for (const auto& c : processed)
            if (dot(c, pos[i]) == 0 && dot(c, neg[j]) == 0) tight.push_back(to_rational(c));
          if (target < 2 || rank(tight) != target - 2) continue;
          IntVector combo(dim);
          for (std::size_t k = 0; k < dim; ++k) combo[k] = pos_val[i] * neg[j][k] - neg_val[j] * pos[i][k];
          next.push_back(primitive(combo));
        }
      rays = std::move(next);
    }
    processed.push_back(a);
  }

  DdResult out;
  out.lineality = hnf_rows(lineality, dim);
  out.rays = canonical_rays(std::move(rays), out.lineality);
  return out;
}

// ---------------------------------------------------------------------------
// Cone

Cone Cone::from_generators(std::size_t ambient_rank, const std::vector<IntVector>& rays,
                           const std::vector<IntVector>& lineality) {
  check_lengths(rays, ambient_rank, "cone generators");
  check_lengths(lineality, ambient_rank, "cone lineality");
  std::vector<IntVector> constraints = rays;
  for (const auto& l : lineality) {
    constraints.push_back(l);
    constraints.push_back(negate(l));
  }
  DdResult dual = double_description(ambient_rank, constraints);

  std::vector<IntVector> primal_constraints = dual.rays;
  for (const auto& e : dual.lineality) {
    primal_constraints.push_back(e);
    primal_constraints.push_back(negate(e));
  }
  DdResult primal = double_description(ambient_rank, primal_constraints);

  Cone c;
  c.rank_ = ambient_rank;
  c.rays_ = std::move(primal.rays);
  c.lineality_ = std::move(primal.lineality);
  c.equations_ = std::move(dual.lineality);
  c.facets_ = canonical_rays(std::move(dual.rays), c.equations_);
  return c;
}

Cone Cone::from_inequalities(std::size_t ambient_rank, const std::vector<IntVector>& facets,
                             const std::vector<IntVector>& equations) {
  check_lengths(facets, ambient_rank, "cone inequalities");
  check_lengths(equations, ambient_rank, "cone equations");
  std::vector<IntVector> constraints = facets;
  for (const auto& e : equations) {
    constraints.push_back(e);
    constraints.push_back(negate(e));
  }
  DdResult primal = double_description(ambient_rank, constraints);
  return from_generators(ambient_rank, primal.rays, primal.lineality);
}

bool Cone::contains(const IntVector& x) const { return contains(to_rational(x)); }

bool Cone::contains(const RatVector& x) const {
  if (x.size() != rank_) throw ValidationError("cone membership: dimension mismatch");
  for (const auto& e : equations_)
    if (dot(e, x) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, x) < 0) return false;
  return true;
}

bool Cone::contains_in_relative_interior(const RatVector& x) const {
  if (x.size() != rank_) throw ValidationError("cone membership: dimension mismatch");
  for (const auto& e : equations_)
    if (dot(e, x) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, x) <= 0) return false;
  return true;
}

Cone positive_hull(const std::vector<IntVector>& generators) {
  if (generators.empty()) throw ValidationError("positive_hull: no generators");
  return Cone::from_generators(generators.front().size(), generators);
}

Cone dual_cone(const Cone& c) {
  return Cone::from_generators(c.ambient_rank(), c.facets(), c.equations());
}

std::size_t cone_dim(const Cone& c) { return c.dim(); }

// ---------------------------------------------------------------------------
// Simplicial subdivision and Hilbert bases

namespace {

void pull(const Cone& cone, const std::vector<std::size_t>& ray_ids, const std::vector<IntVector>& all_rays,
          std::vector<std::vector<std::size_t>>& out) {
  if (ray_ids.size() == cone.dim()) {
    out.push_back(ray_ids);
    return;
  }
  const std::size_t apex = ray_ids.front();
  for (const auto& f : cone.facets()) {
    if (dot(f, all_rays[apex]) == 0) continue;
    std::vector<std::size_t> face_ids;
    std::vector<IntVector> face_rays;
    for (std::size_t id : ray_ids)
      if (dot(f, all_rays[id]) == 0) {
        face_ids.push_back(id);
        face_rays.push_back(all_rays[id]);
      }
    Cone face = Cone::from_generators(cone.ambient_rank(), face_rays);
    std::vector<std::vector<std::size_t>> sub;
    pull(face, face_ids, all_rays, sub);
    for (auto& s : sub) {
      s.insert(s.begin(), apex);
      out.push_back(std::move(s));
    }
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> simplicial_subdivision(const Cone& c) {
  if (!c.is_pointed()) throw ValidationError("simplicial_subdivision: cone is not pointed");
  std::vector<std::size_t> ids(c.rays().size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  std::vector<std::vector<std::size_t>> out;
  pull(c, ids, c.rays(), out);
  for (auto& s : out) std::sort(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVector> parallelepiped_points(const std::vector<IntVector>& generators) {
  if (generators.empty()) return {};
  const std::size_t n = generators.front().size();
  const std::size_t k = generators.size();
  IntMatrix v = IntMatrix::from_columns(generators, n);
  SnfResult snf = smith_normal_form(v);
  if (snf.rank != k) throw ValidationError("parallelepiped_points: generators are linearly dependent");
  std::vector<Integer> d = snf.invariant_factors();

  // Representatives a of Z^k / D Z^k map to lambda = W D^{-1} a; the point is V frac(lambda).
  std::vector<IntVector> out;
  IntVector a(k);
  for (;;) {
    RatVector lambda(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lambda[i] += Rational(snf.v(i, j)) * Rational(a[j], d[j]);
    for (auto& l : lambda) {
      l.canonicalize();
      Integer fl;
      mpz_fdiv_q(fl.get_mpz_t(), l.get_num_mpz_t(), l.get_den_mpz_t());
      l -= fl;
    }
    IntVector x(n);
    for (std::size_t r = 0; r < n; ++r) {
      Rational s = 0;
      for (std::size_t i = 0; i < k; ++i) s += Rational(v(r, i)) * lambda[i];
      assert(s.get_den() == 1);
      x[r] = s.get_num();
    }
    out.push_back(std::move(x));

    std::size_t pos = 0;
    while (pos < k) {
      a[pos] += 1;
      if (a[pos] < d[pos]) break;
      a[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVector> hilbert_basis(const Cone& c) {
  if (!c.is_pointed()) throw ValidationError("hilbert_basis: cone is not pointed");
  std::set<IntVector> candidates(c.rays().begin(), c.rays().end());
  for (const auto& simplex : simplicial_subdivision(c)) {
    std::vector<IntVector> gens;
    for (std::size_t id : simplex) gens.push_back(c.rays()[id]);
    for (auto& p : parallelepiped_points(gens))
      if (!is_zero(p)) candidates.insert(std::move(p));
  }
  std::vector<IntVector> cand(candidates.begin(), candidates.end());
  std::vector<IntVector> basis;
  for (const auto& x : cand) {
    bool reducible = false;
    for (const auto& y : cand) {
      if (y == x) continue;
      IntVector diff = subtract(x, y);
      if (!is_zero(diff) && c.contains(diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(x);
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Polyhedron

namespace {

IntVector homogenize(const RatVector& p) {
  RatVector h = p;
  h.push_back(1);
  return primitive(h);
}

IntVector with_last(const IntVector& v, const Integer& last) {
  IntVector h = v;
  h.push_back(last);
  return h;
}

std::size_t leading_index(const IntVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return v.size();
}

bool print_order(const HalfSpace& a, const HalfSpace& b) {
  std::size_t la = leading_index(a.normal), lb = leading_index(b.normal);
  if (la != lb) return la < lb;
  if (a.normal != b.normal) return a.normal < b.normal;
  return a.offset < b.offset;
}

}  // namespace

Polyhedron Polyhedron::from_generators(std::size_t ambient_rank, const std::vector<RatVector>& points,
                                       const std::vector<IntVector>& rays, const std::vector<IntVector>& lineality) {
  for (const auto& p : points)
    if (p.size() != ambient_rank) throw ValidationError("polyhedron point: dimension mismatch");
  check_lengths(rays, ambient_rank, "polyhedron rays");
  check_lengths(lineality, ambient_rank, "polyhedron lineality");
  Polyhedron p;
  p.rank_ = ambient_rank;
  if (points.empty()) {
    p.empty_ = true;
    return p;
  }
  std::vector<IntVector> gens;
  for (const auto& pt : points) gens.push_back(homogenize(pt));
  for (const auto& r : rays) gens.push_back(with_last(r, 0));
  std::vector<IntVector> lin;
  for (const auto& l : lineality) lin.push_back(with_last(l, 0));
  p.homog_ = Cone::from_generators(ambient_rank + 1, gens, lin);
  p.derive_from_homogenization();
  return p;
}

Polyhedron Polyhedron::from_inequalities(std::size_t ambient_rank, const std::vector<HalfSpace>& inequalities,
                                         const std::vector<HalfSpace>& equations) {
  std::vector<IntVector> facets;
  std::vector<IntVector> eqs;
  for (const auto& h : inequalities) {
    if (h.normal.size() != ambient_rank) throw ValidationError("polyhedron inequality: dimension mismatch");
    facets.push_back(with_last(negate(h.normal), h.offset));
  }
  for (const auto& h : equations) {
    if (h.normal.size() != ambient_rank) throw ValidationError("polyhedron equation: dimension mismatch");
    eqs.push_back(with_last(negate(h.normal), h.offset));
  }
  IntVector far(ambient_rank + 1);
  far[ambient_rank] = 1;
  facets.push_back(far);
  Polyhedron p;
  p.rank_ = ambient_rank;
  p.homog_ = Cone::from_inequalities(ambient_rank + 1, facets, eqs);
  p.derive_from_homogenization();
  return p;
}

void Polyhedron::derive_from_homogenization() {
  const std::size_t n = rank_;
  vertices_.clear();
  rays_.clear();
  lineality_.clear();
  inequalities_.clear();
  equations_.clear();
  empty_ = true;
  for (const auto& r : homog_.rays()) {
    IntVector x(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n));
    if (r[n] > 0) {
      empty_ = false;
      RatVector v(n);
      for (std::size_t i = 0; i < n; ++i) {
        v[i] = Rational(x[i], r[n]);
        v[i].canonicalize();
      }
      vertices_.push_back(std::move(v));
    } else {
      rays_.push_back(std::move(x));
    }
  }
  if (empty_) {
    rays_.clear();
    return;
  }
  for (const auto& l : homog_.lineality()) lineality_.emplace_back(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(n));
  std::sort(vertices_.begin(), vertices_.end());
  for (const auto& f : homog_.facets()) {
    IntVector a(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(n));
    if (is_zero(a)) continue;  // t >= 0
    inequalities_.push_back({negate(a), f[n]});
  }
  for (const auto& e : homog_.equations()) {
    IntVector a(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(n));
    equations_.push_back({negate(a), e[n]});
  }
  std::sort(inequalities_.begin(), inequalities_.end(), print_order);
  std::sort(equations_.begin(), equations_.end(), print_order);
}

std::size_t Polyhedron::dim() const {
  if (empty_) return 0;
  return homog_.dim() - 1;
}

bool Polyhedron::contains(const RatVector& x) const {
  if (x.size() != rank_) throw ValidationError("polyhedron membership: dimension mismatch");
  if (empty_) return false;
  for (const auto& e : equations_)
    if (dot(e.normal, x) != Rational(e.offset)) return false;
  for (const auto& h : inequalities_)
    if (dot(h.normal, x) > Rational(h.offset)) return false;
  return true;
}

Polyhedron convex_hull(const std::vector<RatVector>& points) {
  if (points.empty()) throw ValidationError("convex_hull: no points");
  return Polyhedron::from_generators(points.front().size(), points);
}

Polyhedron convex_hull(const std::vector<IntVector>& points) {
  std::vector<RatVector> rp;
  rp.reserve(points.size());
  for (const auto& p : points) rp.push_back(to_rational(p));
  return convex_hull(rp);
}

std::vector<IntVector> lattice_points(const Polyhedron& p) {
  if (p.is_empty()) return {};
  if (!p.is_bounded()) throw ValidationError("lattice_points: polyhedron is unbounded");
  const std::size_t n = p.ambient_rank();
  IntVector lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    bool first = true;
    for (const auto& v : p.vertices()) {
      Integer f, c;
      mpz_fdiv_q(f.get_mpz_t(), v[i].get_num_mpz_t(), v[i].get_den_mpz_t());
      mpz_cdiv_q(c.get_mpz_t(), v[i].get_num_mpz_t(), v[i].get_den_mpz_t());
      if (first || f < lo[i]) lo[i] = f;
      if (first || c > hi[i]) hi[i] = c;
      first = false;
    }
  }
  std::vector<IntVector> out;
  IntVector x = lo;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  for (;;) {
    if (p.contains(to_rational(x))) out.push_back(x);
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (x[pos] < hi[pos]) {
        x[pos] += 1;
        for (std::size_t j = pos + 1; j < n; ++j) x[j] = lo[j];
        break;
      }
      if (pos == 0) return out;
    }
  }
}

bool polyhedron_membership(const Polyhedron& p, const RatVector& x) { return p.contains(x); }

bool polyhedron_membership(const Polyhedron& p, const IntVector& x) { return p.contains(to_rational(x)); }

std::string format_linear_form(const IntVector& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Integer& c = coeffs[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1) os << mag;
    os << 'x' << (i + 1);
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

std::string print_constraints(const Polyhedron& p) {
  std::ostringstream os;
  if (p.is_empty()) {
    os << "0 <= -1\n";
    return os.str();
  }
  for (const auto& h : p.inequalities()) os << format_linear_form(h.normal) << " <= " << h.offset << '\n';
  for (const auto& e : p.equations()) os << format_linear_form(e.normal) << " = " << e.offset << '\n';
  return os.str();
}

Rational polytope_volume(const Polyhedron& p) {
  if (p.is_empty()) return 0;
  if (!p.is_bounded()) throw ValidationError("polytope_volume: polyhedron is unbounded");
  const std::size_t n = p.ambient_rank();
  if (p.dim() != n) return 0;
  const Cone& h = p.homogenization();
  Integer factorial = 1;
  for (std::size_t i = 2; i <= n; ++i) factorial *= static_cast<unsigned long>(i);
  Rational total = 0;
  for (const auto& simplex : simplicial_subdivision(h)) {
    IntMatrix m(n + 1, n + 1);
    Integer denom = 1;
    for (std::size_t r = 0; r < simplex.size(); ++r) {
      const IntVector& ray = h.rays()[simplex[r]];
      for (std::size_t c = 0; c <= n; ++c) m(r, c) = ray[c];
      denom *= ray[n];
    }
    Rational vol(abs(determinant(m)), denom * factorial);
    vol.canonicalize();
    total += vol;
  }
  return total;
}

}  // namespace toric
