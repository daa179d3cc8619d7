#include "toric/toric_variety.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "toric/errors.hpp"
#include "toric/lp.hpp"

namespace toric {

namespace {

IntVector row(std::initializer_list<long> xs) { return make_int_vector(xs); }

// Indices of the rays of `cone` lying on the smallest face containing all of `subset`.
IndexSet face_closure(const Cone& cone, const IndexSet& cone_rays, const IndexSet& subset,
                      const std::vector<IntVector>& rays, std::size_t rank) {
  IntVector p(rank);
  for (auto i : subset) p = add(p, rays[i]);
  std::vector<const IntVector*> tight;
  for (const auto& f : cone.facets())
    if (dot(f, p) == 0) tight.push_back(&f);
  IndexSet out;
  for (auto i : cone_rays) {
    bool on = std::all_of(tight.begin(), tight.end(), [&](const IntVector* f) { return dot(*f, rays[i]) == 0; });
    if (on) out.push_back(i);
  }
  return out;
}

IndexSet intersect(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<IntVector> select(const std::vector<IntVector>& rays, const IndexSet& ids) {
  std::vector<IntVector> out;
  for (auto i : ids) out.push_back(rays[i]);
  return out;
}

bool subset_of(const IndexSet& a, const IndexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

}  // namespace

std::vector<std::string> default_names(std::size_t count, const std::string& prefix) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

NormalToricVariety NormalToricVariety::from_fan(std::size_t rank, std::vector<IntVector> rays,
                                                std::vector<IndexSet> max_cones, std::vector<std::string> names,
                                                std::optional<IntMatrix> grading) {
  NormalToricVariety v;
  v.rank_ = rank;

  std::set<IntVector> seen;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (rays[i].size() != rank) throw ValidationError("ray " + std::to_string(i + 1) + " has wrong length");
    if (is_zero(rays[i])) throw ValidationError("ray " + std::to_string(i + 1) + " is zero");
    IntVector p = primitive(rays[i]);
    if (p != rays[i]) {
      v.warnings_.push_back("ray " + std::to_string(i + 1) + " " + to_string(rays[i]) + " replaced by primitive " +
                            to_string(p));
      rays[i] = p;
    }
    if (!seen.insert(rays[i]).second) throw ValidationError("duplicate ray " + to_string(rays[i]));
  }
  v.rays_ = std::move(rays);

  if (max_cones.empty()) max_cones.push_back({});
  for (auto& c : max_cones) {
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end()) throw ValidationError("cone lists a ray twice");
    for (auto i : c)
      if (i >= v.rays_.size()) throw ValidationError("cone refers to ray index out of range");
  }
  std::sort(max_cones.begin(), max_cones.end());
  if (std::adjacent_find(max_cones.begin(), max_cones.end()) != max_cones.end())
    throw ValidationError("duplicate maximal cone");
  for (std::size_t a = 0; a < max_cones.size(); ++a)
    for (std::size_t b = 0; b < max_cones.size(); ++b)
      if (a != b && subset_of(max_cones[a], max_cones[b]))
        throw ValidationError("listed cone is a face of another listed cone");
  std::vector<bool> used(v.rays_.size(), false);
  for (const auto& c : max_cones)
    for (auto i : c) used[i] = true;
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i]) throw ValidationError("ray " + std::to_string(i + 1) + " lies in no cone");
  v.max_cones_ = std::move(max_cones);

  for (const auto& c : v.max_cones_) {
    Cone cone = Cone::from_generators(rank, select(v.rays_, c));
    if (!cone.is_pointed()) throw ValidationError("cone is not pointed");
    if (cone.rays().size() != c.size()) throw ValidationError("cone lists a ray that is not extreme");
    v.cones_.push_back(std::move(cone));
  }

  for (std::size_t a = 0; a < v.cones_.size(); ++a)
    for (std::size_t b = a + 1; b < v.cones_.size(); ++b) {
      IndexSet common = intersect(v.max_cones_[a], v.max_cones_[b]);
      if (face_closure(v.cones_[a], v.max_cones_[a], common, v.rays_, rank) != common ||
          face_closure(v.cones_[b], v.max_cones_[b], common, v.rays_, rank) != common)
        throw ValidationError("cones do not meet along a common face");
      std::vector<IntVector> facets = v.cones_[a].facets(), eqs = v.cones_[a].equations();
      facets.insert(facets.end(), v.cones_[b].facets().begin(), v.cones_[b].facets().end());
      eqs.insert(eqs.end(), v.cones_[b].equations().begin(), v.cones_[b].equations().end());
      if (!(Cone::from_inequalities(rank, facets, eqs) == Cone::from_generators(rank, select(v.rays_, common))))
        throw ValidationError("cones overlap beyond their common face");
    }

  if (names.empty()) names = default_names(v.rays_.size());
  if (names.size() != v.rays_.size()) throw ValidationError("need one variable name per ray");
  for (const auto& n : names) {
    bool ok = !n.empty() && (std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_');
    for (char ch : n) ok = ok && (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_');
    if (!ok) throw ValidationError("invalid variable name '" + n + "'");
  }
  v.ring_ = make_ring(names);
  v.names_ = std::move(names);

  IntMatrix pairing = v.pairing_matrix();
  CokernelGrading cl = cokernel_grading(pairing);
  v.torsion_ = cl.torsion;
  if (grading) {
    if (grading->rows() != cl.free_rank || grading->cols() != v.rays_.size())
      throw ValidationError("grading has wrong shape");
    if (!(*grading * pairing == IntMatrix(grading->rows(), rank)))
      throw ValidationError("grading does not kill principal divisors");
    if (grading->rows() > 0)
      for (const auto& f : smith_normal_form(*grading).invariant_factors())
        if (f != 1) throw ValidationError("grading is not unimodular");
    v.grading_ = *grading;
  } else {
    v.grading_ = cl.projection;
  }
  return v;
}

IntMatrix NormalToricVariety::pairing_matrix() const {
  IntMatrix m(rays_.size(), rank_);
  for (std::size_t i = 0; i < rays_.size(); ++i)
    for (std::size_t j = 0; j < rank_; ++j) m(i, j) = rays_[i][j];
  return m;
}

Grading NormalToricVariety::cox_grading() const {
  Grading g;
  g.rank = grading_.rows();
  for (std::size_t i = 0; i < rays_.size(); ++i) g.degrees.push_back(degree(i));
  return g;
}

ToricDivisorClass NormalToricVariety::divisor_class(const IntVector& coefficients) const {
  if (coefficients.size() != rays_.size()) throw ValidationError("divisor needs one coefficient per ray");
  return {grading_ * coefficients};
}

bool NormalToricVariety::has_default_names() const { return names_ == default_names(rays_.size()); }

// ---------------------------------------------------------------------------
// Constructors

NormalToricVariety affine_normal_toric_variety(const Cone& c) {
  if (!c.is_pointed()) throw ValidationError("affine variety needs a pointed cone");
  IndexSet all;
  for (std::size_t i = 0; i < c.rays().size(); ++i) all.push_back(i);
  return NormalToricVariety::from_fan(c.ambient_rank(), c.rays(), {all});
}

NormalToricVariety normal_toric_variety(const std::vector<IntVector>& rays, const std::vector<IndexSet>& max_cones,
                                        std::vector<std::string> names) {
  if (rays.empty()) throw ValidationError("ray list is empty; give the rank explicitly");
  return NormalToricVariety::from_fan(rays.front().size(), rays, max_cones, std::move(names));
}

NormalToricVariety projective_space(std::size_t n) {
  if (n < 1) throw ValidationError("projective_space: n must be at least 1");
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n);
    e[i] = 1;
    rays.push_back(e);
  }
  rays.push_back(IntVector(n, Integer(-1)));
  std::vector<IndexSet> cones;
  for (std::size_t skip = 0; skip <= n; ++skip) {
    IndexSet c;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != skip) c.push_back(i);
    cones.push_back(c);
  }
  IntMatrix grading(1, n + 1);
  for (std::size_t i = 0; i <= n; ++i) grading(0, i) = 1;
  return NormalToricVariety::from_fan(n, rays, cones, {}, grading);
}

NormalToricVariety hirzebruch_surface(long r) {
  if (r < 0) throw ValidationError("hirzebruch_surface: r must be non-negative");
  std::vector<IntVector> rays = {row({1, 0}), row({0, 1}), row({-1, r}), row({0, -1})};
  IntMatrix grading = IntMatrix::from_rows({row({1, 0, 1, r}), row({0, 1, 0, 1})});
  return NormalToricVariety::from_fan(2, rays, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {}, grading);
}

NormalToricVariety del_pezzo_surface(int k) {
  if (k < 1 || k > 3) throw ValidationError("del_pezzo_surface: k must be 1, 2 or 3");
  // Ray order x1, x2, x3, e1, e2, e3; grading basis (H, -E1, -E2, -E3).
  std::vector<IntVector> rays = {row({1, 0}), row({0, 1}), row({-1, -1}), row({1, 1}), row({-1, 0}), row({0, -1})};
  std::vector<std::string> names = {"x1", "x2", "x3", "e1", "e2", "e3"};
  std::vector<IntVector> degrees = {row({1, 1, 0, 1}),  row({1, 1, 1, 0}),  row({1, 0, 1, 1}),
                                    row({0, -1, 0, 0}), row({0, 0, -1, 0}), row({0, 0, 0, -1})};
  std::vector<std::vector<IndexSet>> cones = {
      {{0, 3}, {3, 1}, {1, 2}, {2, 0}},
      {{0, 3}, {3, 1}, {1, 4}, {4, 2}, {2, 0}},
      {{0, 3}, {3, 1}, {1, 4}, {4, 2}, {2, 5}, {5, 0}},
  };
  const std::size_t count = 3 + static_cast<std::size_t>(k);
  rays.resize(count);
  names.resize(count);
  IntMatrix grading(1 + k, count);
  for (std::size_t i = 0; i < count; ++i)
    for (int j = 0; j <= k; ++j) grading(j, i) = degrees[i][j];
  return NormalToricVariety::from_fan(2, rays, cones[k - 1], names, grading);
}

NormalToricVariety cyclic_quotient_singularity(long n, long q) {
  if (n < 2 || q <= 0 || q >= n) throw ValidationError("cyclic_quotient_singularity: need 0 < q < n");
  if (Integer(gcd(Integer(n), Integer(q))) != 1)
    throw ValidationError("cyclic_quotient_singularity: n and q must be coprime");
  return NormalToricVariety::from_fan(2, {row({1, 0}), row({-q, n})}, {{0, 1}});
}

NormalToricVariety product(const NormalToricVariety& a, const NormalToricVariety& b) {
  const std::size_t n = a.rank() + b.rank();
  const std::size_t ra = a.num_rays(), rb = b.num_rays();
  std::vector<IntVector> rays;
  for (const auto& u : a.rays()) {
    IntVector w(n);
    std::copy(u.begin(), u.end(), w.begin());
    rays.push_back(w);
  }
  for (const auto& u : b.rays()) {
    IntVector w(n);
    std::copy(u.begin(), u.end(), w.begin() + static_cast<long>(a.rank()));
    rays.push_back(w);
  }
  std::vector<IndexSet> cones;
  for (const auto& ca : a.max_cones())
    for (const auto& cb : b.max_cones()) {
      IndexSet c = ca;
      for (auto i : cb) c.push_back(i + ra);
      cones.push_back(c);
    }

  std::vector<std::string> names;
  if (a.has_default_names() && b.has_default_names()) {
    names = default_names(ra + rb);
  } else {
    std::set<std::string> na(a.names().begin(), a.names().end()), nb(b.names().begin(), b.names().end());
    for (const auto& s : a.names()) names.push_back(nb.count(s) ? s + "_1" : s);
    for (const auto& s : b.names()) names.push_back(na.count(s) ? s + "_2" : s);
    std::set<std::string> all(names.begin(), names.end());
    if (all.size() != names.size()) names = default_names(ra + rb);
  }

  const std::size_t ka = a.class_group_rank(), kb = b.class_group_rank();
  IntMatrix grading(ka + kb, ra + rb);
  for (std::size_t i = 0; i < ka; ++i)
    for (std::size_t j = 0; j < ra; ++j) grading(i, j) = a.grading()(i, j);
  for (std::size_t i = 0; i < kb; ++i)
    for (std::size_t j = 0; j < rb; ++j) grading(ka + i, ra + j) = b.grading()(i, j);

  // Block-diagonal grading is only a valid basis when the factors are torsion-free.
  std::optional<IntMatrix> g;
  if (a.torsion().empty() && b.torsion().empty()) g = grading;
  return NormalToricVariety::from_fan(n, rays, cones, names, g);
}

// ---------------------------------------------------------------------------
// Predicates

bool is_smooth(const NormalToricVariety& v) {
  for (const auto& c : v.max_cones()) {
    if (c.empty()) continue;
    IntMatrix m = IntMatrix::from_columns(select(v.rays(), c));
    if (lattice_index(m) != 1) return false;
  }
  return true;
}

bool is_simplicial(const NormalToricVariety& v) {
  for (const auto& c : v.max_cones()) {
    if (c.empty()) continue;
    if (rank(IntMatrix::from_columns(select(v.rays(), c))) != c.size()) return false;
  }
  return true;
}

bool is_complete(const NormalToricVariety& v) {
  const std::size_t n = v.rank();
  if (n == 0) return true;
  for (const auto& cone : v.cones())
    if (cone.dim() != n) return false;

  std::map<IndexSet, int> facet_count;
  for (std::size_t k = 0; k < v.cones().size(); ++k) {
    const Cone& cone = v.cones()[k];
    for (const auto& f : cone.facets()) {
      IndexSet on;
      for (auto i : v.max_cones()[k])
        if (dot(f, v.rays()[i]) == 0) on.push_back(i);
      ++facet_count[on];
    }
  }
  for (const auto& [facet, count] : facet_count)
    if (count != 2) return false;

  std::mt19937 rng(1729);
  std::uniform_int_distribution<int> dist(-50, 50);
  for (int probe = 0; probe < 100; ++probe) {
    IntVector x(n);
    for (auto& e : x) e = dist(rng);
    bool covered = std::any_of(v.cones().begin(), v.cones().end(), [&](const Cone& c) { return c.contains(x); });
    if (!covered) return false;
  }
  return true;
}

bool is_projective(const NormalToricVariety& v) {
  if (!is_complete(v)) return false;
  const std::size_t n = v.rank(), r = v.num_rays(), k = v.max_cones().size();
  if (n == 0) return true;
  std::vector<LinearInequality> strict;
  if (is_simplicial(v)) {
    // Heights h_rho only: the linear form on sigma is determined by its rays.
    for (const auto& c : v.max_cones()) {
      std::vector<RatVector> basis_t(n, RatVector(n));
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t j = 0; j < n; ++j) basis_t[j][a] = v.rays()[c[a]][j];
      for (std::size_t rho = 0; rho < r; ++rho) {
        if (std::binary_search(c.begin(), c.end(), rho)) continue;
        auto lambda = solve_rational(basis_t, to_rational(v.rays()[rho]));
        RatVector row(r);
        row[rho] = 1;
        for (std::size_t a = 0; a < n; ++a) row[c[a]] -= (*lambda)[a];
        strict.push_back({row, Rational(0)});
      }
    }
    return lp_feasible(r, strict, {});
  }
  // Variables: heights h_rho, then m_sigma per max cone. Require
  // <m_sigma, u_rho> = h_rho on sigma and < h_rho off sigma.
  const std::size_t vars = r + k * n;
  std::vector<LinearEquation> eqs;
  for (std::size_t s = 0; s < k; ++s) {
    const IndexSet& c = v.max_cones()[s];
    for (std::size_t rho = 0; rho < r; ++rho) {
      RatVector coeffs(vars);
      coeffs[rho] = 1;
      for (std::size_t j = 0; j < n; ++j) coeffs[r + s * n + j] = -Rational(v.rays()[rho][j]);
      if (std::binary_search(c.begin(), c.end(), rho))
        eqs.push_back({coeffs, Rational(0)});
      else
        strict.push_back({coeffs, Rational(0)});
    }
  }
  return lp_feasible(vars, strict, {}, eqs);
}

bool is_face(const NormalToricVariety& v, const IndexSet& s) {
  IndexSet sorted = s;
  std::sort(sorted.begin(), sorted.end());
  return std::any_of(v.max_cones().begin(), v.max_cones().end(),
                     [&](const IndexSet& c) { return subset_of(sorted, c); });
}

// ---------------------------------------------------------------------------
// Ideals

std::vector<IndexSet> minimal_nonfaces(const NormalToricVariety& v) {
  const std::size_t r = v.num_rays();
  std::vector<IndexSet> out;
  for (std::size_t size = 1; size <= r; ++size) {
    IndexSet idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      bool contains_known =
          std::any_of(out.begin(), out.end(), [&](const IndexSet& m) { return subset_of(m, idx); });
      if (!contains_known && !is_face(v, idx)) out.push_back(idx);
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == r - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

namespace {
MultiPoly squarefree(const NormalToricVariety& v, const IndexSet& s) {
  Exponent e(v.num_rays(), 0);
  for (auto i : s) e[i] = 1;
  return MultiPoly::monomial(v.cox_ring(), e);
}
}  // namespace

PolyIdeal stanley_reisner_ideal(const NormalToricVariety& v) {
  std::vector<MultiPoly> gens;
  for (const auto& s : minimal_nonfaces(v)) gens.push_back(squarefree(v, s));
  return PolyIdeal(v.cox_ring(), gens);
}

PolyIdeal irrelevant_ideal(const NormalToricVariety& v) {
  std::vector<MultiPoly> gens;
  for (const auto& c : v.max_cones()) {
    IndexSet complement;
    for (std::size_t i = 0; i < v.num_rays(); ++i)
      if (!std::binary_search(c.begin(), c.end(), i)) complement.push_back(i);
    gens.push_back(squarefree(v, complement));
  }
  return PolyIdeal(v.cox_ring(), gens);
}

PolyIdeal ideal_of_linear_relations(const NormalToricVariety& v) {
  std::vector<MultiPoly> gens;
  for (std::size_t j = 0; j < v.rank(); ++j) {
    MultiPoly f(v.cox_ring());
    for (std::size_t i = 0; i < v.num_rays(); ++i)
      if (v.rays()[i][j] != 0) f += Rational(v.rays()[i][j]) * v.variable(i);
    if (!f.is_zero()) gens.push_back(f);
  }
  return PolyIdeal(v.cox_ring(), gens);
}

ToricIdealResult toric_ideal(const NormalToricVariety& v) {
  if (!v.is_affine()) throw ValidationError("toric_ideal needs an affine variety");
  const Cone& sigma = v.cones().front();
  if (!sigma.is_full_dimensional())
    throw UnsupportedInput("toric_ideal is implemented for full-dimensional cones only");
  Cone dual = dual_cone(sigma);
  std::vector<IntVector> hb = hilbert_basis(dual);
  std::vector<IntVector> gens = dual.rays();
  for (const auto& h : hb)
    if (!std::binary_search(dual.rays().begin(), dual.rays().end(), h)) gens.push_back(h);

  RingPtr ring = make_ring(default_names(gens.size()));
  IntMatrix kernel = kernel_basis(IntMatrix::from_columns(gens));
  std::vector<MultiPoly> binomials;
  for (std::size_t c = 0; c < kernel.cols(); ++c) {
    Exponent plus(gens.size(), 0), minus(gens.size(), 0);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      long e = kernel(i, c).get_si();
      (e > 0 ? plus[i] : minus[i]) = static_cast<int>(e > 0 ? e : -e);
    }
    binomials.push_back(MultiPoly::monomial(ring, plus) - MultiPoly::monomial(ring, minus));
  }
  PolyIdeal lattice(ring, binomials);
  if (binomials.empty()) return {gens, lattice};
  MultiPoly all = MultiPoly::monomial(ring, Exponent(gens.size(), 1));
  return {gens, saturate(lattice, all)};
}

ToricDivisorClass canonical_divisor_class(const NormalToricVariety& v) {
  return v.divisor_class(IntVector(v.num_rays(), Integer(-1)));
}

}  // namespace toric
