#include "toric/cohomology.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toric/errors.hpp"

namespace toric {

namespace {

void require_supported(const NormalToricVariety& v) {
  if (!v.torsion().empty()) throw UnsupportedInput("cohomology on a class group with torsion");
  if (!is_simplicial(v)) throw UnsupportedInput("cohomology requires a simplicial fan");
  if (!is_complete(v)) throw UnsupportedInput("cohomology requires a complete fan");
}

std::vector<IndexSet> subsets_of(const IndexSet& s, std::size_t size) {
  std::vector<IndexSet> out;
  if (size > s.size()) return out;
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  for (;;) {
    IndexSet sub;
    for (auto i : idx) sub.push_back(s[i]);
    out.push_back(sub);
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == s.size() - size + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

class HomologyCache {
 public:
  explicit HomologyCache(const NormalToricVariety& v) : v_(v) {}

  const std::vector<Integer>& get(const IndexSet& c) {
    auto it = cache_.find(c);
    if (it == cache_.end()) it = cache_.emplace(c, reduced_homology(v_, c)).first;
    return it->second;
  }

 private:
  const NormalToricVariety& v_;
  std::map<IndexSet, std::vector<Integer>> cache_;
};

// Bounding box of the vertices of the arrangement <m, u_rho> = -a_rho, padded by 1.
std::pair<IntVector, IntVector> arrangement_box(const NormalToricVariety& v, const IntVector& a) {
  const std::size_t n = v.rank();
  IndexSet all;
  for (std::size_t i = 0; i < v.num_rays(); ++i) all.push_back(i);
  std::vector<RatVector> vertices;
  for (const auto& s : subsets_of(all, n)) {
    std::vector<RatVector> rows;
    RatVector rhs;
    for (auto i : s) {
      rows.push_back(to_rational(v.rays()[i]));
      rhs.push_back(-Rational(a[i]));
    }
    if (rank(rows) == n) vertices.push_back(*solve_rational(rows, rhs));
  }
  IntVector lo(n, Integer(0)), hi(n, Integer(0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < vertices.size(); ++k) {
      const Rational& x = vertices[k][j];
      Integer f, c;
      mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
      mpz_cdiv_q(c.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
      if (k == 0 || f < lo[j]) lo[j] = f;
      if (k == 0 || c > hi[j]) hi[j] = c;
    }
    lo[j] -= 1;
    hi[j] += 1;
  }
  return {lo, hi};
}

}  // namespace

std::vector<Integer> reduced_homology(const NormalToricVariety& v, const IndexSet& c) {
  // faces[k] = faces with k vertices, k = 0 .. max
  std::vector<std::vector<IndexSet>> faces;
  faces.push_back({IndexSet{}});
  for (std::size_t k = 1; k <= c.size(); ++k) {
    std::vector<IndexSet> layer;
    for (const auto& s : subsets_of(c, k))
      if (is_face(v, s)) layer.push_back(s);
    if (layer.empty()) break;
    faces.push_back(std::move(layer));
  }
  // boundary rank from k-vertex faces to (k-1)-vertex faces
  auto boundary_rank = [&](std::size_t k) -> std::size_t {
    if (k == 0 || k >= faces.size()) return 0;
    std::map<IndexSet, std::size_t> lower;
    for (std::size_t i = 0; i < faces[k - 1].size(); ++i) lower[faces[k - 1][i]] = i;
    std::vector<RatVector> rows;
    for (const auto& f : faces[k]) {
      RatVector row(faces[k - 1].size());
      for (std::size_t drop = 0; drop < f.size(); ++drop) {
        IndexSet g = f;
        g.erase(g.begin() + static_cast<long>(drop));
        row[lower.at(g)] = (drop % 2 == 0) ? 1 : -1;
      }
      rows.push_back(row);
    }
    return rank(rows);
  };
  std::vector<Integer> out(faces.size(), 0);
  std::vector<std::size_t> ranks(faces.size() + 1, 0);
  for (std::size_t k = 1; k < faces.size(); ++k) ranks[k] = boundary_rank(k);
  for (std::size_t k = 0; k < faces.size(); ++k)
    out[k] = Integer(static_cast<unsigned long>(faces[k].size() - ranks[k] - ranks[k + 1]));
  return out;
}

std::vector<ContributionSet> contribution_sets(const NormalToricVariety& v) {
  require_supported(v);
  auto gens = minimal_nonfaces(v);
  std::set<IndexSet> unions = {IndexSet{}};
  for (const auto& g : gens) {
    std::set<IndexSet> next = unions;
    for (const auto& u : unions) {
      IndexSet w;
      std::set_union(u.begin(), u.end(), g.begin(), g.end(), std::back_inserter(w));
      next.insert(w);
    }
    unions = std::move(next);
  }
  std::vector<ContributionSet> out;
  for (const auto& c : unions) {
    auto h = reduced_homology(v, c);
    for (std::size_t k = 0; k < h.size(); ++k)
      if (h[k] != 0) out.push_back({c, static_cast<int>(k), h[k]});
  }
  std::sort(out.begin(), out.end(), [](const ContributionSet& a, const ContributionSet& b) {
    if (a.index != b.index) return a.index < b.index;
    if (a.rays.size() != b.rays.size()) return a.rays.size() < b.rays.size();
    return a.rays < b.rays;
  });
  return out;
}

std::vector<Integer> cohomology_dims(const NormalToricVariety& v, const ToricDivisorClass& d) {
  require_supported(v);
  if (d.coords.size() != v.class_group_rank()) throw ValidationError("divisor class has wrong rank");
  auto sol = solve_integer(v.grading(), d.coords);
  if (!sol) throw ValidationError("class is not in the image of the grading");
  const IntVector& a = *sol;
  const std::size_t n = v.rank();
  const std::size_t r = v.num_rays();
  HomologyCache cache(v);
  std::vector<Integer> dims(n + 1, 0);

  auto [lo, hi] = arrangement_box(v, a);
  // Sum over the box; grow while the outer shell still contributes.
  std::set<IntVector> counted;
  for (;;) {
    bool shell_contributes = false;
    IntVector m(n);
    for (std::size_t j = 0; j < n; ++j) m[j] = lo[j];
    for (;;) {
      bool on_shell = false;
      for (std::size_t j = 0; j < n; ++j) on_shell = on_shell || m[j] == lo[j] || m[j] == hi[j];
      if (!counted.count(m)) {
        IndexSet c;
        for (std::size_t rho = 0; rho < r; ++rho)
          if (dot(m, v.rays()[rho]) < -a[rho]) c.push_back(rho);
        const auto& h = cache.get(c);
        bool nonzero = false;
        for (std::size_t k = 0; k < h.size() && k <= n; ++k) {
          dims[k] += h[k];
          nonzero = nonzero || h[k] != 0;
        }
        if (nonzero && on_shell) shell_contributes = true;
        counted.insert(m);
      }
      std::size_t j = 0;
      while (j < n && m[j] == hi[j]) {
        m[j] = lo[j];
        ++j;
      }
      if (j == n) break;
      m[j] += 1;
    }
    if (!shell_contributes) break;
    for (std::size_t j = 0; j < n; ++j) {
      lo[j] -= 1;
      hi[j] += 1;
    }
  }
  return dims;
}

Integer cohomology_dim(const NormalToricVariety& v, const ToricDivisorClass& d, int i) {
  if (i < 0 || i > static_cast<int>(v.dim())) throw ValidationError("cohomology index out of range");
  return cohomology_dims(v, d)[static_cast<std::size_t>(i)];
}

std::vector<VanishingSet> vanishing_sets(const NormalToricVariety& v) {
  auto sets = contribution_sets(v);
  const std::size_t k = v.class_group_rank();
  std::vector<VanishingSet> out(v.dim() + 1);
  for (std::size_t i = 0; i < out.size(); ++i) out[i].index = static_cast<int>(i);
  for (const auto& cs : sets) {
    if (cs.index > static_cast<int>(v.dim())) continue;
    VanishingPolyhedron p;
    p.rays = cs.rays;
    p.multiplicity = cs.multiplicity;
    p.apex = IntVector(k);
    for (std::size_t rho = 0; rho < v.num_rays(); ++rho)
      if (!std::binary_search(cs.rays.begin(), cs.rays.end(), rho)) p.generators.push_back(v.degree(rho));
    for (auto rho : cs.rays) {
      p.apex = subtract(p.apex, v.degree(rho));
      p.generators.push_back(negate(v.degree(rho)));
    }
    std::vector<IntVector> distinct;
    for (const auto& g : p.generators)
      if (std::find(distinct.begin(), distinct.end(), g) == distinct.end()) distinct.push_back(g);
    p.generators = distinct;
    std::vector<IntVector> nonzero;
    for (const auto& g : p.generators)
      if (!is_zero(g)) nonzero.push_back(g);
    p.polyhedron = Polyhedron::from_generators(k, {to_rational(p.apex)}, nonzero);
    out[static_cast<std::size_t>(cs.index)].polyhedra.push_back(std::move(p));
  }
  return out;
}

bool in_vanishing_set(const VanishingSet& vs, const ToricDivisorClass& d) {
  for (const auto& p : vs.polyhedra)
    if (polyhedron_membership(p.polyhedron, d.coords)) return false;
  return true;
}

}  // namespace toric
