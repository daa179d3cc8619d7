#include "toric/triangulation.hpp"

#include <algorithm>
#include <set>

#include "toric/errors.hpp"
#include "toric/lp.hpp"

namespace toric {

PointConfiguration PointConfiguration::from_points(const std::vector<IntVector>& points) {
  if (points.empty()) throw ValidationError("point configuration is empty");
  PointConfiguration p;
  p.rank_ = points.front().size();
  if (p.rank_ == 0) throw ValidationError("point configuration needs rank at least 1");
  if (p.rank_ > 3) throw UnsupportedInput("triangulations are supported up to rank 3");
  std::set<IntVector> seen;
  for (const auto& x : points) {
    if (x.size() != p.rank_) throw ValidationError("points have different lengths");
    if (!seen.insert(x).second) throw ValidationError("duplicate point " + to_string(x));
    if (!is_zero(x)) p.points_.push_back(x);
  }
  std::vector<IntVector> with_origin = p.points_;
  with_origin.push_back(IntVector(p.rank_));
  p.hull_ = convex_hull(with_origin);
  if (!p.hull_.equations().empty()) throw ValidationError("origin is not interior: polytope is not full-dimensional");
  for (const auto& h : p.hull_.inequalities())
    if (h.offset <= 0) throw ValidationError("origin is not in the interior of the polytope");

  std::vector<bool> on_boundary(p.points_.size(), false);
  for (const auto& h : p.hull_.inequalities()) {
    IndexSet f;
    for (std::size_t i = 0; i < p.points_.size(); ++i)
      if (dot(h.normal, p.points_[i]) == h.offset) {
        f.push_back(i);
        on_boundary[i] = true;
      }
    p.facets_.push_back(f);
  }
  for (std::size_t i = 0; i < p.points_.size(); ++i)
    if (!on_boundary[i]) throw ValidationError("point " + to_string(p.points_[i]) + " is interior but not the origin");
  return p;
}

namespace {

using Point2 = std::pair<Integer, Integer>;

Integer orient(const Point2& a, const Point2& b, const Point2& c) {
  return (b.first - a.first) * (c.second - a.second) - (b.second - a.second) * (c.first - a.first);
}

int sign(const Integer& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

bool on_segment_interior(const Point2& a, const Point2& b, const Point2& p) {
  if (orient(a, b, p) != 0 || p == a || p == b) return false;
  return std::min(a.first, b.first) <= p.first && p.first <= std::max(a.first, b.first) &&
         std::min(a.second, b.second) <= p.second && p.second <= std::max(a.second, b.second);
}

bool properly_cross(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  return sign(orient(a, b, c)) * sign(orient(a, b, d)) < 0 && sign(orient(c, d, a)) * sign(orient(c, d, b)) < 0;
}

// Maximal cliques with Bron-Kerbosch and pivoting.
void bron_kerbosch(const std::vector<std::vector<bool>>& adj, std::vector<std::size_t>& r, std::vector<std::size_t> p,
                   std::vector<std::size_t> x, std::vector<std::vector<std::size_t>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  std::size_t pivot = p.empty() ? x.front() : p.front();
  std::size_t best = 0;
  for (auto u : p) {
    std::size_t deg = 0;
    for (auto w : p) deg += adj[u][w];
    if (deg > best) {
      best = deg;
      pivot = u;
    }
  }
  std::vector<std::size_t> candidates;
  for (auto u : p)
    if (!adj[pivot][u]) candidates.push_back(u);
  for (auto u : candidates) {
    std::vector<std::size_t> np, nx;
    for (auto w : p)
      if (adj[u][w]) np.push_back(w);
    for (auto w : x)
      if (adj[u][w]) nx.push_back(w);
    r.push_back(u);
    bron_kerbosch(adj, r, np, nx, out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), u));
    x.push_back(u);
  }
}

// Fine triangulations of a facet, as lists of simplices over global point indices.
std::vector<std::vector<IndexSet>> facet_triangulations(const PointConfiguration& pc, const IntVector& normal,
                                                        const IndexSet& ids) {
  const std::size_t n = pc.rank();
  if (n == 1) return {{ids}};
  // Drop a coordinate where the normal is nonzero: the projection is injective on the facet.
  std::size_t drop = 0;
  while (normal[drop] == 0) ++drop;
  std::vector<std::vector<Integer>> coords;
  for (auto i : ids) {
    std::vector<Integer> c;
    for (std::size_t j = 0; j < n; ++j)
      if (j != drop) c.push_back(pc.points()[i][j]);
    coords.push_back(c);
  }
  if (n == 2) {
    std::vector<std::size_t> order(ids.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return coords[a][0] < coords[b][0]; });
    std::vector<IndexSet> segs;
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
      IndexSet s = {ids[order[k]], ids[order[k + 1]]};
      std::sort(s.begin(), s.end());
      segs.push_back(s);
    }
    return {segs};
  }

  const std::size_t m = ids.size();
  std::vector<Point2> pts;
  for (const auto& c : coords) pts.emplace_back(c[0], c[1]);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      bool empty = true;
      for (std::size_t c = 0; c < m && empty; ++c)
        if (on_segment_interior(pts[a], pts[b], pts[c])) empty = false;
      if (empty) edges.emplace_back(a, b);
    }
  const std::size_t e = edges.size();
  std::vector<std::vector<bool>> adj(e, std::vector<bool>(e, false));
  for (std::size_t s = 0; s < e; ++s)
    for (std::size_t t = s + 1; t < e; ++t) {
      auto [a, b] = edges[s];
      auto [c, d] = edges[t];
      bool ok = !properly_cross(pts[a], pts[b], pts[c], pts[d]);
      adj[s][t] = adj[t][s] = ok;
    }
  std::vector<std::vector<std::size_t>> cliques;
  std::vector<std::size_t> r, all(e);
  for (std::size_t s = 0; s < e; ++s) all[s] = s;
  bron_kerbosch(adj, r, all, {}, cliques);

  std::vector<std::vector<IndexSet>> out;
  for (const auto& clique : cliques) {
    std::set<std::pair<std::size_t, std::size_t>> present;
    for (auto s : clique) present.insert(edges[s]);
    std::vector<IndexSet> tris;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        for (std::size_t c = b + 1; c < m; ++c) {
          if (!present.count({a, b}) || !present.count({b, c}) || !present.count({a, c})) continue;
          Integer area = orient(pts[a], pts[b], pts[c]);
          if (area == 0) continue;
          bool empty = true;
          for (std::size_t q = 0; q < m && empty; ++q) {
            if (q == a || q == b || q == c) continue;
            int s1 = sign(orient(pts[a], pts[b], pts[q])), s2 = sign(orient(pts[b], pts[c], pts[q])),
                s3 = sign(orient(pts[c], pts[a], pts[q]));
            int s = sign(area);
            if (s1 * s >= 0 && s2 * s >= 0 && s3 * s >= 0) empty = false;
          }
          if (!empty) continue;
          IndexSet t = {ids[a], ids[b], ids[c]};
          std::sort(t.begin(), t.end());
          tris.push_back(t);
        }
    std::sort(tris.begin(), tris.end());
    out.push_back(tris);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Integer simplex_det(const PointConfiguration& p, const IndexSet& s) {
  std::vector<IntVector> cols;
  for (auto i : s) cols.push_back(p.points()[i]);
  return determinant(IntMatrix::from_columns(cols));
}

}  // namespace

std::vector<std::vector<IndexSet>> fine_star_triangulations(const PointConfiguration& p) {
  std::vector<std::vector<IndexSet>> result = {{}};
  for (std::size_t f = 0; f < p.facets().size(); ++f) {
    auto options = facet_triangulations(p, p.hull().inequalities()[f].normal, p.facets()[f]);
    std::vector<std::vector<IndexSet>> next;
    for (const auto& partial : result)
      for (const auto& opt : options) {
        auto combined = partial;
        combined.insert(combined.end(), opt.begin(), opt.end());
        next.push_back(std::move(combined));
      }
    result = std::move(next);
    if (result.size() > 100000) throw UnsupportedInput("too many boundary triangulations to enumerate");
  }
  for (auto& t : result) {
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

std::optional<RatVector> regularity_certificate(const PointConfiguration& p, const std::vector<IndexSet>& simplices) {
  const std::size_t n = p.rank(), np = p.points().size();
  // The linear form on a simplex S is fixed by its vertex heights: writing a
  // point q = sum lambda_i s_i gives <m_S, q> = sum lambda_i w_{s_i}, which
  // must stay strictly below w_q for every q outside S.
  std::vector<LinearInequality> strict;
  for (const auto& s : simplices) {
    if (s.size() != n) return std::nullopt;
    std::vector<RatVector> basis_t(n, RatVector(n));
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) basis_t[j][k] = p.points()[s[k]][j];
    for (std::size_t q = 0; q < np; ++q) {
      if (std::binary_search(s.begin(), s.end(), q)) continue;
      auto lambda = solve_rational(basis_t, to_rational(p.points()[q]));
      if (!lambda) return std::nullopt;
      RatVector row(np);
      row[q] = 1;
      for (std::size_t k = 0; k < n; ++k) row[s[k]] -= (*lambda)[k];
      strict.push_back({row, Rational(0)});
    }
  }
  return lp_find_point(np, strict, {});
}

bool verify_regularity(const PointConfiguration& p, const std::vector<IndexSet>& simplices, const RatVector& heights) {
  const std::size_t n = p.rank();
  if (heights.size() != p.points().size()) return false;
  for (const auto& s : simplices) {
    if (s.size() != n) return false;
    std::vector<RatVector> rows;
    RatVector rhs;
    for (auto i : s) {
      rows.push_back(to_rational(p.points()[i]));
      rhs.push_back(heights[i]);
    }
    auto m = solve_rational(rows, rhs);
    if (!m || rank(rows) != n) return false;
    for (std::size_t i = 0; i < p.points().size(); ++i) {
      if (std::binary_search(s.begin(), s.end(), i)) continue;
      if (!(dot(p.points()[i], *m) < heights[i])) return false;
    }
  }
  return true;
}

bool verify_fine_star(const PointConfiguration& p, const std::vector<IndexSet>& simplices) {
  std::vector<bool> used(p.points().size(), false);
  Rational volume = 0;
  Integer factorial = 1;
  for (std::size_t i = 2; i <= p.rank(); ++i) factorial *= static_cast<unsigned long>(i);
  for (const auto& s : simplices) {
    if (s.size() != p.rank()) return false;
    for (auto i : s) used[i] = true;
    Integer det = simplex_det(p, s);
    if (det == 0) return false;
    volume += Rational(abs(det), factorial);
  }
  if (!std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return false;
  return volume == polytope_volume(p.hull());
}

std::vector<Triangulation> frst_enumerate(const PointConfiguration& p) {
  std::vector<Triangulation> out;
  for (const auto& t : fine_star_triangulations(p)) {
    auto heights = regularity_certificate(p, t);
    if (!heights) continue;
    out.push_back({t, *heights});
  }
  return out;
}

std::vector<NormalToricVariety> varieties_from_star_triangulations(const PointConfiguration& p) {
  std::vector<NormalToricVariety> out;
  for (const auto& t : frst_enumerate(p))
    out.push_back(NormalToricVariety::from_fan(p.rank(), p.points(), t.simplices));
  return out;
}

}  // namespace toric
