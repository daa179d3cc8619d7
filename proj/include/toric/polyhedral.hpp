#pragma once

// Rational polyhedral cones and polyhedra with exact V/H representations.

#include <string>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

/// Extreme rays and lineality basis of {x : <a, x> >= 0 for all a in
/// `inequalities`}, computed by the double description method. Inequalities
/// are inserted in lexicographic order so the result is reproducible.
struct DdResult {
  std::vector<IntVector> rays;
  std::vector<IntVector> lineality;
};
DdResult double_description(std::size_t dim, std::vector<IntVector> inequalities);

/// A rational polyhedral cone in Z^n stored with both representations.
///
/// Rays are primitive extreme rays modulo the lineality space, projected onto
/// its orthogonal complement and sorted lexicographically. Facet normals are
/// primitive, meaning <facet, x> >= 0 on the cone, and are taken modulo the
/// equations in the same way. Lineality and equation bases are in Hermite form.
class Cone {
 public:
  Cone() = default;

  static Cone from_generators(std::size_t ambient_rank, const std::vector<IntVector>& rays,
                              const std::vector<IntVector>& lineality = {});
  static Cone from_inequalities(std::size_t ambient_rank, const std::vector<IntVector>& facets,
                                const std::vector<IntVector>& equations = {});

  std::size_t ambient_rank() const { return rank_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<IntVector>& lineality() const { return lineality_; }
  const std::vector<IntVector>& facets() const { return facets_; }
  const std::vector<IntVector>& equations() const { return equations_; }

  std::size_t dim() const { return rank_ - equations_.size(); }
  bool is_pointed() const { return lineality_.empty(); }
  bool is_full_dimensional() const { return equations_.empty(); }

  bool contains(const IntVector& x) const;
  bool contains(const RatVector& x) const;
  /// True if x satisfies every facet inequality strictly.
  bool contains_in_relative_interior(const RatVector& x) const;

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.rank_ == b.rank_ && a.rays_ == b.rays_ && a.lineality_ == b.lineality_;
  }

 private:
  std::size_t rank_ = 0;
  std::vector<IntVector> rays_;
  std::vector<IntVector> lineality_;
  std::vector<IntVector> facets_;
  std::vector<IntVector> equations_;
};

/// Smallest cone containing the generators. Throws ValidationError on an
/// empty list or mismatched lengths.
Cone positive_hull(const std::vector<IntVector>& generators);

/// {m : <m, v> >= 0 for all v in c}
Cone dual_cone(const Cone& c);

std::size_t cone_dim(const Cone& c);

/// Subdivision of a pointed cone into simplicial cones using only its rays
/// (pulling from the first ray). Each entry lists indices into c.rays().
std::vector<std::vector<std::size_t>> simplicial_subdivision(const Cone& c);

/// Lattice points of the half-open parallelepiped spanned by linearly
/// independent generators, including the origin.
std::vector<IntVector> parallelepiped_points(const std::vector<IntVector>& generators);

/// Minimal generating set of the semigroup c ∩ Z^n, sorted lexicographically.
/// Throws ValidationError when c is not pointed.
std::vector<IntVector> hilbert_basis(const Cone& c);

/// <normal, x> <= offset, with normal and offset jointly coprime.
struct HalfSpace {
  IntVector normal;
  Integer offset;

  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

/// A rational polyhedron, kept as the cone over {1} x P in rank n + 1.
class Polyhedron {
 public:
  Polyhedron() = default;

  static Polyhedron from_generators(std::size_t ambient_rank, const std::vector<RatVector>& points,
                                    const std::vector<IntVector>& rays = {},
                                    const std::vector<IntVector>& lineality = {});
  /// Equations are read as <normal, x> == offset.
  static Polyhedron from_inequalities(std::size_t ambient_rank, const std::vector<HalfSpace>& inequalities,
                                      const std::vector<HalfSpace>& equations = {});

  std::size_t ambient_rank() const { return rank_; }
  bool is_empty() const { return empty_; }
  bool is_bounded() const { return rays_.empty() && lineality_.empty(); }

  /// Minimal-face representatives; these are the vertices when the polyhedron is pointed.
  const std::vector<RatVector>& vertices() const { return vertices_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<IntVector>& lineality() const { return lineality_; }
  /// Irredundant facet inequalities in print order.
  const std::vector<HalfSpace>& inequalities() const { return inequalities_; }
  const std::vector<HalfSpace>& equations() const { return equations_; }
  const Cone& homogenization() const { return homog_; }

  std::size_t dim() const;
  bool contains(const RatVector& x) const;

 private:
  void derive_from_homogenization();

  std::size_t rank_ = 0;
  bool empty_ = true;
  Cone homog_;
  std::vector<RatVector> vertices_;
  std::vector<IntVector> rays_;
  std::vector<IntVector> lineality_;
  std::vector<HalfSpace> inequalities_;
  std::vector<HalfSpace> equations_;
};

/// Bounded polyhedron spanned by the points. Throws ValidationError on an
/// empty list or mismatched lengths.
Polyhedron convex_hull(const std::vector<RatVector>& points);
Polyhedron convex_hull(const std::vector<IntVector>& points);

/// All integer points of a bounded polyhedron, sorted lexicographically.
/// Throws ValidationError when p is unbounded.
std::vector<IntVector> lattice_points(const Polyhedron& p);

/// Throws ValidationError on dimension mismatch.
bool polyhedron_membership(const Polyhedron& p, const RatVector& x);
bool polyhedron_membership(const Polyhedron& p, const IntVector& x);

/// One inequality per line, e.g. "-x1 + 2x2 <= 3"; equations use "=".
std::string print_constraints(const Polyhedron& p);
std::string format_linear_form(const IntVector& coeffs);

/// Euclidean volume of a full-dimensional bounded polyhedron.
Rational polytope_volume(const Polyhedron& p);

}  // namespace toric
