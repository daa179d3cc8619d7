#pragma once

// Fine regular star triangulations of small lattice polytopes around the origin.

#include <optional>
#include <vector>

#include "toric/polyhedral.hpp"
#include "toric/toric_variety.hpp"

namespace toric {

/// Lattice points of a polytope with the origin as its only interior lattice
/// point. The origin itself is not stored; it is the apex of every simplex.
class PointConfiguration {
 public:
  /// Drops the origin if listed. Throws ValidationError for duplicate points,
  /// an origin that is not interior, or interior points other than the origin;
  /// UnsupportedInput above rank 3.
  static PointConfiguration from_points(const std::vector<IntVector>& points);

  std::size_t rank() const { return rank_; }
  const std::vector<IntVector>& points() const { return points_; }
  const Polyhedron& hull() const { return hull_; }
  /// Point indices on each facet of the hull, facets in inequality order.
  const std::vector<IndexSet>& facets() const { return facets_; }

 private:
  std::size_t rank_ = 0;
  std::vector<IntVector> points_;
  Polyhedron hull_;
  std::vector<IndexSet> facets_;
};

struct Triangulation {
  /// Boundary simplices as point indices; each is coned over the origin.
  std::vector<IndexSet> simplices;
  /// Heights per point (origin at height 0) whose lower hull induces the triangulation.
  RatVector heights;
};

/// All fine star triangulations, regular or not, in canonical order.
std::vector<std::vector<IndexSet>> fine_star_triangulations(const PointConfiguration& p);

/// Heights certifying regularity, found by exact LP, or nullopt.
std::optional<RatVector> regularity_certificate(const PointConfiguration& p, const std::vector<IndexSet>& simplices);

/// Recomputes the affine function on each simplex from the heights and checks
/// strict inequality at every other point. Independent of the LP.
bool verify_regularity(const PointConfiguration& p, const std::vector<IndexSet>& simplices, const RatVector& heights);

/// Fine (every point used), star (cones over the origin) and covering
/// (simplex volumes sum to the hull volume).
bool verify_fine_star(const PointConfiguration& p, const std::vector<IndexSet>& simplices);

std::vector<Triangulation> frst_enumerate(const PointConfiguration& p);

std::vector<NormalToricVariety> varieties_from_star_triangulations(const PointConfiguration& p);

}  // namespace toric
