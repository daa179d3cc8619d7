#pragma once

// Line bundle cohomology on complete simplicial toric varieties.

#include <string>
#include <vector>

#include "toric/polyhedral.hpp"
#include "toric/toric_variety.hpp"

namespace toric {

struct ContributionSet {
  IndexSet rays;
  int index = 0;
  Integer multiplicity;
};

/// Ray subsets C, built as unions of Stanley-Reisner supports, with every
/// index i for which the reduced cohomology of the complex of cones inside C
/// is nonzero in degree i - 1. Sorted by index, then size, then lexicographically.
std::vector<ContributionSet> contribution_sets(const NormalToricVariety& v);

/// Reduced rational homology dimensions of {faces of the fan inside C},
/// indexed by degree + 1 (entry 0 is degree -1).
std::vector<Integer> reduced_homology(const NormalToricVariety& v, const IndexSet& c);

/// h^0 .. h^dim of O(d). Requires a complete simplicial fan and a torsion-free class group.
std::vector<Integer> cohomology_dims(const NormalToricVariety& v, const ToricDivisorClass& d);
Integer cohomology_dim(const NormalToricVariety& v, const ToricDivisorClass& d, int i);

struct VanishingPolyhedron {
  IndexSet rays;
  Integer multiplicity;
  IntVector apex;
  /// deg x_rho for rho outside C, then -deg x_rho for rho in C; repeats dropped.
  std::vector<IntVector> generators;
  Polyhedron polyhedron;
};

struct VanishingSet {
  int index = 0;
  std::vector<VanishingPolyhedron> polyhedra;
};

/// One entry per index 0..dim.
std::vector<VanishingSet> vanishing_sets(const NormalToricVariety& v);

/// True iff d lies in none of the polyhedra, i.e. h^index(d) = 0.
bool in_vanishing_set(const VanishingSet& vs, const ToricDivisorClass& d);

}  // namespace toric
