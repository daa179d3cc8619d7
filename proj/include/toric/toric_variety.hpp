#pragma once

// Fans and normal toric varieties.

#include <optional>
#include <string>
#include <vector>

#include "toric/lattice.hpp"
#include "toric/polyhedral.hpp"
#include "toric/polyring.hpp"

namespace toric {

using IndexSet = std::vector<std::size_t>;

/// Class of a divisor in the free part of Cl(X).
struct ToricDivisorClass {
  IntVector coords;

  friend bool operator==(const ToricDivisorClass&, const ToricDivisorClass&) = default;
  friend ToricDivisorClass operator+(const ToricDivisorClass& a, const ToricDivisorClass& b) {
    return {add(a.coords, b.coords)};
  }
  friend ToricDivisorClass operator-(const ToricDivisorClass& a, const ToricDivisorClass& b) {
    return {subtract(a.coords, b.coords)};
  }
};

class NormalToricVariety {
 public:
  /// Validates the fan. Max cones are 0-based ray index sets; they are stored
  /// sorted, and the list of cones is sorted lexicographically. An empty list
  /// means the fan {0}. `grading`, when given, must be a unimodular
  /// free_rank x rays matrix killing every principal divisor.
  static NormalToricVariety from_fan(std::size_t rank, std::vector<IntVector> rays,
                                     std::vector<IndexSet> max_cones, std::vector<std::string> names = {},
                                     std::optional<IntMatrix> grading = std::nullopt);

  std::size_t rank() const { return rank_; }
  std::size_t dim() const { return rank_; }
  std::size_t num_rays() const { return rays_.size(); }
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<IndexSet>& max_cones() const { return max_cones_; }
  const std::vector<Cone>& cones() const { return cones_; }
  const std::vector<std::string>& names() const { return names_; }
  /// Notes produced while normalizing the input (primitivized rays).
  const std::vector<std::string>& warnings() const { return warnings_; }

  const RingPtr& cox_ring() const { return ring_; }
  MultiPoly variable(std::size_t ray) const { return MultiPoly::variable(ring_, ray); }

  /// Rays x rank matrix with entries <e_j, u_rho>.
  IntMatrix pairing_matrix() const;

  std::size_t class_group_rank() const { return grading_.rows(); }
  const std::vector<Integer>& torsion() const { return torsion_; }
  /// class_group_rank x rays; column rho is the degree of x_rho.
  const IntMatrix& grading() const { return grading_; }
  IntVector degree(std::size_t ray) const { return grading_.column(ray); }
  Grading cox_grading() const;
  ToricDivisorClass divisor_class(const IntVector& coefficients) const;

  bool is_affine() const { return max_cones_.size() == 1; }

  bool has_default_names() const;

 private:
  std::size_t rank_ = 0;
  std::vector<IntVector> rays_;
  std::vector<IndexSet> max_cones_;
  std::vector<Cone> cones_;
  std::vector<std::string> names_;
  std::vector<std::string> warnings_;
  RingPtr ring_;
  IntMatrix grading_;
  std::vector<Integer> torsion_;
};

std::vector<std::string> default_names(std::size_t count, const std::string& prefix = "x");

NormalToricVariety affine_normal_toric_variety(const Cone& c);
NormalToricVariety normal_toric_variety(const std::vector<IntVector>& rays, const std::vector<IndexSet>& max_cones,
                                        std::vector<std::string> names = {});

NormalToricVariety projective_space(std::size_t n);
NormalToricVariety hirzebruch_surface(long r);
NormalToricVariety del_pezzo_surface(int k);
/// Affine on cone((1,0), (-q,n)).
NormalToricVariety cyclic_quotient_singularity(long n, long q);

/// Rays embedded in the direct sum; max cones are pairwise unions.
NormalToricVariety product(const NormalToricVariety& a, const NormalToricVariety& b);

bool is_smooth(const NormalToricVariety& v);
bool is_simplicial(const NormalToricVariety& v);
bool is_complete(const NormalToricVariety& v);
/// False for fans that are not complete.
bool is_projective(const NormalToricVariety& v);

/// Max cone rays plus all their subsets, i.e. whether `s` spans a cone of the fan.
bool is_face(const NormalToricVariety& v, const IndexSet& s);

/// Minimal non-faces, by size then lexicographically.
std::vector<IndexSet> minimal_nonfaces(const NormalToricVariety& v);

PolyIdeal stanley_reisner_ideal(const NormalToricVariety& v);
PolyIdeal irrelevant_ideal(const NormalToricVariety& v);
PolyIdeal ideal_of_linear_relations(const NormalToricVariety& v);

struct ToricIdealResult {
  /// Hilbert basis of the dual cone; variable i corresponds to element i.
  std::vector<IntVector> generators;
  PolyIdeal ideal;
};

/// Kernel of the monomial map given by the dual Hilbert basis. Requires an
/// affine variety on a full-dimensional cone.
ToricIdealResult toric_ideal(const NormalToricVariety& v);

ToricDivisorClass canonical_divisor_class(const NormalToricVariety& v);

}  // namespace toric
