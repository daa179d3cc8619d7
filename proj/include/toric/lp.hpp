#pragma once

#include <optional>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

/// `coeffs . x >= rhs` (weak) or `coeffs . x > rhs` (strict), depending on
/// which list it is passed in.
struct LinearInequality {
  RatVector coeffs;
  Rational rhs;
};

/// `coeffs . x == rhs`
struct LinearEquation {
  RatVector coeffs;
  Rational rhs;
};

/// Exact decision of whether some x in Q^n satisfies every strict and weak
/// inequality and every equation. Strict rows are handled by maximizing a
/// common gap variable s in [0, 1] subtracted from each strict row.
/// Returns a satisfying point or nullopt.
std::optional<RatVector> lp_find_point(std::size_t num_vars,
                                       const std::vector<LinearInequality>& strict,
                                       const std::vector<LinearInequality>& weak,
                                       const std::vector<LinearEquation>& equations = {});

bool lp_feasible(std::size_t num_vars,
                 const std::vector<LinearInequality>& strict,
                 const std::vector<LinearInequality>& weak,
                 const std::vector<LinearEquation>& equations = {});

/// Maximizes `objective . y` over {y >= 0 : rows . y <= rhs}. Returns the
/// optimal y, or nullopt when infeasible. The caller guarantees boundedness.
std::optional<RatVector> simplex_maximize(const std::vector<RatVector>& rows,
                                          const RatVector& rhs,
                                          const RatVector& objective);

}  // namespace toric
