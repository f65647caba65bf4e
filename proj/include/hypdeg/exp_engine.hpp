#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypdeg/polytope.hpp"

namespace hypdeg {

enum class ExpMode { ExactFullJ, CertifiedLowerBound };

std::string_view exp_mode_name(ExpMode mode);

/// Exp_J(H) or a certified lower bound for it, with the directions that attain the value.
/// For J = {1..m} the objective is |u|^2 / (u.h)^2 with u in the closed region of h.
struct ExpResult {
  ExpMode mode = ExpMode::CertifiedLowerBound;
  Rat value;
  ExponentVector h_r;
  ExponentVector h_e;
  /// Unnormalized witness directions (full length m); e is supported on J.
  RationalVector r;
  RationalVector e;
  std::string strategy;

  /// (u.h)^2 / |u|^2 at the optimum, i.e. 1 / value.
  Rat value_squared_inverse() const { return 1 / value; }
};

/// e lies in R(h) (open) or its closure: nonnegative (positive when open) and e.h beats every
/// other corner (ties allowed only when closed). Normalization is irrelevant.
bool region_contains(const Polytope& H, const ExponentVector& h, const RationalVector& e, bool closed);

/// Exact Exp over all coordinates by the finite enumeration of null directions of (m-1)-subsets
/// of {(h1 - h).x} and {e_j.x}. Throws InfeasibleH if nothing qualifies.
ExpResult exp_full(const Polytope& H);

/// The Exp_J objective e.r / ((max_h e.h)(max_h r.h)) evaluated exactly. e must be supported on J.
Rat exp_J_at(const Polytope& H, const std::vector<int>& J, const RationalVector& e, const RationalVector& r);

enum class ExpStrategy { Axis, Uniform, Numeric };

/// Certified lower bound for Exp_J(H) (J holds 0-based coordinates). The numeric strategy runs
/// a floating point multistart search and then re-evaluates rationalized points exactly; it also
/// considers the axis and uniform candidates.
ExpResult exp_J_lower(const Polytope& H, const std::vector<int>& J, ExpStrategy strategy, std::uint64_t seed = 1);

}  // namespace hypdeg
