#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hypdeg/factor.hpp"
#include "hypdeg/multipoly.hpp"
#include "hypdeg/polytope.hpp"

namespace hypdeg {

/// Positive integers n with sum <= m + deg g and g(n) != 0, by the induction on the last variable.
std::vector<long> pick_n(const MultiPoly& g);

struct LeadingForm {
  long D = 0;
  /// Terms of f whose exponent attains D = max i.d over the support.
  MultiPoly g_d;
};

LeadingForm leading_form(const MultiPoly& f, const std::vector<long>& d);

struct SpecTuple {
  std::vector<UniPoly> x;
  std::vector<long> d;
  std::vector<long> n;
  Int T;
  RationalVector e;
  /// floor(T^{e_i}): the symmetric range of the non-leading coefficients.
  std::vector<Int> coeff_bound;
};

struct SpecOptions {
  /// Test hook: use these x_i instead of drawing them.
  std::optional<std::vector<UniPoly>> forced_x;
  /// Leading coefficients to use instead of pick_n on the leading form.
  std::optional<std::vector<long>> forced_n;
  bool compute_verdicts = true;
  FactorEffort effort;
};

struct SpecResult {
  SpecTuple spec;
  UniPoly F;
  long D = 0;
  /// g_d(n), the predicted leading coefficient of F.
  Int C;
  /// F vanished or its degree dropped below D.
  bool degenerate = false;
  IrreducibilityVerdict F_verdict;
  std::vector<IrreducibilityVerdict> x_verdicts;
  /// Every x_i of positive degree was proved irreducible (constants are exempt).
  bool x_irreducible = false;
  /// E = max_h h.e over the corners of f.
  Rat E;
  /// Explicit bound sum |a_i| prod ((d_j + 1) max(n_j, floor T^{e_j}))^{i_j} on the height of F.
  Int height_bound;
  bool height_ok = false;
  /// Partial-derivative witness of F as a solution modulo itself (-1 when not checked).
  int nonsingular_witness = -1;
};

/// Draws x_i = n_i t^{d_i} + (coefficients uniform in [-floor T^{e_i}, floor T^{e_i}]) and
/// evaluates F = f(x(t)). Deterministic in (seed, parameters).
SpecResult random_spec(const MultiPoly& f, const std::vector<long>& d, const RationalVector& e, const Int& T,
                       std::uint64_t seed, const SpecOptions& options = {});

struct NonsingularCheck {
  bool nonsingular = false;
  int witness = -1;  // smallest j with d f / d x_j (u) != 0 mod P
};

/// Throws NotASolution when P does not divide f(u).
NonsingularCheck check_nonsingular(const MultiPoly& f, const std::vector<UniPoly>& u, const UniPoly& P);

struct PolySolution {
  UniPoly modulus;
  std::vector<UniPoly> u;
  int witness = -1;
};

/// Solution modulo P^e from a nonsingular solution modulo an irreducible P. Works over Q and
/// clears denominators at the end by scaling every coordinate (f homogeneous).
PolySolution hensel_lift(const MultiPoly& f, const PolySolution& sol, int e);

/// Solution modulo the product of pairwise coprime moduli. Throws NotCoprime.
PolySolution crt_combine(const MultiPoly& f, const std::vector<PolySolution>& parts);

/// Coordinates of degree < deg G with G | f(u), by the scale-and-subtract reduction.
std::vector<UniPoly> reduce_min(const MultiPoly& f, const std::vector<UniPoly>& y, const UniPoly& G);

struct QuotientForm {
  PolyOverT g;
  std::vector<ExponentVector> corners_f;
  std::vector<ExponentVector> corners_g;
  /// u is nonsingular modulo every irreducible factor of G.
  bool nonsingular = false;
};

/// g(x)[t] = f(x_1 G + u_1, ..., x_m G + u_m) / G with the corner identity checked.
/// Throws NotDivisible or CornerMismatch.
QuotientForm quotient_form(const MultiPoly& f, const UniPoly& G, const std::vector<UniPoly>& u);

/// Degree over Q of x(alpha) for a root alpha of an irreducible F, from the characteristic
/// polynomial Res_t(F(t), s - x(t)).
int field_degree(const UniPoly& F, const UniPoly& x);

}  // namespace hypdeg
