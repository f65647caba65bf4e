#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypdeg/factor.hpp"
#include "hypdeg/multipoly.hpp"

namespace hypdeg {

/// An algebraic point: coordinates x_j(alpha) for a root alpha of the irreducible minpoly g.
struct PointRep {
  UniPoly g;
  std::vector<UniPoly> coords;  // reduced mod g
  IrreducibilityVerdict verdict;

  int degree() const { return g.degree(); }
};

/// Degree-1 PointRep with minpoly t and the given constant coordinates.
PointRep rational_point(const IntVector& v);

struct PointCheck {
  bool ok = false;
  std::string reason;
};

/// Independent re-check: g irreducible over Q and F(coords) = 0 mod g. For projective F the
/// coordinates must not all vanish at alpha.
PointCheck verify_point(const MultiPoly& F, const PointRep& P, bool projective);

/// The primitive integer vector of a degree-1 point.
IntVector rational_coordinates(const PointRep& P);

/// y^2 - f(x) in the variables (x, y); f must be integral.
MultiPoly hyperelliptic_equation(const UniPoly& f);

/// a y^q - g(x) in the variables (x, y); g must be integral.
MultiPoly superelliptic_equation(const Int& a, int q, const UniPoly& g);

struct DescentOptions {
  std::uint64_t seed = 1;
  /// Re-randomizations of one representative before giving up.
  int retries = 32;
  FactorEffort effort;
};

struct DescentTrace {
  PointRep point;
  /// Degrees of the points visited, starting with the input.
  std::vector<int> degrees;
};

/// Odd-degree point on a quadric down to a rational point.
/// Throws EvenDegreeInput, NotASolution, DegreeDropAnomaly.
DescentTrace springer_descent(const MultiPoly& F, const PointRep& P, const DescentOptions& options = {});

/// A point of degree 2k+1 from the rational point Q: the roots of F(t x(t) + Q)/t.
/// Throws NotASolution when F(Q) != 0, BudgetExhausted.
PointRep springer_ascend(const MultiPoly& F, const IntVector& Q, int k, std::uint64_t seed, int budget = 64);

/// Degree-2 point on a cubic to a rational point through the linear h = F(x(t))/g.
/// Throws PreconditionFailed, NotASolution, DegenerateH.
PointRep coray_descent(const MultiPoly& F, const PointRep& P, const DescentOptions& options = {});

/// A degree-2 point on a cubic from the rational point Q: the roots of F(t a + Q)/t.
PointRep coray_ascend(const MultiPoly& F, const IntVector& Q, std::uint64_t seed, int budget = 64);

struct ConstructionOptions {
  std::uint64_t seed = 1;
  /// Draws per target.
  int budget = 64;
  /// Coefficients of the free polynomials are drawn from [-coeff_bound, coeff_bound].
  long coeff_bound = 10;
  FactorEffort effort;
};

/// Points of the requested degrees on y^2 = f(x), deg f = 2g+2, from a rational point or a
/// point of odd degree m. Reachable: every T >= g+1 (rational), every T >= 2g+2-m (odd m).
/// Throws SquareLeadingCoeff, TargetUnreachable, BudgetExhausted.
std::vector<PointRep> hyperelliptic_degrees(const UniPoly& f, const PointRep& P, const std::vector<long>& targets,
                                            const ConstructionOptions& options = {});

/// Points of degree 2k on y^2 = f(x) for any k >= 1: x generates a degree-k field and y its
/// quadratic extension.
PointRep hyperelliptic_even_point(const UniPoly& f, long k, const ConstructionOptions& options = {});

struct Superelliptic {
  Int a = 1;
  int q = 2;
  UniPoly g;
  /// A nonsingular rational point (x, y) of a y^q = g(x), if one is known.
  std::optional<RationalVector> base;
};

/// Points of degree T in Frob(d-1, q) with d = deg g (only multiples of q without a base point).
/// Throws PreconditionFailed, SingularInput, TargetUnreachable, BudgetExhausted.
std::vector<PointRep> superelliptic_frob(const Superelliptic& c, const std::vector<long>& targets,
                                         const ConstructionOptions& options = {});

/// Degrees T = (d-1) n + d k + max(0, deg_j f - k) deg_j f with n in Frob(m_1, ..., m_r).
/// Returns the multiplicities e_i and k, or nullopt.
struct FrobDecomposition {
  std::vector<int> e;
  long n = 0;
  long k = 0;
};
std::optional<FrobDecomposition> frob_decompose(long target, int d, int degj, const std::vector<int>& m);

/// Points on the projective curve f = 0 of the target degrees, built from the known points.
/// Throws PreconditionFailed, SingularInput, TargetUnreachable, BudgetExhausted.
std::vector<PointRep> frob_subset_points(const MultiPoly& f, const std::vector<PointRep>& known, int j,
                                         const std::vector<long>& targets, const ConstructionOptions& options = {});

enum class CertificateKind { NoOddDegree, IndexDividesM };

struct Certificate {
  CertificateKind kind = CertificateKind::NoOddDegree;
  bool certified = false;
  /// Every hypothesis re-checked from scratch after the search.
  bool verified = false;
  long p = 0;
  long m = 0;
  std::vector<std::string> evidence;
  std::string conclusion;
  /// Why certification failed.
  std::string reason;
};

std::string_view certificate_kind_name(CertificateKind k);

/// d z^2 = f(x, y) has no point over any odd-degree field, from a prime p || d with f
/// irreducible mod p. f is given as f(t, 1) of even degree.
Certificate certify_no_odd(const UniPoly& f, const Int& d);

/// Every point field of F(x, y) = 0 has degree divisible by m, from F = f_m - p g with f_m(t, 1)
/// irreducible mod p and p not dividing g(0, 0).
Certificate certify_index_m(const MultiPoly& F, long p, long m);

struct ProbeResult {
  long examined = 0;
  /// Projective points found, at most a handful.
  std::vector<IntVector> found;
};

/// Rational points of d z^2 = f(x, y) with coprime |x|, |y| <= height.
ProbeResult probe_no_odd(const UniPoly& f, const Int& d, long height);

/// Rational points of the conic F = 0 (total degree 2) whose x, y numerators after clearing the
/// common denominator lie in [-height, height].
ProbeResult probe_conic(const MultiPoly& F, long height);

}  // namespace hypdeg
