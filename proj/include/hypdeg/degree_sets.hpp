#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hypdeg/numeric.hpp"
#include "hypdeg/polytope.hpp"

namespace hypdeg {

/// Jacobsthal's function: the largest gap between consecutive integers coprime to D.
/// Computed over one period of length rad(D); throws BoundsTooLarge if rad(D) > 1e8.
long jacobsthal(long D);

/// d1, d2 > 0 coprime with i1*d1 + i2*d2 = D near (r1, r2) * D / (i1 r1 + i2 r2), built as in
/// the proof (nearest admissible N, then the smallest shift k = 0, 1, -1, ...). Throws DTooSmall
/// when no positive coprime pair satisfies the proximity bounds.
std::pair<long, long> euclid2(long i1, long i2, const Rat& r1, const Rat& r2, long D);

/// d >= 1 with sum d_j i_j = D, gcd(d) = 1 and the multi-variable proximity bounds.
/// Requires gcd(i) | D (PreconditionFailed otherwise); DTooSmall when the bounds fail.
std::vector<long> euclid_m(const std::vector<long>& i, const RationalVector& r, long D);

/// Right-hand side of the proximity bound for coordinate l (0-based).
Rat euclid_bound(const std::vector<long>& i, long D, std::size_t l);

/// d with gcd 1, h.d = D and h.d > h'.d for every other corner. r must lie in the open region
/// of h (RegionViolated otherwise, also when the constructed d fails domination).
std::vector<long> prop_euclid(const Polytope& H, const ExponentVector& h, const RationalVector& r, long D);

struct SemigroupWindow {
  std::vector<long> generators;
  long bound = 0;
  std::vector<bool> member;  // index 0..bound
  /// Smallest c with [c, bound] all members, reported when gcd(generators) = 1 and the window
  /// is at least 2 * max(generator)^2 long.
  std::optional<long> conductor;

  /// Largest non-member in the window (-1 if none).
  long largest_gap() const;
};

SemigroupWindow frobenius_window(std::vector<long> generators, long bound);

/// Per-variable degree bounds deg_{x_j} taken from H itself: max over corners of h_j.
std::vector<int> degrees_from_polytope(const Polytope& H);

/// S_h(n) restricted to [1, bound]: values h.d - n for d >= n coordinatewise with gcd(d) = 1,
/// some d_j >= n + degx_j, and h.d >= i.d for all corners i.
std::vector<long> S_h(const Polytope& H, const ExponentVector& h, long n, const std::vector<int>& degx, long bound);

struct DegreeWindow {
  long G = 0;
  long bound = 0;
  std::vector<bool> member;     // index 0..bound; D(H)_k at the last iteration
  std::vector<long> exceptions; // multiples of G in [1, bound] that are not members
  bool fixed_point = false;
  int iterations = 0;
  /// Membership window of every iteration, D_0 first.
  std::vector<std::vector<bool>> history;
};

/// Fixed-point iteration D_{k+1} = union of S_h(n) over n in Frob(D_k), inside [0, bound].
/// Throws WindowTooSmall when a non-member multiple of G lies in the upper half of the window.
DegreeWindow dh_inf(const Polytope& H, const std::vector<int>& degx, long bound);

/// Same iteration seeded with D(H)_0 together with extra known degrees; G = gcd(G(H), extras).
DegreeWindow dc_inf_augment(const Polytope& H, const std::vector<int>& degx, const std::vector<long>& extras, long bound);

}  // namespace hypdeg
