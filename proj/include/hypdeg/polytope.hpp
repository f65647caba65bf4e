#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hypdeg/multipoly.hpp"
#include "hypdeg/numeric.hpp"

namespace hypdeg {

/// Corner set H of a support, with per-corner coordinate gcds and cached integer witnesses.
struct Polytope {
  int m = 0;
  /// Common coordinate sum of the corners, or -1 when the input was not homogeneous.
  int d = 0;
  std::vector<ExponentVector> corners;  // sorted
  std::vector<long> gcds;               // gcds[k] = g(corners[k])
  /// witnesses[k] is an integer v >= 0 with corners[k].v > i.v for every other support point i.
  std::vector<IntVector> witnesses;

  long index_G() const;
  /// Position of h among the corners, or -1.
  int find(const ExponentVector& h) const;
};

/// Exponent vectors of the nonzero terms; throws NotHomogeneous for mixed degrees.
std::vector<ExponentVector> support(const MultiPoly& f);

/// Decides corner-ness of h inside I with an exact simplex; on success stores an integer witness.
bool is_corner(const std::vector<ExponentVector>& I, const ExponentVector& h, IntVector* witness = nullptr);

/// Corners of a homogeneous support (throws NotHomogeneous otherwise).
Polytope corners(const std::vector<ExponentVector>& I);

/// Corners of an arbitrary finite point set (no homogeneity requirement); d is set to -1
/// unless all points share a coordinate sum.
Polytope corners_general(const std::vector<ExponentVector>& I);

/// gcd of the coordinates of h (0 for the zero vector).
long coordinate_gcd(const ExponentVector& h);

struct Restriction {
  std::vector<ExponentVector> points;  // distinct projections, sorted
  int degree = 0;                      // max coordinate sum
};

/// Projection of the corners onto the coordinates in J (0-based indices).
Restriction restrict_J(const Polytope& H, const std::vector<int>& J);

/// For every coordinate j there are corners h, i with h_j = 0 < i_j.
bool validity_flag(const Polytope& H);

/// Newton polytope of f: corners(support(f)).
Polytope newton_polytope(const MultiPoly& f);

namespace families {
/// {d e_j : j = 1..m}
std::vector<ExponentVector> diagonal(int m, int d);
/// Homogenized support of b y^2 = g(x) with g(0) != 0 and deg g = d: {(0,2,d-2)} and (i,0,d-i).
std::vector<ExponentVector> hyperelliptic(int d);
/// {(d,0,0), (0,0,d), (0,q,d-q)}
std::vector<ExponentVector> superelliptic(int q, int d);
/// {(a,b,0), (0,a,b), (b,0,a)}
std::vector<ExponentVector> symmetric(int a, int b);
}  // namespace families

}  // namespace hypdeg
