#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hypdeg/numeric.hpp"

namespace hypdeg {

/// Dense univariate polynomial in t over Q; coeffs()[i] is the coefficient of t^i.
/// Trailing zeros are never stored, so the zero polynomial has no coefficients and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);
  UniPoly(std::initializer_list<long> low_to_high);

  static UniPoly constant(const Rat& c);
  static UniPoly monomial(const Rat& c, int degree);
  static UniPoly from_ints(const std::vector<Int>& low_to_high);
  /// The polynomial t.
  static UniPoly t();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(int i) const;
  const Rat& leading() const;

  Rat eval(const Rat& x) const;
  UniPoly derivative() const;
  /// this(inner(t)).
  UniPoly compose(const UniPoly& inner) const;
  UniPoly pow(unsigned e) const;
  UniPoly monic() const;
  UniPoly scaled(const Rat& c) const;
  /// t -> t + shift.
  UniPoly shifted(const Rat& shift) const;

  bool is_integral() const;
  /// Integer coefficients; throws if some coefficient is not integral.
  std::vector<Int> to_ints() const;
  /// Max absolute coefficient.
  Rat height() const;
  /// Integral, coefficient gcd 1, positive leading coefficient, same roots.
  UniPoly primitive_part() const;
  /// The rational c with *this == c * primitive_part().
  Rat content() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rat& c, const UniPoly& a) { return a.scaled(c); }
  friend UniPoly operator-(const UniPoly& a) { return a.scaled(Rat(-1)); }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  /// Order by degree, then coefficient sequence from the constant term up.
  friend bool lex_less(const UniPoly& a, const UniPoly& b);

  std::string to_string(const std::string& var = "t") const;

 private:
  void normalize();
  std::vector<Rat> coeffs_;
};

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

DivMod divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);

/// q with a == b*q; throws NotDivisible when the remainder is nonzero.
UniPoly poly_divide_exact(const UniPoly& a, const UniPoly& b);

/// Monic gcd (zero if both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

struct ExtGcd {
  UniPoly g;  // monic gcd
  UniPoly s;  // s*a + t*b == g
  UniPoly t;
};
ExtGcd ext_gcd(const UniPoly& a, const UniPoly& b);

/// Inverse of a modulo m over Q; throws NotCoprime when gcd(a, m) != 1.
UniPoly inverse_mod(const UniPoly& a, const UniPoly& m);

/// Sylvester-matrix resultant, evaluated by fraction-free elimination.
Rat resultant(const UniPoly& a, const UniPoly& b);

/// disc(g) = (-1)^(n(n-1)/2) Res(g, g') / lc(g); deg g >= 1.
Rat discriminant(const UniPoly& g);

/// Hadamard bound on the Sylvester matrix with its first column divided by lc(g):
/// |disc(g)| <= sqrt(1+n^2) * (n^3+n-1)^((n-1)) * ||g||^(2n-2). Checked exactly on squares.
bool discriminant_within_hadamard_bound(const UniPoly& g, const Rat& disc);

/// The polynomial of degree < xs.size() through the points (xs[k], ys[k]); xs distinct.
UniPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

/// Square-free factorization over Q (Yun): pairs (monic square-free factor, multiplicity).
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& g);

}  // namespace hypdeg
