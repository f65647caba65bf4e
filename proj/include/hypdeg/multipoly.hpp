#pragma once

#include <map>
#include <string>
#include <vector>

#include "hypdeg/numeric.hpp"
#include "hypdeg/unipoly.hpp"

namespace hypdeg {

/// Sparse integer polynomial in x_1..x_m keyed by exponent vector. Zero coefficients are never stored.
class MultiPoly {
 public:
  using TermMap = std::map<ExponentVector, Int>;

  MultiPoly() = default;
  explicit MultiPoly(int nvars) : m_(nvars) {}
  MultiPoly(int nvars, TermMap terms);

  static MultiPoly constant(int nvars, const Int& c);
  /// The coordinate x_j (0-based j).
  static MultiPoly variable(int nvars, int j);

  int nvars() const { return m_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int coeff(const ExponentVector& e) const;

  /// Adds c*x^e (merging with an existing term).
  void add_term(const ExponentVector& e, const Int& c);

  int total_degree() const;
  bool is_homogeneous() const;
  /// Largest exponent of x_j (0-based); -1 for the zero polynomial.
  int degree_in(int j) const;

  /// d/dx_j (0-based j).
  MultiPoly partial_derivative(int j) const;

  Int evaluate(const IntVector& x) const;
  Rat evaluate(const RationalVector& x) const;
  /// f(x_1(t), ..., x_m(t)).
  UniPoly evaluate_composition(const std::vector<UniPoly>& x) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Int& c, const MultiPoly& a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.m_ == b.m_ && a.terms_ == b.terms_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  std::string to_string() const;

 private:
  int m_ = 0;
  TermMap terms_;
};

/// A polynomial in x_1..x_m whose coefficients lie in Q[t]; used for the quotient form g(x)[t].
using PolyOverT = std::map<ExponentVector, UniPoly>;

std::string to_string(const PolyOverT& g);

}  // namespace hypdeg
