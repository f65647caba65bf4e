#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "hypdeg/unipoly.hpp"

namespace hypdeg {

/// Dense polynomial over F_p (p < 2^31 prime), coefficients low to high, no trailing zeros.
struct FpPoly {
  std::uint64_t p = 2;
  std::vector<std::uint64_t> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  std::uint64_t lead() const { return c.empty() ? 0 : c.back(); }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.p == b.p && a.c == b.c; }
};

std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p);
std::uint64_t fp_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);

/// Reduction of an integral UniPoly mod p (coefficients must be integral).
FpPoly fp_reduce(const UniPoly& g, std::uint64_t p);
/// Lift with coefficients in [0, p).
UniPoly fp_lift(const FpPoly& g);

FpPoly fp_add(const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b);
FpPoly fp_scale(const FpPoly& a, std::uint64_t s);
std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b);
FpPoly fp_rem(const FpPoly& a, const FpPoly& b);
FpPoly fp_monic(const FpPoly& a);
FpPoly fp_gcd(const FpPoly& a, const FpPoly& b);
FpPoly fp_derivative(const FpPoly& a);
/// base^e mod m.
FpPoly fp_powmod(const FpPoly& base, const Int& e, const FpPoly& m);

struct FpExtGcd {
  FpPoly g, s, t;  // s*a + t*b = g, g monic
};
FpExtGcd fp_ext_gcd(const FpPoly& a, const FpPoly& b);

/// Complete factorization of a nonzero polynomial into monic irreducibles with multiplicities,
/// sorted by (degree, coefficients). The leading coefficient is dropped.
std::vector<std::pair<FpPoly, int>> fp_factor(const FpPoly& g, std::mt19937_64& rng);

/// Squarefree and with a single irreducible factor.
bool fp_is_irreducible(const FpPoly& g);

}  // namespace hypdeg
