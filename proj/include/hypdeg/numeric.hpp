#pragma once

// Arbitrary-precision scalars and the handful of integer helpers shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace hypdeg {

using Int = mpz_class;
using Rat = mpq_class;

using IntVector = std::vector<Int>;
using RationalVector = std::vector<Rat>;
using ExponentVector = std::vector<int>;

inline Int int_gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
  Rat r(int_pow(base.get_num(), e), int_pow(base.get_den(), e));
  r.canonicalize();
  return r;
}

/// Floor of the nonnegative real square root.
inline Int int_sqrt(const Int& a) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

inline bool is_perfect_square(const Int& a) {
  return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

inline bool is_probable_prime(const Int& a) { return mpz_probab_prime_p(a.get_mpz_t(), 30) > 0; }

/// Floor division for integers (rounds toward negative infinity).
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Least nonnegative residue.
inline Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (r < 0) r += abs(m);
  return r;
}

inline Int rat_floor(const Rat& q) { return floor_div(q.get_num(), q.get_den()); }

inline Int rat_ceil(const Rat& q) { return -floor_div(-q.get_num(), q.get_den()); }

/// Nearest integer, ties rounded up.
inline Int rat_round(const Rat& q) { return rat_floor(q + Rat(1, 2)); }

/// floor(base^(p/q)) for base >= 1 and a nonnegative rational exponent.
Int floor_rational_power(const Int& base, const Rat& exponent);

std::int64_t to_i64(const Int& a);

Rat parse_rational(const std::string& text);

std::string to_string(const Int& a);
std::string to_string(const Rat& q);

/// Product of the distinct primes dividing n (n > 0); only small factors are supported.
std::uint64_t radical(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// All primes below 2^17 in increasing order.
const std::vector<std::uint32_t>& small_primes();

}  // namespace hypdeg
