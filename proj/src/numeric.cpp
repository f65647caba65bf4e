#include "hypdeg/numeric.hpp"

#include <algorithm>

#include "hypdeg/error.hpp"

namespace hypdeg {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::BadReduction: return "BadReduction";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::InfeasibleH: return "InfeasibleH";
    case ErrorCode::DTooSmall: return "DTooSmall";
    case ErrorCode::RegionViolated: return "RegionViolated";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::NotASolution: return "NotASolution";
    case ErrorCode::SingularInput: return "SingularInput";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::CornerMismatch: return "CornerMismatch";
    case ErrorCode::EvenDegreeInput: return "EvenDegreeInput";
    case ErrorCode::DegreeDropAnomaly: return "DegreeDropAnomaly";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::DegenerateH: return "DegenerateH";
    case ErrorCode::SquareLeadingCoeff: return "SquareLeadingCoeff";
    case ErrorCode::TargetUnreachable: return "TargetUnreachable";
    case ErrorCode::BoundsTooLarge: return "BoundsTooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
  }
  return "Unknown";
}

Int floor_rational_power(const Int& base, const Rat& exponent) {
  require(base >= 1, ErrorCode::PreconditionFailed, "floor_rational_power needs base >= 1");
  require(exponent >= 0, ErrorCode::PreconditionFailed, "negative exponent");
  const unsigned long p = exponent.get_num().get_ui();
  const unsigned long q = exponent.get_den().get_ui();
  Int powered = int_pow(base, p);
  Int root;
  mpz_root(root.get_mpz_t(), powered.get_mpz_t(), q);
  return root;
}

std::int64_t to_i64(const Int& a) {
  require(mpz_fits_slong_p(a.get_mpz_t()) != 0, ErrorCode::PreconditionFailed,
          "integer " + a.get_str() + " does not fit in 64 bits");
  return a.get_si();
}

Rat parse_rational(const std::string& text) {
  Rat q;
  if (q.set_str(text, 10) != 0) throw Error(ErrorCode::ParseError, "bad rational '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Int& a) { return a.get_str(); }

std::string to_string(const Rat& q) { return q.get_str(); }

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t radical(std::uint64_t n) {
  std::uint64_t r = 1;
  for (auto p : prime_factors(n)) r *= p;
  return r;
}

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    constexpr std::uint32_t limit = 1u << 17;
    std::vector<bool> composite(limit, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i < limit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t(i) * i; j < limit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

}  // namespace hypdeg
