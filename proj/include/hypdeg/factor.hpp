#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hypdeg/unipoly.hpp"

namespace hypdeg {

enum class VerdictStatus { Irreducible, Factored, Unknown };

std::string_view verdict_name(VerdictStatus s);

struct IrreducibilityVerdict {
  VerdictStatus status = VerdictStatus::Unknown;
  /// Set when status is Factored: primitive factors with multiplicities (content dropped).
  std::vector<std::pair<UniPoly, int>> factors;
  std::string witness;
};

struct Factorization {
  /// g == content * prod(factor^mult).
  Rat content;
  std::vector<std::pair<UniPoly, int>> factors;
  /// False when subset recombination ran out of budget; the leftover cofactor is then
  /// listed as one factor without an irreducibility guarantee.
  bool complete = true;
};

struct FactorEffort {
  int primes = 5;
  long max_subsets = 4096;
  std::uint64_t seed = 1;
};

/// Monic irreducible factors of g mod p with multiplicities, coefficients in [0, p).
/// Throws BadReduction when p divides the leading coefficient.
std::vector<std::pair<UniPoly, int>> factor_mod_p(const UniPoly& g, std::uint64_t p, std::uint64_t seed = 1);

/// Factorization over Z by square-free decomposition, a good prime, Hensel lifting and
/// brute-force recombination. Factors are primitive with positive leading coefficient,
/// sorted by degree then coefficients.
Factorization factor_over_Z(const UniPoly& g, const FactorEffort& effort = {});

/// Three-valued irreducibility decision over Q; Irreducible is only returned with a proof.
IrreducibilityVerdict is_irreducible_Q(const UniPoly& g, const FactorEffort& effort = {});

}  // namespace hypdeg
