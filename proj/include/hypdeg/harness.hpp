#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypdeg/multipoly.hpp"
#include "hypdeg/polytope.hpp"

namespace hypdeg {

struct ExperimentConfig {
  MultiPoly f;
  /// Either the degree vector d or a target degree D (with an optional corner and direction
  /// handed to prop_euclid).
  std::optional<std::vector<long>> d;
  std::optional<long> D;
  std::optional<ExponentVector> corner;
  std::optional<RationalVector> direction;
  /// Coefficient exponents e; all ones when empty.
  RationalVector e;
  std::vector<long> heights;
  std::uint64_t seed = 1;
  long budget = 100;
  /// 0-based coordinates for the Exp_J comparison; all coordinates when empty.
  std::vector<int> J;
  bool timing = false;
};

/// Throws ConfigError on anything inconsistent.
void validate(const ExperimentConfig& cfg);

/// The degree vector the run uses: cfg.d, or prop_euclid on the requested D.
std::vector<long> resolve_degrees(const ExperimentConfig& cfg);

struct CountRecord {
  long T = 0;
  long attempts = 0;
  long irreducible = 0;
  long unknown = 0;
  /// Distinct primitive polynomials among the irreducible draws at this T.
  long distinct = 0;
  /// Buckets keyed by (degree, squarefree kernel of the discriminant) at this T.
  long buckets = 0;
  /// The same two counts over every height up to and including T.
  long cumulative_distinct = 0;
  long cumulative_buckets = 0;
  /// Largest |disc| among irreducible draws up to and including T.
  Int max_disc;
  double elapsed_seconds = 0;
};

struct ExperimentResult {
  std::vector<long> degrees;
  long D = 0;
  std::vector<CountRecord> records;
  /// Least-squares slope of log(cumulative distinct) against log(max disc); nullopt with fewer
  /// than two usable heights.
  std::optional<double> growth_exponent;
  /// Certified lower bound for Exp_J(H) and half of it, the comparison value.
  Rat exp_lower;
  Rat half_exp;
  std::string banner;
};

/// Draws budget specializations per height and counts fields by the two proxies.
/// Deterministic in the config: the draws at (T, i) depend only on (seed, T, i).
ExperimentResult run_count(const ExperimentConfig& cfg);

/// Sign times the product of primes with odd exponent; primes below 2^17 are removed by trial
/// division and a square cofactor is dropped, a non-square cofactor is kept whole.
Int squarefree_kernel(const Int& n);

struct DiscInfo {
  Rat disc;
  bool within_bound = false;
};

/// Polynomial discriminant of an irreducible F with the Hadamard-type bound check.
DiscInfo disc_of_spec(const UniPoly& F);

struct RihResult {
  long tuples = 0;
  long images = 0;
  long max_multiplicity = 0;
  /// Images hit more than once, as a share of all images.
  double shared_fraction = 0;
  /// multiplicity -> number of images with that multiplicity.
  std::map<long, long> histogram;
};

/// Enumerates every tuple of polynomials of degree <= deg with coefficients in [-coeff, coeff]
/// and histograms the multiplicities of f(x(t)). Throws BoundsTooLarge past the cap.
RihResult rih_probe(const MultiPoly& f, int deg, long coeff, long cap = 2000000);

}  // namespace hypdeg
