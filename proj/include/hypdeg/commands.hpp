#pragma once

#include <cstdint>
#include <string>

#include "hypdeg/json_io.hpp"

namespace hypdeg {

/// The CLI subcommands as functions from text arguments to JSON documents; shared by the
/// command-line tool and the Python module. Lists are comma-separated, J is 1-based.

json cmd_polytope(const std::string& poly);
/// mode: "exact", "lower" or "" (exact without J, lower with J).
json cmd_exp(const std::string& poly, const std::string& J, std::string mode, std::uint64_t seed);
json cmd_degrees(const std::string& poly, long bound, const std::string& extras);
/// With modulus and solution the draw specializes the quotient form instead of f.
json cmd_specialize(const std::string& poly, const std::string& degrees, long T, std::uint64_t seed,
                    const std::string& modulus, const std::string& solution);
/// Descends from point, or ascends from the rational point `from` first.
json cmd_springer(const std::string& poly, const std::string& point, const std::string& from, int k,
                  std::uint64_t seed);
json cmd_coray(const std::string& poly, const std::string& point, const std::string& from, std::uint64_t seed);
/// Without a point the base is the first integral point with |x| <= search.
json cmd_hyper(const std::string& f, const std::string& targets, const std::string& point, long search,
               std::uint64_t seed);
/// probe < 0 skips the rational-point search.
json cmd_certify_no_odd(const std::string& f, const std::string& d, long probe);
json cmd_certify_index(const std::string& F, long p, long m, long probe);
/// csv may be empty.
json cmd_experiment_json(const json& config, const std::string& csv);
json cmd_experiment(const std::string& path, const std::string& csv);
json cmd_probe_rih(const std::string& poly, int deg, long coeff);

}  // namespace hypdeg
