#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "hypdeg/applications.hpp"
#include "hypdeg/degree_sets.hpp"
#include "hypdeg/exp_engine.hpp"
#include "hypdeg/harness.hpp"
#include "hypdeg/polytope.hpp"
#include "hypdeg/specializer.hpp"

namespace hypdeg {

using json = nlohmann::ordered_json;

/// Big integers and rationals are written as decimal strings so no precision is lost.
json to_json(const Int& a);
json to_json(const Rat& q);
json to_json(const UniPoly& p);
json to_json(const MultiPoly& f);
json to_json(const IrreducibilityVerdict& v);
json to_json(const Polytope& H);
json to_json(const ExpResult& r);
json to_json(const DegreeWindow& w);
json to_json(const SemigroupWindow& w);
json to_json(const SpecResult& r);
json to_json(const PointRep& P);
json to_json(const DescentTrace& t);
json to_json(const Certificate& c);
json to_json(const ProbeResult& r);
json to_json(const RihResult& r);
/// elapsed_seconds is only included when timing is set, so untimed output is reproducible.
json to_json(const CountRecord& c, bool timing);
json to_json(const ExperimentResult& r, bool timing);

/// Run-length encoding of a membership window: [[start, end, member], ...].
json run_lengths(const std::vector<bool>& member);

/// Text grammar, or the JSON form [[[e1, ..., em], coeff], ...] when the text starts with '['.
MultiPoly multipoly_from_text(const std::string& text, int nvars = -1);
MultiPoly multipoly_from_json(const json& j);

/// "g;x1;...;xm": minpoly followed by the coordinates, reduced mod g.
PointRep point_from_text(const std::string& text);

/// Throws ConfigError for missing, mistyped or unknown keys.
ExperimentConfig config_from_json(const json& j);

/// One row per height: T, X (max disc), the counts and the fitted exponent.
void write_experiment_csv(std::ostream& out, const ExperimentResult& r);

}  // namespace hypdeg
