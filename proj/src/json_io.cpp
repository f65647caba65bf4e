#include "hypdeg/json_io.hpp"

#include <ostream>
#include <set>

#include "hypdeg/error.hpp"
#include "hypdeg/parse.hpp"

namespace hypdeg {

namespace {

json strings(const std::vector<std::string>& v) { return json(v); }

template <class T>
json list(const std::vector<T>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ConfigError, what); }

Rat rat_from(const json& j, const std::string& key) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) {
    try {
      Rat q(j.get<std::string>());
      q.canonicalize();
      return q;
    } catch (const std::invalid_argument&) {
    }
  }
  bad(key + ": expected an integer or a rational string");
}

long long_from(const json& j, const std::string& key) {
  if (!j.is_number_integer()) bad(key + ": expected an integer");
  return j.get<long>();
}

std::vector<long> longs_from(const json& j, const std::string& key) {
  if (!j.is_array()) bad(key + ": expected an array");
  std::vector<long> out;
  for (const auto& x : j) out.push_back(long_from(x, key));
  return out;
}

}  // namespace

json to_json(const Int& a) { return a.get_str(); }

json to_json(const Rat& q) { return q.get_str(); }

json to_json(const UniPoly& p) { return p.to_string(); }

json to_json(const MultiPoly& f) { return f.to_string(); }

json to_json(const IrreducibilityVerdict& v) {
  json out{{"status", verdict_name(v.status)}};
  if (!v.witness.empty()) out["witness"] = v.witness;
  if (!v.factors.empty()) {
    json fs = json::array();
    for (const auto& [p, e] : v.factors) fs.push_back({{"factor", p.to_string()}, {"multiplicity", e}});
    out["factors"] = fs;
  }
  return out;
}

json to_json(const Polytope& H) {
  json corners = json::array();
  for (std::size_t k = 0; k < H.corners.size(); ++k) {
    json w = json::array();
    for (const Int& x : H.witnesses[k]) w.push_back(to_json(x));
    corners.push_back({{"h", H.corners[k]}, {"g", H.gcds[k]}, {"witness", w}});
  }
  return {{"m", H.m}, {"d", H.d}, {"corners", corners}, {"G", H.index_G()}, {"valid", validity_flag(H)}};
}

json to_json(const ExpResult& r) {
  return {{"mode", exp_mode_name(r.mode)}, {"value", to_json(r.value)},   {"h_r", r.h_r},
          {"h_e", r.h_e},                  {"r", list(r.r)},               {"e", list(r.e)},
          {"strategy", r.strategy}};
}

json run_lengths(const std::vector<bool>& member) {
  json out = json::array();
  std::size_t start = 0;
  for (std::size_t i = 1; i <= member.size(); ++i) {
    if (i == member.size() || member[i] != member[start]) {
      out.push_back({start, i - 1, static_cast<bool>(member[start])});
      start = i;
    }
  }
  return out;
}

json to_json(const DegreeWindow& w) {
  return {{"G", w.G},
          {"bound", w.bound},
          {"membership", run_lengths(w.member)},
          {"exceptions", w.exceptions},
          {"fixed_point", w.fixed_point},
          {"iterations", w.iterations}};
}

json to_json(const SemigroupWindow& w) {
  json out{{"generators", w.generators},
           {"bound", w.bound},
           {"membership", run_lengths(w.member)},
           {"largest_gap", w.largest_gap()}};
  out["conductor"] = w.conductor ? json(*w.conductor) : json(nullptr);
  return out;
}

json to_json(const SpecResult& r) {
  json coeff_bound = json::array();
  for (const Int& b : r.spec.coeff_bound) coeff_bound.push_back(to_json(b));
  json spec{{"x", list(r.spec.x)}, {"d", r.spec.d},         {"n", r.spec.n},
            {"T", to_json(r.spec.T)}, {"e", list(r.spec.e)}, {"coeff_bound", coeff_bound}};
  return {{"spec", spec},
          {"F", to_json(r.F)},
          {"D", r.D},
          {"C", to_json(r.C)},
          {"degenerate", r.degenerate},
          {"F_verdict", to_json(r.F_verdict)},
          {"x_verdicts", list(r.x_verdicts)},
          {"x_irreducible", r.x_irreducible},
          {"E", to_json(r.E)},
          {"height_bound", to_json(r.height_bound)},
          {"height_ok", r.height_ok},
          {"nonsingular_witness", r.nonsingular_witness}};
}

json to_json(const PointRep& P) {
  return {{"degree", P.degree()}, {"g", to_json(P.g)}, {"coords", list(P.coords)}, {"verdict", to_json(P.verdict)}};
}

json to_json(const DescentTrace& t) { return {{"point", to_json(t.point)}, {"degrees", t.degrees}}; }

json to_json(const Certificate& c) {
  json out{{"kind", certificate_kind_name(c.kind)},
           {"certified", c.certified},
           {"verified", c.verified},
           {"p", c.p},
           {"m", c.m},
           {"evidence", strings(c.evidence)},
           {"conclusion", c.conclusion}};
  if (!c.reason.empty()) out["reason"] = c.reason;
  return out;
}

json to_json(const ProbeResult& r) {
  json found = json::array();
  for (const auto& v : r.found) found.push_back(list(v));
  return {{"examined", r.examined}, {"found", found}};
}

json to_json(const RihResult& r) {
  json hist = json::array();
  for (const auto& [mult, count] : r.histogram) hist.push_back({mult, count});
  return {{"tuples", r.tuples},
          {"images", r.images},
          {"max_multiplicity", r.max_multiplicity},
          {"shared_fraction", r.shared_fraction},
          {"histogram", hist}};
}

json to_json(const CountRecord& c, bool timing) {
  json out{{"T", c.T},
           {"attempts", c.attempts},
           {"irreducible", c.irreducible},
           {"unknown", c.unknown},
           {"distinct", c.distinct},
           {"buckets", c.buckets},
           {"cumulative_distinct", c.cumulative_distinct},
           {"cumulative_buckets", c.cumulative_buckets},
           {"max_disc", to_json(c.max_disc)}};
  if (timing) out["elapsed_seconds"] = c.elapsed_seconds;
  return out;
}

json to_json(const ExperimentResult& r, bool timing) {
  json records = json::array();
  for (const auto& c : r.records) records.push_back(to_json(c, timing));
  json out{{"degrees", r.degrees}, {"D", r.D}, {"records", records}};
  out["growth_exponent"] = r.growth_exponent ? json(*r.growth_exponent) : json(nullptr);
  out["exp_lower"] = to_json(r.exp_lower);
  out["half_exp"] = to_json(r.half_exp);
  out["half_exp_approx"] = r.half_exp.get_d();
  out["banner"] = r.banner;
  return out;
}

MultiPoly multipoly_from_json(const json& j) {
  require(j.is_array(), ErrorCode::ParseError, "polynomial JSON must be a list of [exponents, coeff]");
  int m = -1;
  MultiPoly f;
  bool first = true;
  for (const auto& term : j) {
    require(term.is_array() && term.size() == 2 && term[0].is_array(), ErrorCode::ParseError,
            "each term must be [[e1, ..., em], coeff]");
    ExponentVector e;
    for (const auto& x : term[0]) {
      require(x.is_number_integer() && x.get<long>() >= 0, ErrorCode::ParseError, "exponents must be naturals");
      e.push_back(x.get<int>());
    }
    if (first) {
      m = static_cast<int>(e.size());
      f = MultiPoly(m);
      first = false;
    }
    require(static_cast<int>(e.size()) == m, ErrorCode::ParseError, "exponent vectors differ in length");
    Int c;
    if (term[1].is_number_integer()) {
      c = Int(term[1].get<long>());
    } else {
      require(term[1].is_string() && c.set_str(term[1].get<std::string>(), 10) == 0, ErrorCode::ParseError,
              "coefficients must be integers");
    }
    f.add_term(e, c);
  }
  require(!first, ErrorCode::ParseError, "empty polynomial");
  return f;
}

MultiPoly multipoly_from_text(const std::string& text, int nvars) {
  const auto pos = text.find_first_not_of(" \t\n");
  if (pos != std::string::npos && text[pos] == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
    return multipoly_from_json(j);
  }
  return parse_multipoly(text, nvars);
}

PointRep point_from_text(const std::string& text) {
  std::vector<UniPoly> parts = parse_unipoly_list(text);
  require(parts.size() >= 2, ErrorCode::ParseError, "a point needs a minpoly and at least one coordinate");
  PointRep P;
  P.g = parts[0].primitive_part();
  require(P.g.degree() >= 1, ErrorCode::ParseError, "the minpoly must have positive degree");
  for (std::size_t i = 1; i < parts.size(); ++i) P.coords.push_back(parts[i] % P.g);
  return P;
}

ExperimentConfig config_from_json(const json& j) {
  if (!j.is_object()) bad("config must be a JSON object");
  static const std::set<std::string> known{"f", "d", "D", "corner", "direction", "e", "heights",
                                           "seed", "budget", "J", "timing"};
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) bad("unknown key '" + key + "'");
  ExperimentConfig cfg;
  if (!j.contains("f")) bad("missing key 'f'");
  try {
    cfg.f = j["f"].is_string() ? multipoly_from_text(j["f"].get<std::string>()) : multipoly_from_json(j["f"]);
  } catch (const Error& e) {
    bad(std::string("f: ") + e.what());
  }
  if (j.contains("d")) cfg.d = longs_from(j["d"], "d");
  if (j.contains("D")) cfg.D = long_from(j["D"], "D");
  if (j.contains("corner")) {
    ExponentVector h;
    for (long x : longs_from(j["corner"], "corner")) h.push_back(static_cast<int>(x));
    cfg.corner = h;
  }
  auto rats = [&](const char* key) {
    if (!j[key].is_array()) bad(std::string(key) + ": expected an array");
    RationalVector v;
    for (const auto& x : j[key]) v.push_back(rat_from(x, key));
    return v;
  };
  if (j.contains("direction")) cfg.direction = rats("direction");
  if (j.contains("e")) cfg.e = rats("e");
  if (!j.contains("heights")) bad("missing key 'heights'");
  cfg.heights = longs_from(j["heights"], "heights");
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) bad("seed: expected a non-negative integer");
    cfg.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("budget")) cfg.budget = long_from(j["budget"], "budget");
  if (j.contains("J"))
    for (long x : longs_from(j["J"], "J")) cfg.J.push_back(static_cast<int>(x) - 1);
  if (j.contains("timing")) {
    if (!j["timing"].is_boolean()) bad("timing: expected a boolean");
    cfg.timing = j["timing"].get<bool>();
  }
  validate(cfg);
  return cfg;
}

void write_experiment_csv(std::ostream& out, const ExperimentResult& r) {
  out << "T,X,attempts,irreducible,unknown,distinct,buckets,cumulative_distinct,cumulative_buckets,fit\n";
  const std::string fit = r.growth_exponent ? std::to_string(*r.growth_exponent) : "";
  for (const auto& c : r.records) {
    out << c.T << ',' << c.max_disc.get_str() << ',' << c.attempts << ',' << c.irreducible << ',' << c.unknown << ','
        << c.distinct << ',' << c.buckets << ',' << c.cumulative_distinct << ',' << c.cumulative_buckets << ',' << fit
        << '\n';
  }
}

}  // namespace hypdeg
