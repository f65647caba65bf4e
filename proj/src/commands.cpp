#include "hypdeg/commands.hpp"

#include <fstream>
#include <optional>
#include <vector>

#include "hypdeg/error.hpp"
#include "hypdeg/parse.hpp"

namespace hypdeg {

namespace {

std::vector<int> zero_based(const std::vector<long>& J, int m) {
  std::vector<int> out;
  for (long j : J) {
    require(j >= 1 && j <= m, ErrorCode::ConfigError, "J entries must lie in 1.." + std::to_string(m));
    out.push_back(static_cast<int>(j) - 1);
  }
  return out;
}

IntVector int_vector(const std::string& text) {
  IntVector v;
  for (long x : parse_int_list(text)) v.push_back(Int(x));
  return v;
}

}  // namespace

json cmd_polytope(const std::string& poly) {
  const MultiPoly f = multipoly_from_text(poly);
  return {{"support", support(f)}, {"polytope", to_json(newton_polytope(f))}};
}

json cmd_exp(const std::string& poly, const std::string& Jtext, std::string mode, std::uint64_t seed) {
  const Polytope H = newton_polytope(multipoly_from_text(poly));
  std::vector<int> J;
  if (!Jtext.empty()) J = zero_based(parse_int_list(Jtext), H.m);
  if (mode.empty()) mode = J.empty() ? "exact" : "lower";
  if (mode == "exact") {
    require(J.empty() || static_cast<int>(J.size()) == H.m, ErrorCode::ConfigError,
            "exact mode needs J = all coordinates");
    return to_json(exp_full(H));
  }
  require(mode == "lower", ErrorCode::ConfigError, "mode must be exact or lower");
  if (!J.empty()) return to_json(exp_J_lower(H, J, ExpStrategy::Numeric, seed));
  // Without J every singleton {j} is admissible; report all of them and the best.
  json singles = json::array();
  std::optional<ExpResult> best;
  for (int j = 0; j < H.m; ++j) {
    ExpResult r = exp_J_lower(H, {j}, ExpStrategy::Numeric, seed);
    singles.push_back({{"J", {j + 1}}, {"result", to_json(r)}});
    if (!best || r.value > best->value) best = r;
  }
  return {{"best", to_json(*best)}, {"singletons", singles}};
}

json cmd_degrees(const std::string& poly, long bound, const std::string& extras) {
  const Polytope H = newton_polytope(multipoly_from_text(poly));
  const std::vector<int> degx = degrees_from_polytope(H);
  const DegreeWindow w =
      extras.empty() ? dh_inf(H, degx, bound) : dc_inf_augment(H, degx, parse_int_list(extras), bound);
  json out = to_json(w);
  out["G_H"] = H.index_G();
  out["valid"] = validity_flag(H);
  return out;
}

json cmd_specialize(const std::string& poly, const std::string& degrees, long T, std::uint64_t seed,
                    const std::string& modulus, const std::string& solution) {
  const MultiPoly f = multipoly_from_text(poly);
  const std::vector<long> d = parse_int_list(degrees);
  require(static_cast<int>(d.size()) == f.nvars(), ErrorCode::ConfigError, "one degree per variable");
  const RationalVector e(d.size(), Rat(1));
  if (modulus.empty() != solution.empty())
    throw Error(ErrorCode::ConfigError, "--modulus and --solution go together");
  if (modulus.empty()) return to_json(random_spec(f, d, e, Int(T), seed));

  // Specialize the quotient form: x_i = y_i G + u_i with y drawn as usual, F = f(x) / G.
  const UniPoly G = parse_unipoly(modulus);
  const std::vector<UniPoly> u = parse_unipoly_list(solution);
  require(u.size() == d.size(), ErrorCode::ConfigError, "one solution coordinate per variable");
  const QuotientForm q = quotient_form(f, G, u);
  SpecOptions opts;
  opts.compute_verdicts = false;
  const SpecResult y = random_spec(f, d, e, Int(T), seed, opts);
  std::vector<UniPoly> x;
  for (std::size_t i = 0; i < u.size(); ++i) x.push_back(y.spec.x[i] * G + u[i]);
  const UniPoly F = poly_divide_exact(f.evaluate_composition(x), G);
  json out{{"quotient", {{"g", to_string(q.g)},
                         {"corners_f", q.corners_f},
                         {"corners_g", q.corners_g},
                         {"nonsingular", q.nonsingular}}}};
  json xs = json::array();
  for (const auto& p : x) xs.push_back(to_json(p));
  out["y"] = to_json(y)["spec"];
  out["x"] = xs;
  out["F"] = to_json(F);
  out["F_verdict"] = to_json(is_irreducible_Q(F));
  return out;
}

json cmd_springer(const std::string& poly, const std::string& point, const std::string& from, int k,
                  std::uint64_t seed) {
  const MultiPoly F = multipoly_from_text(poly);
  DescentOptions opts;
  opts.seed = seed;
  if (!from.empty()) {
    const PointRep up = springer_ascend(F, int_vector(from), k, seed);
    return {{"ascended", to_json(up)}, {"descent", to_json(springer_descent(F, up, opts))}};
  }
  require(!point.empty(), ErrorCode::ConfigError, "give --point or --from");
  return to_json(springer_descent(F, point_from_text(point), opts));
}

json cmd_coray(const std::string& poly, const std::string& point, const std::string& from, std::uint64_t seed) {
  const MultiPoly F = multipoly_from_text(poly);
  DescentOptions opts;
  opts.seed = seed;
  if (!from.empty()) {
    const PointRep up = coray_ascend(F, int_vector(from), seed);
    return {{"ascended", to_json(up)}, {"descent", to_json(coray_descent(F, up, opts))}};
  }
  require(!point.empty(), ErrorCode::ConfigError, "give --point or --from");
  return to_json(coray_descent(F, point_from_text(point), opts));
}

json cmd_hyper(const std::string& ftext, const std::string& targets, const std::string& point, long search,
               std::uint64_t seed) {
  const UniPoly f = parse_unipoly(ftext);
  PointRep P;
  if (!point.empty()) {
    P = point_from_text(point);
  } else {
    bool found = false;
    for (long a = 0; a <= search && !found; ++a) {
      for (long x : {a, -a}) {
        const Rat v = f.eval(Rat(x));
        if (v.get_den() == 1 && v >= 0 && is_perfect_square(v.get_num())) {
          P = rational_point({Int(x), int_sqrt(v.get_num())});
          found = true;
          break;
        }
      }
    }
    require(found, ErrorCode::PreconditionFailed, "no integral point with |x| <= " + std::to_string(search));
  }
  ConstructionOptions opts;
  opts.seed = seed;
  json out{{"base", to_json(P)}, {"points", json::array()}};
  for (const PointRep& Q : hyperelliptic_degrees(f, P, parse_int_list(targets), opts))
    out["points"].push_back(to_json(Q));
  return out;
}

json cmd_experiment(const std::string& path, const std::string& csv) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::ConfigError, "cannot read " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ConfigError, e.what());
  }
  return cmd_experiment_json(j, csv);
}

json cmd_experiment_json(const json& j, const std::string& csv) {
  const ExperimentConfig cfg = config_from_json(j);
  const ExperimentResult r = run_count(cfg);
  if (!csv.empty()) {
    std::ofstream out(csv);
    require(static_cast<bool>(out), ErrorCode::ConfigError, "cannot write " + csv);
    write_experiment_csv(out, r);
  }
  return to_json(r, cfg.timing);
}

json cmd_certify_no_odd(const std::string& ftext, const std::string& dtext, long probe) {
  const UniPoly f = parse_unipoly(ftext);
  Int d;
  require(d.set_str(dtext, 10) == 0, ErrorCode::ParseError, "d must be an integer");
  json out = to_json(certify_no_odd(f, d));
  if (probe >= 0) out["probe"] = to_json(probe_no_odd(f, d, probe));
  return out;
}

json cmd_certify_index(const std::string& poly, long p, long m, long probe) {
  const MultiPoly F = multipoly_from_text(poly);
  json out = to_json(certify_index_m(F, p, m));
  if (probe >= 0) out["probe"] = to_json(probe_conic(F, probe));
  return out;
}

json cmd_probe_rih(const std::string& poly, int deg, long coeff) {
  return to_json(rih_probe(multipoly_from_text(poly), deg, coeff));
}

}  // namespace hypdeg
