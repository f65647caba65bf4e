// hypdeg command-line tool. Every subcommand prints one JSON document on stdout.
// Exit codes: 0 success, 1 computation error, 2 parse or configuration error.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "hypdeg/commands.hpp"
#include "hypdeg/error.hpp"

using namespace hypdeg;

int main(int argc, char** argv) {
  CLI::App app{"Degrees of points on hypersurfaces: polytopes, exponents, degree sets and constructions"};
  app.require_subcommand(1);

  std::string poly, point, from, J, mode, extras, degrees, modulus, solution, targets, config, csv;
  long bound = 200, T = 100, search = 100, p = 2, mm = 2, probe = -1, deg = 1, coeff = 3;
  int k = 1;
  std::string dtext;
  std::uint64_t seed = 1;
  json result;

  auto* c_poly = app.add_subcommand("polytope", "Support, corners, g(h), G(H) and the validity flag");
  c_poly->add_option("poly", poly)->required();

  auto* c_exp = app.add_subcommand("exp", "Exp(H) exactly, or a certified lower bound for Exp_J(H)");
  c_exp->add_option("poly", poly)->required();
  c_exp->add_option("--J", J, "1-based coordinates, e.g. 1,2");
  c_exp->add_option("--mode", mode, "exact or lower");
  c_exp->add_option("--seed", seed);

  auto* c_deg = app.add_subcommand("degrees", "Fixed-point degree window D(H) and its exceptions");
  c_deg->add_option("poly", poly)->required();
  c_deg->add_option("--bound", bound);
  c_deg->add_option("--extras", extras, "known degrees, e.g. 5,7");

  auto* c_spec = app.add_subcommand("specialize", "Random specialization f(x(t)) with checks");
  c_spec->add_option("poly", poly)->required();
  c_spec->add_option("--degrees", degrees)->required();
  c_spec->add_option("--T", T);
  c_spec->add_option("--seed", seed);
  c_spec->add_option("--modulus", modulus, "G(t) for the quotient form");
  c_spec->add_option("--solution", solution, "u1;u2;... with G | f(u)");

  auto* c_spr = app.add_subcommand("springer", "Descent from an odd-degree point on a quadric");
  c_spr->add_option("poly", poly)->required();
  c_spr->add_option("--point", point, "g;x1;...;xm");
  c_spr->add_option("--from", from, "rational point to ascend from first, e.g. 1,1,1");
  c_spr->add_option("--k", k, "ascend to degree 2k+1");
  c_spr->add_option("--seed", seed);

  auto* c_cor = app.add_subcommand("coray", "Descent from a quadratic point on a cubic");
  c_cor->add_option("poly", poly)->required();
  c_cor->add_option("--point", point, "g;x1;...;xm");
  c_cor->add_option("--from", from, "rational point to ascend from first");
  c_cor->add_option("--seed", seed);

  auto* c_hyp = app.add_subcommand("hyper", "Points of given degrees on y^2 = f(x)");
  c_hyp->add_option("f", poly)->required();
  c_hyp->add_option("--targets", targets)->required();
  c_hyp->add_option("--point", point, "g;x;y (default: search integral x)");
  c_hyp->add_option("--search", search, "|x| bound for the default point search");
  c_hyp->add_option("--seed", seed);

  auto* c_no = app.add_subcommand("certify-no-odd", "No odd-degree points on d z^2 = f(x, y)");
  c_no->add_option("f", poly)->required();
  c_no->add_option("--d", dtext)->required();
  c_no->add_option("--probe", probe, "also search rational points to this height");

  auto* c_idx = app.add_subcommand("certify-index", "Every point degree on F = 0 is divisible by m");
  c_idx->add_option("F", poly)->required();
  c_idx->add_option("--p", p);
  c_idx->add_option("--m", mm);
  c_idx->add_option("--probe", probe, "also search rational points to this height");

  auto* c_exper = app.add_subcommand("experiment", "Field-count experiment from a JSON config");
  c_exper->add_option("--config", config)->required();
  c_exper->add_option("--csv", csv, "also write the records as CSV");

  auto* c_rih = app.add_subcommand("probe-rih", "Collision histogram of f(x(t)) over a small box");
  c_rih->add_option("poly", poly)->required();
  c_rih->add_option("--deg", deg);
  c_rih->add_option("--coeff", coeff);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_poly->parsed()) result = cmd_polytope(poly);
    if (c_exp->parsed()) result = cmd_exp(poly, J, mode, seed);
    if (c_deg->parsed()) result = cmd_degrees(poly, bound, extras);
    if (c_spec->parsed()) result = cmd_specialize(poly, degrees, T, seed, modulus, solution);
    if (c_spr->parsed()) result = cmd_springer(poly, point, from, k, seed);
    if (c_cor->parsed()) result = cmd_coray(poly, point, from, seed);
    if (c_hyp->parsed()) result = cmd_hyper(poly, targets, point, search, seed);
    if (c_no->parsed()) result = cmd_certify_no_odd(poly, dtext, probe);
    if (c_idx->parsed()) result = cmd_certify_index(poly, p, mm, probe);
    if (c_exper->parsed()) result = cmd_experiment(config, csv);
    if (c_rih->parsed()) result = cmd_probe_rih(poly, static_cast<int>(deg), coeff);
  } catch (const Error& e) {
    const bool config = e.code() == ErrorCode::ConfigError || e.code() == ErrorCode::ParseError;
    std::cout << json{{"error", error_code_name(e.code())}, {"message", e.what()}}.dump(2) << '\n';
    return config ? 2 : 1;
  }
  std::cout << result.dump(2) << '\n';
  return 0;
}
