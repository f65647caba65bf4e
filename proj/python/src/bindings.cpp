#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "hypdeg/commands.hpp"
#include "hypdeg/error.hpp"
#include "hypdeg/factor.hpp"
#include "hypdeg/parallel.hpp"
#include "hypdeg/parse.hpp"

namespace py = pybind11;
using namespace hypdeg;

namespace {

// Structured results cross the boundary as JSON text; the Python package decodes them.
template <class Fn>
std::string run(Fn&& fn) {
  json out;
  {
    py::gil_scoped_release release;
    out = fn();
  }
  return out.dump();
}

std::vector<std::pair<std::string, int>> factor(const std::string& text) {
  const Factorization f = factor_over_Z(parse_unipoly(text));
  std::vector<std::pair<std::string, int>> out;
  for (const auto& [p, e] : f.factors) out.emplace_back(p.to_string(), e);
  return out;
}

}  // namespace

PYBIND11_MODULE(_hypdeg, m) {
  m.doc() = "Degrees of points on hypersurfaces";

  // The message starts with the error code name, e.g. "ConfigError: ...".
  py::register_exception<Error>(m, "HypdegError", PyExc_ValueError);

  m.def("polytope", [](const std::string& poly) { return run([&] { return cmd_polytope(poly); }); });
  m.def("exp", [](const std::string& poly, const std::string& J, const std::string& mode, std::uint64_t seed) {
    return run([&] { return cmd_exp(poly, J, mode, seed); });
  }, py::arg("poly"), py::arg("J") = "", py::arg("mode") = "", py::arg("seed") = 1);
  m.def("degrees", [](const std::string& poly, long bound, const std::string& extras) {
    return run([&] { return cmd_degrees(poly, bound, extras); });
  }, py::arg("poly"), py::arg("bound") = 200, py::arg("extras") = "");
  m.def("specialize", [](const std::string& poly, const std::string& degrees, long T, std::uint64_t seed,
                         const std::string& modulus, const std::string& solution) {
    return run([&] { return cmd_specialize(poly, degrees, T, seed, modulus, solution); });
  }, py::arg("poly"), py::arg("degrees"), py::arg("T") = 100, py::arg("seed") = 1, py::arg("modulus") = "",
     py::arg("solution") = "");
  m.def("springer", [](const std::string& poly, const std::string& point, const std::string& from, int k,
                       std::uint64_t seed) {
    return run([&] { return cmd_springer(poly, point, from, k, seed); });
  }, py::arg("poly"), py::arg("point") = "", py::arg("from_point") = "", py::arg("k") = 1, py::arg("seed") = 1);
  m.def("coray", [](const std::string& poly, const std::string& point, const std::string& from,
                    std::uint64_t seed) {
    return run([&] { return cmd_coray(poly, point, from, seed); });
  }, py::arg("poly"), py::arg("point") = "", py::arg("from_point") = "", py::arg("seed") = 1);
  m.def("hyper", [](const std::string& f, const std::string& targets, const std::string& point, long search,
                    std::uint64_t seed) {
    return run([&] { return cmd_hyper(f, targets, point, search, seed); });
  }, py::arg("f"), py::arg("targets"), py::arg("point") = "", py::arg("search") = 100, py::arg("seed") = 1);
  m.def("certify_no_odd", [](const std::string& f, const std::string& d, long probe) {
    return run([&] { return cmd_certify_no_odd(f, d, probe); });
  }, py::arg("f"), py::arg("d"), py::arg("probe") = -1);
  m.def("certify_index", [](const std::string& F, long p, long mm, long probe) {
    return run([&] { return cmd_certify_index(F, p, mm, probe); });
  }, py::arg("F"), py::arg("p"), py::arg("m"), py::arg("probe") = -1);
  m.def("experiment", [](const std::string& config, const std::string& csv) {
    return run([&] {
      json j;
      try {
        j = json::parse(config);
      } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ConfigError, e.what());
      }
      return cmd_experiment_json(j, csv);
    });
  }, py::arg("config"), py::arg("csv") = "");
  m.def("probe_rih", [](const std::string& poly, int deg, long coeff) {
    return run([&] { return cmd_probe_rih(poly, deg, coeff); });
  }, py::arg("poly"), py::arg("deg"), py::arg("coeff"));

  m.def("factor", &factor, py::arg("f"), "Irreducible factors of f(t) over Z with multiplicities.");
  m.def("is_irreducible", [](const std::string& f) {
    return std::string(verdict_name(is_irreducible_Q(parse_unipoly(f)).status));
  }, py::arg("f"));
  m.def("thread_count", &thread_count);
}
