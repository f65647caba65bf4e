#include "hypdeg/applications.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "hypdeg/degree_sets.hpp"
#include "hypdeg/error.hpp"
#include "hypdeg/linalg.hpp"
#include "hypdeg/modpoly.hpp"
#include "hypdeg/specializer.hpp"

namespace hypdeg {

namespace {

using Rng = std::mt19937_64;

long draw(Rng& rng, long bound) { return std::uniform_int_distribution<long>(-bound, bound)(rng); }

long draw_nonzero(Rng& rng, long bound) {
  for (;;)
    if (long v = draw(rng, bound); v != 0) return v;
}

// Degree exactly deg (nonzero leading coefficient) unless deg < 0.
UniPoly random_poly(Rng& rng, int deg, long bound) {
  if (deg < 0) return {};
  std::vector<Rat> c;
  for (int i = 0; i < deg; ++i) c.emplace_back(draw(rng, bound));
  c.emplace_back(draw_nonzero(rng, bound));
  return UniPoly(std::move(c));
}

std::vector<UniPoly> reduce_all(const std::vector<UniPoly>& x, const UniPoly& g) {
  std::vector<UniPoly> out;
  out.reserve(x.size());
  for (const auto& p : x) out.push_back(p % g);
  return out;
}

bool all_vanish(const std::vector<UniPoly>& x, const UniPoly& g) {
  return std::all_of(x.begin(), x.end(), [&](const UniPoly& p) { return (p % g).is_zero(); });
}

int max_degree(const std::vector<UniPoly>& x) {
  int D = -1;
  for (const auto& p : x) D = std::max(D, p.degree());
  return D;
}

IntVector primitive_vector(const RationalVector& v) {
  Int lambda = 1;
  for (const auto& c : v) lambda = int_lcm(lambda, c.get_den());
  IntVector out;
  Int g = 0;
  for (const auto& c : v) {
    Rat s = c * lambda;
    out.push_back(s.get_num());
    g = int_gcd(g, out.back());
  }
  if (g == 0) return out;
  int sign = 0;
  for (const auto& c : out)
    if (c != 0) {
      sign = c > 0 ? 1 : -1;
      break;
    }
  for (auto& c : out) c = c / g * sign;
  return out;
}

bool is_zero_vector(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& c) { return c == 0; });
}

Int poly_eval_int(const MultiPoly& F, const IntVector& v) { return F.evaluate(v); }

RationalVector eval_all(const std::vector<UniPoly>& x, const Rat& t0) {
  RationalVector v;
  for (const auto& p : x) v.push_back(p.eval(t0));
  return v;
}

// F(x(t)) vanishes identically, so any t0 with x(t0) != 0 is a rational point.
PointRep point_from_curve(const MultiPoly& F, const std::vector<UniPoly>& x) {
  for (long s = 0; s < 64; ++s) {
    const long t0 = (s % 2 == 0) ? s / 2 : -(s + 1) / 2;
    IntVector v = primitive_vector(eval_all(x, Rat(t0)));
    if (!is_zero_vector(v) && poly_eval_int(F, v) == 0) return rational_point(v);
  }
  throw Error(ErrorCode::DegreeDropAnomaly, "coordinates vanish at every probe");
}

std::optional<PointRep> make_point(const UniPoly& R, const std::vector<UniPoly>& x, int expected, const MultiPoly& F,
                                   bool projective, const FactorEffort& effort) {
  if (R.degree() != expected || expected < 1) return std::nullopt;
  PointRep P;
  P.g = R.primitive_part();
  P.verdict = is_irreducible_Q(P.g, effort);
  if (P.verdict.status != VerdictStatus::Irreducible) return std::nullopt;
  P.coords = reduce_all(x, P.g);
  if (!verify_point(F, P, projective).ok) return std::nullopt;
  return P;
}

std::uint64_t target_seed(std::uint64_t seed, long target) {
  return seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(target) * 0xBF58476D1CE4E5B9ULL + 1;
}

// Polynomials in x with coefficients in K = Q[t]/(g), coefficient of x^i at index i.
using KPoly = std::vector<UniPoly>;

void ktrim(KPoly& a, const UniPoly& g) {
  for (auto& c : a) c = c % g;
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

KPoly krem(KPoly a, const KPoly& b, const UniPoly& g) {
  const UniPoly inv = inverse_mod(b.back(), g);
  while (a.size() >= b.size()) {
    const UniPoly q = (a.back() * inv) % g;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - q * b[i];
    ktrim(a, g);
    if (a.empty()) break;
  }
  return a;
}

KPoly kgcd(KPoly a, KPoly b, const UniPoly& g) {
  ktrim(a, g);
  ktrim(b, g);
  while (!b.empty()) {
    KPoly r = krem(a, b, g);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// A point of degree q k on a y^q = g(x): x = alpha of degree k, y a q-th root of g(alpha)/a.
// The minpoly of y is chi(t^q) with chi the characteristic polynomial of g(alpha)/a, and x is
// recovered in Q(y) as the common root of P(x) and a y^q - g(x).
std::optional<PointRep> norm_point(const Int& a, int q, const UniPoly& gx, long k, Rng& rng, long bound,
                                   const MultiPoly& F, const FactorEffort& effort) {
  std::vector<Rat> pc;
  for (long i = 0; i < k; ++i) pc.emplace_back(draw(rng, bound));
  pc.emplace_back(1);
  const UniPoly P(pc);
  if (k > 1 && is_irreducible_Q(P, effort).status != VerdictStatus::Irreducible) return std::nullopt;
  const UniPoly theta = gx.scaled(Rat(1) / Rat(a));
  std::vector<Rat> xs, ys;
  for (long s = 0; s <= k; ++s) {
    xs.emplace_back(s);
    ys.push_back(resultant(P, UniPoly::constant(Rat(s)) - theta));
  }
  const UniPoly chi = interpolate(xs, ys);
  if (chi.degree() != k) return std::nullopt;
  const UniPoly G = chi.compose(UniPoly::monomial(Rat(1), q)).primitive_part();
  IrreducibilityVerdict verdict = is_irreducible_Q(G, effort);
  if (verdict.status != VerdictStatus::Irreducible) return std::nullopt;
  KPoly A, B;
  for (const auto& c : P.coeffs()) A.push_back(UniPoly::constant(c));
  const UniPoly aty = UniPoly::monomial(Rat(a), q);
  for (int i = 0; i <= gx.degree(); ++i) B.push_back(UniPoly::constant(-gx.coeff(i)));
  if (B.empty()) B.emplace_back();
  B[0] = B[0] + aty;
  const KPoly L = kgcd(A, B, G);
  if (L.size() != 2) return std::nullopt;
  const UniPoly xcoord = (-(L[0] * inverse_mod(L[1], G))) % G;
  PointRep out;
  out.g = G;
  out.verdict = std::move(verdict);
  out.coords = {xcoord, UniPoly::t() % G};
  if (!verify_point(F, out, false).ok) return std::nullopt;
  return out;
}

// Largest field degree of x_j(alpha) combinations; for projective points the ratios to a
// coordinate nonzero at alpha are used.
int generated_degree(const PointRep& P, bool projective) {
  const UniPoly& g = P.g;
  std::vector<UniPoly> r = reduce_all(P.coords, g);
  if (projective) {
    auto it = std::find_if(r.begin(), r.end(), [](const UniPoly& p) { return !p.is_zero(); });
    if (it == r.end()) return 0;
    const UniPoly inv = inverse_mod(*it, g);
    for (auto& p : r) p = (p * inv) % g;
  }
  int best = 0;
  for (long s = 1; s <= 4 && best < g.degree(); ++s) {
    UniPoly comb;
    long c = 1;
    for (const auto& p : r) {
      comb = comb + p.scaled(Rat(c));
      c *= s + 1;
    }
    best = std::max(best, comb.is_zero() ? 1 : field_degree(g, comb));
  }
  return best;
}

void require_integral(const UniPoly& f, const std::string& what) {
  require(f.is_integral(), ErrorCode::PreconditionFailed, what + " must have integer coefficients");
}

}  // namespace

PointRep rational_point(const IntVector& v) {
  PointRep P;
  P.g = UniPoly::t();
  for (const auto& c : v) P.coords.push_back(UniPoly::constant(Rat(c)));
  P.verdict.status = VerdictStatus::Irreducible;
  P.verdict.witness = "degree 1";
  return P;
}

PointCheck verify_point(const MultiPoly& F, const PointRep& P, bool projective) {
  PointCheck out;
  if (P.g.degree() < 1) return {false, "minpoly has degree < 1"};
  if (P.coords.size() != static_cast<std::size_t>(F.nvars())) return {false, "coordinate count mismatch"};
  if (is_irreducible_Q(P.g).status != VerdictStatus::Irreducible) return {false, "minpoly not proved irreducible"};
  if (!(F.evaluate_composition(P.coords) % P.g).is_zero()) return {false, "equation not zero modulo minpoly"};
  if (projective && all_vanish(P.coords, P.g)) return {false, "all coordinates vanish"};
  if (P.g.degree() > 1 && generated_degree(P, projective) != P.g.degree())
    return {false, "coordinates generate a proper subfield"};
  out.ok = true;
  return out;
}

IntVector rational_coordinates(const PointRep& P) {
  require(P.g.degree() == 1, ErrorCode::PreconditionFailed, "not a degree-1 point");
  const Rat t0 = -P.g.coeff(0) / P.g.coeff(1);
  return primitive_vector(eval_all(P.coords, t0));
}

MultiPoly hyperelliptic_equation(const UniPoly& f) {
  require_integral(f, "f");
  MultiPoly F(2);
  F.add_term({0, 2}, 1);
  for (int i = 0; i <= f.degree(); ++i) F.add_term({i, 0}, -f.coeff(i).get_num());
  return F;
}

MultiPoly superelliptic_equation(const Int& a, int q, const UniPoly& g) {
  require_integral(g, "g");
  MultiPoly F(2);
  F.add_term({0, q}, a);
  for (int i = 0; i <= g.degree(); ++i) F.add_term({i, 0}, -g.coeff(i).get_num());
  return F;
}

// ---------------------------------------------------------------------------------------------
// Quadrics and cubics

namespace {

void require_form(const MultiPoly& F, int degree, const std::string& what) {
  require(!F.is_zero() && F.is_homogeneous() && F.total_degree() == degree, ErrorCode::PreconditionFailed,
          what + " must be a homogeneous form of degree " + std::to_string(degree));
}

void require_on_form(const MultiPoly& F, const PointRep& P) {
  require(P.coords.size() == static_cast<std::size_t>(F.nvars()), ErrorCode::PreconditionFailed,
          "coordinate count mismatch");
  require(P.g.degree() >= 1, ErrorCode::PreconditionFailed, "minpoly must have positive degree");
  require((F.evaluate_composition(P.coords) % P.g).is_zero(), ErrorCode::NotASolution,
          "the form does not vanish at the point");
}

PointRep finish_rational(const MultiPoly& F, const RationalVector& v) {
  IntVector w = primitive_vector(v);
  require(!is_zero_vector(w), ErrorCode::DegreeDropAnomaly, "rational point is the zero vector");
  require(poly_eval_int(F, w) == 0, ErrorCode::NotASolution, "recovered point fails exact evaluation");
  return rational_point(w);
}

}  // namespace

DescentTrace springer_descent(const MultiPoly& F, const PointRep& P, const DescentOptions& options) {
  require_form(F, 2, "F");
  require_on_form(F, P);
  if (P.g.degree() % 2 == 0) throw Error(ErrorCode::EvenDegreeInput, "point has even degree " + std::to_string(P.g.degree()));
  require(is_irreducible_Q(P.g, options.effort).status == VerdictStatus::Irreducible, ErrorCode::PreconditionFailed,
          "minpoly not proved irreducible");
  require(!all_vanish(P.coords, P.g), ErrorCode::PreconditionFailed, "all coordinates vanish");

  Rng rng(options.seed);
  DescentTrace trace;
  UniPoly g = P.g;
  std::vector<UniPoly> x = reduce_all(P.coords, g);
  trace.degrees.push_back(g.degree());
  while (g.degree() > 1) {
    bool advanced = false;
    for (int attempt = 0; attempt <= options.retries && !advanced; ++attempt) {
      if (attempt > 0) {
        // Same point, another representative: multiply by a random nonzero field element.
        UniPoly lambda;
        while (lambda.is_zero()) lambda = random_poly(rng, g.degree() - 1, 5) % g;
        for (auto& p : x) p = (lambda * p) % g;
      }
      const UniPoly Fx = F.evaluate_composition(x);
      if (Fx.is_zero()) {
        trace.point = point_from_curve(F, x);
        trace.degrees.push_back(1);
        return trace;
      }
      // deg h = 2D - deg g is odd and below deg g only without cancellation in F(x(t)).
      if (Fx.degree() != 2 * max_degree(x)) continue;
      const UniPoly h = poly_divide_exact(Fx, g);
      const Factorization fac = factor_over_Z(h, options.effort);
      std::vector<UniPoly> odd;
      for (const auto& [p, mult] : fac.factors)
        if (p.degree() % 2 == 1 && !all_vanish(x, p)) odd.push_back(p);
      std::sort(odd.begin(), odd.end(), [](const UniPoly& a, const UniPoly& b) { return lex_less(a, b); });
      for (const auto& p : odd) {
        if (p.degree() > 1 && is_irreducible_Q(p, options.effort).status != VerdictStatus::Irreducible) continue;
        g = p;
        x = reduce_all(x, g);
        advanced = true;
        break;
      }
    }
    if (!advanced) throw Error(ErrorCode::DegreeDropAnomaly, "no usable odd factor after re-randomizing");
    trace.degrees.push_back(g.degree());
  }
  trace.point = finish_rational(F, eval_all(x, -g.coeff(0) / g.coeff(1)));
  return trace;
}

PointRep springer_ascend(const MultiPoly& F, const IntVector& Q, int k, std::uint64_t seed, int budget) {
  require_form(F, 2, "F");
  require(Q.size() == static_cast<std::size_t>(F.nvars()), ErrorCode::PreconditionFailed, "point length mismatch");
  require(!is_zero_vector(Q), ErrorCode::PreconditionFailed, "Q must be nonzero");
  require(poly_eval_int(F, Q) == 0, ErrorCode::NotASolution, "F(Q) != 0");
  require(k >= 0, ErrorCode::PreconditionFailed, "k must be nonnegative");
  Rng rng(seed);
  const UniPoly t = UniPoly::t();
  for (int attempt = 0; attempt < budget; ++attempt) {
    std::vector<UniPoly> X;
    for (const auto& q : Q) X.push_back(t * random_poly(rng, k, 10) + UniPoly::constant(Rat(q)));
    const UniPoly G = poly_divide_exact(F.evaluate_composition(X), t);
    if (G.degree() != 2 * k + 1) continue;
    if (k == 0) {
      IntVector v = primitive_vector(eval_all(X, -G.coeff(0) / G.coeff(1)));
      if (is_zero_vector(v)) continue;
      return finish_rational(F, eval_all(X, -G.coeff(0) / G.coeff(1)));
    }
    if (auto P = make_point(G, X, 2 * k + 1, F, true, {})) return *P;
  }
  throw Error(ErrorCode::BudgetExhausted, "no irreducible G(t) within the draw budget");
}

PointRep coray_ascend(const MultiPoly& F, const IntVector& Q, std::uint64_t seed, int budget) {
  require_form(F, 3, "F");
  require(Q.size() == static_cast<std::size_t>(F.nvars()), ErrorCode::PreconditionFailed, "point length mismatch");
  require(!is_zero_vector(Q), ErrorCode::PreconditionFailed, "Q must be nonzero");
  require(poly_eval_int(F, Q) == 0, ErrorCode::NotASolution, "F(Q) != 0");
  Rng rng(seed);
  const UniPoly t = UniPoly::t();
  for (int attempt = 0; attempt < budget; ++attempt) {
    std::vector<UniPoly> X;
    for (const auto& q : Q) X.push_back(t.scaled(Rat(draw(rng, 10))) + UniPoly::constant(Rat(q)));
    const UniPoly G = poly_divide_exact(F.evaluate_composition(X), t);
    if (auto P = make_point(G, X, 2, F, true, {})) return *P;
  }
  throw Error(ErrorCode::BudgetExhausted, "no irreducible quadratic within the draw budget");
}

PointRep coray_descent(const MultiPoly& F, const PointRep& P, const DescentOptions& options) {
  require_form(F, 3, "F");
  require(P.g.degree() == 2, ErrorCode::PreconditionFailed, "point must have degree 2");
  require_on_form(F, P);
  require(is_irreducible_Q(P.g, options.effort).status == VerdictStatus::Irreducible, ErrorCode::PreconditionFailed,
          "minpoly is reducible: the point is rational");
  const UniPoly& g = P.g;
  std::vector<UniPoly> x = reduce_all(P.coords, g);
  if (max_degree(x) <= 0) throw Error(ErrorCode::DegenerateH, "constant coordinates force h = F(x)/g constant");
  Rng rng(options.seed);
  for (int attempt = 0; attempt <= options.retries; ++attempt) {
    if (attempt > 0) {
      const UniPoly lambda({draw(rng, 5), draw_nonzero(rng, 5)});
      for (auto& p : x) p = (lambda * p) % g;
    }
    const UniPoly Fx = F.evaluate_composition(x);
    if (Fx.is_zero()) return point_from_curve(F, x);
    const UniPoly h = poly_divide_exact(Fx, g);
    if (h.degree() != 1) continue;
    const RationalVector v = eval_all(x, -h.coeff(0) / h.coeff(1));
    if (is_zero_vector(primitive_vector(v))) continue;
    return finish_rational(F, v);
  }
  throw Error(ErrorCode::DegenerateH, "h = F(x)/g stayed constant after re-randomizing");
}

// ---------------------------------------------------------------------------------------------
// Hyperelliptic and superelliptic constructions

namespace {

struct HyperSetup {
  int genus = 0;
  MultiPoly F;
};

HyperSetup check_hyperelliptic(const UniPoly& f) {
  require_integral(f, "f");
  require(f.degree() >= 4 && f.degree() % 2 == 0, ErrorCode::PreconditionFailed, "f must have even degree >= 4");
  const Int lc = f.leading().get_num();
  if (lc > 0 && is_perfect_square(lc)) throw Error(ErrorCode::SquareLeadingCoeff, "leading coefficient is a square");
  require(gcd(f, f.derivative()).degree() == 0, ErrorCode::PreconditionFailed, "f must be squarefree");
  return {f.degree() / 2 - 1, hyperelliptic_equation(f)};
}

// y = h(x) on the point field: the x-coordinate must generate it.
std::pair<UniPoly, UniPoly> rebase_on_x(const PointRep& P) {
  const int m = P.g.degree();
  const UniPoly X = P.coords[0] % P.g;
  const UniPoly Y = P.coords[1] % P.g;
  require(!X.is_constant(), ErrorCode::PreconditionFailed, "the x-coordinate is rational");
  std::vector<Rat> xs, ys;
  for (int s = 0; s <= m; ++s) {
    xs.emplace_back(s);
    ys.push_back(resultant(P.g, UniPoly::constant(Rat(s)) - X));
  }
  const UniPoly chi = interpolate(xs, ys);
  require(chi.degree() == m && gcd(chi, chi.derivative()).degree() == 0, ErrorCode::PreconditionFailed,
          "the x-coordinate does not generate the point field");
  RatMatrix A(static_cast<std::size_t>(m), std::vector<Rat>(static_cast<std::size_t>(m)));
  UniPoly pw = UniPoly::constant(Rat(1));
  for (int i = 0; i < m; ++i) {
    for (int r = 0; r < m; ++r) A[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] = pw.coeff(r);
    pw = (pw * X) % P.g;
  }
  RationalVector b;
  for (int r = 0; r < m; ++r) b.push_back(Y.coeff(r));
  auto sol = solve_linear(A, b);
  require(sol.has_value(), ErrorCode::PreconditionFailed, "y is not a polynomial in x");
  return {chi.primitive_part(), UniPoly(*sol)};
}

}  // namespace

PointRep hyperelliptic_even_point(const UniPoly& f, long k, const ConstructionOptions& options) {
  const HyperSetup s = check_hyperelliptic(f);
  require(k >= 1, ErrorCode::PreconditionFailed, "k must be positive");
  Rng rng(target_seed(options.seed, 2 * k));
  for (int attempt = 0; attempt < options.budget; ++attempt)
    if (auto P = norm_point(Int(1), 2, f, k, rng, options.coeff_bound, s.F, options.effort)) return *P;
  throw Error(ErrorCode::BudgetExhausted, "no even-degree point within the draw budget");
}

std::vector<PointRep> hyperelliptic_degrees(const UniPoly& f, const PointRep& P, const std::vector<long>& targets,
                                            const ConstructionOptions& options) {
  const HyperSetup s = check_hyperelliptic(f);
  const int genus = s.genus;
  require(P.coords.size() == 2, ErrorCode::PreconditionFailed, "point must have coordinates (x, y)");
  require((s.F.evaluate_composition(P.coords) % P.g).is_zero(), ErrorCode::NotASolution, "point is not on y^2 = f(x)");
  const int m = P.g.degree();
  require(m == 1 || m % 2 == 1, ErrorCode::PreconditionFailed, "point must be rational or of odd degree");
  const UniPoly t = UniPoly::t();
  const long B = options.coeff_bound;

  // Rational case data: the point (x0, y0); a point with y0 = 0 is swapped for one with y0 != 0
  // when a small integer x gives a square f(x).
  Rat x0, y0;
  bool weierstrass = false;
  UniPoly G, h;
  if (m == 1) {
    const Rat r = -P.g.coeff(0) / P.g.coeff(1);
    x0 = P.coords[0].eval(r);
    y0 = P.coords[1].eval(r);
    if (y0 == 0) {
      weierstrass = true;
      for (long s2 = 0; s2 <= 200 && weierstrass; ++s2) {
        const long xv = (s2 % 2 == 0) ? s2 / 2 : -(s2 + 1) / 2;
        const Int v = f.eval(Rat(xv)).get_num();
        if (v > 0 && is_perfect_square(v)) {
          x0 = xv;
          y0 = Rat(int_sqrt(v));
          weierstrass = false;
        }
      }
    }
  } else {
    require(is_irreducible_Q(P.g, options.effort).status == VerdictStatus::Irreducible, ErrorCode::PreconditionFailed,
            "minpoly not proved irreducible");
    std::tie(G, h) = rebase_on_x(P);
  }
  const UniPoly fs = f.shifted(x0);

  std::vector<PointRep> out;
  for (long T : targets) {
    // Thresholds of the theorem: T >= g+1 from a rational point, T >= 2g+2-m from odd m
    // (odd T also needs T >= m). A Weierstrass point only yields T >= 2g+1.
    bool reachable;
    if (m == 1 && !weierstrass) reachable = T >= genus + 1;
    else if (m == 1) reachable = (T % 2 == 1 && T >= 2 * genus + 1) || (T % 2 == 0 && T >= 2 * genus + 2);
    else reachable = T >= 2 * genus + 2 - m && (T % 2 == 0 || T >= m);
    if (!reachable) throw Error(ErrorCode::TargetUnreachable, "degree " + std::to_string(T) + " is below the threshold");

    Rng rng(target_seed(options.seed, T));
    std::optional<PointRep> found;
    for (int attempt = 0; attempt < options.budget && !found; ++attempt) {
      if (T % 2 == 0 && T >= 2 * genus + 2) {
        // x = t, y = h(t): R = h^2 - f has degree T.
        const UniPoly hy = random_poly(rng, static_cast<int>(T / 2), B);
        found = make_point(hy * hy - f, {t, hy}, static_cast<int>(T), s.F, false, options.effort);
      } else if (T % 2 == 0) {
        found = norm_point(Int(1), 2, f, T / 2, rng, B, s.F, options.effort);
      } else if (m > 1) {
        // H = h + a G with deg a = r: H^2 - f = G R and deg R = 2r + m.
        const long r = (T - m) / 2;
        const UniPoly H = h + random_poly(rng, static_cast<int>(r), B) * G;
        const UniPoly R = poly_divide_exact(H * H - f, G);
        found = make_point(R, {t, H}, static_cast<int>(T), s.F, false, options.effort);
      } else if (weierstrass) {
        const UniPoly y = t * random_poly(rng, static_cast<int>((T - 1) / 2), B);
        const UniPoly R = poly_divide_exact(y * y - fs, t);
        found = make_point(R, {t + UniPoly::constant(x0), y}, static_cast<int>(T), s.F, false, options.effort);
      } else if (T <= 2 * genus + 1) {
        // Match y^2 = f(x0 + t) through order mp, then one free coefficient.
        const long mp = 2 * genus + 1 - T;
        std::vector<Rat> yc{y0};
        for (long j = 1; j <= mp; ++j) {
          Rat acc = fs.coeff(static_cast<int>(j));
          for (long a = 1; a < j; ++a) acc -= yc[static_cast<std::size_t>(a)] * yc[static_cast<std::size_t>(j - a)];
          yc.push_back(acc / (2 * y0));
        }
        yc.emplace_back(draw_nonzero(rng, B));
        const UniPoly y(yc);
        const UniPoly R = poly_divide_exact(fs - y * y, UniPoly::monomial(Rat(1), static_cast<int>(mp + 1)));
        found = make_point(R, {t + UniPoly::constant(x0), y}, static_cast<int>(T), s.F, false, options.effort);
      } else {
        // y = y0 + t w(t) with deg w = (T-1)/2 > g.
        const UniPoly y = UniPoly::constant(y0) + t * random_poly(rng, static_cast<int>((T - 1) / 2), B);
        const UniPoly R = poly_divide_exact(y * y - fs, t);
        found = make_point(R, {t + UniPoly::constant(x0), y}, static_cast<int>(T), s.F, false, options.effort);
      }
    }
    if (!found) throw Error(ErrorCode::BudgetExhausted, "no point of degree " + std::to_string(T) + " within the budget");
    out.push_back(std::move(*found));
  }
  return out;
}

std::vector<PointRep> superelliptic_frob(const Superelliptic& c, const std::vector<long>& targets,
                                         const ConstructionOptions& options) {
  require_integral(c.g, "g");
  const int d = c.g.degree();
  const int q = c.q;
  require(q >= 2 && c.a != 0 && d >= q && d % q == 0, ErrorCode::PreconditionFailed, "need q >= 2, a != 0 and q | deg g");
  const MultiPoly F = superelliptic_equation(c.a, q, c.g);
  std::optional<PolySolution> base;
  if (c.base) {
    require(c.base->size() == 2, ErrorCode::PreconditionFailed, "base point must be (x, y)");
    PolySolution sol;
    sol.modulus = UniPoly::t();
    sol.u = {UniPoly::constant((*c.base)[0]), UniPoly::constant((*c.base)[1])};
    if (!check_nonsingular(F, sol.u, sol.modulus).nonsingular)
      throw Error(ErrorCode::SingularInput, "base point is singular");
    base = sol;
  }
  const long maxT = targets.empty() ? 1 : *std::max_element(targets.begin(), targets.end());
  const SemigroupWindow frob = frobenius_window({d - 1, q}, std::max(1L, maxT));
  const UniPoly t = UniPoly::t();
  const long B = options.coeff_bound;

  std::vector<PointRep> out;
  for (long T : targets) {
    const bool member = T >= 1 && (base ? frob.member[static_cast<std::size_t>(T)] : T % q == 0);
    if (!member) throw Error(ErrorCode::TargetUnreachable, "degree " + std::to_string(T) + " is outside the semigroup");
    long e = 0;
    while ((T - static_cast<long>(d - 1) * e) % q != 0) ++e;
    const long ep = (T - static_cast<long>(d - 1) * e) / q;
    Rng rng(target_seed(options.seed, T));
    std::optional<PointRep> found;
    std::optional<PolySolution> lifted;
    if (e > 0) lifted = hensel_lift(F, *base, static_cast<int>(e));
    for (int attempt = 0; attempt < options.budget && !found; ++attempt) {
      if (e == 0) {
        found = norm_point(c.a, q, c.g, ep, rng, B, F, options.effort);
        continue;
      }
      // x = u_x + t^e X, y = u_y + t^e Y with deg x = e and deg y = (d/q) e + e'.
      const UniPoly te = UniPoly::monomial(Rat(1), static_cast<int>(e));
      const long d1 = (d / q) * e + ep;
      const UniPoly x = lifted->u[0] + te * random_poly(rng, 0, B);
      const UniPoly y = lifted->u[1] + te * random_poly(rng, static_cast<int>(d1 - e), B);
      const UniPoly R = poly_divide_exact(F.evaluate_composition({x, y}), te);
      found = make_point(R, {x, y}, static_cast<int>(T), F, false, options.effort);
    }
    if (!found) throw Error(ErrorCode::BudgetExhausted, "no point of degree " + std::to_string(T) + " within the budget");
    out.push_back(std::move(*found));
  }
  return out;
}

// ---------------------------------------------------------------------------------------------
// Frobenius subsets from known points

std::optional<FrobDecomposition> frob_decompose(long target, int d, int degj, const std::vector<int>& m) {
  if (d < 2 || target < 1) return std::nullopt;
  std::optional<FrobDecomposition> best;
  std::vector<int> e(m.size(), 0);
  // Smallest n first, then the lexicographically smallest multiplicity vector.
  auto consider = [&](long n) {
    const long rest = target - static_cast<long>(d - 1) * n;
    if (rest < 0 || rest % d != 0 || rest / d < degj) return;
    if (!best || n < best->n) best = FrobDecomposition{e, n, rest / d};
  };
  auto dfs = [&](auto&& self, std::size_t i, long n) -> void {
    if (static_cast<long>(d - 1) * n > target) return;
    if (i == m.size()) {
      consider(n);
      return;
    }
    for (int k = 0; static_cast<long>(d - 1) * (n + static_cast<long>(k) * m[i]) <= target; ++k) {
      e[i] = k;
      self(self, i + 1, n + static_cast<long>(k) * m[i]);
    }
    e[i] = 0;
  };
  dfs(dfs, 0, 0);
  return best;
}

std::vector<PointRep> frob_subset_points(const MultiPoly& f, const std::vector<PointRep>& known, int j,
                                         const std::vector<long>& targets, const ConstructionOptions& options) {
  require(!f.is_zero() && f.is_homogeneous() && f.total_degree() >= 2, ErrorCode::PreconditionFailed,
          "f must be a homogeneous form of degree >= 2");
  require(!known.empty(), ErrorCode::PreconditionFailed, "at least one known point is required");
  require(j >= 0 && j < f.nvars(), ErrorCode::PreconditionFailed, "variable index out of range");
  const int d = f.total_degree();
  const int degj = f.degree_in(j);

  std::vector<PolySolution> sols;
  std::vector<int> m;
  for (std::size_t i = 0; i < known.size(); ++i) {
    const PointRep& P = known[i];
    require(P.coords.size() == static_cast<std::size_t>(f.nvars()), ErrorCode::PreconditionFailed,
            "coordinate count mismatch");
    PolySolution s;
    if (P.g.degree() == 1) {
      // Rational points sit over distinct linear moduli t - i.
      s.modulus = UniPoly({-static_cast<long>(i), 1});
      for (const auto& c : rational_coordinates(P)) s.u.push_back(UniPoly::constant(Rat(c)));
    } else {
      s.modulus = P.g;
      s.u = reduce_all(P.coords, P.g);
    }
    const NonsingularCheck chk = check_nonsingular(f, s.u, s.modulus);
    if (!chk.nonsingular) throw Error(ErrorCode::SingularInput, "known point " + std::to_string(i) + " is singular");
    s.witness = chk.witness;
    sols.push_back(std::move(s));
    m.push_back(P.g.degree());
  }

  std::vector<PointRep> out;
  for (long T : targets) {
    const auto dec = frob_decompose(T, d, degj, m);
    if (!dec) throw Error(ErrorCode::TargetUnreachable, "degree " + std::to_string(T) + " has no decomposition");
    UniPoly G = UniPoly::constant(Rat(1));
    std::vector<UniPoly> u(static_cast<std::size_t>(f.nvars()));
    if (dec->n > 0) {
      std::vector<PolySolution> parts;
      for (std::size_t i = 0; i < sols.size(); ++i)
        if (dec->e[i] > 0) parts.push_back(hensel_lift(f, sols[i], dec->e[i]));
      const PolySolution comb = crt_combine(f, parts);
      G = comb.modulus;
      u = reduce_min(f, comb.u, G);
    }
    Rng rng(target_seed(options.seed, T));
    std::optional<PointRep> found;
    for (int attempt = 0; attempt < options.budget && !found; ++attempt) {
      // Every x_i has degree n + k; the leading coefficients must not be a zero of f.
      std::vector<UniPoly> y;
      for (int i = 0; i < f.nvars(); ++i) y.push_back(random_poly(rng, static_cast<int>(dec->k), options.coeff_bound));
      IntVector lead;
      for (const auto& p : y) lead.push_back(p.leading().get_num());
      if (f.evaluate(lead) == 0) continue;
      std::vector<UniPoly> x;
      for (std::size_t i = 0; i < y.size(); ++i) x.push_back(y[i] * G + u[i]);
      const UniPoly R = poly_divide_exact(f.evaluate_composition(x), G);
      found = make_point(R, x, static_cast<int>(T), f, true, options.effort);
    }
    if (!found) throw Error(ErrorCode::BudgetExhausted, "no point of degree " + std::to_string(T) + " within the budget");
    out.push_back(std::move(*found));
  }
  return out;
}

// ---------------------------------------------------------------------------------------------
// Certificates

std::string_view certificate_kind_name(CertificateKind k) {
  return k == CertificateKind::NoOddDegree ? "NoOddDegree" : "IndexDividesM";
}

namespace {

bool irreducible_mod_p(const UniPoly& f, long p, int degree) {
  const Int lc = f.leading().get_num();
  if (f.degree() != degree || lc % p == 0) return false;
  return fp_is_irreducible(fp_reduce(f, static_cast<std::uint64_t>(p)));
}

bool no_odd_hypotheses(const UniPoly& f, const Int& d, long p) {
  return f.is_integral() && f.degree() >= 2 && f.degree() % 2 == 0 && d % p == 0 && d % (Int(p) * p) != 0 &&
         is_probable_prime(Int(p)) && irreducible_mod_p(f, p, f.degree());
}

struct IndexSplit {
  UniPoly top;  // f_m(t, 1)
  MultiPoly g;  // F = f_m - p g
  bool ok = false;
  std::string reason;
};

IndexSplit split_index(const MultiPoly& F, long p, long m) {
  IndexSplit s;
  if (F.nvars() != 2) return {{}, {}, false, "F must have two variables"};
  std::vector<Rat> top(static_cast<std::size_t>(m + 1));
  s.g = MultiPoly(2);
  for (const auto& [e, c] : F.terms()) {
    const long deg = e[0] + e[1];
    if (deg > m) return {{}, {}, false, "F has a term of degree above m"};
    if (deg == m) {
      top[static_cast<std::size_t>(e[0])] = Rat(c);
    } else {
      if (c % p != 0) return {{}, {}, false, "a lower-degree coefficient is not divisible by p"};
      s.g.add_term(e, -c / p);
    }
  }
  s.top = UniPoly(top);
  if (s.top.degree() != m) return {{}, {}, false, "f(t, 1) does not have degree m"};
  if (s.g.coeff({0, 0}) % p == 0) return {{}, {}, false, "p divides g(0, 0)"};
  s.ok = true;
  return s;
}

bool index_hypotheses(const MultiPoly& F, long p, long m) {
  if (m < 2 || !is_probable_prime(Int(p))) return false;
  const IndexSplit s = split_index(F, p, m);
  return s.ok && irreducible_mod_p(s.top, p, static_cast<int>(m));
}

}  // namespace

Certificate certify_no_odd(const UniPoly& f, const Int& d) {
  Certificate c;
  c.kind = CertificateKind::NoOddDegree;
  if (!f.is_integral() || f.degree() < 2 || f.degree() % 2 != 0) {
    c.reason = "f must be an integral binary form of even degree";
    return c;
  }
  if (d == 0) {
    c.reason = "d must be nonzero";
    return c;
  }
  const Int ad = abs(d);
  require(ad.fits_ulong_p(), ErrorCode::PreconditionFailed, "d is too large to factor");
  for (std::uint64_t p : prime_factors(ad.get_ui())) {
    const long lp = static_cast<long>(p);
    if (ad % (Int(lp) * lp) == 0) continue;
    if (!irreducible_mod_p(f, lp, f.degree())) continue;
    c.certified = true;
    c.p = lp;
    c.m = f.degree() / 2;
    c.evidence.push_back(std::to_string(p) + " divides d exactly once");
    c.evidence.push_back("f(t, 1) = " + f.to_string() + " is irreducible mod " + std::to_string(p));
    c.conclusion = to_string(d) + " z^2 = f(x, y) has no point over any field of odd degree";
    break;
  }
  if (!c.certified) {
    c.reason = "no prime p || d with f irreducible mod p";
    return c;
  }
  c.verified = no_odd_hypotheses(f, d, c.p);
  return c;
}

Certificate certify_index_m(const MultiPoly& F, long p, long m) {
  Certificate c;
  c.kind = CertificateKind::IndexDividesM;
  c.p = p;
  c.m = m;
  if (m < 2 || p < 2 || !is_probable_prime(Int(p))) {
    c.reason = "need m >= 2 and p prime";
    return c;
  }
  const IndexSplit s = split_index(F, p, m);
  if (!s.ok) {
    c.reason = s.reason;
    return c;
  }
  if (!irreducible_mod_p(s.top, p, static_cast<int>(m))) {
    c.reason = "f(t, 1) is not irreducible of degree m mod p";
    return c;
  }
  c.certified = true;
  c.evidence.push_back("f(t, 1) = " + s.top.to_string() + " is irreducible mod " + std::to_string(p));
  c.evidence.push_back("g = " + s.g.to_string() + " has degree <= m - 1 and g(0, 0) = " +
                       to_string(s.g.coeff({0, 0})) + " is prime to p");
  c.conclusion = std::to_string(m) + " divides the degree of every point field";
  c.verified = index_hypotheses(F, p, m);
  return c;
}

ProbeResult probe_no_odd(const UniPoly& f, const Int& d, long height) {
  require(f.is_integral(), ErrorCode::PreconditionFailed, "f must be integral");
  const std::vector<Int> c = f.to_ints();
  const int n = f.degree();
  ProbeResult r;
  // f has even degree, so (x, y) and (-x, -y) give the same value: take y >= 0.
  for (long y = 0; y <= height; ++y)
    for (long x = -height; x <= height; ++x) {
      if (y == 0 && x != 1) continue;
      if (std::gcd(x, y) != 1) continue;
      ++r.examined;
      Int v = 0, xp = 1;
      std::vector<Int> ypow(static_cast<std::size_t>(n + 1), Int(1));
      for (int i = 1; i <= n; ++i) ypow[static_cast<std::size_t>(i)] = ypow[static_cast<std::size_t>(i - 1)] * y;
      for (int i = 0; i <= n; ++i) {
        v += c[static_cast<std::size_t>(i)] * xp * ypow[static_cast<std::size_t>(n - i)];
        xp *= x;
      }
      const Int w = v * d;
      if (w >= 0 && is_perfect_square(w) && r.found.size() < 8) r.found.push_back({Int(x), Int(y), int_sqrt(w)});
    }
  return r;
}

ProbeResult probe_conic(const MultiPoly& F, long height) {
  require(F.nvars() == 2 && F.total_degree() == 2, ErrorCode::PreconditionFailed, "F must be a conic in two variables");
  // F(a/c, b/c) c^2 = Q(a, b) + c L(a, b) + k c^2.
  const Int qa = F.coeff({2, 0}), qab = F.coeff({1, 1}), qb = F.coeff({0, 2});
  const Int la = F.coeff({1, 0}), lb = F.coeff({0, 1}), k = F.coeff({0, 0});
  ProbeResult r;
  for (long b = 0; b <= height; ++b)
    for (long a = -height; a <= height; ++a) {
      if (a == 0 && b == 0) continue;
      if (b == 0 && a < 0) continue;
      ++r.examined;
      const Int Q = qa * a * a + qab * a * b + qb * b * b;
      const Int L = la * a + lb * b;
      bool hit = false;
      if (Q == 0) hit = true;  // point at infinity, c = 0
      if (k == 0) {
        hit = hit || L != 0;
      } else {
        const Int disc = L * L - 4 * k * Q;
        hit = hit || (disc >= 0 && is_perfect_square(disc));
      }
      if (hit && r.found.size() < 8) r.found.push_back({Int(a), Int(b)});
    }
  return r;
}

}  // namespace hypdeg
