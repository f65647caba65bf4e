#include "hypdeg/specializer.hpp"

#include <gmpxx.h>

#include <algorithm>

#include "hypdeg/error.hpp"

namespace hypdeg {

namespace {

Int binomial(unsigned n, unsigned k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Scale every coordinate by the lcm of the denominators. For homogeneous f of degree d this
// multiplies f(u) by lambda^d, so every divisibility statement survives.
std::vector<UniPoly> integerize(const MultiPoly& f, std::vector<UniPoly> u) {
  if (!f.is_homogeneous()) return u;
  Int lambda = 1;
  for (const auto& p : u)
    for (const auto& c : p.coeffs()) lambda = int_lcm(lambda, c.get_den());
  if (lambda == 1) return u;
  for (auto& p : u) p = p.scaled(Rat(lambda));
  return u;
}

bool divides(const UniPoly& G, const UniPoly& a) { return (a % G).is_zero(); }

}  // namespace

std::vector<long> pick_n(const MultiPoly& g) {
  require(!g.is_zero(), ErrorCode::PreconditionFailed, "pick_n needs a nonzero polynomial");
  const int m = g.nvars();
  std::vector<long> n(static_cast<std::size_t>(m), 1);
  // Peel variables from the last one down: fix n for the leading coefficient in x_k first.
  auto rec = [&](auto&& self, const MultiPoly& h, int k) -> void {
    if (k < 0) return;
    const int dk = h.degree_in(k);
    MultiPoly lc(m);
    for (const auto& [ex, c] : h.terms()) {
      if (ex[static_cast<std::size_t>(k)] != dk) continue;
      ExponentVector e2 = ex;
      e2[static_cast<std::size_t>(k)] = 0;
      lc.add_term(e2, c);
    }
    self(self, lc, k - 1);
    IntVector pt(static_cast<std::size_t>(m));
    for (long v = 1; v <= dk + 1; ++v) {
      n[static_cast<std::size_t>(k)] = v;
      for (int j = 0; j < m; ++j) pt[static_cast<std::size_t>(j)] = j <= k ? Int(n[static_cast<std::size_t>(j)]) : Int(0);
      // Only variables 0..k occur in h.
      if (h.evaluate(pt) != 0) return;
    }
    throw Error(ErrorCode::PreconditionFailed, "pick_n search failed");
  };
  rec(rec, g, m - 1);
  return n;
}

LeadingForm leading_form(const MultiPoly& f, const std::vector<long>& d) {
  require(d.size() == static_cast<std::size_t>(f.nvars()), ErrorCode::PreconditionFailed, "degree vector length mismatch");
  LeadingForm lf;
  lf.g_d = MultiPoly(f.nvars());
  bool first = true;
  for (const auto& [ex, c] : f.terms()) {
    long v = 0;
    for (std::size_t j = 0; j < d.size(); ++j) v += ex[j] * d[j];
    if (first || v > lf.D) {
      lf.D = v;
      lf.g_d = MultiPoly(f.nvars());
      first = false;
    }
    if (v == lf.D) lf.g_d.add_term(ex, c);
  }
  return lf;
}

SpecResult random_spec(const MultiPoly& f, const std::vector<long>& d, const RationalVector& e, const Int& T,
                       std::uint64_t seed, const SpecOptions& options) {
  const std::size_t m = static_cast<std::size_t>(f.nvars());
  require(d.size() == m && e.size() == m, ErrorCode::PreconditionFailed, "degree/exponent vector length mismatch");
  require(T >= 1, ErrorCode::PreconditionFailed, "height bound T must be positive");
  for (std::size_t j = 0; j < m; ++j)
    require(d[j] >= 0 && e[j] > 0, ErrorCode::PreconditionFailed, "degrees must be nonnegative and exponents positive");
  SpecResult res;
  const LeadingForm lf = leading_form(f, d);
  res.D = lf.D;
  SpecTuple& s = res.spec;
  s.d = d;
  s.T = T;
  s.e = e;
  s.n = options.forced_n ? *options.forced_n : pick_n(lf.g_d);
  require(s.n.size() == m, ErrorCode::PreconditionFailed, "leading coefficient vector length mismatch");
  IntVector nint(m);
  for (std::size_t j = 0; j < m; ++j) nint[j] = s.n[j];
  res.C = lf.g_d.evaluate(nint);
  for (std::size_t j = 0; j < m; ++j) s.coeff_bound.push_back(floor_rational_power(T, e[j]));

  if (options.forced_x) {
    s.x = *options.forced_x;
    require(s.x.size() == m, ErrorCode::PreconditionFailed, "forced tuple length mismatch");
  } else {
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(static_cast<unsigned long>(seed));
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<Int> c(static_cast<std::size_t>(d[j]) + 1);
      const Int width = 2 * s.coeff_bound[j] + 1;
      for (long k = 0; k < d[j]; ++k) c[static_cast<std::size_t>(k)] = Int(rng.get_z_range(width)) - s.coeff_bound[j];
      c[static_cast<std::size_t>(d[j])] = s.n[j];
      s.x.push_back(UniPoly::from_ints(c));
    }
  }

  res.F = f.evaluate_composition(s.x);
  res.degenerate = res.F.is_zero() || res.F.degree() < res.D;

  // Heights: E over the corners of f, and the explicit constant.
  std::vector<ExponentVector> pts;
  for (const auto& [ex, c] : f.terms()) pts.push_back(ex);
  if (!pts.empty()) {
    const Polytope H = corners_general(pts);
    for (std::size_t k = 0; k < H.corners.size(); ++k) {
      Rat v = 0;
      for (std::size_t j = 0; j < m; ++j) v += e[j] * H.corners[k][j];
      if (k == 0 || v > res.E) res.E = v;
    }
  }
  res.height_bound = 0;
  for (const auto& [ex, c] : f.terms()) {
    Int term = abs(c);
    for (std::size_t j = 0; j < m; ++j) {
      const Int base = Int(d[j] + 1) * std::max(Int(std::abs(s.n[j])), s.coeff_bound[j]);
      term *= int_pow(base, static_cast<unsigned long>(ex[j]));
    }
    res.height_bound += term;
  }
  res.height_ok = res.F.height() <= Rat(res.height_bound);

  if (options.compute_verdicts && !res.F.is_zero()) {
    res.x_irreducible = true;
    for (const auto& x : s.x) {
      if (x.degree() <= 0) {
        IrreducibilityVerdict v;
        v.witness = "constant coordinate";
        res.x_verdicts.push_back(v);
        continue;
      }
      res.x_verdicts.push_back(is_irreducible_Q(x, options.effort));
      res.x_irreducible = res.x_irreducible && res.x_verdicts.back().status == VerdictStatus::Irreducible;
    }
    if (res.F.degree() >= 1) {
      res.F_verdict = is_irreducible_Q(res.F, options.effort);
      if (res.F_verdict.status == VerdictStatus::Irreducible)
        res.nonsingular_witness = check_nonsingular(f, s.x, res.F).witness;
    } else {
      res.F_verdict.witness = "constant";
    }
  }
  return res;
}

NonsingularCheck check_nonsingular(const MultiPoly& f, const std::vector<UniPoly>& u, const UniPoly& P) {
  require(P.degree() >= 1, ErrorCode::PreconditionFailed, "modulus must have positive degree");
  require(u.size() == static_cast<std::size_t>(f.nvars()), ErrorCode::PreconditionFailed, "solution length mismatch");
  if (!divides(P, f.evaluate_composition(u))) throw Error(ErrorCode::NotASolution, "P does not divide f(u)");
  NonsingularCheck out;
  for (int j = 0; j < f.nvars(); ++j) {
    if (!divides(P, f.partial_derivative(j).evaluate_composition(u))) {
      out.nonsingular = true;
      out.witness = j;
      break;
    }
  }
  return out;
}

PolySolution hensel_lift(const MultiPoly& f, const PolySolution& sol, int e) {
  require(e >= 1, ErrorCode::PreconditionFailed, "lift exponent must be positive");
  const UniPoly& P = sol.modulus;
  const NonsingularCheck chk = check_nonsingular(f, sol.u, P);
  if (!chk.nonsingular) throw Error(ErrorCode::SingularInput, "every partial derivative vanishes modulo P");
  PolySolution out;
  out.witness = chk.witness;
  out.modulus = P;
  out.u = sol.u;
  if (e == 1) return out;
  const int j = chk.witness;
  const MultiPoly fj = f.partial_derivative(j);
  const UniPoly c = inverse_mod(fj.evaluate_composition(sol.u) % P, P);
  std::vector<UniPoly> y = sol.u;
  UniPoly Pk = P;
  for (int k = 1; k < e; ++k) {
    const UniPoly Q = poly_divide_exact(f.evaluate_composition(y), Pk);
    const UniPoly Pk1 = Pk * P;
    y[static_cast<std::size_t>(j)] = (y[static_cast<std::size_t>(j)] - c * Q * Pk) % Pk1;
    Pk = Pk1;
  }
  out.u = integerize(f, y);
  out.modulus = Pk;
  require(divides(out.modulus, f.evaluate_composition(out.u)), ErrorCode::NotASolution, "lifted solution failed the final check");
  return out;
}

PolySolution crt_combine(const MultiPoly& f, const std::vector<PolySolution>& parts) {
  require(!parts.empty(), ErrorCode::PreconditionFailed, "crt_combine needs at least one part");
  for (std::size_t a = 0; a < parts.size(); ++a)
    for (std::size_t b = a + 1; b < parts.size(); ++b)
      if (resultant(parts[a].modulus, parts[b].modulus) == 0)
        throw Error(ErrorCode::NotCoprime, "moduli share a common factor");
  PolySolution out = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) {
    const UniPoly& M2 = parts[k].modulus;
    const UniPoly inv = inverse_mod(out.modulus % M2, M2);
    for (std::size_t j = 0; j < out.u.size(); ++j) {
      const UniPoly delta = ((parts[k].u[j] - out.u[j]) * inv) % M2;
      out.u[j] = out.u[j] + out.modulus * delta;
    }
    out.modulus = out.modulus * M2;
    for (auto& p : out.u) p = p % out.modulus;
  }
  out.u = integerize(f, out.u);
  require(divides(out.modulus, f.evaluate_composition(out.u)), ErrorCode::NotASolution, "combined solution failed the final check");
  out.witness = -1;
  for (const auto& p : parts) out.witness = std::max(out.witness, p.witness);
  return out;
}

std::vector<UniPoly> reduce_min(const MultiPoly& f, const std::vector<UniPoly>& y, const UniPoly& G) {
  require(G.degree() >= 0, ErrorCode::PreconditionFailed, "modulus must be nonzero");
  if (!divides(G, f.evaluate_composition(y))) throw Error(ErrorCode::NotASolution, "G does not divide f(y)");
  std::vector<UniPoly> v = y;
  const int DG = G.degree();
  bool integral = G.is_integral();
  for (const auto& p : y) integral = integral && p.is_integral();
  if (f.is_homogeneous() && integral) {
    // Scale everything by g0 = lc(G), then cancel the top term of one coordinate by c0 t^{deg - DG} G.
    const Rat g0 = G.leading();
    for (;;) {
      auto it = std::find_if(v.begin(), v.end(), [&](const UniPoly& p) { return p.degree() >= DG; });
      if (it == v.end()) break;
      const Rat c0 = it->leading();
      const int deg = it->degree();
      for (auto& p : v) p = p.scaled(g0);
      *it = *it - UniPoly::monomial(c0, deg - DG) * G;
    }
  } else {
    for (auto& p : v) p = p % G;
    v = integerize(f, v);
  }
  require(divides(G, f.evaluate_composition(v)), ErrorCode::NotASolution, "reduced solution failed the final check");
  return v;
}

QuotientForm quotient_form(const MultiPoly& f, const UniPoly& G, const std::vector<UniPoly>& u) {
  const std::size_t m = static_cast<std::size_t>(f.nvars());
  require(u.size() == m, ErrorCode::PreconditionFailed, "solution length mismatch");
  require(!G.is_zero(), ErrorCode::PreconditionFailed, "modulus must be nonzero");
  // Per variable, the expansion (x_j G + u_j)^k = sum_l binom(k, l) G^l u_j^{k-l} x_j^l.
  PolyOverT expanded;
  for (const auto& [ex, a] : f.terms()) {
    PolyOverT acc{{ExponentVector(m, 0), UniPoly::constant(Rat(a))}};
    for (std::size_t j = 0; j < m; ++j) {
      const unsigned k = static_cast<unsigned>(ex[j]);
      if (k == 0) continue;
      PolyOverT next;
      for (const auto& [e0, c0] : acc) {
        for (unsigned l = 0; l <= k; ++l) {
          UniPoly c = c0 * G.pow(l) * u[j].pow(k - l);
          c = c.scaled(Rat(binomial(k, l)));
          if (c.is_zero()) continue;
          ExponentVector e1 = e0;
          e1[j] += static_cast<int>(l);
          next[e1] += c;
        }
      }
      acc = std::move(next);
    }
    for (auto& [e0, c0] : acc) expanded[e0] += c0;
  }
  QuotientForm q;
  for (auto& [e0, c0] : expanded) {
    if (c0.is_zero()) continue;
    q.g[e0] = poly_divide_exact(c0, G);
  }
  std::vector<ExponentVector> pts_f, pts_g;
  for (const auto& [ex, c] : f.terms()) pts_f.push_back(ex);
  for (const auto& [ex, c] : q.g)
    if (!c.is_zero()) pts_g.push_back(ex);
  q.corners_f = corners_general(pts_f).corners;
  q.corners_g = corners_general(pts_g).corners;
  if (q.corners_f != q.corners_g) throw Error(ErrorCode::CornerMismatch, "corner sets of f and g differ");
  if (f.is_homogeneous()) {
    const unsigned d = static_cast<unsigned>(f.total_degree());
    const UniPoly Gd1 = d >= 1 ? G.pow(d - 1) : UniPoly::constant(1);
    for (const auto& h : q.corners_f) {
      auto it = q.g.find(h);
      if (it == q.g.end() || it->second != Gd1.scaled(Rat(f.coeff(h))))
        throw Error(ErrorCode::CornerMismatch, "corner coefficient is not G^(d-1) times the coefficient of f");
    }
  }
  // Nonsingularity factor by factor over the distinct irreducible factors of G.
  q.nonsingular = true;
  if (G.degree() >= 1) {
    const Factorization fac = factor_over_Z(G);
    for (const auto& [P, mult] : fac.factors) {
      (void)mult;
      try {
        q.nonsingular = q.nonsingular && check_nonsingular(f, u, P).nonsingular;
      } catch (const Error&) {
        q.nonsingular = false;
      }
    }
  }
  return q;
}

int field_degree(const UniPoly& F, const UniPoly& x) {
  require(F.degree() >= 1, ErrorCode::PreconditionFailed, "field_degree needs deg F >= 1");
  if ((x % F).is_constant()) return 1;
  const int D = F.degree();
  std::vector<Rat> xs, ys;
  for (int s = 0; s <= D; ++s) {
    xs.emplace_back(s);
    ys.push_back(resultant(F, UniPoly::constant(Rat(s)) - x));
  }
  const UniPoly chi = interpolate(xs, ys);
  if (chi.degree() <= 0) return 0;
  return chi.degree() - gcd(chi, chi.derivative()).degree();
}

}  // namespace hypdeg
