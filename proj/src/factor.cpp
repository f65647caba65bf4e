#include "hypdeg/factor.hpp"

#include <algorithm>
#include <random>

#include "hypdeg/error.hpp"
#include "hypdeg/modpoly.hpp"

namespace hypdeg {

std::string_view verdict_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Irreducible: return "Irreducible";
    case VerdictStatus::Factored: return "Factored";
    case VerdictStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::vector<std::pair<UniPoly, int>> factor_mod_p(const UniPoly& g, std::uint64_t p, std::uint64_t seed) {
  require(g.degree() >= 0, ErrorCode::PreconditionFailed, "factor_mod_p of the zero polynomial");
  require(p >= 2 && p < (1ull << 31) && is_probable_prime(Int(static_cast<unsigned long>(p))),
          ErrorCode::PreconditionFailed, "modulus must be a prime below 2^31");
  const FpPoly gp = fp_reduce(g, p);
  if (gp.degree() != g.degree())
    throw Error(ErrorCode::BadReduction, "p = " + std::to_string(p) + " divides the leading coefficient");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<UniPoly, int>> out;
  for (const auto& [f, mult] : fp_factor(gp, rng)) out.emplace_back(fp_lift(f), mult);
  return out;
}

namespace {

using IntPoly = std::vector<Int>;  // low to high

void trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

IntPoly to_intpoly(const FpPoly& a) {
  IntPoly out;
  for (auto v : a.c) out.emplace_back(static_cast<unsigned long>(v));
  return out;
}

IntPoly ip_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

IntPoly ip_mod(IntPoly a, const Int& m) {
  for (auto& v : a) v = mod_floor(v, m);
  trim(a);
  return a;
}

Int symmetric(const Int& v, const Int& m) {
  Int r = mod_floor(v, m);
  if (2 * r > m) r -= m;
  return r;
}

FpPoly to_fp(const IntPoly& a, std::uint64_t p) {
  FpPoly out{p, {}};
  const Int mp(static_cast<unsigned long>(p));
  for (const auto& v : a) out.c.push_back(mod_floor(v, mp).get_ui());
  out.trim();
  return out;
}

// Lifts F == g0*h0 (mod p) to monic G, H with F == G*H (mod p^k); F monic mod p^k.
std::pair<IntPoly, IntPoly> lift_pair(const IntPoly& F, const FpPoly& g0, const FpPoly& h0, std::uint64_t p, int k) {
  const FpExtGcd eg = fp_ext_gcd(g0, h0);
  IntPoly G = to_intpoly(g0), H = to_intpoly(h0);
  const Int pz(static_cast<unsigned long>(p));
  Int q = pz;
  for (int j = 1; j < k; ++j) {
    const Int next = q * pz;
    IntPoly e = F;
    const IntPoly gh = ip_mul(G, H);
    e.resize(std::max(e.size(), gh.size()), Int(0));
    for (std::size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
    e = ip_mod(e, next);
    for (auto& v : e) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), q.get_mpz_t());
    const FpPoly ebar = to_fp(e, p);
    const auto [qq, dg] = fp_divmod(fp_mul(eg.t, ebar), g0);
    const FpPoly dh = fp_add(fp_mul(eg.s, ebar), fp_mul(qq, h0));
    const IntPoly dgi = to_intpoly(dg), dhi = to_intpoly(dh);
    for (std::size_t i = 0; i < dgi.size(); ++i) G[i] += q * dgi[i];
    for (std::size_t i = 0; i < dhi.size(); ++i) H[i] += q * dhi[i];
    G = ip_mod(G, next);
    H = ip_mod(H, next);
    q = next;
  }
  return {G, H};
}

void lift_all(const IntPoly& F, const std::vector<FpPoly>& factors, std::uint64_t p, int k, std::vector<IntPoly>& out) {
  if (factors.size() == 1) {
    out.push_back(F);
    return;
  }
  const std::size_t half = factors.size() / 2;
  std::vector<FpPoly> a(factors.begin(), factors.begin() + static_cast<long>(half));
  std::vector<FpPoly> b(factors.begin() + static_cast<long>(half), factors.end());
  FpPoly g0{p, {1}}, h0{p, {1}};
  for (const auto& f : a) g0 = fp_mul(g0, f);
  for (const auto& f : b) h0 = fp_mul(h0, f);
  const auto [G, H] = lift_pair(F, g0, h0, p, k);
  lift_all(G, a, p, k, out);
  lift_all(H, b, p, k, out);
}

UniPoly from_intpoly(const IntPoly& a) { return UniPoly::from_ints(a); }

bool is_exact_integral_divisor(const UniPoly& f, const UniPoly& g, UniPoly& quotient) {
  if (g.degree() > f.degree()) return false;
  auto qr = divmod(f, g);
  if (!qr.remainder.is_zero() || !qr.quotient.is_integral()) return false;
  quotient = std::move(qr.quotient);
  return true;
}

struct PrimeData {
  std::uint64_t p;
  std::vector<FpPoly> factors;
};

// Good primes: odd, not dividing lc, f squarefree mod p.
std::vector<PrimeData> good_primes(const UniPoly& f, int wanted, std::mt19937_64& rng) {
  std::vector<PrimeData> out;
  int scanned = 0;
  for (std::uint32_t p : small_primes()) {
    if (p == 2) continue;
    if (static_cast<int>(out.size()) >= wanted || ++scanned > 400) break;
    const FpPoly fp = fp_reduce(f, p);
    if (fp.degree() != f.degree()) continue;
    const FpPoly g = fp_gcd(fp, fp_derivative(fp));
    if (g.degree() != 0) continue;
    PrimeData d{p, {}};
    for (auto& [fac, mult] : fp_factor(fp, rng)) d.factors.push_back(std::move(fac));
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<bool> subset_degree_sums(const std::vector<FpPoly>& factors, int n) {
  std::vector<bool> can(static_cast<std::size_t>(n) + 1, false);
  can[0] = true;
  for (const auto& f : factors)
    for (int s = n; s >= f.degree(); --s)
      if (can[static_cast<std::size_t>(s - f.degree())]) can[static_cast<std::size_t>(s)] = true;
  return can;
}

struct ZassenhausResult {
  std::vector<UniPoly> factors;
  bool complete = true;
};

// f primitive, squarefree, positive leading coefficient, degree >= 1.
ZassenhausResult zassenhaus(const UniPoly& f, const FactorEffort& effort, std::mt19937_64& rng) {
  ZassenhausResult res;
  const int n = f.degree();
  if (n <= 1) {
    res.factors.push_back(f);
    return res;
  }
  const auto primes = good_primes(f, std::max(1, effort.primes), rng);
  require(!primes.empty(), ErrorCode::PreconditionFailed, "no good prime found");
  std::vector<bool> possible(static_cast<std::size_t>(n) + 1, true);
  const PrimeData* best = &primes.front();
  for (const auto& pd : primes) {
    const auto sums = subset_degree_sums(pd.factors, n);
    for (std::size_t s = 0; s < possible.size(); ++s) possible[s] = possible[s] && sums[s];
    if (pd.factors.size() < best->factors.size()) best = &pd;
  }
  bool proper = false;
  for (int s = 1; s < n; ++s) proper = proper || possible[static_cast<std::size_t>(s)];
  if (!proper || best->factors.size() == 1) {
    res.factors.push_back(f);
    return res;
  }

  const std::uint64_t p = best->p;
  const Int pz(static_cast<unsigned long>(p));
  const auto fi = f.to_ints();
  const Int lc = fi.back();
  Int norm2 = 0;
  for (const auto& c : fi) norm2 += c * c;
  const Int bound = abs(lc) * int_pow(Int(2), static_cast<unsigned long>(n)) * (int_sqrt(norm2) + 1);
  int k = 1;
  Int modulus = pz;
  while (modulus <= 2 * bound) {
    modulus *= pz;
    ++k;
  }
  Int lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
  IntPoly monic_f;
  for (const auto& c : fi) monic_f.push_back(c * lc_inv);
  monic_f = ip_mod(monic_f, modulus);
  std::vector<IntPoly> lifted;
  lift_all(monic_f, best->factors, p, k, lifted);

  UniPoly rest = f;
  long tests = 0;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    const Int lc_rest = rest.leading().get_num();
    const Int c0_rest = rest.coeff(0).get_num();
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    bool found = false;
    for (;;) {
      if (++tests > effort.max_subsets) {
        res.complete = false;
        res.factors.push_back(rest);
        return res;
      }
      bool pass = true;
      if (c0_rest != 0) {
        Int c0 = lc_rest;
        for (auto i : idx) c0 = mod_floor(c0 * (lifted[i].empty() ? Int(0) : lifted[i][0]), modulus);
        c0 = symmetric(c0, modulus);
        pass = c0 != 0 && (lc_rest * c0_rest) % c0 == 0;
      }
      if (pass) {
        IntPoly prod{lc_rest};
        for (auto i : idx) prod = ip_mod(ip_mul(prod, lifted[i]), modulus);
        for (auto& v : prod) v = symmetric(v, modulus);
        trim(prod);
        UniPoly cand = from_intpoly(prod);
        UniPoly quotient;
        if (cand.degree() >= 1) {
          cand = cand.primitive_part();
          if (is_exact_integral_divisor(rest, cand, quotient)) {
            res.factors.push_back(cand);
            rest = quotient;
            std::vector<IntPoly> keep;
            for (std::size_t i = 0; i < lifted.size(); ++i)
              if (std::find(idx.begin(), idx.end(), i) == idx.end()) keep.push_back(lifted[i]);
            lifted = std::move(keep);
            found = true;
            break;
          }
        }
      }
      // Next combination in lexicographic order.
      std::size_t pos = s;
      while (pos > 0 && idx[pos - 1] == lifted.size() - s + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++s;
  }
  if (rest.degree() >= 1) res.factors.push_back(rest.primitive_part());
  return res;
}

bool poly_less(const UniPoly& a, const UniPoly& b) { return lex_less(a, b); }

}  // namespace

Factorization factor_over_Z(const UniPoly& g, const FactorEffort& effort) {
  require(g.degree() >= 1, ErrorCode::PreconditionFailed, "factor_over_Z needs degree >= 1");
  Factorization out;
  out.content = g.content();
  const UniPoly pp = g.primitive_part();
  std::mt19937_64 rng(effort.seed);
  for (const auto& [part, mult] : squarefree_decomposition(pp)) {
    const auto z = zassenhaus(part.primitive_part(), effort, rng);
    out.complete = out.complete && z.complete;
    for (const auto& f : z.factors) out.factors.emplace_back(f, mult);
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return poly_less(a.first, b.first);
    return a.second < b.second;
  });
  return out;
}

IrreducibilityVerdict is_irreducible_Q(const UniPoly& g, const FactorEffort& effort) {
  require(g.degree() >= 1, ErrorCode::PreconditionFailed, "irreducibility test needs degree >= 1");
  IrreducibilityVerdict v;
  if (g.degree() == 1) {
    v.status = VerdictStatus::Irreducible;
    v.witness = "degree 1";
    return v;
  }
  const UniPoly f = g.primitive_part();
  auto run_full = [&]() {
    const Factorization fz = factor_over_Z(f, effort);
    int count = 0;
    for (const auto& [fac, mult] : fz.factors) count += mult;
    if (fz.complete && count == 1) {
      v.status = VerdictStatus::Irreducible;
      v.witness = "full integer factorization";
    } else if (count > 1) {
      v.status = VerdictStatus::Factored;
      v.factors = fz.factors;
      v.witness = fz.complete ? "full integer factorization" : "partial integer factorization";
    } else {
      v.status = VerdictStatus::Unknown;
      v.witness = "recombination budget exhausted";
    }
    return v;
  };
  if (gcd(f, f.derivative()).degree() >= 1) return run_full();
  if (f.degree() == 2) {
    const Rat disc_q = f.coeff(1) * f.coeff(1) - 4 * f.coeff(2) * f.coeff(0);
    const Int disc = disc_q.get_num();
    if (is_perfect_square(disc)) return run_full();
    v.status = VerdictStatus::Irreducible;
    v.witness = "no rational root (degree 2)";
    return v;
  }
  std::mt19937_64 rng(effort.seed);
  const auto primes = good_primes(f, std::max(1, effort.primes), rng);
  std::vector<bool> possible(static_cast<std::size_t>(f.degree()) + 1, true);
  std::string used;
  for (const auto& pd : primes) {
    if (pd.factors.size() == 1) {
      v.status = VerdictStatus::Irreducible;
      v.witness = "irreducible mod p=" + std::to_string(pd.p);
      return v;
    }
    const auto sums = subset_degree_sums(pd.factors, f.degree());
    for (std::size_t s = 0; s < possible.size(); ++s) possible[s] = possible[s] && sums[s];
    used += (used.empty() ? "" : ",") + std::to_string(pd.p);
    bool proper = false;
    for (int s = 1; s < f.degree(); ++s) proper = proper || possible[static_cast<std::size_t>(s)];
    if (!proper) {
      v.status = VerdictStatus::Irreducible;
      v.witness = "incompatible degree patterns mod p=" + used;
      return v;
    }
  }
  return run_full();
}

}  // namespace hypdeg
