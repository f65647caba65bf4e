#include "hypdeg/modpoly.hpp"

#include <algorithm>

#include "hypdeg/error.hpp"

namespace hypdeg {

std::uint64_t fp_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1u) r = r * a % p;
    a = a * a % p;
    e >>= 1u;
  }
  return r;
}

std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p) {
  require(a % p != 0, ErrorCode::PreconditionFailed, "inverse of zero mod p");
  return fp_pow(a, p - 2, p);
}

FpPoly fp_reduce(const UniPoly& g, std::uint64_t p) {
  FpPoly out{p, {}};
  const Int modulus(static_cast<unsigned long>(p));
  for (const auto& c : g.coeffs()) {
    require(c.get_den() == 1, ErrorCode::PreconditionFailed, "reduction mod p needs integer coefficients");
    out.c.push_back(mod_floor(c.get_num(), modulus).get_ui());
  }
  out.trim();
  return out;
}

UniPoly fp_lift(const FpPoly& g) {
  std::vector<Rat> c;
  for (auto v : g.c) c.emplace_back(static_cast<unsigned long>(v));
  return UniPoly(std::move(c));
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b) {
  FpPoly out{a.p, std::vector<std::uint64_t>(std::max(a.c.size(), b.c.size()), 0)};
  for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] = (out.c[i] + b.c[i]) % a.p;
  out.trim();
  return out;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b) {
  FpPoly out{a.p, std::vector<std::uint64_t>(std::max(a.c.size(), b.c.size()), 0)};
  for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] = (out.c[i] + a.p - b.c[i]) % a.p;
  out.trim();
  return out;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
  if (a.is_zero() || b.is_zero()) return {a.p, {}};
  FpPoly out{a.p, std::vector<std::uint64_t>(a.c.size() + b.c.size() - 1, 0)};
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] = (out.c[i + j] + a.c[i] * b.c[j]) % a.p;
  }
  out.trim();
  return out;
}

FpPoly fp_scale(const FpPoly& a, std::uint64_t s) {
  FpPoly out = a;
  for (auto& v : out.c) v = v * (s % a.p) % a.p;
  out.trim();
  return out;
}

std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b) {
  require(!b.is_zero(), ErrorCode::PreconditionFailed, "division by zero polynomial mod p");
  const std::uint64_t p = a.p;
  if (a.degree() < b.degree()) return {{p, {}}, a};
  std::vector<std::uint64_t> r = a.c;
  std::vector<std::uint64_t> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
  const std::uint64_t inv = fp_inv(b.lead(), p);
  const std::size_t db = static_cast<std::size_t>(b.degree());
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    const std::uint64_t f = r[i] * inv % p;
    const std::size_t shift = i - db;
    q[shift] = f;
    for (std::size_t j = 0; j <= db; ++j) r[shift + j] = (r[shift + j] + p - f * b.c[j] % p) % p;
  }
  r.resize(db);
  FpPoly quo{p, std::move(q)}, rem{p, std::move(r)};
  quo.trim();
  rem.trim();
  return {quo, rem};
}

FpPoly fp_rem(const FpPoly& a, const FpPoly& b) { return fp_divmod(a, b).second; }

FpPoly fp_monic(const FpPoly& a) {
  if (a.is_zero()) return a;
  return fp_scale(a, fp_inv(a.lead(), a.p));
}

FpPoly fp_gcd(const FpPoly& a, const FpPoly& b) {
  FpPoly x = a, y = b;
  while (!y.is_zero()) {
    FpPoly r = fp_rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return fp_monic(x);
}

FpPoly fp_derivative(const FpPoly& a) {
  FpPoly out{a.p, {}};
  for (std::size_t i = 1; i < a.c.size(); ++i) out.c.push_back(a.c[i] * (i % a.p) % a.p);
  out.trim();
  return out;
}

FpPoly fp_powmod(const FpPoly& base, const Int& e, const FpPoly& m) {
  FpPoly result{m.p, {1 % m.p}};
  result.trim();
  result = fp_rem(result, m);
  FpPoly b = fp_rem(base, m);
  const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = fp_rem(fp_mul(result, result), m);
    if (mpz_tstbit(e.get_mpz_t(), i) != 0) result = fp_rem(fp_mul(result, b), m);
  }
  return result;
}

FpExtGcd fp_ext_gcd(const FpPoly& a, const FpPoly& b) {
  const std::uint64_t p = a.p;
  FpPoly r0 = a, r1 = b;
  FpPoly s0{p, {1}}, s1{p, {}};
  FpPoly t0{p, {}}, t1{p, {1}};
  while (!r1.is_zero()) {
    auto [q, r] = fp_divmod(r0, r1);
    FpPoly s2 = fp_sub(s0, fp_mul(q, s1));
    FpPoly t2 = fp_sub(t0, fp_mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const std::uint64_t inv = fp_inv(r0.lead(), p);
  return {fp_scale(r0, inv), fp_scale(s0, inv), fp_scale(t0, inv)};
}

namespace {

FpPoly fp_x(std::uint64_t p) { return {p, {0, 1}}; }

bool is_one(const FpPoly& a) { return a.c.size() == 1 && a.c[0] == 1; }

FpPoly exact_div(const FpPoly& a, const FpPoly& b) { return fp_divmod(a, b).first; }

// a(t) = b(t)^p over F_p: keep every p-th coefficient.
FpPoly pth_root(const FpPoly& a) {
  FpPoly out{a.p, {}};
  for (std::size_t i = 0; i < a.c.size(); i += a.p) out.c.push_back(a.c[i]);
  out.trim();
  return out;
}

void squarefree_parts(const FpPoly& f, int mult, std::vector<std::pair<FpPoly, int>>& out) {
  if (f.degree() < 1) return;
  FpPoly c = fp_gcd(f, fp_derivative(f));
  FpPoly w = exact_div(f, c);
  int i = 1;
  while (w.degree() >= 1) {
    FpPoly y = fp_gcd(w, c);
    FpPoly z = exact_div(w, y);
    if (z.degree() >= 1) out.emplace_back(z, i * mult);
    ++i;
    w = std::move(y);
    c = exact_div(c, w);
  }
  if (c.degree() >= 1) squarefree_parts(pth_root(c), mult * static_cast<int>(f.p), out);
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<FpPoly, int>> distinct_degree(FpPoly f) {
  std::vector<std::pair<FpPoly, int>> out;
  const std::uint64_t p = f.p;
  const FpPoly x = fp_x(p);
  FpPoly h = fp_rem(x, f);
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = fp_powmod(h, Int(static_cast<unsigned long>(p)), f);
    FpPoly g = fp_gcd(f, fp_sub(h, x));
    if (g.degree() >= 1) {
      out.emplace_back(g, d);
      f = exact_div(f, g);
      h = fp_rem(h, f);
    }
  }
  if (f.degree() >= 1) out.emplace_back(f, f.degree());
  return out;
}

FpPoly random_below(std::uint64_t p, int degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  FpPoly a{p, std::vector<std::uint64_t>(static_cast<std::size_t>(degree), 0)};
  for (auto& v : a.c) v = dist(rng);
  a.trim();
  return a;
}

// Splits a monic squarefree product of irreducibles of common degree d.
void equal_degree(const FpPoly& f, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const std::uint64_t p = f.p;
  for (;;) {
    FpPoly a = random_below(p, f.degree(), rng);
    if (a.degree() < 1) continue;
    FpPoly b;
    if (p == 2) {
      // Absolute trace a + a^2 + ... + a^(2^(d-1)) lands in F_2 on each residue field.
      FpPoly term = a;
      b = a;
      for (int i = 1; i < d; ++i) {
        term = fp_rem(fp_mul(term, term), f);
        b = fp_add(b, term);
      }
    } else {
      Int e = (int_pow(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(d)) - 1) / 2;
      b = fp_sub(fp_powmod(a, e, f), FpPoly{p, {1}});
    }
    FpPoly g = fp_gcd(f, b);
    if (g.degree() >= 1 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(exact_div(f, g), d, rng, out);
      return;
    }
  }
}

bool fp_less(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.c < b.c;
}

}  // namespace

std::vector<std::pair<FpPoly, int>> fp_factor(const FpPoly& g, std::mt19937_64& rng) {
  require(!g.is_zero(), ErrorCode::PreconditionFailed, "factorization of the zero polynomial");
  std::vector<std::pair<FpPoly, int>> sqf;
  squarefree_parts(fp_monic(g), 1, sqf);
  std::vector<std::pair<FpPoly, int>> out;
  for (const auto& [part, mult] : sqf) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<FpPoly> pieces;
      equal_degree(block, d, rng, pieces);
      for (auto& piece : pieces) out.emplace_back(std::move(piece), mult);
    }
  }
  // Merge equal factors arising from different square-free layers.
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return fp_less(a.first, b.first); });
  std::vector<std::pair<FpPoly, int>> merged;
  for (auto& item : out) {
    if (!merged.empty() && merged.back().first == item.first) merged.back().second += item.second;
    else merged.push_back(std::move(item));
  }
  return merged;
}

bool fp_is_irreducible(const FpPoly& g) {
  if (g.degree() < 1) return false;
  const FpPoly f = fp_monic(g);
  if (!is_one(fp_gcd(f, fp_derivative(f)))) return false;
  const auto blocks = distinct_degree(f);
  return blocks.size() == 1 && blocks.front().second == f.degree();
}

}  // namespace hypdeg
