#include "hypdeg/degree_sets.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>
#include <numeric>

#include "hypdeg/error.hpp"
#include "hypdeg/parallel.hpp"

namespace hypdeg {

namespace {

long lgcd(long a, long b) { return std::gcd(a, b); }

long lmod(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

// Inverse of a modulo m (gcd(a, m) = 1, m >= 1).
long linv(long a, long m) {
  if (m == 1) return 0;
  long g = m, x = 0, r = lmod(a, m), y = 1;
  while (r != 0) {
    const long q = g / r;
    std::tie(g, r) = std::make_pair(r, g - q * r);
    std::tie(x, y) = std::make_pair(y, x - q * y);
  }
  return lmod(x, m);
}

Rat dot_ir(const std::vector<long>& i, const RationalVector& r) {
  Rat s = 0;
  for (std::size_t j = 0; j < i.size(); ++j) s += r[j] * i[j];
  return s;
}

long vec_gcd(const std::vector<long>& v) {
  long g = 0;
  for (long x : v) g = lgcd(g, x);
  return g;
}

long dot_hd(const ExponentVector& h, const std::vector<long>& d) {
  long s = 0;
  for (std::size_t j = 0; j < h.size(); ++j) s += static_cast<long>(h[j]) * d[j];
  return s;
}

// The proof's pair: N nearest to r2 D / s in the class D / i2 mod i1, then the first shift
// k = 0, 1, -1, 2, ... with m = M - k i2, n = N + k i1 positive and coprime.
std::optional<std::pair<long, long>> euclid2_search(long i1, long i2, const Rat& r1, const Rat& r2, long D) {
  const Rat s = r1 * i1 + r2 * i2;
  const Rat target = r2 * D / s;
  const long c = lmod(lmod(D, i1) * linv(i2, i1), i1);
  const long N = c + i1 * to_i64(rat_round((target - c) / i1));
  if ((D - i2 * N) % i1 != 0) return std::nullopt;
  const long M = (D - i2 * N) / i1;
  const long kmax = jacobsthal(std::max(D, 1L)) + 1;
  for (long t = 0; t <= 2 * kmax; ++t) {
    const long k = t == 0 ? 0 : (t % 2 == 1 ? (t + 1) / 2 : -(t / 2));
    const long m = M - k * i2, n = N + k * i1;
    if (m > 0 && n > 0 && lgcd(m, n) == 1) return std::make_pair(m, n);
  }
  return std::nullopt;
}

// Recursive peel-off. Divides by gcd(i) first; at each level d_m is taken in the residue class
// that keeps the remainder divisible by gcd(i_1..i_{m-1}), trying classes nearest the target.
std::optional<std::vector<long>> euclid_rec(std::vector<long> i, const RationalVector& r, long D) {
  const long g0 = vec_gcd(i);
  if (D <= 0 || D % g0 != 0) return std::nullopt;
  for (auto& x : i) x /= g0;
  D /= g0;
  const std::size_t m = i.size();
  if (m == 2) {
    auto p = euclid2_search(i[0], i[1], r[0], r[1], D);
    if (!p) return std::nullopt;
    return std::vector<long>{p->first, p->second};
  }
  const std::vector<long> head(i.begin(), i.end() - 1);
  const RationalVector rhead(r.begin(), r.end() - 1);
  const long gh = vec_gcd(head);
  const long im = i.back();
  const Rat target = r.back() * D / dot_ir(i, r);
  const long cls = lmod(lmod(D, gh) * linv(im, gh), gh);
  const long base = cls + gh * to_i64(rat_round((target - cls) / gh));
  for (long t = 0; t < 8; ++t) {
    const long dm = base + (t % 2 == 1 ? (t + 1) / 2 : -(t / 2)) * gh;
    if (dm <= 0 || D - dm * im <= 0) continue;
    auto rest = euclid_rec(head, rhead, D - dm * im);
    if (!rest) continue;
    rest->push_back(dm);
    return rest;
  }
  return std::nullopt;
}

}  // namespace

long jacobsthal(long D) {
  require(D >= 1, ErrorCode::PreconditionFailed, "jacobsthal needs D >= 1");
  static std::mutex mu;
  static std::map<std::uint64_t, long> memo;
  const auto primes = prime_factors(static_cast<std::uint64_t>(D));
  std::uint64_t rad = 1;
  for (auto p : primes) rad *= p;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(rad);
    if (it != memo.end()) return it->second;
  }
  require(rad <= 100000000ULL, ErrorCode::BoundsTooLarge, "rad(D) too large for an exact scan");
  std::vector<bool> hit(rad, false);
  for (auto p : primes)
    for (std::uint64_t x = 0; x < rad; x += p) hit[x] = true;
  // Gaps over one period, including the wrap from the last coprime residue to rad + 1.
  long best = 1, last = -1, first = -1;
  for (std::uint64_t x = 1; x <= rad; ++x) {
    if (hit[x % rad]) continue;
    const long xl = static_cast<long>(x);
    if (last >= 0) best = std::max(best, xl - last);
    else first = xl;
    last = xl;
  }
  best = std::max(best, first + static_cast<long>(rad) - last);
  std::lock_guard<std::mutex> lock(mu);
  memo[rad] = best;
  return best;
}

std::pair<long, long> euclid2(long i1, long i2, const Rat& r1, const Rat& r2, long D) {
  require(i1 > 0 && i2 > 0 && lgcd(i1, i2) == 1, ErrorCode::PreconditionFailed, "euclid2 needs coprime positive i1, i2");
  require(r1 > 0 && r2 > 0, ErrorCode::PreconditionFailed, "euclid2 needs positive r");
  const auto p = euclid2_search(i1, i2, r1, r2, D);
  if (!p) throw Error(ErrorCode::DTooSmall, "no positive coprime pair near the target");
  const Rat s = r1 * i1 + r2 * i2;
  const long J = jacobsthal(D);
  if (abs(Rat(p->first) - r1 * D / s) > i2 * J || abs(Rat(p->second) - r2 * D / s) > i1 * J)
    throw Error(ErrorCode::DTooSmall, "euclid2 proximity bound fails");
  return *p;
}

Rat euclid_bound(const std::vector<long>& i, long D, std::size_t l) {
  Rat b = 0;
  if (l <= 1) b += Rat(i[0] + i[1]) * jacobsthal(D);
  for (std::size_t j = 1; j < i.size(); ++j) b += i[j];
  return b;
}

std::vector<long> euclid_m(const std::vector<long>& i, const RationalVector& r, long D) {
  require(i.size() >= 2 && r.size() == i.size(), ErrorCode::PreconditionFailed, "euclid_m needs m >= 2 matching vectors");
  for (std::size_t j = 0; j < i.size(); ++j)
    require(i[j] > 0 && r[j] > 0, ErrorCode::PreconditionFailed, "euclid_m needs positive i and r");
  require(D > 0 && D % vec_gcd(i) == 0, ErrorCode::PreconditionFailed, "gcd(i) does not divide D");
  auto d = euclid_rec(i, r, D);
  if (!d) throw Error(ErrorCode::DTooSmall, "no decomposition found");
  const Rat s = dot_ir(i, r);
  long total = 0;
  for (std::size_t j = 0; j < i.size(); ++j) total += (*d)[j] * i[j];
  require(total == D && vec_gcd(*d) == 1, ErrorCode::DTooSmall, "decomposition failed verification");
  for (std::size_t l = 0; l < i.size(); ++l)
    if (abs(Rat((*d)[l]) - r[l] * D / s) > euclid_bound(i, D, l))
      throw Error(ErrorCode::DTooSmall, "euclid proximity bound fails");
  return *d;
}

std::vector<long> prop_euclid(const Polytope& H, const ExponentVector& h, const RationalVector& r, long D) {
  const std::size_t m = static_cast<std::size_t>(H.m);
  require(H.find(h) >= 0, ErrorCode::PreconditionFailed, "h is not a corner");
  long gh = 0;
  for (int x : h) gh = lgcd(gh, x);
  require(gh > 0 && D > 0 && D % gh == 0, ErrorCode::PreconditionFailed, "g(h) does not divide D");
  require(r.size() == m, ErrorCode::PreconditionFailed, "direction length mismatch");
  bool inside = true;
  for (const auto& x : r) inside = inside && x > 0;
  for (const auto& other : H.corners) {
    if (other == h) continue;
    Rat a = 0, b = 0;
    for (std::size_t j = 0; j < m; ++j) {
      a += r[j] * h[j];
      b += r[j] * other[j];
    }
    inside = inside && a > b;
  }
  if (!inside) throw Error(ErrorCode::RegionViolated, "r is not inside the open region of h");

  Rat rh = 0;
  for (std::size_t j = 0; j < m; ++j) rh += r[j] * h[j];
  std::vector<std::size_t> support, free;
  for (std::size_t j = 0; j < m; ++j) (h[j] > 0 ? support : free).push_back(j);
  std::vector<long> d(m, 1);
  for (auto j : free) d[j] = std::max(1L, to_i64(rat_round(r[j] * D / rh)));
  if (support.size() >= 2) {
    std::vector<long> hi;
    RationalVector ri;
    for (auto j : support) {
      hi.push_back(h[j]);
      ri.push_back(r[j]);
    }
    const auto ds = euclid_m(hi, ri, D);
    for (std::size_t k = 0; k < support.size(); ++k) d[support[k]] = ds[k];
  } else {
    d[support.front()] = D / h[support.front()];
  }

  auto dominates = [&](const std::vector<long>& v) {
    const long top = dot_hd(h, v);
    for (const auto& other : H.corners)
      if (other != h && dot_hd(other, v) >= top) return false;
    return true;
  };
  if (vec_gcd(d) != 1 && !free.empty()) {
    // Nudge one free coordinate (these do not enter h.d) until the gcd drops to 1.
    const std::size_t j = free.back();
    const long base = d[j];
    bool fixed = false;
    for (long t = 1; t < 4 * D + 8 && !fixed; ++t) {
      const long cand = base + (t % 2 == 1 ? (t + 1) / 2 : -(t / 2));
      if (cand < 1) continue;
      d[j] = cand;
      fixed = vec_gcd(d) == 1 && dominates(d);
    }
    if (!fixed) d[j] = base;
  }
  if (vec_gcd(d) != 1 || dot_hd(h, d) != D || !dominates(d))
    throw Error(ErrorCode::RegionViolated, "constructed d fails strict domination or gcd 1");
  return d;
}

long SemigroupWindow::largest_gap() const {
  for (long x = bound; x >= 0; --x)
    if (!member[static_cast<std::size_t>(x)]) return x;
  return -1;
}

SemigroupWindow frobenius_window(std::vector<long> generators, long bound) {
  require(bound >= 0, ErrorCode::PreconditionFailed, "window bound must be nonnegative");
  for (long g : generators) require(g > 0, ErrorCode::PreconditionFailed, "generators must be positive");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  SemigroupWindow w;
  w.generators = generators;
  w.bound = bound;
  w.member.assign(static_cast<std::size_t>(bound) + 1, false);
  w.member[0] = true;
  for (long g : generators) {
    if (g > bound) break;
    for (long x = g; x <= bound; ++x)
      if (w.member[static_cast<std::size_t>(x - g)]) w.member[static_cast<std::size_t>(x)] = true;
  }
  long g = 0, top = 0;
  for (long a : generators) {
    g = lgcd(g, a);
    top = std::max(top, a);
  }
  if (g == 1 && bound >= 2 * top * top) w.conductor = w.largest_gap() + 1;
  return w;
}

std::vector<int> degrees_from_polytope(const Polytope& H) {
  std::vector<int> deg(static_cast<std::size_t>(H.m), 0);
  for (const auto& h : H.corners)
    for (std::size_t j = 0; j < h.size(); ++j) deg[j] = std::max(deg[j], h[j]);
  return deg;
}

std::vector<long> S_h(const Polytope& H, const ExponentVector& h, long n, const std::vector<int>& degx, long bound) {
  require(n >= 0, ErrorCode::PreconditionFailed, "S_h needs n >= 0");
  const std::size_t m = static_cast<std::size_t>(H.m);
  require(degx.size() == m, ErrorCode::PreconditionFailed, "degree bound length mismatch");
  // Every corner i satisfies i.d <= h.d <= bound + n, which caps d_j by (bound + n) / max_i i_j.
  std::vector<long> ub(m), hcoef(m);
  for (std::size_t j = 0; j < m; ++j) {
    long mx = 0;
    for (const auto& c : H.corners) mx = std::max<long>(mx, c[j]);
    ub[j] = mx > 0 ? (bound + n) / mx : n + degx[j];
    hcoef[j] = h[j];
  }
  std::vector<bool> hit(static_cast<std::size_t>(std::max(bound, 0L)) + 1, false);
  std::vector<long> d(m, n);
  const long cap = bound + n;
  // Depth-first over coordinates with the partial h.d pruned against the cap.
  auto rec = [&](auto&& self, std::size_t j, long partial) -> void {
    if (j == m) {
      const long hd = partial;
      const long v = hd - n;
      if (v < 1 || v > bound) return;
      bool clause = false;
      for (std::size_t k = 0; k < m && !clause; ++k) clause = d[k] >= n + degx[k];
      if (!clause || hit[static_cast<std::size_t>(v)] || vec_gcd(d) != 1) return;
      for (const auto& c : H.corners)
        if (dot_hd(c, d) > hd) return;
      hit[static_cast<std::size_t>(v)] = true;
      return;
    }
    for (long x = n; x <= ub[j]; ++x) {
      const long p = partial + hcoef[j] * x;
      if (p > cap) break;
      d[j] = x;
      self(self, j + 1, p);
    }
    d[j] = n;
  };
  rec(rec, 0, 0);
  std::vector<long> out;
  for (long v = 1; v <= bound; ++v)
    if (hit[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

namespace {

class Iteration {
 public:
  Iteration(const Polytope& H, const std::vector<int>& degx, long bound) : H_(H), degx_(degx), bound_(bound) {}

  // Union of S_h(n) over corners h and the given n, computed in parallel and merged in order.
  std::vector<bool> step(const std::vector<long>& ns) {
    std::vector<std::pair<std::size_t, long>> missing;
    for (std::size_t h = 0; h < H_.corners.size(); ++h)
      for (long n : ns)
        if (!cache_.count({h, n})) missing.emplace_back(h, n);
    std::vector<std::vector<long>> results(missing.size());
    parallel_for(missing.size(), [&](std::size_t k) {
      results[k] = S_h(H_, H_.corners[missing[k].first], missing[k].second, degx_, bound_);
    });
    for (std::size_t k = 0; k < missing.size(); ++k) cache_[missing[k]] = std::move(results[k]);
    std::vector<bool> out(static_cast<std::size_t>(bound_) + 1, false);
    for (std::size_t h = 0; h < H_.corners.size(); ++h)
      for (long n : ns)
        for (long v : cache_.at({h, n})) out[static_cast<std::size_t>(v)] = true;
    return out;
  }

 private:
  const Polytope& H_;
  const std::vector<int>& degx_;
  long bound_;
  std::map<std::pair<std::size_t, long>, std::vector<long>> cache_;
};

DegreeWindow iterate(const Polytope& H, const std::vector<int>& degx, const std::vector<long>& extras, long G, long bound) {
  require(bound >= 1, ErrorCode::PreconditionFailed, "window bound must be positive");
  Iteration it(H, degx, bound);
  std::vector<bool> cur = it.step({0});
  for (long e : extras)
    if (e <= bound) cur[static_cast<std::size_t>(e)] = true;
  DegreeWindow w;
  w.G = G;
  w.bound = bound;
  const int max_iter = 64;
  for (w.iterations = 1; w.iterations <= max_iter; ++w.iterations) {
    std::vector<long> gens;
    for (long x = 1; x <= bound; ++x)
      if (cur[static_cast<std::size_t>(x)]) gens.push_back(x);
    const SemigroupWindow fw = frobenius_window(gens, bound);
    std::vector<long> ns;
    for (long x = 0; x <= bound; ++x)
      if (fw.member[static_cast<std::size_t>(x)]) ns.push_back(x);
    w.history.push_back(cur);
    // Cumulative union: identical for D(H) (n = 0 is always in Frob), and for D(C) it keeps the
    // seeded point degrees in the window.
    std::vector<bool> next = it.step(ns);
    for (std::size_t x = 0; x < next.size(); ++x) next[x] = next[x] || cur[x];
    if (next == cur) {
      w.fixed_point = true;
      break;
    }
    cur = std::move(next);
  }
  w.iterations = std::min(w.iterations, max_iter);
  w.member = std::move(cur);
  w.member[0] = true;
  for (long x = G; x <= bound; x += G)
    if (!w.member[static_cast<std::size_t>(x)]) w.exceptions.push_back(x);
  if (!w.exceptions.empty() && 2 * w.exceptions.back() > bound)
    throw Error(ErrorCode::WindowTooSmall, "non-members of G.Z reach the upper half of the window");
  return w;
}

}  // namespace

DegreeWindow dh_inf(const Polytope& H, const std::vector<int>& degx, long bound) {
  return iterate(H, degx, {}, H.index_G(), bound);
}

DegreeWindow dc_inf_augment(const Polytope& H, const std::vector<int>& degx, const std::vector<long>& extras, long bound) {
  long G = H.index_G();
  for (long e : extras) {
    require(e > 0, ErrorCode::PreconditionFailed, "extra degrees must be positive");
    G = lgcd(G, e);
  }
  return iterate(H, degx, extras, G, bound);
}

}  // namespace hypdeg
