#include "hypdeg/harness.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <optional>
#include <set>
#include <unordered_map>

#include "hypdeg/degree_sets.hpp"
#include "hypdeg/error.hpp"
#include "hypdeg/exp_engine.hpp"
#include "hypdeg/factor.hpp"
#include "hypdeg/parallel.hpp"
#include "hypdeg/specializer.hpp"

namespace hypdeg {

namespace {

void config_check(bool cond, const std::string& what) {
  if (!cond) throw Error(ErrorCode::ConfigError, what);
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t draw_seed(std::uint64_t seed, long T, long i) {
  return splitmix(splitmix(splitmix(seed) ^ static_cast<std::uint64_t>(T)) ^ static_cast<std::uint64_t>(i));
}

double log_int(const Int& x) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

RationalVector exponents_of(const ExperimentConfig& cfg) {
  if (!cfg.e.empty()) return cfg.e;
  return RationalVector(static_cast<std::size_t>(cfg.f.nvars()), Rat(1));
}

struct Draw {
  enum Status { Irreducible, Unknown, Other } status = Other;
  std::string key;
  std::string bucket;
  Int abs_disc;
};

// A strictly positive direction in the open region of corner k: the witness scaled up plus
// the all-ones vector.
RationalVector positive_direction(const Polytope& H, std::size_t k) {
  RationalVector r;
  for (long N = 1; N <= (1L << 24); N *= 2) {
    r.clear();
    for (const auto& w : H.witnesses[k]) r.push_back(Rat(w * N + 1));
    if (region_contains(H, H.corners[k], r, false)) return r;
  }
  return r;
}

// The d in [0, D]^m with h.d = D for one of the given corners, strict domination of every other
// corner and gcd 1 that has the largest coordinate sum (degree-0 coordinates carry no randomness),
// ties broken lexicographically.
std::optional<std::vector<long>> small_degree_search(const Polytope& H, const std::vector<std::size_t>& order, long D) {
  const std::size_t m = static_cast<std::size_t>(H.m);
  double size = 1;
  for (std::size_t j = 0; j < m; ++j) size *= static_cast<double>(D + 1);
  if (size > 2e6) return std::nullopt;
  std::vector<long> d(m, 0);
  auto dot = [&](const ExponentVector& h) {
    long v = 0;
    for (std::size_t j = 0; j < m; ++j) v += static_cast<long>(h[j]) * d[j];
    return v;
  };
  std::optional<std::vector<long>> best;
  long best_sum = -1;
  for (std::size_t k : order) {
    std::fill(d.begin(), d.end(), 0);
    for (;;) {
      long g = 0, sum = 0;
      for (long v : d) {
        g = std::gcd(g, v);
        sum += v;
      }
      if (g == 1 && sum > best_sum && dot(H.corners[k]) == D) {
        bool strict = true;
        for (std::size_t o = 0; o < H.corners.size() && strict; ++o)
          if (o != k && dot(H.corners[o]) >= D) strict = false;
        if (strict) {
          best = d;
          best_sum = sum;
        }
      }
      std::size_t j = m;
      while (j > 0 && d[j - 1] == D) d[--j] = 0;
      if (j == 0) break;
      ++d[j - 1];
    }
    if (best) return best;
  }
  return std::nullopt;
}

}  // namespace

void validate(const ExperimentConfig& cfg) {
  const int m = cfg.f.nvars();
  config_check(m >= 1 && !cfg.f.is_zero(), "form must be a nonzero polynomial");
  config_check(cfg.f.is_homogeneous(), "form must be homogeneous");
  config_check(cfg.d.has_value() != cfg.D.has_value(), "give exactly one of degrees and D");
  if (cfg.d) {
    config_check(cfg.d->size() == static_cast<std::size_t>(m), "degree vector length must equal the variable count");
    long g = 0;
    for (long v : *cfg.d) {
      config_check(v >= 0, "degrees must be nonnegative");
      g = std::gcd(g, v);
    }
    config_check(g == 1, "degree vector must have gcd 1");
  } else {
    config_check(*cfg.D > 0, "D must be positive");
    const Polytope H = newton_polytope(cfg.f);
    const long G = H.index_G();
    config_check(*cfg.D % G == 0, "D must be divisible by G(H) = " + std::to_string(G));
    if (cfg.corner) config_check(H.find(*cfg.corner) >= 0, "corner is not a corner of the Newton polytope");
    if (cfg.direction) config_check(cfg.direction->size() == static_cast<std::size_t>(m), "direction length mismatch");
  }
  if (!cfg.e.empty()) {
    config_check(cfg.e.size() == static_cast<std::size_t>(m), "exponent vector length must equal the variable count");
    for (const auto& v : cfg.e) config_check(v >= 0, "exponents must be nonnegative");
  }
  for (long T : cfg.heights) config_check(T >= 1, "heights must be positive");
  config_check(cfg.budget >= 0, "budget must be nonnegative");
  for (int j : cfg.J) config_check(j >= 0 && j < m, "J index out of range");
}

std::vector<long> resolve_degrees(const ExperimentConfig& cfg) {
  validate(cfg);
  if (cfg.d) return *cfg.d;
  const Polytope H = newton_polytope(cfg.f);
  std::vector<std::size_t> order;
  if (cfg.corner) order.push_back(static_cast<std::size_t>(H.find(*cfg.corner)));
  else for (std::size_t k = 0; k < H.corners.size(); ++k) order.push_back(k);
  std::string last;
  for (std::size_t k : order) {
    RationalVector r;
    if (cfg.direction) r = *cfg.direction;
    else r = positive_direction(H, k);
    try {
      return prop_euclid(H, H.corners[k], r, *cfg.D);
    } catch (const Error& e) {
      last = e.what();
    }
  }
  // prop_euclid needs D large; for small D search the box [0, D]^m directly.
  if (auto d = small_degree_search(H, order, *cfg.D)) return *d;
  throw Error(ErrorCode::ConfigError, "no degree vector for D = " + std::to_string(*cfg.D) + ": " + last);
}

Int squarefree_kernel(const Int& n) {
  if (n == 0) return 0;
  Int rest = abs(n);
  Int kernel = n < 0 ? -1 : 1;
  for (std::uint32_t p : small_primes()) {
    if (Int(p) * p > rest) break;
    int e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      ++e;
    }
    if (e % 2 == 1) kernel *= p;
  }
  if (!is_perfect_square(rest)) kernel *= rest;
  return kernel;
}

DiscInfo disc_of_spec(const UniPoly& F) {
  require(F.degree() >= 1 && is_irreducible_Q(F).status == VerdictStatus::Irreducible, ErrorCode::PreconditionFailed,
          "disc_of_spec needs an irreducible polynomial");
  DiscInfo out;
  out.disc = discriminant(F);
  out.within_bound = discriminant_within_hadamard_bound(F, out.disc);
  return out;
}

ExperimentResult run_count(const ExperimentConfig& cfg) {
  ExperimentResult res;
  res.degrees = resolve_degrees(cfg);
  const RationalVector e = exponents_of(cfg);
  const Polytope H = newton_polytope(cfg.f);
  for (const auto& h : support(cfg.f)) {
    long v = 0;
    for (std::size_t j = 0; j < h.size(); ++j) v += static_cast<long>(h[j]) * res.degrees[j];
    res.D = std::max(res.D, v);
  }
  std::vector<int> J = cfg.J;
  if (J.empty())
    for (int j = 0; j < cfg.f.nvars(); ++j) J.push_back(j);
  try {
    res.exp_lower = static_cast<int>(J.size()) == cfg.f.nvars() ? exp_full(H).value
                                                                  : exp_J_lower(H, J, ExpStrategy::Numeric, cfg.seed).value;
  } catch (const Error&) {
    res.exp_lower = 0;
  }
  res.half_exp = res.exp_lower / 2;
  res.banner = "asymptotic claim not verifiable at desk scale: the fit is indicative only";
  if (cfg.budget == 0) return res;

  std::set<std::string> all_keys, all_buckets;
  Int running_max = 0;
  for (long T : cfg.heights) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<Draw> draws(static_cast<std::size_t>(cfg.budget));
    parallel_for(draws.size(), [&](std::size_t i) {
      Draw& out = draws[i];
      try {
        const SpecResult s = random_spec(cfg.f, res.degrees, e, Int(T), draw_seed(cfg.seed, T, static_cast<long>(i)));
        if (s.degenerate) return;
        if (s.F_verdict.status == VerdictStatus::Unknown) {
          out.status = Draw::Unknown;
          return;
        }
        if (s.F_verdict.status != VerdictStatus::Irreducible) return;
        const UniPoly prim = s.F.primitive_part();
        const Rat disc = discriminant(prim);
        out.status = Draw::Irreducible;
        out.key = prim.to_string();
        out.abs_disc = abs(disc.get_num());
        out.bucket = std::to_string(prim.degree()) + ":" + to_string(squarefree_kernel(disc.get_num()));
      } catch (const Error&) {
        out.status = Draw::Other;
      }
    });
    CountRecord rec;
    rec.T = T;
    rec.attempts = cfg.budget;
    std::set<std::string> keys, buckets;
    for (const auto& d : draws) {
      if (d.status == Draw::Unknown) ++rec.unknown;
      if (d.status != Draw::Irreducible) continue;
      ++rec.irreducible;
      keys.insert(d.key);
      buckets.insert(d.bucket);
      if (d.abs_disc > running_max) running_max = d.abs_disc;
    }
    rec.distinct = static_cast<long>(keys.size());
    rec.buckets = static_cast<long>(buckets.size());
    all_keys.insert(keys.begin(), keys.end());
    all_buckets.insert(buckets.begin(), buckets.end());
    rec.cumulative_distinct = static_cast<long>(all_keys.size());
    rec.cumulative_buckets = static_cast<long>(all_buckets.size());
    rec.max_disc = running_max;
    rec.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    res.records.push_back(rec);
  }

  std::vector<std::pair<double, double>> pts;
  for (const auto& r : res.records)
    if (r.max_disc > 1 && r.cumulative_distinct > 0) pts.emplace_back(log_int(r.max_disc), std::log(double(r.cumulative_distinct)));
  if (pts.size() >= 2) {
    double sx = 0, sy = 0;
    for (auto [x, y] : pts) {
      sx += x;
      sy += y;
    }
    const double n = static_cast<double>(pts.size());
    double sxx = 0, sxy = 0;
    for (auto [x, y] : pts) {
      sxx += (x - sx / n) * (x - sx / n);
      sxy += (x - sx / n) * (y - sy / n);
    }
    if (sxx > 0) res.growth_exponent = sxy / sxx;
  }
  return res;
}

RihResult rih_probe(const MultiPoly& f, int deg, long coeff, long cap) {
  RihResult out;
  if (deg < 0 || coeff < 0) return out;
  const int m = f.nvars();
  const long width = 2 * coeff + 1;
  const long slots = static_cast<long>(m) * (deg + 1);
  Int total = 1;
  for (long s = 0; s < slots; ++s) total *= width;
  if (total > cap) throw Error(ErrorCode::BoundsTooLarge, "enumeration of " + to_string(total) + " tuples exceeds the cap");
  out.tuples = total.get_si();
  std::unordered_map<std::string, long> mult;
  std::vector<long> digits(static_cast<std::size_t>(slots), 0);
  for (long n = 0; n < out.tuples; ++n) {
    long v = n;
    for (auto& dgt : digits) {
      dgt = v % width - coeff;
      v /= width;
    }
    std::vector<UniPoly> x;
    for (int i = 0; i < m; ++i) {
      std::vector<Rat> c;
      for (int k = 0; k <= deg; ++k) c.emplace_back(digits[static_cast<std::size_t>(i * (deg + 1) + k)]);
      x.emplace_back(std::move(c));
    }
    ++mult[f.evaluate_composition(x).to_string()];
  }
  out.images = static_cast<long>(mult.size());
  long shared = 0;
  for (const auto& [key, c] : mult) {
    ++out.histogram[c];
    out.max_multiplicity = std::max(out.max_multiplicity, c);
    if (c > 1) ++shared;
  }
  out.shared_fraction = out.images ? static_cast<double>(shared) / static_cast<double>(out.images) : 0.0;
  return out;
}

}  // namespace hypdeg
