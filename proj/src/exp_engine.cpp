#include "hypdeg/exp_engine.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

#include "hypdeg/error.hpp"
#include "hypdeg/linalg.hpp"

namespace hypdeg {

std::string_view exp_mode_name(ExpMode mode) {
  return mode == ExpMode::ExactFullJ ? "ExactFullJ" : "CertifiedLowerBound";
}

namespace {

Rat dot(const RationalVector& a, const ExponentVector& h) {
  Rat s = 0;
  for (std::size_t j = 0; j < h.size(); ++j) s += a[j] * h[j];
  return s;
}

Rat dot(const RationalVector& a, const RationalVector& b) {
  Rat s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
  return s;
}

// Best corner for a direction: the max of v.h and the lexicographically first h attaining it.
std::pair<Rat, ExponentVector> support_value(const Polytope& H, const RationalVector& v) {
  Rat best = dot(v, H.corners.front());
  ExponentVector arg = H.corners.front();
  for (const auto& h : H.corners) {
    const Rat x = dot(v, h);
    if (x > best) {
      best = x;
      arg = h;
    }
  }
  return {best, arg};
}

}  // namespace

bool region_contains(const Polytope& H, const ExponentVector& h, const RationalVector& e, bool closed) {
  require(e.size() == h.size(), ErrorCode::PreconditionFailed, "direction length mismatch");
  bool nonzero = false;
  for (const auto& x : e) {
    if (x < 0 || (!closed && x == 0)) return false;
    nonzero = nonzero || x != 0;
  }
  if (!nonzero) return false;
  const Rat eh = dot(e, h);
  for (const auto& other : H.corners) {
    if (other == h) continue;
    const Rat eo = dot(e, other);
    if (closed ? eo > eh : eo >= eh) return false;
  }
  return true;
}

ExpResult exp_full(const Polytope& H) {
  require(!H.corners.empty(), ErrorCode::PreconditionFailed, "empty polytope");
  const std::size_t m = static_cast<std::size_t>(H.m);
  bool have = false;
  Rat best_key;  // (u.h1)^2 / |u|^2, minimized
  ExpResult res;
  res.mode = ExpMode::ExactFullJ;
  res.strategy = "sortmin enumeration";

  auto consider = [&](const ExponentVector& h1, const RationalVector& u) {
    const Rat uh = dot(u, h1);
    if (uh <= 0) return;
    for (const auto& x : u)
      if (x < 0) return;
    for (const auto& h : H.corners)
      if (dot(u, h) > uh) return;
    const Rat key = uh * uh / dot(u, u);
    if (!have || key < best_key) {
      have = true;
      best_key = key;
      res.h_r = res.h_e = h1;
      res.r = res.e = u;
    }
  };

  for (const auto& h1 : H.corners) {
    if (m == 1) {
      consider(h1, RationalVector{Rat(1)});
      continue;
    }
    std::vector<IntVector> forms;
    for (const auto& h : H.corners) {
      if (h == h1) continue;
      IntVector f(m);
      for (std::size_t j = 0; j < m; ++j) f[j] = h1[j] - h[j];
      forms.push_back(std::move(f));
    }
    for (std::size_t j = 0; j < m; ++j) {
      IntVector f(m, Int(0));
      f[j] = 1;
      forms.push_back(std::move(f));
    }
    const std::size_t k = m - 1;
    if (forms.size() < k) continue;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      IntMatrix rows;
      for (auto i : idx) rows.push_back(forms[i]);
      const IntVector line = null_line(rows, m);
      if (std::any_of(line.begin(), line.end(), [](const Int& x) { return x != 0; })) {
        RationalVector u(m);
        for (std::size_t j = 0; j < m; ++j) u[j] = line[j];
        consider(h1, u);
        for (auto& x : u) x = -x;
        consider(h1, u);
      }
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == forms.size() - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  if (!have) throw Error(ErrorCode::InfeasibleH, "no direction satisfies the sign conditions");
  // Present the witness with coprime integer entries.
  Int g = 0;
  for (const auto& x : res.r) g = int_gcd(g, x.get_num());
  if (g > 1)
    for (auto& x : res.r) x /= g;
  res.e = res.r;
  res.value = 1 / best_key;
  return res;
}

Rat exp_J_at(const Polytope& H, const std::vector<int>& J, const RationalVector& e, const RationalVector& r) {
  const std::size_t m = static_cast<std::size_t>(H.m);
  require(e.size() == m && r.size() == m, ErrorCode::PreconditionFailed, "direction length mismatch");
  for (std::size_t j = 0; j < m; ++j) {
    require(e[j] >= 0 && r[j] >= 0, ErrorCode::PreconditionFailed, "directions must be nonnegative");
    if (e[j] != 0)
      require(std::find(J.begin(), J.end(), static_cast<int>(j)) != J.end(), ErrorCode::PreconditionFailed,
              "e must be supported on J");
  }
  const Rat eh = support_value(H, e).first;
  const Rat rh = support_value(H, r).first;
  require(eh > 0 && rh > 0, ErrorCode::PreconditionFailed, "degenerate direction");
  return dot(e, r) / (eh * rh);
}

namespace {

struct Candidate {
  Rat value;
  RationalVector e, r;
  std::string strategy;
};

void keep_best(std::optional<Candidate>& best, Candidate c) {
  if (!best || c.value > best->value) best = std::move(c);
}

double eval_double(const Polytope& H, const std::vector<double>& e, const std::vector<double>& r) {
  double eh = -1, rh = -1, er = 0;
  for (const auto& h : H.corners) {
    double a = 0, b = 0;
    for (std::size_t j = 0; j < h.size(); ++j) {
      a += e[j] * h[j];
      b += r[j] * h[j];
    }
    eh = std::max(eh, a);
    rh = std::max(rh, b);
  }
  for (std::size_t j = 0; j < e.size(); ++j) er += e[j] * r[j];
  if (eh <= 0 || rh <= 0) return -1;
  return er / (eh * rh);
}

// Nearest rational with the given denominator, clamped to be nonnegative.
Rat to_rational(double x, long den) {
  const long num = std::lround(std::max(0.0, x) * static_cast<double>(den));
  return Rat(num, den);
}

}  // namespace

ExpResult exp_J_lower(const Polytope& H, const std::vector<int>& J, ExpStrategy strategy, std::uint64_t seed) {
  require(!J.empty(), ErrorCode::PreconditionFailed, "J must be nonempty");
  const std::size_t m = static_cast<std::size_t>(H.m);
  for (int j : J) require(j >= 0 && j < H.m, ErrorCode::PreconditionFailed, "J index out of range");
  std::optional<Candidate> best;

  auto try_exact = [&](const RationalVector& e, const RationalVector& r, const std::string& name) {
    bool ez = true, rz = true;
    for (std::size_t j = 0; j < m; ++j) {
      ez = ez && e[j] == 0;
      rz = rz && r[j] == 0;
    }
    if (ez || rz) return;
    if (support_value(H, e).first <= 0 || support_value(H, r).first <= 0) return;
    keep_best(best, Candidate{exp_J_at(H, J, e, r), e, r, name});
  };

  const bool axis = strategy == ExpStrategy::Axis || strategy == ExpStrategy::Numeric;
  const bool uniform = strategy == ExpStrategy::Uniform || strategy == ExpStrategy::Numeric;
  if (axis) {
    for (int j : J) {
      RationalVector v(m, Rat(0));
      v[static_cast<std::size_t>(j)] = 1;
      try_exact(v, v, "axis");
    }
  }
  if (uniform) {
    RationalVector v(m, Rat(0));
    for (int j : J) v[static_cast<std::size_t>(j)] = 1;
    try_exact(v, v, "uniform");
  }
  if (strategy == ExpStrategy::Numeric) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<bool> in_j(m, false);
    for (int j : J) in_j[static_cast<std::size_t>(j)] = true;
    const int starts = 24;
    for (int s = 0; s < starts; ++s) {
      std::vector<double> e(m, 0.0), r(m, 0.0);
      for (std::size_t j = 0; j < m; ++j) {
        if (s == 0) {
          e[j] = in_j[j] ? 1.0 : 0.0;
          r[j] = e[j];
        } else {
          e[j] = in_j[j] ? unit(rng) : 0.0;
          r[j] = unit(rng);
        }
      }
      double cur = eval_double(H, e, r);
      // Pattern search over the 2m coordinates, halving the step on stagnation.
      for (double step = 0.25; step > 1e-10;) {
        bool improved = false;
        for (std::size_t k = 0; k < 2 * m; ++k) {
          std::vector<double>& v = k < m ? e : r;
          const std::size_t j = k % m;
          if (k < m && !in_j[j]) continue;
          for (double dir : {1.0, -1.0}) {
            const double old = v[j];
            v[j] = std::max(0.0, old + dir * step);
            const double val = eval_double(H, e, r);
            if (val > cur + 1e-15) {
              cur = val;
              improved = true;
            } else {
              v[j] = old;
            }
          }
        }
        if (!improved) step /= 2;
      }
      // Scale so the largest entry is 1, then try a ladder of denominators exactly.
      const double emax = *std::max_element(e.begin(), e.end());
      const double rmax = *std::max_element(r.begin(), r.end());
      if (emax <= 0 || rmax <= 0) continue;
      for (long den : {1L, 2L, 3L, 4L, 5L, 6L, 8L, 10L, 12L, 16L, 20L, 30L, 60L, 100L, 1000L, 100000L}) {
        RationalVector er(m), rr(m);
        for (std::size_t j = 0; j < m; ++j) {
          er[j] = in_j[j] ? to_rational(e[j] / emax, den) : Rat(0);
          rr[j] = to_rational(r[j] / rmax, den);
        }
        try_exact(er, rr, "numeric");
      }
    }
  }
  require(best.has_value(), ErrorCode::InfeasibleH, "no admissible direction for J");
  ExpResult res;
  res.mode = ExpMode::CertifiedLowerBound;
  res.value = best->value;
  res.e = best->e;
  res.r = best->r;
  res.h_e = support_value(H, res.e).second;
  res.h_r = support_value(H, res.r).second;
  res.strategy = best->strategy;
  return res;
}

}  // namespace hypdeg
