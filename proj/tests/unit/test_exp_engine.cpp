#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hypdeg/error.hpp"
#include "hypdeg/exp_engine.hpp"

using namespace hypdeg;

namespace {
Rat frac(long a, long b) { return Rat(a) / b; }

RationalVector R(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}
}  // namespace

TEST(RegionContains, Examples) {
  const Polytope diag = corners(families::diagonal(2, 2));
  EXPECT_TRUE(region_contains(diag, {2, 0}, R({1, 0}), true));
  EXPECT_TRUE(region_contains(diag, {2, 0}, R({1, 1}), true));
  EXPECT_FALSE(region_contains(diag, {2, 0}, R({1, 1}), false));
  const Polytope hyp = corners(families::hyperelliptic(6));
  EXPECT_FALSE(region_contains(hyp, {6, 0, 0}, R({0, 1, 0}), true));
}

TEST(ExpFull, DiagonalClosedForm) {
  for (int m = 2; m <= 4; ++m)
    for (int d = 2; d <= 6; ++d) {
      const ExpResult r = exp_full(corners(families::diagonal(m, d)));
      EXPECT_EQ(r.value, frac(m, d * d)) << m << " " << d;
      EXPECT_EQ(r.mode, ExpMode::ExactFullJ);
    }
  const ExpResult r = exp_full(corners(families::diagonal(3, 3)));
  EXPECT_EQ(r.r, R({1, 1, 1}));
}

TEST(ExpFull, SingletonAndWitnessConditions) {
  EXPECT_EQ(exp_full(corners({{5}})).value, frac(1, 25));
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 3);
    const int d = 2 + static_cast<int>(rng() % 5);
    std::set<ExponentVector> pts;
    for (int j = 0; j < m; ++j) {
      ExponentVector e(static_cast<std::size_t>(m), 0);
      e[static_cast<std::size_t>(j)] = d;
      pts.insert(e);
    }
    for (int k = 0; k < 4; ++k) {
      ExponentVector e(static_cast<std::size_t>(m), 0);
      int left = d;
      for (int j = 0; j + 1 < m; ++j) {
        e[static_cast<std::size_t>(j)] = static_cast<int>(rng() % static_cast<unsigned>(left + 1));
        left -= e[static_cast<std::size_t>(j)];
      }
      e.back() = left;
      pts.insert(e);
    }
    const Polytope H = corners(std::vector<ExponentVector>(pts.begin(), pts.end()));
    const ExpResult ex = exp_full(H);
    EXPECT_TRUE(region_contains(H, ex.h_r, ex.r, true));
    // Exact optimum dominates all certified lower bounds on the full coordinate set.
    std::vector<int> all;
    for (int j = 0; j < m; ++j) all.push_back(j);
    for (auto s : {ExpStrategy::Axis, ExpStrategy::Uniform, ExpStrategy::Numeric})
      EXPECT_GE(ex.value, exp_J_lower(H, all, s, static_cast<std::uint64_t>(trial)).value);
    // Uniform direction gives at least m/d^2.
    EXPECT_GE(ex.value, frac(m, d * d));
  }
}

TEST(ExpJLower, SuperellipticWitness) {
  for (auto [q, d] : {std::pair{2, 6}, std::pair{3, 9}}) {
    const Polytope H = corners(families::superelliptic(q, d));
    EXPECT_EQ(exp_J_lower(H, {1}, ExpStrategy::Axis).value, frac(1, q * q));
    const RationalVector w = R({q, d, 0});
    EXPECT_EQ(exp_J_at(H, {0, 1}, w, w), frac(1, q * q) + frac(1, d * d));
    EXPECT_GE(exp_J_lower(H, {0, 1}, ExpStrategy::Numeric).value, frac(1, q * q) + frac(1, d * d));
  }
}

TEST(ExpJLower, SymmetricWitness) {
  for (auto [a, b] : {std::pair{2, 1}, std::pair{3, 2}}) {
    const Polytope H = corners(families::symmetric(a, b));
    const RationalVector w = R({a, a + b, b});
    EXPECT_EQ(exp_J_at(H, {0, 1, 2}, w, w), frac(2, a * a + a * b + b * b));
    EXPECT_GE(exp_full(H).value, frac(2, a * a + a * b + b * b));
  }
}

TEST(ExpJLower, ScaleInvariance) {
  const Polytope H = corners(families::symmetric(3, 2));
  const RationalVector e = R({1, 4, 2}), r = R({3, 1, 1});
  RationalVector e2 = e, r2 = r;
  for (auto& x : e2) x *= frac(7, 3);
  for (auto& x : r2) x *= 11;
  EXPECT_EQ(exp_J_at(H, {0, 1, 2}, e, r), exp_J_at(H, {0, 1, 2}, e2, r2));
}

TEST(ExpJLower, UniformBound) {
  const Polytope H = corners(families::hyperelliptic(6));
  const auto res = exp_J_lower(H, {0, 1}, ExpStrategy::Uniform);
  // deg H_J = 6 for J = {1,2}: 2/36.
  EXPECT_EQ(res.value, frac(2, 36));
}
