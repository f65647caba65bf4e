#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hypdeg/error.hpp"
#include "hypdeg/parse.hpp"
#include "hypdeg/polytope.hpp"

using namespace hypdeg;

TEST(Support, Examples) {
  const auto s = support(parse_multipoly("x^2 + x*y + y^2"));
  EXPECT_EQ(s, (std::vector<ExponentVector>{{0, 2}, {1, 1}, {2, 0}}));
  EXPECT_EQ(support(parse_multipoly("x^3")), (std::vector<ExponentVector>{{3}}));
  EXPECT_THROW(support(parse_multipoly("x^2 + y")), Error);
}

TEST(Support, HyperellipticHomogenization) {
  // 3 y^2 z^4 = x^6 + 2 x^3 z^3 + 5 z^6
  const auto s = support(parse_multipoly("3*y^2*z^4 - x^6 - 2*x^3*z^3 - 5*z^6"));
  const std::set<ExponentVector> set(s.begin(), s.end());
  EXPECT_TRUE(set.count({0, 2, 4}));
  EXPECT_TRUE(set.count({0, 0, 6}));
  EXPECT_TRUE(set.count({6, 0, 0}));
}

TEST(Corners, Examples) {
  auto P = corners({{2, 0}, {1, 1}, {0, 2}});
  EXPECT_EQ(P.corners, (std::vector<ExponentVector>{{0, 2}, {2, 0}}));

  P = corners(families::hyperelliptic(6));
  EXPECT_EQ(P.corners, (std::vector<ExponentVector>{{0, 0, 6}, {0, 2, 4}, {6, 0, 0}}));
  EXPECT_EQ(P.index_G(), 2);
  EXPECT_TRUE(validity_flag(P));

  P = corners({{1, 2, 3}});
  EXPECT_EQ(P.corners.size(), 1u);
}

TEST(Corners, WitnessesAndIdempotence) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 3);
    const int d = 2 + static_cast<int>(rng() % 5);
    std::set<ExponentVector> pts;
    for (int k = 0; k < 8; ++k) {
      ExponentVector e(static_cast<std::size_t>(m), 0);
      int left = d;
      for (int j = 0; j + 1 < m; ++j) {
        e[static_cast<std::size_t>(j)] = static_cast<int>(rng() % static_cast<unsigned>(left + 1));
        left -= e[static_cast<std::size_t>(j)];
      }
      e.back() = left;
      pts.insert(e);
    }
    const std::vector<ExponentVector> I(pts.begin(), pts.end());
    const Polytope P = corners(I);
    ASSERT_FALSE(P.corners.empty());
    EXPECT_EQ(corners(P.corners).corners, P.corners);
    for (std::size_t k = 0; k < P.corners.size(); ++k) {
      const auto& v = P.witnesses[k];
      auto dotv = [&](const ExponentVector& e) {
        Int s = 0;
        for (std::size_t j = 0; j < e.size(); ++j) s += v[j] * e[j];
        return s;
      };
      for (const auto& x : v) EXPECT_GE(x, 0);
      for (const auto& i : I)
        if (i != P.corners[k]) EXPECT_GT(dotv(P.corners[k]), dotv(i));
    }
    // Non-corners are convex combinations' victims: no integer witness in a small box.
    for (const auto& i : I) {
      if (P.find(i) >= 0) continue;
      for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) {
          std::vector<int> v(static_cast<std::size_t>(m), 0);
          v[0] = a;
          v[1] = b;
          long iv = 0;
          for (int j = 0; j < m; ++j) iv += static_cast<long>(v[static_cast<std::size_t>(j)]) * i[static_cast<std::size_t>(j)];
          bool strict = true;
          for (const auto& o : I) {
            if (o == i) continue;
            long ov = 0;
            for (int j = 0; j < m; ++j) ov += static_cast<long>(v[static_cast<std::size_t>(j)]) * o[static_cast<std::size_t>(j)];
            strict = strict && iv > ov;
          }
          EXPECT_FALSE(strict);
        }
    }
  }
}

TEST(IndexG, Examples) {
  EXPECT_EQ(corners(families::diagonal(3, 5)).index_G(), 5);
  EXPECT_EQ(corners({{1, 3}, {4, 0}}).index_G(), 1);
}

TEST(RestrictJ, Examples) {
  const Polytope hyp = corners(families::hyperelliptic(6));
  auto r = restrict_J(hyp, {1});
  EXPECT_EQ(r.points, (std::vector<ExponentVector>{{0}, {2}}));
  EXPECT_EQ(r.degree, 2);
  r = restrict_J(hyp, {0, 1, 2});
  EXPECT_EQ(r.points, hyp.corners);
  EXPECT_EQ(r.degree, 6);
  r = restrict_J(corners(families::diagonal(3, 3)), {0});
  EXPECT_EQ(r.points, (std::vector<ExponentVector>{{0}, {3}}));
  EXPECT_EQ(r.degree, 3);
}

TEST(Validity, DiagonalAndDegenerate) {
  EXPECT_TRUE(validity_flag(corners(families::diagonal(3, 4))));
  EXPECT_FALSE(validity_flag(corners({{2, 1}, {1, 2}})));
}
