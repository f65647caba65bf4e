#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "hypdeg/error.hpp"
#include "hypdeg/linalg.hpp"
#include "hypdeg/multipoly.hpp"
#include "hypdeg/parse.hpp"
#include "hypdeg/unipoly.hpp"

using namespace hypdeg;

namespace {

UniPoly random_poly(std::mt19937_64& rng, int degree, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  std::vector<Rat> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = dist(rng);
  if (c.back() == 0) c.back() = 1;
  return UniPoly(std::move(c));
}

MultiPoly random_form(std::mt19937_64& rng, int m, int d, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  MultiPoly f(m);
  // All monomials of degree d in m variables, enumerated as compositions.
  std::vector<int> e(static_cast<std::size_t>(m), 0);
  std::function<void(int, int)> rec = [&](int j, int left) {
    if (j == m - 1) {
      e[static_cast<std::size_t>(j)] = left;
      f.add_term(e, Int(dist(rng)));
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[static_cast<std::size_t>(j)] = k;
      rec(j + 1, left - k);
    }
  };
  rec(0, d);
  return f;
}

}  // namespace

TEST(EvaluateComposition, DirectSubstitution) {
  const MultiPoly f = parse_multipoly("x^2 - 2*y^2");
  EXPECT_EQ(f.evaluate_composition({UniPoly::t(), UniPoly{1}}), (UniPoly{-2, 0, 1}));
}

TEST(EvaluateComposition, Cancellation) {
  const MultiPoly f = parse_multipoly("x + y");
  EXPECT_TRUE(f.evaluate_composition({UniPoly::t(), -UniPoly::t()}).is_zero());
}

TEST(EvaluateComposition, QuadraticForm) {
  const MultiPoly f = parse_multipoly("x^2 + x*y + y^2");
  EXPECT_EQ(f.evaluate_composition({UniPoly{1, 1}, UniPoly::t()}), (UniPoly{1, 3, 3}));
}

TEST(EvaluateComposition, RingHomomorphism) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const MultiPoly f1 = random_form(rng, 3, 2, 5);
    const MultiPoly f2 = random_form(rng, 3, 3, 5);
    std::vector<UniPoly> x = {random_poly(rng, 2, 4), random_poly(rng, 1, 4), random_poly(rng, 3, 4)};
    EXPECT_EQ((f1 + f2).evaluate_composition(x), f1.evaluate_composition(x) + f2.evaluate_composition(x));
    EXPECT_EQ((f1 * f2).evaluate_composition(x), f1.evaluate_composition(x) * f2.evaluate_composition(x));
  }
}

TEST(PartialDerivative, Examples) {
  EXPECT_EQ(parse_multipoly("x^3").partial_derivative(0), parse_multipoly("3*x^2"));
  EXPECT_EQ(parse_multipoly("x^2*y").partial_derivative(1), parse_multipoly("x^2", 2));
}

TEST(PartialDerivative, EulerIdentity) {
  std::mt19937_64 rng(5);
  for (int d = 1; d <= 5; ++d) {
    const MultiPoly f = random_form(rng, 3, d, 9);
    MultiPoly sum(3);
    for (int j = 0; j < 3; ++j) sum += MultiPoly::variable(3, j) * f.partial_derivative(j);
    EXPECT_EQ(sum, Int(d) * f);
  }
  const MultiPoly q = parse_multipoly("x^2 + x*y + y^2");
  const MultiPoly euler = MultiPoly::variable(2, 0) * q.partial_derivative(0) + MultiPoly::variable(2, 1) * q.partial_derivative(1);
  EXPECT_EQ(euler, Int(2) * q);
}

TEST(PolyDivideExact, Examples) {
  const UniPoly p = parse_unipoly("t^2 - 2");
  EXPECT_EQ(poly_divide_exact(p, p), UniPoly{1});
  EXPECT_EQ(poly_divide_exact(parse_unipoly("t^6 - 12t^4 + 36t^2 - 32"), p * p), parse_unipoly("t^2 - 8"));
  try {
    poly_divide_exact(parse_unipoly("t^2+1"), parse_unipoly("t+1"));
    FAIL() << "expected NotDivisible";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotDivisible);
  }
}

TEST(PolyDivideExact, RoundTrip) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const UniPoly a = random_poly(rng, static_cast<int>(rng() % 7), 20);
    const UniPoly b = random_poly(rng, 1 + static_cast<int>(rng() % 5), 20);
    EXPECT_EQ(poly_divide_exact(a * b, b), a);
  }
}

TEST(Discriminant, Examples) {
  EXPECT_EQ(discriminant(parse_unipoly("t^2-2")), Rat(8));
  EXPECT_EQ(discriminant(parse_unipoly("t^2+t+1")), Rat(-3));
  EXPECT_EQ(discriminant(parse_unipoly("t^3-t-1")), Rat(-23));
}

TEST(Discriminant, MatchesRootFormulaForQuadratics) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const UniPoly g = random_poly(rng, 2, 50);
    const Rat a = g.coeff(2), b = g.coeff(1), c = g.coeff(0);
    EXPECT_EQ(discriminant(g), b * b - 4 * a * c);
  }
}

TEST(Discriminant, CubicClosedForm) {
  // disc(at^3+bt^2+ct+d) = b^2c^2 - 4ac^3 - 4b^3d - 27a^2d^2 + 18abcd
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const UniPoly g = random_poly(rng, 3, 30);
    const Rat a = g.coeff(3), b = g.coeff(2), c = g.coeff(1), d = g.coeff(0);
    const Rat expect = b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d;
    EXPECT_EQ(discriminant(g), expect);
  }
}

TEST(Discriminant, HadamardBound) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const UniPoly g = random_poly(rng, 1 + static_cast<int>(rng() % 8), 1000);
    EXPECT_TRUE(discriminant_within_hadamard_bound(g, discriminant(g)));
  }
}

TEST(Resultant, VanishesOnCommonRoot) {
  EXPECT_EQ(resultant(parse_unipoly("t^2-1"), parse_unipoly("t-1")), Rat(0));
  EXPECT_EQ(resultant(parse_unipoly("t-2"), parse_unipoly("t-5")), Rat(-3));
}

TEST(Gcd, ExtendedIdentity) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const UniPoly c = random_poly(rng, 2, 5);
    const UniPoly a = c * random_poly(rng, 3, 5);
    const UniPoly b = c * random_poly(rng, 2, 5);
    const auto eg = ext_gcd(a, b);
    EXPECT_EQ(eg.s * a + eg.t * b, eg.g);
    EXPECT_TRUE((a % eg.g).is_zero());
    EXPECT_GE(eg.g.degree(), 2);
    EXPECT_EQ(gcd(a, b), eg.g);
  }
}

TEST(Squarefree, Decomposition) {
  const UniPoly p = parse_unipoly("t^2-2");
  const UniPoly q = parse_unipoly("t^2-8");
  const auto parts = squarefree_decomposition(p * p * q);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].first, q);
  EXPECT_EQ(parts[0].second, 1);
  EXPECT_EQ(parts[1].first, p);
  EXPECT_EQ(parts[1].second, 2);
}

TEST(UniPoly, ContentAndPrimitivePart) {
  const UniPoly g({Rat(-3, 2), Rat(0), Rat(3)});
  EXPECT_EQ(g.primitive_part(), parse_unipoly("2t^2 - 1"));
  EXPECT_EQ(g.content() * g.primitive_part(), g);
  EXPECT_EQ(g.height(), Rat(3));
}

TEST(Parse, RejectsGarbage) {
  EXPECT_THROW(parse_multipoly("x1 + + "), Error);
  EXPECT_THROW(parse_multipoly("x1/2"), Error);
  EXPECT_THROW(parse_unipoly("t*x2"), Error);
  EXPECT_EQ(parse_multipoly("x1^2*x2 - 3*x3^3").nvars(), 3);
}

TEST(Linalg, NullLineAndDeterminant) {
  IntMatrix a = {{Int(2), Int(0), Int(1)}, {Int(1), Int(3), Int(2)}, {Int(1), Int(1), Int(1)}};
  EXPECT_EQ(bareiss_determinant(a), Int(2 * (3 - 2) - 0 + 1 * (1 - 3)));
  IntMatrix rows = {{Int(1), Int(-1), Int(0)}, {Int(0), Int(1), Int(-1)}};
  const IntVector u = null_line(rows, 3);
  EXPECT_EQ(u[0], u[1]);
  EXPECT_EQ(u[1], u[2]);
  EXPECT_NE(u[0], 0);
}
