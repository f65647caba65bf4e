#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "hypdeg/error.hpp"
#include "hypdeg/parse.hpp"
#include "hypdeg/specializer.hpp"

using namespace hypdeg;

namespace {

UniPoly up(const std::string& s) { return parse_unipoly(s); }
MultiPoly mp(const std::string& s, int m = -1) { return parse_multipoly(s, m); }

bool divides(const UniPoly& G, const UniPoly& a) { return (a % G).is_zero(); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::PreconditionFailed;
}

}  // namespace

TEST(PickN, Examples) {
  EXPECT_EQ(pick_n(mp("x - y")), (std::vector<long>{1, 2}));
  EXPECT_EQ(pick_n(mp("x*y")), (std::vector<long>{1, 1}));
  EXPECT_EQ(pick_n(mp("(x-1)*(x-2)*(x-3)")), (std::vector<long>{4}));
}

TEST(PickN, RandomPolynomialsMeetTheLemma) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const int m = 1 + static_cast<int>(rng() % 3);
    MultiPoly g(m);
    const int terms = 1 + static_cast<int>(rng() % 5);
    for (int k = 0; k < terms; ++k) {
      ExponentVector e(m);
      for (auto& x : e) x = static_cast<int>(rng() % 4);
      g.add_term(e, Int(static_cast<long>(rng() % 7) - 3));
    }
    // Products of linear factors vanish on many small points.
    g = g * mp("x1 - 1", m) * mp(m > 1 ? "x2 - 2" : "x1 - 2", m);
    if (g.is_zero()) continue;
    const auto n = pick_n(g);
    long sum = 0;
    IntVector pt;
    for (long v : n) {
      EXPECT_GE(v, 1);
      sum += v;
      pt.emplace_back(v);
    }
    EXPECT_LE(sum, m + g.total_degree());
    EXPECT_NE(g.evaluate(pt), 0);
  }
}

TEST(LeadingForm, Examples) {
  auto lf = leading_form(mp("x^2 + y^3"), {3, 2});
  EXPECT_EQ(lf.D, 6);
  EXPECT_EQ(lf.g_d, mp("x^2 + y^3"));

  // Homogenized y^2 z^4 = x^6 + x z^5 + z^6; d = (1, 3, 0) ties the corners (6,0,0) and (0,2,4).
  const MultiPoly f = mp("y^2*z^4 - x^6 - x*z^5 - z^6");
  lf = leading_form(f, {1, 3, 0});
  EXPECT_EQ(lf.D, 6);
  EXPECT_EQ(lf.g_d, mp("y^2*z^4 - x^6"));
  lf = leading_form(f, {1, 4, 0});
  EXPECT_EQ(lf.D, 8);
  EXPECT_EQ(lf.g_d, mp("y^2*z^4"));

  lf = leading_form(mp("x^2 + 3*x + 5"), {0});
  EXPECT_EQ(lf.D, 0);
  EXPECT_EQ(lf.g_d, mp("x^2 + 3*x + 5"));
}

TEST(RandomSpec, DegreeAndLeadingTerm) {
  const MultiPoly f = mp("x^2 - 2*y^2");
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto r = random_spec(f, {1, 1}, {1, 1}, 10, seed);
    EXPECT_EQ(r.D, 2);
    EXPECT_NE(r.C, 0);
    ASSERT_FALSE(r.degenerate);
    EXPECT_EQ(r.F.degree(), 2);
    EXPECT_EQ(r.F.leading(), Rat(r.C));
    EXPECT_TRUE(r.height_ok);
    for (std::size_t j = 0; j < 2; ++j) {
      EXPECT_EQ(r.spec.x[j].leading(), Rat(r.spec.n[j]));
      EXPECT_LE(r.spec.x[j].height(), Rat(std::max<long>(10, r.spec.n[j])));
    }
    // x^2 - 2 y^2 has no rational zero, so F is reducible exactly when x and y share a root.
    const bool common_root = resultant(r.spec.x[0], r.spec.x[1]) == 0;
    EXPECT_EQ(r.F_verdict.status == VerdictStatus::Irreducible, !common_root);
    EXPECT_EQ(r.nonsingular_witness >= 0, !common_root);
  }
  const auto a = random_spec(f, {2, 1}, {1, Rat(1) / 2}, 100, 9);
  const auto b = random_spec(f, {2, 1}, {1, Rat(1) / 2}, 100, 9);
  EXPECT_EQ(a.F, b.F);
}

TEST(RandomSpec, ForcedDegenerateDraw) {
  SpecOptions opt;
  opt.forced_x = std::vector<UniPoly>{UniPoly::t(), UniPoly::t()};
  opt.forced_n = std::vector<long>{1, 1};
  const auto r = random_spec(mp("x^2 - y^2"), {1, 1}, {1, 1}, 10, 1, opt);
  EXPECT_TRUE(r.F.is_zero());
  EXPECT_TRUE(r.degenerate);
}

TEST(RandomSpec, IrreducibleDrawsAreNonsingularAndGenerateTheField) {
  const MultiPoly f = mp("x^3 + 2*y^3 + 5*z^3");
  int irreducible = 0, equal = 0;
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const auto r = random_spec(f, {2, 1, 1}, {1, 1, 1}, 20, seed);
    EXPECT_EQ(r.D, 6);
    if (r.F_verdict.status != VerdictStatus::Irreducible) continue;
    ++irreducible;
    EXPECT_GE(check_nonsingular(f, r.spec.x, r.F).witness, 0);
    if (!r.x_irreducible) continue;
    // [Q(x_j(alpha)) : Q] * d_j >= deg F, with equality when x_j(alpha) generates Q(alpha).
    for (std::size_t j = 0; j < 3; ++j) {
      const int deg = field_degree(r.F, r.spec.x[j]);
      EXPECT_GE(deg * r.spec.d[j], r.F.degree());
      equal += deg * r.spec.d[j] == r.F.degree();
    }
  }
  EXPECT_GT(irreducible, 6);
  EXPECT_GT(equal, 0);
}

TEST(CheckNonsingular, Examples) {
  const MultiPoly f = mp("x^2 - 2*y^2");
  const auto c = check_nonsingular(f, {UniPoly::t(), UniPoly{1}}, up("t^2 - 2"));
  EXPECT_TRUE(c.nonsingular);
  EXPECT_EQ(c.witness, 0);

  const UniPoly P = up("t^2 + 1");
  EXPECT_FALSE(check_nonsingular(mp("x^2"), {P}, P).nonsingular);
  EXPECT_EQ(code_of([&] { check_nonsingular(f, {UniPoly::t(), UniPoly{2}}, up("t^2 - 2")); }), ErrorCode::NotASolution);
}

TEST(HenselLift, Example) {
  const MultiPoly f = mp("x^2 - 2*y^2");
  const PolySolution sol{up("t^2 - 2"), {UniPoly::t(), UniPoly{1}}, -1};
  const auto w = hensel_lift(f, sol, 2);
  EXPECT_EQ(w.u[0], up("6t - t^3"));
  EXPECT_EQ(w.u[1], UniPoly{4});
  EXPECT_EQ(f.evaluate_composition(w.u), up("t^6 - 12t^4 + 36t^2 - 32"));
  EXPECT_EQ(f.evaluate_composition(w.u), up("(t^2-2)^2*(t^2-8)"));

  const auto same = hensel_lift(f, sol, 1);
  EXPECT_EQ(same.u, sol.u);
  EXPECT_EQ(code_of([&] { hensel_lift(mp("x^2"), PolySolution{UniPoly::t(), {UniPoly()}, -1}, 2); }),
            ErrorCode::SingularInput);
}

TEST(HenselLift, RandomLiftsSolveModuloPowers) {
  // Solutions of a x^2 + b xy + c y^2 modulo the minimal polynomial of a root of a t^2 + b t + c.
  std::mt19937_64 rng(8);
  int tested = 0;
  while (tested < 30) {
    const long a = 1 + rng() % 5, b = static_cast<long>(rng() % 9) - 4, c = static_cast<long>(rng() % 9) - 4;
    if (c == 0 || b * b - 4 * a * c == 0) continue;
    const UniPoly P(std::vector<Rat>{Rat(c), Rat(b), Rat(a)});
    if (is_irreducible_Q(P).status != VerdictStatus::Irreducible) continue;
    MultiPoly f(2);
    f.add_term({2, 0}, a);
    f.add_term({1, 1}, b);
    f.add_term({0, 2}, c);
    const PolySolution sol{P, {UniPoly::t(), UniPoly{1}}, -1};
    const int e = 2 + static_cast<int>(rng() % 4);
    const auto w = hensel_lift(f, sol, e);
    EXPECT_TRUE(divides(P.pow(static_cast<unsigned>(e)), f.evaluate_composition(w.u)));
    for (const auto& p : w.u) EXPECT_TRUE(p.is_integral());
    // w = lambda * u mod P for the integer rescaling lambda = w_2 mod P / 1.
    const UniPoly lam = w.u[1] % P;
    ASSERT_EQ(lam.degree(), 0);
    EXPECT_EQ(w.u[0] % P, (UniPoly::t() * lam) % P);
    ++tested;
  }
}

TEST(Crt, Examples) {
  const MultiPoly f = mp("x^2 - 2*y^2");
  const PolySolution p1{up("t^2 - 2"), {UniPoly::t(), UniPoly{1}}, 0};
  const PolySolution p2{up("t^2 - 8"), {UniPoly::t(), UniPoly{2}}, 0};
  const auto c = crt_combine(f, {p1, p2});
  EXPECT_EQ(c.modulus, up("(t^2-2)*(t^2-8)"));
  EXPECT_TRUE(divides(c.modulus, f.evaluate_composition(c.u)));
  for (const auto& p : c.u) EXPECT_LT(p.degree(), 4);

  const auto single = crt_combine(f, {p1});
  EXPECT_EQ(single.u, p1.u);
  EXPECT_EQ(code_of([&] { crt_combine(f, {p1, PolySolution{up("(t^2-2)*(t-1)"), p1.u, 0}}); }), ErrorCode::NotCoprime);
}

TEST(ReduceMin, Examples) {
  const MultiPoly f = mp("x^2 - 2*y^2");
  const UniPoly G = up("t^2 - 2");
  const std::vector<UniPoly> u{UniPoly::t(), UniPoly{1}};
  EXPECT_EQ(reduce_min(f, u, G), u);

  const std::vector<UniPoly> y{u[0] + UniPoly::t() * G, u[1] + up("3t^3") * G};
  const auto r = reduce_min(f, y, G);
  for (const auto& p : r) EXPECT_LT(p.degree(), 2);
  EXPECT_TRUE(divides(G, f.evaluate_composition(r)));

  const UniPoly G3 = up("3t^2 - 6");
  const std::vector<UniPoly> y3{u[0] + UniPoly::t() * G3, u[1]};
  const auto r3 = reduce_min(f, y3, G3);
  for (const auto& p : r3) EXPECT_LT(p.degree(), 2);
  EXPECT_TRUE(divides(G3, f.evaluate_composition(r3)));

  EXPECT_EQ(code_of([&] { reduce_min(f, {UniPoly{1}, UniPoly{1}}, G); }), ErrorCode::NotASolution);
}

TEST(QuotientForm, Examples) {
  const MultiPoly f = mp("x^2 - 2*y^2");
  const UniPoly G = up("t^2 - 2");
  const auto q = quotient_form(f, G, {UniPoly::t(), UniPoly{1}});
  EXPECT_EQ(q.corners_g, (std::vector<ExponentVector>{{0, 2}, {2, 0}}));
  EXPECT_EQ(q.corners_f, q.corners_g);
  EXPECT_EQ(q.g.at({2, 0}), G);
  EXPECT_EQ(q.g.at({0, 2}), G.scaled(Rat(-2)));
  EXPECT_EQ(q.g.at({0, 0}), UniPoly{1});
  EXPECT_TRUE(q.nonsingular);

  const auto unit = quotient_form(f, UniPoly{1}, {UniPoly(), UniPoly()});
  EXPECT_EQ(unit.g.size(), 2u);
  EXPECT_EQ(unit.g.at({2, 0}), UniPoly{1});

  const auto sing = quotient_form(mp("x^2"), UniPoly::t(), {UniPoly()});
  EXPECT_FALSE(sing.nonsingular);
  EXPECT_EQ(sing.g.at({2}), UniPoly::t());
}

TEST(QuotientForm, CornerIdentityOnLiftedSolutions) {
  const MultiPoly f = mp("x^2 + x*y - 3*y^2");
  const UniPoly P = up("t^2 + t - 3");
  for (int e = 1; e <= 3; ++e) {
    const auto w = hensel_lift(f, PolySolution{P, {UniPoly::t(), UniPoly{1}}, -1}, e);
    const auto u = reduce_min(f, w.u, w.modulus);
    const auto q = quotient_form(f, w.modulus, u);
    for (const auto& h : q.corners_f) EXPECT_EQ(q.g.at(h), w.modulus.scaled(Rat(f.coeff(h))));
    EXPECT_TRUE(q.nonsingular);
  }
}
