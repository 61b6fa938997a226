#include <klein/multipoly.hpp>
#include <klein/upoly.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace klein;

namespace {

Cyclo random_cyclo(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> coef(-5, 5), den(1, 4);
  std::vector<Rational> c(n);
  for (auto& x : c)
    x = make_rational(coef(rng), den(rng));
  return Cyclo::from_powers(n, c);
}

using QPoly = UPoly<Rational>;

QPoly qpoly(std::initializer_list<long> low_first) {
  std::vector<Rational> v;
  for (long c : low_first)
    v.emplace_back(c);
  return QPoly(v);
}

} // namespace

TEST(Rational, CanonicalForm) {
  Rational r = make_rational(6, -4);
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_EQ(to_string(r), "-3/2");
  EXPECT_EQ(parse_rational("10/-4"), make_rational(-5, 2));
  EXPECT_THROW(parse_rational("1/0"), std::domain_error);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}

TEST(Rational, FloorSqrtIsExact) {
  EXPECT_EQ(floor_sqrt(make_rational(9, 4)), 1);
  EXPECT_EQ(floor_sqrt(make_rational(4, 1)), 2);
  EXPECT_EQ(floor_sqrt(make_rational(399, 100)), 1);
  EXPECT_EQ(mod(make_rational(-6, 11), Rational(2)), make_rational(16, 11));
}

TEST(Cyclo, LambdaMinimalPolynomial) {
  const Cyclo l = lambda_embed();
  EXPECT_TRUE((l * l + l + Cyclo(3)).is_zero());
  EXPECT_EQ(l * l.conj(), Cyclo(3));
  EXPECT_EQ(l + l.conj(), Cyclo(-1));
  EXPECT_FALSE(l.is_real());
}

TEST(Cyclo, RootsOfUnity) {
  const Cyclo z = Cyclo::zeta(11);
  Cyclo p(1), s(0);
  for (int k = 0; k < 11; ++k) {
    s += p;
    p *= z;
  }
  EXPECT_EQ(p, Cyclo(1));
  EXPECT_TRUE(s.is_zero());
  EXPECT_EQ(Cyclo::zeta(11, 12), z);
  EXPECT_EQ(Cyclo::zeta(11).degree(), 10);
}

TEST(Cyclo, MixedConductors) {
  // zeta_55^11 = zeta_5 and zeta_55^5 = zeta_11.
  EXPECT_EQ(Cyclo::zeta(55, 11), Cyclo::zeta(5));
  EXPECT_EQ(Cyclo::zeta(55, 5) * Cyclo::zeta(5), Cyclo::zeta(55, 16));
  EXPECT_EQ((Cyclo::zeta(5) + Cyclo(2)).conductor(), 5);
  EXPECT_EQ(Cyclo::zeta(6) * Cyclo::zeta(6), Cyclo::zeta(3));
  EXPECT_THROW(Cyclo::zeta(67), std::domain_error);
}

TEST(Cyclo, ConjugateNormIsRealProperty) {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 50; ++it) {
    const Cyclo x = random_cyclo(rng, 11), y = random_cyclo(rng, 11);
    const Cyclo s = x + y;
    EXPECT_TRUE((s * s.conj()).is_real());
    EXPECT_EQ((x * y).conj(), x.conj() * y.conj());
  }
}

TEST(Cyclo, InverseAndDivision) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 20; ++it) {
    const Cyclo x = random_cyclo(rng, 11);
    if (x.is_zero())
      continue;
    EXPECT_EQ(x * x.inverse(), Cyclo(1));
    const Cyclo y = random_cyclo(rng, 33);
    EXPECT_EQ((y / x) * x, y);
  }
  EXPECT_THROW(Cyclo::zero(11).inverse(), std::domain_error);
}

TEST(QuadInt, Arithmetic) {
  const QuadInt l = QuadInt::lambda();
  EXPECT_EQ(l * l + l + QuadInt(3), QuadInt(0));
  EXPECT_EQ(l * l.conj(), QuadInt(3));
  EXPECT_EQ(l + l.conj(), QuadInt(-1));
  EXPECT_EQ(l.to_cyclo(), lambda_embed());
  EXPECT_EQ(exact_div(QuadInt(3), l), l.conj());
  EXPECT_THROW(exact_div(QuadInt(1), QuadInt(2)), std::runtime_error);
}

TEST(QuadInt, NormMultiplicativeProperty) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-1000, 1000);
  for (int it = 0; it < 1000; ++it) {
    const QuadInt x(Integer(d(rng)), Integer(d(rng))), y(Integer(d(rng)), Integer(d(rng)));
    EXPECT_EQ((x * y).norm(), x.norm() * y.norm());
    EXPECT_GE(x.norm(), 0);
    EXPECT_EQ(x.norm() == 0, x.is_zero());
  }
}

TEST(UPoly, SquarefreeTrivial) {
  auto sq = squarefree_decomposition(qpoly({0, 0, 1}));
  ASSERT_EQ(sq.size(), 1u);
  EXPECT_EQ(sq[0].factor, qpoly({0, 1}));
  EXPECT_EQ(sq[0].multiplicity, 2);

  auto d = squarefree_decomposition(qpoly({-1, 0, 1}));
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].factor, qpoly({-1, 0, 1}));
  EXPECT_EQ(d[0].multiplicity, 1);

  EXPECT_THROW(squarefree_decomposition(QPoly()), std::invalid_argument);
}

TEST(UPoly, OrderFiveLineRestriction) {
  // u^6 + 10u^3 - 12u + 5
  const QPoly p = qpoly({5, -12, 0, 10, 0, 0, 1});
  const QPoly g = gcd(p, p.derivative());
  // Euclidean-algorithm oracle, worked by hand: the last nonzero remainder is
  // proportional to u^2 + u - 1.
  EXPECT_EQ(g, qpoly({-1, 1, 1}));
  EXPECT_EQ(squarefree_part(p).degree(), 4);
  auto sq = squarefree_decomposition(p);
  ASSERT_EQ(sq.size(), 2u);
  EXPECT_EQ(sq[0].factor, qpoly({5, -2, 1}));
  EXPECT_EQ(sq[1].factor, qpoly({-1, 1, 1}));
  EXPECT_EQ(sq[1].multiplicity, 2);
}

TEST(UPoly, SquarefreeReassembles) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> c(-3, 3);
  for (int it = 0; it < 30; ++it) {
    QPoly p = qpoly({1});
    for (int k = 0; k < 4; ++k) {
      QPoly f = qpoly({c(rng), c(rng) == 0 ? 1 : c(rng), 1});
      p = p * f;
      if (it % 2)
        p = p * f;
    }
    QPoly r = qpoly({1});
    for (const auto& sf : squarefree_decomposition(p))
      for (int k = 0; k < sf.multiplicity; ++k)
        r = r * sf.factor;
    EXPECT_EQ(r, p.monic());
  }
}

TEST(MultiPoly, RingAxiomsProperty) {
  using P = MultiPoly<Rational>;
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> c(-4, 4), e(0, 3);
  auto rnd = [&] {
    P p(3);
    for (int k = 0; k < 5; ++k)
      p.add_term({static_cast<std::uint16_t>(e(rng)), static_cast<std::uint16_t>(e(rng)),
                  static_cast<std::uint16_t>(e(rng))},
                 Rational(c(rng)));
    return p;
  };
  for (int it = 0; it < 40; ++it) {
    const P a = rnd(), b = rnd(), d = rnd();
    EXPECT_EQ(a * (b + d), a * b + a * d);
    EXPECT_EQ((a * b) * d, a * (b * d));
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
    if (!b.is_zero()) {
      EXPECT_EQ((a * b).exact_divide(b), a);
    }
  }
}

TEST(MultiPoly, SubstitutionIsHomomorphism) {
  using P = MultiPoly<Rational>;
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> c(-4, 4);
  const P x = P::variable(2, 0), y = P::variable(2, 1);
  const P p = x * x * y - x.scaled(Rational(3)) + P::constant(2, Rational(7));
  const P q1 = x + y * y, q2 = x * y - P::constant(2, Rational(1));
  const P comp = p.substitute({q1, q2});
  for (int it = 0; it < 20; ++it) {
    std::vector<Rational> pt{Rational(c(rng)), Rational(c(rng))};
    const Rational inner0 = q1.evaluate(pt), inner1 = q2.evaluate(pt);
    EXPECT_EQ(comp.evaluate(pt), p.evaluate(std::vector<Rational>{inner0, inner1}));
  }
}

TEST(MultiPoly, GrevlexOrder) {
  using P = MultiPoly<Rational>;
  const P x = P::variable(3, 0), y = P::variable(3, 1), z = P::variable(3, 2);
  const P p = z * z + x * y + y * y + x * z + x * x * x;
  std::vector<Monomial> order;
  for (const auto& [m, c] : p.terms())
    order.push_back(m);
  // x^3 > x^2... among degree 2: xy > y^2 > xz > z^2 in grevlex.
  const std::vector<Monomial> expect{{3, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}, {0, 0, 2}};
  EXPECT_EQ(order, expect);
  EXPECT_EQ(p.homogenized(0, 3).total_degree(), 3);
  EXPECT_TRUE(p.homogenized(0, 3).is_homogeneous());
}
