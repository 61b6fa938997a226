#include <klein/rep.hpp>

#include <gtest/gtest.h>

#include <map>
#include <random>

using namespace klein;

namespace {

const GroupTable& G() { return klein_group(); }

Cyclo lam() { return lambda_embed(); }

CMatrix column(std::initializer_list<long> v) {
  CMatrix m(v.size(), 1);
  std::size_t i = 0;
  for (long x : v)
    m(i++, 0) = Cyclo(x);
  return m;
}

} // namespace

TEST(Generators, OrdersAndDeterminants) {
  EXPECT_EQ(element_order(gen_a()), 5);
  EXPECT_EQ(element_order(gen_c()), 11);
  EXPECT_EQ(det(gen_a()), Cyclo(1));
  EXPECT_EQ(det(gen_c()), Cyclo(1));
  const CMatrix s = weil_outside_borel();
  EXPECT_EQ(det(s), Cyclo(1));
  EXPECT_EQ(s * s, CMatrix::identity(5));
  EXPECT_EQ(trace(s), Cyclo(1));
}

TEST(Generators, EigenvalueExponentsAreSquares) {
  std::vector<int> squares;
  for (int x = 1; x <= 5; ++x)
    squares.push_back(x * x % 11);
  std::sort(squares.begin(), squares.end());
  std::vector<int> exps;
  for (int i = 0; i < 5; ++i)
    for (int e = 0; e < 11; ++e)
      if (gen_c()(i, i) == Cyclo::zeta(11, e))
        exps.push_back(e);
  std::sort(exps.begin(), exps.end());
  EXPECT_EQ(exps, squares);
  EXPECT_EQ(exps, (std::vector<int>{1, 3, 4, 5, 9}));
}

TEST(Closure, SmallGroups) {
  EXPECT_EQ(generate_group({CMatrix::identity(5)}).size(), 1u);
  EXPECT_EQ(generate_group({gen_c()}).size(), 11u);
  const GroupTable borel = generate_group({gen_a(), gen_c()});
  EXPECT_EQ(borel.size(), 55u);
  EXPECT_FALSE(borel.contains(weil_outside_borel()));
  EXPECT_THROW(generate_group({gen_a(), gen_c()}, 40), std::runtime_error);
}

TEST(Closure, FullGroup) {
  ASSERT_EQ(G().size(), 660u);
  std::multiset<std::size_t> sizes;
  std::map<std::string, std::pair<std::size_t, int>> by_label;
  for (const auto& c : G().classes()) {
    sizes.insert(c.members.size());
    by_label[c.label] = {c.members.size(), c.order};
  }
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{1, 60, 60, 132, 132, 110, 110, 55}));
  const std::map<std::string, std::pair<std::size_t, int>> expect{
      {"1", {1, 1}},    {"c", {60, 11}}, {"c2", {60, 11}}, {"a", {132, 5}},
      {"a2", {132, 5}}, {"b", {110, 6}}, {"b2", {110, 3}}, {"b3", {55, 2}}};
  EXPECT_EQ(by_label, expect);
}

TEST(Characters, TableRows) {
  const Cyclo l = lam(), lb = lam().conj();
  struct Row {
    RepFunctor f;
    std::map<std::string, Cyclo> values;
  };
  const std::vector<Row> rows{
      {RepFunctor::Trivial,
       {{"1", 1}, {"c", 1}, {"c2", 1}, {"a", 1}, {"a2", 1}, {"b", 1}, {"b2", 1}, {"b3", 1}}},
      {RepFunctor::Xi,
       {{"1", 5}, {"c", l}, {"c2", lb}, {"a", 0}, {"a2", 0}, {"b", 1}, {"b2", -1}, {"b3", 1}}},
      {RepFunctor::XiDual,
       {{"1", 5}, {"c", lb}, {"c2", l}, {"a", 0}, {"a2", 0}, {"b", 1}, {"b2", -1}, {"b3", 1}}},
      {RepFunctor::Wedge2,
       {{"1", 10}, {"c", -1}, {"c2", -1}, {"a", 0}, {"a2", 0}, {"b", 1}, {"b2", 1}, {"b3", -2}}},
  };
  for (const auto& row : rows)
    for (const auto& [label, v] : row.values) {
      const std::size_t rep = G().representative(label);
      ASSERT_LT(rep, G().size()) << label;
      EXPECT_EQ(character(row.f, G()[rep]), v) << functor_name(row.f) << " on [" << label << "]";
    }
  EXPECT_EQ(character(RepFunctor::Xi, gen_c()), l);
  EXPECT_EQ(character(RepFunctor::XiDual, gen_c()), lb);
  // (lambda^2 - lambda-bar) / 2 = -1 worked in Z[lambda].
  const QuadInt ql = QuadInt::lambda();
  EXPECT_EQ(ql * ql - ql.conj(), QuadInt(-2));
}

TEST(Characters, ClassFunctionAndOrthogonality) {
  for (RepFunctor f : {RepFunctor::Xi, RepFunctor::XiDual, RepFunctor::Wedge2}) {
    Cyclo s(0);
    for (const auto& g : G().elements()) {
      const Cyclo c = character(f, g);
      s += c * c.conj();
    }
    EXPECT_EQ(s, Cyclo(660)) << functor_name(f);
  }
  for (const auto& c : G().classes()) {
    const Cyclo v = character(RepFunctor::Wedge2, G()[c.members.front()]);
    for (std::size_t i : c.members)
      ASSERT_EQ(character(RepFunctor::Wedge2, G()[i]), v);
  }
}

TEST(Characters, Wedge2FromXi) {
  for (std::size_t i = 0; i < G().size(); ++i) {
    const Cyclo x = character(RepFunctor::Xi, G()[i]);
    const Cyclo x2 = character(RepFunctor::Xi, G()[G().square(i)]);
    ASSERT_EQ(character(RepFunctor::Wedge2, G()[i]), (x * x - x2).scaled(make_rational(1, 2)));
  }
}

TEST(Characters, TraceMatchesFunctorMatrix) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::size_t> pick(0, 659);
  for (RepFunctor f : {RepFunctor::Xi, RepFunctor::XiDual, RepFunctor::Wedge2, RepFunctor::V6,
                       RepFunctor::Wedge3V6, RepFunctor::Sym2Wedge2}) {
    for (int it = 0; it < 4; ++it) {
      const auto& g = G()[pick(rng)];
      EXPECT_EQ(trace(apply_functor(f, g)), character(f, g)) << functor_name(f);
    }
  }
  const auto& g = G()[G().representative("b")];
  EXPECT_EQ(trace(apply_functor(RepFunctor::EndWedge2, g)), character(RepFunctor::EndWedge2, g));
}

TEST(Functors, Multiplicative) {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<std::size_t> pick(0, 659);
  auto check = [&](RepFunctor f, int pairs) {
    for (int it = 0; it < pairs; ++it) {
      const auto& g = G()[pick(rng)];
      const auto& h = G()[pick(rng)];
      ASSERT_EQ(apply_functor(f, g * h), apply_functor(f, g) * apply_functor(f, h))
          << functor_name(f);
    }
  };
  check(RepFunctor::Xi, 100);
  check(RepFunctor::XiDual, 100);
  check(RepFunctor::Wedge2, 100);
  check(RepFunctor::V6, 100);
  check(RepFunctor::Wedge3V6, 100);
  check(RepFunctor::Sym2Wedge2, 5);
  check(RepFunctor::EndWedge2, 1);
}

TEST(TrivialMultiplicity, Values) {
  EXPECT_EQ(trivial_multiplicity(RepFunctor::Trivial), 1);
  EXPECT_EQ(trivial_multiplicity(RepFunctor::Xi), 0);
  EXPECT_EQ(trivial_multiplicity(RepFunctor::Sym2Wedge2), 1);
  EXPECT_EQ(trivial_multiplicity(RepFunctor::EndWedge2), 1);
  EXPECT_EQ(trivial_multiplicity(RepFunctor::Wedge3V6), 0);
}

TEST(Lefschetz, TableOneRow) {
  const std::map<std::string, long> expect{{"c", 5}, {"c2", 5}, {"a", 2}, {"a2", 2}, {"b", 3}, {"b2", 3}};
  for (const auto& [label, n] : expect)
    EXPECT_EQ(lefschetz_surface_count(G()[G().representative(label)]), n) << label;
  EXPECT_THROW(lefschetz_surface_count(G()[G().representative("b3")]), std::runtime_error);
  EXPECT_THROW(lefschetz_surface_count(CMatrix::identity(5)), std::runtime_error);
}

TEST(InvariantForm, TrivialAndWedge2) {
  EXPECT_EQ(invariant_hermitian(RepFunctor::Trivial), CMatrix::identity(1).scaled(Cyclo(660)));
  const CMatrix m = invariant_hermitian(RepFunctor::Wedge2);
  EXPECT_TRUE(is_hermitian(m));
  EXPECT_TRUE(is_invariant(m, RepFunctor::Wedge2, standard_generators()));
  EXPECT_TRUE(is_positive_definite_hermitian(m));
  // Minor-sign oracle: the form is diagonal 660 I here because the Weil
  // generator is unitary in this basis, so the minors are 660^k.
  const auto minors = leading_minors(m);
  Rational p = 1;
  for (const auto& mi : minors) {
    p *= 660;
    EXPECT_EQ(mi, Cyclo(p));
  }
}

TEST(Stabilizer, Examples) {
  EXPECT_EQ(stabilizer(G(), column({1, 0, 0, 0, 0, 0})).size(), 660u);
  EXPECT_EQ(stabilizer(G(), column({0, 1, 0, 0, 0, 0})).size(), 11u);
  CMatrix line(6, 2);
  line(0, 0) = Cyclo(1);
  for (int i = 1; i < 6; ++i)
    line(i, 1) = Cyclo(1);
  const auto st = stabilizer(G(), line);
  EXPECT_GE(st.size(), 10u);
  bool has5 = false, has2 = false;
  for (std::size_t i : st) {
    has5 |= G().order(i) == 5;
    has2 |= G().order(i) == 2;
  }
  EXPECT_TRUE(has5);
  EXPECT_TRUE(has2);
  EXPECT_THROW(stabilizer(G(), CMatrix(6, 1)), std::invalid_argument);
}
