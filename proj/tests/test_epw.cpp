#include <klein/epw.hpp>
#include <klein/polytext.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace klein;

namespace {

const Sextic& fixture_sextic() {
  static const Sextic f = parse_polynomial(read_text_file(std::string(KLEIN_FIXTURE_DIR) + "/sextic.txt"), 6);
  return f;
}

const Sextic& computed_sextic() {
  static const Sextic f = sextic_by_bareiss(build_A());
  return f;
}

std::vector<Rational> qvec(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v)
    out.emplace_back(x);
  return out;
}

CMatrix to_c(const QMatrix& m) {
  return m.map<Cyclo>([](const Rational& r) { return Cyclo(r); });
}

// Random Lagrangian transverse to wedge^3 V_xi: graph of P^-1 S, S symmetric.
QMatrix random_graph_lagrangian(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  QMatrix s(10, 10);
  for (int i = 0; i < 10; ++i)
    for (int j = i; j < 10; ++j)
      s(i, j) = s(j, i) = d(rng);
  return graph_lagrangian(QMatrix(inverse(wedge23_pairing_matrix()) * s));
}

} // namespace

TEST(Lagrangian, VTable) {
  const QMatrix v = build_v();
  EXPECT_EQ(rank(v), 10u);
  // signed permutation
  for (int j = 0; j < 10; ++j) {
    int nz = 0;
    for (int i = 0; i < 10; ++i)
      if (v(i, j) != 0) {
        ++nz;
        EXPECT_TRUE(v(i, j) == 1 || v(i, j) == -1);
      }
    EXPECT_EQ(nz, 1);
  }
  EXPECT_TRUE(v_is_symmetric(v));
  QMatrix bad = v;
  bad(subset_index(5, {1, 3, 4}), 0) = 2;
  EXPECT_FALSE(v_is_symmetric(bad));
}

TEST(Lagrangian, KleinAIsLagrangianAndSelfDual) {
  const Lagrangian a = build_A();
  EXPECT_TRUE(is_lagrangian(a));
  EXPECT_TRUE(self_duality_check(a));
  // generator e012 + e245 is the first row
  EXPECT_EQ(a(0, triple_index(0, 1, 2)), 1);
  EXPECT_EQ(a(0, triple_index(2, 4, 5)), 1);
  EXPECT_EQ(a(1, triple_index(3, 4, 5)), -1);
}

TEST(Lagrangian, SelfDualityAgreesWithAnnihilatorOracle) {
  std::mt19937_64 rng(5);
  int dual = 0;
  for (int it = 0; it < 30; ++it) {
    const QMatrix a = random_graph_lagrangian(rng);
    ASSERT_TRUE(is_lagrangian(a));
    // Oracle: annihilator of A as the kernel of A, compared with D(A).
    const QMatrix ann = kernel_basis(a).transpose();
    QMatrix da = a;
    for (std::size_t r = 0; r < 10; ++r)
      for (std::size_t k = 0; k < 20; ++k)
        da(r, k) *= duality_sign(k);
    const bool oracle = same_subspace(da, ann);
    EXPECT_EQ(self_duality_check(a), oracle);
    dual += oracle;
  }
  // the graph of a symmetric map built from pairs inside V_xi alone is rarely dual
  EXPECT_LT(dual, 30);
  QMatrix ann = kernel_basis(build_A()).transpose();
  QMatrix da = build_A();
  for (std::size_t r = 0; r < 10; ++r)
    for (std::size_t k = 0; k < 20; ++k)
      da(r, k) *= duality_sign(k);
  EXPECT_TRUE(same_subspace(da, ann));
}

TEST(Lagrangian, InvariantUnderGroup) {
  const CMatrix a = to_c(build_A());
  for (const auto& g : standard_generators()) {
    const CMatrix w = compound(extend_to_v6(g), 3);
    // rows are trivectors: row r maps to w * r
    EXPECT_TRUE(same_subspace(a, CMatrix((w * a.transpose()).transpose())));
  }
}

TEST(Lagrangian, VIsEquivariant) {
  const CMatrix v = to_c(build_v());
  for (const auto& g : standard_generators())
    EXPECT_EQ(wedge3_xi(g) * v, v * wedge2_xi(g));
}

TEST(Lagrangian, DualRepresentationGivesSameLagrangian) {
  std::vector<CMatrix> dual;
  for (const auto& g : standard_generators())
    dual.push_back(inverse(g).transpose());
  const auto v = normalized_equivariant_v(dual);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(*v, to_c(build_v()));
  EXPECT_TRUE(same_subspace(graph_lagrangian(*v), to_c(build_A())));
  const auto vxi = normalized_equivariant_v(standard_generators());
  ASSERT_TRUE(vxi.has_value());
  EXPECT_EQ(*vxi, to_c(build_v()));
}

TEST(Sextic, FixtureShape) {
  const Sextic& f = fixture_sextic();
  EXPECT_EQ(f.size(), 37u);
  EXPECT_TRUE(f.is_homogeneous());
  EXPECT_EQ(f.total_degree(), 6);
  EXPECT_EQ(f.coefficient(Monomial{6, 0, 0, 0, 0, 0}), 1);
}

TEST(Sextic, BareissMatchesFixture) {
  const Sextic& f = computed_sextic();
  const auto diff = first_difference(f, fixture_sextic());
  EXPECT_FALSE(diff.has_value());
}

TEST(Sextic, InterpolationMatchesBareiss) {
  EXPECT_EQ(sextic_by_interpolation(build_A()), computed_sextic());
}

TEST(Sextic, BothRoutesAgreeOnRandomLagrangians) {
  std::mt19937_64 rng(8);
  for (int it = 0; it < 3; ++it) {
    const QMatrix a = random_graph_lagrangian(rng);
    EXPECT_EQ(sextic_by_interpolation(a), sextic_by_bareiss(a));
  }
}

TEST(Sextic, ChartRejectsNonTransverse) {
  QMatrix a(10, 20);
  // wedge^3 of e1..e5 itself plus nothing: rows e_{ijk} inside V_xi
  for (std::size_t t = 0; t < 10; ++t)
    a(t, subset_index(6, triples5()[t])) = 1;
  EXPECT_THROW(chart_map(a), std::runtime_error);
}

TEST(Sextic, InvariantUnderGenerators) {
  const Sextic& f = fixture_sextic();
  for (const auto& g : standard_generators())
    EXPECT_TRUE(is_invariant_polynomial(f, extend_to_v6(g)));
  CMatrix bad = extend_to_v6(gen_a());
  bad(0, 0) = Cyclo(-1);
  EXPECT_TRUE(is_invariant_polynomial(f, bad) == false);
}

TEST(Stratum, ConsistentWithSextic) {
  const Lagrangian a = build_A();
  const Sextic& f = fixture_sextic();
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int it = 0; it < 200; ++it) {
    std::vector<Rational> x(6);
    bool nz = false;
    for (auto& c : x) {
      c = d(rng);
      nz |= c != 0;
    }
    if (!nz)
      continue;
    const int l = stratum(a, x);
    const bool zero = f.evaluate(x) == 0;
    EXPECT_EQ(l >= 1, zero);
  }
  // points of Y_A found on the coordinate simplex
  for (int i = 1; i <= 5; ++i) {
    std::vector<Rational> e(6);
    e[i] = 1;
    EXPECT_EQ(f.evaluate(e), 0);
    EXPECT_EQ(stratum(a, e), 2) << i;
  }
  std::vector<Rational> e0(6);
  e0[0] = 1;
  EXPECT_EQ(stratum(a, e0), 0);
  EXPECT_THROW(stratum(a, std::vector<Rational>(6)), std::invalid_argument);
}

TEST(GM, DimensionFromCovector) {
  const Lagrangian a = build_A();
  std::vector<Rational> u0(6);
  u0[0] = 1;
  // A meets wedge^3 V_xi trivially, so the GM variety over V_xi has dimension 5
  EXPECT_EQ(gm_dimension(a, u0), 5);
  for (int i = 1; i <= 5; ++i) {
    std::vector<Rational> u(6);
    u[i] = 1;
    // the order-5 element permutes e1..e5, so all five agree with <e0..e4>
    EXPECT_EQ(gm_dimension(a, u), 3) << i;
  }
}

TEST(Lines, OrderFiveLine) {
  // Delta_5: the fixed line of a spanned by e0 and (0,1,1,1,1,1)
  const auto g = restrict_to_line(fixture_sextic(), qvec({1, 0, 0, 0, 0, 0}), qvec({0, 1, 1, 1, 1, 1}));
  MultiPoly<Rational> expect(2);
  expect.add_term({6, 0}, 1);
  expect.add_term({3, 3}, 10);
  expect.add_term({1, 5}, -12);
  expect.add_term({0, 6}, 5);
  EXPECT_EQ(g, expect);
  const auto roots = analyze_binary_form(g);
  EXPECT_EQ(roots.distinct_roots, 4);
  EXPECT_EQ(roots.multiplicities(), (std::vector<int>{2, 2, 1, 1}));
  bool found = false;
  for (const auto& sf : roots.factors)
    if (sf.multiplicity == 2)
      found = sf.factor == UPoly<Rational>({-1, 1, 1});
  EXPECT_TRUE(found);
  EXPECT_THROW(restrict_to_line(fixture_sextic(), qvec({1, 2, 0, 0, 0, 0}), qvec({2, 4, 0, 0, 0, 0})),
               std::invalid_argument);
}

TEST(Lines, OrderTwoLineIsSquarefree) {
  const CMatrix b3 = klein_group()[klein_group().representative("b3")];
  const auto spaces = fixed_locus(b3);
  int found = 0;
  for (const auto& e : spaces) {
    if (e.dim() != 2)
      continue;
    ++found;
    const auto g = restrict_to_line(fixture_sextic(), e.basis.col(0), e.basis.col(1));
    const auto r = analyze_binary_form(g);
    EXPECT_FALSE(r.identically_zero);
    EXPECT_EQ(r.distinct_roots, 6);
    EXPECT_EQ(r.multiplicities(), std::vector<int>(6, 1));
  }
  EXPECT_EQ(found, 1);
}

TEST(FixedPoints, CountsByOrder) {
  const auto& G = klein_group();
  // order 11: six eigenlines, e0 is not on Y_A
  const auto c11 = count_fixed_points(fixture_sextic(), G[G.representative("c")]);
  EXPECT_EQ(c11.total(), 5);
  EXPECT_EQ(c11.higher_dimensional, 0);
  const auto c5 = count_fixed_points(fixture_sextic(), G[G.representative("a")]);
  EXPECT_EQ(c5.total(), 8);
  // orders 6 and 3 work over Q(zeta_66) and Q(zeta_33)
  const auto c6 = count_fixed_points(fixture_sextic(), G[G.representative("b")]);
  EXPECT_EQ(c6.isolated_on_sextic, 2);
  EXPECT_EQ(c6.on_fixed_lines, 5);
  EXPECT_EQ(c6.total(), 7);
  const auto c3 = count_fixed_points(fixture_sextic(), G[G.representative("b2")]);
  EXPECT_EQ(c3.total(), 15);
  EXPECT_EQ(c3.lines_in_sextic, 0);
  const auto s2 = fixed_locus(G[G.representative("b3")]);
  std::vector<int> dims;
  for (const auto& e : s2)
    dims.push_back(e.dim());
  std::sort(dims.begin(), dims.end());
  EXPECT_EQ(dims, (std::vector<int>{2, 4}));
}

TEST(FixedPoints, NormalizePoint) {
  const auto p = normalize_point(qvec({0, 2, 4, -6, 0, 0}));
  EXPECT_EQ(p, qvec({0, 1, 2, -3, 0, 0}));
  EXPECT_THROW(normalize_point(qvec({0, 0, 0, 0, 0, 0})), std::invalid_argument);
}
