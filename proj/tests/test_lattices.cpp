#include <klein/lattice.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace klein;

namespace {

Lattice T11() { return Lattice::from_gram(ZMatrix{{-2, -1}, {-1, -6}}); }

FiniteQuadraticForm cyclic(long d, Rational q, Rational modulus = 2) {
  return FiniteQuadraticForm({d}, QMatrix{{q}}, modulus);
}

std::vector<Integer> zvec(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (long x : v)
    out.emplace_back(x);
  return out;
}

// Box search oracle for short vectors.
std::vector<std::vector<Integer>> box_short_vectors(const Lattice& l, long radius, const Integer& bound) {
  const std::size_t n = l.rank();
  std::vector<std::vector<Integer>> out;
  std::vector<Integer> x(n);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      const Integer nv = l.norm(x);
      bool zero = true;
      for (const auto& c : x)
        zero &= c == 0;
      if (!zero && abs(nv) <= bound)
        out.push_back(x);
      return;
    }
    for (long v = -radius; v <= radius; ++v) {
      x[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

TEST(Lattice, Constructors) {
  EXPECT_EQ(Lattice::hyperbolic().determinant(), -1);
  EXPECT_EQ(Lattice::e8_negative().determinant(), 1);
  EXPECT_TRUE(Lattice::e8_negative().is_even());
  EXPECT_TRUE(Lattice::e8_negative().is_negative_definite());
  const Lattice hperp =
      direct_sum({Lattice::hyperbolic(), Lattice::hyperbolic(), Lattice::e8_negative(), Lattice::e8_negative(),
                  Lattice::rank1(-2), Lattice::rank1(-2)});
  EXPECT_EQ(hperp.rank(), 22u);
  EXPECT_EQ(hperp.signature(), std::make_pair(2, 20));
  EXPECT_THROW(Lattice::from_gram(ZMatrix{{1, 2}, {2, 4}}), std::invalid_argument);
  EXPECT_THROW(Lattice::from_gram(ZMatrix{{1, 2}, {3, 4}}), std::invalid_argument);
}

TEST(Lattice, SpecParser) {
  const Lattice l = parse_lattice_spec("U+U+E8(-1)+E8(-1)+(-2)+(-2)");
  EXPECT_EQ(l.rank(), 22u);
  EXPECT_EQ(parse_lattice_spec("[[2,1],[1,6]] + (22)").determinant(), 11 * 22);
  EXPECT_THROW(parse_lattice_spec("U+"), std::invalid_argument);
  EXPECT_THROW(parse_lattice_spec("U*U"), std::invalid_argument);
  EXPECT_THROW(parse_lattice_spec("[[1,2],[3]]"), std::invalid_argument);
}

TEST(DiscGroup, Examples) {
  EXPECT_EQ(disc_group(Lattice::e8_negative()).order(), 1);
  EXPECT_EQ(disc_group(Lattice::hyperbolic()).order(), 1);
  const auto t = disc_group(T11());
  ASSERT_EQ(t.orders(), std::vector<long>{11});
  EXPECT_TRUE(fqf_isomorphic(t, cyclic(11, make_rational(-2, 11))));
  EXPECT_TRUE(fqf_isomorphic(cyclic(11, make_rational(-6, 11)), cyclic(11, make_rational(-2, 11))));
  EXPECT_FALSE(fqf_isomorphic(cyclic(11, make_rational(-2, 11)), cyclic(11, make_rational(2, 11))));
  EXPECT_FALSE(fqf_isomorphic(cyclic(2, make_rational(1, 2)), cyclic(2, make_rational(3, 2))));
  const auto m2 = disc_group(power(Lattice::rank1(-2), 2));
  EXPECT_EQ(m2.orders(), (std::vector<long>{2, 2}));
  EXPECT_EQ(m2.form()(0, 0), make_rational(3, 2));
  EXPECT_EQ(m2.form()(1, 1), make_rational(3, 2));
}

TEST(DiscGroup, OrderEqualsDeterminant) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int it = 0; it < 60; ++it) {
    ZMatrix g(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j)
        g(i, j) = g(j, i) = d(rng) * (i == j ? 2 : 1);
    if (det(g) == 0 || abs(det(g)) > 2000)
      continue;
    const Lattice l = Lattice::from_gram(g);
    const auto f = disc_group(l);
    EXPECT_EQ(Integer(f.order()), abs(l.determinant()));
    // q(kx) = k^2 q(x)
    for (const auto& x : f.elements())
      for (long k : {2L, 3L})
        ASSERT_EQ(f.q(f.scale(x, k)), mod(Rational(k * k) * f.q(x), f.modulus()));
  }
}

TEST(DiscGroup, DirectSumCompatible) {
  const std::vector<Lattice> ls{T11(), Lattice::rank1(-2), Lattice::rank1(6), Lattice::rank1(4),
                                Lattice::from_gram(ZMatrix{{2, 1}, {1, 2}})};
  for (const auto& a : ls)
    for (const auto& b : ls) {
      if (a.is_even() != b.is_even())
        continue;
      const auto s = disc_group(direct_sum(a, b));
      const auto t = direct_sum(disc_group(a), disc_group(b));
      if (s.order() > 1000)
        continue;
      EXPECT_TRUE(fqf_isomorphic(s, t));
    }
}

TEST(DiscGroup, HPerpAndTranscendental) {
  const Lattice hperp =
      direct_sum({Lattice::hyperbolic(), Lattice::hyperbolic(), Lattice::e8_negative(), Lattice::e8_negative(),
                  Lattice::rank1(-2), Lattice::rank1(-2)});
  const auto dh = disc_group(hperp);
  EXPECT_EQ(dh.orders(), (std::vector<long>{2, 2}));
  const Lattice s = direct_sum({power(Lattice::e8_negative(), 2), T11(), T11()});
  const auto ds = disc_group(s);
  EXPECT_EQ(ds.orders(), (std::vector<long>{11, 11}));
  const auto target = direct_sum(cyclic(11, make_rational(-2, 11)), cyclic(11, make_rational(-2, 11)));
  EXPECT_TRUE(fqf_isomorphic(ds, target));
}

TEST(DiscGroup, IsotropicElements) {
  const Lattice pic = direct_sum({Lattice::rank1(2), power(Lattice::e8_negative(), 2), T11(), T11()});
  EXPECT_EQ(pic.rank(), 21u);
  const auto d = disc_group(pic);
  EXPECT_EQ(d.order(), 2 * 121);
  EXPECT_TRUE(isotropic_elements(d).empty());
  // oracle: -1 is not a square mod 11, so b^2 + c^2 = 0 mod 11 only for b = c = 0
  int sums = 0;
  for (int b = 0; b < 11; ++b)
    for (int c = 0; c < 11; ++c)
      sums += (b * b + c * c) % 11 == 0;
  EXPECT_EQ(sums, 1);
  EXPECT_TRUE(isotropic_elements(disc_group(Lattice::hyperbolic())).empty());
  const auto z8 = disc_group(Lattice::rank1(8));
  EXPECT_EQ(z8.form()(0, 0), make_rational(1, 8));
  const auto iso = isotropic_elements(z8);
  ASSERT_EQ(iso.size(), 1u);
  EXPECT_EQ(iso[0], std::vector<long>{4});
}

TEST(DiscGroup, HodgeLatticeRank22) {
  const Lattice l = direct_sum({power(Lattice::rank1(2), 2), power(Lattice::e8_negative(), 2), T11(), T11()});
  EXPECT_EQ(l.rank(), 22u);
  EXPECT_EQ(l.signature(), std::make_pair(2, 20));
}

TEST(DiscGroup, GluingIsometriesTh47) {
  const auto d22 = disc_group(power(Lattice::rank1(22), 2));
  std::vector<FiniteQuadraticForm::Element> two;
  for (const auto& x : d22.torsion(2))
    if (!d22.is_zero(x))
      two.push_back(x);
  ASSERT_EQ(two.size(), 3u);
  // 2-torsion of Z/22 + Z/22 is generated by 11 g_1 and 11 g_2
  const auto sub = d22.subform({{11, 0}, {0, 11}});
  EXPECT_EQ(sub.q({1, 0}), make_rational(3, 2));
  const auto target = disc_group(power(Lattice::rank1(-2), 2));
  EXPECT_EQ(count_fqf_isometries(sub, target), 2);
}

TEST(ShortVectors, ThCorollary) {
  const Lattice l = direct_sum(Lattice::from_gram(ZMatrix{{2, 1}, {1, 6}}), Lattice::rank1(22));
  const auto v2 = vectors_of_norm(l, 2);
  EXPECT_EQ(v2, (std::vector<std::vector<Integer>>{zvec({-1, 0, 0}), zvec({1, 0, 0})}));
  const Lattice perp = orthogonal_complement(l, {zvec({1, 0, 0})});
  EXPECT_EQ(perp.rank(), 2u);
  EXPECT_TRUE(isometric_definite(perp, power(Lattice::rank1(22), 2)));
  // complement basis (1,-2,0), (0,0,1)
  const Lattice explicit_basis = Lattice::from_gram(ZMatrix{{22, 0}, {0, 22}});
  EXPECT_EQ(l.norm(zvec({1, -2, 0})), 22);
  EXPECT_TRUE(isometric_definite(perp, explicit_basis));
  EXPECT_FALSE(isometric_definite(perp, Lattice::from_gram(ZMatrix{{2, 0}, {0, 242}})));
}

TEST(ShortVectors, E8Roots) {
  EXPECT_EQ(vectors_of_norm(Lattice::e8_negative(), -2).size(), 240u);
  // coordinate model: norm-2 vectors of D8 plus the half-integer coset
  long count = 0;
  std::vector<int> x(8);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == 8) {
      int sq = 0, sum = 0;
      for (int c : x) {
        sq += c * c;
        sum += c;
      }
      // integer points scaled by 2: norm 8 means norm 2; half-integer points are odd
      bool all_even = true, all_odd = true;
      for (int c : x) {
        all_even &= c % 2 == 0;
        all_odd &= c % 2 != 0;
      }
      if (sq == 8 && ((all_even && (sum / 2) % 2 == 0) || (all_odd && sum % 4 == 0)))
        ++count;
      return;
    }
    for (int v = -2; v <= 2; ++v) {
      x[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  EXPECT_EQ(count, 240);
}

TEST(ShortVectors, MatchesBoxSearch) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> d(-2, 2);
  int tested = 0;
  while (tested < 25) {
    ZMatrix g(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j)
        g(i, j) = g(j, i) = i == j ? 4 + d(rng) + 2 : d(rng);
    if (det(g) == 0)
      continue;
    const Lattice l = Lattice::from_gram(g);
    if (!l.is_positive_definite())
      continue;
    ++tested;
    const auto fp = short_vectors(l, 12);
    // |x_i|^2 <= bound * (G^-1)_ii bounds the box
    const QMatrix ginv = inverse(g.map<Rational>([](const Integer& z) { return Rational(z); }));
    long radius = 0;
    for (int i = 0; i < 3; ++i)
      radius = std::max(radius, floor_sqrt(Rational(12) * ginv(i, i)).get_si());
    const auto box = box_short_vectors(l, radius, 12);
    EXPECT_EQ(fp, box);
    for (const auto& v : fp) {
      std::vector<Integer> neg = v;
      for (auto& c : neg)
        c = -c;
      EXPECT_TRUE(std::binary_search(fp.begin(), fp.end(), neg));
      EXPECT_LE(abs(l.norm(v)), 12);
    }
  }
  EXPECT_THROW(short_vectors(Lattice::hyperbolic(), 4), std::invalid_argument);
}

TEST(Represents, Prop) {
  const Lattice l4 = Lattice::from_gram(ZMatrix::diagonal({-4, -4, -6, -8}));
  EXPECT_FALSE(represents(l4, -2));
  const auto census = norm_census(l4, 200);
  for (long v = -200; v <= -4; v += 2)
    EXPECT_TRUE(census.count(v)) << v;
  const Lattice l5 = Lattice::from_gram(ZMatrix::diagonal({-4, -4, -4, -6, -8}));
  const auto c5 = norm_census(l5, 100);
  for (long d = 16; d <= 400; d += 8) {
    const auto it = c5.find(-d / 4);
    EXPECT_TRUE(it != c5.end() && it->second.second > 0) << d;
  }
  // d = 8 (value -2) is not represented at all
  EXPECT_FALSE(primitively_represents(l5, -2));
  EXPECT_THROW(represents(Lattice::hyperbolic(), -2), std::invalid_argument);
}
