// Lagrangian subspaces of wedge^3 V6, the Klein Lagrangian, EPW sextics,
// strata, Gushel-Mukai dimensions, line sections and fixed loci.

#ifndef KLEIN_EPW_HPP_
#define KLEIN_EPW_HPP_

#include "multipoly.hpp"
#include "upoly.hpp"
#include "rep.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace klein {

using Lagrangian = QMatrix;   // 10 x 20, rows are trivectors
using Sextic = MultiPoly<Rational>;

namespace impl {

// Triples of V6 containing 0, in the order of pairs5(): e0 ^ e_pq.
inline int e0_pair_triple(std::size_t pair) {
  const auto& p = pairs5()[pair];
  return subset_index(6, {0, p[0], p[1]});
}
// Triples of V_xi (no 0), in the order of triples5().
inline int xi_triple(std::size_t t) {
  return subset_index(6, triples5()[t]);
}

} // namespace impl

// v : wedge^2 V_xi -> wedge^3 V_xi; column j is the image of pairs5()[j] in
// the basis triples5().
inline QMatrix build_v() {
  struct Entry {
    int p, q, a, b, c, sign;
  };
  const Entry table[10] = {
      {1, 2, 2, 4, 5, 1},  {2, 3, 1, 3, 5, 1},  {3, 4, 1, 2, 4, 1},  {4, 5, 2, 3, 5, 1},
      {1, 5, 1, 3, 4, -1}, {1, 3, 3, 4, 5, -1}, {2, 4, 1, 4, 5, -1}, {3, 5, 1, 2, 5, -1},
      {1, 4, 1, 2, 3, 1},  {2, 5, 2, 3, 4, 1}};
  QMatrix v(10, 10);
  for (const auto& e : table) {
    const int col = subset_index(5, {e.p - 1, e.q - 1});
    const int row = subset_index(5, {e.a - 1, e.b - 1, e.c - 1});
    v(row, col) = e.sign;
  }
  return v;
}

// Graph {e0 ^ x + phi(x)} of phi : wedge^2 V_xi -> wedge^3 V_xi.
template <class T>
Matrix<T> graph_lagrangian(const Matrix<T>& phi) {
  Matrix<T> a(10, 20);
  for (std::size_t j = 0; j < 10; ++j) {
    a(j, impl::e0_pair_triple(j)) = T(1);
    for (std::size_t t = 0; t < 10; ++t)
      a(j, impl::xi_triple(t)) = phi(t, j);
  }
  return a;
}

inline Lagrangian build_A() { return graph_lagrangian(build_v()); }

// Coefficient of e12345 in x ^ y for x in wedge^2 V_xi (pairs5 basis) and y in
// wedge^3 V_xi (triples5 basis).  The 10 x 10 matrix of this pairing.
inline QMatrix wedge23_pairing_matrix() {
  QMatrix p(10, 10);
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j)
      p(i, j) = wedge_sign(pairs5()[i], triples5()[j]);
  return p;
}

// v(x) ^ y == x ^ v(y) for all basis pairs.
inline bool v_is_symmetric(const QMatrix& v) {
  const QMatrix p = wedge23_pairing_matrix();
  // B(x, y) = x ^ v(y) = x^T P v y; symmetry of P v.
  const QMatrix b = p * v;
  return b == b.transpose();
}

template <class T>
bool is_lagrangian(const Matrix<T>& a) {
  if (a.rows() != 10 || a.cols() != 20 || rank(a) != 10)
    return false;
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = i + 1; j < 10; ++j)
      if (!is_zero(wedge_pairing(a.row(i), a.row(j))))
        return false;
  return true;
}

// Sign of wedge^3 D on e_{ijk}, for D: e0 -> -e0^v, e_j -> e_j^v.
inline int duality_sign(std::size_t triple) {
  return triples6()[triple][0] == 0 ? -1 : 1;
}

// True iff wedge^3 D maps the row span of A onto the annihilator of A.
template <class T>
bool self_duality_check(const Matrix<T>& a) {
  if (rank(a) != 10)
    return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.rows(); ++j) {
      T s = T(0);
      for (std::size_t k = 0; k < 20; ++k)
        if (!is_zero(a(i, k)) && !is_zero(a(j, k)))
          s = s + T(duality_sign(k)) * a(i, k) * a(j, k);
      if (!is_zero(s))
        return false;
    }
  return true;
}

// x ^ wedge^2 V6 as a 15 x 20 matrix of rows (rank 10 for x != 0).
template <class T>
Matrix<T> x_wedge_space(const std::vector<T>& x) {
  bool nonzero = false;
  for (const T& c : x)
    nonzero |= !is_zero(c);
  if (!nonzero)
    throw std::invalid_argument("zero vector has no stratum");
  return wedge_with_vector(x);
}

// l(x) = dim(A n (x ^ wedge^2 V6)) = 20 - rank[A ; x ^ wedge^2 V6].
template <class T>
int stratum(const Matrix<T>& a, const std::vector<T>& x) {
  const Matrix<T> w = x_wedge_space(x);
  return 20 - static_cast<int>(rank(a.vconcat(w)));
}

inline int stratum(const Lagrangian& a, const std::vector<Cyclo>& x) {
  return stratum(a.map<Cyclo>([](const Rational& r) { return Cyclo(r); }), x);
}

// n = 5 - dim(A n wedge^3 V5) for V5 = ker(covector).
template <class T>
int gm_dimension(const Matrix<T>& a, const std::vector<T>& covector) {
  if (covector.size() != 6)
    throw std::invalid_argument("covector on V6 expected");
  Matrix<T> u(1, 6);
  bool nonzero = false;
  for (int i = 0; i < 6; ++i) {
    u(0, i) = covector[i];
    nonzero |= !is_zero(covector[i]);
  }
  if (!nonzero)
    throw std::invalid_argument("zero covector");
  const Matrix<T> basis = kernel_basis(u);  // 6 x 5
  // wedge^3 V5: wedges of triples of basis columns.
  Matrix<T> w(10, 20);
  const auto trip = subsets(5, 3);
  for (std::size_t r = 0; r < trip.size(); ++r) {
    const auto v0 = basis.col(trip[r][0]), v1 = basis.col(trip[r][1]), v2 = basis.col(trip[r][2]);
    const auto& t6 = triples6();
    for (std::size_t k = 0; k < t6.size(); ++k) {
      Matrix<T> sub(3, 3);
      for (int c = 0; c < 3; ++c) {
        sub(c, 0) = v0[t6[k][c]];
        sub(c, 1) = v1[t6[k][c]];
        sub(c, 2) = v2[t6[k][c]];
      }
      w(r, k) = det(sub);
    }
  }
  const int meet = 20 - static_cast<int>(rank(a.vconcat(w)));
  return 5 - meet;
}

// phi with A = graph(phi); fails when A meets wedge^3 V_xi.
inline QMatrix chart_map(const Lagrangian& a) {
  QMatrix p(10, 10), q(10, 10);
  for (std::size_t r = 0; r < 10; ++r)
    for (std::size_t j = 0; j < 10; ++j) {
      p(r, j) = a(r, impl::e0_pair_triple(j));
      q(r, j) = a(r, impl::xi_triple(j));
    }
  if (rank(p) < 10)
    fail("chart invalid: A is not transverse to wedge^3 V_xi");
  return (inverse(p) * q).transpose();
}

// M(x) on the chart x0 = 1: column for e_pq holds the wedge^3 V_xi
// coordinates of x ^ e_pq modulo A, i.e. -phi(e_pq) + sum_i x_i e_i ^ e_pq.
// Variables are x1..x5 (indices 0..4).
inline Matrix<Sextic> chart_matrix(const Lagrangian& a) {
  const QMatrix phi = chart_map(a);
  Matrix<Sextic> m(10, 10, Sextic(5));
  for (std::size_t j = 0; j < 10; ++j) {
    for (std::size_t t = 0; t < 10; ++t)
      if (phi(t, j) != 0)
        m(t, j) = Sextic::constant(5, -phi(t, j));
    for (int i = 1; i <= 5; ++i) {
      std::vector<int> merged;
      const int s = wedge_sign({i}, pairs5()[j], &merged);
      if (s == 0)
        continue;
      std::vector<int> shifted = merged;
      for (int& x : shifted)
        --x;
      const int t = subset_index(5, shifted);
      m(t, j) = m(t, j) + Sextic::variable(5, i - 1).scaled(Rational(s));
    }
  }
  return m;
}

// Same matrix evaluated at an affine point (x1..x5).
inline QMatrix chart_matrix_at(const QMatrix& phi, const std::vector<Rational>& x) {
  QMatrix m(10, 10);
  for (std::size_t j = 0; j < 10; ++j) {
    for (std::size_t t = 0; t < 10; ++t)
      m(t, j) = -phi(t, j);
    for (int i = 1; i <= 5; ++i) {
      std::vector<int> merged;
      const int s = wedge_sign({i}, pairs5()[j], &merged);
      if (s == 0)
        continue;
      for (int& v : merged)
        --v;
      m(subset_index(5, merged), j) += Rational(s) * x[i - 1];
    }
  }
  return m;
}

namespace impl {

// Affine polynomial in x1..x5 of degree <= 6 -> homogeneous sextic in x0..x5,
// scaled so the x0^6 coefficient is 1.
inline Sextic homogenize_chart(const Sextic& affine) {
  const Rational c0 = affine.coefficient(Monomial(5, 0));
  if (c0 == 0)
    fail("affine determinant vanishes at the chart origin");
  Sextic f(6);
  for (const auto& [m, c] : affine.terms()) {
    const unsigned d = total_degree(m);
    if (d > 6)
      fail("chart determinant has degree above 6");
    Monomial h(6);
    h[0] = static_cast<std::uint16_t>(6 - d);
    for (int i = 0; i < 5; ++i)
      h[i + 1] = m[i];
    f.add_term(h, c / c0);
  }
  return f;
}

// Bareiss on a polynomial matrix, choosing the pivot with the fewest terms.
inline Sextic polynomial_det(Matrix<Sextic> m) {
  const std::size_t n = m.rows();
  Sextic prev = Sextic::constant(m(0, 0).nvars(), Rational(1));
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = n;
    for (std::size_t i = k; i < n; ++i)
      if (!m(i, k).is_zero() && (best == n || m(i, k).size() < m(best, k).size()))
        best = i;
    if (best == n)
      return Sextic(m(0, 0).nvars());
    if (best != k) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(m(best, j), m(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)).exact_divide(prev);
      m(i, k) = Sextic(m(0, 0).nvars());
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

} // namespace impl

// Route 1: fraction-free elimination over Q[x1..x5].
inline Sextic sextic_by_bareiss(const Lagrangian& a) {
  return impl::homogenize_chart(impl::polynomial_det(chart_matrix(a)));
}

// Route 2: exact values at the 462 points {alpha in N^5 : |alpha| <= 6},
// forward differences give the coefficients in the basis
// prod_i binom(x_i, alpha_i) (a triangular solve), then expand to monomials.
inline Sextic sextic_by_interpolation(const Lagrangian& a) {
  const QMatrix phi = chart_map(a);
  constexpr int kDeg = 6, kBase = kDeg + 1;
  auto index = [](const std::array<int, 5>& p) {
    int r = 0;
    for (int i = 4; i >= 0; --i)
      r = r * kBase + p[i];
    return r;
  };
  std::vector<std::array<int, 5>> pts;
  std::array<int, 5> cur{};
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == 5) {
      pts.push_back(cur);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      cur[var] = k;
      self(self, var + 1, left - k);
    }
    cur[var] = 0;
  };
  rec(rec, 0, kDeg);
  std::vector<Rational> g(static_cast<std::size_t>(kBase * kBase * kBase * kBase * kBase));
  for (const auto& p : pts) {
    std::vector<Rational> x(p.begin(), p.end());
    g[index(p)] = det(chart_matrix_at(phi, x));
  }
  // Newton table along each variable: after pass k, entries with p[var] >= k
  // hold k-th differences.
  for (int var = 0; var < 5; ++var)
    for (int k = 1; k <= kDeg; ++k)
      for (int top = kDeg; top >= k; --top)
        for (const auto& p : pts) {
          if (p[var] != top)
            continue;
          auto q = p;
          --q[var];
          g[index(p)] -= g[index(q)];
        }
  // binom(x_i, k) as polynomials.
  std::vector<std::vector<Sextic>> binom(5);
  for (int i = 0; i < 5; ++i) {
    binom[i].push_back(Sextic::constant(5, Rational(1)));
    for (int k = 1; k <= kDeg; ++k) {
      Sextic step = Sextic::variable(5, i) - Sextic::constant(5, Rational(k - 1));
      binom[i].push_back((binom[i].back() * step).scaled(make_rational(1, k)));
    }
  }
  Sextic affine(5);
  for (const auto& p : pts) {
    const Rational& c = g[index(p)];
    if (c == 0)
      continue;
    Sextic t = Sextic::constant(5, c);
    for (int i = 0; i < 5; ++i)
      if (p[i] > 0)
        t *= binom[i][p[i]];
    affine += t;
  }
  return impl::homogenize_chart(affine);
}

// First monomial where two polynomials differ, for diagnostics.
template <class C>
std::optional<Monomial> first_difference(const MultiPoly<C>& a, const MultiPoly<C>& b) {
  const MultiPoly<C> d = a - b;
  if (d.is_zero())
    return std::nullopt;
  return d.terms().begin()->first;
}

template <class C>
MultiPoly<Cyclo> to_cyclo(const MultiPoly<C>& f) {
  return f.template map_coefficients<Cyclo>([](const C& c) { return Cyclo(c); });
}

// f(M x) as a polynomial, M square over Q(zeta).
template <class C>
MultiPoly<Cyclo> linear_substitution(const MultiPoly<C>& f, const CMatrix& m) {
  const std::size_t n = f.nvars();
  if (m.rows() != n || m.cols() != n)
    throw std::invalid_argument("substitution matrix size mismatch");
  std::vector<MultiPoly<Cyclo>> images;
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly<Cyclo> row(n);
    for (std::size_t j = 0; j < n; ++j)
      if (!m(i, j).is_zero())
        row += MultiPoly<Cyclo>::variable(n, j).scaled(m(i, j));
    images.push_back(row);
  }
  return to_cyclo(f).substitute(images);
}

template <class C>
bool is_invariant_polynomial(const MultiPoly<C>& f, const CMatrix& m) {
  return linear_substitution(f, m) == to_cyclo(f);
}

// g(s, t) = f(s p + t q); rejects dependent p, q.
template <class T, class C>
MultiPoly<T> restrict_to_line(const MultiPoly<C>& f, const std::vector<T>& p, const std::vector<T>& q) {
  const std::size_t n = f.nvars();
  if (p.size() != n || q.size() != n)
    throw std::invalid_argument("line points have the wrong arity");
  Matrix<T> pq(n, 2);
  for (std::size_t i = 0; i < n; ++i) {
    pq(i, 0) = p[i];
    pq(i, 1) = q[i];
  }
  if (rank(pq) < 2)
    throw std::invalid_argument("points do not span a line");
  std::vector<MultiPoly<T>> images;
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly<T> l(2);
    if (!is_zero(p[i]))
      l += MultiPoly<T>::variable(2, 0).scaled(p[i]);
    if (!is_zero(q[i]))
      l += MultiPoly<T>::variable(2, 1).scaled(q[i]);
    images.push_back(l);
  }
  return f.template map_coefficients<T>([](const C& c) { return T(c); }).substitute(images);
}

// Roots of a binary form of degree d: squarefree factors of g(u, 1), u = s/t,
// plus the root t = 0 with multiplicity d - deg g(u, 1).
template <class T>
struct BinaryFormRoots {
  bool identically_zero = false;
  std::vector<SquarefreeFactor<T>> factors;
  int infinity_multiplicity = 0;
  int distinct_roots = 0;

  std::vector<int> multiplicities() const {
    std::vector<int> out;
    for (const auto& f : factors)
      for (int k = 0; k < f.factor.degree(); ++k)
        out.push_back(f.multiplicity);
    if (infinity_multiplicity > 0)
      out.push_back(infinity_multiplicity);
    std::sort(out.rbegin(), out.rend());
    return out;
  }
};

template <class T>
UPoly<T> dehomogenize(const MultiPoly<T>& g) {
  std::vector<T> c;
  for (const auto& [m, v] : g.terms()) {
    if (c.size() <= m[0])
      c.resize(m[0] + 1, T(0));
    c[m[0]] = c[m[0]] + v;
  }
  return UPoly<T>(std::move(c));
}

template <class T>
BinaryFormRoots<T> analyze_binary_form(const MultiPoly<T>& g) {
  BinaryFormRoots<T> r;
  if (g.is_zero()) {
    r.identically_zero = true;
    return r;
  }
  if (g.nvars() != 2 || !g.is_homogeneous())
    throw std::invalid_argument("binary form expected");
  const int d = g.total_degree();
  const UPoly<T> u = dehomogenize(g);
  r.factors = squarefree_decomposition(u);
  r.infinity_multiplicity = d - u.degree();
  for (const auto& f : r.factors)
    r.distinct_roots += f.factor.degree();
  if (r.infinity_multiplicity > 0)
    ++r.distinct_roots;
  return r;
}

// Projective representative with first nonzero coordinate 1.
template <class T>
std::vector<T> normalize_point(std::vector<T> x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!is_zero(x[i])) {
      const T inv = T(1) / x[i];
      for (std::size_t j = i; j < x.size(); ++j)
        x[j] = x[j] * inv;
      return x;
    }
  throw std::invalid_argument("zero vector is not a projective point");
}

// Eigenspaces of g-hat = 1 + g on V6: the fixed locus of g in P(V6).
struct Eigenspace {
  int order = 1;     // eigenvalue is zeta_order^exponent
  int exponent = 0;
  Cyclo eigenvalue;
  CMatrix basis;     // 6 x dim
  int dim() const { return static_cast<int>(basis.cols()); }
};

inline std::vector<Eigenspace> fixed_locus(const CMatrix& g) {
  const CMatrix gh = g.rows() == 5 ? extend_to_v6(g) : g;
  const int m = element_order(gh);
  std::vector<Eigenspace> out;
  for (int k = 0; k < m; ++k) {
    const Cyclo z = Cyclo::zeta(m, k);
    CMatrix shifted = gh;
    for (int i = 0; i < 6; ++i)
      shifted(i, i) -= z;
    CMatrix ker = kernel_basis(shifted);
    if (ker.cols() == 0)
      continue;
    Eigenspace e;
    e.order = m;
    e.exponent = k;
    e.eigenvalue = z;
    e.basis = ker;
    out.push_back(std::move(e));
  }
  return out;
}

// Fixed points of g on Y_A = V(f): points from 1-dimensional eigenspaces that
// lie on the sextic, and the roots of f on 2-dimensional eigenspaces.
struct FixedPointCount {
  int isolated_on_sextic = 0;   // from 1-dimensional eigenspaces
  int on_fixed_lines = 0;       // distinct roots of f on 2-dimensional ones
  int lines_in_sextic = 0;      // 2-dimensional eigenspaces contained in Y_A
  int higher_dimensional = 0;   // eigenspaces of dimension >= 3
  int total() const { return isolated_on_sextic + on_fixed_lines; }
};

inline FixedPointCount count_fixed_points(const Sextic& f, const CMatrix& g) {
  FixedPointCount c;
  for (const auto& e : fixed_locus(g)) {
    if (e.dim() == 1) {
      if (f.evaluate(e.basis.col(0)).is_zero())
        ++c.isolated_on_sextic;
    } else if (e.dim() == 2) {
      const auto r = analyze_binary_form(restrict_to_line(f, e.basis.col(0), e.basis.col(1)));
      if (r.identically_zero)
        ++c.lines_in_sextic;
      else
        c.on_fixed_lines += r.distinct_roots;
    } else {
      ++c.higher_dimensional;
    }
  }
  return c;
}

// Basis of {X : dst(g) X = X src(g) for all g}.  A leading pair of diagonal
// matrices restricts the support of X before the linear solve.
inline std::vector<CMatrix> equivariant_maps(const std::vector<CMatrix>& src, const std::vector<CMatrix>& dst) {
  if (src.empty() || src.size() != dst.size())
    throw std::invalid_argument("matching generator lists expected");
  const std::size_t n = src.front().rows(), m = dst.front().rows();
  auto diagonal = [](const CMatrix& x) {
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j)
        if (i != j && !x(i, j).is_zero())
          return false;
    return true;
  };
  std::vector<std::pair<std::size_t, std::size_t>> support;
  std::size_t first = 0;
  if (diagonal(src[0]) && diagonal(dst[0])) {
    first = 1;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (dst[0](i, i) == src[0](j, j))
          support.push_back({i, j});
  } else {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        support.push_back({i, j});
  }
  const std::size_t u = support.size();
  std::vector<std::vector<Cyclo>> rows;
  for (std::size_t gi = first; gi < src.size(); ++gi)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        // (dst X - X src)_{ij} = sum_k dst_ik X_kj - sum_k X_ik src_kj
        std::vector<Cyclo> eq(u, Cyclo(0));
        bool any = false;
        for (std::size_t s = 0; s < u; ++s) {
          const auto [k, l] = support[s];
          Cyclo c(0);
          if (l == j)
            c += dst[gi](i, k);
          if (k == i)
            c -= src[gi](l, j);
          if (!c.is_zero()) {
            eq[s] = c;
            any = true;
          }
        }
        if (any)
          rows.push_back(std::move(eq));
      }
  CMatrix sys(rows.size(), u);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t s = 0; s < u; ++s)
      sys(r, s) = rows[r][s];
  const CMatrix ker = rows.empty() ? CMatrix::identity(u) : kernel_basis(sys);
  std::vector<CMatrix> out;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    CMatrix x(m, n);
    for (std::size_t s = 0; s < u; ++s)
      x(support[s].first, support[s].second) = ker(s, c);
    out.push_back(x);
  }
  return out;
}

// wedge^2 and wedge^3 of g on V_xi in the pairs5 / triples5 bases.
inline CMatrix wedge2_xi(const CMatrix& g) { return compound(g, 2); }
inline CMatrix wedge3_xi(const CMatrix& g) { return compound(g, 3); }

// Equivariant maps wedge^2 V -> wedge^3 V for the representation generated by
// gens, normalized so the map sends e12 to +e245 when that is possible.
inline std::optional<CMatrix> normalized_equivariant_v(const std::vector<CMatrix>& gens) {
  std::vector<CMatrix> src, dst;
  for (const auto& g : gens) {
    src.push_back(wedge2_xi(g));
    dst.push_back(wedge3_xi(g));
  }
  const auto maps = equivariant_maps(src, dst);
  if (maps.size() != 1)
    return std::nullopt;
  const int row = subset_index(5, {1, 3, 4});
  const Cyclo lead = maps[0](row, 0);
  if (lead.is_zero())
    return std::nullopt;
  return maps[0].scaled(lead.inverse());
}

// Same row span.
template <class T>
bool same_subspace(const Matrix<T>& a, const Matrix<T>& b) {
  const std::size_t ra = rank(a);
  return ra == rank(b) && rank(a.vconcat(b)) == ra;
}

} // namespace klein

#endif
