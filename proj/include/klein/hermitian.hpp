// Hermitian matrices over Z[lambda], lambda = (-1 + sqrt(-11)) / 2: the form
// H' on Z[lambda]^5, the induced form on wedge^2, positivity and the
// polarization invariants read off the characteristic polynomial.

#ifndef KLEIN_HERMITIAN_HPP_
#define KLEIN_HERMITIAN_HPP_

#include "exterior.hpp"
#include "matrix.hpp"
#include "quadint.hpp"

#include <optional>
#include <string>
#include <vector>

namespace klein {

using HermMatrix = Matrix<QuadInt>;

// Gram matrix of H' in the canonical basis; lambda-bar = -1 - lambda.
inline HermMatrix build_Hprime() {
  const QuadInt l = QuadInt::lambda();
  const QuadInt lb = l.conj();
  const QuadInt one(1);
  return HermMatrix{{3, one - lb, -l, 1, -lb},
                    {one - l, 3, -1, -l, 1},
                    {-lb, -1, 3, l, QuadInt(-1) + l},
                    {1, -lb, lb, 3, one - lb},
                    {-l, 1, QuadInt(-1) + lb, one - l, 3}};
}

inline bool is_hermitian(const HermMatrix& m) {
  return m.is_square() && m == m.conj_transpose();
}

inline Integer herm_det(const HermMatrix& m) {
  if (!is_hermitian(m))
    throw std::invalid_argument("matrix is not Hermitian");
  const QuadInt d = det(m);
  if (d.b() != 0)
    fail("determinant of a Hermitian matrix is not rational");
  return d.a();
}

// Leading principal minors; each is a rational integer for Hermitian input.
inline std::vector<Integer> hermitian_leading_minors(const HermMatrix& m) {
  std::vector<Integer> out;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    const QuadInt d = det(m.block(0, 0, k, k));
    if (d.b() != 0)
      fail("leading minor is not rational");
    out.push_back(d.a());
  }
  return out;
}

inline bool is_positive_definite(const HermMatrix& m) {
  if (!is_hermitian(m))
    return false;
  for (const auto& d : hermitian_leading_minors(m))
    if (d <= 0)
      return false;
  return true;
}

// H(e_ij, e_kl) = H'(e_i, e_k) H'(e_j, e_l) - H'(e_i, e_l) H'(e_j, e_k) in the
// basis e12, e13, ..., e45.
inline HermMatrix induced_wedge2(const HermMatrix& h) {
  const int n = static_cast<int>(h.rows());
  const auto pairs = subsets(n, 2);
  HermMatrix out(pairs.size(), pairs.size());
  for (std::size_t r = 0; r < pairs.size(); ++r)
    for (std::size_t c = 0; c < pairs.size(); ++c) {
      const int i = pairs[r][0], j = pairs[r][1], k = pairs[c][0], l = pairs[c][1];
      out(r, c) = h(i, k) * h(j, l) - h(i, l) * h(j, k);
    }
  return out;
}

// P_j with det(T - M) = sum_j (-1)^(n-j) P_j T^j, j = 0..n.  P_n = 1 and
// P_0 = det M; for a polarization P_j = theta0^j theta^(n-j) / (j! (n-j)!).
inline std::vector<Integer> polarization_invariants(const HermMatrix& m) {
  if (!is_hermitian(m))
    throw std::invalid_argument("matrix is not Hermitian");
  const auto c = char_poly_coeffs(m);
  const std::size_t n = m.rows();
  std::vector<Integer> out;
  for (std::size_t j = 0; j <= n; ++j) {
    if (c[j].b() != 0)
      fail("characteristic polynomial of a Hermitian matrix is not rational");
    out.push_back((n - j) % 2 == 0 ? c[j].a() : Integer(-c[j].a()));
  }
  return out;
}

struct EntryMismatch {
  std::size_t row = 0, col = 0;
  QuadInt expected, actual;
  std::string str() const {
    return "entry (" + std::to_string(row + 1) + ", " + std::to_string(col + 1) + "): expected " + expected.str() +
           ", computed " + actual.str();
  }
};

// First differing entry in row-major order.
inline std::optional<EntryMismatch> first_mismatch(const HermMatrix& expected, const HermMatrix& actual) {
  if (expected.rows() != actual.rows() || expected.cols() != actual.cols())
    throw std::invalid_argument("matrix sizes differ");
  for (std::size_t i = 0; i < expected.rows(); ++i)
    for (std::size_t j = 0; j < expected.cols(); ++j)
      if (!(expected(i, j) == actual(i, j)))
        return EntryMismatch{i, j, expected(i, j), actual(i, j)};
  return std::nullopt;
}

} // namespace klein

#endif
