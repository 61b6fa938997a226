// Exterior powers of a 6-dimensional space with basis e0..e5 (and of the
// 5-dimensional span of e1..e5): index tables, wedge products of basis
// multivectors, compound matrices.

#ifndef KLEIN_EXTERIOR_HPP_
#define KLEIN_EXTERIOR_HPP_

#include "matrix.hpp"

#include <array>
#include <string>
#include <vector>

namespace klein {

// Sorted index subsets of {0..n-1} of size k, in lexicographic order.
inline std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline long binomial(int n, int k) {
  if (k < 0 || k > n)
    return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

// Position of a sorted subset in subsets(n, k); -1 if not strictly increasing.
inline int subset_index(int n, const std::vector<int>& s) {
  const int k = static_cast<int>(s.size());
  long r = 0;
  int prev = -1;
  for (int t = 0; t < k; ++t) {
    if (s[t] <= prev || s[t] >= n)
      return -1;
    for (int v = prev + 1; v < s[t]; ++v)
      r += binomial(n - 1 - v, k - 1 - t);
    prev = s[t];
  }
  return static_cast<int>(r);
}

// e_I ^ e_J = sign * e_{I u J}; sign 0 when I and J meet.
inline int wedge_sign(const std::vector<int>& a, const std::vector<int>& b, std::vector<int>* merged = nullptr) {
  std::vector<int> all = a;
  all.insert(all.end(), b.begin(), b.end());
  int sign = 1;
  // Bubble sort counting transpositions.
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j + 1 < all.size() - i; ++j) {
      if (all[j] == all[j + 1])
        return 0;
      if (all[j] > all[j + 1]) {
        std::swap(all[j], all[j + 1]);
        sign = -sign;
      }
    }
  for (std::size_t i = 0; i + 1 < all.size(); ++i)
    if (all[i] == all[i + 1])
      return 0;
  if (merged)
    *merged = all;
  return sign;
}

// Label like "e012" for a subset.
inline std::string basis_label(const std::vector<int>& s) {
  std::string out = "e";
  for (int i : s)
    out += std::to_string(i);
  return out;
}

// k-th compound: entry (I, J) is the minor of m on rows I, columns J.
template <class T>
Matrix<T> compound(const Matrix<T>& m, int k) {
  if (!m.is_square())
    throw std::invalid_argument("compound of non-square matrix");
  const int n = static_cast<int>(m.rows());
  const auto idx = subsets(n, k);
  Matrix<T> c(idx.size(), idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) {
      if (k == 1) {
        c(a, b) = m(idx[a][0], idx[b][0]);
        continue;
      }
      if (k == 2) {
        const int i = idx[a][0], j = idx[a][1], p = idx[b][0], q = idx[b][1];
        c(a, b) = m(i, p) * m(j, q) - m(i, q) * m(j, p);
        continue;
      }
      Matrix<T> sub(k, k);
      for (int r = 0; r < k; ++r)
        for (int s = 0; s < k; ++s)
          sub(r, s) = m(idx[a][r], idx[b][s]);
      c(a, b) = det(sub);
    }
  return c;
}

// Symmetric square on the basis e_i e_j (i <= j) in lexicographic order.
template <class T>
Matrix<T> symmetric_square(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  std::vector<std::array<std::size_t, 2>> idx;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      idx.push_back({i, j});
  Matrix<T> s(idx.size(), idx.size());
  // g(e_p e_q) = sum_{i<=j} coefficient of e_i e_j in (g e_p)(g e_q).
  for (std::size_t b = 0; b < idx.size(); ++b) {
    const std::size_t p = idx[b][0], q = idx[b][1];
    for (std::size_t a = 0; a < idx.size(); ++a) {
      const std::size_t i = idx[a][0], j = idx[a][1];
      T v = m(i, p) * m(j, q);
      if (i != j)
        v = v + m(j, p) * m(i, q);
      s(a, b) = v;
    }
  }
  return s;
}

template <class T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j)))
        continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t s = 0; s < b.cols(); ++s)
          k(i * b.rows() + r, j * b.cols() + s) = a(i, j) * b(r, s);
    }
  return k;
}

// Trace of the k-th compound without forming it: sum of principal k-minors.
template <class T>
T compound_trace(const Matrix<T>& m, int k) {
  const int n = static_cast<int>(m.rows());
  T t = T(0);
  for (const auto& s : subsets(n, k)) {
    if (k == 1) {
      t = t + m(s[0], s[0]);
    } else if (k == 2) {
      t = t + m(s[0], s[0]) * m(s[1], s[1]) - m(s[0], s[1]) * m(s[1], s[0]);
    } else {
      Matrix<T> sub(k, k);
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c)
          sub(r, c) = m(s[r], s[c]);
      t = t + det(sub);
    }
  }
  return t;
}

// Trivectors of V6: 20 coordinates on e_{ijk}, i<j<k, lexicographic.
template <class T>
using Trivector = std::vector<T>;

inline const std::vector<std::vector<int>>& triples6() {
  static const auto t = subsets(6, 3);
  return t;
}
inline const std::vector<std::vector<int>>& pairs6() {
  static const auto p = subsets(6, 2);
  return p;
}
inline const std::vector<std::vector<int>>& pairs5() {
  // pairs of {1..5}, the basis (e12, e13, ..., e45)
  static const auto p = [] {
    auto s = subsets(5, 2);
    for (auto& v : s)
      for (int& i : v)
        ++i;
    return s;
  }();
  return p;
}
inline const std::vector<std::vector<int>>& triples5() {
  static const auto p = [] {
    auto s = subsets(5, 3);
    for (auto& v : s)
      for (int& i : v)
        ++i;
    return s;
  }();
  return p;
}

inline int triple_index(int i, int j, int k) {
  std::vector<int> sorted;
  if (wedge_sign({i}, {j, k}, &sorted) == 0)
    throw std::invalid_argument("repeated index in triple");
  return subset_index(6, sorted);
}

// e_i ^ e_j ^ e_k for any distinct i, j, k.
template <class T>
Trivector<T> basis_trivector(int i, int j, int k) {
  std::vector<int> sorted;
  const int sign = wedge_sign({i}, {j, k}, &sorted);
  if (sign == 0)
    throw std::invalid_argument("repeated index in triple");
  Trivector<T> t(20, T(0));
  t[subset_index(6, sorted)] = T(sign);
  return t;
}

// Coefficient of e012345 in t1 ^ t2.
template <class T>
T wedge_pairing(const Trivector<T>& a, const Trivector<T>& b) {
  const auto& tr = triples6();
  T s = T(0);
  for (std::size_t i = 0; i < tr.size(); ++i) {
    if (is_zero(a[i]))
      continue;
    // complement of tr[i]
    std::vector<int> comp;
    for (int x = 0; x < 6; ++x)
      if (x != tr[i][0] && x != tr[i][1] && x != tr[i][2])
        comp.push_back(x);
    const int j = subset_index(6, comp);
    if (is_zero(b[j]))
      continue;
    const int sign = wedge_sign(tr[i], comp);
    s = s + T(sign) * a[i] * b[j];
  }
  return s;
}

// The 15 trivectors x ^ e_{pq} as rows of a 15 x 20 matrix.
template <class T>
Matrix<T> wedge_with_vector(const std::vector<T>& x) {
  if (x.size() != 6)
    throw std::invalid_argument("vector in V6 expected");
  const auto& pr = pairs6();
  Matrix<T> m(pr.size(), 20);
  for (std::size_t r = 0; r < pr.size(); ++r)
    for (int i = 0; i < 6; ++i) {
      if (is_zero(x[i]))
        continue;
      std::vector<int> merged;
      const int sign = wedge_sign({i}, pr[r], &merged);
      if (sign == 0)
        continue;
      const int c = subset_index(6, merged);
      m(r, c) = m(r, c) + T(sign) * x[i];
    }
  return m;
}

} // namespace klein

#endif
