// Smith normal form of an integer matrix with unimodular transforms.

#ifndef KLEIN_SMITH_HPP_
#define KLEIN_SMITH_HPP_

#include "matrix.hpp"

#include <algorithm>
#include <vector>

namespace klein {

struct SmithForm {
  std::vector<Integer> diagonal;  // d_1 | d_2 | ..., length min(rows, cols)
  ZMatrix left;                   // U
  ZMatrix right;                  // V, with U * M * V = diag(d)
};

namespace impl {

inline void swap_rows(ZMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    std::swap(m(a, j), m(b, j));
}
inline void swap_cols(ZMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    std::swap(m(i, a), m(i, b));
}
// row a += f * row b
inline void add_row(ZMatrix& m, std::size_t a, std::size_t b, const Integer& f) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    m(a, j) += f * m(b, j);
}
inline void add_col(ZMatrix& m, std::size_t a, std::size_t b, const Integer& f) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    m(i, a) += f * m(i, b);
}

} // namespace impl

inline SmithForm smith_normal_form(const ZMatrix& input) {
  using namespace impl;
  ZMatrix a = input;
  const std::size_t R = a.rows(), C = a.cols();
  ZMatrix u = ZMatrix::identity(R), v = ZMatrix::identity(C);
  const std::size_t n = std::min(R, C);

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block goes to (t, t).
      std::size_t pi = R, pj = C;
      for (std::size_t i = t; i < R; ++i)
        for (std::size_t j = t; j < C; ++j)
          if (a(i, j) != 0 && (pi == R || abs(a(i, j)) < abs(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == R)
        break;  // trailing block is zero
      if (pi != t) {
        swap_rows(a, t, pi);
        swap_rows(u, t, pi);
      }
      if (pj != t) {
        swap_cols(a, t, pj);
        swap_cols(v, t, pj);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (a(i, t) == 0)
          continue;
        const Integer q = floor_div(a(i, t), a(t, t));
        add_row(a, i, t, -q);
        add_row(u, i, t, -q);
        if (a(i, t) != 0)
          clean = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (a(t, j) == 0)
          continue;
        const Integer q = floor_div(a(t, j), a(t, t));
        add_col(a, j, t, -q);
        add_col(v, j, t, -q);
        if (a(t, j) != 0)
          clean = false;
      }
      if (!clean)
        continue;
      // Divisibility: fold an offending row into row t and go again.
      std::size_t bad = R;
      for (std::size_t i = t + 1; i < R && bad == R; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == R)
        break;
      add_row(a, t, bad, Integer(1));
      add_row(u, t, bad, Integer(1));
    }
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < C; ++j)
        a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < R; ++j)
        u(t, j) = -u(t, j);
    }
  }

  SmithForm out;
  for (std::size_t t = 0; t < n; ++t)
    out.diagonal.push_back(a(t, t));
  out.left = std::move(u);
  out.right = std::move(v);
  return out;
}

} // namespace klein

#endif
