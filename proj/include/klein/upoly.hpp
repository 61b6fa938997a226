// Dense univariate polynomials over an exact field; gcd and squarefree
// decomposition for characteristic 0.

#ifndef KLEIN_UPOLY_HPP_
#define KLEIN_UPOLY_HPP_

#include "scalar.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace klein {

template <class F>
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly monomial(int deg, const F& c) {
    std::vector<F> v(deg + 1, F(0));
    v[deg] = c;
    return UPoly(std::move(v));
  }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(int k) const { return k >= 0 && k <= degree() ? c_[k] : F(0); }
  const F& leading() const {
    if (c_.empty())
      throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<F> v(std::max(a.c_.size(), b.c_.size()), F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      v[i] = v[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i)
      v[i] = v[i] + b.c_[i];
    return UPoly(std::move(v));
  }
  UPoly operator-() const {
    std::vector<F> v = c_;
    for (F& x : v)
      x = -x;
    return UPoly(std::move(v));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero())
      return {};
    std::vector<F> v(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    return UPoly(std::move(v));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  UPoly scaled(const F& s) const {
    std::vector<F> v = c_;
    for (F& x : v)
      x = x * s;
    return UPoly(std::move(v));
  }

  UPoly monic() const {
    if (is_zero())
      return {};
    return scaled(F(1) / leading());
  }

  UPoly derivative() const {
    if (c_.size() <= 1)
      return {};
    std::vector<F> v(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
      v[k - 1] = c_[k] * F(static_cast<long>(k));
    return UPoly(std::move(v));
  }

  // Euclidean division: *this = q * d + r with deg r < deg d.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.is_zero())
      throw std::domain_error("polynomial division by zero");
    std::vector<F> r = c_;
    const int dd = d.degree();
    if (degree() < dd)
      return {UPoly(), *this};
    std::vector<F> q(degree() - dd + 1, F(0));
    const F inv = F(1) / d.leading();
    for (int k = degree(); k >= dd; --k) {
      if (is_zero(r[k]))
        continue;
      const F f = r[k] * inv;
      q[k - dd] = f;
      for (int j = 0; j <= dd; ++j)
        r[k - dd + j] = r[k - dd + j] - f * d.c_[j];
    }
    r.resize(dd);
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }

  F evaluate(const F& x) const {
    F acc = F(0);
    for (std::size_t k = c_.size(); k-- > 0;)
      acc = acc * x + c_[k];
    return acc;
  }

  std::string str(const char* var = "u") const {
    if (c_.empty())
      return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (is_zero(c_[k]))
        continue;
      std::string c = scalar_str(c_[k]);
      const bool compound = c.find(' ') != std::string::npos;
      if (!compound && c[0] == '-') {
        out += out.empty() ? "-" : " - ";
        c.erase(0, 1);
      } else if (!out.empty()) {
        out += " + ";
      }
      if (k == 0)
        out += c;
      else {
        if (compound)
          out += "(" + c + ")*";
        else if (c != "1")
          out += c + "*";
        out += var;
        if (k > 1)
          out += "^" + std::to_string(k);
      }
    }
    return out;
  }

private:
  static bool is_zero(const F& x) { return klein::is_zero(x); }
  void trim() {
    while (!c_.empty() && is_zero(c_.back()))
      c_.pop_back();
  }
  std::vector<F> c_;
};

// Monic gcd.
template <class F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
  while (!b.is_zero()) {
    UPoly<F> r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class F>
UPoly<F> exact_quotient(const UPoly<F>& a, const UPoly<F>& b) {
  auto [q, r] = a.divmod(b);
  if (!r.is_zero())
    fail("inexact polynomial quotient");
  return q;
}

template <class F>
struct SquarefreeFactor {
  UPoly<F> factor;  // monic, squarefree, degree >= 1
  int multiplicity;
};

// Yun's algorithm: p = c * prod factor_i^i, factors pairwise coprime.
template <class F>
std::vector<SquarefreeFactor<F>> squarefree_decomposition(const UPoly<F>& p) {
  if (p.is_zero())
    throw std::invalid_argument("squarefree decomposition of the zero polynomial");
  std::vector<SquarefreeFactor<F>> out;
  if (p.degree() == 0)
    return out;
  const UPoly<F> dp = p.derivative();
  UPoly<F> a = gcd(p, dp);
  UPoly<F> b = exact_quotient(p, a);
  UPoly<F> c = exact_quotient(dp, a);
  UPoly<F> d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UPoly<F> f = gcd(b, d);
    b = exact_quotient(b, f);
    c = exact_quotient(d, f);
    d = c - b.derivative();
    if (f.degree() > 0)
      out.push_back({f.monic(), i});
    ++i;
  }
  return out;
}

template <class F>
UPoly<F> squarefree_part(const UPoly<F>& p) {
  UPoly<F> r = UPoly<F>({F(1)});
  for (const auto& sf : squarefree_decomposition(p))
    r = r * sf.factor;
  return r;
}

} // namespace klein

#endif
