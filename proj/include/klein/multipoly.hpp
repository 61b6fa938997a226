// Sparse multivariate polynomials with exact coefficients, terms kept in
// graded reverse lexicographic order (x0 > x1 > ... > x_{n-1}).

#ifndef KLEIN_MULTIPOLY_HPP_
#define KLEIN_MULTIPOLY_HPP_

#include "scalar.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace klein {

using Monomial = std::vector<std::uint16_t>;

inline unsigned total_degree(const Monomial& m) {
  unsigned d = 0;
  for (auto e : m)
    d += e;
  return d;
}

// Strict "a comes before b" in a descending grevlex listing.
struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = total_degree(a), db = total_degree(b);
    if (da != db)
      return da > db;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i])
        return a[i] < b[i];
    return false;
  }
};

template <class C>
class MultiPoly {
public:
  using Terms = std::map<Monomial, C, GrevlexGreater>;

  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const C& c) {
    MultiPoly p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
  }

  static MultiPoly variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars)
      throw std::out_of_range("variable index");
    Monomial m(nvars, 0);
    m[i] = 1;
    MultiPoly p(nvars);
    p.add_term(m, C(1));
    return p;
  }

  static MultiPoly monomial(const Monomial& m, const C& c) {
    MultiPoly p(m.size());
    p.add_term(m, c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const C& c) {
    if (m.size() != nvars_)
      throw std::invalid_argument("monomial arity mismatch");
    if (klein::is_zero(c))
      return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (klein::is_zero(it->second))
        terms_.erase(it);
    }
  }

  C coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C(0) : it->second;
  }

  const Monomial& leading_monomial() const {
    if (terms_.empty())
      throw std::logic_error("leading monomial of zero polynomial");
    return terms_.begin()->first;
  }
  const C& leading_coefficient() const {
    if (terms_.empty())
      throw std::logic_error("leading coefficient of zero polynomial");
    return terms_.begin()->second;
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_)
      d = std::max(d, static_cast<int>(klein::total_degree(m)));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty())
      return true;
    const unsigned d = klein::total_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
      if (klein::total_degree(m) != d)
        return false;
    return true;
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_)
      c = -c;
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_arity(o);
    for (const auto& [m, c] : o.terms_)
      add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_arity(o);
    for (const auto& [m, c] : o.terms_)
      add_term(m, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_arity(b);
    MultiPoly r(a.nvars_);
    Monomial m(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        for (std::size_t i = 0; i < m.size(); ++i)
          m[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
        r.add_term(m, ca * cb);
      }
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly scaled(const C& s) const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_)
      r.add_term(m, c * s);
    return r;
  }

  MultiPoly pow(unsigned e) const {
    MultiPoly r = constant(nvars_, C(1));
    for (unsigned i = 0; i < e; ++i)
      r *= *this;
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly derivative(std::size_t var) const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
      if (m[var] == 0)
        continue;
      Monomial d = m;
      --d[var];
      r.add_term(d, c * C(static_cast<long>(m[var])));
    }
    return r;
  }

  // Evaluate at a point whose coordinates live in a ring T that accepts C.
  template <class T>
  T evaluate(const std::vector<T>& point) const {
    if (point.size() != nvars_)
      throw std::invalid_argument("point arity mismatch");
    // Cache powers per variable.
    std::vector<std::vector<T>> powers(nvars_);
    T acc = T(0);
    for (const auto& [m, c] : terms_) {
      T t = T(c);
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (m[i] == 0)
          continue;
        auto& pw = powers[i];
        if (pw.empty())
          pw.push_back(T(1));
        while (pw.size() <= m[i])
          pw.push_back(pw.back() * point[i]);
        t = t * pw[m[i]];
      }
      acc = acc + t;
    }
    return acc;
  }

  // Ring homomorphism x_i -> images[i]; images may live in another arity.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const {
    if (images.size() != nvars_)
      throw std::invalid_argument("substitution arity mismatch");
    const std::size_t out_vars = images.empty() ? 0 : images.front().nvars();
    std::vector<std::vector<MultiPoly>> powers(nvars_);
    MultiPoly acc(out_vars);
    for (const auto& [m, c] : terms_) {
      MultiPoly t = constant(out_vars, c);
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (m[i] == 0)
          continue;
        auto& pw = powers[i];
        if (pw.empty())
          pw.push_back(constant(out_vars, C(1)));
        while (pw.size() <= m[i])
          pw.push_back(pw.back() * images[i]);
        t *= pw[m[i]];
      }
      acc += t;
    }
    return acc;
  }

  // Multiply each term by x_var^(degree - deg(term)).
  MultiPoly homogenized(std::size_t var, unsigned degree) const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
      const unsigned d = klein::total_degree(m);
      if (d > degree)
        throw std::invalid_argument("term degree exceeds homogenization degree");
      Monomial h = m;
      h[var] = static_cast<std::uint16_t>(h[var] + degree - d);
      r.add_term(h, c);
    }
    return r;
  }

  template <class D, class F>
  MultiPoly<D> map_coefficients(F f) const {
    MultiPoly<D> r(nvars_);
    for (const auto& [m, c] : terms_)
      r.add_term(m, f(c));
    return r;
  }

  // Quotient of an exact division; throws if q does not divide *this.
  MultiPoly exact_divide(const MultiPoly& q) const {
    check_arity(q);
    if (q.is_zero())
      throw std::domain_error("division by zero polynomial");
    const Monomial& lq = q.leading_monomial();
    const C& lc = q.leading_coefficient();
    MultiPoly rem = *this, quot(nvars_);
    Monomial m(nvars_);
    while (!rem.is_zero()) {
      const Monomial& lr = rem.leading_monomial();
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (lr[i] < lq[i])
          fail("inexact polynomial division");
        m[i] = static_cast<std::uint16_t>(lr[i] - lq[i]);
      }
      const C c = exact_div(rem.leading_coefficient(), lc);
      quot.add_term(m, c);
      for (const auto& [mq, cq] : q.terms_) {
        Monomial t(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i)
          t[i] = static_cast<std::uint16_t>(mq[i] + m[i]);
        rem.add_term(t, -(c * cq));
      }
    }
    return quot;
  }

private:
  void check_arity(const MultiPoly& o) const {
    if (o.nvars_ != nvars_)
      throw std::invalid_argument("polynomial arity mismatch");
  }

  std::size_t nvars_;
  Terms terms_;
};

template <class C>
bool is_zero(const MultiPoly<C>& p) { return p.is_zero(); }

template <class C>
MultiPoly<C> exact_div(const MultiPoly<C>& a, const MultiPoly<C>& b) { return a.exact_divide(b); }

} // namespace klein

#endif
