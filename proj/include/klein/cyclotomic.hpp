// Elements of the cyclotomic field Q(zeta_n), stored in the power basis
// 1, zeta, ..., zeta^{phi(n)-1} modulo the n-th cyclotomic polynomial.
//
// Conductor 1 is Q itself.  Binary operations on elements of different
// conductors lift both operands to the lcm first, so a conductor-1 value acts
// as a scalar in every field.

#ifndef KLEIN_CYCLOTOMIC_HPP_
#define KLEIN_CYCLOTOMIC_HPP_

#include "rational.hpp"

#include <cstdlib>
#include <mutex>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

namespace klein {

inline constexpr int kMaxConductor = 66;

namespace impl {

inline int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0)
        n /= p;
      result -= result / p;
    }
  if (n > 1)
    result -= result / n;
  return result;
}

// Integer coefficients of Phi_n, lowest degree first.
inline std::vector<long> compute_cyclotomic_poly(int n, const std::vector<std::vector<long>>& known) {
  std::vector<long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0)
      continue;
    const std::vector<long>& q = known[d];
    const int dq = static_cast<int>(q.size()) - 1;
    std::vector<long> quot(p.size() - dq, 0);
    for (int k = static_cast<int>(p.size()) - 1; k >= dq; --k) {
      long c = p[k];  // q is monic
      quot[k - dq] = c;
      if (c != 0)
        for (int j = 0; j <= dq; ++j)
          p[k - dq + j] -= c * q[j];
    }
    p = std::move(quot);
  }
  return p;
}

inline const std::vector<long>& cyclotomic_poly(int n) {
  static const std::vector<std::vector<long>> table = [] {
    std::vector<std::vector<long>> t(kMaxConductor + 1);
    for (int m = 1; m <= kMaxConductor; ++m)
      t[m] = compute_cyclotomic_poly(m, t);
    return t;
  }();
  if (n < 1 || n > kMaxConductor)
    throw std::domain_error("conductor " + std::to_string(n) + " outside [1, " +
                            std::to_string(kMaxConductor) + "]");
  return table[n];
}

} // namespace impl

class Cyclo {
public:
  Cyclo() : n_(1), num_(1), den_(1) {}
  Cyclo(long v) : n_(1), num_(1, Integer(v)), den_(1) {}  // NOLINT: implicit scalar
  Cyclo(const Integer& v) : n_(1), num_(1, v), den_(1) {}  // NOLINT
  Cyclo(const Rational& v) : n_(1), num_(1, v.get_num()), den_(v.get_den()) {}  // NOLINT

  // Zero of conductor n.
  static Cyclo zero(int n) {
    Cyclo c;
    c.n_ = n;
    c.num_.assign(impl::euler_phi(check_conductor(n)), Integer(0));
    return c;
  }

  // zeta_n^k.
  static Cyclo zeta(int n, long k = 1) {
    check_conductor(n);
    std::vector<Integer> v(n, Integer(0));
    v[static_cast<std::size_t>(((k % n) + n) % n)] = 1;
    return from_integer_powers(n, std::move(v), Integer(1));
  }

  // Sum of c_k zeta_n^k for an arbitrary-length coefficient list.
  static Cyclo from_powers(int n, const std::vector<Rational>& coeffs) {
    Integer den = 1;
    for (const Rational& c : coeffs)
      den = lcm(den, c.get_den());
    std::vector<Integer> v(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      v[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
    return from_integer_powers(n, std::move(v), den);
  }

  int conductor() const { return n_; }
  int degree() const { return static_cast<int>(num_.size()); }

  // Power-basis coordinates (length phi(n)).
  std::vector<Rational> coeffs() const {
    std::vector<Rational> out;
    out.reserve(num_.size());
    for (const Integer& c : num_) {
      Rational r(c, den_);
      r.canonicalize();
      out.push_back(r);
    }
    return out;
  }

  const std::vector<Integer>& numerators() const { return num_; }
  const Integer& denominator() const { return den_; }

  bool is_zero() const {
    for (const Integer& c : num_)
      if (c != 0)
        return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < num_.size(); ++i)
      if (num_[i] != 0)
        return false;
    return true;
  }

  Rational to_rational() const {
    if (!is_rational())
      fail("cyclotomic element is not rational");
    Rational r(num_[0], den_);
    r.canonicalize();
    return r;
  }

  // Same number in Q(zeta_m); n must divide m.
  Cyclo lift(int m) const {
    if (m == n_)
      return *this;
    if (m % n_ != 0)
      fail("cannot lift conductor " + std::to_string(n_) + " to " + std::to_string(m));
    check_conductor(m);
    const int step = m / n_;
    std::vector<Integer> v(static_cast<std::size_t>(step) * (num_.size() - 1) + 1, Integer(0));
    for (std::size_t k = 0; k < num_.size(); ++k)
      v[k * step] = num_[k];
    return from_integer_powers(m, std::move(v), den_);
  }

  // Galois automorphism zeta -> zeta^j, gcd(j, n) = 1.
  Cyclo galois(long j) const {
    j = ((j % n_) + n_) % n_;
    if (std::gcd(static_cast<int>(j), n_) != 1)
      fail("galois exponent not coprime to conductor");
    std::vector<Integer> v(n_, Integer(0));
    for (std::size_t k = 0; k < num_.size(); ++k)
      v[(k * j) % n_] += num_[k];
    return from_integer_powers(n_, std::move(v), den_);
  }

  Cyclo conj() const { return galois(n_ - 1); }
  bool is_real() const { return conj() == *this; }

  Cyclo operator-() const {
    Cyclo r = *this;
    for (Integer& c : r.num_)
      c = -c;
    return r;
  }

  friend Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    if (a.n_ != b.n_) {
      const int m = lcm_conductor(a.n_, b.n_);
      return a.lift(m) + b.lift(m);
    }
    Cyclo r;
    r.n_ = a.n_;
    r.num_.resize(a.num_.size());
    if (a.den_ == b.den_) {
      for (std::size_t i = 0; i < a.num_.size(); ++i)
        r.num_[i] = a.num_[i] + b.num_[i];
      r.den_ = a.den_;
    } else {
      for (std::size_t i = 0; i < a.num_.size(); ++i)
        r.num_[i] = a.num_[i] * b.den_ + b.num_[i] * a.den_;
      r.den_ = a.den_ * b.den_;
    }
    r.normalize();
    return r;
  }

  friend Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }

  friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    if (a.n_ != b.n_) {
      if (a.n_ == 1 && a.is_rational())
        return b.scaled(a.to_rational());
      if (b.n_ == 1 && b.is_rational())
        return a.scaled(b.to_rational());
      const int m = lcm_conductor(a.n_, b.n_);
      return a.lift(m) * b.lift(m);
    }
    const std::size_t d = a.num_.size();
    std::vector<Integer> v(2 * d - 1, Integer(0));
    for (std::size_t i = 0; i < d; ++i) {
      if (a.num_[i] == 0)
        continue;
      for (std::size_t j = 0; j < d; ++j)
        if (b.num_[j] != 0)
          mpz_addmul(v[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
    return from_integer_powers(a.n_, std::move(v), a.den_ * b.den_);
  }

  Cyclo inverse() const;

  friend Cyclo operator/(const Cyclo& a, const Cyclo& b) {
    if (b.is_rational())
      return a.scaled(1 / b.to_rational());
    return a * b.inverse();
  }

  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
  Cyclo& operator/=(const Cyclo& o) { return *this = *this / o; }

  Cyclo scaled(const Rational& s) const {
    if (s == 0)
      return zero(n_);
    Cyclo r = *this;
    for (Integer& c : r.num_)
      c *= s.get_num();
    r.den_ *= s.get_den();
    r.normalize();
    return r;
  }

  friend bool operator==(const Cyclo& a, const Cyclo& b) {
    if (a.n_ != b.n_) {
      const int m = lcm_conductor(a.n_, b.n_);
      return a.lift(m) == b.lift(m);
    }
    return a.den_ == b.den_ && a.num_ == b.num_;
  }
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  // Rational values hash alike at every conductor, matching operator==.
  // Non-rational values are hashed at their stored conductor, so callers
  // mixing conductors must lift to a common one first.
  std::size_t hash() const {
    if (is_rational())
      return hash_integer(num_.empty() ? Integer(0) : num_[0]) * 31u + hash_integer(den_);
    std::size_t h = std::hash<int>()(n_) ^ hash_integer(den_);
    for (const Integer& c : num_)
      h = h * 1099511628211u ^ hash_integer(c);
    return h;
  }

  // Human-readable form in the power basis, e.g. "z + z^3 - 1/2".
  std::string str(const char* var = "z") const {
    std::string out;
    const std::vector<Rational> cs = coeffs();
    for (std::size_t k = cs.size(); k-- > 0;) {
      const Rational& c = cs[k];
      if (c == 0)
        continue;
      Rational mag = abs(c);
      out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      if (k == 0) {
        out += mag.get_str();
        continue;
      }
      if (mag != 1)
        out += mag.get_str() + "*";
      out += var;
      if (k > 1)
        out += "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Cyclo& c) { return os << c.str(); }

private:
  static int check_conductor(int n) {
    impl::cyclotomic_poly(n);
    return n;
  }

  static int lcm_conductor(int a, int b) { return check_conductor(std::lcm(a, b)); }

  static Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
  }

  // Reduce sum v_k zeta^k (any length) modulo zeta^n = 1 and Phi_n.
  static Cyclo from_integer_powers(int n, std::vector<Integer> v, Integer den) {
    const std::vector<long>& phi_poly = impl::cyclotomic_poly(n);
    const std::size_t d = phi_poly.size() - 1;
    if (v.size() > static_cast<std::size_t>(n)) {
      for (std::size_t k = n; k < v.size(); ++k)
        v[k % n] += v[k];
      v.resize(n);
    }
    for (std::size_t k = v.size(); k-- > d;) {
      if (v[k] == 0)
        continue;
      const Integer c = v[k];
      for (std::size_t j = 0; j < d; ++j)
        if (phi_poly[j] != 0)
          v[k - d + j] -= c * phi_poly[j];
    }
    v.resize(d, Integer(0));
    Cyclo r;
    r.n_ = n;
    r.num_ = std::move(v);
    r.den_ = std::move(den);
    r.normalize();
    return r;
  }

  void normalize() {
    if (den_ < 0) {
      den_ = -den_;
      for (Integer& c : num_)
        c = -c;
    }
    if (den_ == 1)
      return;
    Integer g = den_;
    for (const Integer& c : num_) {
      if (c != 0)
        g = gcd(g, c);
      if (g == 1)
        return;
    }
    bool all_zero = true;
    for (const Integer& c : num_)
      if (c != 0)
        all_zero = false;
    if (all_zero) {
      den_ = 1;
      return;
    }
    den_ /= g;
    for (Integer& c : num_)
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }

  int n_;
  std::vector<Integer> num_;
  Integer den_;
};

// Inverse by solving (multiplication-by-this) * y = 1 over Q.
inline Cyclo Cyclo::inverse() const {
  if (is_zero())
    throw std::domain_error("inverse of zero cyclotomic element");
  if (is_rational())
    return Cyclo(1 / to_rational());
  const std::size_t d = num_.size();
  // Column j of the matrix holds this * zeta^j.
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
  for (std::size_t j = 0; j < d; ++j) {
    const std::vector<Rational> col = (*this * zeta(n_, static_cast<long>(j))).coeffs();
    for (std::size_t i = 0; i < d; ++i)
      m[i][j] = col[i];
  }
  m[0][d] = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (m[p][c] == 0)
      ++p;
    std::swap(m[p], m[c]);
    const Rational inv = 1 / m[c][c];
    for (std::size_t k = c; k <= d; ++k)
      m[c][k] *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || m[r][c] == 0)
        continue;
      const Rational f = m[r][c];
      for (std::size_t k = c; k <= d; ++k)
        m[r][k] -= f * m[c][k];
    }
  }
  std::vector<Rational> sol(d);
  for (std::size_t i = 0; i < d; ++i)
    sol[i] = m[i][d];
  return from_powers(n_, sol);
}

// lambda = zeta + zeta^3 + zeta^4 + zeta^5 + zeta^9 in Q(zeta_11), the Gauss
// period over the squares mod 11; it is (-1 + sqrt(-11)) / 2.
inline Cyclo lambda_embed() {
  Cyclo r = Cyclo::zero(11);
  for (long k : {1, 3, 4, 5, 9})
    r += Cyclo::zeta(11, k);
  return r;
}

} // namespace klein

template <>
struct std::hash<klein::Cyclo> {
  std::size_t operator()(const klein::Cyclo& c) const { return c.hash(); }
};

#endif
