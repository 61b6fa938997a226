// The order Z[lambda], lambda^2 + lambda + 3 = 0, lambda = (-1 + sqrt(-11)) / 2.

#ifndef KLEIN_QUADINT_HPP_
#define KLEIN_QUADINT_HPP_

#include "cyclotomic.hpp"

#include <array>
#include <ostream>
#include <string>

namespace klein {

class QuadInt {
public:
  QuadInt() = default;
  QuadInt(long a) : a_(a) {}  // NOLINT: implicit embedding of Z
  QuadInt(Integer a, Integer b = 0) : a_(std::move(a)), b_(std::move(b)) {}  // NOLINT

  static QuadInt lambda() { return {0, 1}; }

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  // lambda-bar = -1 - lambda.
  QuadInt conj() const { return {a_ - b_, -b_}; }

  // (a + b lambda)(a + b lambda-bar) = a^2 - ab + 3b^2.
  Integer norm() const { return a_ * a_ - a_ * b_ + 3 * b_ * b_; }

  QuadInt operator-() const { return {-a_, -b_}; }
  friend QuadInt operator+(const QuadInt& x, const QuadInt& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend QuadInt operator-(const QuadInt& x, const QuadInt& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend QuadInt operator*(const QuadInt& x, const QuadInt& y) {
    // b1 b2 lambda^2 = -b1 b2 (lambda + 3)
    const Integer bb = x.b_ * y.b_;
    return {x.a_ * y.a_ - 3 * bb, x.a_ * y.b_ + x.b_ * y.a_ - bb};
  }
  QuadInt& operator+=(const QuadInt& o) { return *this = *this + o; }
  QuadInt& operator-=(const QuadInt& o) { return *this = *this - o; }
  QuadInt& operator*=(const QuadInt& o) { return *this = *this * o; }

  friend bool operator==(const QuadInt& x, const QuadInt& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const QuadInt& x, const QuadInt& y) { return !(x == y); }

  // Exact quotient; throws if y does not divide x in Z[lambda].
  friend QuadInt exact_div(const QuadInt& x, const QuadInt& y) {
    const Integer n = y.norm();
    if (n == 0)
      throw std::domain_error("division by zero in Z[lambda]");
    const QuadInt t = x * y.conj();
    if (t.a_ % n != 0 || t.b_ % n != 0)
      fail("inexact division in Z[lambda]");
    return {t.a_ / n, t.b_ / n};
  }

  Cyclo to_cyclo() const { return Cyclo(a_) + lambda_embed() * Cyclo(b_); }

  // [a, b] meaning a + b lambda.
  std::array<Integer, 2> to_pair() const { return {a_, b_}; }

  std::string str() const {
    if (b_ == 0)
      return a_.get_str();
    std::string lam = b_ == 1 ? "l" : b_ == -1 ? "-l" : b_.get_str() + "l";
    if (a_ == 0)
      return lam;
    return a_.get_str() + (b_ > 0 ? "+" : "") + lam;
  }

  friend std::ostream& operator<<(std::ostream& os, const QuadInt& q) { return os << q.str(); }

private:
  Integer a_ = 0;
  Integer b_ = 0;
};

} // namespace klein

#endif
