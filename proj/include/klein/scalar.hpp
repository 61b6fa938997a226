// Uniform free functions over the exact scalar types, so that the polynomial
// and matrix templates can be written once.

#ifndef KLEIN_SCALAR_HPP_
#define KLEIN_SCALAR_HPP_

#include "cyclotomic.hpp"
#include "quadint.hpp"
#include "rational.hpp"

namespace klein {

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Cyclo& x) { return x.is_zero(); }
inline bool is_zero(const QuadInt& x) { return x.is_zero(); }

inline Rational conj(const Rational& x) { return x; }
inline Integer conj(const Integer& x) { return x; }
inline Cyclo conj(const Cyclo& x) { return x.conj(); }
inline QuadInt conj(const QuadInt& x) { return x.conj(); }

inline Integer exact_div(const Integer& a, const Integer& b) {
  if (b == 0)
    throw std::domain_error("division by zero");
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline Rational exact_div(const Rational& a, const Rational& b) {
  if (b == 0)
    throw std::domain_error("division by zero");
  return a / b;
}
inline Cyclo exact_div(const Cyclo& a, const Cyclo& b) { return a / b; }

inline std::string scalar_str(const Rational& x) { return x.get_str(); }
inline std::string scalar_str(const Integer& x) { return x.get_str(); }
inline std::string scalar_str(const Cyclo& x) { return x.str(); }
inline std::string scalar_str(const QuadInt& x) { return x.str(); }

} // namespace klein

#endif
