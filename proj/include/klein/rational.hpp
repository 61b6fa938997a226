// Exact rational and integer helpers on top of GMP.

#ifndef KLEIN_RATIONAL_HPP_
#define KLEIN_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace klein {

using Integer = mpz_class;
using Rational = mpq_class;  // always kept canonical: gcd(num, den) = 1, den > 0

[[noreturn]] inline void fail(const std::string& msg) { throw std::runtime_error(msg); }

inline Rational make_rational(long num, long den = 1) {
  if (den == 0)
    throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// "p" or "p/q", the serialization used by every JSON payload.
inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Rational parse_rational(std::string_view s) {
  Rational r;
  if (r.set_str(std::string(s), 10) != 0)
    throw std::invalid_argument("malformed rational: " + std::string(s));
  if (r.get_den() == 0)
    throw std::domain_error("zero denominator");
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer floor(const Rational& r) { return floor_div(r.get_num(), r.get_den()); }

inline Integer ceil(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

inline Integer isqrt(const Integer& n) {
  if (n < 0)
    throw std::domain_error("isqrt of negative");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

// Floor of sqrt(r) for r >= 0, exact.
inline Integer floor_sqrt(const Rational& r) {
  if (r < 0)
    throw std::domain_error("sqrt of negative");
  return floor_div(isqrt(r.get_num() * r.get_den()), r.get_den());
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// r mod m reduced into [0, m).
inline Rational mod(const Rational& r, const Rational& m) {
  Rational q = r / m;
  return r - m * Rational(floor(q));
}

inline std::size_t hash_integer(const Integer& z) {
  const mpz_srcptr p = z.get_mpz_t();
  std::size_t h = std::hash<int>()(p->_mp_size);
  const int n = p->_mp_size < 0 ? -p->_mp_size : p->_mp_size;
  for (int i = 0; i < n; ++i)
    h = h * 1000003u ^ std::hash<mp_limb_t>()(p->_mp_d[i]);
  return h;
}

inline std::size_t hash_rational(const Rational& r) {
  return hash_integer(r.get_num()) * 31u + hash_integer(r.get_den());
}

} // namespace klein

#endif
