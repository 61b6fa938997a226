// Integral lattices given by Gram matrices, discriminant forms, short vector
// enumeration and representation of integers.

#ifndef KLEIN_LATTICE_HPP_
#define KLEIN_LATTICE_HPP_

#include "matrix.hpp"
#include "smith.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace klein {

class Lattice {
public:
  Lattice() = default;

  static Lattice from_gram(const ZMatrix& g) {
    if (!g.is_square() || g.rows() == 0)
      throw std::invalid_argument("Gram matrix must be square and nonempty");
    if (!(g == g.transpose()))
      throw std::invalid_argument("Gram matrix is not symmetric");
    if (det(g) == 0)
      throw std::invalid_argument("degenerate Gram matrix");
    Lattice l;
    l.gram_ = g;
    return l;
  }

  static Lattice hyperbolic() { return from_gram(ZMatrix{{0, 1}, {1, 0}}); }

  static Lattice rank1(long m) { return from_gram(ZMatrix{{m}}); }

  // E8 with the form negated: minus the Cartan matrix (Bourbaki labelling).
  static Lattice e8_negative() {
    ZMatrix g(8, 8);
    const int edges[7][2] = {{0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}};
    for (int i = 0; i < 8; ++i)
      g(i, i) = -2;
    for (const auto& e : edges)
      g(e[0], e[1]) = g(e[1], e[0]) = 1;
    return from_gram(g);
  }

  const ZMatrix& gram() const { return gram_; }
  std::size_t rank() const { return gram_.rows(); }
  Integer determinant() const { return det(gram_); }

  bool is_even() const {
    for (std::size_t i = 0; i < rank(); ++i)
      if (mpz_odd_p(gram_(i, i).get_mpz_t()))
        return false;
    return true;
  }

  Integer norm(const std::vector<Integer>& v) const {
    Integer s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (v[i] == 0)
        continue;
      Integer r = 0;
      for (std::size_t j = 0; j < rank(); ++j)
        r += gram_(i, j) * v[j];
      s += v[i] * r;
    }
    return s;
  }

  // (positive, negative) from the sign changes of the characteristic
  // polynomial; its roots are real, so Descartes' rule is exact.
  std::pair<int, int> signature() const {
    const QMatrix q = gram_.map<Rational>([](const Integer& z) { return Rational(z); });
    const auto c = char_poly_coeffs(q);
    auto changes = [](std::vector<Rational> v) {
      int n = 0, prev = 0;
      for (const auto& x : v) {
        const int s = sgn(x);
        if (s == 0)
          continue;
        if (prev != 0 && s != prev)
          ++n;
        prev = s;
      }
      return n;
    };
    std::vector<Rational> neg = c;
    for (std::size_t i = 1; i < neg.size(); i += 2)
      neg[i] = -neg[i];
    return {changes(c), changes(neg)};
  }

  bool is_positive_definite() const { return signature().first == static_cast<int>(rank()); }
  bool is_negative_definite() const { return signature().second == static_cast<int>(rank()); }

  std::string str() const { return gram_.str(); }

private:
  ZMatrix gram_;
};

inline Lattice direct_sum(const Lattice& a, const Lattice& b) {
  return Lattice::from_gram(block_diagonal(a.gram(), b.gram()));
}

inline Lattice direct_sum(const std::vector<Lattice>& parts) {
  if (parts.empty())
    throw std::invalid_argument("empty direct sum");
  Lattice acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i)
    acc = direct_sum(acc, parts[i]);
  return acc;
}

inline Lattice power(const Lattice& l, int k) {
  return direct_sum(std::vector<Lattice>(k, l));
}

// Parse "U+U+E8(-1)+(-2)+[[2,1],[1,6]]" style descriptions.
inline Lattice parse_lattice_spec(const std::string& spec) {
  std::vector<Lattice> parts;
  std::size_t i = 0;
  auto fail_at = [&](const std::string& what) {
    throw std::invalid_argument("lattice spec, column " + std::to_string(i + 1) + ": " + what);
  };
  auto skip = [&] {
    while (i < spec.size() && std::isspace(static_cast<unsigned char>(spec[i])))
      ++i;
  };
  auto read_int = [&]() -> long {
    skip();
    std::size_t start = i;
    if (i < spec.size() && (spec[i] == '-' || spec[i] == '+'))
      ++i;
    while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i])))
      ++i;
    if (start == i || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(spec[start]))))
      fail_at("expected integer");
    return std::stol(spec.substr(start, i - start));
  };
  while (true) {
    skip();
    if (i >= spec.size())
      fail_at("expected lattice summand");
    if (spec.compare(i, 6, "E8(-1)") == 0) {
      parts.push_back(Lattice::e8_negative());
      i += 6;
    } else if (spec[i] == 'U') {
      parts.push_back(Lattice::hyperbolic());
      ++i;
    } else if (spec[i] == '(') {
      ++i;
      const long m = read_int();
      skip();
      if (i >= spec.size() || spec[i] != ')')
        fail_at("expected ')'");
      ++i;
      parts.push_back(Lattice::rank1(m));
    } else if (spec[i] == '[') {
      ++i;
      std::vector<std::vector<long>> rows;
      while (true) {
        skip();
        if (i >= spec.size() || spec[i] != '[')
          fail_at("expected '['");
        ++i;
        std::vector<long> row;
        while (true) {
          row.push_back(read_int());
          skip();
          if (i < spec.size() && spec[i] == ',') {
            ++i;
            continue;
          }
          if (i < spec.size() && spec[i] == ']') {
            ++i;
            break;
          }
          fail_at("expected ',' or ']'");
        }
        rows.push_back(row);
        skip();
        if (i < spec.size() && spec[i] == ',') {
          ++i;
          continue;
        }
        if (i < spec.size() && spec[i] == ']') {
          ++i;
          break;
        }
        fail_at("expected ',' or ']'");
      }
      ZMatrix g(rows.size(), rows.size());
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows.size())
          fail_at("Gram matrix is not square");
        for (std::size_t c = 0; c < rows.size(); ++c)
          g(r, c) = rows[r][c];
      }
      parts.push_back(Lattice::from_gram(g));
    } else {
      fail_at(std::string("unexpected '") + spec[i] + "'");
    }
    skip();
    if (i >= spec.size())
      break;
    if (spec[i] != '+')
      fail_at("expected '+'");
    ++i;
  }
  return direct_sum(parts);
}

// Finite quadratic form on a finite abelian group given as Z/d_1 + ... + Z/d_k.
// Diagonal entries of the form matrix are q(g_i) mod `modulus` (2 for even
// lattices, 1 for odd ones), off-diagonal entries are b(g_i, g_j) mod 1.
class FiniteQuadraticForm {
public:
  using Element = std::vector<long>;

  FiniteQuadraticForm() = default;
  FiniteQuadraticForm(std::vector<long> orders, QMatrix form, Rational modulus)
      : orders_(std::move(orders)), form_(std::move(form)), modulus_(std::move(modulus)) {
    if (form_.rows() != orders_.size() || form_.cols() != orders_.size())
      throw std::invalid_argument("form matrix does not match the group");
    for (std::size_t i = 0; i < orders_.size(); ++i)
      for (std::size_t j = 0; j < orders_.size(); ++j)
        form_(i, j) = mod(form_(i, j), i == j ? modulus_ : Rational(1));
  }

  const std::vector<long>& orders() const { return orders_; }
  const QMatrix& form() const { return form_; }
  const Rational& modulus() const { return modulus_; }
  std::size_t num_generators() const { return orders_.size(); }

  long order() const {
    long n = 1;
    for (long d : orders_)
      n *= d;
    return n;
  }

  Element reduce(Element x) const {
    for (std::size_t i = 0; i < x.size(); ++i)
      x[i] = ((x[i] % orders_[i]) + orders_[i]) % orders_[i];
    return x;
  }

  Element add(const Element& a, const Element& b) const {
    Element r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      r[i] = (a[i] + b[i]) % orders_[i];
    return r;
  }

  Element scale(const Element& a, long k) const {
    Element r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      r[i] = a[i] * k;
    return reduce(r);
  }

  bool is_zero(const Element& a) const {
    for (long x : a)
      if (x != 0)
        return false;
    return true;
  }

  Rational q(const Element& x) const {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0)
        continue;
      s += Rational(x[i] * x[i]) * form_(i, i);
      for (std::size_t j = i + 1; j < x.size(); ++j)
        if (x[j] != 0)
          s += Rational(2 * x[i] * x[j]) * form_(i, j);
    }
    return mod(s, modulus_);
  }

  Rational b(const Element& x, const Element& y) const {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0)
        continue;
      for (std::size_t j = 0; j < y.size(); ++j)
        if (y[j] != 0) {
          const Rational& f = i == j ? form_(i, i) : form_(i, j);
          s += Rational(x[i] * y[j]) * f;
        }
    }
    return mod(s, Rational(1));
  }

  long element_order(const Element& x) const {
    long n = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0)
        continue;
      const long d = orders_[i] / std::gcd(orders_[i], x[i]);
      n = std::lcm(n, d);
    }
    return n;
  }

  static constexpr long kMaxOrder = 10000;

  std::vector<Element> elements() const {
    if (order() > kMaxOrder)
      throw std::runtime_error("finite quadratic form too large for enumeration");
    std::vector<Element> out;
    Element cur(orders_.size(), 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == orders_.size()) {
        out.push_back(cur);
        return;
      }
      for (long k = 0; k < orders_[i]; ++k) {
        cur[i] = k;
        self(self, i + 1);
      }
      cur[i] = 0;
    };
    rec(rec, 0);
    return out;
  }

  // Form on the subgroup spanned by independent elements (a direct sum of
  // the cyclic groups they generate); throws when they are dependent.
  FiniteQuadraticForm subform(const std::vector<Element>& gens) const {
    std::vector<long> ords;
    long expect = 1;
    for (const auto& g : gens) {
      ords.push_back(element_order(g));
      expect *= ords.back();
    }
    std::set<Element> span{Element(orders_.size(), 0)};
    for (const auto& g : gens) {
      std::set<Element> next;
      for (const auto& s : span) {
        Element x = s;
        for (long k = 0; k < element_order(g); ++k) {
          next.insert(x);
          x = add(x, g);
        }
      }
      span.swap(next);
    }
    if (static_cast<long>(span.size()) != expect)
      throw std::invalid_argument("subform generators are not independent");
    QMatrix f(gens.size(), gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < gens.size(); ++j)
        f(i, j) = i == j ? q(gens[i]) : b(gens[i], gens[j]);
    return FiniteQuadraticForm(ords, f, modulus_);
  }

  // Elements of order dividing n.
  std::vector<Element> torsion(long n) const {
    std::vector<Element> out;
    for (const auto& e : elements())
      if (n % element_order(e) == 0)
        out.push_back(e);
    return out;
  }

  std::string str() const {
    std::string s = "group:";
    if (orders_.empty())
      s += " trivial";
    for (long d : orders_)
      s += " Z/" + std::to_string(d);
    s += "; q on generators:";
    for (std::size_t i = 0; i < orders_.size(); ++i)
      s += " " + to_string(form_(i, i));
    return s;
  }

private:
  std::vector<long> orders_;
  QMatrix form_;
  Rational modulus_ = 2;
};

inline FiniteQuadraticForm direct_sum(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b) {
  if (a.modulus() != b.modulus())
    throw std::invalid_argument("forms with different value groups");
  std::vector<long> ords = a.orders();
  ords.insert(ords.end(), b.orders().begin(), b.orders().end());
  return FiniteQuadraticForm(ords, block_diagonal(a.form(), b.form()), a.modulus());
}

// Discriminant group L^v / L with q(x) = x^T G^-1 x on dual generators.
inline FiniteQuadraticForm disc_group(const Lattice& l) {
  const ZMatrix& g = l.gram();
  const SmithForm snf = smith_normal_form(g);
  const ZMatrix uinv = [&] {
    const QMatrix u = snf.left.map<Rational>([](const Integer& z) { return Rational(z); });
    return inverse(u).map<Integer>([](const Rational& r) {
      if (!is_integer(r))
        fail("Smith transform is not unimodular");
      return r.get_num();
    });
  }();
  const QMatrix ginv = inverse(g.map<Rational>([](const Integer& z) { return Rational(z); }));
  std::vector<std::size_t> idx;
  std::vector<long> ords;
  for (std::size_t i = 0; i < snf.diagonal.size(); ++i)
    if (snf.diagonal[i] != 1) {
      if (!snf.diagonal[i].fits_slong_p())
        fail("discriminant group too large");
      idx.push_back(i);
      ords.push_back(snf.diagonal[i].get_si());
    }
  QMatrix form(idx.size(), idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) {
      Rational s = 0;
      for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < g.rows(); ++c)
          if (uinv(r, idx[a]) != 0 && uinv(c, idx[b]) != 0)
            s += Rational(uinv(r, idx[a]) * uinv(c, idx[b])) * ginv(r, c);
      form(a, b) = s;
    }
  return FiniteQuadraticForm(ords, form, l.is_even() ? Rational(2) : Rational(1));
}

// Isometries F1 -> F2, counted by searching generator images; stops after
// `limit` when limit > 0.
inline long count_fqf_isometries(const FiniteQuadraticForm& f1, const FiniteQuadraticForm& f2, long limit = 0) {
  if (f1.modulus() != f2.modulus())
    return 0;
  if (f1.order() != f2.order())
    return 0;
  if (f1.order() > FiniteQuadraticForm::kMaxOrder)
    throw std::runtime_error("finite quadratic form too large for enumeration");
  const std::size_t k = f1.num_generators();
  if (k == 0)
    return 1;
  const auto all = f2.elements();
  std::vector<FiniteQuadraticForm::Element> gen(k, FiniteQuadraticForm::Element(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    gen[i][i] = 1;
  std::vector<std::vector<const FiniteQuadraticForm::Element*>> cand(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Rational qi = f1.q(gen[i]);
    for (const auto& h : all)
      if (f1.orders()[i] % f2.element_order(h) == 0 && f2.q(h) == qi)
        cand[i].push_back(&h);
  }
  std::vector<const FiniteQuadraticForm::Element*> img(k);
  long count = 0;
  auto injective = [&] {
    std::set<FiniteQuadraticForm::Element> seen;
    for (const auto& x : f1.elements()) {
      FiniteQuadraticForm::Element y(f2.num_generators(), 0);
      for (std::size_t i = 0; i < k; ++i)
        if (x[i] != 0)
          y = f2.add(y, f2.scale(*img[i], x[i]));
      if (!seen.insert(y).second)
        return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == k) {
      if (injective())
        ++count;
      return limit > 0 && count >= limit;
    }
    for (const auto* h : cand[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = f2.b(*h, *img[j]) == f1.b(gen[i], gen[j]);
      if (!ok)
        continue;
      img[i] = h;
      if (self(self, i + 1))
        return true;
    }
    return false;
  };
  rec(rec, 0);
  return count;
}

inline bool fqf_isomorphic(const FiniteQuadraticForm& f1, const FiniteQuadraticForm& f2) {
  return count_fqf_isometries(f1, f2, 1) > 0;
}

inline std::vector<FiniteQuadraticForm::Element> isotropic_elements(const FiniteQuadraticForm& f) {
  std::vector<FiniteQuadraticForm::Element> out;
  for (const auto& x : f.elements())
    if (!f.is_zero(x) && f.q(x) == 0)
      out.push_back(x);
  return out;
}

// Enumerate all nonzero v with 0 < |v^T G v| <= bound for a definite lattice,
// Fincke-Pohst style on an exact LDL^T decomposition.  The callback sees
// each vector once (v and -v both appear).
inline void enumerate_short_vectors(const Lattice& l, const Integer& bound,
                                    const std::function<void(const std::vector<Integer>&, const Integer&)>& visit) {
  const auto [pos, neg] = l.signature();
  const int n = static_cast<int>(l.rank());
  int sign;
  if (pos == n)
    sign = 1;
  else if (neg == n)
    sign = -1;
  else
    throw std::invalid_argument("short vectors need a definite lattice");
  // Q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2 for the positive form.
  QMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a(i, j) = Rational(sign * l.gram()(i, j));
  std::vector<Rational> d(n);
  QMatrix mu(n, n);
  for (int i = 0; i < n; ++i) {
    d[i] = a(i, i);
    for (int j = i + 1; j < n; ++j)
      mu(i, j) = a(i, j) / d[i];
    for (int j = i + 1; j < n; ++j)
      for (int k = i + 1; k < n; ++k)
        a(j, k) -= a(i, j) * a(i, k) / d[i];
  }
  std::vector<Integer> x(n, 0);
  const Rational total(bound);
  auto rec = [&](auto&& self, int i, const Rational& left) -> void {
    if (i < 0) {
      bool zero = true;
      for (const auto& c : x)
        zero &= c == 0;
      if (!zero) {
        const Integer nv = l.norm(x);
        visit(x, nv);
      }
      return;
    }
    Rational c = 0;
    for (int j = i + 1; j < n; ++j)
      if (x[j] != 0)
        c += mu(i, j) * x[j];
    const Integer r = floor_sqrt(left / d[i]);
    const Integer lo = ceil(-c - r - 1), hi = floor(-c + r + 1);
    for (Integer v = lo; v <= hi; ++v) {
      const Rational t = Rational(v) + c;
      const Rational used = d[i] * t * t;
      if (used > left)
        continue;
      x[i] = v;
      self(self, i - 1, left - used);
    }
    x[i] = 0;
  };
  rec(rec, n - 1, total);
}

inline std::vector<std::vector<Integer>> short_vectors(const Lattice& l, const Integer& bound) {
  std::vector<std::vector<Integer>> out;
  enumerate_short_vectors(l, bound, [&](const std::vector<Integer>& v, const Integer&) { out.push_back(v); });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::vector<Integer>> vectors_of_norm(const Lattice& l, const Integer& value) {
  std::vector<std::vector<Integer>> out;
  enumerate_short_vectors(l, abs(value), [&](const std::vector<Integer>& v, const Integer& nv) {
    if (nv == value)
      out.push_back(v);
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_primitive(const std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& c : v)
    g = gcd(g, c);
  return g == 1;
}

// Norm census up to |bound|: value -> (count, primitive count).
inline std::map<Integer, std::pair<long, long>> norm_census(const Lattice& l, const Integer& bound) {
  std::map<Integer, std::pair<long, long>> out;
  enumerate_short_vectors(l, bound, [&](const std::vector<Integer>& v, const Integer& nv) {
    auto& e = out[nv];
    ++e.first;
    if (is_primitive(v))
      ++e.second;
  });
  return out;
}

inline bool represents(const Lattice& l, const Integer& value) {
  if (value == 0)
    return true;
  bool found = false;
  enumerate_short_vectors(l, abs(value), [&](const std::vector<Integer>&, const Integer& nv) { found |= nv == value; });
  return found;
}

inline bool primitively_represents(const Lattice& l, const Integer& value) {
  bool found = false;
  enumerate_short_vectors(l, abs(value), [&](const std::vector<Integer>& v, const Integer& nv) {
    found |= nv == value && is_primitive(v);
  });
  return found;
}

// Sublattice of vectors orthogonal to the given ones (saturated, via SNF).
inline Lattice orthogonal_complement(const Lattice& l, const std::vector<std::vector<Integer>>& vs) {
  const std::size_t n = l.rank();
  ZMatrix m(vs.size(), n);
  for (std::size_t r = 0; r < vs.size(); ++r)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t k = 0; k < n; ++k)
        m(r, c) += vs[r][k] * l.gram()(k, c);
  const SmithForm snf = smith_normal_form(m);
  std::size_t rk = 0;
  for (const auto& d : snf.diagonal)
    rk += d != 0;
  ZMatrix basis(n, n - rk);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = rk; j < n; ++j)
      basis(i, j - rk) = snf.right(i, j);
  return Lattice::from_gram(basis.transpose() * l.gram() * basis);
}

// Isometry search for small definite lattices: images of basis vectors among
// vectors of the right norm with matching inner products; the image basis
// must be unimodular.  Returns the number of isometries found (up to limit).
inline long count_isometries(const Lattice& a, const Lattice& b, long limit = 0) {
  if (a.rank() != b.rank() || abs(a.determinant()) != abs(b.determinant()))
    return 0;
  const std::size_t n = a.rank();
  Integer maxnorm = 0;
  for (std::size_t i = 0; i < n; ++i)
    maxnorm = std::max(maxnorm, Integer(abs(a.gram()(i, i))));
  std::map<Integer, std::vector<std::vector<Integer>>> by_norm;
  enumerate_short_vectors(b, maxnorm, [&](const std::vector<Integer>& v, const Integer& nv) { by_norm[nv].push_back(v); });
  std::vector<std::vector<Integer>> img(n);
  long count = 0;
  auto inner = [&](const std::vector<Integer>& x, const std::vector<Integer>& y) {
    Integer s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        s += x[i] * b.gram()(i, j) * y[j];
    return s;
  };
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) {
      ZMatrix m(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          m(r, c) = img[c][r];
      const Integer dt = det(m);
      if (dt == 1 || dt == -1)
        ++count;
      return limit > 0 && count >= limit;
    }
    const auto it = by_norm.find(a.gram()(i, i));
    if (it == by_norm.end())
      return false;
    for (const auto& v : it->second) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = inner(v, img[j]) == a.gram()(i, j);
      if (!ok)
        continue;
      img[i] = v;
      if (self(self, i + 1))
        return true;
    }
    return false;
  };
  rec(rec, 0);
  return count;
}

inline bool isometric_definite(const Lattice& a, const Lattice& b) { return count_isometries(a, b, 1) > 0; }

} // namespace klein

#endif
