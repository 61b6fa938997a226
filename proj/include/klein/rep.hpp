// The 5-dimensional representation xi of PSL(2, F11) over Q(zeta_11): its
// generators, the 660-element matrix group, conjugacy classes, characters of
// derived representations, invariant Hermitian forms and stabilizers.

#ifndef KLEIN_REP_HPP_
#define KLEIN_REP_HPP_

#include "exterior.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace klein {

using GroupElement = CMatrix;

struct MatrixHash {
  std::size_t operator()(const CMatrix& m) const {
    std::size_t h = m.rows() * 31 + m.cols();
    for (const Cyclo& c : m.data())
      h = h * 1099511628211u ^ c.hash();
    return h;
  }
};

// xi(a): the 5-cycle e_i -> e_{i+1}.
inline GroupElement gen_a() {
  CMatrix m(5, 5);
  for (int j = 0; j < 5; ++j)
    m((j + 1) % 5, j) = Cyclo(1);
  return m;
}

// Exponent x of the basis vector e_{i+1} in the odd Weil model; xi(c) acts on
// it by zeta^{x^2}.
inline constexpr int kWeilLabels[5] = {1, 2, 4, 3, 5};

// xi(c) = diag(zeta, zeta^4, zeta^5, zeta^9, zeta^3).
inline GroupElement gen_c() {
  CMatrix m(5, 5);
  for (int i = 0; i < 5; ++i)
    m(i, i) = Cyclo::zeta(11, kWeilLabels[i] * kWeilLabels[i]);
  return m;
}

// Fourier-type generator of the odd Weil model, normalized by the Gauss sum
// 1 + 2 lambda = sqrt(-11).  The sign on e2 aligns the model's diagonal
// element (multiplication by 9 on F11, sending 1 to -2) with the pure
// permutation xi(a).
inline GroupElement weil_outside_borel() {
  const Cyclo g = Cyclo(1) + lambda_embed().scaled(2);
  const Cyclo ginv = g.inverse();
  const int sign[5] = {1, -1, 1, 1, 1};
  CMatrix s(5, 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      const long xy = kWeilLabels[i] * kWeilLabels[j];
      s(i, j) = (Cyclo::zeta(11, xy) - Cyclo::zeta(11, -xy)) * ginv * Cyclo(sign[i] * sign[j]);
    }
  if (det(s) != Cyclo(1))
    fail("Weil generator normalization does not have determinant 1");
  return s;
}

inline std::vector<GroupElement> standard_generators() {
  return {gen_a(), gen_c(), weil_outside_borel()};
}

struct ConjugacyClass {
  std::vector<std::size_t> members;
  int order = 0;
  Cyclo chi_xi;        // character value of the defining representation
  std::string label;   // "1", "c", "c2", "a", "a2", "b", "b2", "b3" when recognized
};

class GroupTable {
public:
  // Breadth-first closure; throws when more than `cap` matrices appear.
  static GroupTable generate(const std::vector<GroupElement>& gens, std::size_t cap = 1320) {
    if (gens.empty())
      throw std::invalid_argument("generate_group needs at least one generator");
    GroupTable t;
    t.gens_ = gens;
    const std::size_t n = gens.front().rows();
    t.add(CMatrix::identity(n));
    for (std::size_t head = 0; head < t.elements_.size(); ++head)
      for (const auto& s : gens) {
        CMatrix p = t.elements_[head] * s;
        if (!t.index_.count(p)) {
          if (t.elements_.size() >= cap)
            fail("closure exceeded cap of " + std::to_string(cap) + " elements");
          t.add(std::move(p));
        }
      }
    t.compute_orders();
    t.compute_classes();
    return t;
  }

  std::size_t size() const { return elements_.size(); }
  const GroupElement& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const std::vector<GroupElement>& generators() const { return gens_; }

  // Index of m, or size() if absent.
  std::size_t find(const CMatrix& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? size() : it->second;
  }
  bool contains(const CMatrix& m) const { return index_.count(m) > 0; }

  int order(std::size_t i) const { return orders_[i]; }
  std::size_t square(std::size_t i) const { return squares_[i]; }
  std::size_t inverse(std::size_t i) const { return inverses_[i]; }

  // Conjugacy classes as orbits under conjugation by the generators.
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  std::size_t class_of(std::size_t i) const { return class_of_[i]; }
  // Representative of the class with the given label, or size().
  std::size_t representative(const std::string& label) const {
    for (const auto& c : classes())
      if (c.label == label)
        return c.members.front();
    return size();
  }

private:
  void add(CMatrix m) {
    index_.emplace(m, elements_.size());
    elements_.push_back(std::move(m));
  }

  void compute_orders() {
    const std::size_t n = elements_.size();
    orders_.assign(n, 0);
    squares_.assign(n, n);
    inverses_.assign(n, n);
    const CMatrix id = CMatrix::identity(elements_.front().rows());
    for (std::size_t i = 0; i < n; ++i) {
      CMatrix p = elements_[i];
      squares_[i] = find(p * p);
      std::size_t prev = find(id);
      int k = 1;
      while (p != id) {
        prev = find(p);
        p = p * elements_[i];
        ++k;
      }
      orders_[i] = k;
      // g^{k-1} is the inverse; prev holds it unless g is the identity.
      inverses_[i] = k == 1 ? i : prev;
    }
  }

  void compute_classes() {
    const std::size_t n = elements_.size();
    class_of_.assign(n, n);
    std::vector<CMatrix> ginv;
    for (const auto& s : gens_)
      ginv.push_back(elements_[inverses_[find(s)]]);
    for (std::size_t i = 0; i < n; ++i) {
      if (class_of_[i] != n)
        continue;
      ConjugacyClass cls;
      const std::size_t id = classes_.size();
      std::vector<std::size_t> queue{i};
      class_of_[i] = id;
      for (std::size_t h = 0; h < queue.size(); ++h)
        for (std::size_t s = 0; s < gens_.size(); ++s) {
          const std::size_t j = find(gens_[s] * elements_[queue[h]] * ginv[s]);
          if (class_of_[j] == n) {
            class_of_[j] = id;
            queue.push_back(j);
          }
        }
      std::sort(queue.begin(), queue.end());
      cls.members = std::move(queue);
      cls.order = orders_[i];
      cls.chi_xi = trace(elements_[i]);
      classes_.push_back(std::move(cls));
    }
    label_classes();
  }

  // Names follow the 2x2 matrices a = diag(5, 9), c = [[1,1],[0,1]] and the
  // order-6 element b: the order and xi-character determine every class
  // except [a] versus [a^2], which is settled by membership of gen_a.
  void label_classes() {
    if (elements_.front().rows() != 5 || elements_.size() != 660 || !contains(gen_a()) ||
        !contains(gen_c()))
      return;
    const std::size_t ca = class_of_[find(gen_a())];
    const std::size_t cc = class_of_[find(gen_c())];
    for (std::size_t k = 0; k < classes_.size(); ++k) {
      ConjugacyClass& c = classes_[k];
      switch (c.order) {
      case 1: c.label = "1"; break;
      case 11: c.label = k == cc ? "c" : "c2"; break;
      case 5: c.label = k == ca ? "a" : "a2"; break;
      case 6: c.label = "b"; break;
      case 3: c.label = "b2"; break;
      case 2: c.label = "b3"; break;
      default: break;
      }
    }
  }

  std::vector<GroupElement> gens_;
  std::vector<GroupElement> elements_;
  std::unordered_map<CMatrix, std::size_t, MatrixHash> index_;
  std::vector<int> orders_;
  std::vector<std::size_t> squares_, inverses_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
};

inline GroupTable generate_group(const std::vector<GroupElement>& gens, std::size_t cap = 1320) {
  return GroupTable::generate(gens, cap);
}

// The full group G = PSL(2, F11) in the representation xi, built once.
inline const GroupTable& klein_group() {
  static const GroupTable t = generate_group(standard_generators());
  return t;
}

// Representations derived from xi.
enum class RepFunctor {
  Trivial,      // chi_0
  Xi,           // xi
  XiDual,       // xi dual, (M^-1)^T
  Wedge2,       // wedge^2 xi on (e12, e13, ..., e45)
  Sym2Wedge2,   // Sym^2(wedge^2 xi)
  EndWedge2,    // wedge^2 xi tensor its dual
  V6,           // chi_0 + xi on (e0, e1, ..., e5)
  Wedge3V6,     // wedge^3 (chi_0 + xi) on e_{ijk}, lexicographic
};

inline const char* functor_name(RepFunctor f) {
  switch (f) {
  case RepFunctor::Trivial: return "chi0";
  case RepFunctor::Xi: return "xi";
  case RepFunctor::XiDual: return "xi_dual";
  case RepFunctor::Wedge2: return "wedge2_xi";
  case RepFunctor::Sym2Wedge2: return "sym2_wedge2_xi";
  case RepFunctor::EndWedge2: return "end_wedge2_xi";
  case RepFunctor::V6: return "chi0_plus_xi";
  case RepFunctor::Wedge3V6: return "wedge3_V6";
  }
  return "?";
}

inline std::size_t functor_dimension(RepFunctor f) {
  switch (f) {
  case RepFunctor::Trivial: return 1;
  case RepFunctor::Xi:
  case RepFunctor::XiDual: return 5;
  case RepFunctor::Wedge2: return 10;
  case RepFunctor::Sym2Wedge2: return 55;
  case RepFunctor::EndWedge2: return 100;
  case RepFunctor::V6: return 6;
  case RepFunctor::Wedge3V6: return 20;
  }
  return 0;
}

// xi-hat(g) = 1 + xi(g) acting on V6.
inline CMatrix extend_to_v6(const CMatrix& g) {
  return block_diagonal(CMatrix::identity(1), g);
}

// F(g) as a matrix.
inline CMatrix apply_functor(RepFunctor f, const CMatrix& g) {
  switch (f) {
  case RepFunctor::Trivial: return CMatrix::identity(1);
  case RepFunctor::Xi: return g;
  case RepFunctor::XiDual: return inverse(g).transpose();
  case RepFunctor::Wedge2: return compound(g, 2);
  case RepFunctor::Sym2Wedge2: return symmetric_square(compound(g, 2));
  case RepFunctor::EndWedge2: {
    const CMatrix w = compound(g, 2);
    return kronecker(w, inverse(w).transpose());
  }
  case RepFunctor::V6: return extend_to_v6(g);
  case RepFunctor::Wedge3V6: return compound(extend_to_v6(g), 3);
  }
  throw std::logic_error("unknown functor");
}

// Trace of F(g) for g of finite order, without building large matrices.
// Finite order makes chi(g^-1) the complex conjugate of chi(g).
inline Cyclo character(RepFunctor f, const CMatrix& g) {
  switch (f) {
  case RepFunctor::Trivial: return Cyclo(1);
  case RepFunctor::Xi: return trace(g);
  case RepFunctor::XiDual: return trace(g).conj();
  case RepFunctor::Wedge2: return compound_trace(g, 2);
  case RepFunctor::Sym2Wedge2: {
    const CMatrix w = compound(g, 2);
    Cyclo t(0);
    for (std::size_t i = 0; i < w.rows(); ++i) {
      t += w(i, i) * w(i, i);
      for (std::size_t j = i + 1; j < w.rows(); ++j)
        t += w(i, i) * w(j, j) + w(i, j) * w(j, i);
    }
    return t;
  }
  case RepFunctor::EndWedge2: {
    const Cyclo t = compound_trace(g, 2);
    return t * t.conj();
  }
  case RepFunctor::V6: return Cyclo(1) + trace(g);
  case RepFunctor::Wedge3V6: return compound_trace(g, 3) + compound_trace(g, 2);
  }
  throw std::logic_error("unknown functor");
}

// (1/|G|) sum_g chi_F(g); must be a nonnegative integer.
inline long trivial_multiplicity(RepFunctor f, const GroupTable& table = klein_group()) {
  Cyclo s(0);
  for (const auto& g : table.elements())
    s += character(f, g);
  s = s.scaled(make_rational(1, static_cast<long>(table.size())));
  if (!s.is_rational() || !is_integer(s.to_rational()) || s.to_rational() < 0)
    fail("trivial multiplicity " + s.str() + " is not a nonnegative integer; broken table");
  return s.to_rational().get_num().get_si();
}

// M = sum_g conj(F(g))^T F(g).
inline CMatrix invariant_hermitian(RepFunctor f, const GroupTable& table = klein_group()) {
  const std::size_t d = functor_dimension(f);
  CMatrix m(d, d);
  for (const auto& g : table.elements()) {
    const CMatrix fg = apply_functor(f, g);
    m = m + fg.conj_transpose() * fg;
  }
  return m;
}

inline bool is_hermitian(const CMatrix& m) { return m == m.conj_transpose(); }

// conj(F(h))^T M F(h) == M for every generator h.
inline bool is_invariant(const CMatrix& m, RepFunctor f, const std::vector<GroupElement>& gens) {
  for (const auto& h : gens) {
    const CMatrix fh = apply_functor(f, h);
    if (fh.conj_transpose() * m * fh != m)
      return false;
  }
  return true;
}

// Leading principal minors of a Hermitian matrix are real; all must be
// positive rationals.
inline bool is_positive_definite_hermitian(const CMatrix& m) {
  for (const Cyclo& minor : leading_minors(m)) {
    if (!minor.is_rational() || minor.to_rational() <= 0)
      return false;
  }
  return true;
}

inline int element_order(const CMatrix& g, int cap = 10000) {
  const CMatrix id = CMatrix::identity(g.rows());
  CMatrix p = g;
  int k = 1;
  while (p != id) {
    if (++k > cap)
      fail("element order exceeds cap");
    p = p * g;
  }
  return k;
}

// 2 + 2 chi(g)^2 - chi(g^2) for chi the character of wedge^2 xi: the number of
// fixed points of g on the surface Y^{>=2}.  Identity and involutions have
// positive-dimensional fixed loci and are rejected.
inline long lefschetz_surface_count(const GroupElement& g) {
  const int ord = element_order(g);
  if (ord == 1 || ord == 2)
    fail("fixed locus may be positive-dimensional (element of order " + std::to_string(ord) + ")");
  const Cyclo c1 = character(RepFunctor::Wedge2, g);
  const Cyclo c2 = character(RepFunctor::Wedge2, g * g);
  const Cyclo n = Cyclo(2) + Cyclo(2) * c1 * c1 - c2;
  if (!n.is_rational() || !is_integer(n.to_rational()))
    fail("Lefschetz count is not an integer: " + n.str());
  return n.to_rational().get_num().get_si();
}

// Elements of the table whose V6-action maps the column span of `subspace`
// (a 6 x k matrix) to itself.
inline std::vector<std::size_t> stabilizer(const GroupTable& table, const CMatrix& subspace) {
  if (subspace.rows() != 6)
    throw std::invalid_argument("subspace of V6 expected (6 rows)");
  const std::size_t r = rank(subspace);
  if (r == 0)
    throw std::invalid_argument("zero subspace");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const CMatrix image = extend_to_v6(table[i]) * subspace;
    if (rank(subspace.hconcat(image)) == r)
      out.push_back(i);
  }
  return out;
}

} // namespace klein

#endif
