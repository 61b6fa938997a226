// Polynomials over a prime field, reduced Groebner bases (Buchberger with the
// sugar strategy and Gebauer-Moeller pair elimination), projective emptiness
// and the Jacobian smoothness test.

#ifndef KLEIN_GROEBNER_HPP_
#define KLEIN_GROEBNER_HPP_

#include "matrix.hpp"
#include "multipoly.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace klein {

constexpr std::size_t kMaxFVars = 32;

struct FMono {
  std::array<std::uint8_t, kMaxFVars> e{};
  std::uint16_t deg = 0;

  friend bool operator==(const FMono& a, const FMono& b) { return a.deg == b.deg && a.e == b.e; }
  friend bool operator!=(const FMono& a, const FMono& b) { return !(a == b); }
};

// grevlex: larger total degree first, then the smaller last differing exponent.
inline bool grevlex_greater(const FMono& a, const FMono& b) {
  if (a.deg != b.deg)
    return a.deg > b.deg;
  for (std::size_t i = kMaxFVars; i-- > 0;)
    if (a.e[i] != b.e[i])
      return a.e[i] < b.e[i];
  return false;
}

inline bool divides(const FMono& a, const FMono& b) {
  if (a.deg > b.deg)
    return false;
  for (std::size_t i = 0; i < kMaxFVars; ++i)
    if (a.e[i] > b.e[i])
      return false;
  return true;
}

inline FMono mono_mul(const FMono& a, const FMono& b) {
  FMono r;
  for (std::size_t i = 0; i < kMaxFVars; ++i) {
    const unsigned s = a.e[i] + b.e[i];
    if (s > 255)
      throw std::overflow_error("exponent overflow");
    r.e[i] = static_cast<std::uint8_t>(s);
  }
  r.deg = static_cast<std::uint16_t>(a.deg + b.deg);
  return r;
}

inline FMono mono_div(const FMono& a, const FMono& b) {
  FMono r;
  for (std::size_t i = 0; i < kMaxFVars; ++i)
    r.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
  r.deg = static_cast<std::uint16_t>(a.deg - b.deg);
  return r;
}

inline FMono mono_lcm(const FMono& a, const FMono& b) {
  FMono r;
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxFVars; ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    d += r.e[i];
  }
  r.deg = static_cast<std::uint16_t>(d);
  return r;
}

inline bool coprime(const FMono& a, const FMono& b) {
  for (std::size_t i = 0; i < kMaxFVars; ++i)
    if (a.e[i] && b.e[i])
      return false;
  return true;
}

class PrimeField {
public:
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2)
      throw std::invalid_argument("modulus must be prime");
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0)
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  }
  std::uint32_t p() const { return p_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    const std::uint64_t s = std::uint64_t(a) + b;
    return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(std::uint64_t(a) * b % p_);
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint64_t r = 1, b = a;
    while (e) {
      if (e & 1)
        r = r * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
  }
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0)
      throw std::domain_error("inverse of zero in F_p");
    return pow(a, p_ - 2);
  }
  std::uint32_t from_integer(const Integer& z) const {
    Integer r = z % p_;
    if (r < 0)
      r += p_;
    return static_cast<std::uint32_t>(r.get_ui());
  }
  std::uint32_t from_rational(const Rational& q) const {
    const std::uint32_t d = from_integer(q.get_den());
    if (d == 0)
      throw std::domain_error("denominator divisible by the prime");
    return mul(from_integer(q.get_num()), inv(d));
  }

private:
  std::uint32_t p_;
};

struct FTerm {
  FMono m;
  std::uint32_t c;
};

// Sparse polynomial, terms strictly decreasing in grevlex, nonzero coefficients.
class FPoly {
public:
  FPoly() = default;
  explicit FPoly(std::size_t nvars) : nvars_(nvars) {
    if (nvars > kMaxFVars)
      throw std::invalid_argument("too many variables");
  }

  std::size_t nvars() const { return nvars_; }
  const std::vector<FTerm>& terms() const { return t_; }
  std::vector<FTerm>& terms() { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  const FMono& lm() const { return t_.front().m; }
  std::uint32_t lc() const { return t_.front().c; }
  unsigned degree() const {
    unsigned d = 0;
    for (const auto& t : t_)
      d = std::max<unsigned>(d, t.m.deg);
    return d;
  }
  bool is_homogeneous() const {
    for (const auto& t : t_)
      if (t.m.deg != t_.front().m.deg)
        return false;
    return true;
  }

  static FPoly variable(std::size_t nvars, std::size_t i) {
    FPoly f(nvars);
    FMono m;
    m.e[i] = 1;
    m.deg = 1;
    f.t_.push_back({m, 1});
    return f;
  }

  // Terms in any order, possibly repeated; sorts and merges.
  static FPoly from_terms(std::size_t nvars, std::vector<FTerm> ts, const PrimeField& k) {
    std::sort(ts.begin(), ts.end(), [](const FTerm& a, const FTerm& b) { return grevlex_greater(a.m, b.m); });
    FPoly f(nvars);
    for (const auto& t : ts) {
      if (!f.t_.empty() && f.t_.back().m == t.m) {
        f.t_.back().c = k.add(f.t_.back().c, t.c);
        if (f.t_.back().c == 0)
          f.t_.pop_back();
      } else if (t.c != 0) {
        f.t_.push_back(t);
      }
    }
    return f;
  }

  friend bool operator==(const FPoly& a, const FPoly& b) {
    if (a.t_.size() != b.t_.size())
      return false;
    for (std::size_t i = 0; i < a.t_.size(); ++i)
      if (a.t_[i].m != b.t_[i].m || a.t_[i].c != b.t_[i].c)
        return false;
    return true;
  }

  std::string str(const std::vector<std::string>& names) const {
    if (t_.empty())
      return "0";
    std::string s;
    for (const auto& t : t_) {
      if (!s.empty())
        s += " + ";
      std::string mono;
      for (std::size_t i = 0; i < nvars_; ++i)
        if (t.m.e[i]) {
          if (!mono.empty())
            mono += "*";
          mono += names.at(i);
          if (t.m.e[i] > 1)
            mono += "^" + std::to_string(t.m.e[i]);
        }
      if (t.c != 1 || mono.empty())
        s += std::to_string(t.c) + (mono.empty() ? "" : "*");
      s += mono;
    }
    return s;
  }

private:
  std::size_t nvars_ = 0;
  std::vector<FTerm> t_;
};

inline FPoly fp_add(const FPoly& a, const FPoly& b, const PrimeField& k) {
  FPoly r(a.nvars());
  auto& out = r.terms();
  const auto &x = a.terms(), &y = b.terms();
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && grevlex_greater(x[i].m, y[j].m))) {
      out.push_back(x[i++]);
    } else if (i == x.size() || grevlex_greater(y[j].m, x[i].m)) {
      out.push_back(y[j++]);
    } else {
      const std::uint32_t c = k.add(x[i].c, y[j].c);
      if (c)
        out.push_back({x[i].m, c});
      ++i;
      ++j;
    }
  }
  return r;
}

// a - c * m * b
inline FPoly fp_sub_mul(const FPoly& a, std::uint32_t c, const FMono& m, const FPoly& b, const PrimeField& k,
                        std::size_t skip_a = 0, std::size_t skip_b = 0) {
  FPoly r(a.nvars());
  auto& out = r.terms();
  const auto &x = a.terms(), &y = b.terms();
  out.reserve(x.size() + y.size());
  std::size_t i = skip_a, j = skip_b;
  FMono ym;
  bool have = false;
  while (i < x.size() || j < y.size()) {
    if (j < y.size() && !have) {
      ym = mono_mul(m, y[j].m);
      have = true;
    }
    if (j == y.size() || (i < x.size() && grevlex_greater(x[i].m, ym))) {
      out.push_back(x[i++]);
    } else {
      const std::uint32_t v = k.neg(k.mul(c, y[j].c));
      if (i < x.size() && x[i].m == ym) {
        const std::uint32_t s = k.add(x[i].c, v);
        if (s)
          out.push_back({ym, s});
        ++i;
      } else if (v) {
        out.push_back({ym, v});
      }
      ++j;
      have = false;
    }
  }
  return r;
}

inline FPoly fp_scale(FPoly a, std::uint32_t c, const PrimeField& k) {
  if (c == 0)
    return FPoly(a.nvars());
  for (auto& t : a.terms())
    t.c = k.mul(t.c, c);
  return a;
}

inline FPoly fp_monic(FPoly a, const PrimeField& k) {
  if (a.is_zero())
    return a;
  return fp_scale(std::move(a), k.inv(a.lc()), k);
}

inline FPoly fp_mul(const FPoly& a, const FPoly& b, const PrimeField& k) {
  std::vector<FTerm> ts;
  ts.reserve(a.size() * b.size());
  for (const auto& x : a.terms())
    for (const auto& y : b.terms())
      ts.push_back({mono_mul(x.m, y.m), k.mul(x.c, y.c)});
  return FPoly::from_terms(a.nvars(), std::move(ts), k);
}

inline FPoly fp_derivative(const FPoly& a, std::size_t var, const PrimeField& k) {
  std::vector<FTerm> ts;
  for (const auto& t : a.terms()) {
    if (t.m.e[var] == 0)
      continue;
    FTerm d = t;
    d.c = k.mul(t.c, t.m.e[var] % k.p());
    --d.m.e[var];
    --d.m.deg;
    if (d.c)
      ts.push_back(d);
  }
  return FPoly::from_terms(a.nvars(), std::move(ts), k);
}

inline FPoly to_fpoly(const MultiPoly<Rational>& f, const PrimeField& k) {
  std::vector<FTerm> ts;
  for (const auto& [m, c] : f.terms()) {
    FMono fm;
    unsigned d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] > 255)
        throw std::overflow_error("exponent overflow");
      fm.e[i] = static_cast<std::uint8_t>(m[i]);
      d += m[i];
    }
    fm.deg = static_cast<std::uint16_t>(d);
    ts.push_back({fm, k.from_rational(c)});
  }
  return FPoly::from_terms(f.nvars(), std::move(ts), k);
}

class BudgetExhausted : public std::runtime_error {
public:
  explicit BudgetExhausted(const std::string& what) : std::runtime_error("budget exhausted: " + what) {}
};

struct GroebnerBudget {
  long max_pairs = 2000000;     // S-pairs reduced
  unsigned max_degree = 64;     // sugar degree of a selected pair
  double max_seconds = 0;       // wall clock per basis, 0 for none
};

struct GroebnerStats {
  long pairs_reduced = 0;
  long pairs_skipped = 0;
  long zero_reductions = 0;
  unsigned max_sugar = 0;
};

// Full reduction of f by the polynomials in `basis` (indices into store).
inline FPoly reduce_full(FPoly f, const std::vector<FPoly>& store, const std::vector<std::size_t>& basis,
                         const PrimeField& k) {
  FPoly done(f.nvars());
  while (!f.is_zero()) {
    const FTerm lead = f.terms().front();
    bool reduced = false;
    for (std::size_t idx : basis) {
      const FPoly& g = store[idx];
      if (!divides(g.lm(), lead.m))
        continue;
      const std::uint32_t c = k.mul(lead.c, k.inv(g.lc()));
      f = fp_sub_mul(f, c, mono_div(lead.m, g.lm()), g, k, 1, 1);
      reduced = true;
      break;
    }
    if (!reduced) {
      done.terms().push_back(lead);
      f.terms().erase(f.terms().begin());
    }
  }
  return done;
}

namespace impl {

struct Pair {
  std::size_t i, j;
  FMono lcm;
  unsigned sugar;
};

} // namespace impl

// Reduced Groebner basis, monic, sorted by increasing leading monomial.
inline std::vector<FPoly> groebner_basis(const std::vector<FPoly>& gens, const PrimeField& k,
                                         const GroebnerBudget& budget = {}, GroebnerStats* stats = nullptr) {
  GroebnerStats local;
  GroebnerStats& st = stats ? *stats : local;
  const auto t_start = std::chrono::steady_clock::now();
  std::vector<FPoly> store;
  std::vector<unsigned> sugar;
  std::vector<std::size_t> active;  // indices whose leading monomials are minimal so far
  std::vector<impl::Pair> pairs;
  auto insert = [&](FPoly h, unsigned s) {
    h = fp_monic(std::move(h), k);
    const std::size_t hi = store.size();
    store.push_back(std::move(h));
    sugar.push_back(s);
    const FMono& lh = store[hi].lm();
    // Gebauer-Moeller update.
    std::vector<impl::Pair> cand;
    for (std::size_t g : active) {
      const FMono l = mono_lcm(store[g].lm(), lh);
      const unsigned sg = std::max<unsigned>(sugar[g] + l.deg - store[g].lm().deg, s + l.deg - lh.deg);
      cand.push_back({g, hi, l, sg});
    }
    std::vector<bool> keep(cand.size(), true);
    // chain criterion among new pairs: drop (g,h) if lcm(g',h) properly divides lcm(g,h)
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (coprime(store[cand[a].i].lm(), lh))
        continue;
      for (std::size_t b = 0; b < cand.size(); ++b) {
        if (a == b || !keep[b])
          continue;
        if (divides(cand[b].lcm, cand[a].lcm) && (cand[b].lcm != cand[a].lcm || b < a)) {
          keep[a] = false;
          break;
        }
      }
    }
    // product criterion: among kept pairs with equal lcm, if any is coprime drop all of that lcm
    std::vector<impl::Pair> fresh;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (!keep[a]) {
        ++st.pairs_skipped;
        continue;
      }
      if (coprime(store[cand[a].i].lm(), lh)) {
        ++st.pairs_skipped;
        continue;
      }
      fresh.push_back(cand[a]);
    }
    // old pairs made redundant by h
    std::vector<impl::Pair> kept;
    for (const auto& p : pairs) {
      if (divides(lh, p.lcm) && mono_lcm(store[p.i].lm(), lh) != p.lcm && mono_lcm(store[p.j].lm(), lh) != p.lcm) {
        ++st.pairs_skipped;
        continue;
      }
      kept.push_back(p);
    }
    kept.insert(kept.end(), fresh.begin(), fresh.end());
    pairs.swap(kept);
    std::vector<std::size_t> next;
    for (std::size_t g : active)
      if (!divides(lh, store[g].lm()))
        next.push_back(g);
    next.push_back(hi);
    active.swap(next);
  };

  // Seed with the generators, each reduced by the previous ones.
  std::vector<FPoly> sorted;
  for (const auto& g : gens)
    if (!g.is_zero())
      sorted.push_back(g);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const FPoly& a, const FPoly& b) { return grevlex_greater(b.lm(), a.lm()); });
  for (auto& g : sorted) {
    const unsigned s = g.degree();
    FPoly r = reduce_full(g, store, active, k);
    if (!r.is_zero())
      insert(std::move(r), s);
  }

  while (!pairs.empty()) {
    // normal strategy with sugar: smallest sugar, then smallest lcm
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const impl::Pair& a, const impl::Pair& b) {
      if (a.sugar != b.sugar)
        return a.sugar < b.sugar;
      return grevlex_greater(b.lcm, a.lcm);
    });
    const impl::Pair p = *best;
    pairs.erase(best);
    if (p.sugar > budget.max_degree)
      throw BudgetExhausted("pair degree " + std::to_string(p.sugar) + " above " + std::to_string(budget.max_degree));
    if (++st.pairs_reduced > budget.max_pairs)
      throw BudgetExhausted("more than " + std::to_string(budget.max_pairs) + " pairs");
    if (budget.max_seconds > 0 &&
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count() > budget.max_seconds)
      throw BudgetExhausted("more than " + std::to_string(static_cast<long>(budget.max_seconds)) + " s");
    st.max_sugar = std::max(st.max_sugar, p.sugar);
    const FPoly& f = store[p.i];
    const FPoly& g = store[p.j];
    // S-polynomial of monic f, g
    FPoly left(f.nvars());
    const FMono mf = mono_div(p.lcm, f.lm());
    for (std::size_t t = 1; t < f.size(); ++t)
      left.terms().push_back({mono_mul(mf, f.terms()[t].m), f.terms()[t].c});
    FPoly s = fp_sub_mul(left, 1, mono_div(p.lcm, g.lm()), g, k, 0, 1);
    FPoly r = reduce_full(std::move(s), store, active, k);
    if (r.is_zero()) {
      ++st.zero_reductions;
      continue;
    }
    insert(std::move(r), p.sugar);
  }

  // Interreduce the minimal basis.
  std::vector<std::size_t> minimal = active;
  std::vector<FPoly> out;
  for (std::size_t a : minimal) {
    std::vector<std::size_t> others;
    for (std::size_t b : minimal)
      if (b != a)
        others.push_back(b);
    FPoly head(store[a].nvars());
    head.terms().push_back(store[a].terms().front());
    FPoly tail(store[a].nvars());
    tail.terms().assign(store[a].terms().begin() + 1, store[a].terms().end());
    tail = reduce_full(tail, store, others, k);
    out.push_back(fp_monic(fp_add(head, tail, k), k));
  }
  std::sort(out.begin(), out.end(), [](const FPoly& a, const FPoly& b) { return grevlex_greater(b.lm(), a.lm()); });
  return out;
}

inline FPoly normal_form(const FPoly& f, const std::vector<FPoly>& basis, const PrimeField& k) {
  std::vector<std::size_t> idx(basis.size());
  std::iota(idx.begin(), idx.end(), 0);
  return reduce_full(f, basis, idx, k);
}

// The affine cone is the origin iff every variable has a pure power among the
// leading monomials.
inline bool leading_ideal_zero_dimensional(const std::vector<FPoly>& gb, std::size_t nvars) {
  std::vector<bool> has(nvars, false);
  for (const auto& g : gb) {
    const FMono& m = g.lm();
    int nz = 0, var = -1;
    for (std::size_t i = 0; i < nvars; ++i)
      if (m.e[i]) {
        ++nz;
        var = static_cast<int>(i);
      }
    if (nz == 0)
      return true;  // unit ideal
    if (nz == 1)
      has[var] = true;
  }
  for (bool b : has)
    if (!b)
      return false;
  return true;
}

// Krull dimension of the affine cone: the largest set of variables such that
// no leading monomial is supported on it.
inline std::size_t affine_dimension(const std::vector<FPoly>& gb, std::size_t nvars) {
  std::vector<std::uint32_t> supports;
  for (const auto& g : gb) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (g.lm().e[i])
        mask |= 1u << i;
    if (mask == 0)
      return 0;
    supports.push_back(mask);
  }
  std::size_t best = 0;
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t chosen, std::size_t count) -> void {
    if (count + (nvars - i) <= best)
      return;
    if (i == nvars) {
      best = count;
      return;
    }
    const std::uint32_t with = chosen | (1u << i);
    bool ok = true;
    for (auto m : supports)
      if ((m & ~with) == 0) {
        ok = false;
        break;
      }
    if (ok)
      self(self, i + 1, with, count + 1);
    self(self, i + 1, chosen, count);
  };
  rec(rec, 0, 0, 0);
  return best;
}

inline bool projective_empty(const std::vector<FPoly>& gens, const PrimeField& k, const GroebnerBudget& budget = {},
                             GroebnerStats* stats = nullptr) {
  if (gens.empty())
    return false;
  for (const auto& g : gens)
    if (!g.is_homogeneous())
      throw std::invalid_argument("projective emptiness needs homogeneous generators");
  return leading_ideal_zero_dimensional(groebner_basis(gens, k, budget, stats), gens.front().nvars());
}

// Determinant of a small square matrix of polynomials by Laplace expansion.
inline FPoly fp_det(const std::vector<std::vector<FPoly>>& m, const PrimeField& k) {
  const std::size_t n = m.size();
  const std::size_t nv = m[0][0].nvars();
  if (n == 1)
    return m[0][0];
  if (n == 2)
    return fp_add(fp_mul(m[0][0], m[1][1], k), fp_scale(fp_mul(m[0][1], m[1][0], k), k.neg(1), k), k);
  FPoly s(nv);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero())
      continue;
    std::vector<std::vector<FPoly>> minor(n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (j != c)
          minor[i - 1].push_back(m[i][j]);
    FPoly t = fp_mul(m[0][c], fp_det(minor, k), k);
    s = fp_add(s, c % 2 ? fp_scale(t, k.neg(1), k) : t, k);
  }
  return s;
}

struct SmoothnessReport {
  bool smooth = false;
  std::size_t cone_dimension = 0;   // of V(I), affine cone
  bool dimension_ok = false;        // cone_dimension == nvars - codim
  std::size_t minors_total = 0;
  std::size_t minors_nonzero = 0;   // after reduction modulo the ideal
  std::size_t minors_used = 0;
  bool full_check = false;
  std::size_t basis_size = 0;
  GroebnerStats stats;
};

// Singular locus of V(I) for I of pure codimension c: I + (c x c Jacobian
// minors).  Minors are added in seeded random batches; emptiness with a
// subset already implies emptiness with all of them.  The criterion only
// applies when V(I) has the expected dimension, so that is checked first.
inline SmoothnessReport smoothness_check(const std::vector<FPoly>& gens, std::size_t codim, const PrimeField& k,
                                         const GroebnerBudget& budget = {}, std::uint64_t seed = 1,
                                         std::size_t batch = 48) {
  if (gens.empty() || codim == 0)
    throw std::invalid_argument("smoothness check needs generators and codim >= 1");
  for (const auto& g : gens)
    if (!g.is_homogeneous())
      throw std::invalid_argument("smoothness check needs homogeneous generators");
  const std::size_t nv = gens.front().nvars();
  if (codim > gens.size() || codim > nv)
    throw std::invalid_argument("codimension larger than the Jacobian");
  SmoothnessReport rep;
  const auto base = groebner_basis(gens, k, budget, &rep.stats);
  rep.cone_dimension = affine_dimension(base, nv);
  rep.dimension_ok = rep.cone_dimension == nv - codim;
  if (!rep.dimension_ok)
    return rep;
  std::vector<std::vector<FPoly>> jac(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < nv; ++j)
      jac[i].push_back(fp_derivative(gens[i], j, k));
  std::vector<FPoly> minors;
  std::vector<std::size_t> rows(codim), cols(codim);
  std::vector<std::vector<std::size_t>> row_sets, col_sets;
  auto choose = [](std::size_t n, std::size_t r) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
      if (cur.size() == r) {
        out.push_back(cur);
        return;
      }
      for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    return out;
  };
  row_sets = choose(gens.size(), codim);
  col_sets = choose(nv, codim);
  for (const auto& rs : row_sets)
    for (const auto& cs : col_sets) {
      std::vector<std::vector<FPoly>> sub(codim);
      for (std::size_t a = 0; a < codim; ++a)
        for (std::size_t b = 0; b < codim; ++b)
          sub[a].push_back(jac[rs[a]][cs[b]]);
      ++rep.minors_total;
      FPoly d = normal_form(fp_det(sub, k), base, k);
      if (!d.is_zero())
        minors.push_back(std::move(d));
    }
  rep.minors_nonzero = minors.size();
  std::mt19937_64 rng(seed);
  std::shuffle(minors.begin(), minors.end(), rng);
  std::vector<FPoly> ideal = base;
  std::size_t used = 0;
  while (true) {
    const std::size_t take = std::min(minors.size(), used + batch);
    for (; used < take; ++used)
      ideal.push_back(minors[used]);
    const auto gb = groebner_basis(ideal, k, budget, &rep.stats);
    rep.basis_size = gb.size();
    rep.minors_used = used;
    if (leading_ideal_zero_dimensional(gb, nv)) {
      rep.smooth = true;
      rep.full_check = used == minors.size();
      return rep;
    }
    if (used == minors.size()) {
      rep.full_check = true;
      rep.smooth = false;
      return rep;
    }
    ideal = gb;  // continue from the basis so far
  }
}

// Quadratic Pluecker relations of Gr(k, n) in coordinates p_S (S in
// lexicographic order): for |I| = k-1, |J| = k+1,
//   sum_l (-1)^l p_{I + j_l} p_{J - j_l} = 0.
// Duplicates and zero relations are removed; the result spans the degree-2
// part of the ideal.
inline std::vector<MultiPoly<Rational>> plucker_relations(int k, int n) {
  std::vector<std::vector<int>> ksets;
  {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
      if (static_cast<int>(cur.size()) == k) {
        ksets.push_back(cur);
        return;
      }
      for (int i = start; i < n; ++i) {
        cur.push_back(i);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
  }
  auto index_of = [&](std::vector<int> s, int& sign) -> int {
    sign = 1;
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = 0; b + 1 < s.size() - a; ++b) {
        if (s[b] == s[b + 1])
          return -1;
        if (s[b] > s[b + 1]) {
          std::swap(s[b], s[b + 1]);
          sign = -sign;
        }
      }
    for (std::size_t a = 0; a + 1 < s.size(); ++a)
      if (s[a] == s[a + 1])
        return -1;
    const auto it = std::lower_bound(ksets.begin(), ksets.end(), s);
    return static_cast<int>(it - ksets.begin());
  };
  const std::size_t nv = ksets.size();
  std::vector<std::vector<int>> isets, jsets;
  {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start, int size, std::vector<std::vector<int>>& out) -> void {
      if (static_cast<int>(cur.size()) == size) {
        out.push_back(cur);
        return;
      }
      for (int i = start; i < n; ++i) {
        cur.push_back(i);
        self(self, i + 1, size, out);
        cur.pop_back();
      }
    };
    rec(rec, 0, k - 1, isets);
    rec(rec, 0, k + 1, jsets);
  }
  std::vector<MultiPoly<Rational>> out;
  std::set<std::vector<std::pair<Monomial, Rational>>> seen;
  for (const auto& I : isets)
    for (const auto& J : jsets) {
      MultiPoly<Rational> rel(nv);
      for (int l = 0; l < k + 1; ++l) {
        std::vector<int> a = I;
        a.push_back(J[l]);
        std::vector<int> b;
        for (int t = 0; t < k + 1; ++t)
          if (t != l)
            b.push_back(J[t]);
        int sa, sb;
        const int ia = index_of(a, sa), ib = index_of(b, sb);
        if (ia < 0 || ib < 0)
          continue;
        Monomial m(nv, 0);
        ++m[ia];
        ++m[ib];
        rel.add_term(m, Rational((l % 2 ? -1 : 1) * sa * sb));
      }
      if (rel.is_zero())
        continue;
      // normalize sign so the leading coefficient is positive
      if (rel.terms().begin()->second < 0)
        rel = -rel;
      std::vector<std::pair<Monomial, Rational>> key(rel.terms().begin(), rel.terms().end());
      if (seen.insert(key).second)
        out.push_back(rel);
    }
  return out;
}

// Dimension of the Q-span of a list of polynomials.
inline std::size_t span_rank(const std::vector<MultiPoly<Rational>>& polys) {
  std::map<Monomial, std::size_t> cols;
  for (const auto& f : polys)
    for (const auto& [m, c] : f.terms())
      cols.emplace(m, 0);
  std::size_t j = 0;
  for (auto& [m, idx] : cols)
    idx = j++;
  if (polys.empty() || cols.empty())
    return 0;
  QMatrix a(polys.size(), cols.size());
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (const auto& [m, c] : polys[i].terms())
      a(i, cols.at(m)) = c;
  return rank(a);
}

} // namespace klein

#endif
