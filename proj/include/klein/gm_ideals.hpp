// Ideals attached to the Klein Lagrangian: the GM threefold, fivefold and
// sixfold equations, and the decomposable vectors of A.  Verdicts over
// several primes.

#ifndef KLEIN_GM_IDEALS_HPP_
#define KLEIN_GM_IDEALS_HPP_

#include "epw.hpp"
#include "fixtures.hpp"
#include "groebner.hpp"
#include "polytext.hpp"

#include <chrono>
#include <string>
#include <vector>

namespace klein {

struct NamedIdeal {
  std::vector<std::string> names;
  std::vector<MultiPoly<Rational>> gens;

  std::size_t nvars() const { return names.size(); }
  std::vector<FPoly> over(const PrimeField& k) const {
    std::vector<FPoly> out;
    for (const auto& g : gens)
      out.push_back(to_fpoly(g, k));
    return out;
  }
};

// x01, x02, ..., x34
inline std::vector<std::string> pair_names_from_zero() {
  std::vector<std::string> v;
  for (int i = 0; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      v.push_back("x" + std::to_string(i) + std::to_string(j));
  return v;
}

inline std::vector<std::string> sixfold_names() {
  std::vector<std::string> v{"x00"};
  for (const auto& n : pair_names())
    v.push_back(n);
  return v;
}

inline NamedIdeal load_ideal(const std::string& path, std::vector<std::string> names) {
  NamedIdeal I{std::move(names), {}};
  I.gens = parse_polynomial_list(read_text_file(path), I.names);
  for (const auto& g : I.gens)
    if (g.is_zero())
      throw std::runtime_error(path + ": zero generator");
  return I;
}

// Solve the linear generators for their leading variables and substitute;
// the remaining variables keep their order.
inline NamedIdeal eliminate_linear(const NamedIdeal& in) {
  const std::size_t n = in.nvars();
  std::vector<MultiPoly<Rational>> linear, rest;
  for (const auto& g : in.gens)
    (g.is_homogeneous() && g.total_degree() == 1 ? linear : rest).push_back(g);
  QMatrix m(linear.size(), n);
  for (std::size_t r = 0; r < linear.size(); ++r)
    for (const auto& [mono, c] : linear[r].terms())
      for (std::size_t i = 0; i < n; ++i)
        if (mono[i])
          m(r, i) = c;
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots)
    is_pivot[p] = true;
  NamedIdeal out;
  std::vector<std::size_t> keep_index(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    if (!is_pivot[i]) {
      keep_index[i] = out.names.size();
      out.names.push_back(in.names[i]);
    }
  const std::size_t nk = out.names.size();
  std::vector<MultiPoly<Rational>> images(n, MultiPoly<Rational>(nk));
  for (std::size_t i = 0; i < n; ++i)
    if (!is_pivot[i])
      images[i] = MultiPoly<Rational>::variable(nk, keep_index[i]);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    // x_p = - sum_{free j} m(r, j) x_j
    MultiPoly<Rational> e(nk);
    for (std::size_t j = 0; j < n; ++j)
      if (!is_pivot[j] && m(r, j) != 0)
        e -= MultiPoly<Rational>::variable(nk, keep_index[j]).scaled(m(r, j));
    images[pivots[r]] = e;
  }
  for (const auto& g : rest) {
    auto h = g.substitute(images);
    if (!h.is_zero())
      out.gens.push_back(std::move(h));
  }
  return out;
}

inline NamedIdeal x3_ideal(const std::string& file = "x3.txt") {
  return eliminate_linear(load_ideal(fixture_path(file), pair_names_from_zero()));
}
inline NamedIdeal x5_ideal() { return load_ideal(fixture_path("x5.txt"), pair_names()); }
inline NamedIdeal sixfold_ideal() { return load_ideal(fixture_path("sixfold.txt"), sixfold_names()); }

// Gr(3,6) Pluecker quadrics evaluated on t = sum_m a_m * (row m of A).
inline NamedIdeal decomposable_ideal(const Lagrangian& a) {
  if (a.cols() != 20)
    throw std::invalid_argument("expected trivectors in 20 coordinates");
  const std::size_t nr = a.rows();
  NamedIdeal out;
  out.names = indexed_names("a", static_cast<int>(nr));
  // plucker_relations(3, 6) uses lexicographic triples
  std::vector<MultiPoly<Rational>> t;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k) {
        const int col = subset_index(6, {i, j, k});
        MultiPoly<Rational> f(nr);
        for (std::size_t m = 0; m < nr; ++m)
          if (a(m, col) != 0)
            f += MultiPoly<Rational>::variable(nr, m).scaled(a(m, col));
        t.push_back(f);
      }
  for (const auto& rel : plucker_relations(3, 6)) {
    auto q = rel.substitute(t);
    if (!q.is_zero())
      out.gens.push_back(std::move(q));
  }
  return out;
}

inline const std::vector<std::uint32_t>& default_primes() {
  static const std::vector<std::uint32_t> p{32003, 65537, 1000003};
  return p;
}

enum class IdealQuestion { ProjectiveEmpty, Smooth };

struct PrimeVerdict {
  std::uint32_t prime = 0;
  bool value = false;
  bool budget_exhausted = false;
  std::string note;
  std::size_t basis_size = 0;
  double seconds = 0;
};

struct MultiPrimeVerdict {
  std::vector<PrimeVerdict> runs;

  bool complete() const {
    for (const auto& r : runs)
      if (r.budget_exhausted)
        return false;
    return !runs.empty();
  }
  bool agree() const {
    for (const auto& r : runs)
      if (r.value != runs.front().value)
        return false;
    return true;
  }
  // true only if every prime finished and said yes
  bool holds() const {
    if (!complete())
      return false;
    for (const auto& r : runs)
      if (!r.value)
        return false;
    return true;
  }
  std::string primes_str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < runs.size(); ++i)
      s += (i ? ", " : "") + std::to_string(runs[i].prime);
    return s + "}";
  }
};

inline PrimeVerdict decide(const NamedIdeal& I, IdealQuestion q, std::uint32_t p, std::size_t codim,
                           const GroebnerBudget& budget, std::uint64_t seed) {
  PrimeVerdict v;
  v.prime = p;
  const auto t0 = std::chrono::steady_clock::now();
  const PrimeField k(p);
  try {
    const auto gens = I.over(k);
    if (q == IdealQuestion::ProjectiveEmpty) {
      const auto gb = groebner_basis(gens, k, budget);
      v.basis_size = gb.size();
      v.value = leading_ideal_zero_dimensional(gb, I.nvars());
    } else {
      const auto rep = smoothness_check(gens, codim, k, budget, seed);
      v.value = rep.smooth;
      v.basis_size = rep.basis_size;
      if (!rep.dimension_ok)
        v.note = "cone dimension " + std::to_string(rep.cone_dimension) + ", expected " +
                 std::to_string(I.nvars() - codim);
      else
        v.note = std::to_string(rep.minors_used) + " of " + std::to_string(rep.minors_nonzero) + " minors" +
                 (rep.full_check ? " (full)" : " (subsample)");
    }
  } catch (const BudgetExhausted& e) {
    v.budget_exhausted = true;
    v.note = e.what();
  }
  v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return v;
}

inline MultiPrimeVerdict decide_at_primes(const NamedIdeal& I, IdealQuestion q, const std::vector<std::uint32_t>& primes,
                                          std::size_t codim = 0, const GroebnerBudget& budget = {},
                                          std::uint64_t seed = 1) {
  MultiPrimeVerdict out;
  for (auto p : primes)
    out.runs.push_back(decide(I, q, p, codim, budget, seed));
  return out;
}

// v ^ alpha for alpha in A, as a 15 x 10 matrix of linear forms in v:
// m[q][r][i] is the coefficient of v_i in entry (q, r).  Its kernel at v is
// A meet (v ^ wedge^2 V6).
using LinearFormMatrix = std::vector<std::vector<std::array<Rational, 6>>>;

inline LinearFormMatrix wedge_map(const Lagrangian& a) {
  const auto& tri = triples6();
  LinearFormMatrix m(15, std::vector<std::array<Rational, 6>>(10));
  for (std::size_t r = 0; r < 10; ++r)
    for (std::size_t t = 0; t < 20; ++t) {
      if (a(r, t) == 0)
        continue;
      for (int i = 0; i < 6; ++i) {
        std::vector<int> merged;
        const int s = wedge_sign({i}, tri[t], &merged);
        if (s != 0)
          m[static_cast<std::size_t>(subset_index(6, merged))][r][static_cast<std::size_t>(i)] += s * a(r, t);
      }
    }
  return m;
}

// Incidence {(v, W) : W subset ker(v ^ .), dim W = 3} on the chart of
// Gr(3, 10) where W has a basis w_k with w_k restricted to `pivots` equal to
// the k-th unit vector.  Variables: the 21 free entries of w_0, w_1, w_2
// (z0..z20), then v0..v5.  Bihomogeneous of degree 1 in v.
inline std::vector<FPoly> third_stratum_chart(const LinearFormMatrix& m, const std::vector<int>& pivots,
                                              const PrimeField& k) {
  constexpr std::size_t nv = 27, v0 = 21;
  std::vector<FPoly> eqs;
  for (int w = 0; w < 3; ++w) {
    std::vector<int> var(10, -1), unit(10, 0);
    int z = 7 * w;
    for (int c = 0; c < 10; ++c) {
      const auto it = std::find(pivots.begin(), pivots.end(), c);
      if (it != pivots.end())
        unit[c] = (it - pivots.begin()) == w;
      else
        var[c] = z++;
    }
    for (std::size_t q = 0; q < 15; ++q) {
      std::vector<FTerm> ts;
      for (std::size_t r = 0; r < 10; ++r) {
        if (var[r] < 0 && !unit[r])
          continue;
        for (std::size_t i = 0; i < 6; ++i) {
          if (m[q][r][i] == 0)
            continue;
          FMono mono{};
          mono.e[v0 + i] = 1;
          mono.deg = 1;
          if (var[r] >= 0) {
            mono.e[static_cast<std::size_t>(var[r])] = 1;
            mono.deg = 2;
          }
          ts.push_back({mono, k.from_rational(m[q][r][i])});
        }
      }
      FPoly f = FPoly::from_terms(nv, std::move(ts), k);
      if (!f.is_zero())
        eqs.push_back(std::move(f));
    }
  }
  return eqs;
}

// Whether some power of each of the variables first..first+count-1 lies in
// the ideal with reduced basis gb, i.e. the zero set avoids {v != 0}.
inline bool contains_power_of_each(const std::vector<FPoly>& gb, std::size_t first, std::size_t count,
                                   const PrimeField& k, unsigned max_power = 32) {
  if (gb.empty())
    return false;
  const std::size_t nv = gb[0].nvars();
  for (std::size_t i = first; i < first + count; ++i) {
    bool found = false;
    FPoly pw = FPoly::variable(nv, i);
    const FPoly x = pw;
    for (unsigned d = 1; d <= max_power && !found; ++d) {
      found = normal_form(pw, gb, k).is_zero();
      pw = fp_mul(pw, x, k);
    }
    if (!found)
      return false;
  }
  return true;
}

struct ChartVerdict {
  std::vector<int> pivots;
  bool empty = false;
  std::size_t basis_size = 0;
  double seconds = 0;
};

struct ThirdStratumReport {
  std::uint32_t prime = 0;
  bool empty = false;
  bool budget_exhausted = false;
  std::string note;
  std::vector<ChartVerdict> charts;
  double seconds = 0;
};

// Y^{>=3} = {v : dim(A meet v ^ wedge^2 V6) >= 3}.  A point gives v != 0 and
// a 3-plane W in the kernel; some Pluecker coordinate of W is nonzero, so the
// pair lies on one of the 120 charts.  Each chart is empty iff its ideal
// contains a power of every v_i.  budget.max_seconds bounds the whole run.
inline ThirdStratumReport third_stratum_empty(const Lagrangian& a, std::uint32_t p, const GroebnerBudget& budget = {},
                                              std::size_t max_charts = 120) {
  ThirdStratumReport rep;
  rep.prime = p;
  const auto t0 = std::chrono::steady_clock::now();
  auto used = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); };
  const PrimeField k(p);
  const auto m = wedge_map(a);
  const auto all = subsets(10, 3);
  try {
    for (const auto& piv : all) {
      if (rep.charts.size() == max_charts)
        break;
      GroebnerBudget b = budget;
      if (budget.max_seconds > 0) {
        if (used() >= budget.max_seconds)
          throw BudgetExhausted("more than " + std::to_string(static_cast<long>(budget.max_seconds)) + " s");
        b.max_seconds = budget.max_seconds - used();
      }
      const auto c0 = used();
      const auto gb = groebner_basis(third_stratum_chart(m, piv, k), k, b);
      ChartVerdict cv{piv, contains_power_of_each(gb, 21, 6, k), gb.size(), 0};
      cv.seconds = used() - c0;
      rep.charts.push_back(cv);
      if (!cv.empty) {
        rep.note = "chart " + std::to_string(piv[0]) + std::to_string(piv[1]) + std::to_string(piv[2]) +
                   " not shown empty";
        rep.seconds = used();
        return rep;
      }
    }
    if (rep.charts.size() < all.size()) {
      rep.budget_exhausted = true;
      rep.note = "only " + std::to_string(rep.charts.size()) + " of " + std::to_string(all.size()) + " charts checked";
    } else {
      rep.empty = true;
      rep.note = "all " + std::to_string(all.size()) + " charts empty";
    }
  } catch (const BudgetExhausted& e) {
    rep.budget_exhausted = true;
    rep.note = std::string(e.what()) + " after " + std::to_string(rep.charts.size()) + " of " +
               std::to_string(all.size()) + " charts";
  }
  rep.seconds = used();
  return rep;
}

} // namespace klein

#endif
