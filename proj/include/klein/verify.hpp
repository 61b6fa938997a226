// Verification suites: every check recomputes an object from scratch and
// compares it with a fixture or a closed-form expectation.

#ifndef KLEIN_VERIFY_HPP_
#define KLEIN_VERIFY_HPP_

#include "epw.hpp"
#include "fixtures.hpp"
#include "gm_ideals.hpp"
#include "hermitian.hpp"
#include "lattice.hpp"
#include "polytext.hpp"
#include "rep.hpp"

#include <json.hpp>

#include <chrono>
#include <functional>
#include <string>
#include <vector>

namespace klein {

enum class Verdict { Pass, Fail, Skipped, BudgetExhausted };

inline const char* verdict_name(Verdict v) {
  switch (v) {
  case Verdict::Pass: return "pass";
  case Verdict::Fail: return "fail";
  case Verdict::Skipped: return "skipped";
  case Verdict::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

struct VerificationReport {
  std::string id;
  std::string statement;
  Verdict verdict = Verdict::Skipped;
  nlohmann::json witness = nlohmann::json::object();
  double elapsed = 0;

  nlohmann::json to_json(bool with_time = true) const {
    nlohmann::json j{{"id", id}, {"statement", statement}, {"verdict", verdict_name(verdict)}, {"witness", witness}};
    if (with_time)
      j["elapsed"] = elapsed;
    return j;
  }
};

// Malformed or missing fixture: a usage problem, not a verification failure.
class FixtureError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct VerifyOptions {
  std::vector<std::uint32_t> primes{32003, 65537};
  GroebnerBudget budget;
  std::uint64_t seed = 1;
  bool slow = false;
  double third_stratum_seconds = 1800;  // per prime, used when budget has no time cap
};

struct Outcome {
  Verdict verdict;
  nlohmann::json witness;
};

struct Check {
  std::string id;
  std::string statement;
  std::vector<std::string> suites;
  bool slow = false;
  std::function<Outcome(const VerifyOptions&)> run;
};

namespace impl {

inline Outcome ok(nlohmann::json w = nlohmann::json::object()) { return {Verdict::Pass, std::move(w)}; }
inline Outcome bad(nlohmann::json w) { return {Verdict::Fail, std::move(w)}; }

template <class F>
auto load_fixture(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const FixtureError&) {
    throw;
  } catch (const std::exception& e) {
    throw FixtureError(e.what());
  }
}

inline std::string monomial_str(const Monomial& m, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) {
      if (!s.empty())
        s += "*";
      s += names[i];
      if (m[i] > 1)
        s += "^" + std::to_string(m[i]);
    }
  return s.empty() ? "1" : s;
}

inline nlohmann::json poly_mismatch(const Sextic& expected, const Sextic& actual, const std::string& route) {
  const auto d = first_difference(actual, expected);
  if (!d)
    return nullptr;
  const auto names = indexed_names("x", static_cast<int>(expected.nvars()));
  return {{"route", route},
          {"monomial", monomial_str(*d, names)},
          {"expected", to_string(expected.coefficient(*d))},
          {"actual", to_string(actual.coefficient(*d))}};
}

inline Cyclo lambda_value(const std::string& text) {
  const auto f = parse_polynomial(text, std::vector<std::string>{"l"});
  if (f.total_degree() > 1)
    throw FixtureError("character value '" + text + "' is not linear in l");
  return f.evaluate(std::vector<Cyclo>{lambda_embed()});
}

inline RepFunctor functor_by_row(const std::string& row) {
  if (row == "chi0")
    return RepFunctor::Trivial;
  if (row == "xi")
    return RepFunctor::Xi;
  if (row == "xi_dual")
    return RepFunctor::XiDual;
  if (row == "wedge2_xi")
    return RepFunctor::Wedge2;
  throw FixtureError("unknown character row '" + row + "'");
}

inline long json_long(const nlohmann::json& j) {
  if (!j.is_string())
    throw FixtureError("expected an exact value as a string");
  return std::stol(j.get<std::string>());
}

inline Outcome multi_prime(const MultiPrimeVerdict& v, std::size_t min_primes) {
  nlohmann::json runs = nlohmann::json::array();
  for (const auto& r : v.runs)
    runs.push_back({{"prime", std::to_string(r.prime)},
                    {"value", r.value},
                    {"budget_exhausted", r.budget_exhausted},
                    {"basis_size", std::to_string(r.basis_size)},
                    {"note", r.note}});
  nlohmann::json w{{"runs", runs}};
  if (!v.complete()) {
    w["label"] = "inconclusive at primes " + v.primes_str();
    return {Verdict::BudgetExhausted, w};
  }
  if (!v.holds()) {
    w["label"] = "fails at primes " + v.primes_str();
    return bad(w);
  }
  w["label"] = "verified at primes " + v.primes_str();
  if (v.runs.size() < min_primes)
    w["caution"] = "fewer than " + std::to_string(min_primes) + " primes";
  return ok(w);
}

inline Lattice t11() { return Lattice::from_gram(ZMatrix{{-2, -1}, {-1, -6}}); }

} // namespace impl

inline std::vector<Check> all_checks() {
  using impl::bad;
  using impl::ok;
  using nlohmann::json;
  std::vector<Check> c;

  c.push_back({"epw.sextic", "the sextic of A computed by Bareiss and by interpolation equals the fixture expansion",
               {"fast", "epw"}, false, [](const VerifyOptions&) {
                 const Sextic fx = impl::load_fixture([] { return load_sextic(); });
                 const Sextic b = sextic_by_bareiss(build_A());
                 if (auto w = impl::poly_mismatch(fx, b, "bareiss"); !w.is_null())
                   return bad(w);
                 const Sextic i = sextic_by_interpolation(build_A());
                 if (auto w = impl::poly_mismatch(b, i, "interpolation"); !w.is_null())
                   return bad(w);
                 return ok({{"terms", std::to_string(b.size())}, {"leading", format_polynomial(Sextic::monomial(b.terms().begin()->first, b.terms().begin()->second))}});
               }});

  c.push_back({"group.closure", "xi(a), xi(c) and the Weil generator generate 660 elements in 8 classes of sizes 1,60,60,132,132,110,110,55",
               {"fast", "group"}, false, [](const VerifyOptions&) {
                 const auto& g = klein_group();
                 const auto t3 = impl::load_fixture([] { return load_json(fixture_path("table3.json")); });
                 json w{{"order", std::to_string(g.size())}};
                 if (g.size() != 660)
                   return bad(w);
                 const auto& labels = t3.at("classes");
                 for (std::size_t k = 0; k < labels.size(); ++k) {
                   const std::string lab = labels[k].get<std::string>();
                   const std::size_t rep = g.representative(lab);
                   if (rep == g.size())
                     return bad({{"class", lab}, {"problem", "not found"}});
                   const auto& cls = g.classes()[g.class_of(rep)];
                   const long size = impl::json_long(t3.at("sizes")[k]);
                   const long ord = impl::json_long(t3.at("orders")[k]);
                   if (static_cast<long>(cls.members.size()) != size || cls.order != ord)
                     return bad({{"class", lab},
                                 {"expected", {std::to_string(size), std::to_string(ord)}},
                                 {"actual", {std::to_string(cls.members.size()), std::to_string(cls.order)}}});
                 }
                 if (g.classes().size() != labels.size())
                   return bad({{"classes", std::to_string(g.classes().size())}});
                 return ok(w);
               }});

  c.push_back({"group.char-table", "rows chi0, xi, xi dual, wedge^2 xi of the character table; lambda^2 + lambda + 3 = 0",
               {"fast", "group"}, false, [](const VerifyOptions&) {
                 const auto& g = klein_group();
                 const Cyclo l = lambda_embed();
                 if (l * l + l + Cyclo(3) != Cyclo(0))
                   return bad({{"identity", "lambda^2 + lambda + 3"}, {"actual", (l * l + l + Cyclo(3)).str()}});
                 const auto t3 = impl::load_fixture([] { return load_json(fixture_path("table3.json")); });
                 const auto& labels = t3.at("classes");
                 std::size_t n = 0;
                 for (const auto& [row, values] : t3.at("rows").items()) {
                   const RepFunctor f = impl::functor_by_row(row);
                   for (std::size_t k = 0; k < labels.size(); ++k) {
                     const std::string lab = labels[k].get<std::string>();
                     const Cyclo expect = impl::load_fixture([&] { return impl::lambda_value(values.at(k).get<std::string>()); });
                     const Cyclo got = character(f, g[g.representative(lab)]);
                     ++n;
                     if (got != expect)
                       return bad({{"row", row}, {"class", lab}, {"expected", values.at(k)}, {"actual", got.str()}});
                   }
                 }
                 return ok({{"entries", std::to_string(n)}});
               }});

  c.push_back({"group.invariant-quadric", "Sym^2(wedge^2 xi) has a one-dimensional invariant space and the quadric Q is fixed by the generators",
               {"group"}, false, [](const VerifyOptions&) {
                 const long m = trivial_multiplicity(RepFunctor::Sym2Wedge2);
                 if (m != 1)
                   return bad({{"multiplicity", std::to_string(m)}});
                 const auto x5 = impl::load_fixture([] { return x5_ideal(); });
                 const auto q = to_cyclo(x5.gens.back());
                 const char* names[] = {"a", "c", "weil"};
                 const auto gens = standard_generators();
                 for (std::size_t i = 0; i < gens.size(); ++i)
                   if (!is_invariant_polynomial(q, apply_functor(RepFunctor::Wedge2, gens[i])))
                     return bad({{"generator", names[i]}});
                 return ok({{"multiplicity", "1"}, {"quadric", format_polynomial(x5.gens.back(), x5.names)}});
               }});

  c.push_back({"group.lefschetz", "fixed points on the surface Y^{>=2}: 5, 2, 3, 3 for elements of order 11, 5, 6, 3",
               {"fast", "group"}, false, [](const VerifyOptions&) {
                 const auto& g = klein_group();
                 const auto t1 = impl::load_fixture([] { return load_json(fixture_path("table1.json")); });
                 json got = json::object();
                 for (std::size_t k = 0; k < t1.at("classes").size(); ++k) {
                   if (t1.at("surface")[k].is_null())
                     continue;
                   const std::string lab = t1.at("classes")[k].get<std::string>();
                   const long expect = impl::json_long(t1.at("surface")[k]);
                   const long n = lefschetz_surface_count(g[g.representative(lab)]);
                   got[lab] = std::to_string(n);
                   if (n != expect)
                     return bad({{"class", lab}, {"expected", std::to_string(expect)}, {"actual", std::to_string(n)}});
                 }
                 return ok(got);
               }});

  c.push_back({"epw.strata", "l(e0) = 0, l(ei) = 2 for i = 1..5, dim(A meet wedge^3<e0..e4>) = 2, A meets wedge^3 V_xi trivially, A is Lagrangian and self-dual",
               {"fast", "epw"}, false, [](const VerifyOptions&) {
                 const Lagrangian a = build_A();
                 if (!is_lagrangian(a))
                   return bad({{"problem", "A is not Lagrangian"}});
                 if (!self_duality_check(a))
                   return bad({{"problem", "A is not self-dual"}});
                 json w = json::object();
                 for (int i = 0; i < 6; ++i) {
                   std::vector<Rational> e(6);
                   e[i] = 1;
                   const int l = stratum(a, e);
                   const int expect = i == 0 ? 0 : 2;
                   w["l(e" + std::to_string(i) + ")"] = std::to_string(l);
                   if (l != expect)
                     return bad({{"point", "e" + std::to_string(i)}, {"expected", std::to_string(expect)}, {"actual", std::to_string(l)}});
                 }
                 std::vector<Rational> u0(6), u5(6);
                 u0[0] = 1;
                 u5[5] = 1;
                 const int g5 = gm_dimension(a, u5), g0 = gm_dimension(a, u0);
                 w["gm_dimension(e5*)"] = std::to_string(g5);
                 w["gm_dimension(e0*)"] = std::to_string(g0);
                 if (g5 != 3 || g0 != 5)
                   return bad(w);
                 return ok(w);
               }});

  c.push_back({"epw.lines", "the sextic on <e0, e1+...+e5> is s^6 + 10s^3t^3 - 12st^5 + 5t^6 with double factor u^2 + u - 1; on the order-2 fixed line it has 6 simple roots",
               {"epw"}, false, [](const VerifyOptions&) {
                 const Sextic f = impl::load_fixture([] { return load_sextic(); });
                 std::vector<Rational> p(6), q(6, Rational(1));
                 p[0] = 1;
                 q[0] = 0;
                 const auto g = restrict_to_line(f, p, q);
                 MultiPoly<Rational> expect(2);
                 expect.add_term({6, 0}, 1);
                 expect.add_term({3, 3}, 10);
                 expect.add_term({1, 5}, -12);
                 expect.add_term({0, 6}, 5);
                 if (g != expect)
                   return bad({{"line", "order 5"}, {"expected", format_polynomial(expect, {"s", "t"})}, {"actual", format_polynomial(g, {"s", "t"})}});
                 const auto r5 = analyze_binary_form(g);
                 bool double_factor = false;
                 for (const auto& sf : r5.factors)
                   if (sf.multiplicity == 2 && sf.factor == UPoly<Rational>({-1, 1, 1}))
                     double_factor = true;
                 if (r5.distinct_roots != 4 || !double_factor)
                   return bad({{"line", "order 5"}, {"distinct_roots", std::to_string(r5.distinct_roots)}});
                 const auto& G = klein_group();
                 for (const auto& e : fixed_locus(G[G.representative("b3")])) {
                   if (e.dim() != 2)
                     continue;
                   const auto r2 = analyze_binary_form(restrict_to_line(f, e.basis.col(0), e.basis.col(1)));
                   if (r2.identically_zero || r2.distinct_roots != 6)
                     return bad({{"line", "order 2"}, {"distinct_roots", std::to_string(r2.distinct_roots)}});
                   return ok({{"order5", format_polynomial(g, {"s", "t"})}, {"order2_roots", "6"}});
                 }
                 return bad({{"line", "order 2"}, {"problem", "no fixed line"}});
               }});

  c.push_back({"epw.fixed-points", "fixed points on the fourfold Y: 5, 8, 7, 15 for elements of order 11, 5, 6, 3",
               {"epw"}, false, [](const VerifyOptions&) {
                 const Sextic f = impl::load_fixture([] { return load_sextic(); });
                 const auto t1 = impl::load_fixture([] { return load_json(fixture_path("table1.json")); });
                 const auto& g = klein_group();
                 json got = json::object();
                 for (std::size_t k = 0; k < t1.at("classes").size(); ++k) {
                   if (t1.at("fourfold")[k].is_null())
                     continue;
                   const std::string lab = t1.at("classes")[k].get<std::string>();
                   const long expect = impl::json_long(t1.at("fourfold")[k]);
                   const auto n = count_fixed_points(f, g[g.representative(lab)]);
                   got[lab] = std::to_string(n.total());
                   if (n.total() != expect || n.higher_dimensional != 0)
                     return bad({{"class", lab}, {"expected", std::to_string(expect)}, {"actual", std::to_string(n.total())}});
                 }
                 return ok(got);
               }});

  c.push_back({"epw.invariance", "the sextic is invariant under the three generators acting on V6",
               {"epw"}, false, [](const VerifyOptions&) {
                 const Sextic f = impl::load_fixture([] { return load_sextic(); });
                 const char* names[] = {"a", "c", "weil"};
                 const auto gens = standard_generators();
                 for (std::size_t i = 0; i < gens.size(); ++i)
                   if (!is_invariant_polynomial(f, extend_to_v6(gens[i])))
                     return bad({{"generator", names[i]}});
                 return ok();
               }});

  c.push_back({"lattice.discriminants", "discriminant forms of h-perp, S and the Picard assembly; norm-2 vectors of [[2,1],[1,6]]+(22); gluing isometries",
               {"lattice"}, false, [](const VerifyOptions&) {
                 const Lattice e8 = Lattice::e8_negative();
                 const Lattice hperp = direct_sum({Lattice::hyperbolic(), Lattice::hyperbolic(), e8, e8,
                                                   Lattice::rank1(-2), Lattice::rank1(-2)});
                 const auto dh = disc_group(hperp);
                 if (dh.orders() != std::vector<long>{2, 2})
                   return bad({{"lattice", "h-perp"}, {"disc", dh.str()}});
                 const Lattice s = direct_sum({e8, e8, impl::t11(), impl::t11()});
                 const auto ds = disc_group(s);
                 const FiniteQuadraticForm m2_11({11}, QMatrix{{make_rational(-2, 11)}}, 2);
                 if (!fqf_isomorphic(ds, direct_sum(m2_11, m2_11)))
                   return bad({{"lattice", "S"}, {"disc", ds.str()}});
                 const Lattice pic = direct_sum({Lattice::rank1(2), e8, e8, impl::t11(), impl::t11()});
                 const auto iso = isotropic_elements(disc_group(pic));
                 if (!iso.empty())
                   return bad({{"lattice", "Picard"}, {"isotropic", std::to_string(iso.size())}});
                 const Lattice hodge = direct_sum({Lattice::rank1(2), Lattice::rank1(2), e8, e8, impl::t11(), impl::t11()});
                 if (hodge.rank() != 22 || hodge.signature() != std::make_pair(2, 20))
                   return bad({{"lattice", "rank 22"}, {"rank", std::to_string(hodge.rank())}});
                 const Lattice l = direct_sum(Lattice::from_gram(ZMatrix{{2, 1}, {1, 6}}), Lattice::rank1(22));
                 const auto v2 = vectors_of_norm(l, 2);
                 const std::vector<Integer> e1{1, 0, 0}, me1{-1, 0, 0};
                 if (v2 != std::vector<std::vector<Integer>>{me1, e1})
                   return bad({{"lattice", "[[2,1],[1,6]]+(22)"}, {"norm2_count", std::to_string(v2.size())}});
                 const Lattice perp = orthogonal_complement(l, {e1});
                 if (!isometric_definite(perp, power(Lattice::rank1(22), 2)))
                   return bad({{"lattice", "complement"}, {"gram", perp.str()}});
                 const auto d22 = disc_group(power(Lattice::rank1(22), 2));
                 const long glue = count_fqf_isometries(d22.subform({{11, 0}, {0, 11}}),
                                                        disc_group(power(Lattice::rank1(-2), 2)));
                 if (glue != 2)
                   return bad({{"gluing_isometries", std::to_string(glue)}});
                 return ok({{"disc_hperp", dh.str()}, {"disc_S", ds.str()}, {"gluing_isometries", "2"}});
               }});

  c.push_back({"lattice.representability", "diag(-4,-4,-6,-8) represents every even value in [-200,-4] and not -2; diag(-4,-4,-4,-6,-8) primitively represents -d/4 for 8 | d, 8 < d <= 400",
               {"lattice"}, false, [](const VerifyOptions&) {
                 const Lattice l4 = Lattice::from_gram(ZMatrix::diagonal({-4, -4, -6, -8}));
                 if (represents(l4, -2))
                   return bad({{"value", "-2"}, {"problem", "represented"}});
                 const auto c4 = norm_census(l4, 200);
                 for (long v = -200; v <= -4; v += 2)
                   if (!c4.count(v))
                     return bad({{"value", std::to_string(v)}, {"problem", "not represented"}});
                 const Lattice l5 = Lattice::from_gram(ZMatrix::diagonal({-4, -4, -4, -6, -8}));
                 const auto c5 = norm_census(l5, 100);
                 for (long d = 16; d <= 400; d += 8) {
                   const auto it = c5.find(-d / 4);
                   if (it == c5.end() || it->second.second == 0)
                     return bad({{"d", std::to_string(d)}, {"problem", "not primitively represented"}});
                 }
                 return ok();
               }});

  c.push_back({"hermitian.mat10", "H' is Hermitian, positive definite of determinant 1; its induced form on wedge^2 equals the printed 10 x 10 matrix, also of determinant 1 and positive definite; P_j(I_10) = C(10,j)",
               {"hermitian"}, false, [](const VerifyOptions&) {
                 const HermMatrix h = impl::load_fixture([] { return load_quadint_matrix("hprime.json"); });
                 const HermMatrix m10 = impl::load_fixture([] { return load_quadint_matrix("mat10.json"); });
                 if (!is_hermitian(h))
                   return bad({{"matrix", "H'"}, {"problem", "not Hermitian"}});
                 if (herm_det(h) != 1 || !is_positive_definite(h))
                   return bad({{"matrix", "H'"}, {"det", to_string(herm_det(h))}});
                 const HermMatrix w = induced_wedge2(h);
                 if (auto mm = first_mismatch(m10, w))
                   return bad({{"matrix", "induced"}, {"row", std::to_string(mm->row)}, {"col", std::to_string(mm->col)},
                               {"expected", mm->expected.str()}, {"actual", mm->actual.str()}});
                 if (herm_det(w) != 1 || !is_positive_definite(w))
                   return bad({{"matrix", "induced"}, {"det", to_string(herm_det(w))}});
                 const auto p = polarization_invariants(HermMatrix::identity(10));
                 for (int j = 0; j <= 10; ++j)
                   if (p[j] != binomial(10, j))
                     return bad({{"polarization", std::to_string(j)}, {"actual", to_string(p[j])}});
                 return ok({{"det_Hprime", "1"}, {"det_induced", "1"}, {"entries_compared", "100"}});
               }});

  c.push_back({"group.invariant-form", "sum over G of conj(wedge^2 xi(g))^T wedge^2 xi(g) is invariant under the generators and positive definite",
               {"group"}, false, [](const VerifyOptions&) {
                 const CMatrix m = invariant_hermitian(RepFunctor::Wedge2);
                 if (!is_hermitian(m))
                   return bad({{"problem", "not Hermitian"}});
                 if (!is_invariant(m, RepFunctor::Wedge2, standard_generators()))
                   return bad({{"problem", "not invariant"}});
                 if (!is_positive_definite_hermitian(m))
                   return bad({{"problem", "not positive definite"}});
                 return ok({{"trace", trace(m).str()}});
               }});

  c.push_back({"groebner.decomposable", "P(A) does not meet Gr(3, V6): the Pluecker quadrics pulled back to A have no common projective zero",
               {"groebner"}, false, [](const VerifyOptions& o) {
                 const auto I = decomposable_ideal(build_A());
                 return impl::multi_prime(decide_at_primes(I, IdealQuestion::ProjectiveEmpty, o.primes, 0, o.budget, o.seed), 2);
               }});

  c.push_back({"groebner.x3-smooth", "the GM threefold cut out by the fixture equations is smooth of dimension 3",
               {"groebner"}, false, [](const VerifyOptions& o) {
                 const auto I = impl::load_fixture([] { return x3_ideal(); });
                 return impl::multi_prime(decide_at_primes(I, IdealQuestion::Smooth, o.primes, 4, o.budget, o.seed), 2);
               }});

  c.push_back({"groebner.x5-smooth", "the GM fivefold Gr(2,5) meet Q is smooth of dimension 5",
               {"groebner"}, true, [](const VerifyOptions& o) {
                 const auto I = impl::load_fixture([] { return x5_ideal(); });
                 return impl::multi_prime(decide_at_primes(I, IdealQuestion::Smooth, o.primes, 4, o.budget, o.seed), 2);
               }});

  c.push_back({"groebner.sixfold-smooth", "the GM sixfold x00^2 = Q over Gr(2,5) is smooth of dimension 6",
               {"groebner"}, true, [](const VerifyOptions& o) {
                 const auto I = impl::load_fixture([] { return sixfold_ideal(); });
                 return impl::multi_prime(decide_at_primes(I, IdealQuestion::Smooth, o.primes, 4, o.budget, o.seed), 2);
               }});

  c.push_back({"groebner.third-stratum", "Y^{>=3} is empty; with no decomposable vectors this makes Sing(Y_A) = Y^{>=2} a smooth surface",
               {"groebner"}, true, [](const VerifyOptions& o) {
                 MultiPrimeVerdict v;
                 json charts = json::array();
                 for (auto p : o.primes) {
                   GroebnerBudget b = o.budget;
                   if (b.max_seconds <= 0)
                     b.max_seconds = o.third_stratum_seconds;
                   const auto r = third_stratum_empty(build_A(), p, b);
                   PrimeVerdict pv;
                   pv.prime = p;
                   pv.value = r.empty;
                   pv.budget_exhausted = r.budget_exhausted;
                   pv.note = r.note;
                   pv.seconds = r.seconds;
                   v.runs.push_back(pv);
                   charts.push_back({{"prime", std::to_string(p)}, {"charts", std::to_string(r.charts.size())},
                                     {"note", r.note}});
                   if (r.budget_exhausted)
                     break;
                 }
                 auto out = impl::multi_prime(v, 2);
                 out.witness["charts"] = charts;
                 return out;
               }});

  return c;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> s{"fast", "lattice", "hermitian", "group", "epw", "groebner", "all"};
  return s;
}

inline bool in_suite(const Check& c, const std::string& suite) {
  if (suite == "all")
    return true;
  return std::find(c.suites.begin(), c.suites.end(), suite) != c.suites.end();
}

// Runs one check; a slow check is skipped unless opts.slow.  FixtureError
// propagates, any other exception becomes a failure with the message as witness.
inline VerificationReport run_check(const Check& c, const VerifyOptions& opts) {
  VerificationReport r;
  r.id = c.id;
  r.statement = c.statement;
  const auto t0 = std::chrono::steady_clock::now();
  if (c.slow && !opts.slow) {
    r.verdict = Verdict::Skipped;
    r.witness = {{"reason", "slow tier; enable with --slow"}};
  } else {
    try {
      const Outcome o = c.run(opts);
      r.verdict = o.verdict;
      r.witness = o.witness;
    } catch (const FixtureError&) {
      throw;
    } catch (const BudgetExhausted& e) {
      r.verdict = Verdict::BudgetExhausted;
      r.witness = {{"reason", e.what()}};
    } catch (const std::exception& e) {
      r.verdict = Verdict::Fail;
      r.witness = {{"error", e.what()}};
    }
  }
  r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline const Check& find_check(const std::string& id) {
  static const std::vector<Check> checks = all_checks();
  for (const auto& c : checks)
    if (c.id == id)
      return c;
  throw std::invalid_argument("unknown check '" + id + "'");
}

// Runs the checks of a suite in their fixed order.
inline std::vector<VerificationReport> run_suite(const std::string& suite, const VerifyOptions& opts,
                                                 const std::function<void(const VerificationReport&)>& on_report = {}) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw std::invalid_argument("unknown suite '" + suite + "'");
  std::vector<VerificationReport> out;
  for (const auto& c : all_checks()) {
    if (!in_suite(c, suite))
      continue;
    auto r = run_check(c, opts);
    if (on_report)
      on_report(r);
    out.push_back(std::move(r));
  }
  return out;
}

// Exit status of a suite: 0 iff every non-skipped check passed.
inline int suite_status(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (r.verdict == Verdict::Fail || r.verdict == Verdict::BudgetExhausted)
      return 1;
  return 0;
}

} // namespace klein

#endif
