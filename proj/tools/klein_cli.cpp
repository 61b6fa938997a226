// klein-cli: command-line front end to the verification library.
//
// Exit status: 0 success, 1 verification failure (or negative verdict),
// 2 usage or input error.

#include <klein/epw.hpp>
#include <klein/fixtures.hpp>
#include <klein/gm_ideals.hpp>
#include <klein/hermitian.hpp>
#include <klein/lattice.hpp>
#include <klein/polytext.hpp>
#include <klein/rep.hpp>
#include <klein/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <regex>
#include <set>

using namespace klein;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2;

struct Globals {
  bool json_out = false;
  std::uint64_t seed = 1;
  long budget_pairs = 2000000;
  unsigned budget_degree = 64;
  double budget_seconds = 0;
  std::string fixture_dir;
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

void print_json(const json& j) { std::cout << j.dump() << "\n"; }

GroebnerBudget budget_of(const Globals& g) {
  GroebnerBudget b;
  b.max_pairs = g.budget_pairs;
  b.max_degree = g.budget_degree;
  b.max_seconds = g.budget_seconds;
  return b;
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& v, std::size_t n, const char* what) {
  if (v.size() != n)
    throw UsageError(std::string(what) + " needs " + std::to_string(n) + " coordinates");
  std::vector<Rational> out;
  for (const auto& s : v) {
    Rational r;
    if (r.set_str(s, 10) != 0 || r.get_den() == 0)
      throw UsageError("not a rational number: '" + s + "'");
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

// a + b*lambda when the value lies in Z[lambda] (or Q(lambda)).
std::optional<std::string> lambda_form(const Cyclo& v) {
  const Cyclo l = lambda_embed();
  const Cyclo d = l - l.conj();
  const Cyclo b = (v - v.conj()) * d.inverse();
  if (!b.is_rational())
    return std::nullopt;
  const Cyclo a = v - b * l;
  if (!a.is_rational())
    return std::nullopt;
  const Rational ar = a.to_rational(), br = b.to_rational();
  std::string s;
  if (ar != 0 || br == 0)
    s = to_string(ar);
  if (br != 0) {
    const Rational mag = br < 0 ? Rational(-br) : br;
    const std::string term = (mag == 1 ? "" : to_string(mag)) + "λ";
    if (s.empty())
      s = (br < 0 ? "-" : "") + term;
    else
      s += (br < 0 ? " - " : " + ") + term;
  }
  return s;
}

json cyclo_json(const Cyclo& v) {
  json coeffs = json::array();
  for (const auto& c : v.coeffs())
    coeffs.push_back(to_string(c));
  json j{{"conductor", std::to_string(v.conductor())}, {"coefficients", coeffs}};
  if (auto p = lambda_form(v))
    j["pretty"] = *p;
  else
    j["pretty"] = v.str();
  return j;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const Globals& g, const std::string& suite, const std::vector<std::uint32_t>& primes, bool slow) {
  VerifyOptions o;
  if (!primes.empty())
    o.primes = primes;
  o.budget = budget_of(g);
  o.seed = g.seed;
  o.slow = slow;
  for (auto p : o.primes)
    PrimeField check(p);  // rejects composite moduli up front
  const auto reports = run_suite(suite, o, [&](const VerificationReport& r) {
    if (g.json_out) {
      print_json(r.to_json());
    } else {
      std::cout << std::left << std::setw(17) << verdict_name(r.verdict) << std::setw(28) << r.id << " "
                << std::fixed << std::setprecision(2) << r.elapsed << " s  " << r.statement << "\n";
      if (r.verdict != Verdict::Pass && r.verdict != Verdict::Skipped)
        std::cout << "    witness: " << r.witness.dump() << "\n";
      else if (r.witness.contains("label"))
        std::cout << "    " << r.witness["label"].get<std::string>() << "\n";
    }
    std::cout.flush();
  });
  const int status = suite_status(reports);
  if (!g.json_out) {
    std::size_t pass = 0, skipped = 0;
    for (const auto& r : reports) {
      pass += r.verdict == Verdict::Pass;
      skipped += r.verdict == Verdict::Skipped;
    }
    std::cout << pass << " passed, " << (reports.size() - pass - skipped) << " not passed, " << skipped
              << " skipped\n";
  }
  return status;
}

// ---- emit-sextic -----------------------------------------------------------

int cmd_emit_sextic(const Globals& g, const std::string& route, const std::string& format) {
  Sextic f;
  if (route == "bareiss")
    f = sextic_by_bareiss(build_A());
  else if (route == "interpolation")
    f = sextic_by_interpolation(build_A());
  else
    f = load_sextic();
  const auto names = indexed_names("x", 6);
  const std::string text = format_polynomial(f, names);
  if (g.json_out || format == "json") {
    json terms = json::array();
    for (const auto& [m, c] : f.terms()) {
      json e = json::array();
      for (auto x : m)
        e.push_back(std::to_string(x));
      terms.push_back({{"exponents", e}, {"coefficient", to_string(c)}});
    }
    print_json({{"variables", names}, {"route", route}, {"term_count", std::to_string(f.size())},
                {"polynomial", text}, {"terms", terms}});
  } else {
    std::cout << text << "\n";
  }
  return kOk;
}

// ---- char-table ------------------------------------------------------------

int cmd_char_table(const Globals& g) {
  const auto& G = klein_group();
  const std::vector<std::string> labels{"1", "c", "c2", "a", "a2", "b", "b2", "b3"};
  const std::vector<std::pair<std::string, RepFunctor>> rows{{"chi0", RepFunctor::Trivial},
                                                             {"xi", RepFunctor::Xi},
                                                             {"xi_dual", RepFunctor::XiDual},
                                                             {"wedge2_xi", RepFunctor::Wedge2}};
  json classes = json::array();
  for (const auto& lab : labels) {
    const std::size_t rep = G.representative(lab);
    const auto& cls = G.classes()[G.class_of(rep)];
    classes.push_back({{"label", lab}, {"size", std::to_string(cls.members.size())}, {"order", std::to_string(cls.order)}});
  }
  json jr = json::object();
  for (const auto& [name, f] : rows) {
    json vals = json::array();
    for (const auto& lab : labels)
      vals.push_back(cyclo_json(character(f, G[G.representative(lab)])));
    jr[name] = vals;
  }
  if (g.json_out) {
    print_json({{"group_order", std::to_string(G.size())}, {"classes", classes}, {"rows", jr},
                {"lambda", "z + z^3 + z^4 + z^5 + z^9, z = exp(2 pi i / 11)"}});
    return kOk;
  }
  std::cout << std::left << std::setw(12) << "class";
  for (const auto& c : classes)
    std::cout << std::setw(9) << ("[" + c["label"].get<std::string>() + "]");
  std::cout << "\n" << std::setw(12) << "size";
  for (const auto& c : classes)
    std::cout << std::setw(9) << c["size"].get<std::string>();
  std::cout << "\n" << std::setw(12) << "order";
  for (const auto& c : classes)
    std::cout << std::setw(9) << c["order"].get<std::string>();
  std::cout << "\n";
  for (const auto& [name, f] : rows) {
    std::cout << std::setw(12) << name;
    for (const auto& v : jr[name]) {
      const std::string p = v["pretty"].get<std::string>();
      // pad by code points, the lambda sign is two bytes
      const std::size_t extra = p.find("λ") != std::string::npos ? 1 : 0;
      std::cout << std::setw(static_cast<int>(9 + extra)) << p;
    }
    std::cout << "\n";
  }
  std::cout << "λ = z + z^3 + z^4 + z^5 + z^9, λ^2 + λ + 3 = 0\n";
  return kOk;
}

// ---- fixed-points ----------------------------------------------------------

int cmd_fixed_points(const Globals& g, const std::string& label) {
  const auto& G = klein_group();
  const std::size_t rep = G.representative(label);
  if (rep == G.size())
    throw UsageError("unknown class '" + label + "' (use 1, c, c2, a, a2, b, b2, b3)");
  const auto& el = G[rep];
  const Sextic f = load_sextic();
  json j{{"class", label}, {"order", std::to_string(element_order(el))}};
  json spaces = json::array();
  for (const auto& e : fixed_locus(el))
    spaces.push_back({{"eigenvalue", e.eigenvalue.str()}, {"dimension", std::to_string(e.dim())}});
  j["eigenspaces"] = spaces;
  const int ord = element_order(el);
  if (ord > 2) {
    const auto n = count_fixed_points(f, el);
    j["fourfold"] = {{"isolated", std::to_string(n.isolated_on_sextic)},
                     {"on_fixed_lines", std::to_string(n.on_fixed_lines)},
                     {"total", std::to_string(n.total())}};
    j["surface"] = std::to_string(lefschetz_surface_count(el));
  } else {
    j["note"] = "positive-dimensional fixed locus";
  }
  if (g.json_out) {
    print_json(j);
  } else {
    std::cout << "class [" << label << "], order " << ord << "\n";
    for (const auto& s : spaces)
      std::cout << "  eigenvalue " << s["eigenvalue"].get<std::string>() << ": dimension " << s["dimension"].get<std::string>() << "\n";
    if (j.contains("fourfold"))
      std::cout << "  fixed points on Y: " << j["fourfold"]["total"].get<std::string>() << " ("
                << j["fourfold"]["isolated"].get<std::string>() << " isolated, "
                << j["fourfold"]["on_fixed_lines"].get<std::string>() << " on fixed lines)\n"
                << "  fixed points on Y^{>=2}: " << j["surface"].get<std::string>() << "\n";
    else
      std::cout << "  " << j["note"].get<std::string>() << "\n";
  }
  return kOk;
}

// ---- stratum ---------------------------------------------------------------

int cmd_stratum(const Globals& g, const std::vector<std::string>& point, const std::vector<std::string>& covector) {
  const Lagrangian a = build_A();
  json j = json::object();
  if (!point.empty()) {
    const auto x = parse_rationals(point, 6, "point");
    bool zero = true;
    for (const auto& c : x)
      zero &= c == 0;
    if (zero)
      throw UsageError("the zero vector is not a point");
    j["point"] = point;
    j["stratum"] = std::to_string(stratum(a, x));
    j["sextic_value"] = to_string(load_sextic().evaluate(x));
  }
  if (!covector.empty()) {
    const auto u = parse_rationals(covector, 6, "covector");
    j["covector"] = covector;
    j["gm_dimension"] = std::to_string(gm_dimension(a, u));
  }
  if (j.empty())
    throw UsageError("give a point (6 coordinates) and/or --covector");
  if (g.json_out) {
    print_json(j);
  } else {
    if (j.contains("stratum"))
      std::cout << "l(x) = " << j["stratum"].get<std::string>() << ", f(x) = " << j["sextic_value"].get<std::string>() << "\n";
    if (j.contains("gm_dimension"))
      std::cout << "GM dimension = " << j["gm_dimension"].get<std::string>() << "\n";
  }
  return kOk;
}

// ---- lattice ---------------------------------------------------------------

int cmd_lattice(const Globals& g, const std::string& spec, const std::vector<std::string>& norms,
                const std::vector<std::string>& reps) {
  Lattice l;
  try {
    l = parse_lattice_spec(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto [pos, neg] = l.signature();
  json j{{"spec", spec},
         {"rank", std::to_string(l.rank())},
         {"determinant", to_string(l.determinant())},
         {"signature", {std::to_string(pos), std::to_string(neg)}},
         {"even", l.is_even()}};
  const auto d = disc_group(l);
  json orders = json::array();
  for (long o : d.orders())
    orders.push_back(std::to_string(o));
  j["discriminant"] = {{"orders", orders}, {"form", d.str()}};
  const bool definite = l.is_positive_definite() || l.is_negative_definite();
  for (const auto& s : norms) {
    if (!definite)
      throw UsageError("--norm needs a definite lattice");
    const Integer v(s);
    json vs = json::array();
    for (const auto& x : vectors_of_norm(l, v)) {
      json e = json::array();
      for (const auto& c : x)
        e.push_back(to_string(c));
      vs.push_back(e);
    }
    j["norm " + s] = vs;
  }
  for (const auto& s : reps) {
    if (!definite)
      throw UsageError("--represents needs a definite lattice");
    const Integer v(s);
    j["represents " + s] = {{"any", represents(l, v)}, {"primitive", primitively_represents(l, v)}};
  }
  if (g.json_out)
    print_json(j);
  else
    std::cout << j.dump(2) << "\n";
  return kOk;
}

// ---- hermitian -------------------------------------------------------------

int cmd_hermitian(const Globals& g, const std::string& file, const std::string& expect_file) {
  const HermMatrix h = file.empty() ? load_quadint_matrix("hprime.json") : quadint_matrix_from_json(load_json(file));
  if (!is_hermitian(h))
    throw UsageError("matrix is not Hermitian");
  const HermMatrix w = induced_wedge2(h);
  json j{{"det", to_string(herm_det(h))}, {"positive_definite", is_positive_definite(h)},
         {"induced", {{"det", to_string(herm_det(w))}, {"positive_definite", is_positive_definite(w)},
                      {"rows", quadint_matrix_to_json(w)}}}};
  json pol = json::array();
  for (const auto& p : polarization_invariants(h))
    pol.push_back(to_string(p));
  j["polarization"] = pol;
  int status = kOk;
  const std::string cmp = expect_file.empty() && file.empty() ? fixture_path("mat10.json") : expect_file;
  if (!cmp.empty()) {
    const auto mm = first_mismatch(quadint_matrix_from_json(load_json(cmp)), w);
    j["matches_expected"] = !mm;
    if (mm) {
      j["mismatch"] = mm->str();
      status = kFail;
    }
  }
  if (g.json_out)
    print_json(j);
  else {
    std::cout << "det = " << j["det"].get<std::string>() << ", positive definite: " << j["positive_definite"] << "\n"
              << "induced form on wedge^2: det = " << j["induced"]["det"].get<std::string>()
              << ", positive definite: " << j["induced"]["positive_definite"] << "\n";
    if (j.contains("matches_expected"))
      std::cout << "matches expected matrix: " << j["matches_expected"]
                << (j.contains("mismatch") ? " (" + j["mismatch"].get<std::string>() + ")" : "") << "\n";
    std::cout << "P_j:";
    for (const auto& p : pol)
      std::cout << " " << p.get<std::string>();
    std::cout << "\n";
  }
  return status;
}

// ---- groebner --------------------------------------------------------------

std::vector<std::string> names_in_order(const std::string& text) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  std::string clean;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto h = line.find('#');
    clean += (h == std::string::npos ? line : line.substr(0, h)) + "\n";
  }
  static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
  for (auto it = std::sregex_iterator(clean.begin(), clean.end(), ident); it != std::sregex_iterator(); ++it)
    if (seen.insert(it->str()).second)
      out.push_back(it->str());
  return out;
}

int cmd_groebner(const Globals& g, const std::string& file, const std::string& vars,
                 const std::vector<std::uint32_t>& primes_in, int codim) {
  const std::string text = read_text_file(file);
  std::vector<std::string> names;
  if (vars.empty()) {
    names = names_in_order(text);
  } else {
    std::stringstream ss(vars);
    std::string v;
    while (std::getline(ss, v, ','))
      names.push_back(v);
  }
  if (names.empty() || names.size() > kMaxFVars)
    throw UsageError("between 1 and " + std::to_string(kMaxFVars) + " variables are supported");
  NamedIdeal I{names, parse_polynomial_list(text, names)};
  if (I.gens.empty())
    throw UsageError("no polynomials in " + file);
  for (const auto& f : I.gens)
    if (!f.is_homogeneous())
      throw UsageError("generators must be homogeneous");
  if (codim > 0) {
    // codim is taken in the original ambient space
    const std::size_t before = I.nvars();
    I = eliminate_linear(I);
    codim -= static_cast<int>(before - I.nvars());
    if (codim <= 0)
      throw UsageError("--codim is smaller than the number of independent linear generators");
  }
  const std::vector<std::uint32_t> primes = primes_in.empty() ? std::vector<std::uint32_t>{32003} : primes_in;
  for (auto p : primes)
    PrimeField check(p);
  const auto t0 = std::chrono::steady_clock::now();
  const bool smooth_q = codim > 0;
  const auto v = decide_at_primes(I, smooth_q ? IdealQuestion::Smooth : IdealQuestion::ProjectiveEmpty, primes,
                                  smooth_q ? static_cast<std::size_t>(codim) : 0, budget_of(g), g.seed);
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::string verdict;
  if (!v.complete())
    verdict = "budget-exhausted";
  else if (!v.agree())
    verdict = "primes-disagree";
  else if (smooth_q)
    verdict = v.holds() ? "smooth" : "singular";
  else
    verdict = v.holds() ? "empty" : "nonempty";
  json ps = json::array(), sizes = json::array(), notes = json::array();
  for (const auto& r : v.runs) {
    ps.push_back(std::to_string(r.prime));
    sizes.push_back(std::to_string(r.basis_size));
    notes.push_back(r.note);
  }
  const json j{{"verdict", verdict}, {"primes", ps}, {"basis_size", sizes}, {"elapsed", elapsed},
               {"variables", I.names}, {"notes", notes}};
  if (g.json_out)
    print_json(j);
  else
    std::cout << verdict << " at primes " << v.primes_str() << " (" << std::fixed << std::setprecision(2) << elapsed
              << " s)\n";
  return v.holds() ? kOk : kFail;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification toolkit for the Klein Lagrangian, its EPW sextic and the attached lattices"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json_out, "Machine-readable output (JSON lines)");
  app.add_option("--seed", g.seed, "Seed for randomized steps (minor subsampling, chart choice)");
  app.add_option("--budget-pairs", g.budget_pairs, "Cap on S-pairs reduced per Groebner basis")->check(CLI::PositiveNumber);
  app.add_option("--budget-degree", g.budget_degree, "Cap on the sugar degree of S-pairs")->check(CLI::PositiveNumber);
  app.add_option("--budget-seconds", g.budget_seconds, "Wall-clock cap per Groebner basis (0: none)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--fixture-dir", g.fixture_dir, "Directory holding the fixtures")->check(CLI::ExistingDirectory);

  std::string suite = "fast";
  std::vector<std::uint32_t> vprimes;
  bool slow = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "fast, lattice, hermitian, group, epw, groebner or all")
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--prime", vprimes, "Primes for the Groebner checks (repeatable)");
  verify->add_flag("--slow", slow, "Also run the slow Groebner tier");

  std::string route = "bareiss", format = "text";
  auto* emit = app.add_subcommand("emit-sextic", "Print the sextic of A in grevlex order");
  emit->add_option("--route", route, "bareiss, interpolation or fixture")
      ->check(CLI::IsMember({"bareiss", "interpolation", "fixture"}));
  emit->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  app.add_subcommand("char-table", "Print part of the character table of PSL(2,F11)");

  std::string label;
  auto* fixed = app.add_subcommand("fixed-points", "Fixed points of a group element on Y and Y^{>=2}");
  fixed->add_option("class", label, "Class label: 1, c, c2, a, a2, b, b2, b3")->required();

  std::vector<std::string> point, covector;
  auto* strat = app.add_subcommand("stratum", "Stratum of a point and GM dimension of a covector");
  strat->add_option("point", point, "Six coordinates x0 .. x5");
  strat->add_option("--covector", covector, "Six coordinates of a covector")->expected(6);

  std::string lspec;
  std::vector<std::string> norms, reps;
  auto* lat = app.add_subcommand("lattice", "Invariants of a lattice such as U+E8(-1)+(-2)+[[2,1],[1,6]]");
  lat->add_option("spec", lspec, "Lattice expression")->required();
  lat->add_option("--norm", norms, "List vectors of this norm (definite lattices)");
  lat->add_option("--represents", reps, "Test representation of this value (definite lattices)");

  std::string hfile, hexpect;
  auto* herm = app.add_subcommand("hermitian", "Hermitian form over Z[lambda] and its induced form on wedge^2");
  herm->add_option("--matrix", hfile, "JSON matrix of [a, b] pairs (default: H')")->check(CLI::ExistingFile);
  herm->add_option("--expect", hexpect, "JSON matrix the induced form should equal")->check(CLI::ExistingFile);

  std::string gfile, gvars;
  std::vector<std::uint32_t> gprimes;
  int codim = 0;
  auto* gro = app.add_subcommand("groebner", "Projective emptiness (default) or smoothness (--codim) of an ideal");
  gro->add_option("file", gfile, "Polynomials separated by ';' or blank lines")->required()->check(CLI::ExistingFile);
  gro->add_option("--vars", gvars, "Comma-separated variable order (default: order of appearance)");
  gro->add_option("--prime", gprimes, "Prime field characteristic (repeatable)");
  gro->add_option("--codim", codim, "Expected codimension of the cone in the ambient space; linear generators are eliminated first")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (!g.fixture_dir.empty())
    fixture_dir_override() = g.fixture_dir;

  try {
    if (*verify)
      return cmd_verify(g, suite, vprimes, slow);
    if (*emit)
      return cmd_emit_sextic(g, route, format);
    if (app.got_subcommand("char-table"))
      return cmd_char_table(g);
    if (*fixed)
      return cmd_fixed_points(g, label);
    if (*strat)
      return cmd_stratum(g, point, covector);
    if (*lat)
      return cmd_lattice(g, lspec, norms, reps);
    if (*herm)
      return cmd_hermitian(g, hfile, hexpect);
    if (*gro)
      return cmd_groebner(g, gfile, gvars, gprimes, codim);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const FixtureError& e) {
    std::cerr << "fixture error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
