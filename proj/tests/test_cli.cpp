#include <klein/fixtures.hpp>
#include <klein/polytext.hpp>

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

using namespace klein;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(KLEIN_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p)
    return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0)
    r.out.append(buf, n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::vector<json> json_lines(const std::string& s) {
  std::vector<json> out;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty())
      out.push_back(json::parse(line));
  return out;
}

std::string fixture(const std::string& name) { return std::string(KLEIN_FIXTURE_DIR) + "/" + name; }

class TempDir {
public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("klein-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter()++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

private:
  static int& counter() {
    static int c = 0;
    return c;
  }
  fs::path path_;
};

} // namespace

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(cli("").status, 2);
  EXPECT_EQ(cli("frobnicate").status, 2);
  EXPECT_EQ(cli("verify nosuchsuite").status, 2);
  EXPECT_EQ(cli("--seed notanumber verify fast").status, 2);
  EXPECT_EQ(cli("emit-sextic --route magic").status, 2);
  EXPECT_EQ(cli("fixed-points zz").status, 2);
  EXPECT_EQ(cli("stratum 0 0 0 0 0 0").status, 2);
  EXPECT_EQ(cli("stratum 1 2").status, 2);
  EXPECT_EQ(cli("lattice 'E9'").status, 2);
  EXPECT_EQ(cli("groebner /no/such/file").status, 2);
  EXPECT_EQ(cli("--budget-pairs 0 verify groebner").status, 2);
  EXPECT_EQ(cli("--help").status, 0);
}

TEST(Cli, EmitSexticJsonRoundTrip) {
  const auto r = cli("--json emit-sextic");
  ASSERT_EQ(r.status, 0);
  const auto j = json::parse(r.out);
  const auto names = j["variables"].get<std::vector<std::string>>();
  ASSERT_EQ(names.size(), 6u);
  const auto expected = load_sextic();
  EXPECT_EQ(parse_polynomial(j["polynomial"].get<std::string>(), names), expected);
  MultiPoly<Rational> from_terms(6);
  for (const auto& t : j["terms"]) {
    Monomial m;
    for (const auto& e : t["exponents"])
      m.push_back(static_cast<std::uint16_t>(std::stoul(e.get<std::string>())));
    ASSERT_TRUE(t["coefficient"].is_string());
    from_terms.add_term(m, Rational(t["coefficient"].get<std::string>()));
  }
  EXPECT_EQ(from_terms, expected);
  EXPECT_EQ(j["term_count"], std::to_string(expected.size()));
}

TEST(Cli, EmitSexticRoutesAgree) {
  const auto a = cli("emit-sextic --route bareiss");
  const auto b = cli("emit-sextic --route interpolation");
  const auto c = cli("emit-sextic --route fixture");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
}

TEST(Cli, CharTable) {
  const auto r = cli("--json char-table");
  ASSERT_EQ(r.status, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["group_order"], "660");
  EXPECT_EQ(j["rows"]["xi"][1]["pretty"], "λ");
  EXPECT_EQ(j["rows"]["xi"][2]["pretty"], "-1 - λ");
  EXPECT_EQ(j["rows"]["wedge2_xi"][7]["pretty"], "-2");
  EXPECT_EQ(j["rows"]["xi_dual"][0]["pretty"], "5");
  EXPECT_EQ(j["classes"][7]["size"], "55");
}

TEST(Cli, FixedPointsAndStratum) {
  auto j = json::parse(cli("--json fixed-points b").out);
  EXPECT_EQ(j["order"], "6");
  EXPECT_EQ(j["fourfold"]["total"], "7");
  EXPECT_EQ(j["surface"], "3");
  j = json::parse(cli("--json fixed-points c").out);
  EXPECT_EQ(j["fourfold"]["total"], "5");
  EXPECT_EQ(j["surface"], "5");
  j = json::parse(cli("--json stratum 0 0 1 0 0 0 --covector 0 0 0 0 0 1").out);
  EXPECT_EQ(j["stratum"], "2");
  EXPECT_EQ(j["sextic_value"], "0");
  EXPECT_EQ(j["gm_dimension"], "3");
  j = json::parse(cli("--json stratum 1 0 0 0 0 0").out);
  EXPECT_EQ(j["stratum"], "0");
}

TEST(Cli, Lattice) {
  const auto r = cli("--json lattice '[[2,1],[1,6]]+(22)' --norm 2 --represents 22");
  ASSERT_EQ(r.status, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["determinant"], "242");
  EXPECT_EQ(j["norm 2"].size(), 2u);
  EXPECT_TRUE(j["represents 22"]["primitive"].get<bool>());
  EXPECT_EQ(cli("lattice 'U+(2)' --norm 2").status, 2);
}

TEST(Cli, Hermitian) {
  const auto r = cli("--json hermitian");
  ASSERT_EQ(r.status, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["det"], "1");
  EXPECT_TRUE(j["matches_expected"].get<bool>());
  EXPECT_EQ(j["polarization"].size(), 6u);
}

TEST(Cli, GroebnerVerdicts) {
  auto r = cli("--json groebner " + fixture("x3.txt") + " --codim 6 --prime 32003 --prime 65537");
  ASSERT_EQ(r.status, 0) << r.out;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["verdict"], "smooth");
  EXPECT_EQ(j["primes"].size(), 2u);

  r = cli("--json groebner " + fixture("x3_corrupted.txt") + " --codim 6");
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(json::parse(r.out)["verdict"], "singular");

  TempDir d;
  const auto conic = (d.path() / "conic.txt").string();
  std::ofstream(conic) << "x*y - z^2;\n";
  EXPECT_EQ(cli("groebner " + conic + " --codim 1").status, 0);
  EXPECT_EQ(cli("groebner " + conic).status, 1);  // nonempty
  std::ofstream(conic) << "x^2; y^3; z;\n";
  EXPECT_EQ(json::parse(cli("--json groebner " + conic).out)["verdict"], "empty");
  r = cli("--json --budget-pairs 1 groebner " + fixture("x3.txt") + " --codim 6");
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(json::parse(r.out)["verdict"], "budget-exhausted");
  std::ofstream(conic) << "x*y + z;\n";
  EXPECT_EQ(cli("groebner " + conic).status, 2);  // not homogeneous
}

TEST(Cli, VerifyFastPasses) {
  const auto r = cli("--json verify fast");
  ASSERT_EQ(r.status, 0) << r.out;
  const auto lines = json_lines(r.out);
  ASSERT_FALSE(lines.empty());
  for (const auto& l : lines)
    EXPECT_EQ(l["verdict"], "pass") << l.dump();
}

TEST(Cli, VerifyGroebnerRejectsCorruptedFixture) {
  TempDir d;
  for (const auto& e : fs::directory_iterator(KLEIN_FIXTURE_DIR))
    fs::copy_file(e.path(), d.path() / e.path().filename());
  fs::copy_file(fixture("x3_corrupted.txt"), d.path() / "x3.txt", fs::copy_options::overwrite_existing);
  const auto r = cli("--json --fixture-dir " + d.path().string() + " verify groebner --prime 32003");
  EXPECT_EQ(r.status, 1);
  bool seen = false;
  for (const auto& l : json_lines(r.out)) {
    if (l["id"] != "groebner.x3-smooth")
      continue;
    seen = true;
    EXPECT_EQ(l["verdict"], "fail");
    ASSERT_TRUE(l["witness"].contains("runs"));
    EXPECT_FALSE(l["witness"]["runs"][0]["value"].get<bool>());
  }
  EXPECT_TRUE(seen);
}

TEST(Cli, MissingFixtureIsUsageError) {
  TempDir d;
  EXPECT_EQ(cli("--fixture-dir " + d.path().string() + " verify epw").status, 2);
}
