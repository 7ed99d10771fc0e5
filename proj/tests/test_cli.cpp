#include "json.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string(QLIE_CLI) + " --quiet " + args + " 2>/dev/null";
  CliResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "qlie_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, TableTextSl2) {
  const CliResult r = run("table --n 2 --format text");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "[X+,X-] = (q+q^-1) X0")) << r.out;
  EXPECT_TRUE(contains(r.out, "[X0,X0] = (q-q^-1) X0")) << r.out;
}

TEST(Cli, TableLatexSl3) {
  const CliResult r = run("table --n 3 --format latex");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "\\begin{tabular}"));
  EXPECT_TRUE(contains(r.out, "T_{1}"));
}

TEST(Cli, TableJsonSl3) {
  const CliResult r = run("table --n 3 --format json");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("brackets").size(), 64u);
  bool found = false;
  for (const auto& b : j["brackets"])
    if (b["left"] == "X12" && b["right"] == "X-12") {
      found = true;
      EXPECT_EQ(b["result"]["T1"], "-q^-1");
      EXPECT_EQ(b["result"]["T2"], "1");
    }
  EXPECT_TRUE(found);
}

TEST(Cli, TableCsv) {
  const CliResult r = run("table --n 2 --format csv");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "X+"));
}

TEST(Cli, VerifySl2) {
  const CliResult r = run("verify --n 2 --checks axioms,sl2");
  EXPECT_EQ(r.status, 0) << r.out;
}

TEST(Cli, VerifySl3ReportsBalancedness) {
  const CliResult r = run("verify --n 3 --checks sl3 --format json");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.at("ok").get<bool>());
  bool reported = false;
  for (const auto& c : j.at("checks"))
    if (contains(c.at("name").get<std::string>(), "balanced")) reported = reported || c.at("kind") == "reported";
  EXPECT_TRUE(reported) << r.out;
}

TEST(Cli, CorruptedStructureConstantFails) {
  const CliResult r = run("verify --n 2 --checks axioms --corrupt-beta 0,1,2");
  EXPECT_EQ(r.status, 1);
  EXPECT_TRUE(contains(r.out, "fails")) << r.out;
  const auto j = nlohmann::json::parse(run("verify --n 2 --checks axioms --corrupt-beta 0,1,2 --format json").out);
  EXPECT_FALSE(j.at("ok").get<bool>());
}

TEST(Cli, VerifyOtherSuites) {
  EXPECT_EQ(run("verify --n 2 --checks k-relations,confluence").status, 0);
  EXPECT_EQ(run("verify --n 2 --checks hopf --samples 10").status, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("table --n 5").status, 2);
  EXPECT_EQ(run("table --n 2 --format pdf").status, 2);
  EXPECT_EQ(run("verify --n 2 --checks nonsense").status, 2);
  EXPECT_EQ(run("verify --n 2 --checks sl3").status, 2);
  EXPECT_EQ(run("export --n 2 --what highest-weights").status, 2);
  EXPECT_EQ(run("export --n 2 --what everything").status, 2);
  EXPECT_EQ(run("confluence --rules /nonexistent/rules.json").status, 2);
  EXPECT_EQ(run("").status, 2);
}

TEST(Cli, ExportCentralElement) {
  const CliResult r = run("export --n 2 --what central-element");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("terms").size(), 3u);
}

TEST(Cli, ExportHighestWeights) {
  const CliResult r = run("export --n 3 --what highest-weights");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("vectors").size(), 6u);
}

TEST(Cli, ExportIsDeterministic) {
  for (const char* what : {"basis", "central-element", "sigma", "sigma-bar", "gamma", "rules", "table"}) {
    const CliResult a = run(std::string("export --n 2 --what ") + what), b = run(std::string("export --n 2 --what ") + what);
    EXPECT_EQ(a.status, 0) << what;
    EXPECT_EQ(a.out, b.out) << what;
    EXPECT_TRUE(nlohmann::json::accept(a.out)) << what;
  }
}

TEST(Cli, ExportedRulesAreConfluent) {
  const auto path = scratch("sl2_rules.json");
  ASSERT_EQ(run("export --n 2 --what rules --output " + path.string()).status, 0);
  const CliResult r = run("confluence --rules " + path.string() + " --format json");
  EXPECT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(contains(j.dump(), "18 ambiguities")) << r.out;
}

TEST(Cli, NonConfluentRulesExitOne) {
  const auto path = scratch("broken_rules.json");
  ASSERT_EQ(run("export --n 3 --what rules --output " + path.string()).status, 0);
  nlohmann::json j;
  {
    std::ifstream in(path);
    in >> j;
  }
  // Scale the first coefficient of the first rule with two or more terms.
  for (auto& rule : j["rules"]) {
    if (rule["rhs"].size() < 2) continue;
    rule["rhs"][0]["coeff"] = "2*(" + rule["rhs"][0]["coeff"].get<std::string>() + ")";
    break;
  }
  {
    std::ofstream out(path);
    out << j.dump();
  }
  EXPECT_EQ(run("confluence --rules " + path.string()).status, 1);
}

TEST(Cli, ReportsAreDeterministic) {
  const CliResult a = run("verify --n 2 --checks sl2,axioms"), b = run("verify --n 2 --checks sl2,axioms");
  EXPECT_EQ(a.out, b.out);
}
