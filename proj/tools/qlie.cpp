// Command-line front end: bracket tables, verification suites, exports and
// confluence checks of JSON rule sets.
//
// Exit codes: 0 all asserted checks hold, 1 an asserted check failed,
// 2 usage or configuration error.

#include "qlie/io.hpp"
#include "qlie/qlie.hpp"
#include "qlie/suites.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <memory>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace qlie;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kChecks{"axioms", "k-relations", "sl2", "sl3", "confluence", "hopf"};

struct Options {
  int n = 2;
  std::string format = "text";
  std::string output;
  std::string checks;
  std::string what;
  std::string rules_file;
  std::string corrupt;
  long long step_budget = 0;
  bool parallel = false;
  bool quiet = false;
  bool timing = false;
  std::size_t samples = 100;
};

Progress progress_sink(const Options& o) {
  if (o.quiet) return {};
  return [](const std::string& s) { std::cerr << "[qlie] " << s << '\n'; };
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw UsageError("cannot write " + o.output);
  f << text;
}

void require_n(int n, int lo, int hi, const std::string& what) {
  if (n < lo || n > hi)
    throw UsageError(what + " supports n in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " + std::to_string(n));
}

// ---- table --------------------------------------------------------------------------

std::string latex_name(const std::string& nm) {
  if (nm.size() > 1 && (nm[0] == 'T' || nm[0] == 'X' || nm[0] == 'v')) return nm.substr(0, 1) + "_{" + nm.substr(1) + "}";
  return nm;
}

std::string latex_scalar(const std::string& s) { return std::regex_replace(s, std::regex(R"(\^(-?[0-9]+))"), "^{$1}"); }

std::string latex_combo(const QuantumLieAlgebra& Q, const std::vector<Scalar>& c) {
  std::string s;
  bool first = true;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    append_term(s, c[k], latex_name(Q.names()[k]), first);
    first = false;
  }
  return first ? "0" : latex_scalar(s);
}

std::string render_table(const QuantumLieAlgebra& Q, const std::string& format) {
  const std::size_t d = Q.dim();
  std::ostringstream out;
  if (format == "text") {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        out << "[" << Q.names()[i] << "," << Q.names()[j] << "] = " << Q.format(Q.beta()[i][j]) << '\n';
  } else if (format == "csv") {
    out << "left,right,bracket\n";
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        out << Q.names()[i] << ',' << Q.names()[j] << ",\"" << Q.format(Q.beta()[i][j]) << "\"\n";
  } else if (format == "latex") {
    out << "\\begin{tabular}{c|" << std::string(d, 'c') << "}\n";
    out << "$[X,Y]$";
    for (const auto& nm : Q.names()) out << " & $" << latex_name(nm) << "$";
    out << " \\\\\n\\hline\n";
    for (std::size_t i = 0; i < d; ++i) {
      out << "$" << latex_name(Q.names()[i]) << "$";
      for (std::size_t j = 0; j < d; ++j) out << " & $" << latex_combo(Q, Q.beta()[i][j]) << "$";
      out << " \\\\\n";
    }
    out << "\\end{tabular}\n";
  } else if (format == "json") {
    out << io::table_json(Q).dump(2) << '\n';
  } else {
    throw UsageError("unknown format " + format);
  }
  return out.str();
}

int cmd_table(const Options& o) {
  require_n(o.n, 2, 3, "table");
  const uq::Algebra A(o.n);
  const QuantumLieAlgebra Q(A, fundamental(1), progress_sink(o));
  emit(o, render_table(Q, o.format));
  return 0;
}

// ---- verify ---------------------------------------------------------------------------

std::vector<std::string> parse_checks(const std::string& list) {
  std::vector<std::string> want;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (std::find(kChecks.begin(), kChecks.end(), item) == kChecks.end()) throw UsageError("unknown check '" + item + "'");
    want.push_back(item);
  }
  if (want.empty()) throw UsageError("no checks selected");
  std::vector<std::string> ordered;
  for (const auto& c : kChecks)
    if (std::find(want.begin(), want.end(), c) != want.end()) ordered.push_back(c);
  return ordered;
}

std::array<std::size_t, 3> parse_triple(const std::string& s) {
  std::array<std::size_t, 3> t{};
  std::stringstream ss(s);
  std::string part;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!std::getline(ss, part, ',')) throw UsageError("--corrupt-beta needs i,j,k");
    t[i] = static_cast<std::size_t>(std::stoul(part));
  }
  return t;
}

Report run_check(const std::string& check, const Options& o) {
  const Progress p = progress_sink(o);
  if (check == "confluence") return suites::confluence_suite(o.parallel);
  const uq::Algebra A(o.n);
  if (check == "hopf") return suites::hopf_suite(A, o.samples);
  if (check == "k-relations") {
    Report r = suites::k_relations(A);
    r.merge(suites::centrality(A));
    return r;
  }
  QuantumLieAlgebra Q(A, fundamental(1), p);
  if (!o.corrupt.empty()) {
    const auto t = parse_triple(o.corrupt);
    if (t[0] >= Q.dim() || t[1] >= Q.dim() || t[2] >= Q.dim()) throw UsageError("--corrupt-beta index out of range");
    Q.corrupt_beta(t[0], t[1], t[2], Scalar(1));
  }
  if (check == "axioms") {
    Report r = suites::axioms(Q);
    r.merge(suites::dimensions(Q));
    return r;
  }
  if (check == "sl2") return suites::sl2_suite(Q);
  return suites::sl3_suite(Q);
}

int cmd_verify(const Options& o) {
  const auto checks = parse_checks(o.checks);
  if (o.format != "text" && o.format != "json") throw UsageError("verify supports --format text or json");
  for (const auto& c : checks) {
    if (c == "sl2" && o.n != 2) throw UsageError("check sl2 needs --n 2");
    if (c == "sl3" && o.n != 3) throw UsageError("check sl3 needs --n 3");
    if (c == "axioms") require_n(o.n, 2, 4, "axioms");
    if (c == "k-relations" || c == "hopf") require_n(o.n, 2, 4, c);
  }
  if (!o.corrupt.empty()) parse_triple(o.corrupt);
  std::vector<Report> reports(checks.size());
  if (o.parallel && checks.size() > 1) {
    std::vector<std::future<Report>> jobs;
    for (const auto& c : checks) jobs.push_back(std::async(std::launch::async, [&o, c] { return run_check(c, o); }));
    for (std::size_t i = 0; i < jobs.size(); ++i) reports[i] = jobs[i].get();
  } else {
    for (std::size_t i = 0; i < checks.size(); ++i) reports[i] = run_check(checks[i], o);
  }
  Report all("verify n=" + std::to_string(o.n));
  for (const auto& r : reports) all.merge(r);
  if (o.format == "json") {
    emit(o, all.to_json().dump(2) + "\n");
  } else {
    emit(o, all.to_text(o.timing));
  }
  return all.ok() ? 0 : 1;
}

// ---- export ----------------------------------------------------------------------------

int cmd_export(const Options& o) {
  static const std::vector<std::string> kinds{"basis", "central-element", "sigma", "sigma-bar", "gamma", "highest-weights", "rules", "table"};
  if (std::find(kinds.begin(), kinds.end(), o.what) == kinds.end()) throw UsageError("unknown export '" + o.what + "'");
  if (o.format != "text" && o.format != "json") throw UsageError("export writes JSON");
  if (o.what == "highest-weights") require_n(o.n, 3, 3, "highest-weights");
  require_n(o.n, 2, 4, "export");
  const uq::Algebra A(o.n);
  io::json j;
  if (o.what == "rules") {
    j = io::to_json(A.rules());
  } else {
    const QuantumLieAlgebra Q(A, fundamental(1), progress_sink(o));
    if (o.what == "basis") j = io::basis_json(Q);
    else if (o.what == "central-element") j = io::central_json(Q);
    else if (o.what == "sigma") j = io::matrix_json(Q, Q.sigma(), false);
    else if (o.what == "sigma-bar") j = io::matrix_json(Q, Q.sigma_bar(), true);
    else if (o.what == "gamma") j = io::matrix_json(Q, Q.gamma(), false);
    else if (o.what == "table") j = io::table_json(Q);
    else j = io::highest_weights_json(Q);
  }
  emit(o, j.dump(2) + "\n");
  return 0;
}

// ---- confluence of a rule file -------------------------------------------------------------

int cmd_confluence(const Options& o) {
  std::ifstream f(o.rules_file);
  if (!f) throw UsageError("cannot read " + o.rules_file);
  io::json j;
  rw::RuleSet rs;
  try {
    j = io::json::parse(f);
    rs = io::rules_from_json(j);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad rule file: ") + e.what());
  }
  const auto rep = rw::check_confluence(rs, o.parallel);
  Report r("confluence " + o.rules_file);
  r.assert_that("confluent", rep.confluent(),
                std::to_string(rep.ambiguities) + " ambiguities, " + std::to_string(rep.failures()) + " unresolved");
  for (const auto& v : rep.verdicts)
    if (!v.resolved) r.report("ambiguity " + v.word, false, v.error.empty() ? v.difference : v.error);
  emit(o, o.format == "json" ? r.to_json().dump(2) + "\n" : r.to_text(o.timing));
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum Lie algebras inside U_q(sl(n)): tables, checks and exports"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--step-budget", o.step_budget, "rewrite step budget (also QLIE_STEP_BUDGET)")->check(CLI::PositiveNumber);
  app.add_flag("--quiet", o.quiet, "no progress messages on stderr");

  auto* table = app.add_subcommand("table", "bracket table of sl(n)_q");
  table->add_option("--n", o.n, "rank plus one (2 or 3)")->required();
  table->add_option("--format", o.format, "text, json, csv or latex")->check(CLI::IsMember({"text", "json", "csv", "latex"}));
  table->add_option("--output", o.output, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--n", o.n, "rank plus one")->required();
  verify->add_option("--checks", o.checks, "comma list of axioms, k-relations, sl2, sl3, confluence, hopf")->required();
  verify->add_option("--format", o.format, "text or json");
  verify->add_option("--output", o.output, "report file (default stdout)");
  verify->add_option("--samples", o.samples, "samples per Hopf law")->check(CLI::PositiveNumber);
  verify->add_flag("--parallel", o.parallel, "run suites concurrently");
  verify->add_flag("--timing", o.timing, "include timings in the text report");
  verify->add_option("--corrupt-beta", o.corrupt, "i,j,k: add 1 to one structure constant")->group("");

  auto* exp = app.add_subcommand("export", "write an object as JSON");
  exp->add_option("--n", o.n, "rank plus one")->required();
  exp->add_option("--what", o.what, "basis, central-element, sigma, sigma-bar, gamma, highest-weights, rules, table")->required();
  exp->add_option("--format", o.format, "json");
  exp->add_option("--output", o.output, "output file (default stdout)");

  auto* conf = app.add_subcommand("confluence", "diamond-lemma check of a JSON rule set");
  conf->add_option("--rules", o.rules_file, "rule file as written by export --what rules")->required();
  conf->add_option("--format", o.format, "text or json");
  conf->add_option("--output", o.output, "report file (default stdout)");
  conf->add_flag("--parallel", o.parallel, "resolve ambiguities concurrently");
  conf->add_flag("--timing", o.timing, "include timings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (o.step_budget > 0) setenv("QLIE_STEP_BUDGET", std::to_string(o.step_budget).c_str(), 1);
    if (*table) return cmd_table(o);
    if (*verify) return cmd_verify(o);
    if (*exp) return cmd_export(o);
    return cmd_confluence(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const rw::StepBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise --step-budget)\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return 1;
  }
}
