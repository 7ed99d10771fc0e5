// Acceptance run: one PASS/FAIL line per criterion, each with its time budget.

#include "qlie/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

using namespace qlie;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;

  // Requires at least one check whose name starts with prefix; all of them must hold.
  void need(const Report& r, const std::string& prefix) {
    std::size_t seen = 0;
    for (const auto& c : r.checks()) {
      if (c.name.rfind(prefix, 0) != 0) continue;
      ++seen;
      if (!c.holds) fail(r.title() + ": " + c.name + ": " + c.detail);
    }
    if (seen == 0) fail(r.title() + ": missing check '" + prefix + "'");
  }
  void need_all(const Report& r) {
    for (const auto& c : r.checks())
      if (c.asserted && !c.holds) fail(r.title() + ": " + c.name + ": " + c.detail);
  }
  void expect(bool holds, const std::string& what) {
    if (!holds) fail(what);
  }
  void fail(const std::string& why) {
    pass = false;
    if (note.empty()) note = why;
  }
};

Report single(const std::string& title, const std::string& name, const std::function<void(Check&)>& f) {
  Report r(title);
  r.run(name, true, f);
  return r;
}

struct Fixture {
  std::unique_ptr<Algebra> A;
  std::unique_ptr<QuantumLieAlgebra> Q;
  explicit Fixture(int n) : A(std::make_unique<Algebra>(n)), Q(std::make_unique<QuantumLieAlgebra>(*A, fundamental(1))) {}
};

struct Criterion {
  std::string title;
  double limit;
  std::function<void(Outcome&)> body;
};

std::vector<Criterion> criteria() {
  return {
      {"sl(2) bracket table", 1,
       [](Outcome& o) {
         Fixture f(2);
         o.need(suites::sl2_suite(*f.Q), "bracket table");
       }},
      {"sl(2) relations (XC) and the Casimir relation in U", 5,
       [](Outcome& o) {
         Fixture f(2);
         const Report r = suites::sl2_suite(*f.Q);
         o.need(r, "(XC)");
         o.need(r, "Casimir relation");
         o.need(r, "C2 commutes");
       }},
      {"sl(2) gamma' table and gamma^2 = ((q^2+q^-2)/(q^2-1+q^-2)) gamma", 1,
       [](Outcome& o) {
         Fixture f(2);
         const Report r = suites::sl2_suite(*f.Q);
         std::size_t lines = 0;
         for (const auto& c : r.checks()) lines += c.name.rfind("gamma' on", 0) == 0 ? 1 : 0;
         o.expect(lines == 8, "expected 8 gamma' lines");
         o.need(r, "gamma' on");
         o.need(r, "gamma^2 =");
       }},
      {"balancedness: asserted for sl(2), reported for sl(3)", 30,
       [](Outcome& o) {
         Fixture f2(2), f3(3);
         o.need(single("sl(2)", "right quantum Jacobi", [&](Check& c) { suites::check_jacobi(*f2.Q, true, c); }),
                "right quantum Jacobi");
         Check c;
         suites::check_jacobi(*f3.Q, true, c);
         o.note = std::string("sl(3) balanced: ") + (c.holds ? "holds" : "fails");
       }},
      {"sl(3) bracket table, 64 entries", 60,
       [](Outcome& o) {
         Fixture f(3);
         o.need(single("sl(3)", "bracket table", [&](Check& c) { suites::check_table(*f.Q, tables::sl3_brackets, c); }),
                "bracket table");
       }},
      {"ad C = (q^2-1+q^-2) id on L for n = 2, 3", 30,
       [](Outcome& o) {
         for (int n : {2, 3}) {
           Fixture f(n);
           o.need(single("n=" + std::to_string(n), "ad C", [&](Check& c) { suites::check_ad_casimir(*f.Q, c); }), "ad C");
         }
       }},
      {"centrality for n = 2, 3, 4 and K-relations for n = 3, 4", 120,
       [](Outcome& o) {
         for (int n : {2, 3, 4}) {
           Algebra A(n);
           o.need_all(suites::centrality(A));
           o.need(suites::centrality(A), "C commutes");
           if (n >= 3) {
             const Report k = suites::k_relations(A);
             o.need_all(k);
             o.need(k, "ad K1(X1) = (-q^3+q^-1) X1");
             o.need(k, "ad K2(X1) = (-q^2+1) X1");
           }
         }
       }},
      {"x_i x_j - sum sigma x_k x_l = C [x_i,x_j] for n = 2, 3", 120,
       [](Outcome& o) {
         for (int n : {2, 3}) {
           Fixture f(n);
           Check c;
           suites::check_product_identity(*f.Q, c);
           o.expect(c.holds, "n=" + std::to_string(n) + ": " + c.detail);
           const std::string pairs = std::to_string(f.Q->dim() * f.Q->dim()) + " pairs";
           o.expect(c.detail == pairs, "n=" + std::to_string(n) + ": expected " + pairs);
         }
       }},
      {"sl(3) gamma spectrum on certified highest-weight vectors", 60,
       [](Outcome& o) {
         Fixture f(3);
         const Report r = suites::sl3_suite(*f.Q);
         std::size_t hw = 0, eig = 0;
         for (const auto& c : r.checks()) {
           hw += c.name.find("is a highest-weight vector") != std::string::npos && c.holds ? 1 : 0;
           eig += c.name.rfind("gamma W", 0) == 0 && c.holds ? 1 : 0;
         }
         o.expect(hw == 6, "highest-weight certificates: " + std::to_string(hw) + "/6");
         o.expect(eig == 6, "eigen-assertions: " + std::to_string(eig) + "/6");
       }},
      {"diamond-lemma certificates and mutation control", 60,
       [](Outcome& o) {
         const Report r = suites::confluence_suite();
         o.need(r, "rules (Y) confluent");
         o.need(r, "U_q(sl2) rules confluent");
         o.need(r, "U_q(sl3) rules confluent");
         o.need(r, "mutated U_q(sl3) coefficient not confluent");
         o.need_all(r);
       }},
      {"dimensions of L and Lbar, degree <= 5 monomial independence", 120,
       [](Outcome& o) {
         for (int n : {2, 3, 4}) {
           Fixture f(n);
           o.need_all(suites::dimensions(*f.Q));
           o.expect(f.Q->dim() == static_cast<std::size_t>(n * n - 1), "dim L for n=" + std::to_string(n));
           o.expect(f.Q->dim_lbar() == static_cast<std::size_t>(n * n), "dim Lbar for n=" + std::to_string(n));
         }
         Fixture f(2);
         const Report r = suites::sl2_suite(*f.Q);
         o.need(r, "ordered monomials of degree <= 5 independent");
         for (const auto& c : r.checks())
           if (c.name.rfind("ordered monomials", 0) == 0) o.expect(c.detail == "rank 112 of 112", "monomials: " + c.detail);
       }},
      {"Hopf and ad property suites, 100 samples per law", 120,
       [](Outcome& o) {
         for (int n : {2, 3}) {
           Algebra A(n);
           const Report r = suites::hopf_suite(A, 100);
           o.need_all(r);
           for (const char* law : {"coassociativity: 100/100", "antipode law: 100/100", "ad(x y) = ad x o ad y: 100/100",
                                   "derivation law", "[x,[y,z]] = sum [[x1,y],[x2,z]]: 100/100",
                                   "[[x,y],z] = sum [x1,[y,[S(x2),z]]]: 100/100"}) {
             bool found = false;
             for (const auto& c : r.checks())
               found = found || (c.holds && (c.name + ": " + c.detail).find(law) != std::string::npos);
             o.expect(found, "sl(" + std::to_string(n) + "): " + law);
           }
         }
       }},
      {"q-conjugation antisymmetry and classical limit for n = 2, 3", 10,
       [](Outcome& o) {
         for (int n : {2, 3}) {
           Fixture f(n);
           o.need(single("n=" + std::to_string(n), "conjugation", [&](Check& c) { suites::check_conjugation(*f.Q, c); }),
                  "conjugation");
           o.need(single("n=" + std::to_string(n), "classical", [&](Check& c) { suites::check_classical_limit(*f.Q, c); }),
                  "classical");
         }
       }},
      {"sigma-bar braid relation for n = 2, sigma verdict reported", 60,
       [](Outcome& o) {
         Fixture f(2);
         o.need(single("n=2", "sigma-bar braid", [&](Check& c) { suites::check_braid(f.Q->sigma_bar(), f.Q->dim() + 1, c); }),
                "sigma-bar braid");
         Check c;
         suites::check_braid(f.Q->sigma(), f.Q->dim(), c);
         o.note = std::string("sigma braid: ") + (c.holds ? "holds" : "fails");
       }},
      {"printed X12* combination on the highest-weight line of L*", 60,
       [](Outcome& o) {
         Fixture f(3);
         const Report r = suites::sl3_suite(*f.Q);
         o.need(r, "q^{1/2}(q+q^-1) C X12 + q(q-q^-1) Y12");
         for (const auto& c : r.checks())
           if (c.name.rfind("X12* lies in the span", 0) == 0 && o.pass) o.note = c.detail;
       }},
  };
}

}  // namespace

int main() {
  const auto all = criteria();
  std::size_t passed = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      all[i].body(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= all[i].limit) o.fail("time " + std::to_string(secs) + " s exceeds " + std::to_string(all[i].limit) + " s");
    passed += o.pass ? 1 : 0;
    char t[64];
    std::snprintf(t, sizeof t, "%.3f s, limit %.0f s", secs, all[i].limit);
    std::cout << (o.pass ? "PASS " : "FAIL ") << i + 1 << ". " << all[i].title << " (" << t << ")";
    if (!o.note.empty()) std::cout << " -- " << o.note;
    std::cout << '\n';
  }
  std::cout << passed << "/" << all.size() << " criteria pass\n";
  return 0;
}
