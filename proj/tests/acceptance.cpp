// Acceptance suite: one line per criterion, nonzero exit on any failure.
// argv[1] must point at the setshare executable for the CLI contract.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "setsharing/abstract_unify.hpp"
#include "setsharing/abstraction.hpp"
#include "setsharing/laws.hpp"
#include "setsharing/parser.hpp"
#include "setsharing/printer.hpp"
#include "setsharing/unify.hpp"
#include "setsharing/vsubst.hpp"

using namespace setsharing;

namespace {

struct Checker {
  int failures = 0;
  void check(bool ok, const std::string& what) {
    if (!ok) {
      ++failures;
      std::printf("    failed: %s\n", what.c_str());
    }
  }
};

Term vt(Variable v) { return Term::var(v); }
Term c(const char* name) { return Term::make(name); }
Term mk(const char* name, std::vector<Term> args) {
  return Term::make(name, std::move(args));
}

VarSet vs(std::initializer_list<Variable> vars) {
  VarSet out;
  for (Variable v : vars) out.insert(v);
  return out;
}

SharingSet sh(std::initializer_list<VarSet> groups) {
  SharingSet out;
  for (const VarSet& s : groups) out.insert(s);
  return out;
}

// --- criterion 1: worked examples -------------------------------------------

void worked_examples(Checker& t) {
  const Variable x{0}, y{1}, z{2};
  const Variable x1{0}, x2{1}, x3{2}, x4{3};
  const VarSet U = vs({x1, x2, x3, x4});

  {  // The rational-trees unifier trace.
    Equation e{mk("p", {vt(z), mk("f", {vt(x), vt(y)})}),
               mk("p", {mk("f", {vt(z), vt(y)}), vt(z)})};
    UnifyResult r = unify({e}, EqualityMode::RationalTrees);
    t.check(r.solved() &&
                r.solution() == Substitution{Binding(z, mk("f", {vt(z), vt(y)})),
                                             Binding(x, vt(z))},
            "unifier trace");
  }

  {  // Rational-solved-form and idempotence classifications.
    auto cls = [](Substitution s) { return classify(s); };
    Classification c1 = cls({Binding(x, vt(y)), Binding(y, c("a"))});
    t.check(c1.is_rsubst && !c1.is_idempotent, "classification 1");
    Classification c2 = cls({Binding(x, c("a")), Binding(y, c("a"))});
    t.check(c2.is_rsubst && c2.is_idempotent, "classification 2");
    Classification c3 = cls({Binding(x, vt(y)), Binding(y, mk("g", {vt(y)}))});
    t.check(c3.is_rsubst && !c3.is_idempotent, "classification 3");
    Classification c4 = cls({Binding(x, vt(y)), Binding(y, mk("g", {vt(x)}))});
    t.check(c4.is_rsubst && !c4.is_idempotent, "classification 4");
    t.check(!classify({Binding(x, vt(y)), Binding(y, vt(x))}).is_rsubst,
            "classification 5");
    t.check(!classify({Binding(x, vt(y)), Binding(y, vt(x)), Binding(z, c("a"))})
                 .is_rsubst,
            "classification 6");
  }

  {  // Variable-idempotence classifications.
    t.check(is_var_idempotent({Binding(x, mk("f", {vt(x)}))}) &&
                !is_idempotent({Binding(x, mk("f", {vt(x)}))}),
            "variable-idempotence 1");
    t.check(!is_var_idempotent({Binding(x, mk("f", {vt(y)})), Binding(y, vt(z))}),
            "variable-idempotence 2");
    t.check(is_idempotent({Binding(x, mk("f", {vt(z)})), Binding(y, vt(z))}),
            "variable-idempotence 3");
    t.check(!is_var_idempotent(
                {Binding(x, vt(z)), Binding(y, mk("f", {vt(x), vt(y)}))}),
            "variable-idempotence 4");
    Substitution s5{Binding(x, vt(z)), Binding(y, mk("f", {vt(z), vt(y)}))};
    t.check(is_var_idempotent(s5) && !is_idempotent(s5), "variable-idempotence 5");
  }

  {  // The subset trap.
    Substitution s1{Binding(x1, vt(x2)), Binding(x2, mk("g", {vt(x3)})),
                    Binding(x3, mk("f", {vt(x3)}))};
    Substitution s2{Binding(x3, mk("f", {vt(x3)}))};
    Substitution s3{Binding(x1, vt(x2)), Binding(x2, mk("g", {vt(x3)}))};
    t.check(is_var_idempotent(s1), "subset trap whole");
    t.check(is_var_idempotent(s2), "subset trap part");
    t.check(!is_var_idempotent(s3), "subset trap difference");
  }

  {  // The three-pass rewriting example, verbatim.
    Substitution sigma0{Binding(x1, mk("f", {vt(x2)})),
                        Binding(x2, mk("g", {vt(x3), vt(x4)})),
                        Binding(x3, vt(x1))};
    Term gx34 = mk("g", {vt(x3), vt(x4)});
    Substitution sigma3{
        Binding(x1, mk("f", {mk("g", {mk("f", {gx34}), vt(x4)})})),
        Binding(x2, mk("g", {mk("f", {gx34}), vt(x4)})),
        Binding(x3, mk("f", {gx34}))};
    t.check(to_vsubst(sigma0) == sigma3, "rewriting transformation");
  }

  {  // Classical abstraction values.
    Substitution intro{Binding(x1, mk("f", {vt(x2), vt(x3)})), Binding(x4, c("a"))};
    t.check(alpha_classical(intro, U) ==
                SSElement::pair(sh({vs({x1, x2}), vs({x1, x3})}), U),
            "classical abstraction, ground and independent");

    SSElement all_free =
        SSElement::pair(sh({vs({x1}), vs({x2}), vs({x3}), vs({x4})}), U);
    t.check(alpha_classical(Substitution{}, U) == all_free,
            "classical abstraction of the empty substitution");
    t.check(alpha_classical_unchecked({Binding(x1, mk("f", {vt(x1)}))}, U) ==
                all_free,
            "classical abstraction is blind to the loop");

    SSElement pairs34 =
        SSElement::pair(sh({vs({x1}), vs({x2}), vs({x3, x4})}), U);
    t.check(alpha_classical({Binding(x3, vt(x4))}, U) == pairs34,
            "classical abstraction of one alias");
    t.check(alpha_classical_unchecked({Binding(x1, vt(x2)), Binding(x2, vt(x3)),
                                       Binding(x3, vt(x4))},
                                      U) == pairs34,
            "classical abstraction is blind to the chain");
    t.check(alpha_classical({Binding(x1, vt(x4)), Binding(x2, vt(x4)),
                             Binding(x3, vt(x4))},
                            U) == SSElement::pair(sh({vs({x1, x2, x3, x4})}), U),
            "classical abstraction of the funnel");
  }

  {  // The occurrence chain.
    Substitution sigma0{Binding(x1, mk("f", {vt(x2)})),
                        Binding(x2, mk("g", {vt(x3), vt(x4)})),
                        Binding(x3, vt(x1))};
    t.check(occ_n(sigma0, x4, 0) == vs({x4}), "occurrence level 0");
    t.check(occ_n(sigma0, x4, 1) == vs({x2, x4}), "occurrence level 1");
    t.check(occ_n(sigma0, x4, 2) == vs({x1, x2, x4}), "occurrence level 2");
    t.check(occ_n(sigma0, x4, 3) == vs({x1, x2, x3, x4}), "occurrence level 3");
    t.check(occ(sigma0, x4) == vs({x1, x2, x3, x4}), "occurrence limit");
    bool domains_empty = occ(sigma0, x1).empty() && occ(sigma0, x2).empty() &&
                         occ(sigma0, x3).empty();
    t.check(domains_empty, "occurrence on domain variables");
    Substitution sigma3 = to_vsubst(sigma0);
    t.check(occ_n(sigma3, x4, 1) == vs({x1, x2, x3, x4}) &&
                occ(sigma3, x4) == occ_n(sigma3, x4, 1),
            "occurrence after normalization");

    t.check(alpha(sigma0, U) == SSElement::pair(sh({vs({x1, x2, x3, x4})}), U),
            "abstraction of the chained substitution");
    Substitution ground{Binding(x1, mk("f", {vt(x1)})), Binding(x2, vt(x1)),
                        Binding(x3, vt(x1)), Binding(x4, vt(x2))};
    t.check(alpha(ground, U) == SSElement::pair({}, U),
            "abstraction of the fully ground substitution");
  }
}

// --- criterion 5: the CLI contract -------------------------------------------

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& cli, const std::string& args) {
  CliResult result;
  std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return result;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.out.append(buffer, n);
  }
  int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

std::vector<std::string>& temp_files() {
  static std::vector<std::string> files;
  return files;
}

std::string write_temp(const std::string& name, const std::string& contents) {
  std::string path = "/tmp/setshare_accept_" + std::to_string(getpid()) + "_" + name;
  std::ofstream out(path);
  out << contents;
  temp_files().push_back(path);
  return path;
}

void remove_temp_files() {
  for (const std::string& path : temp_files()) std::remove(path.c_str());
  temp_files().clear();
}

void cli_contract(Checker& t, const std::string& cli) {
  std::string trace = write_temp("trace.txt", "p(Z, f(X,Y)) = p(f(Z,Y), Z)\n");
  CliResult unified = run_cli(cli, "unify " + trace + " --mode rational");
  t.check(unified.exit_code == 0 && unified.out == "{Z -> f(Z,Y), X -> Z}\n",
          "cli unify output, got exit " + std::to_string(unified.exit_code) +
              " output '" + unified.out + "'");

  std::string chained =
      write_temp("sigma0.txt", "X1 -> f(X2)\nX2 -> g(X3,X4)\nX3 -> X1\n");
  CliResult abstracted =
      run_cli(cli, "abstract " + chained + " --universe X1,X2,X3,X4");
  t.check(abstracted.exit_code == 0 && abstracted.out == "{{X1,X2,X3,X4}}\n",
          "cli abstract output, got exit " + std::to_string(abstracted.exit_code) +
              " output '" + abstracted.out + "'");

  std::string loop = write_temp("loop.txt", "X = f(X)\n");
  CliResult folded = run_cli(cli, "aunify " + loop + " --mode herbrand");
  t.check(folded.exit_code == 1 && folded.out == "bottom\n",
          "cli aunify output, got exit " + std::to_string(folded.exit_code) +
              " output '" + folded.out + "'");

  CliResult rewritten = run_cli(cli, "vtransform " + chained);
  t.check(rewritten.exit_code == 0 &&
              rewritten.out ==
                  "{X1 -> f(g(f(g(X3,X4)),X4)), X2 -> g(f(g(X3,X4)),X4), "
                  "X3 -> f(g(X3,X4))}\n"
                  "rsubst: yes  idempotent: no  variable-idempotent: yes  "
                  "ordered: yes\n",
          "cli vtransform output, got '" + rewritten.out + "'");

  // The machine-readable form round-trips: parsing the JSON and folding
  // the names back through the table rebuilds the same element.
  CliResult as_json =
      run_cli(cli, "abstract " + chained + " --universe X1,X2,X3,X4 --format json");
  t.check(as_json.exit_code == 0, "cli abstract json exit code");
  try {
    nlohmann::json parsed = nlohmann::json::parse(as_json.out);
    t.check(parsed.at("status") == "ok", "json status field");
    NameTable table;
    VarSet universe;
    for (const auto& name : parsed.at("universe")) {
      universe.insert(table.intern(name.get<std::string>()));
    }
    SharingSet groups;
    for (const auto& group : parsed.at("sharing")) {
      SharingGroup s;
      for (const auto& name : group) s.insert(table.intern(name.get<std::string>()));
      groups.insert(std::move(s));
    }
    SSElement rebuilt = SSElement::pair(std::move(groups), universe);

    ProblemFile file = parse_problem("X1 -> f(X2)\nX2 -> g(X3,X4)\nX3 -> X1\n");
    SSElement direct = alpha(file.substitution(), file.universe());
    t.check(rebuilt == direct, "json round-trip equals the direct abstraction");
  } catch (const std::exception& e) {
    t.check(false, std::string("json parse: ") + e.what());
  }

  // Parse errors exit with 2.
  std::string broken = write_temp("broken.txt", "X = f(\n");
  t.check(run_cli(cli, "unify " + broken).exit_code == 2, "cli parse error exit code");

  // The law table is reachable from the command line.
  CliResult table = run_cli(cli, "--laws --scale 0.002");
  t.check(table.exit_code == 0 &&
              table.out.find("laws, 0 failed") != std::string::npos,
          "cli law table");

  remove_temp_files();
}

// --- runner ------------------------------------------------------------------

bool run_criterion(int number, const std::string& label, double budget_seconds,
                   const std::function<void(Checker&)>& body) {
  Checker checker;
  auto start = std::chrono::steady_clock::now();
  body(checker);
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool pass = checker.failures == 0 && elapsed < budget_seconds;
  std::printf("[%s] criterion %d: %s (%.2fs, budget %.0fs)\n",
              pass ? "PASS" : "FAIL", number, label.c_str(), elapsed,
              budget_seconds);
  if (checker.failures > 0) {
    std::printf("    %d check(s) failed\n", checker.failures);
  }
  std::fflush(stdout);
  return pass;
}

void run_law_criterion(Checker& t, int criterion, long min_cases) {
  laws::SuiteConfig config;
  std::vector<laws::LawResult> results = laws::run_laws_for_criterion(criterion, config);
  for (const laws::LawResult& r : results) {
    t.check(r.passed(), r.name + ": " + r.first_counterexample);
    if (min_cases > 0) {
      t.check(r.cases >= min_cases,
              r.name + ": only " + std::to_string(r.cases) + " cases");
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <path-to-setshare>\n", argv[0]);
    return 2;
  }
  std::string cli = argv[1];

  bool all = true;
  all &= run_criterion(1, "worked-example suite", 1.0, worked_examples);
  all &= run_criterion(2, "exhaustive small-universe law suite", 60.0,
                       [](Checker& t) { run_law_criterion(t, 2, 0); });
  all &= run_criterion(3, "randomized law suite (>= 10000 cases each)", 120.0,
                       [](Checker& t) { run_law_criterion(t, 3, 10000); });
  all &= run_criterion(4, "soundness suite (>= 5000 cases, both modes)", 120.0,
                       [](Checker& t) { run_law_criterion(t, 4, 5000); });
  all &= run_criterion(5, "command-line contract", 60.0,
                       [&cli](Checker& t) { cli_contract(t, cli); });

  std::printf("%s\n", all ? "acceptance: all criteria passed"
                          : "acceptance: FAILURES");
  return all ? 0 : 1;
}
