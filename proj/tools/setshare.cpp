#include <cstdio>
#include <deque>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "setsharing/abstract_unify.hpp"
#include "setsharing/abstraction.hpp"
#include "setsharing/laws.hpp"
#include "setsharing/parser.hpp"
#include "setsharing/printer.hpp"
#include "setsharing/unify.hpp"
#include "setsharing/vsubst.hpp"

namespace {

using namespace setsharing;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // unification failure or bottom
constexpr int kExitInput = 2;    // parse or input error

struct Options {
  std::string file = "-";
  std::string mode;  // "", "herbrand" or "rational"
  std::string universe;
  std::string format = "text";
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> split_universe(const std::string& list) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : list) {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

struct Problem {
  ProblemFile file;
  EqualityMode mode = EqualityMode::RationalTrees;
  NameFn names;
};

Problem load(const Options& opts) {
  Problem p;
  p.file = parse_problem(read_input(opts.file), split_universe(opts.universe));
  if (opts.mode == "herbrand") {
    p.mode = EqualityMode::Herbrand;
  } else if (opts.mode == "rational") {
    p.mode = EqualityMode::RationalTrees;
  } else if (p.file.mode) {
    p.mode = *p.file.mode;
  }
  const NameTable& table = p.file.names;
  std::size_t known = table.size();
  p.names = [&table, known](Variable v) {
    return v.id() < known ? table.name(v) : default_var_name(v);
  };
  return p;
}

ordered_json substitution_json(const Substitution& sigma, const NameFn& names) {
  ordered_json out = ordered_json::array();
  for (const auto& [x, t] : sigma.entries()) {
    out.push_back({{"var", names(x)}, {"term", to_text(t, names)}});
  }
  return out;
}

ordered_json sharing_json(const SSElement& e, const NameFn& names) {
  ordered_json out;
  if (e.is_bottom()) {
    out["status"] = "bottom";
    return out;
  }
  if (e.is_top()) {
    out["status"] = "top";
    return out;
  }
  out["status"] = "ok";
  ordered_json universe = ordered_json::array();
  for (Variable v : e.universe()) universe.push_back(names(v));
  out["universe"] = std::move(universe);
  ordered_json sharing = ordered_json::array();
  for (const SharingGroup& s : e.sharing()) {
    ordered_json group = ordered_json::array();
    for (Variable v : s) group.push_back(names(v));
    sharing.push_back(std::move(group));
  }
  out["sharing"] = std::move(sharing);
  return out;
}

int emit_element(const SSElement& e, const Problem& p, const Options& opts) {
  if (opts.format == "json") {
    std::cout << sharing_json(e, p.names).dump() << "\n";
  } else {
    std::cout << to_text(e, p.names) << "\n";
  }
  return e.is_bottom() ? kExitFailure : kExitOk;
}

int cmd_unify(const Options& opts) {
  Problem p = load(opts);
  UnifyResult result = unify(p.file.equations(), p.mode);
  if (opts.format == "json") {
    ordered_json out;
    switch (result.status()) {
      case UnifyResult::Status::Solved:
        out["status"] = "ok";
        out["substitution"] = substitution_json(result.solution(), p.names);
        break;
      case UnifyResult::Status::Clash:
        out["status"] = "clash";
        break;
      case UnifyResult::Status::OccursCheck:
        out["status"] = "occurs_check";
        break;
    }
    std::cout << out.dump() << "\n";
  } else {
    switch (result.status()) {
      case UnifyResult::Status::Solved:
        std::cout << to_text(result.solution(), p.names) << "\n";
        break;
      case UnifyResult::Status::Clash:
        std::cout << "failure: clash\n";
        break;
      case UnifyResult::Status::OccursCheck:
        std::cout << "failure: occurs_check\n";
        break;
    }
  }
  return result.solved() ? kExitOk : kExitFailure;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

int cmd_vtransform(const Options& opts) {
  Problem p = load(opts);
  Substitution sigma = p.file.substitution();
  if (!is_rsubst(sigma)) {
    throw std::invalid_argument("input substitution has a circular subset");
  }
  Substitution normal = to_vsubst(sigma);
  Classification cls = classify(normal);
  if (opts.format == "json") {
    ordered_json out;
    out["status"] = "ok";
    out["substitution"] = substitution_json(normal, p.names);
    out["classification"] = {{"rsubst", cls.is_rsubst},
                             {"idempotent", cls.is_idempotent},
                             {"variable_idempotent", cls.is_var_idempotent},
                             {"ordered", cls.is_ordered}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << to_text(normal, p.names) << "\n";
    std::cout << "rsubst: " << yesno(cls.is_rsubst)
              << "  idempotent: " << yesno(cls.is_idempotent)
              << "  variable-idempotent: " << yesno(cls.is_var_idempotent)
              << "  ordered: " << yesno(cls.is_ordered) << "\n";
  }
  return kExitOk;
}

int cmd_abstract(const Options& opts) {
  Problem p = load(opts);
  Substitution sigma = p.file.substitution();
  if (!is_rsubst(sigma)) {
    throw std::invalid_argument("input substitution has a circular subset");
  }
  return emit_element(alpha(sigma, p.file.universe()), p, opts);
}

int cmd_aunify(const Options& opts) {
  Problem p = load(opts);
  Substitution nu = p.file.substitution();
  if (!is_rsubst(nu)) {
    throw std::invalid_argument("input substitution has a circular subset");
  }
  // The description of the empty substitution: every universe variable
  // free and un-aliased.
  VarSet universe = p.file.universe();
  SharingSet start;
  for (Variable v : universe) {
    SharingGroup g;
    g.insert(v);
    start.insert(std::move(g));
  }
  SSElement folded = aunify(SSElement::pair(std::move(start), universe), nu, p.mode);
  return emit_element(folded, p, opts);
}

int run_laws_table(std::uint64_t seed, double scale) {
  laws::SuiteConfig config;
  config.seed = seed;
  config.scale = scale;
  std::size_t width = 0;
  for (const std::string& name : laws::law_names()) {
    width = std::max(width, name.size());
  }
  long failed = 0;
  config.on_result = [&](const laws::LawResult& r) {
    std::string pad(width - r.name.size() + 2, ' ');
    std::printf("%s%s%s  %8ld cases  %6.2fs\n", r.name.c_str(), pad.c_str(),
                r.passed() ? "pass" : "FAIL", r.cases, r.seconds);
    if (!r.passed()) {
      ++failed;
      std::printf("    counterexample: %s\n", r.first_counterexample.c_str());
    }
    std::fflush(stdout);
  };
  std::vector<laws::LawResult> results = laws::run_laws(config);
  std::printf("%zu laws, %ld failed (seed %llu)\n", results.size(), failed,
              static_cast<unsigned long long>(seed));
  return failed == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) try {
  CLI::App app{"Set-sharing analysis over substitutions in rational solved form"};
  app.require_subcommand(0, 1);

  bool laws_flag = false;
  std::uint64_t seed = laws::SuiteConfig{}.seed;
  double scale = 1.0;
  app.add_flag("--laws", laws_flag, "run the algebraic law suite and print a table");
  app.add_option("--seed", seed, "seed for the law suite");
  app.add_option("--scale", scale, "case-count multiplier for the law suite");

  struct Command {
    CLI::App* sub;
    Options opts;
    int (*run)(const Options&);
  };
  std::deque<Command> commands;  // stable addresses for the option bindings
  auto add_command = [&](const std::string& name, const std::string& help,
                         int (*run)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.push_back(Command{sub, Options{}, run});
    Options& opts = commands.back().opts;
    sub->add_option("file", opts.file, "problem file, '-' for stdin");
    sub->add_option("--mode", opts.mode, "equality theory")
        ->check(CLI::IsMember({"herbrand", "rational"}));
    sub->add_option("--universe", opts.universe, "comma-separated variable list");
    sub->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  add_command("unify", "solve the equations of the file", cmd_unify);
  add_command("vtransform", "rewrite to a variable-idempotent substitution",
              cmd_vtransform);
  add_command("abstract", "sharing abstraction of the substitution", cmd_abstract);
  add_command("aunify", "fold the bindings into the free description", cmd_aunify);

  CLI11_PARSE(app, argc, argv);

  if (laws_flag) return run_laws_table(seed, scale);
  for (const Command& command : commands) {
    if (command.sub->parsed()) return command.run(command.opts);
  }
  std::cerr << app.help();
  return kExitInput;
} catch (const SyntaxError& e) {
  std::cerr << "parse error: " << e.what() << "\n";
  return kExitInput;
} catch (const std::exception& e) {
  std::cerr << "error: " << e.what() << "\n";
  return kExitInput;
}
