#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "expr.hpp"
#include "realsets/harness/suites.hpp"
#include "realsets/intsets.hpp"
#include "realsets/paradoxical.hpp"

namespace {

enum Exit { ok = 0, failures = 1, usage = 2, inconclusive_only = 3 };

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

realsets::IntMorphism load_morphism(const std::string& path, const std::string& mode) {
  auto f = realsets::morphism_from_json_text(slurp(path));
  if (!mode.empty() && realsets::mode_name(f.mode) != mode) {
    throw std::invalid_argument(path + ": morphism is " + realsets::mode_name(f.mode) +
                                ", expected " + mode);
  }
  return f;
}

int run_intset(const std::string& op, const std::vector<std::string>& files, const std::string& mode) {
  using namespace realsets;
  auto need = [&](std::size_t n) {
    if (files.size() != n) {
      throw CLI::ValidationError("intset " + op, "takes " + std::to_string(n) + " file(s)");
    }
  };
  if (op == "compose") {
    need(2);
    IntMorphism g = load_morphism(files[0], mode);
    IntMorphism f = load_morphism(files[1], mode);
    if (!(f.cod == g.dom)) throw std::invalid_argument("compose: codomain of f differs from domain of g");
    std::cout << to_json_text(int_compose(g, f));
    return ok;
  }
  if (op == "trace") {
    // f: (X,U) → (Y,U), read as an injection X+U → Y+U, traced over U.
    need(1);
    IntMorphism f = load_morphism(files[0], mode);
    if (f.dom.u != f.cod.u) throw std::invalid_argument("trace: domain and codomain U blocks differ");
    Injection t = trace_injection(f.map, f.dom.x, f.dom.u, f.cod.x);
    std::cout << to_json_text(IntMorphism::make({t.dom, 0}, {t.cod, 0}, t.table, f.mode));
    return ok;
  }
  if (op == "card") {
    need(1);
    std::string text = slurp(files[0]);
    IntMorphism f = morphism_from_json_text(text);
    std::cout << cardinality(f.dom) << "\n";
    return ok;
  }
  throw CLI::ValidationError("intset", "unknown operation '" + op + "' (compose, trace, card)");
}

int run_paradox(const std::string& op, const std::vector<std::string>& args) {
  using namespace realsets;
  auto need = [&](std::size_t n) {
    if (args.size() != n) {
      throw CLI::ValidationError("paradox " + op, "takes " + std::to_string(n) + " argument(s)");
    }
  };
  if (op == "add") {
    need(2);
    std::cout << zp_add(ZPElem::parse(args[0]), ZPElem::parse(args[1])).str() << "\n";
  } else if (op == "k") {
    need(1);
    std::cout << zp_k(ZPElem::parse(args[0])).str() << "\n";
  } else if (op == "leq") {
    need(2);
    std::cout << (zp_leq(ZPElem::parse(args[0]), ZPElem::parse(args[1])) ? "true" : "false") << "\n";
  } else if (op == "value") {
    need(1);
    mpq_class v = ZPElem::parse(args[0]).value();
    std::cout << v.get_str() << "\n";
  } else {
    throw CLI::ValidationError("paradox", "unknown operation '" + op + "' (add, k, leq, value)");
  }
  return ok;
}

int run_check(const std::string& instance, const std::string& suite,
              const realsets::harness::SuiteConfig& config) {
  using namespace realsets::harness;
  std::vector<std::string> suites;
  if (suite.empty() || suite == "all") suites = suite_names(instance);
  else suites = {suite};
  bool failed = false, inconclusive = false;
  for (std::size_t i = 0; i < suites.size(); ++i) {
    SuiteReport r = run_suite(instance, suites[i], config);
    std::cout << (i ? "\n" : "") << render(r, config);
    failed = failed || r.fail > 0 || r.invalid > 0;
    inconclusive = inconclusive || r.inconclusive > 0;
  }
  if (failed) return failures;
  return inconclusive ? inconclusive_only : ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Countably-infinitary sums: evaluation, integer sets, law suites"};
  app.require_subcommand(1);

  std::size_t bits = 32;
  std::uint64_t seed = 0;
  std::size_t cases = 100;
  std::string instance, suite, mode;

  auto* eval = app.add_subcommand("eval", "Evaluate expressions, one per line");
  std::string eval_file, eval_expr;
  eval->add_option("file", eval_file, "Expression file ('-' for stdin)");
  eval->add_option("-e,--expr", eval_expr, "Evaluate one expression");
  eval->add_option("--bits", bits, "Approximation level")->capture_default_str();

  auto* intset = app.add_subcommand("intset", "Integer-set morphisms: compose g f, trace f, card f");
  std::string intset_op;
  std::vector<std::string> intset_files;
  intset->add_option("op", intset_op, "compose | trace | card")->required();
  intset->add_option("files", intset_files, "Morphism JSON files");
  intset->add_option("--mode", mode, "Require FB or FI inputs")->check(CLI::IsMember({"FB", "FI"}));

  auto* paradox = app.add_subcommand("paradox", "Paradoxical positive reals: add, k, leq, value");
  std::string paradox_op;
  std::vector<std::string> paradox_args;
  paradox->add_option("op", paradox_op, "add | k | leq | value")->required();
  paradox->add_option("args", paradox_args, "Literals: 0, t:1.01, r:0.1(01)");

  auto* check = app.add_subcommand("check", "Run a seeded law suite");
  check->add_option("instance,--instance", instance, "Instance name");
  check->add_option("suite,--suite", suite, "Suite name, or 'all'");
  check->add_option("--seed", seed, "64-bit seed")->capture_default_str();
  check->add_option("--cases", cases, "Number of cases")->capture_default_str();
  check->add_option("--bits", bits, "Approximation level")->capture_default_str();
  bool list = false;
  check->add_flag("--list", list, "List instances and suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (eval->parsed()) {
      std::string text;
      if (!eval_expr.empty()) text = eval_expr;
      else if (!eval_file.empty()) text = slurp(eval_file);
      else throw CLI::ValidationError("eval", "needs a file or -e EXPR");
      for (const std::string& line : realsets::cli::eval_text(text, realsets::ApproxLevel{bits})) {
        std::cout << line << "\n";
      }
      return ok;
    }
    if (intset->parsed()) return run_intset(intset_op, intset_files, mode);
    if (paradox->parsed()) return run_paradox(paradox_op, paradox_args);
    if (check->parsed()) {
      if (list) {
        for (const auto& name : realsets::harness::instance_names()) {
          std::cout << name << ":";
          for (const auto& s : realsets::harness::suite_names(name)) std::cout << " " << s;
          std::cout << "\n";
        }
        return ok;
      }
      if (instance.empty()) throw CLI::ValidationError("check", "needs an instance (see --list)");
      return run_check(instance, suite, {seed, cases, realsets::ApproxLevel{bits}});
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const realsets::cli::EvalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const realsets::harness::UnknownName& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return failures;
  }
  return usage;
}
