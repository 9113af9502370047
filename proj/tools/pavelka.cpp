#include <CLI11.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "pavelka/checker.hpp"
#include "pavelka/definability.hpp"
#include "pavelka/derived.hpp"
#include "pavelka/parser.hpp"
#include "pavelka/semantics.hpp"
#include "pavelka/theorems.hpp"
#include "pavelka/theory.hpp"
#include "pavelka/translate.hpp"

namespace {

using namespace pavelka;

// Exit codes: 0 success, 1 logical failure (a checker refused), 2 input
// error, 3 resource budget exceeded.
constexpr int kOk = 0;
constexpr int kLogicalFailure = 1;
constexpr int kInputError = 2;
constexpr int kBudgetExceeded = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open " + path + " for writing");
  out << text;
}

std::uint64_t budget_from_env() {
  const char* s = std::getenv("PAVELKA_BUDGET");
  if (!s || !*s) return kDefaultBudget;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (!end || *end || v == 0) throw InputError("PAVELKA_BUDGET must be a positive integer");
  return v;
}

Assignment parse_assignment(const std::string& text) {
  Assignment v;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("assignment entries look like p=1/2");
    std::string name = item.substr(0, eq);
    while (!name.empty() && name.back() == ' ') name.pop_back();
    while (!name.empty() && name.front() == ' ') name.erase(0, 1);
    v[name] = UnitRational::parse(item.substr(eq + 1));
  }
  return v;
}

// Default grid denominator: the lcm of every denominator in sight, doubled.
std::uint64_t default_denominator(const FuzzyTheory& gamma, const Formula& f) {
  Int l = 1;
  auto fold = [&](const Formula& g) {
    for (const auto& c : constants_of(g)) l = boost::multiprecision::lcm(l, c.den());
  };
  fold(f);
  for (const auto& [g, r] : gamma.support()) {
    fold(g);
    l = boost::multiprecision::lcm(l, r.den());
  }
  return (2 * l).convert_to<std::uint64_t>();
}

int cmd_parse(const std::string& path, const std::string& kind) {
  std::string text = read_file(path);
  if (kind == "formula") {
    std::cout << print(parse_formula(text)) << "\n";
  } else if (kind == "theory") {
    std::cout << print_theory(parse_fuzzy_theory(text));
  } else if (kind == "proof") {
    std::cout << print_proof(parse_proof(text));
  } else if (kind == "graded") {
    std::cout << print_proof(parse_graded_proof(text));
  } else {
    throw InputError("unknown --kind " + kind);
  }
  return kOk;
}

int cmd_eval(const std::string& formula, const std::string& assign) {
  UnitRational v = eval(parse_formula(formula), parse_assignment(assign));
  std::cout << "value=" << v.str() << "\n";
  return kOk;
}

int cmd_check(const std::string& system, const std::string& proof_path,
              const std::string& theory_path) {
  std::string text = read_file(proof_path);
  CheckReport r;
  if (system == "grpl") {
    FuzzyTheory gamma;
    if (!theory_path.empty()) gamma = parse_fuzzy_theory(read_file(theory_path));
    r = check_grpl(parse_graded_proof(text), gamma);
  } else if (system == "rpl" || system == "luk") {
    Theory t;
    if (!theory_path.empty()) t = parse_theory(read_file(theory_path));
    Proof p = parse_proof(text);
    r = system == "luk" ? check_luk(p, t) : check_rpl(p, t, &standard_rules());
  } else {
    throw InputError("unknown --system " + system);
  }
  std::cout << r.str() << "\n";
  return r.ok ? kOk : kLogicalFailure;
}

int cmd_translate(const std::string& from, const std::string& to,
                  bool normalize, bool kernel, const std::string& proof_path,
                  const std::string& theory_path, const std::string& out_path) {
  std::string text = read_file(proof_path);
  TranslationResult res;
  try {
  if (from == "grpl") {
    FuzzyTheory gamma;
    if (!theory_path.empty()) gamma = parse_fuzzy_theory(read_file(theory_path));
    GradedProof p = parse_graded_proof(text);
    if (to == "rpl") {
      res = grpl_to_rpl(p, gamma);
    } else if (to == "grpl") {
      res = normalize ? normalize_grades(p, gamma) : grpl_self_embed(p, gamma);
    } else {
      throw InputError("unknown --to " + to);
    }
  } else if (from == "rpl") {
    if (to != "grpl") throw InputError("rpl proofs translate to grpl only");
    Theory t;
    if (!theory_path.empty()) t = parse_theory(read_file(theory_path));
    res = rpl_to_grpl(parse_proof(text), t, &standard_rules());
  } else {
    throw InputError("unknown --from " + from);
  }
  } catch (const ValueError& e) {
    // The input parsed but a checker refused it: logical failure.
    std::cerr << "refused: " << e.what() << "\n";
    return kLogicalFailure;
  }

  if (kernel && res.proof) {
    Proof expanded = standard_rules().expand_to_kernel(*res.proof);
    // Kernel expansion discards the provenance interleaving.
    Theory t = res.theory;
    if (!check_rpl(expanded, t).ok) throw std::logic_error("kernel expansion failed to re-check");
    write_output(out_path, print_proof(expanded));
    return kOk;
  }

  // Re-check before writing: the translators already validate, but the
  // contract is that nothing unverified ever reaches a file.
  if (res.proof) {
    if (!check_rpl(*res.proof, res.theory, &standard_rules()).ok)
      throw std::logic_error("translated proof failed to re-check");
  } else {
    if (!check_grpl(*res.graded, res.fuzzy_theory).ok)
      throw std::logic_error("translated proof failed to re-check");
  }
  write_output(out_path, res.str());
  return kOk;
}

int cmd_degree(const std::string& theory_path, const std::string& formula,
               const std::string& cert_path, bool graded, std::uint64_t n) {
  FuzzyTheory gamma;
  if (!theory_path.empty()) gamma = parse_fuzzy_theory(read_file(theory_path));
  Formula f = parse_formula(formula);
  std::uint64_t denom = n ? n : default_denominator(gamma, f);
  std::uint64_t budget = budget_from_env();
  DegreeReport r;
  if (cert_path.empty()) {
    r = validity_degree_grid(gamma, f, denom, budget);
  } else {
    std::string cert = read_file(cert_path);
    try {
      r = graded ? degree_sandwich(gamma, f, parse_graded_proof(cert), denom, budget)
                 : degree_sandwich(gamma, f, parse_proof(cert), denom, budget);
    } catch (const ValueError& e) {
      std::cerr << "refused: " << e.what() << "\n";
      return kLogicalFailure;
    }
  }
  std::cout << r.str() << "\n";
  return kOk;
}

std::string render_defs(const DefinitionTheory& d) {
  std::ostringstream os;
  for (const auto& [value, name] : d.defined)
    os << "# defines " << value.str() << " as " << name << "\n";
  for (const Formula& f : d.formulas) os << print(f) << "\n";
  return os.str();
}

int cmd_define(const std::string& rational, const std::string& strategy,
               const std::string& var_name, const std::string& out_path) {
  UnitRational q = UnitRational::parse(rational);
  if (q.is_zero() || q.is_one())
    throw InputError("--rational must be strictly between 0 and 1");
  int p = q.num().convert_to<int>();
  int d = q.den().convert_to<int>();
  DefinitionTheory defs;
  if (strategy == "torrens") {
    defs = p == 1 ? torrens_definition(d, var_name)
                  : rational_definition(p, d, var_name);
  } else if (strategy == "bookkeeping") {
    defs = bookkeeping_variables(d);
  } else {
    throw InputError("unknown --strategy " + strategy);
  }
  std::string text = render_defs(defs);
  parse_theory(text);  // sanity: the artifact must re-read as a theory
  write_output(out_path, text);
  return kOk;
}

int cmd_eliminate(const std::string& theory_path, const std::string& formula,
                  const std::string& strategy, const std::string& out_prefix) {
  Theory t;
  if (!theory_path.empty()) t = parse_theory(read_file(theory_path));
  Formula f = parse_formula(formula);
  ElimStrategy s;
  if (strategy == "torrens") {
    s = ElimStrategy::torrens;
  } else if (strategy == "bookkeeping") {
    s = ElimStrategy::bookkeeping;
  } else {
    throw InputError("unknown --strategy " + strategy);
  }
  Elimination e = eliminate_constants(t, f, s);
  std::string theory_text = print_theory(e.theory);
  std::string defs_text = render_defs(e.defs);
  std::string formula_text = print(e.formula) + "\n";
  parse_theory(theory_text);
  parse_theory(defs_text);
  parse_formula(formula_text);
  if (out_prefix.empty()) {
    std::cout << "# theory\n" << theory_text << "# definitions\n" << defs_text
              << "# formula\n" << formula_text;
  } else {
    write_output(out_prefix + ".theory", theory_text);
    write_output(out_prefix + ".defs", defs_text);
    write_output(out_prefix + ".formula", formula_text);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proof checking and truth degrees for Lukasiewicz and Pavelka logics"};
  app.require_subcommand(1);

  std::string path, kind = "formula";
  auto* parse_cmd = app.add_subcommand("parse", "Parse a file and reprint it canonically");
  parse_cmd->add_option("file", path, "input file")->required();
  parse_cmd->add_option("--kind", kind, "formula|theory|proof|graded");

  std::string eval_formula, assign;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a formula under an assignment");
  eval_cmd->add_option("formula", eval_formula, "formula text")->required();
  eval_cmd->add_option("--assign", assign, "comma-separated, e.g. p=1/2,q=1");

  std::string system = "rpl", theory_path;
  auto* check_cmd = app.add_subcommand("check", "Check a proof file");
  check_cmd->add_option("proof", path, "proof file")->required();
  check_cmd->add_option("--system", system, "luk|rpl|grpl");
  check_cmd->add_option("--theory", theory_path, "theory file");

  std::string from = "grpl", to = "rpl", out_path;
  bool normalize = false, kernel = false;
  auto* tr_cmd = app.add_subcommand("translate", "Translate a proof between calculi");
  tr_cmd->add_option("proof", path, "proof file")->required();
  tr_cmd->add_option("--from", from, "grpl|rpl");
  tr_cmd->add_option("--to", to, "rpl|grpl");
  tr_cmd->add_option("--theory", theory_path, "theory file");
  tr_cmd->add_flag("--normalize-grades", normalize, "grpl->grpl grade normalization");
  tr_cmd->add_flag("--kernel", kernel, "expand derived rules to kernel steps");
  tr_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

  std::string cert_path;
  bool graded = false;
  std::uint64_t denom = 0;
  auto* deg_cmd = app.add_subcommand("degree", "Grid validity degree, optionally certified");
  deg_cmd->add_option("formula", eval_formula, "formula text")->required();
  deg_cmd->add_option("--theory", theory_path, "theory file");
  deg_cmd->add_option("--certificate", cert_path, "proof file for the lower bound");
  deg_cmd->add_flag("--graded", graded, "certificate is a graded proof");
  deg_cmd->add_option("-n,--denominator", denom, "grid denominator (default: doubled lcm)");

  std::string rational, strategy = "torrens", var_name = "z";
  auto* def_cmd = app.add_subcommand("define", "Emit a theory pinning a rational to a variable");
  def_cmd->add_option("--rational", rational, "p/q strictly between 0 and 1")->required();
  def_cmd->add_option("--strategy", strategy, "torrens|bookkeeping");
  def_cmd->add_option("--var", var_name, "defined variable name");
  def_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* elim_cmd = app.add_subcommand("eliminate", "Replace constants by defined variables");
  elim_cmd->add_option("formula", eval_formula, "formula text")->required();
  elim_cmd->add_option("--theory", theory_path, "theory file");
  elim_cmd->add_option("--strategy", strategy, "torrens|bookkeeping");
  elim_cmd->add_option("-o,--output", out_path, "output path prefix (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (parse_cmd->parsed()) return cmd_parse(path, kind);
    if (eval_cmd->parsed()) return cmd_eval(eval_formula, assign);
    if (check_cmd->parsed()) return cmd_check(system, path, theory_path);
    if (tr_cmd->parsed())
      return cmd_translate(from, to, normalize, kernel, path, theory_path, out_path);
    if (deg_cmd->parsed())
      return cmd_degree(theory_path, eval_formula, cert_path, graded, denom);
    if (def_cmd->parsed())
      return cmd_define(rational, strategy, var_name, out_path);
    if (elim_cmd->parsed())
      return cmd_eliminate(theory_path, eval_formula, strategy, out_path);
    std::cerr << "error: no subcommand\n";
    return kInputError;
  } catch (const BudgetError& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const ValueError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInputError;
  }
}
