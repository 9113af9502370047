#include "pavelka/semantics.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <vector>

#include "pavelka/checker.hpp"
#include "pavelka/derived.hpp"

namespace pavelka {

std::string DegreeReport::str() const {
  std::ostringstream out;
  out << "upper=" << upper.str() << " lower="
      << (lower ? lower->str() : std::string("none")) << " grid="
      << grid_denominator << " exact=" << (exact ? "true" : "false")
      << " witness=";
  bool first = true;
  for (const auto& [name, value] : witness) {
    if (!first) out << ',';
    first = false;
    out << name << '=' << value.str();
  }
  if (grid_inconsistent) out << " warning=grid-inconsistent";
  return out.str();
}

UnitRational eval(const Formula& f, const Assignment& v) {
  switch (f->kind) {
    case Conn::Var: {
      auto it = v.find(f->name);
      if (it == v.end()) throw ValueError("unassigned variable " + f->name);
      return it->second;
    }
    case Conn::Const:
      return f->value;
    case Conn::Neg:
      return mv_neg(eval(f->left, v));
    case Conn::Imp:
      return mv_imp(eval(f->left, v), eval(f->right, v));
    case Conn::SDisj:
      return mv_disj(eval(f->left, v), eval(f->right, v));
    case Conn::SConj:
      return mv_conj(eval(f->left, v), eval(f->right, v));
    case Conn::Min:
      return mv_min(eval(f->left, v), eval(f->right, v));
    case Conn::Max:
      return mv_max(eval(f->left, v), eval(f->right, v));
    case Conn::Equiv: {
      UnitRational a = eval(f->left, v), b = eval(f->right, v);
      return mv_min(mv_imp(a, b), mv_imp(b, a));
    }
    case Conn::Pow:
      return mv_pow(eval(f->left, v), f->count);
    case Conn::NMul:
      return mv_nmul(eval(f->left, v), f->count);
    case Conn::ConstMeta:
      throw ValueError("constant metavariable $" + f->name +
                       " has no truth value");
  }
  throw ValueError("malformed formula node");
}

bool respects(const Assignment& v, const FuzzyTheory& gamma) {
  for (const auto& [formula, grade] : gamma.support()) {
    if (eval(formula, v) < grade) return false;
  }
  return true;
}

namespace {

Int lcm(Int a, Int b) { return a / boost::multiprecision::gcd(a, b) * b; }

// Least multiple of every denominator in gamma and f that is >= n.
std::uint64_t raise_denominator(const FuzzyTheory& gamma, const Formula& f,
                                std::uint64_t n) {
  Int base = 1;
  auto absorb = [&](const Formula& g) {
    for (const auto& c : constants_of(g)) base = lcm(base, c.den());
  };
  absorb(f);
  for (const auto& [formula, grade] : gamma.support()) {
    absorb(formula);
    base = lcm(base, grade.den());
  }
  if (n < 1) n = 1;
  Int raised = base * ((Int(n) + base - 1) / base);
  if (raised > Int(std::numeric_limits<std::uint64_t>::max()))
    throw BudgetError("grid denominator overflows the machine word");
  return raised.convert_to<std::uint64_t>();
}

}  // namespace

DegreeReport validity_degree_grid(const FuzzyTheory& gamma, const Formula& f,
                                  std::uint64_t n, std::uint64_t budget) {
  DegreeReport report;
  std::uint64_t used = raise_denominator(gamma, f, n);
  report.grid_denominator = used;

  std::set<std::string> names = variables_of(f);
  for (const auto& [formula, grade] : gamma.support()) {
    auto more = variables_of(formula);
    names.insert(more.begin(), more.end());
  }
  std::vector<std::string> vars(names.begin(), names.end());

  std::uint64_t points = 1;
  for (size_t i = 0; i < vars.size(); ++i) {
    if (points > budget / (used + 1)) {
      std::ostringstream out;
      out << "grid of " << vars.size() << " variables at denominator " << used
          << " exceeds the budget of " << budget << " points";
      throw BudgetError(out.str());
    }
    points *= used + 1;
  }

  // Odometer over denominator-`used` values, first variable most significant;
  // the first strict minimizer encountered is the lexicographic one.
  std::vector<std::uint64_t> digits(vars.size(), 0);
  std::optional<UnitRational> best;
  Assignment v;
  while (true) {
    for (size_t i = 0; i < vars.size(); ++i)
      v[vars[i]] = UnitRational(Int(digits[i]), Int(used));
    if (respects(v, gamma)) {
      UnitRational value = eval(f, v);
      if (!best || value < *best) {
        best = value;
        report.witness = v;
      }
    }
    size_t i = vars.size();
    while (i > 0 && digits[i - 1] == used) digits[--i] = 0;
    if (i == 0) break;
    ++digits[i - 1];
  }

  if (best) {
    report.upper = *best;
  } else {
    report.upper = UnitRational::one();
    report.grid_inconsistent = true;
    report.witness.clear();
  }
  return report;
}

DegreeReport validity_degree_grid(const Theory& t, const Formula& f,
                                  std::uint64_t n, std::uint64_t budget) {
  return validity_degree_grid(FuzzyTheory::from_crisp(t), f, n, budget);
}

DegreeReport degree_sandwich(const FuzzyTheory& gamma, const Formula& f,
                             const GradedProof& certificate, std::uint64_t n,
                             std::uint64_t budget) {
  CheckReport check = check_grpl(certificate, gamma);
  if (!check.ok) throw ValueError("invalid certificate: " + check.str());
  if (!base_equal(check.conclusion, f))
    throw ValueError("certificate conclusion mismatch: proves " +
                     print(check.conclusion));
  DegreeReport report = validity_degree_grid(gamma, f, n, budget);
  report.lower = check.conclusion_grade;
  report.exact = !report.grid_inconsistent && *report.lower == report.upper;
  return report;
}

DegreeReport degree_sandwich(const FuzzyTheory& gamma, const Formula& f,
                             const Proof& certificate, std::uint64_t n,
                             std::uint64_t budget) {
  Theory shifted;
  for (const auto& [formula, grade] : gamma.support())
    shifted.add(imp(constant(grade), formula));
  CheckReport check = check_rpl(certificate, shifted, &standard_rules());
  if (!check.ok) throw ValueError("invalid certificate: " + check.str());
  const Formula& conc = check.conclusion;
  if (conc->kind != Conn::Imp || conc->left->kind != Conn::Const ||
      !base_equal(conc->right, f))
    throw ValueError("certificate conclusion mismatch: expected #r -> " +
                     print(f) + ", proves " + print(conc));
  DegreeReport report = validity_degree_grid(gamma, f, n, budget);
  report.lower = conc->left->value;
  report.exact = !report.grid_inconsistent && *report.lower == report.upper;
  return report;
}

}  // namespace pavelka
