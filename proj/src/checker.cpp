#include "pavelka/checker.hpp"

#include <sstream>

namespace pavelka {

Formula axiom_schema(const std::string& name) {
  Formula phi = var("Phi"), psi = var("Psi"), chi = var("Chi");
  if (name == "A1") return imp(phi, imp(psi, phi));
  if (name == "A2")
    return imp(imp(phi, psi), imp(imp(psi, chi), imp(phi, chi)));
  if (name == "A3") return imp(imp(imp(phi, psi), psi), imp(imp(psi, phi), phi));
  if (name == "A4") return imp(imp(neg(phi), neg(psi)), imp(psi, phi));
  throw ValueError("unknown axiom schema " + name);
}

Formula book_imp_formula(const UnitRational& q, const UnitRational& r) {
  return equiv(imp(constant(q), constant(r)), constant(mv_imp(q, r)));
}

Formula book_neg_formula(const UnitRational& q) {
  return equiv(neg(constant(q)), constant(mv_neg(q)));
}

Formula book_one_formula() {
  return equiv(constant(UnitRational::one()), constant(UnitRational::one()));
}

Formula book_zero_formula() {
  return equiv(constant(UnitRational::zero()), constant(UnitRational::zero()));
}

namespace {

enum class Mode { Luk, Rpl };

struct LineError {
  std::string reason;
};

// Index lookup shared by both calculi: references must be dense from 1 and
// strictly smaller than the current line.
template <typename Line>
const Line& ref(const std::vector<Line>& lines, int cur, int target) {
  if (target < 1 || target >= cur) {
    std::ostringstream out;
    out << "reference " << target << " out of range";
    throw LineError{out.str()};
  }
  return lines[static_cast<size_t>(target) - 1];
}

void check_axiom_instance(const AxiomL& ax, const Formula& stated) {
  Formula schema;
  try {
    schema = axiom_schema(ax.name);
  } catch (const ValueError& e) {
    throw LineError{e.what()};
  }
  Formula instance;
  try {
    instance = substitute(schema, ax.binding);
  } catch (const ValueError& e) {
    throw LineError{std::string("bad instantiation: ") + e.what()};
  }
  if (!base_equal(instance, stated))
    throw LineError{"bad instantiation: stated formula is not the " + ax.name +
                    " instance of the binding"};
}

void check_book_formula(const Formula& expected, const Formula& stated,
                        const std::string& what) {
  // Exact shape first: catches "bookkeeping value mismatch" where the
  // constants differ, before the structural complaint.
  if (equal(expected, stated)) return;
  if (stated->kind == Conn::Equiv && expected->kind == Conn::Equiv &&
      equal(expected->left, stated->left))
    throw LineError{"bookkeeping value mismatch in " + what};
  if (!base_equal(expected, stated))
    throw LineError{what + " shape mismatch"};
}

CheckReport check_crisp(const Proof& p, const Theory& t, Mode mode,
                        const DerivedValidator* rules) {
  CheckReport report;
  if (p.lines.empty()) {
    report.first_error = {0, "empty proof"};
    return report;
  }
  for (size_t k = 0; k < p.lines.size(); ++k) {
    const ProofLine& line = p.lines[k];
    try {
      if (line.index != static_cast<int>(k) + 1) {
        std::ostringstream out;
        out << "expected index " << k + 1 << ", found " << line.index;
        throw LineError{out.str()};
      }
      if (mode == Mode::Luk && has_proper_constants(line.formula))
        throw LineError{"constant in Lukasiewicz proof"};
      std::visit(
          [&](const auto& j) {
            using T = std::decay_t<decltype(j)>;
            if constexpr (std::is_same_v<T, AxiomL>) {
              check_axiom_instance(j, line.formula);
            } else if constexpr (std::is_same_v<T, Hyp>) {
              if (!t.contains(line.formula))
                throw LineError{"hypothesis not in theory"};
            } else if constexpr (std::is_same_v<T, MP>) {
              const ProofLine& prem = ref(p.lines, line.index, j.i);
              const ProofLine& impl = ref(p.lines, line.index, j.j);
              if (!base_equal(impl.formula, imp(prem.formula, line.formula)))
                throw LineError{"MP shape mismatch"};
            } else if constexpr (std::is_same_v<T, BookImp>) {
              if (mode == Mode::Luk)
                throw LineError{"bookkeeping line in Lukasiewicz proof"};
              check_book_formula(book_imp_formula(j.q, j.r), line.formula,
                                 "book-imp");
            } else if constexpr (std::is_same_v<T, BookNeg>) {
              if (mode == Mode::Luk)
                throw LineError{"bookkeeping line in Lukasiewicz proof"};
              check_book_formula(book_neg_formula(j.q), line.formula,
                                 "book-neg");
            } else if constexpr (std::is_same_v<T, BookOne>) {
              if (mode == Mode::Luk)
                throw LineError{"bookkeeping line in Lukasiewicz proof"};
              check_book_formula(book_one_formula(), line.formula, "book-one");
            } else if constexpr (std::is_same_v<T, BookZero>) {
              if (mode == Mode::Luk)
                throw LineError{"bookkeeping line in Lukasiewicz proof"};
              check_book_formula(book_zero_formula(), line.formula,
                                 "book-zero");
            } else if constexpr (std::is_same_v<T, Derived>) {
              if (mode == Mode::Luk)
                throw LineError{"derived rule in Lukasiewicz proof"};
              if (!rules)
                throw LineError{"derived rule " + j.rule +
                                " used without a rule registry"};
              std::vector<Formula> premises;
              for (int r : j.refs)
                premises.push_back(ref(p.lines, line.index, r).formula);
              if (auto err = rules->validate(j.rule, premises, line.formula))
                throw LineError{*err};
            } else {
              throw LineError{"graded justification in ungraded proof"};
            }
          },
          line.just);
    } catch (const LineError& e) {
      report.first_error = {line.index, e.reason};
      return report;
    }
  }
  report.ok = true;
  report.conclusion = p.conclusion().formula;
  return report;
}

}  // namespace

CheckReport check_luk(const Proof& p, const Theory& t) {
  return check_crisp(p, t, Mode::Luk, nullptr);
}

CheckReport check_rpl(const Proof& p, const Theory& t,
                      const DerivedValidator* rules) {
  return check_crisp(p, t, Mode::Rpl, rules);
}

CheckReport check_grpl(const GradedProof& p, const FuzzyTheory& gamma) {
  CheckReport report;
  if (p.lines.empty()) {
    report.first_error = {0, "empty proof"};
    return report;
  }
  for (size_t k = 0; k < p.lines.size(); ++k) {
    const GradedProofLine& line = p.lines[k];
    try {
      if (line.index != static_cast<int>(k) + 1) {
        std::ostringstream out;
        out << "expected index " << k + 1 << ", found " << line.index;
        throw LineError{out.str()};
      }
      auto need_grade = [&](const UnitRational& want, const std::string& what) {
        if (line.grade != want)
          throw LineError{what + " grade mismatch: expected " + want.str() +
                          ", stated " + line.grade.str()};
      };
      std::visit(
          [&](const auto& j) {
            using T = std::decay_t<decltype(j)>;
            if constexpr (std::is_same_v<T, AxiomL>) {
              check_axiom_instance(j, line.formula);
              need_grade(UnitRational::one(), "axiom");
            } else if constexpr (std::is_same_v<T, GrConst>) {
              if (!equal(line.formula, constant(j.q)))
                throw LineError{"constant axiom shape mismatch"};
              need_grade(j.q, "constant axiom");
            } else if constexpr (std::is_same_v<T, BookImp>) {
              check_book_formula(book_imp_formula(j.q, j.r), line.formula,
                                 "book-imp");
              need_grade(UnitRational::one(), "bookkeeping");
            } else if constexpr (std::is_same_v<T, BookNeg>) {
              check_book_formula(book_neg_formula(j.q), line.formula,
                                 "book-neg");
              need_grade(UnitRational::one(), "bookkeeping");
            } else if constexpr (std::is_same_v<T, GrZero>) {
              need_grade(UnitRational::zero(), "zero axiom");
            } else if constexpr (std::is_same_v<T, Hyp>) {
              need_grade(gamma.grade(line.formula), "hypothesis");
            } else if constexpr (std::is_same_v<T, GMP>) {
              const GradedProofLine& prem = ref(p.lines, line.index, j.i);
              const GradedProofLine& impl = ref(p.lines, line.index, j.j);
              if (!base_equal(impl.formula, imp(prem.formula, line.formula)))
                throw LineError{"GMP shape mismatch"};
              need_grade(mv_conj(prem.grade, impl.grade), "GMP");
            } else if constexpr (std::is_same_v<T, Lift>) {
              const GradedProofLine& prem = ref(p.lines, line.index, j.i);
              if (!equal(line.formula, imp(constant(j.r), prem.formula)))
                throw LineError{"lift shape mismatch"};
              need_grade(mv_imp(j.r, prem.grade), "lift");
            } else {
              throw LineError{"ungraded justification in graded proof"};
            }
          },
          line.just);
    } catch (const LineError& e) {
      report.first_error = {line.index, e.reason};
      return report;
    }
  }
  report.ok = true;
  report.conclusion = p.conclusion().formula;
  report.conclusion_grade = p.conclusion().grade;
  return report;
}

}  // namespace pavelka
