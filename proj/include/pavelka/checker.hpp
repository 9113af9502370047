#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pavelka/proof.hpp"
#include "pavelka/theory.hpp"

namespace pavelka {

// Axiom schemata over the metavariables Phi, Psi, Chi.
Formula axiom_schema(const std::string& name);  // A1..A4, throws on other names

// The formula a bookkeeping axiom asserts; right-hand constants computed here.
Formula book_imp_formula(const UnitRational& q, const UnitRational& r);
Formula book_neg_formula(const UnitRational& q);
Formula book_one_formula();
Formula book_zero_formula();

// Validation hook for Derived lines; implemented by the rule registry.
class DerivedValidator {
 public:
  virtual ~DerivedValidator() = default;
  // Returns an error message, or nullopt when the application is well formed.
  virtual std::optional<std::string> validate(
      const std::string& rule, const std::vector<Formula>& premises,
      const Formula& conclusion) const = 0;
};

// Constant-free kernel: A1-A4 instances, theory members, MP.  Rejects
// constants other than 0/1, bookkeeping lines, and Derived lines.
CheckReport check_luk(const Proof& p, const Theory& t);

// Adds the bookkeeping axioms and (when a registry is supplied) Derived
// lines validated against their registered premise/conclusion shapes.
CheckReport check_rpl(const Proof& p, const Theory& t,
                      const DerivedValidator* rules = nullptr);

// Graded calculus: Lukasiewicz axioms in grade 1, constants in their own
// grade, bookkeeping in grade 1, anything in grade 0, hypotheses in their
// theory grade, graded modus ponens, lifting.
CheckReport check_grpl(const GradedProof& p, const FuzzyTheory& gamma);

}  // namespace pavelka
