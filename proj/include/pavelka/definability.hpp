#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pavelka/formula.hpp"
#include "pavelka/semantics.hpp"
#include "pavelka/theory.hpp"

namespace pavelka {

// A finite set of constant-free formulas that pins down rational values
// for designated variables: every standard model of `formulas` must send
// `defined[q]` to q.  `fresh` lists every variable the generator invented.
struct DefinitionTheory {
  std::vector<Formula> formulas;
  std::map<UnitRational, std::string> defined;
  std::set<std::string> fresh;
};

// { var <-> (~var)^(n-1) }, which forces var = 1/n.  Requires n >= 2.
DefinitionTheory torrens_definition(int n, const std::string& var = "z");

// { a <-> (~a)^(q-1), var <-> p.a } with a fresh helper variable a,
// forcing var = p/q.  Requires 0 < p < q with p/q in lowest terms.
DefinitionTheory rational_definition(int p, int q, const std::string& var = "z");

// All bookkeeping axiom instances whose constants have denominator
// dividing q (the denominator-q fragment is closed under ->L and ~L).
std::vector<Formula> bookkeeping_restricted(int q);

// bookkeeping_restricted(q) with every constant p/q strictly between 0
// and 1 replaced by a fresh variable (0 and 1 stay constants); the
// resulting theory forces each such variable to its rational value.
DefinitionTheory bookkeeping_variables(
    int q, const std::set<std::string>& reserved = {});

enum class ElimStrategy { torrens, bookkeeping };

struct Elimination {
  Theory theory;          // T with constants replaced by variables
  DefinitionTheory defs;  // definitions pinning those variables down
  Formula formula;        // phi with constants replaced by variables
};

// Replace every constant strictly between 0 and 1 in T and phi by a fresh
// variable and return definitions that force each variable to its value,
// so that entailment is preserved.  Fresh names avoid all variables that
// occur in T or phi.
Elimination eliminate_constants(const Theory& t, const Formula& phi,
                                ElimStrategy strategy = ElimStrategy::torrens);

// The values d.formulas allow for `var` over the grid {0, 1/n, ..., 1}:
// enumerates all grid assignments to the variables of d and collects
// v(var) at those making every formula fully true.  Throws BudgetError
// when the enumeration would exceed `budget` evaluation points.
std::set<UnitRational> unique_solutions_grid(
    const DefinitionTheory& d, const std::string& var, std::uint64_t n,
    std::uint64_t budget = kDefaultBudget);

}  // namespace pavelka
