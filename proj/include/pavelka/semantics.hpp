#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "pavelka/proof.hpp"
#include "pavelka/theory.hpp"

namespace pavelka {

using Assignment = std::map<std::string, UnitRational>;

/// Grid search exceeded the configured point budget; CLI exit code 3.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegreeReport {
  UnitRational upper;                  // grid minimum (an upper bound on the infimum)
  std::optional<UnitRational> lower;   // certificate grade, when supplied
  std::uint64_t grid_denominator = 1;  // the denominator actually used
  bool exact = false;                  // lower present and equal to upper
  bool grid_inconsistent = false;      // no grid assignment respects the theory
  Assignment witness;                  // lexicographically first minimizer
  std::string str() const;
};

/// Homomorphic evaluation; Const(q) denotes q.  Throws ValueError naming
/// the variable when v leaves one unassigned, and on metavariables.
UnitRational eval(const Formula& f, const Assignment& v);

/// True iff gamma(f) <= eval(f, v) on the whole support.
bool respects(const Assignment& v, const FuzzyTheory& gamma);

inline constexpr std::uint64_t kDefaultBudget = 5'000'000;

/// Minimum of eval(f, v) over assignments into {0, 1/n, ..., 1} that
/// respect gamma.  n is raised to the least multiple of every denominator
/// occurring in gamma and f; the report records the denominator used.
/// Throws BudgetError when (n+1)^#variables exceeds the budget.
DegreeReport validity_degree_grid(const FuzzyTheory& gamma, const Formula& f,
                                  std::uint64_t n,
                                  std::uint64_t budget = kDefaultBudget);
DegreeReport validity_degree_grid(const Theory& t, const Formula& f,
                                  std::uint64_t n,
                                  std::uint64_t budget = kDefaultBudget);

/// Grid upper bound plus certified lower bound.  The graded certificate must
/// check from gamma with conclusion (f, r); the ungraded certificate must
/// check under check_rpl from {#r_i -> psi_i | (psi_i, r_i) in supp gamma}
/// with conclusion #r -> f.  Throws ValueError on certificate failure or
/// conclusion mismatch.
DegreeReport degree_sandwich(const FuzzyTheory& gamma, const Formula& f,
                             const GradedProof& certificate, std::uint64_t n,
                             std::uint64_t budget = kDefaultBudget);
DegreeReport degree_sandwich(const FuzzyTheory& gamma, const Formula& f,
                             const Proof& certificate, std::uint64_t n,
                             std::uint64_t budget = kDefaultBudget);

}  // namespace pavelka
