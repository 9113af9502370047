#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pavelka/formula.hpp"

namespace pavelka {

/// Finite crisp set of premises (grade implicitly 1).  Membership is
/// decided up to to_base normalization; duplicates collapse.
class Theory {
 public:
  void add(const Formula& f);
  bool contains(const Formula& f) const;
  const std::vector<Formula>& formulas() const { return order_; }
  bool empty() const { return order_.empty(); }

 private:
  std::map<Formula, Formula, FormulaLess> by_normal_;
  std::vector<Formula> order_;
};

/// Finitely supported map Formula -> grade.  Unlisted formulas have grade 0;
/// formulas are identified up to to_base normalization; a formula explicitly
/// set to grade 0 is not stored.
class FuzzyTheory {
 public:
  void set(const Formula& f, const UnitRational& grade);
  UnitRational grade(const Formula& f) const;
  /// Support entries in deterministic (normalized-formula) order.
  std::vector<std::pair<Formula, UnitRational>> support() const;
  bool empty() const { return map_.empty(); }
  bool all_grades_one() const;

  static FuzzyTheory from_crisp(const Theory& t);

 private:
  std::map<Formula, std::pair<Formula, UnitRational>, FormulaLess> map_;
};

/// Theory file format: one entry per line, either `grade p/q : <formula>`
/// or a bare `<formula>` (grade 1).  Lines whose first nonblank character
/// is `#` not followed by a digit are comments.
FuzzyTheory parse_fuzzy_theory(const std::string& text);
/// As parse_fuzzy_theory but requires every grade to be 1.
Theory parse_theory(const std::string& text);

std::string print_theory(const Theory& t);
std::string print_theory(const FuzzyTheory& t);

}  // namespace pavelka
