#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pavelka/definability.hpp"
#include "pavelka/parser.hpp"
#include "pavelka/semantics.hpp"

using namespace pavelka;

namespace {

UnitRational q(int p, int d) { return UnitRational(p, d); }

Theory with_defs(const Theory& t, const DefinitionTheory& d) {
  Theory out = t;
  for (const Formula& f : d.formulas) out.add(f);
  return out;
}

}  // namespace

TEST_CASE("torrens_definition shapes and errors") {
  DefinitionTheory d2 = torrens_definition(2);
  REQUIRE(d2.formulas.size() == 1);
  CHECK(equal(d2.formulas[0], parse_formula("z <-> ~z")));
  CHECK(d2.defined.at(q(1, 2)) == "z");

  DefinitionTheory d3 = torrens_definition(3, "w");
  CHECK(equal(d3.formulas[0], parse_formula("w <-> (~w)^2")));

  CHECK_THROWS_AS(torrens_definition(1), ValueError);
}

TEST_CASE("torrens uniqueness on grids") {
  for (int n = 2; n <= 6; ++n) {
    DefinitionTheory d = torrens_definition(n);
    for (int m = n; m <= 36; m += n) {
      std::set<UnitRational> sols = unique_solutions_grid(d, "z", m);
      CHECK(sols == std::set<UnitRational>{q(1, n)});
    }
  }
}

TEST_CASE("rational_definition forces p/q") {
  DefinitionTheory d = rational_definition(2, 3);
  REQUIRE(d.formulas.size() == 2);
  for (int m = 3; m <= 12; m += 3) {
    CHECK(unique_solutions_grid(d, "z", m) == std::set<UnitRational>{q(2, 3)});
  }
  CHECK(unique_solutions_grid(rational_definition(3, 4), "z", 12) ==
        std::set<UnitRational>{q(3, 4)});
  CHECK(unique_solutions_grid(rational_definition(1, 2), "z", 12) ==
        std::set<UnitRational>{q(1, 2)});

  CHECK_THROWS_AS(rational_definition(2, 4), ValueError);
  CHECK_THROWS_AS(rational_definition(3, 2), ValueError);
  CHECK_THROWS_AS(rational_definition(0, 2), ValueError);
}

TEST_CASE("bookkeeping_restricted counts and membership") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<Formula> b = bookkeeping_restricted(n);
    size_t plus = n + 1;
    CHECK(b.size() == plus * plus + plus + 2);
  }
  std::vector<Formula> b2 = bookkeeping_restricted(2);
  Formula target = parse_formula("~#1/2 <-> #1/2");
  bool found = false;
  for (const Formula& f : b2)
    if (equal(f, target)) found = true;
  CHECK(found);
}

TEST_CASE("bookkeeping_variables pins every proper fraction") {
  DefinitionTheory d2 = bookkeeping_variables(2);
  CHECK(d2.defined.at(q(1, 2)) == "z_1_2");
  CHECK(unique_solutions_grid(d2, "z_1_2", 12) ==
        std::set<UnitRational>{q(1, 2)});

  DefinitionTheory d3 = bookkeeping_variables(3);
  CHECK(unique_solutions_grid(d3, "z_1_3", 12) ==
        std::set<UnitRational>{q(1, 3)});
  CHECK(unique_solutions_grid(d3, "z_2_3", 12) ==
        std::set<UnitRational>{q(2, 3)});
  // No formula mentions a proper constant.
  for (const Formula& f : d3.formulas) {
    for (const auto& c : constants_of(f)) {
      CHECK((c.is_zero() || c.is_one()));
    }
  }
}

TEST_CASE("definition theories are consistent") {
  CHECK_FALSE(unique_solutions_grid(torrens_definition(4), "z", 12).empty());
  CHECK_FALSE(
      unique_solutions_grid(bookkeeping_variables(3), "z_1_3", 6).empty());
  // An inconsistent theory yields no solutions.
  DefinitionTheory bad;
  bad.formulas.push_back(parse_formula("z <-> ~z"));
  bad.formulas.push_back(parse_formula("z"));
  CHECK(unique_solutions_grid(bad, "z", 12).empty());
}

TEST_CASE("freshness avoids reserved names deterministically") {
  std::set<std::string> reserved{"z_1_2"};
  DefinitionTheory a = bookkeeping_variables(2, reserved);
  DefinitionTheory b = bookkeeping_variables(2, reserved);
  CHECK(a.defined.at(q(1, 2)) == "z_1_2_");
  CHECK(a.defined == b.defined);
}

TEST_CASE("eliminate_constants torrens strategy") {
  Theory t;
  Elimination e =
      eliminate_constants(t, parse_formula("#1/2 -> p"), ElimStrategy::torrens);
  CHECK(constants_of(e.formula).empty());
  CHECK(e.formula->kind == Conn::Imp);
  CHECK(e.formula->left->kind == Conn::Var);

  // Grid entailment degree matches the original across denominators.
  for (int m = 2; m <= 12; m += 2) {
    DegreeReport before =
        validity_degree_grid(t, parse_formula("#1/2 -> p"), m, 5'000'000);
    DegreeReport after = validity_degree_grid(with_defs(e.theory, e.defs),
                                              e.formula, m, 5'000'000);
    CHECK(before.upper == after.upper);
  }
}

TEST_CASE("eliminate_constants with hypotheses, both strategies") {
  Theory t;
  t.add(parse_formula("#2/3 -> p"));
  for (ElimStrategy s : {ElimStrategy::torrens, ElimStrategy::bookkeeping}) {
    Elimination e = eliminate_constants(t, parse_formula("p"), s);
    CHECK(e.formula->kind == Conn::Var);
    for (const Formula& f : e.theory.formulas())
      CHECK(constants_of(f).empty());
    DegreeReport before =
        validity_degree_grid(t, parse_formula("p"), 3, 50'000'000);
    DegreeReport after = validity_degree_grid(with_defs(e.theory, e.defs),
                                              e.formula, 3, 50'000'000);
    CHECK(before.upper == q(2, 3));
    CHECK(after.upper == q(2, 3));
  }
}

TEST_CASE("constant-free input is left untouched") {
  Theory t;
  t.add(parse_formula("p -> q"));
  Elimination e = eliminate_constants(t, parse_formula("p"));
  CHECK(e.defs.formulas.empty());
  CHECK(e.defs.fresh.empty());
  CHECK(equal(e.formula, parse_formula("p")));
  CHECK(equal(e.theory.formulas()[0], parse_formula("p -> q")));
}

TEST_CASE("shared denominators reuse one helper variable") {
  Theory t;
  t.add(parse_formula("#1/4 -> p"));
  t.add(parse_formula("#3/4 -> q"));
  Elimination e = eliminate_constants(t, parse_formula("p"), ElimStrategy::torrens);
  // One helper a_4 plus z-variables for 1/4 and 3/4.
  CHECK(e.defs.fresh.count("a_4") == 1);
  CHECK(e.defs.defined.size() == 2);
  CHECK(e.defs.fresh.size() == 3);
}

TEST_CASE("grid oracle respects the budget") {
  DefinitionTheory d = bookkeeping_variables(6);
  CHECK_THROWS_AS(unique_solutions_grid(d, "z_1_6", 60, 1000), BudgetError);
}
