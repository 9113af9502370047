#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pavelka/parser.hpp"
#include "pavelka/theory.hpp"

using namespace pavelka;

TEST_CASE("crisp membership is up to definitional expansion") {
  Theory t;
  t.add(parse_formula("p \\/ q"));
  CHECK(t.contains(parse_formula("p \\/ q")));
  CHECK(t.contains(parse_formula("(p -> q) -> q")));
  CHECK_FALSE(t.contains(parse_formula("q \\/ p")));
  t.add(parse_formula("(p -> q) -> q"));  // duplicate under to_base
  CHECK(t.formulas().size() == 1);
}

TEST_CASE("fuzzy grades default to zero and zero erases") {
  FuzzyTheory g;
  CHECK(g.grade(parse_formula("p")) == UnitRational::zero());
  g.set(parse_formula("p"), UnitRational(1, 2));
  CHECK(g.grade(parse_formula("p")) == UnitRational(1, 2));
  g.set(parse_formula("p"), UnitRational::zero());
  CHECK(g.empty());
}

TEST_CASE("all_grades_one and from_crisp") {
  Theory t;
  t.add(parse_formula("p"));
  t.add(parse_formula("p -> q"));
  FuzzyTheory g = FuzzyTheory::from_crisp(t);
  CHECK(g.all_grades_one());
  CHECK(g.support().size() == 2);
  g.set(parse_formula("r"), UnitRational(1, 3));
  CHECK_FALSE(g.all_grades_one());
}

TEST_CASE("theory file parsing") {
  FuzzyTheory g = parse_fuzzy_theory(
      "# premises\n"
      "grade 2/3 : p\n"
      "grade 2/3 : p -> q\n"
      "\n"
      "#1/2 -> r\n");
  CHECK(g.grade(parse_formula("p")) == UnitRational(2, 3));
  CHECK(g.grade(parse_formula("p -> q")) == UnitRational(2, 3));
  CHECK(g.grade(parse_formula("#1/2 -> r")) == UnitRational::one());
  CHECK(g.support().size() == 3);

  CHECK_THROWS_AS(parse_theory("grade 1/2 : p\n"), ValueError);
  Theory t = parse_theory("p\ngrade 1 : q\n");
  CHECK(t.formulas().size() == 2);
}

TEST_CASE("theory print round trip") {
  FuzzyTheory g;
  g.set(parse_formula("p"), UnitRational(2, 3));
  g.set(parse_formula("q -> p"), UnitRational::one());
  FuzzyTheory h = parse_fuzzy_theory(print_theory(g));
  CHECK(h.grade(parse_formula("p")) == UnitRational(2, 3));
  CHECK(h.grade(parse_formula("q -> p")) == UnitRational::one());
}
