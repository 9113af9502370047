#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pavelka/derived.hpp"
#include "pavelka/parser.hpp"
#include "pavelka/semantics.hpp"

using namespace pavelka;

TEST_CASE("standard registry builds and probe-checks") {
  const DerivedRegistry& reg = standard_rules();
  for (const char* name : {"identity", "transitivity-chain", "exchange",
                           "gmp-sim", "lift-sim", "book-swap"}) {
    CHECK(reg.has(name));
  }
  CHECK_FALSE(reg.has("no-such-rule"));
}

TEST_CASE("derived lines pass check_rpl through the registry") {
  Theory t;
  t.add(parse_formula("p -> q"));
  t.add(parse_formula("q -> r"));
  Proof p = parse_proof(
      "1 : p -> p ; dr identity\n"
      "2 : p -> q ; hyp\n"
      "3 : q -> r ; hyp\n"
      "4 : p -> r ; dr transitivity-chain 2 3\n");
  CHECK(check_rpl(p, t, &standard_rules()).ok);

  Proof bad = parse_proof("1 : p -> q ; dr identity\n");
  CheckReport rep = check_rpl(bad, t, &standard_rules());
  CHECK_FALSE(rep.ok);
}

TEST_CASE("gmp-sim validates and expands") {
  Theory t;
  t.add(parse_formula("#2/3 -> p"));
  t.add(parse_formula("#2/3 -> (p -> q)"));
  Proof p = parse_proof(
      "1 : #2/3 -> p ; hyp\n"
      "2 : #2/3 -> (p -> q) ; hyp\n"
      "3 : #1/3 -> q ; dr gmp-sim 1 2\n");
  CHECK(check_rpl(p, t, &standard_rules()).ok);

  Proof kernel = standard_rules().expand_to_kernel(p);
  for (const ProofLine& line : kernel.lines)
    CHECK(!std::holds_alternative<Derived>(line.just));
  CheckReport rep = check_rpl(kernel, t);
  INFO(rep.str());
  CHECK(rep.ok);
  CHECK(base_equal(rep.conclusion, parse_formula("#1/3 -> q")));

  // wrong conclusion constant is refused
  Proof bad = parse_proof(
      "1 : #2/3 -> p ; hyp\n"
      "2 : #2/3 -> (p -> q) ; hyp\n"
      "3 : #1/2 -> q ; dr gmp-sim 1 2\n");
  CHECK_FALSE(check_rpl(bad, t, &standard_rules()).ok);
}

TEST_CASE("gmp-sim at grade zero routes through ex falso") {
  Theory t;
  t.add(parse_formula("#1/3 -> p"));
  t.add(parse_formula("#1/2 -> (p -> q)"));
  Proof p = parse_proof(
      "1 : #1/3 -> p ; hyp\n"
      "2 : #1/2 -> (p -> q) ; hyp\n"
      "3 : #0 -> q ; dr gmp-sim 1 2\n");
  CHECK(check_rpl(p, t, &standard_rules()).ok);
  CHECK(check_rpl(standard_rules().expand_to_kernel(p), t).ok);
}

TEST_CASE("lift-sim and book-swap") {
  Theory t;
  t.add(parse_formula("#2/3 -> p"));
  t.add(parse_formula("q -> (#1/2 -> #1/3)"));
  Proof p = parse_proof(
      "1 : #2/3 -> p ; hyp\n"
      "2 : #1 -> (#1/2 -> p) ; dr lift-sim 1\n"
      "3 : q -> (#1/2 -> #1/3) ; hyp\n"
      "4 : q -> #5/6 ; dr book-swap 3\n");
  CHECK(check_rpl(p, t, &standard_rules()).ok);
  Proof kernel = standard_rules().expand_to_kernel(p);
  CheckReport rep = check_rpl(kernel, t);
  INFO(rep.str());
  CHECK(rep.ok);
  CHECK(base_equal(rep.conclusion, parse_formula("q -> #5/6")));
}

TEST_CASE("expansion leaves pure kernel proofs unchanged") {
  Theory t;
  t.add(parse_formula("p"));
  t.add(parse_formula("p -> q"));
  Proof p = parse_proof(
      "1 : p ; hyp\n"
      "2 : p -> q ; hyp\n"
      "3 : q ; mp 1 2\n");
  CHECK(print_proof(standard_rules().expand_to_kernel(p)) == print_proof(p));
}

TEST_CASE("expanded derived conclusions stay semantically sound") {
  Theory t;
  t.add(parse_formula("#3/4 -> p"));
  t.add(parse_formula("#2/3 -> (p -> q)"));
  Proof p = parse_proof(
      "1 : #3/4 -> p ; hyp\n"
      "2 : #2/3 -> (p -> q) ; hyp\n"
      "3 : #5/12 -> q ; dr gmp-sim 1 2\n");
  Proof kernel = standard_rules().expand_to_kernel(p);
  REQUIRE(check_rpl(kernel, t).ok);
  FuzzyTheory g;
  for (const Formula& f : t.formulas()) g.set(f, UnitRational::one());
  for (int a = 0; a <= 12; ++a) {
    for (int c = 0; c <= 12; ++c) {
      Assignment v{{"p", UnitRational(a, 12)}, {"q", UnitRational(c, 12)}};
      if (!respects(v, g)) continue;
      CHECK(eval(kernel.lines.back().formula, v) == UnitRational::one());
    }
  }
}
