// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Usage: acceptance <corpus-dir>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pavelka/checker.hpp"
#include "pavelka/definability.hpp"
#include "pavelka/derived.hpp"
#include "pavelka/parser.hpp"
#include "pavelka/semantics.hpp"
#include "pavelka/theorems.hpp"
#include "pavelka/translate.hpp"

using namespace pavelka;
namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

std::vector<UnitRational> grid_values(int n) {
  std::vector<UnitRational> out;
  for (int k = 0; k <= n; ++k) out.emplace_back(k, n);
  return out;
}

// Enumerate all assignments of grid values (denominator n) to `vars`.
void for_each_assignment(const std::set<std::string>& vars, int n,
                         const std::function<void(const Assignment&)>& fn) {
  std::vector<std::string> order(vars.begin(), vars.end());
  std::vector<int> digits(order.size(), 0);
  for (;;) {
    Assignment v;
    for (size_t k = 0; k < order.size(); ++k)
      v[order[k]] = UnitRational(digits[k], n);
    fn(v);
    size_t k = order.size();
    while (k > 0 && digits[k - 1] == n) digits[--k] = 0;
    if (k == 0) break;
    ++digits[k - 1];
  }
}

std::uint64_t lcm_u(std::uint64_t a, std::uint64_t b) {
  std::uint64_t g = a;
  for (std::uint64_t x = b; x;) {
    std::uint64_t t = g % x;
    g = x;
    x = t;
  }
  return a / g * b;
}

std::uint64_t den_lcm(const Formula& f, std::uint64_t l) {
  for (const auto& c : constants_of(f))
    l = lcm_u(l, c.den().convert_to<std::uint64_t>());
  return l;
}

// ---------------------------------------------------------------------------
// 1. Algebraic laws on every grid n = 1..12, exact arithmetic.
void criterion1() {
  for (int n = 1; n <= 12; ++n) {
    std::vector<UnitRational> g = grid_values(n);
    for (const auto& x : g) {
      require(mv_neg(mv_neg(x)) == x, "involutiveness");
      require(mv_neg(x).den().convert_to<int>() <= n &&
                  n % mv_neg(x).den().convert_to<int>() == 0,
              "Ln closure under negation");
      for (const auto& y : g) {
        require(mv_conj(x, mv_imp(x, y)) == mv_min(x, y), "divisibility");
        require(mv_max(mv_imp(x, y), mv_imp(y, x)).is_one(), "semilinearity");
        for (const UnitRational& v :
             {mv_disj(x, y), mv_conj(x, y), mv_imp(x, y)})
          require(n % v.den().convert_to<int>() == 0, "Ln closure");
        for (const auto& z : g) {
          bool lhs = mv_conj(x, y) <= z;
          bool rhs = x <= mv_imp(y, z);
          require(lhs == rhs, "residuation");
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// 2. Kernel soundness fuzzing: 1,000 generated proofs, no grid countermodel.
void criterion2() {
  std::mt19937 rng(20260826);
  const std::vector<std::string> vars = {"p", "q", "r"};
  auto rnd = [&](int n) { return static_cast<int>(rng() % n); };

  std::function<Formula(int, bool)> rand_formula = [&](int depth,
                                                       bool constants) {
    int choice = rnd(depth <= 0 ? 2 : 7);
    switch (choice) {
      case 0:
        return var(vars[rnd(3)]);
      case 1:
        if (constants) {
          static const int num[] = {0, 1, 1, 1, 2, 3};
          static const int den[] = {1, 1, 2, 4, 3, 4};
          int k = rnd(6);
          return constant(num[k], den[k]);
        }
        return var(vars[rnd(3)]);
      case 2:
        return neg(rand_formula(depth - 1, constants));
      case 3:
        return imp(rand_formula(depth - 1, constants),
                   rand_formula(depth - 1, constants));
      case 4:
        return sconj(rand_formula(depth - 1, constants),
                     rand_formula(depth - 1, constants));
      case 5:
        return fmax(rand_formula(depth - 1, constants),
                    rand_formula(depth - 1, constants));
      default:
        return sdisj(rand_formula(depth - 1, constants),
                     rand_formula(depth - 1, constants));
    }
  };

  const std::vector<std::string> ax = {"A1", "A2", "A3", "A4"};
  for (int trial = 0; trial < 1000; ++trial) {
    bool rpl = trial % 2 == 1;
    ProofBuilder b;
    int steps = 1 + rnd(8);
    for (int s = 0; s < steps; ++s) {
      int kind = rnd(rpl ? 4 : 3);
      if (kind == 0 || b.size() == 0) {
        b.add_axiom(ax[rnd(4)], rand_formula(2, rpl), rand_formula(2, rpl),
                    rand_formula(2, rpl));
      } else if (kind == 1) {
        // Derive f_j -> f_i from A1 and line i.
        int i = 1 + rnd(b.size()), j = 1 + rnd(b.size());
        int a = b.add_axiom("A1", b.formula(i), b.formula(j));
        b.add_mp(i, a);
      } else if (kind == 2) {
        // Apply modus ponens wherever the shapes line up.
        bool done = false;
        for (int j = b.size(); j >= 1 && !done; --j) {
          Formula fj = b.formula(j);
          if (fj->kind != Conn::Imp) continue;
          for (int i = 1; i <= b.size() && !done; ++i) {
            if (i != j && base_equal(b.formula(i), fj->left)) {
              b.add_mp(i, j);
              done = true;
            }
          }
        }
        if (!done) b.add_axiom("A1", rand_formula(2, rpl), rand_formula(1, rpl));
      } else {
        static const int num[] = {0, 1, 1, 1, 2, 3};
        static const int den[] = {1, 1, 2, 4, 3, 4};
        int k = rnd(6), l = rnd(6);
        if (rnd(2)) {
          b.add_book_imp(UnitRational(num[k], den[k]),
                         UnitRational(num[l], den[l]));
        } else {
          b.add_book_neg(UnitRational(num[k], den[k]));
        }
      }
    }
    Proof p = b.take();
    Theory empty;
    CheckReport rep = rpl ? check_rpl(p, empty) : check_luk(p, empty);
    require(rep.ok, "generated proof rejected: " + rep.str());

    // No grid countermodel at denominator lcm x 2.
    Formula conc = rep.conclusion;
    std::uint64_t n = 2 * den_lcm(conc, 1);
    bool sound = true;
    for_each_assignment(variables_of(conc), static_cast<int>(n),
                        [&](const Assignment& v) {
                          if (!eval(conc, v).is_one()) sound = false;
                        });
    require(sound, "countermodel for fuzzed theorem " + print(conc));
  }
}

// ---------------------------------------------------------------------------
// Corpus loading shared by criteria 3, 4 and 9.
struct GradedCase {
  std::string name;
  GradedProof proof;
  FuzzyTheory gamma;
  std::string proof_text;
};

std::vector<GradedCase> load_graded(const fs::path& corpus) {
  std::vector<GradedCase> out;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(corpus / "grpl"))
    if (e.path().extension() == ".gpf") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    GradedCase c;
    c.name = f.stem().string();
    c.proof_text = read_file(f);
    c.proof = parse_graded_proof(c.proof_text);
    c.gamma = parse_fuzzy_theory(read_file(fs::path(f).replace_extension(".th")));
    out.push_back(std::move(c));
  }
  return out;
}

// 3. Graded soundness over the corpus: grade never exceeds the conclusion's
// value under any respecting grid assignment.
void criterion3(const std::vector<GradedCase>& cases) {
  require(cases.size() >= 30, "corpus has fewer than 30 graded proofs");
  std::set<size_t> seen;  // justification variant indices covered
  for (const GradedCase& c : cases) {
    CheckReport rep = check_grpl(c.proof, c.gamma);
    require(rep.ok, c.name + " rejected: " + rep.str());
    std::set<std::string> vars;
    std::uint64_t l = 1;
    for (const GradedProofLine& ln : c.proof.lines) {
      seen.insert(ln.just.index());
      for (const auto& v : variables_of(ln.formula)) vars.insert(v);
      l = den_lcm(ln.formula, l);
      l = lcm_u(l, ln.grade.den().convert_to<std::uint64_t>());
    }
    for (const auto& [f, g] : c.gamma.support()) {
      for (const auto& v : variables_of(f)) vars.insert(v);
      l = den_lcm(f, l);
      l = lcm_u(l, g.den().convert_to<std::uint64_t>());
    }
    int n = static_cast<int>(2 * l);
    const Formula& conc = rep.conclusion;
    UnitRational grade = *rep.conclusion_grade;
    for_each_assignment(vars, n, [&](const Assignment& v) {
      if (!respects(v, c.gamma)) return;
      require(grade <= eval(conc, v),
              c.name + ": grade exceeds semantic value");
    });
  }
  // Every axiom kind (A)-(D) and both rules (E), (F) appear in the corpus.
  for (const Justification& j :
       {Justification(AxiomL{}), Justification(GrConst{}),
        Justification(BookImp{}), Justification(BookNeg{}),
        Justification(GrZero{}), Justification(Hyp{}), Justification(GMP{}),
        Justification(Lift{})}) {
    require(seen.count(j.index()) == 1, "corpus misses a justification kind");
  }
}

// ---------------------------------------------------------------------------
// 4. Embedding lemmas in executable form, on the whole corpus.
void criterion4(const std::vector<GradedCase>& cases) {
  for (const GradedCase& c : cases) {
    UnitRational q = c.proof.conclusion().grade;
    Formula phi = c.proof.conclusion().formula;
    Formula shifted = imp(constant(q), phi);

    TranslationResult r1 = grpl_to_rpl(c.proof, c.gamma);
    require(check_rpl(*r1.proof, r1.theory, &standard_rules()).ok,
            c.name + ": grpl_to_rpl output rejected");
    require(base_equal(r1.conclusion, shifted),
            c.name + ": grpl_to_rpl conclusion is not the shift");

    TranslationResult r2 = rpl_to_grpl(*r1.proof, r1.theory, &standard_rules());
    require(check_grpl(*r2.graded, r2.fuzzy_theory).ok,
            c.name + ": rpl_to_grpl output rejected");
    for (const GradedProofLine& ln : r2.graded->lines)
      require(ln.grade.is_one(), c.name + ": rpl_to_grpl grade below 1");

    for (TranslationResult r :
         {normalize_grades(c.proof, c.gamma), grpl_self_embed(c.proof, c.gamma)}) {
      require(check_grpl(*r.graded, r.fuzzy_theory).ok,
              c.name + ": grade-1 embedding rejected");
      for (const GradedProofLine& ln : r.graded->lines)
        require(ln.grade.is_one(), c.name + ": embedding grade below 1");
      require(base_equal(r.conclusion, shifted),
              c.name + ": embedding conclusion is not the shift");
    }
  }
}

// ---------------------------------------------------------------------------
// 5. Exact sandwich instances.
void criterion5() {
  {
    FuzzyTheory gamma;
    gamma.set(parse_formula("p"), UnitRational(2, 3));
    gamma.set(parse_formula("p -> q"), UnitRational(2, 3));
    GradedProof cert = parse_graded_proof(
        "1 : 2/3 : p ; hyp\n2 : 2/3 : p -> q ; hyp\n3 : 1/3 : q ; gmp 1 2\n");
    DegreeReport d = degree_sandwich(gamma, parse_formula("q"), cert, 6);
    require(d.exact && d.upper == UnitRational(1, 3) &&
                *d.lower == UnitRational(1, 3),
            "sandwich 1/3 for q");
  }
  {
    FuzzyTheory gamma;
    gamma.set(parse_formula("p"), UnitRational(1, 2));
    GradedProof cert = parse_graded_proof("1 : 1/2 : p ; hyp\n");
    DegreeReport d = degree_sandwich(gamma, parse_formula("p"), cert, 4);
    require(d.exact && d.upper == UnitRational(1, 2), "sandwich 1/2 for p");
  }
  {
    FuzzyTheory empty;
    DegreeReport d = validity_degree_grid(empty, parse_formula("p \\/ ~p"), 2);
    require(d.upper == UnitRational(1, 2), "upper bound 1/2 for p or not p");
  }
}

// ---------------------------------------------------------------------------
// 6. Torrens and bookkeeping definability on grids.
void criterion6() {
  for (int n = 2; n <= 12; ++n) {
    DefinitionTheory d = torrens_definition(n);
    for (int m = n; m <= 60; m += n) {
      require(unique_solutions_grid(d, "z", m) ==
                  std::set<UnitRational>{UnitRational(1, n)},
              "torrens uniqueness for 1/" + std::to_string(n));
    }
  }
  for (int q = 2; q <= 4; ++q) {
    DefinitionTheory d = bookkeeping_variables(q);
    for (const auto& [value, name] : d.defined) {
      require(unique_solutions_grid(d, name, 12, 50'000'000) ==
                  std::set<UnitRational>{value},
              "bookkeeping forces " + name);
    }
  }
}

// ---------------------------------------------------------------------------
// 7. Constant elimination preserves grid validity degrees, both strategies.
void criterion7(const fs::path& corpus) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(corpus / "consecutions"))
    if (e.path().extension() == ".f") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  require(files.size() >= 20, "fewer than 20 consecutions in corpus");

  for (const auto& file : files) {
    Formula phi = parse_formula(read_file(file));
    Theory t = parse_theory(read_file(fs::path(file).replace_extension(".th")));
    std::uint64_t l = den_lcm(phi, 1);
    for (const Formula& f : t.formulas()) l = den_lcm(f, l);
    require(l <= 24, "common denominator exceeds 24");
    DegreeReport before = validity_degree_grid(t, phi, l, 100'000'000);
    for (ElimStrategy s : {ElimStrategy::torrens, ElimStrategy::bookkeeping}) {
      Elimination e = eliminate_constants(t, phi, s);
      Theory star = e.theory;
      for (const Formula& f : e.defs.formulas) star.add(f);
      DegreeReport after = validity_degree_grid(star, e.formula, l, 100'000'000);
      require(before.upper == after.upper,
              file.stem().string() + ": degree changed by elimination");
    }
  }
}

// ---------------------------------------------------------------------------
// 8. Every derived-rule template expands kernel-only and re-checks, for all
// probe parameters with denominators <= 4.
void criterion8() {
  const std::vector<UnitRational> qs = {
      UnitRational(0, 1), UnitRational(1, 1), UnitRational(1, 2),
      UnitRational(1, 3), UnitRational(2, 3), UnitRational(1, 4),
      UnitRational(3, 4)};
  Formula p = var("p"), q = var("q"), r = var("r");

  struct Case {
    std::string rule;
    std::vector<Formula> premises;
    Formula conclusion;
  };
  std::vector<Case> cases;
  cases.push_back({"identity", {}, imp(p, p)});
  for (const auto& a : qs)
    cases.push_back({"identity", {}, imp(imp(constant(a), p), imp(constant(a), p))});
  cases.push_back({"transitivity-chain", {imp(p, q), imp(q, r)}, imp(p, r)});
  cases.push_back(
      {"transitivity-chain", {imp(p, q), imp(q, r), imp(r, neg(p))}, imp(p, neg(p))});
  cases.push_back({"exchange", {imp(p, imp(q, r))}, imp(q, imp(p, r))});
  for (const auto& a : qs)
    for (const auto& b : qs) {
      cases.push_back({"gmp-sim",
                       {imp(constant(a), p), imp(constant(b), imp(p, q))},
                       imp(constant(mv_conj(a, b)), q)});
      cases.push_back({"lift-sim",
                       {imp(constant(a), p)},
                       imp(constant(mv_imp(b, a)), imp(constant(b), p))});
      cases.push_back({"book-swap",
                       {imp(p, imp(constant(a), constant(b)))},
                       imp(p, constant(mv_imp(a, b)))});
    }

  const DerivedRegistry& reg = standard_rules();
  for (const Case& c : cases) {
    require(reg.has(c.rule), "rule not registered: " + c.rule);
    ProofBuilder b;
    Theory t;
    std::vector<int> refs;
    for (const Formula& h : c.premises) {
      refs.push_back(b.add_hyp(h));
      t.add(h);
    }
    b.add_derived(c.rule, refs, c.conclusion);
    Proof expanded = reg.expand_to_kernel(b.take());
    for (const ProofLine& ln : expanded.lines)
      require(!std::holds_alternative<Derived>(ln.just),
              c.rule + ": expansion kept a derived step");
    CheckReport rep = check_rpl(expanded, t);
    require(rep.ok, c.rule + ": expansion rejected: " + rep.str());
    require(base_equal(rep.conclusion, c.conclusion),
            c.rule + ": expansion proves the wrong formula");
  }
}

// ---------------------------------------------------------------------------
// 9. Format stability: byte-identical round trips over the whole corpus.
void criterion9(const fs::path& corpus, const std::vector<GradedCase>& cases) {
  for (const GradedCase& c : cases) {
    std::string once = print_proof(parse_graded_proof(c.proof_text));
    std::string twice = print_proof(parse_graded_proof(once));
    require(once == twice, c.name + ": graded proof round trip");
    std::string t1 = print_theory(c.gamma);
    require(print_theory(parse_fuzzy_theory(t1)) == t1,
            c.name + ": theory round trip");
  }
  for (const auto& e : fs::directory_iterator(corpus / "consecutions")) {
    if (e.path().extension() != ".f") continue;
    std::string once = print(parse_formula(read_file(e.path())));
    require(print(parse_formula(once)) == once,
            e.path().stem().string() + ": formula round trip");
  }
  // Reruns are deterministic down to the byte.
  for (const GradedCase& c : cases) {
    FuzzyTheory g1 = parse_fuzzy_theory(print_theory(c.gamma));
    TranslationResult a = grpl_to_rpl(c.proof, c.gamma);
    TranslationResult b = grpl_to_rpl(parse_graded_proof(c.proof_text), g1);
    require(a.str() == b.str(), c.name + ": translation not deterministic");
  }
}

}  // namespace

int main(int argc, char** argv) {
  fs::path corpus = argc > 1 ? argv[1] : "corpus";
  int failures = 0;
  std::vector<GradedCase> cases;

  auto run = [&](int k, const std::string& title,
                 const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    try {
      fn();
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
      std::cout << "PASS " << k << ": " << title << " (" << ms << " ms)\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "FAIL " << k << ": " << title << " -- " << e.what() << "\n";
    }
  };

  try {
    cases = load_graded(corpus);
  } catch (const std::exception& e) {
    std::cout << "FAIL 0: cannot load corpus at " << corpus << " -- "
              << e.what() << "\n";
    return 1;
  }

  run(1, "algebraic laws exact on grids 1..12", criterion1);
  run(2, "kernel soundness fuzzing, 1000 proofs", criterion2);
  run(3, "graded soundness over the corpus", [&] { criterion3(cases); });
  run(4, "embedding lemmas, executable form", [&] { criterion4(cases); });
  run(5, "exact sandwich instances", criterion5);
  run(6, "definability on grids", criterion6);
  run(7, "constant elimination preserves degrees", [&] { criterion7(corpus); });
  run(8, "derived-rule templates expand kernel-only", criterion8);
  run(9, "format stability round trips", [&] { criterion9(corpus, cases); });

  return failures == 0 ? 0 : 1;
}
