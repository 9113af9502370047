#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pavelka/formula.hpp"

namespace pavelka {

// Justifications for the kernel and graded calculi.

struct AxiomL {  // instance of A1..A4, with an explicit substitution
  std::string name;
  std::map<std::string, Formula> binding;
};
struct BookImp {  // (#q -> #r) <-> #(q ->L r)
  UnitRational q, r;
};
struct BookNeg {  // ~#q <-> #(1-q)
  UnitRational q;
};
struct BookOne {};
struct BookZero {};
struct Hyp {};
struct GrConst {  // graded axiom (B): the constant #q in grade q
  UnitRational q;
};
struct GrZero {};  // graded axiom (D): any formula in grade 0
struct MP {
  int i, j;  // j must prove formula_i -> formula_current
};
struct GMP {
  int i, j;  // graded modus ponens; grade = grade_i (.) grade_j
};
struct Lift {
  int i;  // from (phi, q) derive (#r -> phi, r ->L q)
  UnitRational r;
};
struct Derived {  // registered derived rule application
  std::string rule;
  std::vector<int> refs;
};

using Justification = std::variant<AxiomL, BookImp, BookNeg, BookOne, BookZero,
                                   Hyp, GrConst, GrZero, MP, GMP, Lift, Derived>;

struct ProofLine {
  int index = 0;
  Formula formula;
  Justification just;
};

struct GradedProofLine {
  int index = 0;
  UnitRational grade;
  Formula formula;
  Justification just;
};

struct Proof {
  std::vector<ProofLine> lines;
  const ProofLine& conclusion() const { return lines.back(); }
};

struct GradedProof {
  std::vector<GradedProofLine> lines;
  const GradedProofLine& conclusion() const { return lines.back(); }
};

struct CheckReport {
  bool ok = false;
  std::optional<std::pair<int, std::string>> first_error;
  Formula conclusion;                          // null when the proof is empty
  std::optional<UnitRational> conclusion_grade;  // graded checks only
  std::string str() const;
};

// Proof file round trip.  Kernel format, one line each:
//   <idx> : <formula> ; <just>
// with <just> one of `ax A1[Phi := f, Psi := g]` .. `ax A4[..]`,
// `book-imp[p/q, r/s]`, `book-neg[p/q]`, `book-one`, `book-zero`, `hyp`,
// `mp i j`, `dr <name> i j ...`.
// Graded format:  <idx> : <p/q> : <formula> ; <just>
// with `ax-L A1[..]`, `ax-const[p/q]`, `ax-book-imp[..]`, `ax-book-neg[..]`,
// `ax-zero`, `hyp`, `gmp i j`, `lift i [p/q]`.
Proof parse_proof(const std::string& text);
GradedProof parse_graded_proof(const std::string& text);
std::string print_proof(const Proof& p);
std::string print_proof(const GradedProof& p);

}  // namespace pavelka
