#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>

#include "pavelka/rational.hpp"

namespace pavelka {

enum class Conn {
  Var,        // proposition variable or metavariable
  Const,      // rational truth constant (0 and 1 included)
  Neg,        // ~
  Imp,        // ->
  SDisj,      // +   (strong disjunction)
  SConj,      // *   (strong conjunction)
  Min,        // min (weak conjunction)
  Max,        // max (weak disjunction)
  Equiv,      // <->
  Pow,        // ^n, n >= 1
  NMul,       // n., n >= 1
  ConstMeta,  // constant metavariable; only inside rule patterns
};

struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

struct FormulaNode {
  Conn kind;
  std::string name;    // Var, ConstMeta
  UnitRational value;  // Const
  Formula left, right; // unary connectives use left only
  int count = 0;       // Pow / NMul
};

Formula var(std::string name);
Formula constant(UnitRational q);
Formula constant(int p, int q);
Formula neg(Formula f);
Formula imp(Formula a, Formula b);
Formula sdisj(Formula a, Formula b);
Formula sconj(Formula a, Formula b);
Formula fmin(Formula a, Formula b);
Formula fmax(Formula a, Formula b);
Formula equiv(Formula a, Formula b);
Formula pow(Formula f, int n);   // throws ValueError if n < 1
Formula nmul(int n, Formula f);  // throws ValueError if n < 1
Formula const_meta(std::string name);

/// Structural (syntactic) equality.
bool equal(const Formula& a, const Formula& b);
/// Total order for use as a map key; consistent with equal.
int compare(const Formula& a, const Formula& b);
struct FormulaLess {
  bool operator()(const Formula& a, const Formula& b) const {
    return compare(a, b) < 0;
  }
};

/// Canonical printout; parse(print(f)) is structurally equal to f.
std::string print(const Formula& f);

/// Definitional expansion to the base language {Var, Const, Neg, Imp}:
///   a \/ b  ~>  (a -> b) -> b
///   a + b   ~>  ~a -> b
///   a * b   ~>  ~(~a + ~b)
///   a /\ b  ~>  a * (a -> b)
///   a <-> b ~>  (a -> b) /\ (b -> a)
/// with Pow/NMul unrolled left-associatively.  Idempotent.
Formula to_base(const Formula& f);

/// Equality after to_base normalization; the comparison used by the
/// proof kernel throughout.
bool base_equal(const Formula& a, const Formula& b);

/// True iff the name is a schema metavariable (uppercase-initial identifier,
/// e.g. Phi, Psi, Chi), as opposed to an ordinary proposition variable.
bool is_metavariable(const std::string& name);

/// Simultaneous substitution of metavariables.  Every metavariable occurring
/// in the schema must be bound; throws ValueError otherwise.
Formula substitute(const Formula& schema,
                   const std::map<std::string, Formula>& binding);

/// All Const payloads other than 0 and 1.
std::set<UnitRational, std::less<UnitRational>> constants_of(const Formula& f);

/// All variable names (metavariables included).
std::set<std::string> variables_of(const Formula& f);

/// True iff f contains a Const node other than 0/1 (i.e. leaves the
/// constant-free language of Lukasiewicz logic).
bool has_proper_constants(const Formula& f);

}  // namespace pavelka
