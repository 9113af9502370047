#pragma once

#include <map>
#include <string>
#include <vector>

#include "pavelka/proof.hpp"

namespace pavelka {

/// Incremental kernel-proof construction.  Every emitted line is computed,
/// not stated, so a finished build passes the checker by construction.
class ProofBuilder {
 public:
  /// Axiom instance; chi is ignored for A1, A3, A4.
  int add_axiom(const std::string& name, Formula phi, Formula psi,
                Formula chi = nullptr);
  int add_hyp(Formula f);
  int add_book_imp(const UnitRational& q, const UnitRational& r);
  int add_book_neg(const UnitRational& q);
  int add_book_one();
  int add_book_zero();
  /// Line j must be an implication whose antecedent matches line i
  /// (up to definitional expansion); appends its consequent.
  int add_mp(int i, int j);
  int add_derived(const std::string& rule, std::vector<int> refs,
                  Formula conclusion);
  /// Restates a line verbatim; the caller vouches for the justification.
  int add_line(Formula f, Justification j);

  int size() const { return static_cast<int>(p_.lines.size()); }
  const Formula& formula(int i) const;
  const Proof& proof() const { return p_; }
  Proof take() { return std::move(p_); }

 private:
  int push(Formula f, Justification j);
  Proof p_;
};

// Theorem emitters: append a derivation of the named theorem instance and
// return the index of its final line.

int thm_identity(ProofBuilder& b, Formula a);     // a -> a
int thm_dne(ProofBuilder& b, Formula a);          // ~~a -> a
int thm_dni(ProofBuilder& b, Formula a);          // a -> ~~a
int thm_assertion(ProofBuilder& b, Formula a, Formula c);  // a -> (a->c) -> c
int thm_contraposition(ProofBuilder& b, Formula a, Formula fb);  // (a->fb) -> ~fb->~a
int thm_duns_scotus(ProofBuilder& b, Formula p, Formula q);  // p -> ~p -> q
int thm_truth(ProofBuilder& b);                   // #1   (needs bookkeeping)
int thm_zero_implies(ProofBuilder& b, Formula f); // #0 -> f

// Rule emitters: extend the proof from existing lines.

int rule_syl(ProofBuilder& b, int i, int j);       // a->b, b->c  =>  a->c
int rule_exchange(ProofBuilder& b, int i);         // p->(q->r)  =>  q->(p->r)
int rule_prefix(ProofBuilder& b, int i, Formula c);  // |-a->b => (c->a)->(c->b)
int rule_suffix(ProofBuilder& b, int i, Formula t);  // |-c->a => (a->t)->(c->t)
int rule_contrapose(ProofBuilder& b, int i);       // a->b  =>  ~b->~a
int rule_import(ProofBuilder& b, int i);           // a->(b->c) => ~(~~a->~b)->c
int rule_equiv_elim1(ProofBuilder& b, int i);      // A<->B  =>  A->B
int rule_equiv_elim2(ProofBuilder& b, int i);      // A<->B  =>  B->A
int thm_flip(ProofBuilder& b, Formula a, Formula c);  // (a->~c) -> (c->~a)
int thm_sconj_intro(ProofBuilder& b, Formula x, Formula z);  // x -> z -> x*z
int rule_equiv_intro(ProofBuilder& b, int i, int j);  // |-a->b, |-b->a => a<->b
int thm_equiv_refl(ProofBuilder& b, Formula f);    // f <-> f (in base form)

}  // namespace pavelka
