#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pavelka/proof.hpp"
#include "pavelka/theory.hpp"

namespace pavelka {

// Result of translating a proof between the graded and the constant-shifted
// presentation.  Exactly one of `proof` (crisp target) and `graded` (graded
// target) is set, together with the matching premise set.  `provenance[k]`
// gives, for output line k+1, the source line it realises, or 0 for glue
// lines introduced by the translation itself.
struct TranslationResult {
  std::optional<Proof> proof;
  std::optional<GradedProof> graded;
  Theory theory;
  FuzzyTheory fuzzy_theory;
  Formula conclusion;
  std::optional<UnitRational> conclusion_grade;
  std::vector<int> provenance;

  // One comment line "# <out> <= <src>" or "# <out> <= glue" per output line.
  std::string provenance_comments() const;
  // The output proof rendered with provenance comments interleaved.
  std::string str() const;
};

// The two-line bridges between a graded hypothesis line (phi, q) and the
// shifted form (q -> phi, 1).  `forward` turns the graded line into the
// shifted implication via lifting; backward recovers (phi, q) from the
// shifted implication using a constant line and graded modus ponens.
GradedProof push_pull(bool forward, const UnitRational& q, const Formula& phi);

// Map a graded proof of (phi, q) from Gamma to a crisp proof of q -> phi
// from the shifted theory { r -> psi : (psi, r) in Gamma }.  The output
// uses derived-rule steps (identity, gmp-sim, lift-sim) for the graded
// rule simulations; pass it through expand_to_kernel for kernel-only form.
TranslationResult grpl_to_rpl(const GradedProof& p, const FuzzyTheory& gamma);

// Map a crisp proof of phi from T to a graded proof of (phi, 1) from the
// theory T taken with all grades 1.  Derived-rule steps are expanded first;
// every output line has grade exactly 1.
TranslationResult rpl_to_grpl(const Proof& p, const Theory& t,
                              const class DerivedValidator* rules = nullptr);

// Rebuild a graded proof of (phi, q) from Gamma as a graded proof of
// (q -> phi, 1) from the shifted theory { r -> psi : (psi, r) in Gamma },
// with every line's grade exactly 1, then close back to (phi, q) is left
// to the caller via push_pull.  Conclusion is (q -> phi, 1).
TranslationResult normalize_grades(const GradedProof& p,
                                   const FuzzyTheory& gamma);

// Round trip: grpl_to_rpl followed by rpl_to_grpl.  Produces a graded
// proof of (q -> phi, 1) from the shifted theory in which every grade is 1.
TranslationResult grpl_self_embed(const GradedProof& p,
                                  const FuzzyTheory& gamma);

}  // namespace pavelka
