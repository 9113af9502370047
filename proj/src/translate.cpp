#include "pavelka/translate.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "pavelka/checker.hpp"
#include "pavelka/derived.hpp"
#include "pavelka/rational.hpp"
#include "pavelka/theorems.hpp"

namespace pavelka {

namespace {

// Incremental construction of graded proofs, mirroring ProofBuilder.
class GradedBuilder {
 public:
  int push(const UnitRational& grade, Formula f, Justification j) {
    int idx = static_cast<int>(p_.lines.size()) + 1;
    p_.lines.push_back(GradedProofLine{idx, grade, std::move(f), std::move(j)});
    return idx;
  }
  int size() const { return static_cast<int>(p_.lines.size()); }
  const GradedProofLine& line(int i) const { return p_.lines.at(i - 1); }
  GradedProof take() { return std::move(p_); }

 private:
  GradedProof p_;
};

UnitRational one() { return UnitRational::one(); }
UnitRational zero() { return UnitRational::zero(); }

// Transplant the crisp lines [from, crisp.size()] of a kernel proof into a
// graded proof at grade 1: axioms become graded axiom instances, bookkeeping
// lines graded bookkeeping, MP becomes graded modus ponens (1 (.) 1 = 1).
// `cmap` maps already-placed crisp line indices (the hypotheses the fragment
// consumes) to graded lines; it is extended with the new lines.  The crisp
// fragment must not contain hyp, book-one, book-zero or derived lines.
int graft_grade_one(GradedBuilder& g, const Proof& crisp, int from,
                    std::map<int, int>& cmap,
                    std::vector<int>& provenance, int src) {
  int last = 0;
  for (int k = from; k <= static_cast<int>(crisp.lines.size()); ++k) {
    const ProofLine& ln = crisp.lines[k - 1];
    Justification out;
    if (const auto* ax = std::get_if<AxiomL>(&ln.just)) {
      out = *ax;
    } else if (const auto* bi = std::get_if<BookImp>(&ln.just)) {
      out = *bi;
    } else if (const auto* bn = std::get_if<BookNeg>(&ln.just)) {
      out = *bn;
    } else if (const auto* mp = std::get_if<MP>(&ln.just)) {
      out = GMP{cmap.at(mp->i), cmap.at(mp->j)};
    } else {
      throw ValueError("cannot transplant justification at grade 1");
    }
    last = g.push(one(), ln.formula, std::move(out));
    cmap[k] = last;
    provenance.push_back(src);
  }
  return last;
}

// Run a crisp scratch derivation that consumes `hyp_formulas` as hypotheses
// and graft everything after the hypothesis block into the graded proof at
// grade 1, wiring the hypotheses to existing graded lines `hyp_lines`.
template <typename Emit>
int graft_scratch(GradedBuilder& g, const std::vector<Formula>& hyp_formulas,
                  const std::vector<int>& hyp_lines, Emit emit,
                  std::vector<int>& provenance, int src) {
  ProofBuilder b;
  std::map<int, int> cmap;
  for (size_t k = 0; k < hyp_formulas.size(); ++k) {
    int h = b.add_hyp(hyp_formulas[k]);
    cmap[h] = hyp_lines[k];
  }
  emit(b);
  return graft_grade_one(g, b.proof(),
                         static_cast<int>(hyp_formulas.size()) + 1, cmap,
                         provenance, src);
}

void require_checked(const CheckReport& r, const char* what) {
  if (!r.ok) {
    std::ostringstream os;
    os << what << " rejected at line " << r.first_error->first << ": "
       << r.first_error->second;
    throw ValueError(os.str());
  }
}

}  // namespace

std::string TranslationResult::provenance_comments() const {
  std::ostringstream os;
  for (size_t k = 0; k < provenance.size(); ++k) {
    os << "# " << (k + 1) << " <= ";
    if (provenance[k] == 0) {
      os << "glue";
    } else {
      os << provenance[k];
    }
    os << "\n";
  }
  return os.str();
}

std::string TranslationResult::str() const {
  std::istringstream body(proof ? print_proof(*proof) : print_proof(*graded));
  std::ostringstream os;
  std::string line;
  for (size_t k = 0; std::getline(body, line); ++k) {
    os << "# " << (k + 1) << " <= "
       << (k < provenance.size() && provenance[k] != 0
               ? std::to_string(provenance[k])
               : std::string("glue"))
       << "\n"
       << line << "\n";
  }
  return os.str();
}

GradedProof push_pull(bool forward, const UnitRational& q,
                      const Formula& phi) {
  GradedBuilder g;
  if (forward) {
    int h = g.push(q, phi, Hyp{});
    g.push(mv_imp(q, q), imp(constant(q), phi), Lift{h, q});
  } else {
    int h = g.push(one(), imp(constant(q), phi), Hyp{});
    int c = g.push(q, constant(q), GrConst{q});
    g.push(mv_conj(q, one()), phi, GMP{c, h});
  }
  return g.take();
}

TranslationResult grpl_to_rpl(const GradedProof& p, const FuzzyTheory& gamma) {
  require_checked(check_grpl(p, gamma), "graded proof");

  TranslationResult out;
  for (const auto& [f, r] : gamma.support()) {
    out.theory.add(imp(constant(r), f));
  }

  ProofBuilder b;
  std::map<int, int> lmap;  // source line -> output line proving #q -> phi
  std::vector<int>& prov = out.provenance;
  auto pad = [&](int src) {
    // Provenance for lines the builder appended since the last sync; the
    // final one realises `src`, the rest are glue.
    while (static_cast<int>(prov.size()) < b.size()) prov.push_back(0);
    prov.back() = src;
  };

  for (const GradedProofLine& ln : p.lines) {
    int src = ln.index;
    if (const auto* ax = std::get_if<AxiomL>(&ln.just)) {
      // A grade-1 axiom line becomes #1 -> phi via A1 and modus ponens.
      int a = b.add_line(ln.formula, *ax);
      int k = b.add_axiom("A1", ln.formula, constant(one()));
      lmap[src] = b.add_mp(a, k);
    } else if (const auto* bi = std::get_if<BookImp>(&ln.just)) {
      int a = b.add_line(ln.formula, *bi);
      int k = b.add_axiom("A1", ln.formula, constant(one()));
      lmap[src] = b.add_mp(a, k);
    } else if (const auto* bn = std::get_if<BookNeg>(&ln.just)) {
      int a = b.add_line(ln.formula, *bn);
      int k = b.add_axiom("A1", ln.formula, constant(one()));
      lmap[src] = b.add_mp(a, k);
    } else if (const auto* gc = std::get_if<GrConst>(&ln.just)) {
      Formula c = constant(gc->q);
      lmap[src] = b.add_derived("identity", {}, imp(c, c));
    } else if (std::get_if<GrZero>(&ln.just)) {
      lmap[src] = thm_zero_implies(b, ln.formula);
    } else if (std::get_if<Hyp>(&ln.just)) {
      lmap[src] = b.add_hyp(imp(constant(ln.grade), ln.formula));
    } else if (const auto* gm = std::get_if<GMP>(&ln.just)) {
      lmap[src] = b.add_derived("gmp-sim", {lmap.at(gm->i), lmap.at(gm->j)},
                                imp(constant(ln.grade), ln.formula));
    } else if (const auto* lf = std::get_if<Lift>(&ln.just)) {
      lmap[src] = b.add_derived("lift-sim", {lmap.at(lf->i)},
                                imp(constant(ln.grade), ln.formula));
    } else {
      throw ValueError("unsupported justification in graded proof");
    }
    pad(src);
  }

  out.proof = b.take();
  out.conclusion = out.proof->conclusion().formula;
  require_checked(check_rpl(*out.proof, out.theory, &standard_rules()),
                  "translated proof");
  return out;
}

TranslationResult rpl_to_grpl(const Proof& p, const Theory& t,
                              const DerivedValidator* rules) {
  require_checked(check_rpl(p, t, rules), "crisp proof");

  // Work on a derived-rule-free kernel proof.  Expansion preserves the
  // order and content of the original lines, so provenance survives: each
  // expanded line either realises an original line or is glue.
  const auto& reg = standard_rules();
  Proof kernel = reg.expand_to_kernel(p);

  // Recover which kernel line realises which source line: expansion is
  // deterministic and processes lines in order, so expanding the prefix
  // that ends at a source line tells us where that line landed.
  std::vector<int> kernel_src(kernel.lines.size(), 0);
  for (const ProofLine& ln : p.lines) {
    Proof prefix;
    prefix.lines.assign(p.lines.begin(), p.lines.begin() + ln.index);
    Proof eprefix = reg.expand_to_kernel(prefix);
    kernel_src[eprefix.lines.size() - 1] = ln.index;
  }

  TranslationResult out;
  out.fuzzy_theory = FuzzyTheory::from_crisp(t);

  GradedBuilder g;
  ProofBuilder shadow;  // crisp mirror used to expand book-one/book-zero
  std::map<int, int> kmap;   // kernel line -> graded line
  std::map<int, int> smap;   // kernel line -> shadow line
  std::map<int, int> cmap;   // shadow line -> graded line
  std::vector<int>& prov = out.provenance;

  for (size_t k = 1; k <= kernel.lines.size(); ++k) {
    const ProofLine& ln = kernel.lines[k - 1];
    int src = kernel_src[k - 1];
    int gl = 0;
    if (const auto* ax = std::get_if<AxiomL>(&ln.just)) {
      gl = g.push(one(), ln.formula, *ax);
      smap[k] = shadow.add_line(ln.formula, *ax);
      prov.push_back(src);
    } else if (const auto* bi = std::get_if<BookImp>(&ln.just)) {
      gl = g.push(one(), ln.formula, *bi);
      smap[k] = shadow.add_line(ln.formula, *bi);
      prov.push_back(src);
    } else if (const auto* bn = std::get_if<BookNeg>(&ln.just)) {
      gl = g.push(one(), ln.formula, *bn);
      smap[k] = shadow.add_line(ln.formula, *bn);
      prov.push_back(src);
    } else if (std::holds_alternative<BookOne>(ln.just) ||
               std::holds_alternative<BookZero>(ln.just)) {
      // The vacuous bookkeeping forms #1 <-> #1 and #0 <-> #0 have no
      // graded counterpart; derive the equivalence from axioms instead.
      Formula c = std::holds_alternative<BookOne>(ln.just) ? constant(one())
                                                           : constant(zero());
      int before = shadow.size();
      int refl = thm_equiv_refl(shadow, c);
      gl = graft_grade_one(g, shadow.proof(), before + 1, cmap, prov, 0);
      prov.back() = src;
      smap[k] = refl;
    } else if (std::get_if<Hyp>(&ln.just)) {
      gl = g.push(one(), ln.formula, Hyp{});
      smap[k] = shadow.add_hyp(ln.formula);
      prov.push_back(src);
    } else if (const auto* mp = std::get_if<MP>(&ln.just)) {
      gl = g.push(one(), ln.formula, GMP{kmap.at(mp->i), kmap.at(mp->j)});
      smap[k] = shadow.add_line(ln.formula, MP{smap.at(mp->i), smap.at(mp->j)});
      prov.push_back(src);
    } else {
      throw ValueError("unexpected justification after kernel expansion");
    }
    kmap[k] = gl;
    cmap[smap[k]] = gl;
  }

  out.graded = g.take();
  out.conclusion = out.graded->conclusion().formula;
  out.conclusion_grade = one();
  require_checked(check_grpl(*out.graded, out.fuzzy_theory),
                  "translated proof");
  return out;
}

TranslationResult normalize_grades(const GradedProof& p,
                                   const FuzzyTheory& gamma) {
  require_checked(check_grpl(p, gamma), "graded proof");

  TranslationResult out;
  for (const auto& [f, r] : gamma.support()) {
    out.fuzzy_theory.set(imp(constant(r), f), one());
  }

  GradedBuilder g;
  std::map<int, int> lmap;  // source line -> grade-1 line for #q -> phi
  std::vector<int>& prov = out.provenance;

  for (const GradedProofLine& ln : p.lines) {
    int src = ln.index;
    Formula shifted = imp(constant(ln.grade), ln.formula);
    if (std::holds_alternative<AxiomL>(ln.just) ||
        std::holds_alternative<BookImp>(ln.just) ||
        std::holds_alternative<BookNeg>(ln.just)) {
      // Grade-1 line: restate it, then lift by 1 to get #1 -> phi.
      int a = g.push(one(), ln.formula, ln.just);
      prov.push_back(0);
      lmap[src] = g.push(one(), shifted, Lift{a, one()});
      prov.push_back(src);
    } else if (std::get_if<GrConst>(&ln.just)) {
      // #q in grade q shifts to #q -> #q at grade 1; derive it from axioms
      // so no intermediate line drops below grade 1.
      Formula c = constant(ln.grade);
      lmap[src] = graft_scratch(
          g, {}, {}, [&](ProofBuilder& b) { thm_identity(b, c); }, prov, src);
    } else if (std::get_if<GrZero>(&ln.just)) {
      lmap[src] = graft_scratch(
          g, {}, {},
          [&](ProofBuilder& b) { thm_zero_implies(b, ln.formula); }, prov,
          src);
    } else if (std::get_if<Hyp>(&ln.just)) {
      // The shifted theory carries #q -> phi at grade 1 directly.
      lmap[src] = g.push(one(), shifted, Hyp{});
      prov.push_back(src);
    } else if (const auto* gm = std::get_if<GMP>(&ln.just)) {
      const GradedProofLine& pi = p.lines[gm->i - 1];
      const GradedProofLine& pj = p.lines[gm->j - 1];
      lmap[src] = graft_scratch(
          g,
          {imp(constant(pi.grade), pi.formula),
           imp(constant(pj.grade), pj.formula)},
          {lmap.at(gm->i), lmap.at(gm->j)},
          [&](ProofBuilder& b) {
            standard_rules().emit("gmp-sim", b, {1, 2}, shifted);
          },
          prov, src);
    } else if (const auto* lf = std::get_if<Lift>(&ln.just)) {
      const GradedProofLine& pi = p.lines[lf->i - 1];
      lmap[src] = graft_scratch(
          g, {imp(constant(pi.grade), pi.formula)}, {lmap.at(lf->i)},
          [&](ProofBuilder& b) {
            standard_rules().emit("lift-sim", b, {1}, shifted);
          },
          prov, src);
    } else {
      throw ValueError("unsupported justification in graded proof");
    }
  }

  out.graded = g.take();
  out.conclusion = out.graded->conclusion().formula;
  out.conclusion_grade = one();
  require_checked(check_grpl(*out.graded, out.fuzzy_theory),
                  "normalized proof");
  for (const GradedProofLine& ln : out.graded->lines) {
    if (!(ln.grade == one())) {
      throw ValueError("normalized proof contains a grade below 1");
    }
  }
  return out;
}

TranslationResult grpl_self_embed(const GradedProof& p,
                                  const FuzzyTheory& gamma) {
  TranslationResult mid = grpl_to_rpl(p, gamma);
  TranslationResult out = rpl_to_grpl(*mid.proof, mid.theory, &standard_rules());
  // Compose provenance through the intermediate proof.
  for (int& src : out.provenance) {
    if (src != 0) src = mid.provenance[src - 1];
  }
  out.conclusion_grade = UnitRational::one();
  return out;
}

}  // namespace pavelka
