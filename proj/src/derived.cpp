#include "pavelka/derived.hpp"

#include <sstream>

namespace pavelka {

namespace {

const std::vector<UnitRational>& probe_rationals() {
  static const std::vector<UnitRational> qs = {
      UnitRational(0, 1), UnitRational(1, 1), UnitRational(1, 2),
      UnitRational(1, 3), UnitRational(2, 3), UnitRational(1, 4),
      UnitRational(3, 4)};
  return qs;
}

[[noreturn]] void shape_error(const std::string& rule, const std::string& msg) {
  throw ValueError(rule + ": " + msg);
}

Formula require_const_imp(const std::string& rule, const Formula& f,
                          const char* what) {
  if (f->kind != Conn::Imp || f->left->kind != Conn::Const)
    shape_error(rule, std::string(what) + " must have the form #q -> phi");
  return f;
}

int emit_identity(ProofBuilder& b, const std::vector<int>& refs,
                  const Formula& stated) {
  if (!refs.empty()) shape_error("identity", "takes no premises");
  if (stated->kind != Conn::Imp || !base_equal(stated->left, stated->right))
    shape_error("identity", "conclusion must have the form phi -> phi");
  return thm_identity(b, stated->left);
}

int emit_chain(ProofBuilder& b, const std::vector<int>& refs,
               const Formula& stated) {
  if (refs.size() < 2)
    shape_error("transitivity-chain", "needs at least two premises");
  int cur = refs[0];
  for (size_t k = 1; k < refs.size(); ++k) {
    Formula f = b.formula(cur), g = b.formula(refs[k]);
    if (f->kind != Conn::Imp || g->kind != Conn::Imp ||
        !base_equal(f->right, g->left))
      shape_error("transitivity-chain", "premises do not chain");
    cur = rule_syl(b, cur, refs[k]);
  }
  (void)stated;
  return cur;
}

int emit_exchange(ProofBuilder& b, const std::vector<int>& refs,
                  const Formula& stated) {
  if (refs.size() != 1) shape_error("exchange", "takes one premise");
  Formula f = b.formula(refs[0]);
  if (f->kind != Conn::Imp || f->right->kind != Conn::Imp)
    shape_error("exchange", "premise must have the form p -> (q -> r)");
  (void)stated;
  return rule_exchange(b, refs[0]);
}

// From #r -> phi and #s -> (phi -> psi), derive #(r (.) s) -> psi: the
// implicational simulation of graded modus ponens.
int emit_gmp_sim(ProofBuilder& b, const std::vector<int>& refs,
                 const Formula& stated) {
  if (refs.size() != 2) shape_error("gmp-sim", "takes two premises");
  Formula h1 = require_const_imp("gmp-sim", b.formula(refs[0]), "premise 1");
  Formula h2 = require_const_imp("gmp-sim", b.formula(refs[1]), "premise 2");
  if (h2->right->kind != Conn::Imp ||
      !base_equal(h2->right->left, h1->right))
    shape_error("gmp-sim", "premise 2 must implify premise 1's consequent");
  UnitRational r = h1->left->value, s = h2->left->value;
  UnitRational t = mv_conj(r, s);
  Formula psi = h2->right->right;
  (void)stated;
  if (t.is_zero()) return thm_zero_implies(b, psi);
  // t > 0, so r ->L (1-s) = 1-t and the bookkeeping chain below lands
  // exactly on #(1-t).
  UnitRational nt = mv_neg(t);
  int e1 = rule_exchange(b, refs[1]);              // phi -> (#s -> psi)
  int c1 = rule_syl(b, refs[0], e1);               // #r -> (#s -> psi)
  int t3 = thm_contraposition(b, constant(s), psi);
  int c2 = rule_syl(b, c1, t3);                    // #r -> (~psi -> ~#s)
  int ex2 = rule_exchange(b, c2);                  // ~psi -> (#r -> ~#s)
  int el1 = rule_equiv_elim1(b, b.add_book_neg(s));   // ~#s -> #(1-s)
  int c3 = rule_syl(b, ex2, rule_prefix(b, el1, constant(r)));
  int el2 = rule_equiv_elim1(b, b.add_book_imp(r, mv_neg(s)));
  int c4 = rule_syl(b, c3, el2);                   // ~psi -> #(1-t)
  int el3 = rule_equiv_elim2(b, b.add_book_neg(t));   // #(1-t) -> ~#t
  int c5 = rule_syl(b, c4, el3);                   // ~psi -> ~#t
  return b.add_mp(c5, b.add_axiom("A4", psi, constant(t)));
}

int emit_lift_sim(ProofBuilder& b, const std::vector<int>& refs,
                  const Formula& stated) {
  if (refs.size() != 1) shape_error("lift-sim", "takes one premise");
  Formula h = require_const_imp("lift-sim", b.formula(refs[0]), "premise");
  if (stated->kind != Conn::Imp || stated->left->kind != Conn::Const ||
      stated->right->kind != Conn::Imp ||
      stated->right->left->kind != Conn::Const)
    shape_error("lift-sim", "conclusion must have the form #u -> (#r -> phi)");
  UnitRational q = h->left->value;
  UnitRational r = stated->right->left->value;
  if (stated->left->value != mv_imp(r, q))
    shape_error("lift-sim", "conclusion constant is not r ->L q");
  Formula phi = h->right;
  int a2 = b.add_axiom("A2", constant(r), constant(q), phi);
  int ex = rule_exchange(b, a2);    // (#q -> phi) -> ((#r -> #q) -> (#r -> phi))
  int m = b.add_mp(refs[0], ex);    // (#r -> #q) -> (#r -> phi)
  int bi = b.add_book_imp(r, q);    // (#r -> #q) <-> #(r ->L q)
  int el = rule_equiv_elim2(b, bi); // #(r ->L q) -> (#r -> #q)
  return rule_syl(b, el, m);
}

int emit_book_swap(ProofBuilder& b, const std::vector<int>& refs,
                   const Formula& stated) {
  if (refs.size() != 1) shape_error("book-swap", "takes one premise");
  Formula h = b.formula(refs[0]);
  if (h->kind != Conn::Imp || h->right->kind != Conn::Imp ||
      h->right->left->kind != Conn::Const ||
      h->right->right->kind != Conn::Const)
    shape_error("book-swap", "premise must have the form phi -> (#r -> #s)");
  UnitRational r = h->right->left->value, s = h->right->right->value;
  int bi = b.add_book_imp(r, s);
  int el = rule_equiv_elim1(b, bi);  // (#r -> #s) -> #(r ->L s)
  (void)stated;
  return rule_syl(b, refs[0], el);
}

std::vector<ProbeCase> probes_identity() {
  std::vector<ProbeCase> out;
  Formula p = var("p"), q = var("q");
  for (const Formula& f : {p, neg(p), imp(p, q)}) out.push_back({{}, imp(f, f)});
  for (const UnitRational& c : probe_rationals())
    out.push_back({{}, imp(constant(c), constant(c))});
  return out;
}

std::vector<ProbeCase> probes_chain() {
  Formula p = var("p"), q = var("q"), r = var("r"), s = var("s");
  return {
      {{imp(p, q), imp(q, r)}, imp(p, r)},
      {{imp(p, q), imp(q, r), imp(r, s)}, imp(p, s)},
      {{imp(constant(1, 2), p), imp(p, neg(q))}, imp(constant(1, 2), neg(q))},
  };
}

std::vector<ProbeCase> probes_exchange() {
  Formula p = var("p"), q = var("q"), r = var("r");
  std::vector<ProbeCase> out = {
      {{imp(p, imp(q, r))}, imp(q, imp(p, r))},
  };
  for (const UnitRational& c : probe_rationals())
    out.push_back({{imp(constant(c), imp(q, r))}, imp(q, imp(constant(c), r))});
  return out;
}

std::vector<ProbeCase> probes_gmp_sim() {
  std::vector<ProbeCase> out;
  Formula p = var("p"), q = var("q");
  for (const UnitRational& r : probe_rationals()) {
    for (const UnitRational& s : probe_rationals()) {
      out.push_back({{imp(constant(r), p), imp(constant(s), imp(p, q))},
                     imp(constant(mv_conj(r, s)), q)});
    }
  }
  return out;
}

std::vector<ProbeCase> probes_lift_sim() {
  std::vector<ProbeCase> out;
  Formula p = var("p");
  for (const UnitRational& q : probe_rationals()) {
    for (const UnitRational& r : probe_rationals()) {
      out.push_back({{imp(constant(q), p)},
                     imp(constant(mv_imp(r, q)), imp(constant(r), p))});
    }
  }
  return out;
}

std::vector<ProbeCase> probes_book_swap() {
  std::vector<ProbeCase> out;
  Formula p = var("p");
  for (const UnitRational& r : probe_rationals()) {
    for (const UnitRational& s : probe_rationals()) {
      out.push_back({{imp(p, imp(constant(r), constant(s)))},
                     imp(p, constant(mv_imp(r, s)))});
    }
  }
  return out;
}

}  // namespace

void DerivedRegistry::register_rule(DerivedRule rule) {
  for (const ProbeCase& probe : rule.probes()) {
    ProofBuilder b;
    Theory t;
    std::vector<int> refs;
    for (const Formula& prem : probe.premises) {
      t.add(prem);
      refs.push_back(b.add_hyp(prem));
    }
    int last;
    try {
      last = rule.emit(b, refs, probe.conclusion);
    } catch (const ValueError& e) {
      throw ValueError("registration of " + rule.name + " failed on " +
                       print(probe.conclusion) + ": " + e.what());
    }
    CheckReport rep = check_rpl(b.proof(), t);
    if (!rep.ok)
      throw ValueError("registration of " + rule.name +
                       " failed kernel check on " + print(probe.conclusion) +
                       ": " + rep.str());
    if (!base_equal(b.formula(last), probe.conclusion))
      throw ValueError("registration of " + rule.name +
                       " derived the wrong conclusion for " +
                       print(probe.conclusion));
  }
  rules_[rule.name] = std::move(rule);
}

std::optional<std::string> DerivedRegistry::validate(
    const std::string& rule, const std::vector<Formula>& premises,
    const Formula& conclusion) const {
  auto it = rules_.find(rule);
  if (it == rules_.end()) return "unknown derived rule " + rule;
  ProofBuilder b;
  std::vector<int> refs;
  for (const Formula& prem : premises) refs.push_back(b.add_hyp(prem));
  int last;
  try {
    last = it->second.emit(b, refs, conclusion);
  } catch (const ValueError& e) {
    return std::string(e.what());
  }
  if (!base_equal(b.formula(last), conclusion))
    return rule + ": stated conclusion does not match the derived one";
  return std::nullopt;
}

int DerivedRegistry::emit(const std::string& rule, ProofBuilder& b,
                          const std::vector<int>& refs,
                          const Formula& conclusion) const {
  auto it = rules_.find(rule);
  if (it == rules_.end()) throw ValueError("unknown derived rule " + rule);
  return it->second.emit(b, refs, conclusion);
}

Proof DerivedRegistry::expand_to_kernel(const Proof& p) const {
  ProofBuilder b;
  std::map<int, int> remap;
  for (const ProofLine& line : p.lines) {
    int out;
    if (const Derived* d = std::get_if<Derived>(&line.just)) {
      std::vector<int> refs;
      for (int r : d->refs) refs.push_back(remap.at(r));
      out = emit(d->rule, b, refs, line.formula);
    } else if (const MP* m = std::get_if<MP>(&line.just)) {
      out = b.add_line(line.formula, MP{remap.at(m->i), remap.at(m->j)});
    } else {
      out = b.add_line(line.formula, line.just);
    }
    remap[line.index] = out;
  }
  return b.take();
}

const DerivedRegistry& standard_rules() {
  static const DerivedRegistry* reg = [] {
    auto* r = new DerivedRegistry();
    r->register_rule({"identity", emit_identity, probes_identity});
    r->register_rule({"transitivity-chain", emit_chain, probes_chain});
    r->register_rule({"exchange", emit_exchange, probes_exchange});
    r->register_rule({"gmp-sim", emit_gmp_sim, probes_gmp_sim});
    r->register_rule({"lift-sim", emit_lift_sim, probes_lift_sim});
    r->register_rule({"book-swap", emit_book_swap, probes_book_swap});
    return r;
  }();
  return *reg;
}

}  // namespace pavelka
