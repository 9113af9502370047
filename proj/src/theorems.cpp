#include "pavelka/theorems.hpp"

#include <memory>

#include "pavelka/checker.hpp"

namespace pavelka {

int ProofBuilder::push(Formula f, Justification j) {
  ProofLine line;
  line.index = size() + 1;
  line.formula = std::move(f);
  line.just = std::move(j);
  p_.lines.push_back(std::move(line));
  return p_.lines.back().index;
}

const Formula& ProofBuilder::formula(int i) const {
  if (i < 1 || i > size()) throw ValueError("proof line out of range");
  return p_.lines[static_cast<size_t>(i) - 1].formula;
}

int ProofBuilder::add_axiom(const std::string& name, Formula phi, Formula psi,
                            Formula chi) {
  std::map<std::string, Formula> binding{{"Phi", phi}, {"Psi", psi}};
  if (chi) binding["Chi"] = chi;
  Formula instance = substitute(axiom_schema(name), binding);
  return push(std::move(instance), AxiomL{name, std::move(binding)});
}

int ProofBuilder::add_hyp(Formula f) { return push(std::move(f), Hyp{}); }

int ProofBuilder::add_line(Formula f, Justification j) {
  return push(std::move(f), std::move(j));
}

int ProofBuilder::add_book_imp(const UnitRational& q, const UnitRational& r) {
  return push(book_imp_formula(q, r), BookImp{q, r});
}

int ProofBuilder::add_book_neg(const UnitRational& q) {
  return push(book_neg_formula(q), BookNeg{q});
}

int ProofBuilder::add_book_one() { return push(book_one_formula(), BookOne{}); }

int ProofBuilder::add_book_zero() {
  return push(book_zero_formula(), BookZero{});
}

int ProofBuilder::add_mp(int i, int j) {
  Formula impl = formula(j);
  if (impl->kind != Conn::Imp || !base_equal(impl->left, formula(i)))
    throw ValueError("modus ponens premise shapes do not match");
  return push(impl->right, MP{i, j});
}

int ProofBuilder::add_derived(const std::string& rule, std::vector<int> refs,
                              Formula conclusion) {
  return push(std::move(conclusion), Derived{rule, std::move(refs)});
}

namespace {

// Replay of condensed-detachment trees over the axioms.  A tree is either
// an axiom leaf or D(major, minor): unify the major premise's antecedent
// with the minor premise and keep the consequent.  The replayed instance is
// then matched against the requested target, and every line is emitted with
// a fully concrete substitution.

struct CDT;
using CDTp = std::shared_ptr<const CDT>;
struct CDT {
  std::string ax;  // leaf when nonempty
  CDTp major, minor;
};
CDTp leaf(const std::string& ax) { return std::make_shared<CDT>(CDT{ax, {}, {}}); }
CDTp D(CDTp major, CDTp minor) {
  return std::make_shared<CDT>(CDT{"", std::move(major), std::move(minor)});
}

using Subst = std::map<std::string, Formula>;

bool is_uvar(const Formula& f) {
  return f->kind == Conn::Var && !f->name.empty() && f->name[0] == 'M';
}

// Rebuild a node around (possibly) new children.
Formula rebuild(const Formula& f, Formula l, Formula r) {
  if (l.get() == f->left.get() && r.get() == f->right.get()) return f;
  switch (f->kind) {
    case Conn::Neg: return neg(l);
    case Conn::Imp: return imp(l, r);
    case Conn::SDisj: return sdisj(l, r);
    case Conn::SConj: return sconj(l, r);
    case Conn::Min: return fmin(l, r);
    case Conn::Max: return fmax(l, r);
    case Conn::Equiv: return equiv(l, r);
    case Conn::Pow: return pow(l, f->count);
    case Conn::NMul: return nmul(f->count, l);
    default: throw ValueError("unexpected connective in replay");
  }
}

Formula resolve(const Formula& f, const Subst& sub) {
  if (is_uvar(f)) {
    auto it = sub.find(f->name);
    return it == sub.end() ? f : resolve(it->second, sub);
  }
  if (!f->left) return f;
  Formula l = resolve(f->left, sub);
  Formula r = f->right ? resolve(f->right, sub) : nullptr;
  return rebuild(f, std::move(l), std::move(r));
}

bool occurs(const std::string& name, const Formula& f, const Subst& sub) {
  Formula g = resolve(f, sub);
  if (is_uvar(g)) return g->name == name;
  if (g->left && occurs(name, g->left, sub)) return true;
  if (g->right && occurs(name, g->right, sub)) return true;
  return false;
}

bool unify(const Formula& a, const Formula& b, Subst& sub) {
  Formula x = resolve(a, sub), y = resolve(b, sub);
  if (is_uvar(x)) {
    if (is_uvar(y) && y->name == x->name) return true;
    if (occurs(x->name, y, sub)) return false;
    sub[x->name] = y;
    return true;
  }
  if (is_uvar(y)) return unify(y, x, sub);
  if (x->kind != y->kind || x->name != y->name || x->count != y->count ||
      !(x->value == y->value))
    return false;
  if (x->left && !unify(x->left, y->left, sub)) return false;
  if (x->right && !unify(x->right, y->right, sub)) return false;
  return true;
}

struct SymLine {
  std::string ax;       // leaf: axiom name
  Subst renaming;       // leaf: schema metavariable -> fresh M-variable
  int minor = 0, major = 0;  // inner node: symbolic line ids
  Formula formula;      // statement with M-variables
};

struct Replay {
  std::vector<SymLine> lines;
  Subst sub;
  int fresh = 0;

  Formula freshen() { return var("M" + std::to_string(++fresh)); }

  // Returns the symbolic line id (0-based) proving the tree's statement.
  int run(const CDTp& t) {
    SymLine line;
    if (!t->ax.empty()) {
      line.ax = t->ax;
      for (const std::string& mv : {"Phi", "Psi", "Chi"})
        line.renaming[mv] = freshen();
      line.formula = substitute(axiom_schema(t->ax), line.renaming);
    } else {
      int major = run(t->major);
      int minor = run(t->minor);
      Formula conclusion = freshen();
      if (!unify(lines[major].formula, imp(lines[minor].formula, conclusion),
                 sub))
        throw ValueError("condensed-detachment step does not unify");
      line.major = major;
      line.minor = minor;
      line.formula = conclusion;
    }
    lines.push_back(std::move(line));
    return static_cast<int>(lines.size()) - 1;
  }
};

// Replace unification variables the target leaves open; Const(1) keeps the
// line inside the constant-free fragment accepted by check_luk.
Formula ground(const Formula& f, const Subst& sub) {
  Formula g = resolve(f, sub);
  if (is_uvar(g)) return constant(UnitRational::one());
  if (!g->left) return g;
  Formula l = ground(g->left, sub);
  Formula r = g->right ? ground(g->right, sub) : nullptr;
  return rebuild(g, std::move(l), std::move(r));
}

int replay_theorem(ProofBuilder& b, const CDTp& tree, const Formula& target) {
  Replay rep;
  int last = rep.run(tree);
  if (!unify(rep.lines[last].formula, target, rep.sub))
    throw ValueError("theorem instance does not match its schema");
  std::vector<int> emitted(rep.lines.size());
  for (size_t k = 0; k < rep.lines.size(); ++k) {
    const SymLine& line = rep.lines[k];
    if (!line.ax.empty()) {
      Formula phi = ground(line.renaming.at("Phi"), rep.sub);
      Formula psi = ground(line.renaming.at("Psi"), rep.sub);
      Formula chi = line.ax == "A2" ? ground(line.renaming.at("Chi"), rep.sub)
                                    : nullptr;
      emitted[k] = b.add_axiom(line.ax, phi, psi, chi);
    } else {
      emitted[k] = b.add_mp(emitted[line.minor], emitted[line.major]);
    }
  }
  return emitted[last];
}

// Proof trees for the base theorems, found by condensed-detachment search.
const CDTp& tree_identity() {
  static const CDTp t =
      D(D(leaf("A2"), leaf("A1")), D(leaf("A3"), D(leaf("A1"), leaf("A1"))));
  return t;
}
const CDTp& tree_assertion() {
  static const CDTp t = D(D(leaf("A2"), leaf("A1")), leaf("A3"));
  return t;
}
const CDTp& tree_dne() {
  static const CDTp t =
      D(D(leaf("A2"),
          D(D(leaf("A2"), D(D(leaf("A2"), leaf("A1")), leaf("A4"))),
            leaf("A4"))),
        D(leaf("A3"), D(leaf("A1"), leaf("A1"))));
  return t;
}
const CDTp& tree_dni() {
  static const CDTp t = D(leaf("A4"), tree_dne());
  return t;
}

}  // namespace

int thm_identity(ProofBuilder& b, Formula a) {
  return replay_theorem(b, tree_identity(), imp(a, a));
}

int thm_dne(ProofBuilder& b, Formula a) {
  return replay_theorem(b, tree_dne(), imp(neg(neg(a)), a));
}

int thm_dni(ProofBuilder& b, Formula a) {
  return replay_theorem(b, tree_dni(), imp(a, neg(neg(a))));
}

int thm_assertion(ProofBuilder& b, Formula a, Formula c) {
  return replay_theorem(b, tree_assertion(), imp(a, imp(imp(a, c), c)));
}

int rule_syl(ProofBuilder& b, int i, int j) {
  Formula f = b.formula(i), g = b.formula(j);  // copied: push invalidates refs
  if (f->kind != Conn::Imp || g->kind != Conn::Imp)
    throw ValueError("syllogism needs two implications");
  int k = b.add_axiom("A2", f->left, f->right, g->right);
  return b.add_mp(j, b.add_mp(i, k));
}

int rule_exchange(ProofBuilder& b, int i) {
  Formula f = b.formula(i);
  if (f->kind != Conn::Imp || f->right->kind != Conn::Imp)
    throw ValueError("exchange needs a nested implication");
  Formula p = f->left, q = f->right->left, r = f->right->right;
  int k = b.add_axiom("A2", p, imp(q, r), r);
  int k2 = b.add_mp(i, k);               // ((q->r)->r) -> (p->r)
  int k3 = thm_assertion(b, q, r);       // q -> ((q->r)->r)
  return rule_syl(b, k3, k2);
}

int rule_prefix(ProofBuilder& b, int i, Formula c) {
  Formula f = b.formula(i);
  if (f->kind != Conn::Imp) throw ValueError("prefix needs an implication");
  int k = b.add_axiom("A2", c, f->left, f->right);
  return b.add_mp(i, rule_exchange(b, k));
}

int rule_suffix(ProofBuilder& b, int i, Formula t) {
  Formula f = b.formula(i);
  if (f->kind != Conn::Imp) throw ValueError("suffix needs an implication");
  return b.add_mp(i, b.add_axiom("A2", f->left, f->right, t));
}

int thm_contraposition(ProofBuilder& b, Formula a, Formula fb) {
  int s1 = thm_dne(b, a);
  int s2 = rule_suffix(b, s1, fb);               // (a->fb) -> (~~a->fb)
  int s3 = thm_dni(b, fb);
  int s4 = rule_prefix(b, s3, neg(neg(a)));      // (~~a->fb) -> (~~a->~~fb)
  int s5 = b.add_axiom("A4", neg(a), neg(fb));   // (~~a->~~fb) -> (~fb->~a)
  return rule_syl(b, rule_syl(b, s2, s4), s5);
}

int rule_contrapose(ProofBuilder& b, int i) {
  Formula f = b.formula(i);
  if (f->kind != Conn::Imp) throw ValueError("contrapose needs an implication");
  return b.add_mp(i, thm_contraposition(b, f->left, f->right));
}

int thm_duns_scotus(ProofBuilder& b, Formula p, Formula q) {
  int k1 = b.add_axiom("A1", neg(p), neg(q));  // ~p -> (~q -> ~p)
  int k2 = b.add_axiom("A4", q, p);            // (~q -> ~p) -> (p -> q)
  return rule_exchange(b, rule_syl(b, k1, k2));
}

int rule_import(ProofBuilder& b, int i) {
  Formula f = b.formula(i);
  if (f->kind != Conn::Imp || f->right->kind != Conn::Imp)
    throw ValueError("import needs a doubly nested implication");
  Formula a = f->left, c = f->right->right;
  int d2 = rule_syl(b, thm_dne(b, a), i);        // ~~a -> (b -> c)
  Formula bb = f->right->left;
  int d3 = thm_contraposition(b, bb, c);
  int d4 = rule_syl(b, d2, d3);                  // ~~a -> (~c -> ~b)
  int d5 = rule_exchange(b, d4);                 // ~c -> (~~a -> ~b)
  int d6 = rule_contrapose(b, d5);               // ~(~~a->~b) -> ~~c
  return rule_syl(b, d6, thm_dne(b, c));
}

namespace {

int equiv_elim(ProofBuilder& b, int i, bool forward) {
  Formula f = b.formula(i);
  if (f->kind != Conn::Equiv) throw ValueError("elimination needs <->");
  Formula x = imp(f->left, f->right);
  Formula y = imp(f->right, f->left);
  // to_base(A <-> B) is the strong conjunction ~(~~x -> ~(x -> y)); project
  // its first or second component and detach.
  int t = forward ? rule_import(b, b.add_axiom("A1", x, imp(x, y)))
                  : rule_import(b, thm_assertion(b, x, y));
  return b.add_mp(i, t);
}

}  // namespace

int rule_equiv_elim1(ProofBuilder& b, int i) { return equiv_elim(b, i, true); }
int rule_equiv_elim2(ProofBuilder& b, int i) { return equiv_elim(b, i, false); }

int thm_flip(ProofBuilder& b, Formula a, Formula c) {
  int t1 = thm_contraposition(b, a, neg(c));   // (a->~c) -> (~~c->~a)
  int t2 = rule_suffix(b, thm_dni(b, c), neg(a));  // (~~c->~a) -> (c->~a)
  return rule_syl(b, t1, t2);
}

int thm_sconj_intro(ProofBuilder& b, Formula x, Formula z) {
  Formula c = imp(neg(neg(x)), neg(z));
  int s1 = rule_suffix(b, thm_dni(b, x), neg(z));  // (~~x->~z) -> (x->~z)
  int s2 = rule_exchange(b, s1);                   // x -> ((~~x->~z) -> ~z)
  int s3 = thm_flip(b, c, z);                      // ((~~x->~z)->~z) -> (z->~(~~x->~z))
  return rule_syl(b, s2, s3);
}

int rule_equiv_intro(ProofBuilder& b, int i, int j) {
  Formula x = b.formula(i), y = b.formula(j);
  Formula z = imp(x, y);
  int k1 = b.add_axiom("A1", y, x);      // y -> (x -> y)
  int m1 = b.add_mp(j, k1);              // x -> y
  int k2 = thm_sconj_intro(b, x, z);     // x -> ((x->y) -> x*(x->y))
  int m2 = b.add_mp(i, k2);
  return b.add_mp(m1, m2);               // the base form of x /\ y, i.e. a<->b
}

int thm_equiv_refl(ProofBuilder& b, Formula f) {
  int i = thm_identity(b, f);
  int j = thm_identity(b, f);
  return rule_equiv_intro(b, i, j);
}

int thm_truth(ProofBuilder& b) {
  Formula zero = constant(UnitRational::zero());
  int book = b.add_book_imp(UnitRational::zero(), UnitRational::zero());
  int id = thm_identity(b, zero);                 // #0 -> #0
  int e = rule_equiv_elim1(b, book);              // (#0 -> #0) -> #1
  return b.add_mp(id, e);
}

int thm_zero_implies(ProofBuilder& b, Formula f) {
  Formula one = constant(UnitRational::one());
  int o = thm_truth(b);
  int n = b.add_book_neg(UnitRational::one());    // ~#1 <-> #0
  int e2 = rule_equiv_elim2(b, n);                // #0 -> ~#1
  int d = thm_duns_scotus(b, one, f);             // #1 -> (~#1 -> f)
  return rule_syl(b, e2, b.add_mp(o, d));
}

}  // namespace pavelka
