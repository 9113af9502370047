#include "pavelka/formula.hpp"

#include <map>

namespace pavelka {

namespace {

Formula make(FormulaNode n) {
  return std::make_shared<const FormulaNode>(std::move(n));
}

}  // namespace

Formula var(std::string name) {
  return make({Conn::Var, std::move(name), {}, nullptr, nullptr, 0});
}

Formula constant(UnitRational q) {
  return make({Conn::Const, {}, std::move(q), nullptr, nullptr, 0});
}

Formula constant(int p, int q) { return constant(UnitRational(p, q)); }

Formula neg(Formula f) {
  return make({Conn::Neg, {}, {}, std::move(f), nullptr, 0});
}

namespace {
Formula binary(Conn kind, Formula a, Formula b) {
  return make({kind, {}, {}, std::move(a), std::move(b), 0});
}
}  // namespace

Formula imp(Formula a, Formula b) { return binary(Conn::Imp, std::move(a), std::move(b)); }
Formula sdisj(Formula a, Formula b) { return binary(Conn::SDisj, std::move(a), std::move(b)); }
Formula sconj(Formula a, Formula b) { return binary(Conn::SConj, std::move(a), std::move(b)); }
Formula fmin(Formula a, Formula b) { return binary(Conn::Min, std::move(a), std::move(b)); }
Formula fmax(Formula a, Formula b) { return binary(Conn::Max, std::move(a), std::move(b)); }
Formula equiv(Formula a, Formula b) { return binary(Conn::Equiv, std::move(a), std::move(b)); }

Formula pow(Formula f, int n) {
  if (n < 1) throw ValueError("exponent must be >= 1");
  return make({Conn::Pow, {}, {}, std::move(f), nullptr, n});
}

Formula nmul(int n, Formula f) {
  if (n < 1) throw ValueError("multiplier must be >= 1");
  return make({Conn::NMul, {}, {}, std::move(f), nullptr, n});
}

Formula const_meta(std::string name) {
  return make({Conn::ConstMeta, std::move(name), {}, nullptr, nullptr, 0});
}

int compare(const Formula& a, const Formula& b) {
  if (a.get() == b.get()) return 0;
  if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
  switch (a->kind) {
    case Conn::Var:
    case Conn::ConstMeta:
      return a->name.compare(b->name);
    case Conn::Const:
      if (a->value == b->value) return 0;
      return a->value < b->value ? -1 : 1;
    case Conn::Neg:
      return compare(a->left, b->left);
    case Conn::Pow:
    case Conn::NMul: {
      if (a->count != b->count) return a->count < b->count ? -1 : 1;
      return compare(a->left, b->left);
    }
    default: {
      int c = compare(a->left, b->left);
      if (c != 0) return c;
      return compare(a->right, b->right);
    }
  }
}

bool equal(const Formula& a, const Formula& b) { return compare(a, b) == 0; }

namespace {

// Printer precedence levels, loosest to tightest.
constexpr int kImp = 0, kEquiv = 1, kAdd = 2, kMul = 3, kUnary = 4, kAtom = 5;

void print_rec(const Formula& f, int min_level, std::string& out) {
  auto wrap = [&](int level, auto&& body) {
    bool parens = level < min_level;
    if (parens) out += '(';
    body();
    if (parens) out += ')';
  };
  switch (f->kind) {
    case Conn::Var:
      out += f->name;
      break;
    case Conn::ConstMeta:
      out += '$';
      out += f->name;
      break;
    case Conn::Const:
      out += '#';
      out += f->value.str();
      break;
    case Conn::Neg:
      wrap(kUnary, [&] {
        out += '~';
        print_rec(f->left, kUnary, out);
      });
      break;
    case Conn::Imp:
      wrap(kImp, [&] {
        print_rec(f->left, kEquiv, out);
        out += " -> ";
        print_rec(f->right, kImp, out);
      });
      break;
    case Conn::Equiv:
      wrap(kEquiv, [&] {
        print_rec(f->left, kAdd, out);
        out += " <-> ";
        print_rec(f->right, kAdd, out);
      });
      break;
    case Conn::SDisj:
    case Conn::Max:
      wrap(kAdd, [&] {
        print_rec(f->left, kAdd, out);
        out += f->kind == Conn::SDisj ? " + " : " \\/ ";
        print_rec(f->right, kMul, out);
      });
      break;
    case Conn::SConj:
    case Conn::Min:
      wrap(kMul, [&] {
        print_rec(f->left, kMul, out);
        out += f->kind == Conn::SConj ? " * " : " /\\ ";
        print_rec(f->right, kUnary, out);
      });
      break;
    case Conn::Pow:
      wrap(kUnary, [&] {
        print_rec(f->left, kAtom, out);
        out += '^';
        out += std::to_string(f->count);
      });
      break;
    case Conn::NMul:
      wrap(kUnary, [&] {
        out += std::to_string(f->count);
        out += '.';
        print_rec(f->left, kUnary, out);
      });
      break;
  }
}

}  // namespace

std::string print(const Formula& f) {
  std::string out;
  print_rec(f, kImp, out);
  return out;
}

namespace {

// Keyed by owning pointer: unrolling Pow/NMul creates transient nodes, and a
// raw-pointer key could be reused after they die.
using Memo = std::map<Formula, Formula, std::owner_less<Formula>>;

Formula to_base_rec(const Formula& f, Memo& memo) {
  auto it = memo.find(f);
  if (it != memo.end()) return it->second;
  Formula result;
  switch (f->kind) {
    case Conn::Var:
    case Conn::Const:
    case Conn::ConstMeta:
      result = f;
      break;
    case Conn::Neg: {
      Formula sub = to_base_rec(f->left, memo);
      result = sub.get() == f->left.get() ? f : neg(sub);
      break;
    }
    case Conn::Imp: {
      Formula a = to_base_rec(f->left, memo), b = to_base_rec(f->right, memo);
      result = (a.get() == f->left.get() && b.get() == f->right.get())
                   ? f
                   : imp(a, b);
      break;
    }
    case Conn::Max: {
      Formula a = to_base_rec(f->left, memo), b = to_base_rec(f->right, memo);
      result = imp(imp(a, b), b);
      break;
    }
    case Conn::SDisj: {
      Formula a = to_base_rec(f->left, memo), b = to_base_rec(f->right, memo);
      result = imp(neg(a), b);
      break;
    }
    case Conn::SConj:
      result = to_base_rec(neg(sdisj(neg(f->left), neg(f->right))), memo);
      break;
    case Conn::Min:
      result = to_base_rec(sconj(f->left, imp(f->left, f->right)), memo);
      break;
    case Conn::Equiv:
      result = to_base_rec(
          fmin(imp(f->left, f->right), imp(f->right, f->left)), memo);
      break;
    case Conn::Pow: {
      Formula acc = f->left;
      for (int i = 1; i < f->count; ++i) acc = sconj(acc, f->left);
      result = to_base_rec(acc, memo);
      break;
    }
    case Conn::NMul: {
      Formula acc = f->left;
      for (int i = 1; i < f->count; ++i) acc = sdisj(acc, f->left);
      result = to_base_rec(acc, memo);
      break;
    }
  }
  memo.emplace(f, result);
  return result;
}

}  // namespace

Formula to_base(const Formula& f) {
  Memo memo;
  return to_base_rec(f, memo);
}

bool base_equal(const Formula& a, const Formula& b) {
  return equal(to_base(a), to_base(b));
}

bool is_metavariable(const std::string& name) {
  return !name.empty() && name[0] >= 'A' && name[0] <= 'Z';
}

Formula substitute(const Formula& schema,
                   const std::map<std::string, Formula>& binding) {
  switch (schema->kind) {
    case Conn::Var:
      if (is_metavariable(schema->name)) {
        auto it = binding.find(schema->name);
        if (it == binding.end())
          throw ValueError("unbound metavariable " + schema->name);
        return it->second;
      }
      return schema;
    case Conn::Const:
    case Conn::ConstMeta:
      return schema;
    case Conn::Neg:
      return neg(substitute(schema->left, binding));
    case Conn::Pow:
      return pow(substitute(schema->left, binding), schema->count);
    case Conn::NMul:
      return nmul(schema->count, substitute(schema->left, binding));
    default: {
      Formula a = substitute(schema->left, binding);
      Formula b = substitute(schema->right, binding);
      FormulaNode n{schema->kind, {}, {}, std::move(a), std::move(b), 0};
      return std::make_shared<const FormulaNode>(std::move(n));
    }
  }
}

namespace {

template <typename F>
void walk(const Formula& f, F&& visit) {
  visit(f);
  if (f->left) walk(f->left, visit);
  if (f->right) walk(f->right, visit);
}

}  // namespace

std::set<UnitRational, std::less<UnitRational>> constants_of(const Formula& f) {
  std::set<UnitRational, std::less<UnitRational>> out;
  walk(f, [&](const Formula& g) {
    if (g->kind == Conn::Const && !g->value.is_zero() && !g->value.is_one())
      out.insert(g->value);
  });
  return out;
}

std::set<std::string> variables_of(const Formula& f) {
  std::set<std::string> out;
  walk(f, [&](const Formula& g) {
    if (g->kind == Conn::Var) out.insert(g->name);
  });
  return out;
}

bool has_proper_constants(const Formula& f) {
  bool found = false;
  walk(f, [&](const Formula& g) {
    if (g->kind == Conn::Const && !g->value.is_zero() && !g->value.is_one())
      found = true;
  });
  return found;
}

}  // namespace pavelka
