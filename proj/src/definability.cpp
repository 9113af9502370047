#include "pavelka/definability.hpp"

#include <boost/integer/common_factor.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>

#include "pavelka/checker.hpp"
#include "pavelka/semantics.hpp"

namespace pavelka {

namespace {

// Deterministic freshness: take the candidate, append underscores until it
// misses the reserved set, and reserve the result.
std::string fresh_name(std::string candidate, std::set<std::string>& reserved) {
  while (reserved.count(candidate)) candidate += "_";
  reserved.insert(candidate);
  return candidate;
}

std::string slug(const UnitRational& q) {
  std::ostringstream os;
  os << "z_" << q.num() << "_" << q.den();
  return os.str();
}

bool is_inner_const(const Formula& f) {
  return f->kind == Conn::Const && !f->value.is_zero() && !f->value.is_one();
}

// Replace every constant strictly between 0 and 1 using the given map.
Formula replace_consts(const Formula& f,
                       const std::map<UnitRational, std::string>& names) {
  switch (f->kind) {
    case Conn::Var:
    case Conn::ConstMeta:
      return f;
    case Conn::Const:
      return is_inner_const(f) ? var(names.at(f->value)) : f;
    case Conn::Neg:
      return neg(replace_consts(f->left, names));
    case Conn::Pow:
      return pow(replace_consts(f->left, names), f->count);
    case Conn::NMul:
      return nmul(f->count, replace_consts(f->left, names));
    case Conn::Imp:
      return imp(replace_consts(f->left, names),
                 replace_consts(f->right, names));
    case Conn::SDisj:
      return sdisj(replace_consts(f->left, names),
                   replace_consts(f->right, names));
    case Conn::SConj:
      return sconj(replace_consts(f->left, names),
                   replace_consts(f->right, names));
    case Conn::Min:
      return fmin(replace_consts(f->left, names),
                  replace_consts(f->right, names));
    case Conn::Max:
      return fmax(replace_consts(f->left, names),
                  replace_consts(f->right, names));
    case Conn::Equiv:
      return equiv(replace_consts(f->left, names),
                   replace_consts(f->right, names));
  }
  throw ValueError("unreachable formula kind");
}

Formula torrens_rhs(const Formula& v, int n) {
  return n == 2 ? neg(v) : pow(neg(v), n - 1);
}

}  // namespace

DefinitionTheory torrens_definition(int n, const std::string& var_name) {
  if (n < 2) throw ValueError("torrens_definition needs n >= 2");
  DefinitionTheory d;
  Formula v = var(var_name);
  d.formulas.push_back(equiv(v, torrens_rhs(v, n)));
  d.defined[UnitRational(1, n)] = var_name;
  d.fresh.insert(var_name);
  return d;
}

DefinitionTheory rational_definition(int p, int q, const std::string& var_name) {
  if (p <= 0 || p >= q) throw ValueError("rational_definition needs 0 < p < q");
  if (boost::integer::gcd(p, q) != 1)
    throw ValueError("rational_definition needs p/q in lowest terms");
  DefinitionTheory d;
  std::set<std::string> reserved{var_name};
  std::string a_name = fresh_name(var_name + "_den", reserved);
  Formula a = var(a_name);
  Formula v = var(var_name);
  d.formulas.push_back(equiv(a, torrens_rhs(a, q)));
  d.formulas.push_back(equiv(v, p == 1 ? a : nmul(p, a)));
  d.defined[UnitRational(p, q)] = var_name;
  d.fresh = {var_name, a_name};
  return d;
}

std::vector<Formula> bookkeeping_restricted(int q) {
  if (q < 1) throw ValueError("bookkeeping_restricted needs q >= 1");
  std::vector<UnitRational> grid;
  for (int k = 0; k <= q; ++k) grid.emplace_back(k, q);
  std::vector<Formula> out;
  for (const auto& a : grid)
    for (const auto& b : grid) out.push_back(book_imp_formula(a, b));
  for (const auto& a : grid) out.push_back(book_neg_formula(a));
  out.push_back(book_one_formula());
  out.push_back(book_zero_formula());
  return out;
}

DefinitionTheory bookkeeping_variables(int q,
                                       const std::set<std::string>& reserved) {
  DefinitionTheory d;
  std::set<std::string> taken = reserved;
  for (int k = 1; k < q; ++k) {
    UnitRational c(k, q);
    if (!d.defined.count(c)) {
      std::string name = fresh_name(slug(c), taken);
      d.defined[c] = name;
      d.fresh.insert(name);
    }
  }
  for (const Formula& f : bookkeeping_restricted(q))
    d.formulas.push_back(replace_consts(f, d.defined));
  return d;
}

Elimination eliminate_constants(const Theory& t, const Formula& phi,
                                ElimStrategy strategy) {
  std::set<UnitRational, std::less<UnitRational>> consts = constants_of(phi);
  std::set<std::string> reserved = variables_of(phi);
  for (const Formula& f : t.formulas()) {
    for (const auto& c : constants_of(f)) consts.insert(c);
    for (const auto& v : variables_of(f)) reserved.insert(v);
  }
  consts.erase(UnitRational::zero());
  consts.erase(UnitRational::one());

  Elimination out;
  if (consts.empty()) {
    out.theory = t;
    out.formula = phi;
    return out;
  }

  if (strategy == ElimStrategy::bookkeeping) {
    Int l = 1;
    for (const auto& c : consts) l = boost::multiprecision::lcm(l, c.den());
    out.defs = bookkeeping_variables(l.convert_to<int>(), reserved);
  } else {
    // One helper per distinct denominator d, pinned to 1/d; each constant
    // p/d is then a p-fold sum of that helper.
    std::map<Int, std::string> unit;  // denominator -> helper name
    for (const auto& c : consts) {
      const Int& den = c.den();
      if (!unit.count(den)) {
        std::ostringstream os;
        os << "a_" << den;
        std::string a_name = fresh_name(os.str(), reserved);
        unit[den] = a_name;
        Formula a = var(a_name);
        out.defs.formulas.push_back(
            equiv(a, torrens_rhs(a, den.convert_to<int>())));
        out.defs.fresh.insert(a_name);
      }
      Formula a = var(unit[den]);
      std::string z_name = fresh_name(slug(c), reserved);
      Formula z = var(z_name);
      int p = c.num().convert_to<int>();
      out.defs.formulas.push_back(equiv(z, p == 1 ? a : nmul(p, a)));
      out.defs.defined[c] = z_name;
      out.defs.fresh.insert(z_name);
    }
  }

  for (const Formula& f : t.formulas())
    out.theory.add(replace_consts(f, out.defs.defined));
  out.formula = replace_consts(phi, out.defs.defined);
  return out;
}

std::set<UnitRational> unique_solutions_grid(const DefinitionTheory& d,
                                             const std::string& var_name,
                                             std::uint64_t n,
                                             std::uint64_t budget) {
  std::set<std::string> vars{var_name};
  for (const Formula& f : d.formulas)
    for (const auto& v : variables_of(f)) vars.insert(v);
  std::vector<std::string> order(vars.begin(), vars.end());

  std::uint64_t points = n + 1;
  std::uint64_t total = 1;
  for (size_t k = 0; k < order.size(); ++k) {
    if (total > budget / points) throw BudgetError("grid enumeration budget exceeded");
    total *= points;
  }

  std::set<UnitRational> solutions;
  std::vector<std::uint64_t> digits(order.size(), 0);
  for (;;) {
    Assignment v;
    for (size_t k = 0; k < order.size(); ++k)
      v[order[k]] = UnitRational(Int(digits[k]), Int(n));
    bool model = true;
    for (const Formula& f : d.formulas) {
      if (!eval(f, v).is_one()) {
        model = false;
        break;
      }
    }
    if (model) solutions.insert(v[var_name]);
    size_t k = order.size();
    while (k > 0 && digits[k - 1] == n) digits[--k] = 0;
    if (k == 0) break;
    ++digits[k - 1];
  }
  return solutions;
}

}  // namespace pavelka
