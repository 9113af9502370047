#include "pavelka/proof.hpp"

#include <cctype>
#include <sstream>

#include "pavelka/parser.hpp"

namespace pavelka {

std::string CheckReport::str() const {
  std::ostringstream out;
  if (ok) {
    out << "OK ";
    if (conclusion_grade) out << conclusion_grade->str() << " : ";
    out << (conclusion ? print(conclusion) : std::string("<empty>"));
  } else {
    out << "FAIL line " << (first_error ? first_error->first : 0) << ": "
        << (first_error ? first_error->second : std::string("unknown"));
  }
  return out.str();
}

namespace {

// Scanner over the justification part of a proof line.
struct JustScan {
  const std::string& s;
  size_t pos = 0;
  int line;

  explicit JustScan(const std::string& text, int ln) : s(text), line(ln) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line, static_cast<int>(pos) + 1, msg);
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }
  bool try_char(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect_char(char c) {
    if (!try_char(c)) fail(std::string("expected '") + c + "'");
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' ||
            s[pos] == '\'' || s[pos] == '-')) {
      ++pos;
    }
    if (start == pos) fail("expected identifier");
    return s.substr(start, pos - start);
  }
  int integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected line reference");
    return std::stoi(s.substr(start, pos - start));
  }
  UnitRational rational() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) {
      ++pos;
    }
    if (start == pos) fail("expected rational");
    try {
      return UnitRational::parse(s.substr(start, pos - start));
    } catch (const ValueError& e) {
      fail(e.what());
    }
  }
  // Formula text up to the next top-level ',' or ']'.
  Formula formula() {
    skip_ws();
    size_t start = pos;
    int depth = 0;
    while (pos < s.size()) {
      char c = s[pos];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 && (c == ',' || c == ']')) break;
      ++pos;
    }
    if (start == pos) fail("expected formula");
    return parse_formula(s.substr(start, pos - start), line - 1);
  }
  std::map<std::string, Formula> binding() {
    std::map<std::string, Formula> b;
    expect_char('[');
    if (try_char(']')) return b;
    while (true) {
      std::string name = ident();
      expect_char(':');
      expect_char('=');
      b[name] = formula();
      if (try_char(']')) break;
      expect_char(',');
    }
    return b;
  }
};

Justification parse_just(const std::string& text, int line, bool graded) {
  JustScan sc(text, line);
  std::string kw = sc.ident();
  auto finish = [&](Justification j) {
    if (!sc.at_end()) sc.fail("trailing input after justification");
    return j;
  };
  auto axiom = [&]() -> Justification {
    std::string name = sc.ident();
    if (name != "A1" && name != "A2" && name != "A3" && name != "A4")
      sc.fail("unknown axiom " + name);
    return finish(AxiomL{name, sc.binding()});
  };
  auto two_rats = [&](auto make) -> Justification {
    sc.expect_char('[');
    UnitRational q = sc.rational();
    sc.expect_char(',');
    UnitRational r = sc.rational();
    sc.expect_char(']');
    return finish(make(q, r));
  };
  auto one_rat = [&](auto make) -> Justification {
    sc.expect_char('[');
    UnitRational q = sc.rational();
    sc.expect_char(']');
    return finish(make(q));
  };
  if (!graded) {
    if (kw == "ax") return axiom();
    if (kw == "book-imp")
      return two_rats([](UnitRational q, UnitRational r) { return BookImp{q, r}; });
    if (kw == "book-neg")
      return one_rat([](UnitRational q) { return BookNeg{q}; });
    if (kw == "book-one") return finish(BookOne{});
    if (kw == "book-zero") return finish(BookZero{});
    if (kw == "hyp") return finish(Hyp{});
    if (kw == "mp") {
      int i = sc.integer();
      int j = sc.integer();
      return finish(MP{i, j});
    }
    if (kw == "dr") {
      Derived d;
      d.rule = sc.ident();
      while (!sc.at_end()) d.refs.push_back(sc.integer());
      return d;
    }
  } else {
    if (kw == "ax-L") return axiom();
    if (kw == "ax-const")
      return one_rat([](UnitRational q) { return GrConst{q}; });
    if (kw == "ax-book-imp")
      return two_rats([](UnitRational q, UnitRational r) { return BookImp{q, r}; });
    if (kw == "ax-book-neg")
      return one_rat([](UnitRational q) { return BookNeg{q}; });
    if (kw == "ax-zero") return finish(GrZero{});
    if (kw == "hyp") return finish(Hyp{});
    if (kw == "gmp") {
      int i = sc.integer();
      int j = sc.integer();
      return finish(GMP{i, j});
    }
    if (kw == "lift") {
      int i = sc.integer();
      sc.expect_char('[');
      UnitRational r = sc.rational();
      sc.expect_char(']');
      return finish(Lift{i, r});
    }
  }
  sc.fail("unknown justification " + kw);
}

bool is_comment_or_blank(const std::string& line) {
  size_t i = 0;
  while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  if (i >= line.size()) return true;
  if (line[i] != '#') return false;
  // '#' immediately followed by a digit is a constant, not a comment.
  return i + 1 >= line.size() ||
         !std::isdigit(static_cast<unsigned char>(line[i + 1]));
}

// Splits "<head> ; <just>" at the last top-level ';'.
std::pair<std::string, std::string> split_just(const std::string& line, int ln) {
  size_t semi = line.rfind(';');
  if (semi == std::string::npos)
    throw ParseError(ln, 1, "missing ';' before justification");
  return {line.substr(0, semi), line.substr(semi + 1)};
}

// "<idx> : <rest>"; returns idx and the remainder after the first ':'.
std::pair<int, std::string> split_index(const std::string& head, int ln) {
  size_t colon = head.find(':');
  if (colon == std::string::npos)
    throw ParseError(ln, 1, "missing ':' after line index");
  std::string idx_text = head.substr(0, colon);
  try {
    size_t used = 0;
    int idx = std::stoi(idx_text, &used);
    while (used < idx_text.size() &&
           std::isspace(static_cast<unsigned char>(idx_text[used]))) {
      ++used;
    }
    if (used != idx_text.size()) throw std::invalid_argument("junk");
    return {idx, head.substr(colon + 1)};
  } catch (const std::exception&) {
    throw ParseError(ln, 1, "bad line index '" + idx_text + "'");
  }
}

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

void print_binding(std::ostream& out, const std::map<std::string, Formula>& b) {
  out << '[';
  bool first = true;
  for (const auto& [name, f] : b) {
    if (!first) out << ", ";
    first = false;
    out << name << " := " << print(f);
  }
  out << ']';
}

void print_just(std::ostream& out, const Justification& j, bool graded) {
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, AxiomL>) {
          out << (graded ? "ax-L " : "ax ") << v.name;
          print_binding(out, v.binding);
        } else if constexpr (std::is_same_v<T, BookImp>) {
          out << (graded ? "ax-book-imp[" : "book-imp[") << v.q.str() << ", "
              << v.r.str() << ']';
        } else if constexpr (std::is_same_v<T, BookNeg>) {
          out << (graded ? "ax-book-neg[" : "book-neg[") << v.q.str() << ']';
        } else if constexpr (std::is_same_v<T, BookOne>) {
          out << "book-one";
        } else if constexpr (std::is_same_v<T, BookZero>) {
          out << "book-zero";
        } else if constexpr (std::is_same_v<T, Hyp>) {
          out << "hyp";
        } else if constexpr (std::is_same_v<T, GrConst>) {
          out << "ax-const[" << v.q.str() << ']';
        } else if constexpr (std::is_same_v<T, GrZero>) {
          out << "ax-zero";
        } else if constexpr (std::is_same_v<T, MP>) {
          out << "mp " << v.i << ' ' << v.j;
        } else if constexpr (std::is_same_v<T, GMP>) {
          out << "gmp " << v.i << ' ' << v.j;
        } else if constexpr (std::is_same_v<T, Lift>) {
          out << "lift " << v.i << " [" << v.r.str() << ']';
        } else if constexpr (std::is_same_v<T, Derived>) {
          out << "dr " << v.rule;
          for (int r : v.refs) out << ' ' << r;
        }
      },
      j);
}

}  // namespace

Proof parse_proof(const std::string& text) {
  Proof proof;
  std::istringstream in(text);
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    if (is_comment_or_blank(line)) continue;
    auto [head, just_text] = split_just(line, ln);
    auto [idx, formula_text] = split_index(head, ln);
    ProofLine pl;
    pl.index = idx;
    pl.formula = parse_formula(trim(formula_text), ln - 1);
    pl.just = parse_just(just_text, ln, /*graded=*/false);
    proof.lines.push_back(std::move(pl));
  }
  return proof;
}

GradedProof parse_graded_proof(const std::string& text) {
  GradedProof proof;
  std::istringstream in(text);
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    if (is_comment_or_blank(line)) continue;
    auto [head, just_text] = split_just(line, ln);
    auto [idx, rest] = split_index(head, ln);
    size_t colon = rest.find(':');
    if (colon == std::string::npos)
      throw ParseError(ln, 1, "missing ':' after grade");
    GradedProofLine pl;
    pl.index = idx;
    try {
      pl.grade = UnitRational::parse(trim(rest.substr(0, colon)));
    } catch (const ValueError& e) {
      throw ParseError(ln, 1, e.what());
    }
    pl.formula = parse_formula(trim(rest.substr(colon + 1)), ln - 1);
    pl.just = parse_just(just_text, ln, /*graded=*/true);
    proof.lines.push_back(std::move(pl));
  }
  return proof;
}

std::string print_proof(const Proof& p) {
  std::ostringstream out;
  for (const auto& pl : p.lines) {
    out << pl.index << " : " << print(pl.formula) << " ; ";
    print_just(out, pl.just, /*graded=*/false);
    out << '\n';
  }
  return out.str();
}

std::string print_proof(const GradedProof& p) {
  std::ostringstream out;
  for (const auto& pl : p.lines) {
    out << pl.index << " : " << pl.grade.str() << " : " << print(pl.formula)
        << " ; ";
    print_just(out, pl.just, /*graded=*/true);
    out << '\n';
  }
  return out.str();
}

}  // namespace pavelka
