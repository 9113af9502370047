#include "pavelka/parser.hpp"

#include <cctype>
#include <vector>

namespace pavelka {

namespace {

enum class Tok { Ident, Nat, Rat, Neg, Imp, Equiv, Plus, Vee, Star, Wedge, Hat, Dot, LPar, RPar, End };

struct Token {
  Tok kind;
  std::string text;  // Ident name, Nat digits, Rat body (after '#')
  int line, col;
};

class Lexer {
 public:
  Lexer(const std::string& text, int line_offset)
      : text_(text), line_(1 + line_offset) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      int line = line_, col = col_;
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "", line, col});
        return out;
      }
      char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string name;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_' || text_[pos_] == '\''))
          name += take();
        out.push_back({Tok::Ident, name, line, col});
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string digits;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
          digits += take();
        out.push_back({Tok::Nat, digits, line, col});
      } else if (c == '#') {
        take();
        std::string body;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '/'))
          body += take();
        if (body.empty()) throw ParseError(line, col, "expected rational after '#'");
        out.push_back({Tok::Rat, body, line, col});
      } else if (c == '~') {
        take();
        out.push_back({Tok::Neg, "~", line, col});
      } else if (c == '-' && peek2() == '>') {
        take(); take();
        out.push_back({Tok::Imp, "->", line, col});
      } else if (c == '<' && peek2() == '-' && peek3() == '>') {
        take(); take(); take();
        out.push_back({Tok::Equiv, "<->", line, col});
      } else if (c == '+') {
        take();
        out.push_back({Tok::Plus, "+", line, col});
      } else if (c == '\\' && peek2() == '/') {
        take(); take();
        out.push_back({Tok::Vee, "\\/", line, col});
      } else if (c == '*') {
        take();
        out.push_back({Tok::Star, "*", line, col});
      } else if (c == '/' && peek2() == '\\') {
        take(); take();
        out.push_back({Tok::Wedge, "/\\", line, col});
      } else if (c == '^') {
        take();
        out.push_back({Tok::Hat, "^", line, col});
      } else if (c == '.') {
        take();
        out.push_back({Tok::Dot, ".", line, col});
      } else if (c == '(') {
        take();
        out.push_back({Tok::LPar, "(", line, col});
      } else if (c == ')') {
        take();
        out.push_back({Tok::RPar, ")", line, col});
      } else {
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
      }
    }
  }

 private:
  char take() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  char peek2() const { return pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0'; }
  char peek3() const { return pos_ + 2 < text_.size() ? text_[pos_ + 2] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      take();
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula run() {
    Formula f = imp_level();
    expect(Tok::End, "end of input");
    return f;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  bool accept(Tok k) {
    if (cur().kind == k) {
      ++pos_;
      return true;
    }
    return false;
  }
  Token expect(Tok k, const std::string& what) {
    if (cur().kind != k)
      throw ParseError(cur().line, cur().col,
                       "expected " + what + ", found '" +
                           (cur().kind == Tok::End ? "end of input" : cur().text) + "'");
    return toks_[pos_++];
  }

  Formula imp_level() {
    Formula a = equiv_level();
    if (accept(Tok::Imp)) return imp(a, imp_level());  // right-associative
    return a;
  }

  Formula equiv_level() {
    Formula a = add_level();
    if (accept(Tok::Equiv)) return equiv(a, add_level());
    return a;
  }

  Formula add_level() {
    Formula a = mul_level();
    while (true) {
      if (accept(Tok::Plus))
        a = sdisj(a, mul_level());
      else if (accept(Tok::Vee))
        a = fmax(a, mul_level());
      else
        return a;
    }
  }

  Formula mul_level() {
    Formula a = unary_level();
    while (true) {
      if (accept(Tok::Star))
        a = sconj(a, unary_level());
      else if (accept(Tok::Wedge))
        a = fmin(a, unary_level());
      else
        return a;
    }
  }

  Formula unary_level() {
    if (accept(Tok::Neg)) return neg(unary_level());
    if (cur().kind == Tok::Nat) {
      Token n = toks_[pos_++];
      expect(Tok::Dot, "'.' after multiplier");
      int k = to_count(n);
      return nmul(k, unary_level());
    }
    Formula a = atom();
    if (cur().kind == Tok::Hat) {
      ++pos_;
      Token n = expect(Tok::Nat, "exponent");
      return pow(a, to_count(n));
    }
    return a;
  }

  int to_count(const Token& n) {
    long v = 0;
    for (char c : n.text) {
      v = v * 10 + (c - '0');
      if (v > 1000000) throw ParseError(n.line, n.col, "iteration count too large");
    }
    if (v < 1) throw ParseError(n.line, n.col, "iteration count must be >= 1");
    return static_cast<int>(v);
  }

  Formula atom() {
    if (cur().kind == Tok::Ident) {
      Token t = toks_[pos_++];
      return var(t.text);
    }
    if (cur().kind == Tok::Rat) {
      Token t = toks_[pos_++];
      try {
        return constant(UnitRational::parse(t.text));
      } catch (const ValueError&) {
        throw ParseError(t.line, t.col, "constant outside [0,1]: #" + t.text);
      }
    }
    if (accept(Tok::LPar)) {
      Formula f = imp_level();
      expect(Tok::RPar, "')'");
      return f;
    }
    throw ParseError(cur().line, cur().col,
                     "expected formula, found '" +
                         (cur().kind == Tok::End ? "end of input" : cur().text) + "'");
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(const std::string& text, int line_offset) {
  return Parser(Lexer(text, line_offset).run()).run();
}

}  // namespace pavelka
