#include "pavelka/theory.hpp"

#include <sstream>

#include "pavelka/parser.hpp"

namespace pavelka {

void Theory::add(const Formula& f) {
  Formula key = to_base(f);
  if (by_normal_.emplace(key, f).second) order_.push_back(f);
}

bool Theory::contains(const Formula& f) const {
  return by_normal_.count(to_base(f)) > 0;
}

void FuzzyTheory::set(const Formula& f, const UnitRational& grade) {
  Formula key = to_base(f);
  if (grade.is_zero()) {
    map_.erase(key);
    return;
  }
  map_[key] = {f, grade};
}

UnitRational FuzzyTheory::grade(const Formula& f) const {
  auto it = map_.find(to_base(f));
  if (it == map_.end()) return UnitRational::zero();
  return it->second.second;
}

std::vector<std::pair<Formula, UnitRational>> FuzzyTheory::support() const {
  std::vector<std::pair<Formula, UnitRational>> out;
  out.reserve(map_.size());
  for (const auto& [key, entry] : map_) out.push_back(entry);
  return out;
}

bool FuzzyTheory::all_grades_one() const {
  for (const auto& [key, entry] : map_)
    if (!entry.second.is_one()) return false;
  return true;
}

FuzzyTheory FuzzyTheory::from_crisp(const Theory& t) {
  FuzzyTheory out;
  for (const Formula& f : t.formulas()) out.set(f, UnitRational::one());
  return out;
}

namespace {

bool is_comment(const std::string& line) {
  return !line.empty() && line[0] == '#' &&
         (line.size() == 1 || !std::isdigit(static_cast<unsigned char>(line[1])));
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

FuzzyTheory parse_fuzzy_theory(const std::string& text) {
  FuzzyTheory out;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || is_comment(line)) continue;
    if (line.rfind("grade", 0) == 0 && line.size() > 5 &&
        std::isspace(static_cast<unsigned char>(line[5]))) {
      auto colon = line.find(':');
      if (colon == std::string::npos)
        throw ParseError(lineno, 1, "missing ':' in graded theory entry");
      std::string grade_text = trim(line.substr(6, colon - 6));
      UnitRational g;
      try {
        g = UnitRational::parse(grade_text);
      } catch (const ValueError& e) {
        throw ParseError(lineno, 7, e.what());
      }
      Formula f = parse_formula(line.substr(colon + 1), lineno - 1);
      out.set(f, g);
    } else {
      out.set(parse_formula(line, lineno - 1), UnitRational::one());
    }
  }
  return out;
}

Theory parse_theory(const std::string& text) {
  FuzzyTheory fuzzy = parse_fuzzy_theory(text);
  Theory out;
  for (const auto& [f, g] : fuzzy.support()) {
    if (!g.is_one())
      throw ValueError("crisp theory contains graded entry '" + print(f) +
                       "' with grade " + g.str());
    out.add(f);
  }
  return out;
}

std::string print_theory(const Theory& t) {
  std::string out;
  for (const Formula& f : t.formulas()) {
    out += print(f);
    out += '\n';
  }
  return out;
}

std::string print_theory(const FuzzyTheory& t) {
  std::string out;
  for (const auto& [f, g] : t.support()) {
    if (g.is_one()) {
      out += print(f);
    } else {
      out += "grade " + g.str() + " : " + print(f);
    }
    out += '\n';
  }
  return out;
}

}  // namespace pavelka
