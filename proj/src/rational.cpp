#include "pavelka/rational.hpp"

namespace pavelka {

UnitRational::UnitRational(Int p, Int q) {
  if (q == 0) throw ValueError("rational with zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  if (p < 0 || p > q)
    throw ValueError("rational " + p.str() + "/" + q.str() + " outside [0,1]");
  Int g = boost::multiprecision::gcd(p, q);
  num_ = p / g;
  den_ = q / g;
}

std::string UnitRational::str() const {
  if (is_zero()) return "0";
  if (is_one()) return "1";
  return num_.str() + "/" + den_.str();
}

UnitRational UnitRational::parse(const std::string& text) {
  auto bad = [&] { return ValueError("malformed rational '" + text + "'"); };
  if (text.empty()) throw bad();
  for (char c : text)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/')) throw bad();
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return UnitRational(Int(text), 1);
    std::string p = text.substr(0, slash), q = text.substr(slash + 1);
    if (p.empty() || q.empty() || q.find('/') != std::string::npos) throw bad();
    return UnitRational(Int(p), Int(q));
  } catch (const std::runtime_error&) {
    throw bad();
  }
}

UnitRational mv_neg(const UnitRational& x) {
  return UnitRational(x.den() - x.num(), x.den());
}

UnitRational mv_disj(const UnitRational& x, const UnitRational& y) {
  Int num = x.num() * y.den() + y.num() * x.den();
  Int den = x.den() * y.den();
  if (num >= den) return UnitRational::one();
  return UnitRational(num, den);
}

UnitRational mv_conj(const UnitRational& x, const UnitRational& y) {
  Int den = x.den() * y.den();
  Int num = x.num() * y.den() + y.num() * x.den() - den;
  if (num <= 0) return UnitRational::zero();
  return UnitRational(num, den);
}

UnitRational mv_imp(const UnitRational& x, const UnitRational& y) {
  Int den = x.den() * y.den();
  Int num = den - x.num() * y.den() + y.num() * x.den();
  if (num >= den) return UnitRational::one();
  return UnitRational(num, den);
}

UnitRational mv_min(const UnitRational& x, const UnitRational& y) {
  return x <= y ? x : y;
}

UnitRational mv_max(const UnitRational& x, const UnitRational& y) {
  return x <= y ? y : x;
}

UnitRational mv_pow(const UnitRational& x, int n) {
  if (n < 1) throw ValueError("mv_pow requires n >= 1");
  // max(0, n*x - (n-1)), in one step.
  Int num = Int(n) * x.num() - Int(n - 1) * x.den();
  if (num <= 0) return UnitRational::zero();
  return UnitRational(num, x.den());
}

UnitRational mv_nmul(const UnitRational& x, int n) {
  if (n < 1) throw ValueError("mv_nmul requires n >= 1");
  Int num = Int(n) * x.num();
  if (num >= x.den()) return UnitRational::one();
  return UnitRational(num, x.den());
}

}  // namespace pavelka
