#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>

namespace pavelka {

using Int = boost::multiprecision::cpp_int;

/// Error for values or arguments outside the unit interval / operation domain.
struct ValueError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Exact rational in [0,1], always stored in canonical reduced form
/// (gcd(num, den) = 1, den > 0, num <= den).  The carrier of the rational
/// standard MV-algebra; equality of values is equality of representations.
class UnitRational {
 public:
  UnitRational() : num_(0), den_(1) {}

  /// Normalizing constructor.  Throws ValueError if p/q is not in [0,1]
  /// or q = 0; out-of-range inputs are never clamped.
  UnitRational(Int p, Int q);

  static UnitRational zero() { return UnitRational(); }
  static UnitRational one() { return UnitRational(1, 1); }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == den_; }

  friend bool operator==(const UnitRational& a, const UnitRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const UnitRational& a, const UnitRational& b) {
    return !(a == b);
  }
  friend bool operator<(const UnitRational& a, const UnitRational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator<=(const UnitRational& a, const UnitRational& b) {
    return a.num_ * b.den_ <= b.num_ * a.den_;
  }
  friend bool operator>(const UnitRational& a, const UnitRational& b) { return b < a; }
  friend bool operator>=(const UnitRational& a, const UnitRational& b) { return b <= a; }

  /// Text form `p/q`, with `0` and `1` as shorthand.
  std::string str() const;

  /// Parses `p/q`, `0`, or `1`.  Throws ValueError on malformed input or
  /// a value outside [0,1].
  static UnitRational parse(const std::string& text);

 private:
  Int num_;
  Int den_;
};

// Operations of the standard MV-algebra restricted to [0,1] rationals.

/// 1 - x
UnitRational mv_neg(const UnitRational& x);
/// min(1, x + y)
UnitRational mv_disj(const UnitRational& x, const UnitRational& y);
/// max(0, x + y - 1)
UnitRational mv_conj(const UnitRational& x, const UnitRational& y);
/// min(1, 1 - x + y)
UnitRational mv_imp(const UnitRational& x, const UnitRational& y);

UnitRational mv_min(const UnitRational& x, const UnitRational& y);
UnitRational mv_max(const UnitRational& x, const UnitRational& y);

/// n-fold strong conjunction x (.) ... (.) x; requires n >= 1.
UnitRational mv_pow(const UnitRational& x, int n);
/// n-fold strong disjunction x (+) ... (+) x; requires n >= 1.
UnitRational mv_nmul(const UnitRational& x, int n);

}  // namespace pavelka
