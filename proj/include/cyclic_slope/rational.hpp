#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>

namespace cyclic_slope {

using Int = boost::multiprecision::cpp_int;

/// Exact rational number. Always in lowest terms, denominator > 0, sign on
/// the numerator. There is no floating point anywhere in this library.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long long v) : q_(v) {}  // NOLINT: implicit by design
  Rational(const Int& v) : q_(v) {}
  Rational(const Int& num, const Int& den);
  Rational(long long num, long long den) : Rational(Int(num), Int(den)) {}

  Int numerator() const { return boost::multiprecision::numerator(q_); }
  Int denominator() const { return boost::multiprecision::denominator(q_); }

  bool is_integer() const { return denominator() == 1; }
  bool is_zero() const { return q_ == 0; }
  int sign() const { return q_ < 0 ? -1 : (q_ > 0 ? 1 : 0); }

  /// Canonical form "p/q", or just "p" when q == 1.
  std::string str() const;
  /// Parses "p", "p/q" or "-p/q". Throws Error(ParseError) on anything else.
  static Rational parse(const std::string& text);

  Rational operator-() const { return Rational(-q_); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(const boost::multiprecision::cpp_rational& q) : q_(q) {}
  boost::multiprecision::cpp_rational q_;
};

}  // namespace cyclic_slope
