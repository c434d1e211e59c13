#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace exactdet {

/// Arbitrary-precision signed integer. Round-trips through decimal strings
/// exactly; no magnitude bound.
using Integer = boost::multiprecision::cpp_int;

/// Thrown when a rational division (or construction) has a zero divisor.
/// Condensation catches this to trigger its fallback path.
class DivisionByZero : public std::domain_error {
public:
  DivisionByZero() : std::domain_error("division by zero") {}
  explicit DivisionByZero(const std::string &what) : std::domain_error(what) {}
};

/// Exact rational number, always in canonical form: denominator > 0 and
/// gcd(|num|, den) = 1. Equality is structural equality of canonical forms.
/// Values are immutable in spirit: every operation returns a new canonical
/// value, so concurrent reads are unrestricted.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(const Integer &n) : v_(n) {}
  Rational(long long n) : v_(n) {}
  Rational(int n) : v_(n) {}

  Rational(const Integer &num, const Integer &den) {
    if (den == 0)
      throw DivisionByZero("rational with zero denominator");
    v_ = Rep(num) / Rep(den);
  }

  Integer numerator() const { return boost::multiprecision::numerator(v_); }
  Integer denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return denominator() == 1; }

  friend Rational operator+(const Rational &a, const Rational &b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational &a, const Rational &b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational &a, const Rational &b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational &a, const Rational &b) {
    if (b.is_zero())
      throw DivisionByZero();
    return Rational(a.v_ / b.v_);
  }
  Rational operator-() const { return Rational(Rep(-v_)); }
  Rational operator+() const { return *this; }

  Rational &operator+=(const Rational &o) { v_ += o.v_; return *this; }
  Rational &operator-=(const Rational &o) { v_ -= o.v_; return *this; }
  Rational &operator*=(const Rational &o) { v_ *= o.v_; return *this; }
  Rational &operator/=(const Rational &o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational &a, const Rational &b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational &a, const Rational &b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational &a, const Rational &b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational &a, const Rational &b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational &a, const Rational &b) { return a.v_ >= b.v_; }

  /// "p/q" with q > 0 coprime, or bare "p" when q = 1.
  std::string str() const {
    std::string s = numerator().str();
    if (denominator() != 1) {
      s += '/';
      s += denominator().str();
    }
    return s;
  }

  /// Accepts optional-sign decimal, "p/q", and surrounding whitespace.
  static Rational parse(std::string_view text);

  friend std::ostream &operator<<(std::ostream &os, const Rational &r) {
    return os << r.str();
  }

private:
  using Rep = boost::multiprecision::cpp_rational;
  explicit Rational(Rep v) : v_(std::move(v)) {}
  Rep v_;
};

inline std::string to_string(const Rational &r) { return r.str(); }

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos)
    return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline Integer parse_integer(std::string_view s) {
  if (s.empty())
    throw std::invalid_argument("empty integer literal");
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size())
    throw std::invalid_argument("sign without digits");
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9')
      throw std::invalid_argument("bad digit in integer literal: '" + std::string(s) + "'");
  // cpp_int's string constructor rejects a leading '+'
  Integer v(std::string(s.substr(i)));
  return s[0] == '-' ? Integer(-v) : v;
}

} // namespace detail

inline Rational Rational::parse(std::string_view text) {
  const auto t = detail::trim(text);
  if (t.empty())
    throw std::invalid_argument("empty rational literal");
  const auto slash = t.find('/');
  if (slash == std::string_view::npos)
    return Rational(detail::parse_integer(t));
  const Integer num = detail::parse_integer(detail::trim(t.substr(0, slash)));
  const Integer den = detail::parse_integer(detail::trim(t.substr(slash + 1)));
  return Rational(num, den);
}

} // namespace exactdet
