#pragma once

#include <gmpxx.h>

#include <cctype>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "polycoord/errors.hpp"

namespace polycoord {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Equality is value equality. All geometry in this library
/// runs on these, so every sign decision is exact.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor): integer literals mix in
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw validation_error("rational denominator must be nonzero");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

  /// Accepts "p", "-p", or "p/q" with a positive integer q.
  static Rational parse(std::string_view text);

  /// Canonical form: "p/q" in lowest terms, or just "p" for integers.
  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.sign() == 0) throw validation_error("rational division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}

  mpq_class v_;
};

inline Rational Rational::parse(std::string_view text) {
  const auto digits_only = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  const auto integer_like = [&](std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    return digits_only(s);
  };

  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!integer_like(num))
    throw parse_error("not a rational: '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(mpz_class(std::string(num)), mpz_class(1));

  const std::string_view den = text.substr(slash + 1);
  if (!digits_only(den))
    throw parse_error("not a rational: '" + std::string(text) + "' (denominator must be a positive integer)");
  mpz_class d{std::string(den)};
  if (d == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
  return Rational(mpz_class(std::string(num)), d);
}

}  // namespace polycoord
