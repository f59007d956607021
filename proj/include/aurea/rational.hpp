#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision integers and exact fractions.
 *
 * Rational keeps the canonical form at all times: the denominator is
 * strictly positive and gcd(|num|, den) == 1, so structural equality is
 * value equality and zero is uniquely 0/1.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "aurea/errors.hpp"

namespace aurea {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

inline Sign sign_of(const BigInt& v) {
  const int s = v.sign();
  return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero);
}

inline Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }

inline const char* to_string(Sign s) {
  switch (s) {
    case Sign::Negative: return "Negative";
    case Sign::Zero: return "Zero";
    case Sign::Positive: return "Positive";
  }
  return "?";
}

class Rational {
 public:
  Rational() : num_(0), den_(1) {}

  template <std::integral T>
  Rational(T n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)

  Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)

  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == 1; }
  Sign sign() const { return sign_of(num_); }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return Rational(a.num_ + b.num_, a.den_);
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  Rational inverse() const {
    if (num_.is_zero()) throw ZeroDivisionError("inverse of zero rational");
    return Rational(den_, num_);
  }

  Rational abs() const { return sign() == Sign::Negative ? -*this : *this; }

  /// Largest integer <= value.
  BigInt floor() const {
    BigInt q = num_ / den_;  // truncates toward zero
    if (num_.sign() < 0 && q * den_ != num_) q -= 1;
    return q;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "p" for integers, "p/q" otherwise.
  std::string str() const {
    if (is_integer()) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  /// Parses [+-]digits[/digits] with no surrounding whitespace.
  static Rational parse(std::string_view text, std::size_t offset = 0) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      negative = text[i] == '-';
      ++i;
    }
    const auto digits = [&](BigInt& out) {
      const std::size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      if (i == start) throw ParseError("expected digits", offset + i);
      out = BigInt(std::string(text.substr(start, i - start)));
    };
    BigInt num;
    BigInt den = 1;
    digits(num);
    if (i < text.size() && text[i] == '/') {
      ++i;
      digits(den);
      if (den.is_zero()) throw ParseError("zero denominator", offset + i - 1);
    }
    if (i != text.size()) throw ParseError("unexpected character", offset + i);
    return Rational(negative ? BigInt(-num) : num, den);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  void normalize() {
    if (den_.is_zero()) throw ZeroDivisionError("rational with zero denominator");
    if (den_.sign() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_.is_zero()) {
      den_ = 1;
      return;
    }
    const BigInt g = boost::multiprecision::gcd(BigInt(boost::multiprecision::abs(num_)), den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

}  // namespace aurea
