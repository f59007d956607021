#pragma once

/**
 * @file golden.hpp
 * @brief Exact arithmetic in Q(sqrt5), stored in the phi-basis.
 *
 * A GoldenNumber is r + s*phi with rational r, s and phi = (1 + sqrt5)/2.
 * Products reduce with phi^2 = phi + 1:
 *
 *   (r1 + s1 phi)(r2 + s2 phi) = (r1 r2 + s1 s2) + (r1 s2 + r2 s1 + s1 s2) phi
 *
 * The Galois conjugate sends phi to phibar = 1 - phi, and the norm
 * N(r + s phi) = (r + s phi)(r + s phibar) = r^2 + r s - s^2 is a rational
 * that vanishes only at zero, which gives inverses as conj(x) / N(x).
 */

#include <cctype>
#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aurea/decimal.hpp"
#include "aurea/fibonacci.hpp"
#include "aurea/rational.hpp"

namespace aurea {

class GoldenNumber {
 public:
  GoldenNumber() = default;
  GoldenNumber(Rational r) : r_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  GoldenNumber(T n) : r_(n) {}  // NOLINT(google-explicit-constructor)
  GoldenNumber(Rational r, Rational s) : r_(std::move(r)), s_(std::move(s)) {}

  static GoldenNumber phi() { return {Rational(0), Rational(1)}; }
  static GoldenNumber phi_bar() { return {Rational(1), Rational(-1)}; }

  const Rational& rational_part() const noexcept { return r_; }
  const Rational& phi_part() const noexcept { return s_; }

  bool is_zero() const { return r_.is_zero() && s_.is_zero(); }
  bool is_rational() const { return s_.is_zero(); }

  GoldenNumber operator-() const { return {-r_, -s_}; }

  friend GoldenNumber operator+(const GoldenNumber& a, const GoldenNumber& b) {
    return {a.r_ + b.r_, a.s_ + b.s_};
  }
  friend GoldenNumber operator-(const GoldenNumber& a, const GoldenNumber& b) {
    return {a.r_ - b.r_, a.s_ - b.s_};
  }
  friend GoldenNumber operator*(const GoldenNumber& a, const GoldenNumber& b) {
    if (a.is_rational()) return {a.r_ * b.r_, a.r_ * b.s_};
    if (b.is_rational()) return {a.r_ * b.r_, a.s_ * b.r_};
    const Rational ss = a.s_ * b.s_;
    return {a.r_ * b.r_ + ss, a.r_ * b.s_ + b.r_ * a.s_ + ss};
  }
  friend GoldenNumber operator/(const GoldenNumber& a, const GoldenNumber& b) {
    return a * b.inverse();
  }

  GoldenNumber& operator+=(const GoldenNumber& o) { return *this = *this + o; }
  GoldenNumber& operator-=(const GoldenNumber& o) { return *this = *this - o; }
  GoldenNumber& operator*=(const GoldenNumber& o) { return *this = *this * o; }
  GoldenNumber& operator/=(const GoldenNumber& o) { return *this = *this / o; }

  /// r^2 + r s - s^2.
  Rational norm() const { return r_ * r_ + r_ * s_ - s_ * s_; }

  /// r + s phi  ->  (r + s) - s phi.
  GoldenNumber conj() const { return {r_ + s_, -s_}; }

  GoldenNumber inverse() const {
    if (is_zero()) throw ZeroDivisionError("inverse of zero golden number");
    const Rational n = norm().inverse();
    const GoldenNumber c = conj();
    return {c.r_ * n, c.s_ * n};
  }

  /// Exact sign of r + s phi. Writes the value as (p + q sqrt5)/2 with
  /// p = 2r + s, q = s; mixed signs are settled by comparing p^2 with 5 q^2.
  Sign sign() const {
    const Rational p = r_ * 2 + s_;
    const Sign sp = p.sign();
    const Sign sq = s_.sign();
    if (sq == Sign::Zero) return sp;
    if (sp == Sign::Zero || sp == sq) return sq;
    return p * p > s_ * s_ * 5 ? sp : sq;
  }

  /// (p, q) with value = p + q sqrt5.
  std::pair<Rational, Rational> to_sqrt5_basis() const {
    const Rational half_s = s_ * Rational(BigInt(1), BigInt(2));
    return {r_ + half_s, half_s};
  }

  static GoldenNumber from_sqrt5_basis(const Rational& p, const Rational& q) {
    // p + q sqrt5 = p + q (2 phi - 1)
    return {p - q, q * 2};
  }

  friend bool operator==(const GoldenNumber& a, const GoldenNumber& b) = default;
  friend std::strong_ordering operator<=>(const GoldenNumber& a, const GoldenNumber& b) {
    switch ((a - b).sign()) {
      case Sign::Negative: return std::strong_ordering::less;
      case Sign::Positive: return std::strong_ordering::greater;
      case Sign::Zero: break;
    }
    return std::strong_ordering::equal;
  }

  /// Canonical text: "3/2", "phi", "-1+phi", "1/2+3/4phi", "2-5phi".
  /// Round-trips through parse().
  std::string str() const {
    const auto coef = [](const Rational& c) {
      if (c == Rational(1)) return std::string();
      if (c == Rational(-1)) return std::string("-");
      return c.str();
    };
    if (s_.is_zero()) return r_.str();
    if (r_.is_zero()) return coef(s_) + "phi";
    const bool neg = s_.sign() == Sign::Negative;
    return r_.str() + (neg ? "-" : "+") + coef(s_.abs()) + "phi";
  }

  /// Parses a sum of terms: each term is [sign] rational, [sign] [rational][*]phi.
  /// Whitespace may separate tokens; inside a number or "phi" it is an error.
  static GoldenNumber parse(std::string_view text);

  decimal::Combination combination() const {
    decimal::Combination c;
    auto [p, q] = to_sqrt5_basis();
    c[decimal::Constant::One] = std::move(p);
    c[decimal::Constant::Sqrt5] = std::move(q);
    return c;
  }

  friend std::ostream& operator<<(std::ostream& os, const GoldenNumber& g) { return os << g.str(); }

 private:
  Rational r_;
  Rational s_;
};

inline GoldenNumber GoldenNumber::parse(std::string_view text) {
  std::string compact;
  std::vector<std::size_t> origin;  // offset in `text` of each compact char
  const auto same_class = [](char a, char b) {
    const auto digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
    const auto alpha = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; };
    return (digit(a) && digit(b)) || (alpha(a) && alpha(b));
  };
  bool gap = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      gap = !compact.empty();
      continue;
    }
    // Whitespace may separate tokens but not split a number or a word.
    if (gap && same_class(compact.back(), text[i])) throw ParseError("unexpected whitespace", i);
    gap = false;
    compact.push_back(text[i]);
    origin.push_back(i);
  }
  const auto where = [&](std::size_t i) { return i < origin.size() ? origin[i] : text.size(); };
  if (compact.empty()) throw ParseError("empty number", 0);

  GoldenNumber total;
  std::size_t i = 0;
  while (i < compact.size()) {
    bool negative = false;
    if (compact[i] == '+' || compact[i] == '-') {
      negative = compact[i] == '-';
      ++i;
    } else if (i != 0) {
      throw ParseError("expected '+' or '-'", where(i));
    }
    const std::size_t start = i;
    while (i < compact.size() && (std::isdigit(static_cast<unsigned char>(compact[i])) || compact[i] == '/')) ++i;
    Rational coef(1);
    const bool has_coef = i > start;
    if (has_coef) {
      try {
        coef = Rational::parse(std::string_view(compact).substr(start, i - start));
      } catch (const ParseError& e) {
        throw ParseError("malformed rational", where(start + (e.position() < i - start ? e.position() : 0)));
      }
    }
    if (i < compact.size() && compact[i] == '*') {
      if (!has_coef) throw ParseError("'*' without coefficient", where(i));
      ++i;
      if (compact.compare(i, 3, "phi") != 0) throw ParseError("expected 'phi' after '*'", where(i));
    }
    bool is_phi = false;
    if (compact.compare(i, 3, "phi") == 0) {
      is_phi = true;
      i += 3;
    } else if (!has_coef) {
      throw ParseError("expected number or 'phi'", where(i));
    }
    if (i < compact.size() && compact[i] != '+' && compact[i] != '-')
      throw ParseError("unexpected character", where(i));
    if (negative) coef = -coef;
    total += is_phi ? GoldenNumber(Rational(0), coef) : GoldenNumber(coef);
  }
  return total;
}

/// phi^n = F(n-1) + F(n) phi for every integer n.
inline GoldenNumber phi_pow(long long n) { return {Rational(fib(n - 1)), Rational(fib(n))}; }

/// Decimal expansion to `digits` significant digits (round-half-even).
inline std::string to_decimal(const GoldenNumber& x, unsigned digits) {
  return decimal::to_significant(x.combination(), digits);
}

inline std::string to_fixed(const GoldenNumber& x, unsigned decimals) {
  return decimal::to_fixed(x.combination(), decimals);
}

inline double to_double(const GoldenNumber& x) { return decimal::to_double(x.combination()); }

}  // namespace aurea
