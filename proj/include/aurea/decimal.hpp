#pragma once

/**
 * @file decimal.hpp
 * @brief Correctly rounded decimal expansion of exact values.
 *
 * Every exact quantity in the library is a rational combination of the
 * constants 1, sqrt5, pi, pi*sqrt5, sqrt2 and sqrt10. This header turns such
 * a combination into a decimal string rounded half-even at the last digit.
 *
 * The evaluator works in scaled integers: at working precision p it produces
 * an integer interval [lo, hi] (units of 10^-p) that provably contains the
 * value. The interval is rounded at both ends; if the two roundings agree the
 * digit string is correct, otherwise p is raised and the step repeats. Values
 * with a nonzero irrational part are never ties, so this terminates. Purely
 * rational values take an exact path.
 */

#include <array>
#include <cstddef>
#include <string>
#include <utility>

#include "aurea/rational.hpp"

namespace aurea::decimal {

enum class Constant : std::size_t { One = 0, Sqrt5, Pi, PiSqrt5, Sqrt2, Sqrt10 };

inline constexpr std::size_t kConstantCount = 6;

/// Rational coefficients over {1, sqrt5, pi, pi*sqrt5, sqrt2, sqrt10}.
struct Combination {
  std::array<Rational, kConstantCount> coeff{};

  Rational& operator[](Constant c) { return coeff[static_cast<std::size_t>(c)]; }
  const Rational& operator[](Constant c) const { return coeff[static_cast<std::size_t>(c)]; }

  bool is_rational() const {
    for (std::size_t i = 1; i < kConstantCount; ++i)
      if (!coeff[i].is_zero()) return false;
    return true;
  }
};

inline BigInt pow10(unsigned n) {
  BigInt r = 1;
  static const BigInt kChunk = BigInt(10000000000000000000ull);  // 10^19
  while (n >= 19) {
    r *= kChunk;
    n -= 19;
  }
  for (; n > 0; --n) r *= 10;
  return r;
}

/// Number of decimal digits of |n| (1 for zero).
inline unsigned digit_count(const BigInt& n) {
  return static_cast<unsigned>(boost::multiprecision::abs(n).str().size());
}

/// floor(sqrt(n) * 10^p), exact.
inline BigInt sqrt_scaled(unsigned n, unsigned p) {
  const BigInt radicand = BigInt(n) * pow10(2 * p);
  return boost::multiprecision::sqrt(radicand);
}

namespace detail {

// Sum of (-1)^k unit / ((2k+1) x^(2k+1)), truncated termwise.
inline BigInt arctan_inverse(unsigned x, const BigInt& unit) {
  const BigInt x2 = BigInt(x) * x;
  BigInt power = unit / x;
  BigInt sum = 0;
  for (unsigned k = 0; !power.is_zero(); ++k) {
    const BigInt term = power / (2 * k + 1);
    if (k % 2 == 0)
      sum += term;
    else
      sum -= term;
    power /= x2;
  }
  return sum;
}

}  // namespace detail

/// pi * 10^p with absolute error below one unit (Machin's formula).
inline BigInt pi_scaled(unsigned p) {
  thread_local unsigned cached_precision = 0;
  thread_local BigInt cached;
  if (cached_precision < p) {
    const unsigned guard = 12;
    const unsigned work = p + guard;
    const BigInt unit = pow10(work);
    const BigInt raw =
        BigInt(16) * detail::arctan_inverse(5, unit) - BigInt(4) * detail::arctan_inverse(239, unit);
    cached = raw / pow10(guard);
    cached_precision = p;
  }
  if (cached_precision == p) return cached;
  return cached / pow10(cached_precision - p);
}

/// constant * 10^p with absolute error below one unit.
inline BigInt constant_scaled(Constant c, unsigned p) {
  switch (c) {
    case Constant::One: return pow10(p);
    case Constant::Sqrt5: return sqrt_scaled(5, p);
    case Constant::Sqrt2: return sqrt_scaled(2, p);
    case Constant::Sqrt10: return sqrt_scaled(10, p);
    case Constant::Pi: return pi_scaled(p);
    case Constant::PiSqrt5: {
      const unsigned guard = 4;
      const BigInt prod = pi_scaled(p + guard) * sqrt_scaled(5, p + guard);
      return prod / pow10(p + 2 * guard);
    }
  }
  return 0;
}

namespace detail {

inline BigInt ceil_abs(const Rational& r) {
  const Rational a = r.abs();
  BigInt f = a.floor();
  if (Rational(f) != a) f += 1;
  return f;
}

// Interval [lo, hi] in units of 10^-p containing the value.
inline std::pair<BigInt, BigInt> enclose(const Combination& v, unsigned p) {
  BigInt centre = 0;
  BigInt slack = 1;
  for (std::size_t i = 0; i < kConstantCount; ++i) {
    const Rational& c = v.coeff[i];
    if (c.is_zero()) continue;
    const BigInt k = constant_scaled(static_cast<Constant>(i), p);
    centre += Rational(c.num() * k, c.den()).floor();
    slack += BigInt(2) * ceil_abs(c) + 2;
  }
  return {centre - slack, centre + slack};
}

// floor(n / d) rounded half-even, d > 0.
inline BigInt round_div(const BigInt& n, const BigInt& d) {
  BigInt q = Rational(n, d).floor();
  const BigInt r = n - q * d;
  const BigInt twice = r * 2;
  if (twice > d || (twice == d && q % 2 != 0)) q += 1;
  return q;
}

struct Rounded {
  BigInt mantissa;  // exactly `digits` digits
  long long exponent;
  friend bool operator==(const Rounded&, const Rounded&) = default;
};

// Positive n * 10^-p rounded to `digits` significant digits.
inline Rounded round_significant(const BigInt& n, unsigned p, unsigned digits) {
  const long long len = digit_count(n);
  const long long d = digits;
  if (len <= d) return {BigInt(n * pow10(static_cast<unsigned>(d - len))), len - d - static_cast<long long>(p)};
  BigInt q = round_div(n, pow10(static_cast<unsigned>(len - d)));
  long long e = len - d - static_cast<long long>(p);
  if (q == pow10(digits)) {
    q /= 10;
    e += 1;
  }
  return {std::move(q), e};
}

inline std::string format_positional(bool negative, const Rounded& r, unsigned digits) {
  std::string s = r.mantissa.str();
  std::string out = negative ? "-" : "";
  if (r.exponent >= 0) return out + s + std::string(static_cast<std::size_t>(r.exponent), '0');
  const long long pos = static_cast<long long>(digits) + r.exponent;
  if (pos > 0) return out + s.substr(0, static_cast<std::size_t>(pos)) + "." + s.substr(static_cast<std::size_t>(pos));
  return out + "0." + std::string(static_cast<std::size_t>(-pos), '0') + s;
}

inline std::string format_fixed(const BigInt& q, unsigned decimals) {
  const bool negative = q.sign() < 0;
  std::string s = boost::multiprecision::abs(q).str();
  if (decimals > 0) {
    if (s.size() <= decimals) s = std::string(decimals + 1 - s.size(), '0') + s;
    s.insert(s.size() - decimals, ".");
  }
  return (negative ? "-" : "") + s;
}

inline Rational pow10_rational(long long e) {
  if (e >= 0) return Rational(pow10(static_cast<unsigned>(e)));
  return Rational(BigInt(1), pow10(static_cast<unsigned>(-e)));
}

inline std::string rational_significant(const Rational& v, unsigned digits) {
  if (v.is_zero()) return "0";
  const Rational a = v.abs();
  long long t = static_cast<long long>(digit_count(a.num())) - static_cast<long long>(digit_count(a.den()));
  while (pow10_rational(t) > a) --t;
  while (pow10_rational(t + 1) <= a) ++t;
  const long long shift = static_cast<long long>(digits) - 1 - t;
  const Rational scaled = a * pow10_rational(shift);
  Rounded r{round_div(scaled.num(), scaled.den()), -shift};
  if (r.mantissa == pow10(digits)) {
    r.mantissa /= 10;
    r.exponent += 1;
  }
  return format_positional(v.sign() == Sign::Negative, r, digits);
}

}  // namespace detail

/// Value rounded half-even to `digits` significant digits, positional notation.
/// Zero renders as "0".
inline std::string to_significant(const Combination& v, unsigned digits) {
  if (digits == 0) throw DomainError("significant digits must be >= 1");
  if (v.is_rational()) return detail::rational_significant(v[Constant::One], digits);
  unsigned p = digits + 10;
  for (unsigned step = 10;; step *= 2) {
    auto [lo, hi] = detail::enclose(v, p);
    if (lo.sign() > 0 || hi.sign() < 0) {
      const bool negative = hi.sign() < 0;
      const BigInt a = negative ? BigInt(-hi) : lo;
      const BigInt b = negative ? BigInt(-lo) : hi;
      auto ra = detail::round_significant(a, p, digits);
      auto rb = detail::round_significant(b, p, digits);
      if (ra == rb) return detail::format_positional(negative, ra, digits);
    }
    p += step;
  }
}

/// Value rounded half-even to `decimals` places after the point. Never "-0".
inline std::string to_fixed(const Combination& v, unsigned decimals) {
  if (v.is_rational()) {
    const Rational s = v[Constant::One] * Rational(pow10(decimals));
    return detail::format_fixed(detail::round_div(s.num(), s.den()), decimals);
  }
  unsigned p = decimals + 10;
  for (unsigned step = 10;; step *= 2) {
    auto [lo, hi] = detail::enclose(v, p);
    const BigInt unit = pow10(p - decimals);
    const BigInt qa = detail::round_div(lo, unit);
    const BigInt qb = detail::round_div(hi, unit);
    if (qa == qb) return detail::format_fixed(qa, decimals);
    p += step;
  }
}

inline double to_double(const Combination& v) { return std::stod(to_significant(v, 17)); }

}  // namespace aurea::decimal
