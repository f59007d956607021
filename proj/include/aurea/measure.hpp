#pragma once

// SpiralMeasure: exact values u + v*pi + w*sqrt2 with coefficients in Q(sqrt5).
//
// The three-element basis is closed under addition and under scaling by
// golden numbers, which is all the spiral lengths and areas ever need. It is
// not closed under multiplication (pi^2, pi*sqrt2), so there is no operator*
// between two measures.

#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "aurea/decimal.hpp"
#include "aurea/golden.hpp"

namespace aurea {

class SpiralMeasure {
 public:
  SpiralMeasure() = default;
  SpiralMeasure(GoldenNumber unit, GoldenNumber pi, GoldenNumber sqrt2)
      : u_(std::move(unit)), v_(std::move(pi)), w_(std::move(sqrt2)) {}

  static SpiralMeasure scalar(GoldenNumber g) { return {std::move(g), {}, {}}; }
  static SpiralMeasure pi_times(GoldenNumber g) { return {{}, std::move(g), {}}; }
  static SpiralMeasure sqrt2_times(GoldenNumber g) { return {{}, {}, std::move(g)}; }

  /// Coefficient of 1.
  const GoldenNumber& unit() const noexcept { return u_; }
  /// Coefficient of pi.
  const GoldenNumber& pi() const noexcept { return v_; }
  /// Coefficient of sqrt2.
  const GoldenNumber& sqrt2() const noexcept { return w_; }

  bool is_zero() const { return u_.is_zero() && v_.is_zero() && w_.is_zero(); }
  bool is_scalar() const { return v_.is_zero() && w_.is_zero(); }

  SpiralMeasure operator-() const { return {-u_, -v_, -w_}; }
  friend SpiralMeasure operator+(const SpiralMeasure& a, const SpiralMeasure& b) {
    return {a.u_ + b.u_, a.v_ + b.v_, a.w_ + b.w_};
  }
  friend SpiralMeasure operator-(const SpiralMeasure& a, const SpiralMeasure& b) {
    return {a.u_ - b.u_, a.v_ - b.v_, a.w_ - b.w_};
  }
  friend SpiralMeasure operator*(const GoldenNumber& k, const SpiralMeasure& m) {
    return {k * m.u_, k * m.v_, k * m.w_};
  }
  friend SpiralMeasure operator*(const SpiralMeasure& m, const GoldenNumber& k) { return k * m; }
  SpiralMeasure& operator+=(const SpiralMeasure& o) { return *this = *this + o; }
  SpiralMeasure& operator-=(const SpiralMeasure& o) { return *this = *this - o; }

  friend bool operator==(const SpiralMeasure&, const SpiralMeasure&) = default;

  /// Product of two measures, defined only when one factor is a plain
  /// golden number (no pi or sqrt2 component). Throws DomainError otherwise.
  static SpiralMeasure product(const SpiralMeasure& a, const SpiralMeasure& b) {
    if (a.is_scalar()) return a.u_ * b;
    if (b.is_scalar()) return b.u_ * a;
    throw DomainError("product of two spiral measures leaves the {1, pi, sqrt2} basis");
  }

  /// "(u; v; w)" with each coefficient in GoldenNumber canonical form.
  std::string str() const { return "(" + u_.str() + "; " + v_.str() + "; " + w_.str() + ")"; }

  static SpiralMeasure parse(std::string_view text) {
    const auto open = text.find('(');
    const auto close = text.rfind(')');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open)
      throw ParseError("expected '(u; v; w)'", open == std::string_view::npos ? 0 : open);
    const std::string_view body = text.substr(open + 1, close - open - 1);
    const auto a = body.find(';');
    const auto b = a == std::string_view::npos ? a : body.find(';', a + 1);
    if (b == std::string_view::npos) throw ParseError("expected two ';' separators", open + 1);
    return {GoldenNumber::parse(body.substr(0, a)), GoldenNumber::parse(body.substr(a + 1, b - a - 1)),
            GoldenNumber::parse(body.substr(b + 1))};
  }

  decimal::Combination combination() const {
    using decimal::Constant;
    decimal::Combination c;
    auto [u1, u5] = u_.to_sqrt5_basis();
    auto [v1, v5] = v_.to_sqrt5_basis();
    auto [w1, w5] = w_.to_sqrt5_basis();
    c[Constant::One] = std::move(u1);
    c[Constant::Sqrt5] = std::move(u5);
    c[Constant::Pi] = std::move(v1);
    c[Constant::PiSqrt5] = std::move(v5);
    c[Constant::Sqrt2] = std::move(w1);
    c[Constant::Sqrt10] = std::move(w5);  // sqrt5 * sqrt2
    return c;
  }

  friend std::ostream& operator<<(std::ostream& os, const SpiralMeasure& m) { return os << m.str(); }

 private:
  GoldenNumber u_;
  GoldenNumber v_;
  GoldenNumber w_;
};

/// Decimal value of u + v pi + w sqrt2 to `digits` significant digits.
inline std::string to_decimal(const SpiralMeasure& m, unsigned digits) {
  return decimal::to_significant(m.combination(), digits);
}

inline std::string to_fixed(const SpiralMeasure& m, unsigned decimals) {
  return decimal::to_fixed(m.combination(), decimals);
}

inline double to_double(const SpiralMeasure& m) { return decimal::to_double(m.combination()); }

}  // namespace aurea
