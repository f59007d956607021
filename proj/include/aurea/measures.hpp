#pragma once

/**
 * @file measures.hpp
 * @brief Spiral length and region measures over a subdivision.
 *
 * For step k with x = x_{k-1} (the square side) and y = x_k:
 *
 *   L_k = (pi/2) x        quarter arc length
 *   A_k = (pi/4) x^2      quarter disc area
 *   B_k = x y             residual rectangle area
 *   C_k = x^2 (1 - pi/4)  square minus quarter disc
 *   D_k = sqrt2 x         square diagonal
 *
 * Totals over n steps have closed forms in m and Fibonacci numbers (b = 1):
 *
 *   L = (pi/2) [1 + m + (-1)^n (m F_{n-2} - F_{n-1})]
 *   A = (pi/4) [m^2 F_{n-1} F_n - 2 m tau(n) + F_n F_{n+1}]
 *   B = m - tau(n) (m^2 + 1) + m (2 F_n F_{n+1} - 1 + S_n) - F_n F_{n+1}
 *
 * with tau(n) = sum_{k<n} F_k F_{k+1} and S_n = sum_{k<=n} (-1)^k. C and D
 * follow from A and L by coefficient transforms, since C = (4/pi - 1) A and
 * D = (2 sqrt2 / pi) L.
 */

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aurea/decimal.hpp"
#include "aurea/errors.hpp"
#include "aurea/fibonacci.hpp"
#include "aurea/golden.hpp"
#include "aurea/measure.hpp"
#include "aurea/subdivision.hpp"

namespace aurea {

struct StepMeasures {
  long long k = 0;  // step index, or step count for totals
  SpiralMeasure L;
  SpiralMeasure A;
  SpiralMeasure B;
  SpiralMeasure C;
  SpiralMeasure D;

  StepMeasures& operator+=(const StepMeasures& o) {
    L += o.L;
    A += o.A;
    B += o.B;
    C += o.C;
    D += o.D;
    return *this;
  }
  friend StepMeasures operator-(const StepMeasures& a, const StepMeasures& b) {
    return {a.k, a.L - b.L, a.A - b.A, a.B - b.B, a.C - b.C, a.D - b.D};
  }
  bool is_zero() const { return L.is_zero() && A.is_zero() && B.is_zero() && C.is_zero() && D.is_zero(); }
  friend bool operator==(const StepMeasures&, const StepMeasures&) = default;
};

namespace detail {
inline Rational ratio(long long p, long long q) { return Rational(BigInt(p), BigInt(q)); }
inline GoldenNumber gint(const BigInt& v) { return GoldenNumber(Rational(v)); }
}  // namespace detail

namespace detail {
// No positivity check: the closed forms are polynomial identities and hold
// for the formal continuation of the x-sequence too.
inline StepMeasures raw_step(const GoldenNumber& x_prev, const GoldenNumber& x_cur, long long k) {
  const GoldenNumber sq = x_prev * x_prev;
  const GoldenNumber quarter = GoldenNumber(detail::ratio(1, 4));
  StepMeasures s;
  s.k = k;
  s.L = SpiralMeasure::pi_times(x_prev * GoldenNumber(detail::ratio(1, 2)));
  s.A = SpiralMeasure::pi_times(sq * quarter);
  s.B = SpiralMeasure::scalar(x_prev * x_cur);
  s.C = SpiralMeasure(sq, -(sq * quarter), {});
  s.D = SpiralMeasure::sqrt2_times(x_prev);
  return s;
}
}  // namespace detail

inline StepMeasures step_measures(const GoldenNumber& x_prev, const GoldenNumber& x_cur, long long k) {
  if (x_prev.sign() != Sign::Positive)
    throw DomainError("step_measures: x_{k-1} must be positive, got " + x_prev.str());
  return detail::raw_step(x_prev, x_cur, k);
}

/// Componentwise sums of step_measures over k = 1..n of an x-sequence.
inline StepMeasures cumulative(std::span<const GoldenNumber> xs, long long n) {
  if (n < 1 || static_cast<std::size_t>(n) >= xs.size())
    throw DomainError("cumulative: n must be in 1.." + std::to_string(static_cast<long long>(xs.size()) - 1) +
                      ", got " + std::to_string(n));
  StepMeasures total;
  total.k = n;
  for (long long k = 1; k <= n; ++k)
    total += step_measures(xs[static_cast<std::size_t>(k - 1)], xs[static_cast<std::size_t>(k)], k);
  return total;
}

inline StepMeasures cumulative(const SubdivisionTrace& trace, long long n) {
  if (n < 1 || n > static_cast<long long>(trace.steps.size()))
    throw DomainError("cumulative: n must be in 1.." + std::to_string(trace.steps.size()) + ", got " +
                      std::to_string(n));
  return cumulative(std::span<const GoldenNumber>(trace.xs), n);
}

/// Infinite-sum totals for m = phi and short side b.
inline StepMeasures golden_totals(const GoldenNumber& b) {
  if (b.sign() != Sign::Positive) throw DomainError("golden_totals: side must be positive, got " + b.str());
  const GoldenNumber phi = GoldenNumber::phi();
  const GoldenNumber phi2 = phi * phi;
  const GoldenNumber b2 = b * b;
  const GoldenNumber quarter(detail::ratio(1, 4));
  StepMeasures t;
  t.k = 0;
  t.L = SpiralMeasure::pi_times(b * phi2 * GoldenNumber(detail::ratio(1, 2)));
  t.A = SpiralMeasure::pi_times(b2 * phi * quarter);
  t.B = SpiralMeasure::scalar(b2);
  t.C = SpiralMeasure(b2 * phi, -(b2 * phi * quarter), {});
  t.D = SpiralMeasure::sqrt2_times(b * phi2);
  return t;
}

namespace detail {

// Closed forms are polynomial identities in m; they accept the closed range
// [1, 2] so the Fibonacci-parameterised families reach m = F_2/F_1 = 1.
inline void check_closed_form_args(const GoldenNumber& m, long long n) {
  if ((m - GoldenNumber(1)).sign() == Sign::Negative || (GoldenNumber(2) - m).sign() == Sign::Negative)
    throw RatioOutOfRange("closed form: ratio " + m.str() + " is outside [1, 2]");
  if (n < 2) throw DomainError("closed form: n must be >= 2, got " + std::to_string(n));
}

inline long long alternating_sum(long long n) { return n % 2 == 0 ? 0 : -1; }  // sum_{k=1}^n (-1)^k

}  // namespace detail

/// Bracket 1 + m + (-1)^n (m F_{n-2} - F_{n-1}); L = (pi/2) * bracket.
inline GoldenNumber length_bracket(const GoldenNumber& m, long long n) {
  const GoldenNumber inner = m * detail::gint(fib(n - 2)) - detail::gint(fib(n - 1));
  return GoldenNumber(1) + m + (n % 2 == 0 ? inner : -inner);
}

inline SpiralMeasure closed_form_L(const GoldenNumber& m, long long n) {
  detail::check_closed_form_args(m, n);
  return SpiralMeasure::pi_times(length_bracket(m, n) * GoldenNumber(detail::ratio(1, 2)));
}

/// Parity dispatch: tau(n) = F_n^2 for even n, F_n^2 - 1 for odd n.
inline SpiralMeasure closed_form_A(const GoldenNumber& m, long long n) {
  detail::check_closed_form_args(m, n);
  const BigInt fn = fib(n);
  const BigInt t = n % 2 == 0 ? BigInt(fn * fn) : BigInt(fn * fn - 1);
  const GoldenNumber bracket = m * m * detail::gint(fib(n - 1) * fn) - GoldenNumber(2) * m * detail::gint(t) +
                               detail::gint(fn * fib(n + 1));
  return SpiralMeasure::pi_times(bracket * GoldenNumber(detail::ratio(1, 4)));
}

inline SpiralMeasure closed_form_B(const GoldenNumber& m, long long n) {
  detail::check_closed_form_args(m, n);
  const BigInt fn = fib(n);
  const BigInt fn1 = fib(n + 1);
  const GoldenNumber t = detail::gint(n % 2 == 0 ? BigInt(fn * fn) : BigInt(fn * fn - 1));
  const GoldenNumber prod = detail::gint(fn * fn1);
  const GoldenNumber s(detail::alternating_sum(n));
  const GoldenNumber one(1);
  const GoldenNumber value = m - t * (m * m + one) + m * (GoldenNumber(2) * prod - one + s) - prod;
  return SpiralMeasure::scalar(value);
}

/// C = (4/pi - 1) A for A = a pi: C = 4a - a pi.
inline SpiralMeasure derive_C(const SpiralMeasure& a_total) {
  if (!a_total.unit().is_zero() || !a_total.sqrt2().is_zero())
    throw DomainError("derive_C: input must be a pure multiple of pi, got " + a_total.str());
  const GoldenNumber& a = a_total.pi();
  return SpiralMeasure(GoldenNumber(4) * a, -a, {});
}

/// D = (2 sqrt2 / pi) L for L = l pi: D = 2 l sqrt2.
inline SpiralMeasure derive_D(const SpiralMeasure& l_total) {
  if (!l_total.unit().is_zero() || !l_total.sqrt2().is_zero())
    throw DomainError("derive_D: input must be a pure multiple of pi, got " + l_total.str());
  return SpiralMeasure::sqrt2_times(GoldenNumber(2) * l_total.pi());
}

/// All five closed-form totals over n steps with side b (lengths scale by b,
/// areas by b^2).
inline StepMeasures closed_form_totals(const GoldenNumber& m, const GoldenNumber& b, long long n) {
  StepMeasures t;
  t.k = n;
  const GoldenNumber b2 = b * b;
  t.L = b * closed_form_L(m, n);
  t.A = b2 * closed_form_A(m, n);
  t.B = b2 * closed_form_B(m, n);
  t.C = derive_C(t.A);
  t.D = derive_D(t.L);
  return t;
}

struct MeasureReport {
  SubdivisionTrace trace;
  std::vector<StepMeasures> per_step;
  StepMeasures cumulative;
  std::optional<StepMeasures> closed_form;  // needs >= 2 steps
  std::optional<StepMeasures> deviation;    // closed_form - cumulative
};

inline MeasureReport measure_report(SubdivisionTrace trace) {
  MeasureReport r;
  const long long n = static_cast<long long>(trace.steps.size());
  r.cumulative.k = n;
  for (long long k = 1; k <= n; ++k) {
    r.per_step.push_back(
        step_measures(trace.xs[static_cast<std::size_t>(k - 1)], trace.xs[static_cast<std::size_t>(k)], k));
    r.cumulative += r.per_step.back();
  }
  if (n >= 2) {
    r.closed_form = closed_form_totals(trace.m, trace.b, n);
    r.deviation = *r.closed_form - r.cumulative;
  }
  r.trace = std::move(trace);
  return r;
}

/// Alternative written forms of the totals, each checked against direct summation.
struct ClosedFormVariant {
  std::string name;
  std::string formula;
  bool matches_direct_sum = false;
};

inline std::vector<ClosedFormVariant> closed_form_variants(const GoldenNumber& m, long long n) {
  detail::check_closed_form_args(m, n);
  std::vector<GoldenNumber> xs;
  xs.push_back(GoldenNumber(1));
  xs.push_back(m - GoldenNumber(1));
  while (static_cast<long long>(xs.size()) <= n) xs.push_back(xs[xs.size() - 2] - xs.back());
  StepMeasures direct;
  for (long long k = 1; k <= n; ++k)
    direct += detail::raw_step(xs[static_cast<std::size_t>(k - 1)], xs[static_cast<std::size_t>(k)], k);

  const GoldenNumber one(1);
  const GoldenNumber half(detail::ratio(1, 2));
  const GoldenNumber quarter(detail::ratio(1, 4));
  const BigInt fn = fib(n);
  const BigInt fn1 = fib(n + 1);
  const GoldenNumber sign_n(n % 2 == 0 ? 1 : -1);
  const GoldenNumber tau_n = detail::gint(tau(n));

  std::vector<ClosedFormVariant> out;
  const auto add = [&](std::string name, std::string formula, const SpiralMeasure& value, const SpiralMeasure& ref) {
    out.push_back({std::move(name), std::move(formula), value == ref});
  };

  add("L, minus form", "L = (pi/2) [1 + m + (-1)^n (m F_{n-2} - F_{n-1})]",
      SpiralMeasure::pi_times(half * (one + m + sign_n * (m * detail::gint(fib(n - 2)) - detail::gint(fib(n - 1))))),
      direct.L);
  add("L, plus form", "L = (pi/2) [1 + m + (-1)^n (m F_{n-2} + F_{n-1})]",
      SpiralMeasure::pi_times(half * (one + m + sign_n * (m * detail::gint(fib(n - 2)) + detail::gint(fib(n - 1))))),
      direct.L);
  add("A, with +1 and -1", "A = (pi/4) [1 + m^2 F_{n-1} F_n - 2 m tau(n) + F_{n+1} F_n - 1]",
      SpiralMeasure::pi_times(quarter * (one + m * m * detail::gint(fib(n - 1) * fn) - GoldenNumber(2) * m * tau_n +
                                         detail::gint(fn1 * fn) - one)),
      direct.A);
  add("A, without constants", "A = (pi/4) [m^2 F_{n-1} F_n - 2 m tau(n) + F_{n+1} F_n]",
      SpiralMeasure::pi_times(
          quarter * (m * m * detail::gint(fib(n - 1) * fn) - GoldenNumber(2) * m * tau_n + detail::gint(fn1 * fn))),
      direct.A);
  add("A, per-step factor (k-1)", "A = (pi/4) sum_k x_{k-1}^2 (k-1)",
      [&] {
        SpiralMeasure s;
        for (long long k = 1; k <= n; ++k)
          s += SpiralMeasure::pi_times(quarter * xs[static_cast<std::size_t>(k - 1)] *
                                       xs[static_cast<std::size_t>(k - 1)] * GoldenNumber(k - 1));
        return s;
      }(),
      direct.A);
  const GoldenNumber prod = detail::gint(fn * fn1);
  const GoldenNumber s_n(detail::alternating_sum(n));
  const GoldenNumber b_tail =
      -tau_n * (m * m + one) + m * (GoldenNumber(2) * prod - one + s_n) - prod;
  add("B, with leading m", "B = m - tau(n)(m^2 + 1) + m(2 F_n F_{n+1} - 1 + sum (-1)^k) - F_n F_{n+1}",
      SpiralMeasure::scalar(m + b_tail), direct.B);
  add("B, without leading m", "B = -tau(n)(m^2 + 1) + m(2 F_n F_{n+1} - 1 + sum (-1)^k) - F_n F_{n+1}",
      SpiralMeasure::scalar(b_tail), direct.B);
  add("C from A", "C = (4/pi - 1) A", derive_C(direct.A), direct.C);
  add("D from L", "D = (2 sqrt2 / pi) L", derive_D(direct.L), direct.D);
  return out;
}

/// High-precision look at pi/phi^2 against 6/5 and at phi against sqrt(5 pi / 6).
struct PiPhiReport {
  unsigned digits = 0;
  std::string pi_over_phi_squared;
  std::string deviation_from_six_fifths;  // |pi/phi^2 - 6/5|
  std::string phi;
  std::string sqrt_five_pi_over_six;
  std::string five_pi_over_six_minus_one;
  int agreeing_decimals = 0;  // of phi and sqrt(5 pi / 6)
};

inline PiPhiReport pi_phi_check(unsigned digits = 30) {
  PiPhiReport r;
  r.digits = digits;
  const GoldenNumber inv_phi2 = phi_pow(-2);
  r.pi_over_phi_squared = to_decimal(SpiralMeasure::pi_times(inv_phi2), digits);
  SpiralMeasure dev(GoldenNumber(detail::ratio(-6, 5)), inv_phi2, {});
  if (to_double(dev) < 0) dev = -dev;
  r.deviation_from_six_fifths = to_decimal(dev, digits);
  r.phi = to_decimal(GoldenNumber::phi(), digits);
  r.five_pi_over_six_minus_one =
      to_decimal(SpiralMeasure(GoldenNumber(-1), GoldenNumber(detail::ratio(5, 6)), {}), digits);

  // sqrt(5 pi / 6) lies outside the exact basis; evaluate it in fixed point
  // with guard digits and truncate.
  const unsigned guard = 10;
  const unsigned p = digits + guard;
  const BigInt pi = decimal::pi_scaled(2 * p);
  const BigInt root = boost::multiprecision::sqrt(BigInt(pi * 5 / 6));  // sqrt(5 pi/6) * 10^p
  const BigInt truncated = root / decimal::pow10(guard);
  std::string s = truncated.str();
  r.sqrt_five_pi_over_six = s.substr(0, 1) + "." + s.substr(1, digits - 1);

  // Count matching decimals of the truncated expansions.
  const BigInt phi_scaled = (decimal::pow10(p) + decimal::sqrt_scaled(5, p)) / 2;
  const std::string a = phi_scaled.str();
  const std::string c = root.str();
  int same = 0;
  for (std::size_t i = 1; i < std::min(a.size(), c.size()) - guard && a[i] == c[i]; ++i) ++same;
  r.agreeing_decimals = same;
  return r;
}

}  // namespace aurea
