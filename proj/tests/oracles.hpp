#pragma once

// Independent reference implementations used only by tests. They avoid the
// library's fast paths: Fibonacci by plain iteration, subdivision by literal
// rectangle cutting, Q(sqrt5) products in the sqrt5 basis.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "aurea/rational.hpp"

namespace oracle {

using aurea::BigInt;
using aurea::Rational;

// 50 significant digits, rounded half-even.
inline constexpr const char* kPi50 = "3.1415926535897932384626433832795028841971693993751";
inline constexpr const char* kSqrt5_50 = "2.2360679774997896964091736687312762354406183596115";
inline constexpr const char* kPhi50 = "1.6180339887498948482045868343656381177203091798058";

/// F_0 .. F_n by iteration.
inline std::vector<BigInt> fibs(int n) {
  std::vector<BigInt> f{0, 1};
  while (static_cast<int>(f.size()) <= n) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  f.resize(static_cast<std::size_t>(n) + 1);
  return f;
}

inline BigInt fib(int n) { return fibs(n < 1 ? 1 : n)[static_cast<std::size_t>(n)]; }

/// Subtractive Euclid on (p, q): repeatedly remove a q x q square from a
/// p x q rectangle (swapping sides when needed) until one side is zero.
inline long long subtractive_euclid_squares(long long p, long long q) {
  long long count = 0;
  while (p > 0 && q > 0) {
    if (p >= q)
      p -= q;
    else
      q -= p;
    ++count;
  }
  return count;
}

/// Literal square cutting that follows the x-recurrence: cut a square of the
/// short side only if it fits, stop at zero. Counts positive sides met.
inline long long alternating_subtraction_degree(long long p, long long q) {
  // Sides scaled by q: x_{-1} = p, x_0 = q.
  long long a = p;
  long long b = q;
  long long degree = 0;
  while (b > 0) {
    ++degree;
    const long long next = a - b;
    a = b;
    b = next;
  }
  return degree;
}

/// x_0..x_n for rational m (b = 1), no sign checks.
inline std::vector<Rational> xs_rational(const Rational& m, int n) {
  std::vector<Rational> xs{Rational(1), m - Rational(1)};
  while (static_cast<int>(xs.size()) <= n) xs.push_back(xs[xs.size() - 2] - xs.back());
  xs.resize(static_cast<std::size_t>(n) + 1);
  return xs;
}

/// Totals as rational coefficients: L/pi, A/pi, B, C = c1 + cpi*pi, D/sqrt2.
struct RationalTotals {
  Rational l_pi, a_pi, b, c_one, c_pi, d_sqrt2;
};

inline RationalTotals direct_totals(const Rational& m, int n) {
  const auto xs = xs_rational(m, n);
  RationalTotals t;
  for (int k = 1; k <= n; ++k) {
    const Rational& x = xs[static_cast<std::size_t>(k - 1)];
    const Rational& y = xs[static_cast<std::size_t>(k)];
    t.l_pi += x / Rational(2);
    t.a_pi += x * x / Rational(4);
    t.b += x * y;
    t.c_one += x * x;
    t.c_pi -= x * x / Rational(4);
    t.d_sqrt2 += x;
  }
  return t;
}

/// p + q sqrt5 arithmetic, for cross-checking phi-basis products.
struct Sqrt5 {
  Rational p, q;
  friend Sqrt5 operator*(const Sqrt5& a, const Sqrt5& b) {
    return {a.p * b.p + Rational(5) * a.q * b.q, a.p * b.q + a.q * b.p};
  }
  friend Sqrt5 operator+(const Sqrt5& a, const Sqrt5& b) { return {a.p + b.p, a.q + b.q}; }
  friend bool operator==(const Sqrt5&, const Sqrt5&) = default;
};

/// Fixed seed generator of rationals p/q with small terms.
class RationalGen {
 public:
  explicit RationalGen(std::uint64_t seed) : rng_(seed) {}

  Rational any(long long max_abs = 50, long long max_den = 30) {
    std::uniform_int_distribution<long long> num(-max_abs, max_abs);
    std::uniform_int_distribution<long long> den(1, max_den);
    return Rational(BigInt(num(rng_)), BigInt(den(rng_)));
  }

  /// Uniform-ish rational strictly inside (1, 2).
  Rational ratio(long long max_den = 1000) {
    std::uniform_int_distribution<long long> den(2, max_den);
    const long long q = den(rng_);
    std::uniform_int_distribution<long long> num(q + 1, 2 * q - 1);
    return Rational(BigInt(num(rng_)), BigInt(q));
  }

  Rational positive(long long max_num = 20, long long max_den = 20) {
    std::uniform_int_distribution<long long> num(1, max_num);
    std::uniform_int_distribution<long long> den(1, max_den);
    return Rational(BigInt(num(rng_)), BigInt(den(rng_)));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
