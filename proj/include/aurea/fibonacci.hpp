#pragma once

// Fibonacci and Lucas numbers, consecutive-product partial sums, and the
// convergents F(n+1)/F(n).

#include <stdexcept>
#include <string>
#include <utility>

#include "aurea/rational.hpp"

namespace aurea {

namespace detail {

// (F(n), F(n+1)) for n >= 0 by fast doubling:
//   F(2k)   = F(k) * (2 F(k+1) - F(k))
//   F(2k+1) = F(k)^2 + F(k+1)^2
// Both follow from F(a+b) = F(a-1) F(b) + F(a) F(b+1) with a = b = k.
inline std::pair<BigInt, BigInt> fib_pair(unsigned long long n) {
  if (n == 0) return {BigInt(0), BigInt(1)};
  auto [a, b] = fib_pair(n / 2);
  BigInt c = a * (BigInt(2) * b - a);
  BigInt d = a * a + b * b;
  if (n % 2 == 0) return {std::move(c), std::move(d)};
  BigInt e = c + d;
  return {std::move(d), std::move(e)};
}

}  // namespace detail

/// F(n) for any integer n, with F(-k) = (-1)^(k+1) F(k).
inline BigInt fib(long long n) {
  if (n >= 0) return detail::fib_pair(static_cast<unsigned long long>(n)).first;
  const unsigned long long k = static_cast<unsigned long long>(-(n + 1)) + 1;
  BigInt f = detail::fib_pair(k).first;
  return (k % 2 == 0) ? BigInt(-f) : f;
}

/// Lucas number L(n) = F(n+1) + F(n-1), n >= 0.
inline BigInt lucas(long long n) {
  if (n < 0) throw DomainError("lucas: n must be >= 0, got " + std::to_string(n));
  return fib(n + 1) + fib(n - 1);
}

/// Sum_{k=1}^{n-1} F(k) F(k+1), by direct summation. n >= 2.
inline BigInt tau(long long n) {
  if (n < 2) throw DomainError("tau: n must be >= 2, got " + std::to_string(n));
  BigInt sum = 0;
  BigInt a = 1;  // F(k)
  BigInt b = 1;  // F(k+1)
  for (long long k = 1; k < n; ++k) {
    sum += a * b;
    BigInt next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return sum;
}

/// Parity closed form of tau: F(n)^2 for even n, F(n)^2 - 1 for odd n.
/// Also valid at n = 1 (empty sum).
inline BigInt tau_closed(long long n) {
  if (n < 1) throw DomainError("tau_closed: n must be >= 1, got " + std::to_string(n));
  const BigInt f = fib(n);
  return n % 2 == 0 ? BigInt(f * f) : BigInt(f * f - 1);
}

/// F(n+1)/F(n) in lowest terms, n >= 1.
inline Rational convergent(long long n) {
  if (n < 1) throw DomainError("convergent: n must be >= 1, got " + std::to_string(n));
  return Rational(fib(n + 1), fib(n));
}

}  // namespace aurea
