#pragma once

/**
 * @file identities.hpp
 * @brief Executable checks for eighteen classical Fibonacci properties and the
 *        small table of golden-ratio identities that accompanies them.
 *
 * Every check evaluates its left-hand side by brute force over a naively
 * built table of Fibonacci numbers (plain addition, no closed forms) and
 * compares it with the right-hand side exactly as stated. When a stated form
 * is wrong, a corrected form is evaluated as well so the verdict says both
 * what failed and what holds instead.
 *
 * Properties 1, 3, 4 and 17 are predicates; their verdict covers every
 * instance up to n and reports (instances satisfied, instances checked).
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aurea/golden.hpp"
#include "aurea/rational.hpp"

namespace aurea {

enum class IdentityStatus { PassAsPrinted, FailAsPrinted, PassCorrected };

inline const char* to_string(IdentityStatus s) {
  switch (s) {
    case IdentityStatus::PassAsPrinted: return "PassAsPrinted";
    case IdentityStatus::FailAsPrinted: return "FailAsPrinted";
    case IdentityStatus::PassCorrected: return "PassCorrected";
  }
  return "?";
}

enum class IdentityKind { Instance, Predicate };

struct IdentityInfo {
  int id;
  IdentityKind kind;
  std::string_view stated;
  std::string_view corrected;  // empty when the stated form is right
  long long max_n;             // largest admissible n
};

inline constexpr long long kUnbounded = 1'000'000;
inline constexpr long long kPrimeIndexLimit = 45;

inline const std::array<IdentityInfo, 18>& identity_catalog() {
  static const std::array<IdentityInfo, 18> catalog{{
      {1, IdentityKind::Predicate, "gcd(F_k, F_{k+1}) = 1 for k = 1..n", "", kUnbounded},
      {2, IdentityKind::Instance, "C^2 = A*D + B^2 for A, B, C, D = F_n, F_{n+1}, F_{n+2}, F_{n+3}", "",
       kUnbounded},
      {3, IdentityKind::Predicate, "F_k prime implies k prime, except F_4 = 3, for k = 1..n", "",
       kPrimeIndexLimit},
      {4, IdentityKind::Predicate, "sum_i C(k-1-i, i) = F_k (Pascal diagonals) for k = 1..n", "", kUnbounded},
      {5, IdentityKind::Instance, "F_1 + ... + F_n = F_{n+2} - 1", "", kUnbounded},
      {6, IdentityKind::Instance, "F_1 + F_3 + ... + F_{2n-1} = F_{2n}", "", kUnbounded},
      {7, IdentityKind::Instance, "F_2 + F_4 + ... + F_{2n} = F_{2n+1} - 1", "", kUnbounded},
      {8, IdentityKind::Instance, "F_1 - F_2 + ... + (-1)^{n+1} F_n = (-1)^{n+1} F_{n-1} + 1", "", kUnbounded},
      {9, IdentityKind::Instance, "F_1 - F_2 + ... + F_{2n-1} - F_{2n} = -F_{2n-1} + 1", "", kUnbounded},
      {10, IdentityKind::Instance, "F_1 - F_2 + ... - F_{2n} + F_{2n+1} = F_{2n} + 1", "", kUnbounded},
      {11, IdentityKind::Instance, "F_1^2 + ... + F_n^2 = F_n F_{n+1}", "", kUnbounded},
      // The stated summand "F_{2n-1} F_n" is read as the running product
      // F_k F_{k+1}, consistent with property 13.
      {12, IdentityKind::Instance, "F_1 F_2 + F_2 F_3 + ... + F_{2n-1} F_{2n} = F_{2n}^2", "", kUnbounded},
      {13, IdentityKind::Instance, "F_1 F_2 + ... + F_{2n} F_{2n+1} = F_{2n+1}^2 - 1", "", kUnbounded},
      {14, IdentityKind::Instance, "F_1 + 2 F_2 + ... + n F_n = n F_{n+2} - F_{n+2} + 2",
       "F_1 + 2 F_2 + ... + n F_n = n F_{n+2} - F_{n+3} + 2", kUnbounded},
      {15, IdentityKind::Instance, "F_n^2 + F_{n+1}^2 = F_{2n+1}", "", kUnbounded},
      {16, IdentityKind::Instance, "F_{n-1} F_{n+1} = F_n^2 + (-1)^n", "", kUnbounded},
      {17, IdentityKind::Predicate, "F_{a+b} = F_{a-1} F_b + F_a F_{b+1} for 1 <= a, b <= n", "", kUnbounded},
      {18, IdentityKind::Instance, "F_{n+1}^2 - F_{n-1}^2 = F_{2n}", "", kUnbounded},
  }};
  return catalog;
}

struct IdentityVerdict {
  int identity_id = 0;
  long long n = 0;
  BigInt lhs;
  BigInt rhs;                            // stated right-hand side
  std::optional<BigInt> corrected_rhs;   // present iff a corrected form exists
  IdentityStatus status = IdentityStatus::FailAsPrinted;
  std::optional<std::string> corrected_form;

  bool printed_holds() const { return lhs == rhs; }
};

namespace detail {

// F_0 .. F_count by repeated addition.
inline std::vector<BigInt> fibonacci_table(long long count) {
  std::vector<BigInt> f(static_cast<std::size_t>(count + 1));
  f[0] = 0;
  if (count >= 1) f[1] = 1;
  for (std::size_t k = 2; k < f.size(); ++k) f[k] = f[k - 1] + f[k - 2];
  return f;
}

inline bool is_prime_u64(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

inline BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline BigInt signed_unit(long long e) { return e % 2 == 0 ? BigInt(1) : BigInt(-1); }

}  // namespace detail

/// Checks property `id` (1..18) at size n. Throws DomainError when id or n is
/// outside the property's domain (n >= 1; n <= 45 for property 3).
inline IdentityVerdict identity_check(int id, long long n) {
  if (id < 1 || id > 18) throw DomainError("identity id must be in 1..18, got " + std::to_string(id));
  const IdentityInfo& info = identity_catalog()[static_cast<std::size_t>(id - 1)];
  if (n < 1 || n > info.max_n)
    throw DomainError("identity " + std::to_string(id) + ": n must be in 1.." + std::to_string(info.max_n) +
                      ", got " + std::to_string(n));

  const auto F = detail::fibonacci_table(2 * n + 4);
  const auto f = [&](long long k) -> const BigInt& { return F[static_cast<std::size_t>(k)]; };

  IdentityVerdict v;
  v.identity_id = id;
  v.n = n;
  BigInt sum = 0;
  switch (id) {
    case 1:
      for (long long k = 1; k <= n; ++k)
        if (boost::multiprecision::gcd(f(k), f(k + 1)) == 1) sum += 1;
      v.lhs = sum;
      v.rhs = n;
      break;
    case 2:
      v.lhs = f(n + 2) * f(n + 2);
      v.rhs = f(n) * f(n + 3) + f(n + 1) * f(n + 1);
      break;
    case 3:
      for (long long k = 1; k <= n; ++k) {
        const bool value_prime = detail::is_prime_u64(f(k).convert_to<std::uint64_t>());
        if (!value_prime || detail::is_prime_u64(static_cast<std::uint64_t>(k)) || k == 4) sum += 1;
      }
      v.lhs = sum;
      v.rhs = n;
      break;
    case 4:
      for (long long k = 1; k <= n; ++k) {
        BigInt diag = 0;
        for (long long i = 0; 2 * i <= k - 1; ++i) diag += detail::binomial(k - 1 - i, i);
        if (diag == f(k)) sum += 1;
      }
      v.lhs = sum;
      v.rhs = n;
      break;
    case 5:
      for (long long k = 1; k <= n; ++k) sum += f(k);
      v.lhs = sum;
      v.rhs = f(n + 2) - 1;
      break;
    case 6:
      for (long long k = 1; k <= n; ++k) sum += f(2 * k - 1);
      v.lhs = sum;
      v.rhs = f(2 * n);
      break;
    case 7:
      for (long long k = 1; k <= n; ++k) sum += f(2 * k);
      v.lhs = sum;
      v.rhs = f(2 * n + 1) - 1;
      break;
    case 8:
      for (long long k = 1; k <= n; ++k) sum += detail::signed_unit(k + 1) * f(k);
      v.lhs = sum;
      v.rhs = detail::signed_unit(n + 1) * f(n - 1) + 1;
      break;
    case 9:
      for (long long k = 1; k <= 2 * n; ++k) sum += detail::signed_unit(k + 1) * f(k);
      v.lhs = sum;
      v.rhs = -f(2 * n - 1) + 1;
      break;
    case 10:
      for (long long k = 1; k <= 2 * n + 1; ++k) sum += detail::signed_unit(k + 1) * f(k);
      v.lhs = sum;
      v.rhs = f(2 * n) + 1;
      break;
    case 11:
      for (long long k = 1; k <= n; ++k) sum += f(k) * f(k);
      v.lhs = sum;
      v.rhs = f(n) * f(n + 1);
      break;
    case 12:
      for (long long k = 1; k <= 2 * n - 1; ++k) sum += f(k) * f(k + 1);
      v.lhs = sum;
      v.rhs = f(2 * n) * f(2 * n);
      break;
    case 13:
      for (long long k = 1; k <= 2 * n; ++k) sum += f(k) * f(k + 1);
      v.lhs = sum;
      v.rhs = f(2 * n + 1) * f(2 * n + 1) - 1;
      break;
    case 14:
      for (long long k = 1; k <= n; ++k) sum += BigInt(k) * f(k);
      v.lhs = sum;
      v.rhs = BigInt(n) * f(n + 2) - f(n + 2) + 2;
      v.corrected_rhs = BigInt(n) * f(n + 2) - f(n + 3) + 2;
      break;
    case 15:
      v.lhs = f(n) * f(n) + f(n + 1) * f(n + 1);
      v.rhs = f(2 * n + 1);
      break;
    case 16:
      v.lhs = f(n - 1) * f(n + 1);
      v.rhs = f(n) * f(n) + detail::signed_unit(n);
      break;
    case 17:
      for (long long a = 1; a <= n; ++a)
        for (long long b = 1; b <= n; ++b)
          if (f(a + b) == f(a - 1) * f(b) + f(a) * f(b + 1)) sum += 1;
      v.lhs = sum;
      v.rhs = BigInt(n) * n;
      break;
    case 18:
      v.lhs = f(n + 1) * f(n + 1) - f(n - 1) * f(n - 1);
      v.rhs = f(2 * n);
      break;
    default:
      break;
  }

  if (!info.corrected.empty()) v.corrected_form = std::string(info.corrected);
  if (v.lhs == v.rhs)
    v.status = IdentityStatus::PassAsPrinted;
  else if (v.corrected_rhs && *v.corrected_rhs == v.lhs)
    v.status = IdentityStatus::PassCorrected;
  else
    v.status = IdentityStatus::FailAsPrinted;
  return v;
}

/// Verdict for one property over n = 1..max_n (clamped to its domain).
struct IdentitySummary {
  int identity_id = 0;
  long long checked_up_to = 0;
  IdentityStatus status = IdentityStatus::PassAsPrinted;
  bool printed_holds_everywhere = true;
  std::optional<long long> first_printed_failure;
  std::optional<long long> first_corrected_failure;
  std::vector<IdentityVerdict> verdicts;
};

inline IdentitySummary summarize_identity(int id, long long max_n) {
  if (id < 1 || id > 18) throw DomainError("identity id must be in 1..18, got " + std::to_string(id));
  if (max_n < 1) throw DomainError("max_n must be >= 1");
  const IdentityInfo& info = identity_catalog()[static_cast<std::size_t>(id - 1)];
  IdentitySummary s;
  s.identity_id = id;
  s.checked_up_to = std::min(max_n, info.max_n);
  bool any_unexplained = false;
  for (long long n = 1; n <= s.checked_up_to; ++n) {
    IdentityVerdict v = identity_check(id, n);
    if (!v.printed_holds()) {
      s.printed_holds_everywhere = false;
      if (!s.first_printed_failure) s.first_printed_failure = n;
      if (v.status != IdentityStatus::PassCorrected) {
        any_unexplained = true;
        if (!s.first_corrected_failure) s.first_corrected_failure = n;
      }
    }
    s.verdicts.push_back(std::move(v));
  }
  if (s.printed_holds_everywhere)
    s.status = IdentityStatus::PassAsPrinted;
  else if (!any_unexplained)
    s.status = IdentityStatus::PassCorrected;
  else
    s.status = IdentityStatus::FailAsPrinted;
  return s;
}

/// One entry of the golden-ratio identity table. `lhs` is computed by plain
/// ring arithmetic (repeated multiplication), never through phi_pow.
struct PhiClaim {
  std::string stated;
  GoldenNumber lhs;
  GoldenNumber rhs;
  bool holds = false;
  std::optional<std::string> corrected;
};

inline std::vector<PhiClaim> phi_claims() {
  const GoldenNumber phi = GoldenNumber::phi();
  const GoldenNumber bar = GoldenNumber::phi_bar();
  const GoldenNumber one(1);
  const auto power = [&](int n) {
    GoldenNumber p(1);
    for (int i = 0; i < n; ++i) p *= phi;
    return p;
  };
  const auto lin = [](long long a, long long b) { return GoldenNumber(Rational(b), Rational(a)); };  // a phi + b

  std::vector<PhiClaim> claims;
  const auto add = [&](std::string stated, GoldenNumber lhs, GoldenNumber rhs,
                       std::optional<std::string> corrected = std::nullopt) {
    const bool ok = lhs == rhs;
    claims.push_back({std::move(stated), std::move(lhs), std::move(rhs), ok, std::move(corrected)});
  };

  add("phi + phibar = 1", phi + bar, one);
  add("phi * phibar = -1", phi * bar, GoldenNumber(-1));
  add("phi^2 + phibar^2 = 3", phi * phi + bar * bar, GoldenNumber(3));
  add("phi^2 + phi*phibar = phi", phi * phi + phi * bar, phi);
  add("phi - 1 = 1/phi", phi - one, phi.inverse());
  add("phi^3 = (phi + 1)/(phi - 1)", power(3), (phi + one) / (phi - one));
  add("phi^2 = phi + 1", power(2), lin(1, 1));
  add("phi^3 = 2 phi + 1", power(3), lin(2, 1));
  add("phi^4 = 3 phi + 2", power(4), lin(3, 2));
  add("phi^5 = 5 phi + 3", power(5), lin(5, 3));
  add("phi^6 = 8 phi + 3", power(6), lin(8, 3), std::string("phi^6 = 8 phi + 5"));
  add("phi^2 (1 + phibar) = 1", phi * phi * (one + bar), one);
  // sqrt2 = phi sqrt(2(1 + phibar)) = -phibar sqrt(2(1 + phi)); both right-hand
  // sides are positive, so comparing squares is exact.
  add("(phi sqrt(2(1 + phibar)))^2 = 2", phi * phi * GoldenNumber(2) * (one + bar), GoldenNumber(2));
  add("(-phibar sqrt(2(1 + phi)))^2 = 2", bar * bar * GoldenNumber(2) * (one + phi), GoldenNumber(2));
  return claims;
}

}  // namespace aurea
