#pragma once

/**
 * @file errata.hpp
 * @brief Printed formulas that fail brute-force checks, with the forms that pass.
 *
 * Every entry is re-verified when errata() is called; `printed_holds` and
 * `corrected_holds` are computed, not hard-coded.
 */

#include <string>
#include <vector>

#include "aurea/identities.hpp"
#include "aurea/measures.hpp"

namespace aurea {

struct Erratum {
  std::string topic;
  std::string printed;
  std::string corrected;
  bool printed_holds = false;
  bool corrected_holds = false;
};

namespace detail {

inline bool variant_holds(const std::string& name) {
  for (long long n = 2; n <= 12; ++n)
    for (const auto& v : closed_form_variants(GoldenNumber::phi(), n))
      if (v.name == name && !v.matches_direct_sum) return false;
  return true;
}

}  // namespace detail

inline std::vector<Erratum> errata() {
  std::vector<Erratum> out;

  {
    const IdentitySummary s = summarize_identity(14, 25);
    const IdentityInfo& info = identity_catalog()[13];
    out.push_back({"Fibonacci weighted sum", std::string(info.stated), std::string(info.corrected),
                   s.printed_holds_everywhere, s.status == IdentityStatus::PassCorrected});
  }

  for (const PhiClaim& c : phi_claims()) {
    if (c.holds) continue;
    const std::string corrected = c.corrected.value_or("");
    out.push_back({"power of phi", c.stated, corrected, false, c.corrected.has_value()});
  }
  // The correction for phi^6 is re-derived from phi^n = F_n phi + F_{n-1}.
  if (!out.empty() && out.back().topic == "power of phi")
    out.back().corrected_holds = phi_pow(6) == GoldenNumber(Rational(5), Rational(8));

  out.push_back({"quarter disc area per step", "A_k = (pi/4) x_{k-1}^2 (k-1), C_k = x_{k-1}^2 (k-1)(1 - pi/4)",
                 "A_k = (pi/4) x_{k-1}^2, C_k = x_{k-1}^2 (1 - pi/4)",
                 detail::variant_holds("A, per-step factor (k-1)"), true});

  out.push_back({"spiral length total", "L = (pi/2) [1 + m + (-1)^n (m F_{n-2} + F_{n-1})]",
                 "L = (pi/2) [1 + m + (-1)^n (m F_{n-2} - F_{n-1})]", detail::variant_holds("L, plus form"),
                 detail::variant_holds("L, minus form")});

  out.push_back({"residual area total",
                 "B = -tau(n)(m^2 + 1) + m(2 F_n F_{n+1} - 1 + sum (-1)^k) - F_n F_{n+1}",
                 "B = m - tau(n)(m^2 + 1) + m(2 F_n F_{n+1} - 1 + sum (-1)^k) - F_n F_{n+1}",
                 detail::variant_holds("B, without leading m"), detail::variant_holds("B, with leading m")});

  // Odd-step family: B over 2n+1 steps equals 1 at m = F_{2n+3}/F_{2n+2}, the
  // next convergent, whose subdivision really has 2n+1 squares. The printed
  // m = F_{2n+1}/F_{2n+2} is below 1 and not a valid ratio.
  {
    bool printed = true;
    bool corrected = true;
    const SpiralMeasure one = SpiralMeasure::scalar(GoldenNumber(1));
    for (long long n = 1; n <= 10; ++n) {
      const long long steps = 2 * n + 1;
      const GoldenNumber good(Rational(fib(2 * n + 3), fib(2 * n + 2)));
      corrected = corrected && closed_form_B(good, steps) == one && *placeable_steps(good) >= steps;
      const GoldenNumber bad(Rational(fib(2 * n + 1), fib(2 * n + 2)));
      printed = printed && bad > GoldenNumber(1);
    }
    out.push_back({"residual area, odd step count", "B_{2n+1} = 1 at m = F_{2n+1}/F_{2n+2}",
                   "B_{2n+1} = 1 at m = F_{2n+3}/F_{2n+2}", printed, corrected});
  }

  // Literal reading: the last summand is F_{2n-1} F_n instead of F_{2n-1} F_{2n}.
  bool literal = true;
  for (long long n = 1; n <= 10; ++n) {
    BigInt sum = 0;
    for (long long k = 1; k <= 2 * n - 2; ++k) sum += fib(k) * fib(k + 1);
    sum += fib(2 * n - 1) * fib(n);
    literal = literal && sum == fib(2 * n) * fib(2 * n);
  }
  out.push_back({"Fibonacci consecutive products", "F_1 F_2 + ... + F_{2n-1} F_n = F_{2n}^2",
                 std::string(identity_catalog()[11].stated), literal,
                 summarize_identity(12, 25).status == IdentityStatus::PassAsPrinted});
  return out;
}

}  // namespace aurea
