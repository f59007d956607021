#include <catch_amalgamated.hpp>

#include "aurea/errata.hpp"
#include "aurea/fibonacci.hpp"
#include "aurea/identities.hpp"
#include "oracles.hpp"

using aurea::BigInt;
using aurea::IdentityStatus;

TEST_CASE("fast doubling matches iteration", "[fibonacci]") {
  const auto f = oracle::fibs(300);
  for (int n = 0; n <= 300; ++n) CHECK(aurea::fib(n) == f[static_cast<std::size_t>(n)]);
}

TEST_CASE("negative indices", "[fibonacci]") {
  for (int k = 1; k <= 40; ++k) {
    const BigInt expected = (k % 2 == 1 ? 1 : -1) * oracle::fib(k);
    CHECK(aurea::fib(-k) == expected);
  }
  // The recurrence holds across zero.
  for (int n = -30; n <= 30; ++n) CHECK(aurea::fib(n + 2) == aurea::fib(n + 1) + aurea::fib(n));
}

TEST_CASE("lucas numbers", "[fibonacci]") {
  CHECK(aurea::lucas(0) == 2);
  CHECK(aurea::lucas(1) == 1);
  for (int n = 1; n <= 60; ++n) CHECK(aurea::lucas(n) == aurea::fib(n - 1) + aurea::fib(n + 1));
  CHECK_THROWS_AS(aurea::lucas(-1), aurea::DomainError);
}

TEST_CASE("tau closed form by parity", "[fibonacci]") {
  const auto f = oracle::fibs(80);
  for (int n = 2; n <= 79; ++n) {
    BigInt sum = 0;
    for (int k = 1; k < n; ++k) sum += f[static_cast<std::size_t>(k)] * f[static_cast<std::size_t>(k + 1)];
    CHECK(aurea::tau(n) == sum);
    CHECK(aurea::tau_closed(n) == sum);
  }
  CHECK(aurea::tau_closed(1) == 0);
  CHECK_THROWS_AS(aurea::tau(1), aurea::DomainError);
}

TEST_CASE("convergents alternate around phi", "[fibonacci]") {
  const aurea::GoldenNumber phi = aurea::GoldenNumber::phi();
  for (int n = 1; n <= 40; ++n) {
    const aurea::GoldenNumber c(aurea::convergent(n));
    CHECK((c < phi) == (n % 2 == 1));
  }
}

TEST_CASE("identity catalog verdicts", "[identities]") {
  for (int id = 1; id <= 18; ++id) {
    const auto s = aurea::summarize_identity(id, 25);
    INFO("property " << id);
    if (id == 14) {
      CHECK_FALSE(s.printed_holds_everywhere);
      CHECK(s.status == IdentityStatus::PassCorrected);
      CHECK(s.first_printed_failure == 1);
    } else {
      CHECK(s.status == IdentityStatus::PassAsPrinted);
    }
  }
  CHECK(aurea::summarize_identity(3, 100).checked_up_to == 45);
}

TEST_CASE("weighted sum identity against brute force", "[identities]") {
  const auto f = oracle::fibs(40);
  for (int n = 1; n <= 35; ++n) {
    BigInt lhs = 0;
    for (int k = 1; k <= n; ++k) lhs += k * f[static_cast<std::size_t>(k)];
    const auto v = aurea::identity_check(14, n);
    CHECK(v.lhs == lhs);
    CHECK(v.corrected_rhs == n * f[static_cast<std::size_t>(n + 2)] - f[static_cast<std::size_t>(n + 3)] + 2);
    CHECK(v.status == IdentityStatus::PassCorrected);
  }
}

TEST_CASE("Pascal diagonal sums", "[identities]") {
  const auto v = aurea::identity_check(4, 25);
  CHECK(v.lhs == v.rhs);
  CHECK(v.lhs == 25);
}

TEST_CASE("prime-index property stops at its domain", "[identities]") {
  const auto v = aurea::identity_check(3, 45);
  CHECK(v.printed_holds());
  CHECK_THROWS_AS(aurea::identity_check(3, 46), aurea::DomainError);
  CHECK_THROWS_AS(aurea::identity_check(19, 1), aurea::DomainError);
}

TEST_CASE("phi power table", "[identities]") {
  int failures = 0;
  for (const auto& c : aurea::phi_claims()) {
    INFO(c.stated);
    if (c.stated == "phi^6 = 8 phi + 3") {
      CHECK_FALSE(c.holds);
      CHECK(c.corrected == "phi^6 = 8 phi + 5");
      ++failures;
    } else {
      CHECK(c.holds);
    }
  }
  CHECK(failures == 1);
}

TEST_CASE("errata entries are all confirmed", "[errata]") {
  const auto list = aurea::errata();
  CHECK(list.size() == 7);
  for (const auto& e : list) {
    INFO(e.topic);
    CHECK_FALSE(e.printed_holds);
    CHECK(e.corrected_holds);
  }
}
