#include <catch_amalgamated.hpp>

#include "aurea/subdivision.hpp"
#include "oracles.hpp"

using aurea::BigInt;
using aurea::GoldenNumber;
using aurea::Placement;
using aurea::Rational;
using aurea::Termination;

namespace {
GoldenNumber q(long long p, long long d) { return GoldenNumber(Rational(BigInt(p), BigInt(d))); }
}  // namespace

TEST_CASE("ratio range is (1, 2]", "[subdivision]") {
  CHECK_NOTHROW(aurea::check_ratio(2));
  CHECK_NOTHROW(aurea::check_ratio(GoldenNumber::phi()));
  CHECK_THROWS_AS(aurea::check_ratio(1), aurea::RatioOutOfRange);
  CHECK_THROWS_AS(aurea::check_ratio(q(5, 2)), aurea::RatioOutOfRange);
  CHECK_THROWS_AS(aurea::check_ratio(q(201, 100) - GoldenNumber(0)), aurea::RatioOutOfRange);
  CHECK_THROWS_AS(aurea::aureness_degree(q(1, 2)), aurea::RatioOutOfRange);
}

TEST_CASE("x-sequence for 3/2 tiles in three squares", "[subdivision]") {
  const auto xs = aurea::x_sequence(q(3, 2), 1, 10);
  REQUIRE(xs.size() == 4);
  CHECK(xs[0] == GoldenNumber(1));
  CHECK(xs[1] == q(1, 2));
  CHECK(xs[2] == q(1, 2));
  CHECK(xs[3] == GoldenNumber(0));
  CHECK(aurea::aureness_degree(q(3, 2)) == aurea::RatioClass::finite(3));
}

TEST_CASE("ratio 2 splits into two squares", "[subdivision]") {
  CHECK(aurea::aureness_degree(2) == aurea::RatioClass::finite(2));
  const auto t = aurea::layout_to_termination(2, 1);
  CHECK(t.steps.size() == 2);
  CHECK(t.status == Termination::ExactTiling);
}

TEST_CASE("blocked cut stops one square early", "[subdivision]") {
  // 4/3: x = 1, 1/3, 2/3, -1/3. The third square (side 2/3) does not fit in a
  // 1/3 x 2/3 residual.
  const GoldenNumber m = q(4, 3);
  CHECK(aurea::aureness_degree(m).degree() == 3);
  CHECK(aurea::placeable_steps(m) == 2);
  const auto t = aurea::layout_to_termination(m, 1);
  CHECK(t.status == Termination::BlockedCut);
  CHECK(t.terminated);
  CHECK_THROWS_AS(aurea::layout(m, 1, 3), aurea::StepsExceedDegree);
  try {
    (void)aurea::layout(m, 1, 3);
  } catch (const aurea::StepsExceedDegree& e) {
    CHECK(e.degree() == 3);
  }
}

TEST_CASE("golden ratio never terminates", "[subdivision]") {
  CHECK(aurea::aureness_degree(GoldenNumber::phi()).is_golden());
  CHECK_FALSE(aurea::placeable_steps(GoldenNumber::phi()).has_value());
  CHECK_THROWS_AS(aurea::layout_to_termination(GoldenNumber::phi(), 1), aurea::DomainError);
  const auto t = aurea::layout(GoldenNumber::phi(), 1, 40);
  CHECK(t.status == Termination::Open);
  for (std::size_t k = 1; k < t.xs.size(); ++k) CHECK(t.xs[k] == aurea::phi_pow(-static_cast<long long>(k)));
}

TEST_CASE("Fibonacci convergents have degree one less than the index", "[subdivision]") {
  for (int k = 3; k <= 20; ++k) {
    const GoldenNumber m(Rational(oracle::fib(k), oracle::fib(k - 1)));
    CHECK(aurea::aureness_degree(m) == aurea::RatioClass::finite(k - 1));
  }
}

TEST_CASE("degree matches literal alternating subtraction", "[subdivision]") {
  for (long long p = 2; p <= 60; ++p)
    for (long long qq = 1; qq < p; ++qq) {
      if (p > 2 * qq) continue;
      const GoldenNumber m = q(p, qq);
      CHECK(aurea::aureness_degree(m).degree() == oracle::alternating_subtraction_degree(p, qq));
    }
}

TEST_CASE("placement cycle and arc continuity", "[subdivision]") {
  const auto t = aurea::layout(GoldenNumber::phi(), 1, 12);
  const Placement cycle[] = {Placement::Left, Placement::Top, Placement::Right, Placement::Bottom};
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    CHECK(t.steps[i].placement == cycle[i % 4]);
    CHECK(t.steps[i].arc.radius == t.steps[i].side);
  }
  for (std::size_t i = 1; i < t.steps.size(); ++i) CHECK(t.steps[i - 1].arc.end() == t.steps[i].arc.start());
  // The spiral starts at the outer rectangle's lower-left corner.
  CHECK(t.steps[0].arc.start() == aurea::Point{0, 0});
}

TEST_CASE("arc endpoints are corners of their square", "[subdivision]") {
  const auto t = aurea::layout(q(13, 8), q(3, 2), 4);
  for (const auto& s : t.steps) {
    for (const aurea::Point& p : {s.arc.start(), s.arc.end()}) {
      const bool corner_x = p.x == s.origin.x || p.x == s.origin.x + s.side;
      const bool corner_y = p.y == s.origin.y || p.y == s.origin.y + s.side;
      CHECK(corner_x);
      CHECK(corner_y);
    }
  }
}

TEST_CASE("squares stay inside the rectangle and do not overlap", "[subdivision]") {
  const auto t = aurea::layout(GoldenNumber::phi(), 1, 10);
  const GoldenNumber width = GoldenNumber::phi();
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& a = t.steps[i];
    CHECK(a.origin.x >= GoldenNumber(0));
    CHECK(a.origin.y >= GoldenNumber(0));
    CHECK(a.origin.x + a.side <= width);
    CHECK(a.origin.y + a.side <= GoldenNumber(1));
    for (std::size_t j = i + 1; j < t.steps.size(); ++j) {
      const auto& b = t.steps[j];
      const bool apart = a.origin.x + a.side <= b.origin.x || b.origin.x + b.side <= a.origin.x ||
                         a.origin.y + a.side <= b.origin.y || b.origin.y + b.side <= a.origin.y;
      CHECK(apart);
    }
  }
}

TEST_CASE("layout argument checks", "[subdivision]") {
  CHECK_THROWS_AS(aurea::layout(GoldenNumber::phi(), 1, 0), aurea::DomainError);
  CHECK_THROWS_AS(aurea::layout(GoldenNumber::phi(), 0, 3), aurea::DomainError);
  CHECK_THROWS_AS(aurea::layout(GoldenNumber::phi(), -1, 3), aurea::DomainError);
  CHECK_THROWS_AS(aurea::layout(2, 1, 3), aurea::StepsExceedDegree);
  CHECK_THROWS_AS(aurea::x_closed_form(2, 1, -2), aurea::DomainError);
}
