// Property tests over generated inputs. Every generator uses a fixed seed.

#include <catch_amalgamated.hpp>

#include "aurea/measures.hpp"
#include "aurea/subdivision.hpp"
#include "oracles.hpp"

using aurea::BigInt;
using aurea::GoldenNumber;
using aurea::Rational;
using aurea::SpiralMeasure;

TEST_CASE("rational field axioms", "[property]") {
  oracle::RationalGen gen(1);
  for (int i = 0; i < 500; ++i) {
    const Rational a = gen.any(), b = gen.any(), c = gen.any();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    CHECK(boost::multiprecision::gcd(boost::multiprecision::abs(a.num()), a.den()) == 1);
    CHECK(a.den() > 0);
  }
}

TEST_CASE("golden ring axioms and norm", "[property]") {
  oracle::RationalGen gen(2);
  for (int i = 0; i < 300; ++i) {
    const GoldenNumber x(gen.any(), gen.any()), y(gen.any(), gen.any()), z(gen.any(), gen.any());
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    CHECK((x * y).norm() == x.norm() * y.norm());
    CHECK(x.conj().conj() == x);
    CHECK(x.norm().is_zero() == x.is_zero());
    if (!x.is_zero()) CHECK(x / x == GoldenNumber(1));
  }
}

TEST_CASE("golden sign agrees with a double estimate away from zero", "[property]") {
  oracle::RationalGen gen(3);
  for (int i = 0; i < 500; ++i) {
    const GoldenNumber x(gen.any(), gen.any());
    const double d = aurea::to_double(x);
    if (std::abs(d) > 1e-9) CHECK((x.sign() == aurea::Sign::Positive) == (d > 0));
  }
}

TEST_CASE("parse and str round trip", "[property]") {
  oracle::RationalGen gen(4);
  for (int i = 0; i < 300; ++i) {
    const GoldenNumber x(gen.any(), gen.any());
    CHECK(GoldenNumber::parse(x.str()) == x);
    const SpiralMeasure m(x, GoldenNumber(gen.any(), gen.any()), GoldenNumber(gen.any()));
    CHECK(SpiralMeasure::parse(m.str()) == m);
  }
}

TEST_CASE("x recurrence equals its Fibonacci closed form", "[property]") {
  oracle::RationalGen gen(5);
  for (int i = 0; i < 50; ++i) {
    const GoldenNumber m(gen.ratio());
    const GoldenNumber b(gen.positive());
    std::vector<GoldenNumber> xs{b, (m - GoldenNumber(1)) * b};
    while (xs.size() <= 30) xs.push_back(xs[xs.size() - 2] - xs.back());
    for (long long k = 0; k <= 30; ++k) CHECK(aurea::x_closed_form(m, b, k) == xs[static_cast<std::size_t>(k)]);
  }
}

TEST_CASE("area is conserved", "[property]") {
  for (long long p = 2; p <= 20; ++p)
    for (long long q = 1; q < p && p <= 2 * q; ++q) {
      const GoldenNumber m{Rational(BigInt(p), BigInt(q))};
      const auto t = aurea::layout_to_termination(m, 1);
      GoldenNumber area = t.residual.area();
      for (const auto& s : t.steps) area += s.side * s.side;
      CHECK(area == m);
    }
}

TEST_CASE("homogeneity in the side", "[property]") {
  oracle::RationalGen gen(6);
  for (int i = 0; i < 20; ++i) {
    const GoldenNumber m(gen.ratio(50));
    const GoldenNumber b(gen.positive());
    const long long n = std::min<long long>(*aurea::placeable_steps(m), 8);
    const auto one = aurea::cumulative(aurea::layout(m, 1, n), n);
    const auto scaled = aurea::cumulative(aurea::layout(m, b, n), n);
    CHECK(scaled.L == b * one.L);
    CHECK(scaled.D == b * one.D);
    CHECK(scaled.A == b * b * one.A);
    CHECK(scaled.B == b * b * one.B);
    CHECK(scaled.C == b * b * one.C);
  }
}

TEST_CASE("C and D follow from A and L on every trace", "[property]") {
  oracle::RationalGen gen(7);
  for (int i = 0; i < 20; ++i) {
    const GoldenNumber m(gen.ratio());
    const auto t = aurea::layout_to_termination(m, GoldenNumber(gen.positive()));
    for (long long n = 1; n <= static_cast<long long>(t.steps.size()); ++n) {
      const auto c = aurea::cumulative(t, n);
      CHECK(c.C == aurea::derive_C(c.A));
      CHECK(c.D == aurea::derive_D(c.L));
    }
  }
}

TEST_CASE("step measure invariants", "[property]") {
  const auto t = aurea::layout(GoldenNumber::phi(), GoldenNumber(2), 15);
  for (const auto& s : aurea::measure_report(t).per_step) {
    CHECK(s.L.unit().is_zero());
    CHECK(s.L.sqrt2().is_zero());
    CHECK(s.B.is_scalar());
    CHECK(s.D.unit().is_zero());
    CHECK(s.D.pi().is_zero());
    CHECK(s.C.pi() == -s.A.pi());
    CHECK(s.C.unit() == GoldenNumber(4) * s.A.pi());
  }
}

TEST_CASE("consecutive golden terms shrink by 1/phi and 1/phi^2", "[property]") {
  const auto r = aurea::measure_report(aurea::layout(GoldenNumber::phi(), 1, 20));
  const GoldenNumber inv = GoldenNumber::phi().inverse();
  for (std::size_t k = 1; k < r.per_step.size(); ++k) {
    CHECK(r.per_step[k].L == inv * r.per_step[k - 1].L);
    CHECK(r.per_step[k].A == inv * inv * r.per_step[k - 1].A);
    CHECK(r.per_step[k].C == inv * inv * r.per_step[k - 1].C);
    CHECK(r.per_step[k].B == inv * inv * r.per_step[k - 1].B);
  }
}
