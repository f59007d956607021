#pragma once

/**
 * @file subdivision.hpp
 * @brief Square-by-square subdivision of an m*b x b rectangle.
 *
 * Step k removes a square of side x_{k-1} from the residual rectangle
 * x_{k-2} x x_{k-1}, leaving x_{k-1} x x_k with
 *
 *   x_{-1} = m b,  x_0 = b,  x_k = x_{k-2} - x_{k-1}
 *         = (-1)^{k-1} (F_k m - F_{k+1}) b            (k >= 1).
 *
 * All x_k stay positive only for m = phi. Otherwise the sequence reaches
 * x_d <= 0 and the aureness degree is d, the number of positive terms
 * x_0..x_{d-1}. When x_d = 0 the last square tiles the residual exactly; when
 * x_d < 0 the square of side x_{d-1} does not fit (x_{d-1} > x_{d-2}), so
 * only d - 1 squares can actually be placed.
 *
 * Squares are placed cycling left, top, right, bottom around the shrinking
 * residual. In every square a quarter arc joins the two corners shared with
 * the previous and the next square, which makes the arcs a continuous spiral.
 * Coordinates are exact golden numbers with y pointing up.
 */

#include <optional>
#include <string>
#include <vector>

#include "aurea/errors.hpp"
#include "aurea/fibonacci.hpp"
#include "aurea/golden.hpp"

namespace aurea {

struct Point {
  GoldenNumber x;
  GoldenNumber y;
  friend bool operator==(const Point&, const Point&) = default;
};

struct Rect {
  GoldenNumber x;
  GoldenNumber y;
  GoldenNumber width;
  GoldenNumber height;
  GoldenNumber area() const { return width * height; }
  friend bool operator==(const Rect&, const Rect&) = default;
};

/// Quarter circle swept clockwise (decreasing angle) from the axis direction
/// `start_quadrant * 90 degrees`.
struct QuarterArc {
  Point center;
  GoldenNumber radius;
  int start_quadrant = 0;

  static Point offset(const Point& c, const GoldenNumber& r, int quadrant) {
    switch (((quadrant % 4) + 4) % 4) {
      case 0: return {c.x + r, c.y};
      case 1: return {c.x, c.y + r};
      case 2: return {c.x - r, c.y};
      default: return {c.x, c.y - r};
    }
  }
  Point start() const { return offset(center, radius, start_quadrant); }
  Point end() const { return offset(center, radius, start_quadrant - 1); }
  friend bool operator==(const QuarterArc&, const QuarterArc&) = default;
};

enum class Placement { Left, Top, Right, Bottom };

inline const char* to_string(Placement p) {
  switch (p) {
    case Placement::Left: return "left";
    case Placement::Top: return "top";
    case Placement::Right: return "right";
    case Placement::Bottom: return "bottom";
  }
  return "?";
}

struct SquareStep {
  long long k = 0;  // 1-based
  GoldenNumber side;
  Point origin;  // lower-left corner
  Placement placement = Placement::Left;
  QuarterArc arc;
  friend bool operator==(const SquareStep&, const SquareStep&) = default;
};

enum class Termination {
  Open,         // more squares can be cut
  ExactTiling,  // the last square left an empty residual
  BlockedCut,   // the next square would not fit (x_{n+1} < 0)
};

inline const char* to_string(Termination t) {
  switch (t) {
    case Termination::Open: return "open";
    case Termination::ExactTiling: return "exact-tiling";
    case Termination::BlockedCut: return "blocked-cut";
  }
  return "?";
}

struct SubdivisionTrace {
  GoldenNumber m;
  GoldenNumber b;
  std::vector<GoldenNumber> xs;  // x_0 .. x_n, scaled by b
  std::vector<SquareStep> steps;
  Rect residual;
  bool terminated = false;
  Termination status = Termination::Open;
};

class RatioClass {
 public:
  enum class Kind { GoldenInfinite, FiniteDegree };

  static RatioClass golden() { return RatioClass(Kind::GoldenInfinite, 0); }
  static RatioClass finite(long long degree) { return RatioClass(Kind::FiniteDegree, degree); }

  Kind kind() const noexcept { return kind_; }
  bool is_golden() const noexcept { return kind_ == Kind::GoldenInfinite; }
  /// Number of strictly positive x_k. Meaningless for the golden class.
  long long degree() const noexcept { return degree_; }

  std::string str() const {
    return is_golden() ? std::string("GoldenInfinite") : "FiniteDegree(" + std::to_string(degree_) + ")";
  }

  friend bool operator==(const RatioClass&, const RatioClass&) = default;

 private:
  RatioClass(Kind k, long long d) : kind_(k), degree_(d) {}
  Kind kind_;
  long long degree_;
};

/// Throws RatioOutOfRange unless 1 < m <= 2.
inline void check_ratio(const GoldenNumber& m) {
  if ((m - GoldenNumber(1)).sign() != Sign::Positive || (GoldenNumber(2) - m).sign() == Sign::Negative)
    throw RatioOutOfRange("ratio " + m.str() + " (~" + to_decimal(m, 6) + ") is outside (1, 2]");
}

inline void check_side(const GoldenNumber& b) {
  if (b.sign() != Sign::Positive) throw DomainError("side " + b.str() + " must be positive");
}

/// x_0 .. x_n with n = min(max_steps, first index where x_k <= 0).
inline std::vector<GoldenNumber> x_sequence(const GoldenNumber& m, const GoldenNumber& b, long long max_steps) {
  check_ratio(m);
  check_side(b);
  if (max_steps < 1) throw DomainError("max_steps must be >= 1");
  std::vector<GoldenNumber> xs;
  xs.push_back(b);
  xs.push_back((m - GoldenNumber(1)) * b);
  while (static_cast<long long>(xs.size()) <= max_steps && xs.back().sign() == Sign::Positive) {
    const std::size_t n = xs.size();
    xs.push_back(xs[n - 2] - xs[n - 1]);
  }
  return xs;
}

/// (-1)^{k-1} (F_k m - F_{k+1}) b, with x_0 = b and x_{-1} = m b.
inline GoldenNumber x_closed_form(const GoldenNumber& m, const GoldenNumber& b, long long k) {
  if (k < -1) throw DomainError("x_closed_form: k must be >= -1");
  if (k == -1) return m * b;
  if (k == 0) return b;
  const GoldenNumber core = GoldenNumber(Rational(fib(k))) * m - GoldenNumber(Rational(fib(k + 1)));
  return (k % 2 == 1 ? core : -core) * b;
}

/// GoldenInfinite exactly when m == phi; otherwise the count of positive x_k.
inline RatioClass aureness_degree(const GoldenNumber& m) {
  check_ratio(m);
  if (m == GoldenNumber::phi()) return RatioClass::golden();
  GoldenNumber prev(1);
  GoldenNumber cur = m - GoldenNumber(1);
  long long degree = 1;  // x_0 = 1 > 0
  while (cur.sign() == Sign::Positive) {
    ++degree;
    GoldenNumber next = prev - cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return RatioClass::finite(degree);
}

/// Largest number of squares that can be laid out; nullopt for phi.
inline std::optional<long long> placeable_steps(const GoldenNumber& m) {
  const RatioClass cls = aureness_degree(m);
  if (cls.is_golden()) return std::nullopt;
  const auto xs = x_sequence(m, GoldenNumber(1), cls.degree());
  return xs.back().is_zero() ? cls.degree() : cls.degree() - 1;
}

/// Lays out `steps` squares with exact coordinates.
/// Throws StepsExceedDegree if the ratio does not admit that many squares.
inline SubdivisionTrace layout(const GoldenNumber& m, const GoldenNumber& b, long long steps) {
  check_ratio(m);
  check_side(b);
  if (steps < 1) throw DomainError("steps must be >= 1");
  const RatioClass cls = aureness_degree(m);
  if (!cls.is_golden()) {
    const long long limit = *placeable_steps(m);
    if (steps > limit) {
      std::string why = "steps " + std::to_string(steps) + " exceed what ratio " + m.str() + " admits: degree " +
                        std::to_string(cls.degree());
      if (limit < cls.degree()) why += ", of which " + std::to_string(limit) + " squares fit";
      throw StepsExceedDegree(why, cls.degree());
    }
  }

  SubdivisionTrace t;
  t.m = m;
  t.b = b;
  t.xs = x_sequence(m, b, steps + 1);
  Rect r{GoldenNumber(0), GoldenNumber(0), m * b, b};
  for (long long k = 1; k <= steps; ++k) {
    const GoldenNumber& s = t.xs[static_cast<std::size_t>(k - 1)];
    SquareStep sq;
    sq.k = k;
    sq.side = s;
    sq.placement = static_cast<Placement>((k - 1) % 4);
    sq.arc.radius = s;
    switch (sq.placement) {
      case Placement::Left:
        sq.origin = {r.x, r.y};
        sq.arc.center = {r.x + s, r.y};
        sq.arc.start_quadrant = 2;
        r = {r.x + s, r.y, r.width - s, r.height};
        break;
      case Placement::Top:
        sq.origin = {r.x, r.y + r.height - s};
        sq.arc.center = sq.origin;
        sq.arc.start_quadrant = 1;
        r = {r.x, r.y, r.width, r.height - s};
        break;
      case Placement::Right:
        sq.origin = {r.x + r.width - s, r.y};
        sq.arc.center = {sq.origin.x, sq.origin.y + s};
        sq.arc.start_quadrant = 0;
        r = {r.x, r.y, r.width - s, r.height};
        break;
      case Placement::Bottom:
        sq.origin = {r.x, r.y};
        sq.arc.center = {r.x + s, r.y + s};
        sq.arc.start_quadrant = 3;
        r = {r.x, r.y + s, r.width, r.height - s};
        break;
    }
    t.steps.push_back(std::move(sq));
  }
  t.residual = r;
  t.xs.resize(static_cast<std::size_t>(steps + 1));

  const GoldenNumber& last = t.xs.back();
  if (last.is_zero()) {
    t.status = Termination::ExactTiling;
  } else if (!cls.is_golden() && steps == *placeable_steps(m)) {
    t.status = Termination::BlockedCut;
  }
  t.terminated = t.status != Termination::Open;
  return t;
}

/// Layout to termination for a non-golden ratio.
inline SubdivisionTrace layout_to_termination(const GoldenNumber& m, const GoldenNumber& b) {
  const auto limit = placeable_steps(m);
  if (!limit) throw DomainError("the golden ratio subdivides forever; give an explicit step count");
  return layout(m, b, *limit);
}

}  // namespace aurea
