#pragma once

/**
 * @file render.hpp
 * @brief SVG drawing of a subdivision trace and CSV/JSON measure reports.
 *
 * Pixel coordinates are computed exactly (scale = width_px / (m b) is itself
 * a golden number) and only rounded when written, so two runs on the same
 * trace produce byte-identical documents.
 */

#include <sstream>
#include <string>

#include "json.hpp"

#include "aurea/errors.hpp"
#include "aurea/measures.hpp"
#include "aurea/subdivision.hpp"

namespace aurea {

struct Palette {
  std::string frame = "#333333";
  std::string square = "#f2d16b";    // yellow
  std::string arc = "#7b3fa0";       // purple
  std::string residual = "#7fb3e6";  // blue
  std::string label = "#333333";
};

struct RenderOptions {
  int width_px = 800;
  Palette palette;
  bool show_arcs = true;
  bool show_labels = false;
  /// Decimal places for SVG coordinates; significant digits for report floats.
  unsigned float_digits = 7;

  void validate() const {
    if (width_px < 64) throw DomainError("width_px must be >= 64, got " + std::to_string(width_px));
    if (float_digits < 6) throw DomainError("float_digits must be >= 6, got " + std::to_string(float_digits));
  }
};

/// Maps exact geometry (y up) to exact pixel coordinates (y down).
class PixelMap {
 public:
  PixelMap(const SubdivisionTrace& trace, int width_px)
      : scale_(GoldenNumber(width_px) / (trace.m * trace.b)), height_(trace.b) {}

  const GoldenNumber& scale() const noexcept { return scale_; }
  GoldenNumber x(const GoldenNumber& v) const { return v * scale_; }
  GoldenNumber y(const GoldenNumber& v) const { return (height_ - v) * scale_; }
  GoldenNumber length(const GoldenNumber& v) const { return v * scale_; }
  GoldenNumber height_px() const { return height_ * scale_; }

 private:
  GoldenNumber scale_;
  GoldenNumber height_;
};

namespace detail {

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string rect_element(const char* cls, const std::string& x, const std::string& y, const std::string& w,
                                const std::string& h, const std::string& fill, const std::string& stroke) {
  return std::string("  <rect class=\"") + cls + "\" x=\"" + x + "\" y=\"" + y + "\" width=\"" + w +
         "\" height=\"" + h + "\" fill=\"" + xml_escape(fill) + "\" stroke=\"" + xml_escape(stroke) + "\"/>\n";
}

}  // namespace detail

inline std::string emit_svg(const SubdivisionTrace& trace, const RenderOptions& opts = {}) {
  opts.validate();
  if (trace.steps.empty()) throw DomainError("emit_svg: trace has no steps");
  const PixelMap px(trace, opts.width_px);
  const unsigned d = opts.float_digits;
  const auto f = [d](const GoldenNumber& v) { return to_fixed(v, d); };

  const std::string w = std::to_string(opts.width_px);
  const std::string h = f(px.height_px());
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
      << "  <title>m = " << detail::xml_escape(trace.m.str()) << ", b = " << detail::xml_escape(trace.b.str())
      << ", " << trace.steps.size() << " steps</title>\n";
  out << detail::rect_element("frame", f(GoldenNumber(0)), f(GoldenNumber(0)), w, h, "none", opts.palette.frame);

  for (const SquareStep& s : trace.steps) {
    out << detail::rect_element("square", f(px.x(s.origin.x)), f(px.y(s.origin.y + s.side)), f(px.length(s.side)),
                                f(px.length(s.side)), opts.palette.square, opts.palette.frame);
  }

  if (trace.residual.area().sign() == Sign::Positive) {
    const Rect& r = trace.residual;
    out << detail::rect_element("residual", f(px.x(r.x)), f(px.y(r.y + r.height)), f(px.length(r.width)),
                                f(px.length(r.height)), opts.palette.residual, opts.palette.frame);
  }

  if (opts.show_arcs) {
    for (const SquareStep& s : trace.steps) {
      const Point a = s.arc.start();
      const Point b = s.arc.end();
      const std::string r = f(px.length(s.arc.radius));
      // Clockwise in y-up space becomes sweep-flag 1 once y points down.
      out << "  <path class=\"arc\" d=\"M " << f(px.x(a.x)) << " " << f(px.y(a.y)) << " A " << r << " " << r
          << " 0 0 1 " << f(px.x(b.x)) << " " << f(px.y(b.y)) << "\" fill=\"none\" stroke=\""
          << detail::xml_escape(opts.palette.arc) << "\" stroke-width=\"2\"/>\n";
    }
  }

  if (opts.show_labels) {
    const GoldenNumber half(Rational(BigInt(1), BigInt(2)));
    for (const SquareStep& s : trace.steps) {
      out << "  <text class=\"label\" x=\"" << f(px.x(s.origin.x + s.side * half)) << "\" y=\""
          << f(px.y(s.origin.y + s.side * half)) << "\" fill=\"" << detail::xml_escape(opts.palette.label)
          << "\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << s.k << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

enum class ReportFormat { Csv, Json };

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

inline nlohmann::ordered_json measure_json(const SpiralMeasure& m, unsigned digits) {
  return {{"exact", m.str()}, {"float", to_decimal(m, digits)}};
}

inline nlohmann::ordered_json totals_json(const StepMeasures& s, unsigned digits) {
  nlohmann::ordered_json j;
  j["n"] = s.k;
  j["L"] = measure_json(s.L, digits);
  j["A"] = measure_json(s.A, digits);
  j["B"] = measure_json(s.B, digits);
  j["C"] = measure_json(s.C, digits);
  j["D"] = measure_json(s.D, digits);
  return j;
}

inline std::string emit_csv(const MeasureReport& report, unsigned digits) {
  std::ostringstream out;
  out << "k,x_prev,x_prev_float";
  for (const char* name : {"L", "A", "B", "C", "D"}) out << ',' << name << ',' << name << "_float";
  out << "\r\n";
  for (const StepMeasures& s : report.per_step) {
    const GoldenNumber& x = report.trace.xs[static_cast<std::size_t>(s.k - 1)];
    out << s.k << ',' << csv_field(x.str()) << ',' << to_decimal(x, digits);
    for (const SpiralMeasure* m : {&s.L, &s.A, &s.B, &s.C, &s.D})
      out << ',' << csv_field(m->str()) << ',' << to_decimal(*m, digits);
    out << "\r\n";
  }
  return out.str();
}

inline std::string emit_json(const MeasureReport& report, unsigned digits) {
  nlohmann::ordered_json j;
  j["ratio"] = {{"exact", report.trace.m.str()}, {"float", to_decimal(report.trace.m, digits)}};
  j["side"] = {{"exact", report.trace.b.str()}, {"float", to_decimal(report.trace.b, digits)}};
  j["steps"] = report.per_step.size();
  j["termination"] = to_string(report.trace.status);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const StepMeasures& s : report.per_step) {
    const GoldenNumber& x = report.trace.xs[static_cast<std::size_t>(s.k - 1)];
    nlohmann::ordered_json row;
    row["k"] = s.k;
    row["x_prev"] = {{"exact", x.str()}, {"float", to_decimal(x, digits)}};
    row["L"] = measure_json(s.L, digits);
    row["A"] = measure_json(s.A, digits);
    row["B"] = measure_json(s.B, digits);
    row["C"] = measure_json(s.C, digits);
    row["D"] = measure_json(s.D, digits);
    rows.push_back(std::move(row));
  }
  j["per_step"] = std::move(rows);
  j["cumulative"] = totals_json(report.cumulative, digits);
  j["closed_form"] = report.closed_form ? totals_json(*report.closed_form, digits) : nlohmann::ordered_json();
  if (report.deviation) {
    auto dev = totals_json(*report.deviation, digits);
    dev["all_zero"] = report.deviation->is_zero();
    j["deviation"] = std::move(dev);
  } else {
    j["deviation"] = nullptr;
  }
  return j.dump(2) + "\n";
}

}  // namespace detail

inline std::string emit_report(const MeasureReport& report, ReportFormat format, const RenderOptions& opts = {}) {
  opts.validate();
  return format == ReportFormat::Csv ? detail::emit_csv(report, opts.float_digits)
                                     : detail::emit_json(report, opts.float_digits);
}

}  // namespace aurea
