#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end: subdivide, measures, limits, identities, render.
 *
 * Exit codes: 0 success, 1 usage error (bad flags, malformed numbers, I/O),
 * 2 domain error (ratio out of range, too many steps, ...).
 */

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "aurea/errata.hpp"
#include "aurea/identities.hpp"
#include "aurea/measures.hpp"
#include "aurea/render.hpp"
#include "aurea/subdivision.hpp"

namespace aurea::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;

/// Thrown for input problems that are not mathematical (missing flags, I/O).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "phi", "p/q", "n" or "r + s phi"; must lie in (1, 2].
inline GoldenNumber parse_ratio(std::string_view text) {
  GoldenNumber m = GoldenNumber::parse(text);
  check_ratio(m);
  return m;
}

inline GoldenNumber parse_side(std::string_view text) {
  GoldenNumber b = GoldenNumber::parse(text);
  check_side(b);
  return b;
}

namespace detail {

inline std::string exact_and_float(const GoldenNumber& x, unsigned digits) {
  return x.str() + " (" + to_decimal(x, digits) + ")";
}

inline std::string exact_and_float(const SpiralMeasure& x, unsigned digits) {
  return x.str() + " (" + to_decimal(x, digits) + ")";
}

/// Step count for a ratio: explicit, or to termination for finite ratios.
inline long long resolve_steps(const GoldenNumber& m, std::optional<long long> steps) {
  if (steps) return *steps;
  const auto limit = placeable_steps(m);
  if (!limit) throw UsageError("--steps is required for the golden ratio, which subdivides forever");
  return *limit;
}

inline void write_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot open " + tmp.string() + " for writing");
    f << content;
    f.flush();
    if (!f) throw UsageError("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw UsageError("cannot move output into place at " + path);
  }
}

struct Options {
  std::string ratio;
  std::optional<long long> steps;
  std::string side = "1";
  std::string format;
  std::string out_path;
  int width = 800;
  unsigned digits = 7;
  long long max_n = 25;
  bool labels = false;
  bool no_arcs = false;
};

inline void cmd_subdivide(const Options& o, std::ostream& out) {
  const GoldenNumber m = parse_ratio(o.ratio);
  const GoldenNumber b = parse_side(o.side);
  const RatioClass cls = aureness_degree(m);
  long long steps = resolve_steps(m, o.steps);
  if (steps < 1) throw DomainError("--steps must be >= 1");
  if (!cls.is_golden()) steps = std::min(steps, *placeable_steps(m));  // stop at termination
  const SubdivisionTrace t = layout(m, b, steps);
  const unsigned d = o.digits;

  out << "ratio: " << exact_and_float(m, d) << "\n";
  out << "side: " << exact_and_float(b, d) << "\n";
  out << "degree: " << (cls.is_golden() ? std::string("infinite (golden)") : std::to_string(cls.degree())) << "\n";
  out << "steps: " << t.steps.size() << "\n";
  out << "termination: " << to_string(t.status) << "\n";
  out << "x-sequence:\n";
  for (std::size_t k = 0; k < t.xs.size(); ++k) out << "  x_" << k << " = " << exact_and_float(t.xs[k], d) << "\n";
  out << "squares:\n";
  for (const SquareStep& s : t.steps) {
    out << "  " << s.k << " " << to_string(s.placement) << " side " << exact_and_float(s.side, d) << " at ("
        << s.origin.x.str() << ", " << s.origin.y.str() << ")\n";
  }
  out << "residual: " << t.residual.width.str() << " x " << t.residual.height.str() << "\n";
}

inline void cmd_measures(const Options& o, std::ostream& out) {
  const GoldenNumber m = parse_ratio(o.ratio);
  const GoldenNumber b = parse_side(o.side);
  RenderOptions ro;
  ro.float_digits = o.digits;
  ro.validate();
  const MeasureReport r = measure_report(layout(m, b, resolve_steps(m, o.steps)));
  out << emit_report(r, o.format == "csv" ? ReportFormat::Csv : ReportFormat::Json, ro);
}

inline void cmd_limits(const Options& o, std::ostream& out) {
  const GoldenNumber b = parse_side(o.side);
  const unsigned d = o.digits;
  const StepMeasures g = golden_totals(b);
  out << "golden totals for side " << exact_and_float(b, d) << " (exact as (1; pi; sqrt2) coefficients):\n";
  out << "  L = " << exact_and_float(g.L, d) << "\n";
  out << "  A = " << exact_and_float(g.A, d) << "\n";
  out << "  B = " << exact_and_float(g.B, d) << "\n";
  out << "  C = " << exact_and_float(g.C, d) << "\n";
  out << "  D = " << exact_and_float(g.D, d) << "\n";
  const PiPhiReport p = pi_phi_check(30);
  out << "pi/phi^2 = " << p.pi_over_phi_squared << "\n";
  out << "|pi/phi^2 - 6/5| = " << p.deviation_from_six_fifths << "\n";
  out << "phi = " << p.phi << "\n";
  out << "sqrt(5 pi/6) = " << p.sqrt_five_pi_over_six << "\n";
  out << "5 pi/6 - 1 = " << p.five_pi_over_six_minus_one << "\n";
  out << "phi and sqrt(5 pi/6) agree to " << p.agreeing_decimals << " decimals\n";
}

inline nlohmann::ordered_json identities_json(long long max_n) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["max_n"] = max_n;
  ordered_json ids = ordered_json::array();
  for (const IdentityInfo& info : identity_catalog()) {
    const IdentitySummary s = summarize_identity(info.id, max_n);
    ordered_json e;
    e["id"] = info.id;
    e["stated"] = std::string(info.stated);
    e["checked_up_to"] = s.checked_up_to;
    e["printed_verdict"] = s.printed_holds_everywhere ? "PassAsPrinted" : "FailAsPrinted";
    e["status"] = to_string(s.status);
    if (!info.corrected.empty()) e["corrected"] = std::string(info.corrected);
    if (s.first_printed_failure) e["first_printed_failure"] = *s.first_printed_failure;
    ids.push_back(std::move(e));
  }
  j["identities"] = std::move(ids);
  ordered_json claims = ordered_json::array();
  for (const PhiClaim& c : phi_claims()) {
    ordered_json e;
    e["stated"] = c.stated;
    e["holds"] = c.holds;
    e["lhs"] = c.lhs.str();
    if (c.corrected) e["corrected"] = *c.corrected;
    claims.push_back(std::move(e));
  }
  j["phi_claims"] = std::move(claims);
  ordered_json err = ordered_json::array();
  for (const Erratum& e : errata()) {
    err.push_back({{"topic", e.topic},
                   {"printed", e.printed},
                   {"corrected", e.corrected},
                   {"printed_holds", e.printed_holds},
                   {"corrected_holds", e.corrected_holds}});
  }
  j["errata"] = std::move(err);
  return j;
}

inline void cmd_identities(const Options& o, std::ostream& out) {
  if (o.max_n < 1) throw DomainError("--max-n must be >= 1");
  const nlohmann::ordered_json j = identities_json(o.max_n);
  if (o.format != "text") {
    out << j.dump(2) << "\n";
    return;
  }
  for (const auto& e : j["identities"]) {
    out << "property " << e["id"].get<int>() << ": " << e["status"].get<std::string>() << " (printed "
        << e["printed_verdict"].get<std::string>() << ", n <= " << e["checked_up_to"].get<long long>() << ")  "
        << e["stated"].get<std::string>() << "\n";
    if (e.contains("corrected")) out << "    corrected: " << e["corrected"].get<std::string>() << "\n";
  }
  for (const auto& c : j["phi_claims"]) {
    out << (c["holds"].get<bool>() ? "holds  " : "FAILS  ") << c["stated"].get<std::string>();
    if (c.contains("corrected")) out << "  ->  " << c["corrected"].get<std::string>();
    out << "\n";
  }
  for (const auto& e : j["errata"]) {
    out << "erratum (" << e["topic"].get<std::string>() << "): " << e["printed"].get<std::string>() << "  ->  "
        << e["corrected"].get<std::string>() << "\n";
  }
}

inline void cmd_render(const Options& o, std::ostream& out) {
  const GoldenNumber m = parse_ratio(o.ratio);
  const GoldenNumber b = parse_side(o.side);
  RenderOptions ro;
  ro.width_px = o.width;
  ro.float_digits = o.digits;
  ro.show_labels = o.labels;
  ro.show_arcs = !o.no_arcs;
  ro.validate();
  const SubdivisionTrace t = layout(m, b, resolve_steps(m, o.steps));
  write_atomically(o.out_path, emit_svg(t, ro));
  out << "wrote " << o.out_path << " (" << t.steps.size() << " squares)\n";
}

}  // namespace detail

/// Runs one command line. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact golden-rectangle subdivision, spiral measures and Fibonacci identity checks", "aurea"};
  app.require_subcommand(1);
  detail::Options o;

  const auto add_ratio = [&](CLI::App* c, bool steps_required) {
    c->add_option("--ratio", o.ratio, "Ratio m in (1, 2]: phi, p/q, n or r+s*phi")->required();
    auto* s = c->add_option("--steps", o.steps, "Number of squares (omit for finite ratios to run to termination)");
    if (steps_required) s->required();
    c->add_option("--side", o.side, "Short side b (default 1)");
  };
  const auto add_digits = [&](CLI::App* c) {
    c->add_option("--digits", o.digits, "Float digits (>= 6)")->check(CLI::Range(6u, 200u));
  };

  CLI::App* subdivide = app.add_subcommand("subdivide", "Print the x-sequence, degree and square layout");
  add_ratio(subdivide, false);
  add_digits(subdivide);

  CLI::App* measures = app.add_subcommand("measures", "Per-step and total spiral measures as CSV or JSON");
  add_ratio(measures, false);
  add_digits(measures);
  o.format = "json";
  measures->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  CLI::App* limits = app.add_subcommand("limits", "Golden totals and the pi/phi^2 check");
  limits->add_option("--side", o.side, "Short side b (default 1)");
  add_digits(limits);

  CLI::App* identities = app.add_subcommand("identities", "Check the Fibonacci and phi identity tables");
  identities->add_option("--max-n", o.max_n, "Largest n to check (default 25)");
  identities->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  CLI::App* render = app.add_subcommand("render", "Write the subdivision and spiral as SVG");
  add_ratio(render, false);
  render->add_option("--out", o.out_path, "Output SVG path")->required();
  render->add_option("--width", o.width, "Width in pixels (>= 64)");
  render->add_flag("--labels", o.labels, "Number the squares");
  render->add_flag("--no-arcs", o.no_arcs, "Omit the spiral arcs");
  add_digits(render);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (subdivide->parsed()) detail::cmd_subdivide(o, out);
    if (measures->parsed()) detail::cmd_measures(o, out);
    if (limits->parsed()) detail::cmd_limits(o, out);
    if (identities->parsed()) detail::cmd_identities(o, out);
    if (render->parsed()) detail::cmd_render(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace aurea::cli
