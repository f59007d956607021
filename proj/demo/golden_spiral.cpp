// Lays out a few ratios, prints their square counts and spiral lengths, and
// writes the golden spiral to golden_spiral.svg in the working directory.

#include <fstream>
#include <iostream>

#include "aurea/aurea.hpp"

int main() {
  using aurea::GoldenNumber;

  for (const char* text : {"3/2", "8/5", "13/8", "17/10", "phi"}) {
    const GoldenNumber m = GoldenNumber::parse(text);
    const aurea::RatioClass cls = aurea::aureness_degree(m);
    const long long steps = cls.is_golden() ? 12 : *aurea::placeable_steps(m);
    const aurea::MeasureReport r = aurea::measure_report(aurea::layout(m, 1, steps));
    std::cout << text << ": " << cls.str() << ", " << steps << " squares, L = " << r.cumulative.L << " ~ "
              << aurea::to_decimal(r.cumulative.L, 10) << "\n";
  }

  const aurea::StepMeasures g = aurea::golden_totals(1);
  std::cout << "golden limit L = " << g.L << " ~ " << aurea::to_decimal(g.L, 10) << "\n";

  aurea::RenderOptions opts;
  opts.show_labels = true;
  std::ofstream("golden_spiral.svg") << aurea::emit_svg(aurea::layout(GoldenNumber::phi(), 1, 10), opts);
  std::cout << "wrote golden_spiral.svg\n";
}
