#pragma once

// Small readers for the SVG documents the renderer produces.

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <regex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace svg_inspect {

inline bool well_formed(const std::string& svg) {
  std::istringstream in(svg);
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::read_xml(in, tree);
  } catch (const boost::property_tree::xml_parser_error&) {
    return false;
  }
  return tree.count("svg") == 1;
}

inline std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + needle.size())) ++n;
  return n;
}

struct Square {
  double x, y, width, height;
};

inline std::vector<Square> squares(const std::string& svg) {
  static const std::regex re(
      R"re(class="square" x="([-0-9.]+)" y="([-0-9.]+)" width="([-0-9.]+)" height="([-0-9.]+)")re");
  std::vector<Square> out;
  for (std::sregex_iterator it(svg.begin(), svg.end(), re), end; it != end; ++it)
    out.push_back({std::stod((*it)[1]), std::stod((*it)[2]), std::stod((*it)[3]), std::stod((*it)[4])});
  return out;
}

struct Arc {
  double x0, y0, r, x1, y1;
};

inline std::vector<Arc> arcs(const std::string& svg) {
  static const std::regex re(
      R"re(class="arc" d="M ([-0-9.]+) ([-0-9.]+) A ([-0-9.]+) ([-0-9.]+) 0 0 1 ([-0-9.]+) ([-0-9.]+)")re");
  std::vector<Arc> out;
  for (std::sregex_iterator it(svg.begin(), svg.end(), re), end; it != end; ++it)
    out.push_back({std::stod((*it)[1]), std::stod((*it)[2]), std::stod((*it)[3]), std::stod((*it)[5]),
                   std::stod((*it)[6])});
  return out;
}

inline std::pair<double, double> view_box(const std::string& svg) {
  static const std::regex re(R"re(viewBox="0 0 ([0-9.]+) ([0-9.]+)")re");
  std::smatch m;
  if (!std::regex_search(svg, m, re)) return {0, 0};
  return {std::stod(m[1]), std::stod(m[2])};
}

/// Every numeric attribute value of rect, path and text elements.
inline std::vector<double> all_numbers(const std::string& svg) {
  static const std::regex attr(R"re( (?:x|y|width|height|d)="([^"]*)")re");
  static const std::regex number(R"re(-?[0-9]+(?:\.[0-9]+)?)re");
  std::vector<double> out;
  for (std::sregex_iterator it(svg.begin(), svg.end(), attr), end; it != end; ++it) {
    const std::string value = (*it)[1];
    for (std::sregex_iterator n(value.begin(), value.end(), number); n != end; ++n) out.push_back(std::stod(n->str()));
  }
  return out;
}

}  // namespace svg_inspect
