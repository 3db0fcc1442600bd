#include "doctest.h"
#include "phcalc/render.hpp"
#include "support/fixtures.hpp"

#include <algorithm>
#include <sstream>

using namespace phcalc;
using namespace phcalc::testing;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++count;
  return count;
}

}  // namespace

TEST_CASE("text bars for the diabolo H1 barcode") {
  const std::string text = render::render_text(barcode(diabolo_filtration(), 1), 5);
  const auto lines = lines_of(text);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "H1 barcode, levels 0..5");
  CHECK(lines[1] == "         K0  K1  K2  K3  K4  K5  inf");
  CHECK(lines[2] == "[1,5)        *---------------o");
  CHECK(lines[3] == "[3,inf)              *----------->");
}

TEST_CASE("one text row per unit of multiplicity") {
  const Filtration f = diabolo_filtration();
  const Barcode b0 = barcode(f, 0);
  const auto lines = lines_of(render::render_text(b0, 5));
  CHECK(lines.size() == 2 + b0.total_multiplicity());
  CHECK(std::count(lines.begin(), lines.end(), "[0,1)    *---o") == 2);

  const auto empty = lines_of(render::render_text(barcode(f, 2), 5));
  CHECK(empty.back() == "(no intervals)");
  // Axis columns line up across dimensions.
  CHECK(empty[1] == lines[1]);
}

TEST_CASE("svg output") {
  const Filtration f = diabolo_filtration();
  const std::vector<Barcode> bars = {barcode(f, 0), barcode(f, 1)};
  const std::string svg = render::render_svg(bars, 5);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(occurrences(svg, "<line class=\"bar\"") == 8);
  CHECK(svg.find("&#946;0") != std::string::npos);
  CHECK(svg.find("data-dimension=\"1\"") != std::string::npos);
  CHECK(occurrences(svg, "<svg") == 1);
}
