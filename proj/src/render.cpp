#include "phcalc/render.hpp"

#include <algorithm>
#include <sstream>

namespace phcalc::render {

namespace {

constexpr std::size_t kStride = 4;  // characters per level in text bars

std::string interval_label(const PersistencePair& p) {
  return "[" + std::to_string(p.birth) + "," + (p.death ? std::to_string(*p.death) : "inf") + ")";
}

}  // namespace

std::string render_text(const Barcode& barcode, std::size_t last_level) {
  // Wide enough for "[m,inf)" so every dimension lines up.
  std::size_t label_width = interval_label({last_level, std::nullopt, 1}).size() + 2;
  for (const auto& p : barcode.pairs) label_width = std::max(label_width, interval_label(p).size() + 2);

  std::ostringstream out;
  out << "H" << barcode.dimension << " barcode, levels 0.." << last_level << "\n";

  std::string axis(label_width, ' ');
  for (std::size_t level = 0; level <= last_level + 1; ++level) {
    std::string tick = level <= last_level ? "K" + std::to_string(level) : "inf";
    tick.resize(kStride, ' ');
    axis += tick;
  }
  while (!axis.empty() && axis.back() == ' ') axis.pop_back();
  out << axis << "\n";

  if (barcode.pairs.empty()) {
    out << "(no intervals)\n";
    return out.str();
  }
  for (const auto& p : barcode.pairs) {
    const std::size_t end_level = p.death.value_or(last_level + 1);
    std::string row = interval_label(p);
    row.resize(label_width, ' ');
    row.append(p.birth * kStride, ' ');
    row += '*';
    row.append((end_level - p.birth) * kStride - 1, '-');
    row += p.death ? 'o' : '>';
    for (std::size_t copy = 0; copy < p.multiplicity; ++copy) out << row << "\n";
  }
  return out.str();
}

std::string render_svg(std::span<const Barcode> barcodes, std::size_t last_level) {
  constexpr int kCell = 30;
  constexpr int kMargin = 40;
  constexpr int kGap = 60;

  const int columns = static_cast<int>(last_level) + 3;  // levels, infinity, padding
  const int panel_w = columns * kCell;
  std::size_t most_rows = 1;
  for (const auto& b : barcodes) most_rows = std::max(most_rows, b.total_multiplicity());
  const int panel_h = (static_cast<int>(most_rows) + 1) * kCell;
  const int panels = std::max<int>(1, static_cast<int>(barcodes.size()));
  const int width = 2 * kMargin + panels * panel_w + (panels - 1) * kGap;
  const int height = 2 * kMargin + panel_h + 20;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\" font-family=\"sans-serif\">\n"
      << "  <defs>\n"
      << "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\""
         " markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"black\"/>"
         "</marker>\n"
      << "  </defs>\n"
      << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t i = 0; i < barcodes.size(); ++i) {
    const Barcode& b = barcodes[i];
    const int x0 = kMargin + static_cast<int>(i) * (panel_w + kGap);
    const int y0 = kMargin + panel_h;  // origin at bottom left
    auto x_of = [&](std::size_t level) { return x0 + (static_cast<int>(level) + 1) * kCell; };

    svg << "  <g class=\"panel\" data-dimension=\"" << b.dimension << "\">\n";
    svg << "    <text x=\"" << x0 + panel_w / 2 << "\" y=\"" << kMargin - 16
        << "\" text-anchor=\"middle\" font-size=\"16\">&#946;" << b.dimension << "</text>\n";
    for (int c = 0; c <= columns; ++c) {
      svg << "    <line x1=\"" << x0 + c * kCell << "\" y1=\"" << y0 - panel_h << "\" x2=\""
          << x0 + c * kCell << "\" y2=\"" << y0 << "\" stroke=\"#e6e6e6\"/>\n";
    }
    svg << "    <line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 + panel_w << "\" y2=\""
        << y0 << "\" stroke=\"black\" marker-end=\"url(#arrow)\"/>\n";
    svg << "    <line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\""
        << y0 - panel_h << "\" stroke=\"black\" marker-end=\"url(#arrow)\"/>\n";
    for (std::size_t level = 0; level <= last_level; ++level) {
      svg << "    <text x=\"" << x_of(level) << "\" y=\"" << y0 + 16
          << "\" text-anchor=\"middle\" font-size=\"11\">K<tspan baseline-shift=\"super\""
             " font-size=\"8\">"
          << level << "</tspan></text>\n";
    }

    // Bars stack upward from the first row, ordered as in the barcode.
    int row = 1;
    for (const auto& p : b.pairs) {
      for (std::size_t copy = 0; copy < p.multiplicity; ++copy, ++row) {
        const int y = y0 - row * kCell;
        const int xb = x_of(p.birth);
        if (p.death) {
          const int xd = x_of(*p.death);
          svg << "    <line class=\"bar\" x1=\"" << xb << "\" y1=\"" << y << "\" x2=\"" << xd
              << "\" y2=\"" << y << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
          svg << "    <circle cx=\"" << xd << "\" cy=\"" << y
              << "\" r=\"4\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
        } else {
          svg << "    <line class=\"bar\" x1=\"" << xb << "\" y1=\"" << y << "\" x2=\""
              << x_of(last_level + 1) << "\" y2=\"" << y
              << "\" stroke=\"black\" stroke-width=\"2\" marker-end=\"url(#arrow)\"/>\n";
        }
        svg << "    <circle cx=\"" << xb << "\" cy=\"" << y << "\" r=\"4\" fill=\"black\"/>\n";
      }
    }
    svg << "  </g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace phcalc::render
