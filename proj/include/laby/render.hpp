#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "laby/paths.hpp"

namespace laby {

/// Rendering parameters. Output size is width*cell_px square; everything is
/// integer pixel math, so equal inputs give byte-identical SVG.
struct RenderSpec {
  int cell_px = 8;
  std::int64_t max_px = std::int64_t{1} << 16;  // canvas edge cap in pixels
  bool grid_lines = false;
  bool color_arms = false;
  const TreePath* overlay = nullptr;

  std::string black = "#000000";
  std::string white = "#ffffff";
  std::string path_color = "#e05254";
  std::string center_color = "#b8b8b8";
  std::array<std::string, 4> arm_colors = {"#f2c14e", "#4d9de0", "#5fad56", "#e15554"};
  std::string grid_color = "#cccccc";
};

namespace detail {

inline void svg_rect(std::string& out, std::int64_t x, std::int64_t y, std::int64_t w,
                     std::int64_t h, const std::string& fill, const char* extra = "") {
  out += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) + "\" width=\"" +
         std::to_string(w) + "\" height=\"" + std::to_string(h) + "\" fill=\"" + fill + "\"" +
         extra + "/>\n";
}

inline std::int64_t canvas_px(std::int32_t width, const RenderSpec& spec) {
  if (spec.cell_px < 1) throw BadParameter("cell_px must be >= 1");
  const std::int64_t px = std::int64_t{width} * spec.cell_px;
  if (px > spec.max_px) throw TooLarge(px, spec.max_px);
  return px;
}

inline std::string svg_open(std::int64_t px) {
  const std::string s = std::to_string(px);
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + s + "\" height=\"" + s +
         "\" viewBox=\"0 0 " + s + " " + s + "\">\n";
}

// Splits the white cells at a removed central square into the four arm
// components, identified by the center neighbour they contain
// (below, right, above, left).
inline std::array<std::vector<CellAddr>, 4> split_arms(const Pattern& p) {
  const std::int32_t m = p.width();
  if (m % 2 == 0) throw BadParameter("arm coloring requires odd width");
  const CellAddr center{(m - 1) / 2, (m - 1) / 2};
  if (!p.white(center)) throw BadParameter("arm coloring requires a white central square");
  std::array<std::vector<CellAddr>, 4> arms;
  const std::array<CellAddr, 4> seeds = {{{center.col, center.row - 1},
                                          {center.col + 1, center.row},
                                          {center.col, center.row + 1},
                                          {center.col - 1, center.row}}};
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(m) * m, 0);
  const auto idx = [m](CellAddr c) { return static_cast<std::size_t>(c.row) * m + c.col; };
  seen[idx(center)] = 1;
  PatternGraph g(p);
  CellAddr nb[4];
  for (int a = 0; a < 4; ++a) {
    if (!p.white(seeds[a])) throw BadParameter("arm coloring requires four arms at the center");
    std::vector<CellAddr> stack{seeds[a]};
    if (seen[idx(seeds[a])]) throw BadParameter("arms are not disjoint at the center");
    seen[idx(seeds[a])] = 1;
    while (!stack.empty()) {
      const CellAddr u = stack.back();
      stack.pop_back();
      arms[static_cast<std::size_t>(a)].push_back(u);
      const int deg = g.neighbors(u, nb);
      for (int d = 0; d < deg; ++d)
        if (!seen[idx(nb[d])]) {
          seen[idx(nb[d])] = 1;
          stack.push_back(nb[d]);
        }
    }
  }
  return arms;
}

}  // namespace detail

/// SVG for one pattern: white background, one rect per black cell, top row of
/// the pattern at the top of the image. Black rects go row-major, top row
/// first, for stable diffs.
inline std::string render_pattern(const Pattern& p, const RenderSpec& spec = {}) {
  const std::int32_t m = p.width();
  const std::int64_t px = detail::canvas_px(m, spec);
  const int c = spec.cell_px;
  std::string out = detail::svg_open(px);
  detail::svg_rect(out, 0, 0, px, px, spec.white);

  out += "<g id=\"black\">\n";
  for (std::int32_t r = 0; r < m; ++r) {      // r = image row, top first
    const std::int32_t j = m - 1 - r;
    for (std::int32_t i = 0; i < m; ++i)
      if (!p.white(i, j)) detail::svg_rect(out, std::int64_t{i} * c, std::int64_t{r} * c, c, c, spec.black);
  }
  out += "</g>\n";

  if (spec.color_arms) {
    const auto arms = detail::split_arms(p);
    out += "<g id=\"arms\">\n";
    for (std::size_t a = 0; a < 4; ++a)
      for (const CellAddr& cell : arms[a])
        detail::svg_rect(out, std::int64_t{cell.col} * c, std::int64_t{m - 1 - cell.row} * c, c, c,
                         spec.arm_colors[a]);
    const CellAddr center{(m - 1) / 2, (m - 1) / 2};
    detail::svg_rect(out, std::int64_t{center.col} * c, std::int64_t{m - 1 - center.row} * c, c, c,
                     spec.center_color);
    out += "</g>\n";
  }

  if (spec.overlay != nullptr) {
    out += "<g id=\"path\">\n";
    for (const CellAddr& cell : spec.overlay->squares)
      detail::svg_rect(out, std::int64_t{cell.col} * c, std::int64_t{m - 1 - cell.row} * c, c, c,
                       spec.path_color);
    out += "</g>\n";
  }

  if (spec.grid_lines) {
    out += "<g id=\"grid\" stroke=\"" + spec.grid_color + "\" stroke-width=\"1\">\n";
    for (std::int32_t i = 0; i <= m; ++i) {
      const std::int64_t t = std::int64_t{i} * c;
      out += "<line x1=\"" + std::to_string(t) + "\" y1=\"0\" x2=\"" + std::to_string(t) +
             "\" y2=\"" + std::to_string(px) + "\"/>\n";
      out += "<line x1=\"0\" y1=\"" + std::to_string(t) + "\" x2=\"" + std::to_string(px) +
             "\" y2=\"" + std::to_string(t) + "\"/>\n";
    }
    out += "</g>\n";
  }

  out += "</svg>\n";
  return out;
}

/// SVG of nested arc approximations: one layer per level, coarser levels more
/// transparent, finest level opaque. All levels share one canvas; a level-n
/// cell spans (m(N)/m(n)) * cell_px pixels, which is exact integer math.
inline std::string render_arc(const ArcApproximation& arc, const RenderSpec& spec = {}) {
  if (arc.levels.empty()) throw BadParameter("arc approximation has no levels");
  const std::int64_t finest = arc.widths.back();
  if (finest * spec.cell_px > spec.max_px) throw TooLarge(finest * spec.cell_px, spec.max_px);
  const std::int64_t px = finest * spec.cell_px;
  std::string out = detail::svg_open(px);
  detail::svg_rect(out, 0, 0, px, px, spec.white);
  for (std::size_t n = 0; n < arc.levels.size(); ++n) {
    const std::int64_t cell = (finest / arc.widths[n]) * spec.cell_px;
    const std::int64_t levels_left = static_cast<std::int64_t>(arc.levels.size()) - 1 -
                                     static_cast<std::int64_t>(n);
    const std::int64_t op_percent = levels_left == 0 ? 100 : (levels_left == 1 ? 45 : 25);
    const std::string extra = " fill-opacity=\"0." + std::to_string(op_percent) + "\"";
    out += "<g id=\"level-" + std::to_string(n + 1) + "\">\n";
    const std::int64_t mn = arc.widths[n];
    for (const CellAddr& sq : arc.levels[n].squares)
      detail::svg_rect(out, std::int64_t{sq.col} * cell, (mn - 1 - sq.row) * cell, cell, cell,
                       spec.path_color, op_percent == 100 ? "" : extra.c_str());
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace laby
