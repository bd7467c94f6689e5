#pragma once

#include <array>
#include <sstream>
#include <string>

#include "kmosaic/mosaic.hpp"

namespace kmosaic {

// ASCII: each tile occupies a fixed 3x3 character cell. T9 draws the
// vertical strand on top (unbroken bar in the center), T10 the horizontal.
inline constexpr std::array<std::array<const char*, 3>, kTileCount> kAsciiTiles = {{
    {"   ", "   ", "   "},  // T0
    {"   ", "-. ", " | "},  // T1
    {"   ", " .-", " | "},  // T2
    {" | ", " '-", "   "},  // T3
    {" | ", "-' ", "   "},  // T4
    {"   ", "---", "   "},  // T5
    {" | ", " | ", " | "},  // T6
    {" | ", "-'.", " | "},  // T7
    {" | ", ".'-", " | "},  // T8
    {" | ", "-|-", " | "},  // T9
    {" | ", "---", " | "},  // T10
}};

inline std::string render_ascii(const Mosaic& m) {
  std::ostringstream out;
  for (int r = 1; r <= m.n(); ++r) {
    for (int sub = 0; sub < 3; ++sub) {
      for (int c = 1; c <= m.n(); ++c)
        out << kAsciiTiles[index_of(m.at(r, c))][sub];
      out << '\n';
    }
  }
  return out.str();
}

namespace svg_detail {

inline constexpr int kTileSize = 100;
inline constexpr int kHalfGap = 6;  // 12-unit break in the under strand

// Path data for one tile in local 100x100 coordinates.
inline std::string tile_paths(Tile t) {
  // Quarter-circle arcs of radius 50 centered at the corner between the
  // two connected edge midpoints.
  static const std::string arc_lb = "M 0 50 A 50 50 0 0 0 50 100";
  static const std::string arc_br = "M 50 100 A 50 50 0 0 0 100 50";
  static const std::string arc_tr = "M 100 50 A 50 50 0 0 0 50 0";
  static const std::string arc_tl = "M 50 0 A 50 50 0 0 0 0 50";
  static const std::string line_h = "M 0 50 L 100 50";
  static const std::string line_v = "M 50 0 L 50 100";
  static const std::string under_h =
      "M 0 50 L 44 50 M 56 50 L 100 50";
  static const std::string under_v =
      "M 50 0 L 50 44 M 50 56 L 50 100";
  switch (t) {
    case Tile::T0: return "";
    case Tile::T1: return arc_lb;
    case Tile::T2: return arc_br;
    case Tile::T3: return arc_tr;
    case Tile::T4: return arc_tl;
    case Tile::T5: return line_h;
    case Tile::T6: return line_v;
    case Tile::T7: return arc_tl + " " + arc_br;
    case Tile::T8: return arc_tr + " " + arc_lb;
    case Tile::T9: return under_h + " " + line_v;
    case Tile::T10: return under_v + " " + line_h;
  }
  return "";
}

}  // namespace svg_detail

// SVG 1.1, one <g> per tile (n^2 groups, row-major).
inline std::string render_svg(const Mosaic& m) {
  using namespace svg_detail;
  int n = m.n();
  int size = n * kTileSize;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      << "width=\"" << size << "\" height=\"" << size << "\" "
      << "viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  out << "<rect width=\"" << size << "\" height=\"" << size
      << "\" fill=\"white\"/>\n";
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      int x = (c - 1) * kTileSize;
      int y = (r - 1) * kTileSize;
      out << "<g transform=\"translate(" << x << ',' << y << ")\">";
      std::string d = tile_paths(m.at(r, c));
      if (!d.empty())
        out << "<path d=\"" << d
            << "\" fill=\"none\" stroke=\"black\" stroke-width=\"8\" "
               "stroke-linecap=\"round\"/>";
      out << "</g>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

enum class RenderFormat { Ascii, Svg };

inline std::string render(const Mosaic& m, RenderFormat f) {
  return f == RenderFormat::Ascii ? render_ascii(m) : render_svg(m);
}

}  // namespace kmosaic
