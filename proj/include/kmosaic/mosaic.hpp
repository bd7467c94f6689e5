#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "kmosaic/tiles.hpp"

namespace kmosaic {

// An n x n grid of tiles. Row 1 is the top row, column 1 the leftmost,
// so M(1,1) has outer-boundary top and left edges.
class Mosaic {
 public:
  explicit Mosaic(int n, Tile fill = Tile::T0)
      : n_(n), cells_(std::size_t(n) * n, fill) {
    if (n < 1) throw std::invalid_argument("Mosaic: side length must be positive");
  }

  Mosaic(int n, std::vector<Tile> cells) : n_(n), cells_(std::move(cells)) {
    if (n < 1 || cells_.size() != std::size_t(n) * n)
      throw std::invalid_argument("Mosaic: cell count does not match side length");
  }

  int n() const { return n_; }
  Tile at(int row, int col) const { return cells_[idx(row, col)]; }
  void set(int row, int col, Tile t) { cells_[idx(row, col)] = t; }
  const std::vector<Tile>& cells() const { return cells_; }

  bool operator==(const Mosaic&) const = default;

 private:
  std::size_t idx(int row, int col) const {
    return std::size_t(row - 1) * n_ + (col - 1);
  }

  int n_;
  std::vector<Tile> cells_;
};

enum class Side : std::uint8_t { Top, Bottom, Left, Right };

inline const char* side_name(Side s) {
  switch (s) {
    case Side::Top: return "top";
    case Side::Bottom: return "bottom";
    case Side::Left: return "left";
    case Side::Right: return "right";
  }
  return "?";
}

// A tile edge. Internal edges have a canonical representative: a shared
// horizontal edge belongs to the upper cell as Bottom, a shared vertical
// edge to the left cell as Right.
struct EdgeRef {
  int row = 0, col = 0;
  Side side = Side::Top;

  bool operator==(const EdgeRef&) const = default;

  EdgeRef canonical() const {
    if (side == Side::Top && row > 1) return {row - 1, col, Side::Bottom};
    if (side == Side::Left && col > 1) return {row, col - 1, Side::Right};
    return *this;
  }
};

inline bool edge_cp(const Mosaic& m, int row, int col, Side side) {
  CpProfile p = profile_of(m.at(row, col));
  switch (side) {
    case Side::Top: return p.top;
    case Side::Bottom: return p.bottom;
    case Side::Left: return p.left;
    case Side::Right: return p.right;
  }
  return false;
}

// Suitably-connectedness, edge by edge: every internal edge must agree on
// connection-point presence and no connection point may sit on the outer
// boundary. Returns every violating edge (empty means valid).
inline std::vector<EdgeRef> validate(const Mosaic& m) {
  std::vector<EdgeRef> bad;
  int n = m.n();
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      if (r == 1 && edge_cp(m, r, c, Side::Top)) bad.push_back({r, c, Side::Top});
      if (c == 1 && edge_cp(m, r, c, Side::Left)) bad.push_back({r, c, Side::Left});
      bool b = edge_cp(m, r, c, Side::Bottom);
      if (r == n) {
        if (b) bad.push_back({r, c, Side::Bottom});
      } else if (b != edge_cp(m, r + 1, c, Side::Top)) {
        bad.push_back({r, c, Side::Bottom});
      }
      bool rt = edge_cp(m, r, c, Side::Right);
      if (c == n) {
        if (rt) bad.push_back({r, c, Side::Right});
      } else if (rt != edge_cp(m, r, c + 1, Side::Left)) {
        bad.push_back({r, c, Side::Right});
      }
    }
  }
  return bad;
}

inline bool is_valid(const Mosaic& m) { return validate(m).empty(); }

struct ParseError : std::runtime_error {
  ParseError(int line, int col, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(col) + ": " + what),
        line(line), col(col) {}
  int line, col;
};

// Text format: n lines of n whitespace-separated tile indices in 0..10.
inline Mosaic parse_text(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::vector<int>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      int v;
      std::size_t used = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size())
        throw ParseError(lineno, int(row.size()) + 1, "not a tile index: '" + tok + "'");
      if (v < 0 || v >= kTileCount)
        throw ParseError(lineno, int(row.size()) + 1, "tile index out of range: " + tok);
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(1, 1, "empty mosaic");
  int n = int(rows.size());
  std::vector<Tile> cells;
  cells.reserve(std::size_t(n) * n);
  for (int r = 0; r < n; ++r) {
    if (int(rows[r].size()) != n)
      throw ParseError(r + 1, int(rows[r].size()) + 1,
                       "expected " + std::to_string(n) + " entries in row");
    for (int v : rows[r]) cells.push_back(tile_from_index(v));
  }
  return Mosaic(n, std::move(cells));
}

inline std::string serialize_text(const Mosaic& m) {
  std::ostringstream out;
  for (int r = 1; r <= m.n(); ++r) {
    for (int c = 1; c <= m.n(); ++c) {
      if (c > 1) out << ' ';
      out << index_of(m.at(r, c));
    }
    out << '\n';
  }
  return out.str();
}

// Rotates the grid counterclockwise by quarter turns, rotating each tile
// with it. Preserves the validity verdict.
inline Mosaic rotate_mosaic(const Mosaic& m, int quarter_turns) {
  int q = ((quarter_turns % 4) + 4) % 4;
  Mosaic cur = m;
  for (int t = 0; t < q; ++t) {
    int n = cur.n();
    Mosaic next(n);
    for (int r = 1; r <= n; ++r)
      for (int c = 1; c <= n; ++c)
        next.set(r, c, rotate_tile(cur.at(c, n + 1 - r), 1));
    cur = next;
  }
  return cur;
}

}  // namespace kmosaic
