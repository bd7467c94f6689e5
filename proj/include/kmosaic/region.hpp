#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "kmosaic/arith.hpp"
#include "kmosaic/mosaic.hpp"
#include "kmosaic/tiles.hpp"

namespace kmosaic {

struct Cell {
  int row = 0, col = 0;
  bool operator==(const Cell&) const = default;
};

enum class RegionKind { Full, K1, K2, K2j, K3, Kc4, Custom };

// A partially-filled-region description. Cells are kept in row-major order,
// which is also the backtracking fill order. Edge rule: outer-mosaic-boundary
// edges are Forbidden, edges shared by two region cells must match, edges
// facing unfilled cells are Free.
struct RegionSpec {
  int n = 0;
  RegionKind kind = RegionKind::Custom;
  int j = 0;  // K2j only
  std::vector<Cell> cells;

  static RegionSpec full(int n) {
    RegionSpec s{n, RegionKind::Full, 0, {}};
    for (int r = 1; r <= n; ++r)
      for (int c = 1; c <= n; ++c) s.cells.push_back({r, c});
    return s;
  }

  // First row and first column, indices 1..n-1 (2n-3 cells).
  static RegionSpec k1(int n) {
    require(n >= 3, "K1 needs n >= 3");
    RegionSpec s{n, RegionKind::K1, 0, {}};
    for (int c = 1; c <= n - 1; ++c) s.cells.push_back({1, c});
    for (int r = 2; r <= n - 1; ++r) s.cells.push_back({r, 1});
    return s;
  }

  // Rows 1-2 and columns 1-2, indices 1..n-1 (4n-8 cells).
  static RegionSpec k2(int n) {
    require(n >= 3, "K2 needs n >= 3");
    RegionSpec s{n, RegionKind::K2, 0, {}};
    for (int r = 1; r <= n - 1; ++r)
      for (int c = 1; c <= n - 1; ++c)
        if (r <= 2 || c <= 2) s.cells.push_back({r, c});
    return s;
  }

  // K1 plus the second-row cells M(2,2)..M(2,j).
  static RegionSpec k2j(int n, int j) {
    require(n >= 3 && j >= 2 && j <= n - 1, "K2j needs n >= 3 and 2 <= j <= n-1");
    RegionSpec s{n, RegionKind::K2j, j, {}};
    for (int c = 1; c <= n - 1; ++c) s.cells.push_back({1, c});
    for (int c = 1; c <= j; ++c) s.cells.push_back({2, c});
    for (int r = 3; r <= n - 1; ++r) s.cells.push_back({r, 1});
    return s;
  }

  // The full (n-1) x (n-1) upper-left block.
  static RegionSpec k3(int n) {
    require(n >= 2, "K3 needs n >= 2");
    RegionSpec s{n, RegionKind::K3, 0, {}};
    for (int r = 1; r <= n - 1; ++r)
      for (int c = 1; c <= n - 1; ++c) s.cells.push_back({r, c});
    return s;
  }

  // The four center cells of a 4-mosaic.
  static RegionSpec kc4() {
    return RegionSpec{4, RegionKind::Kc4, 0, {{2, 2}, {2, 3}, {3, 2}, {3, 3}}};
  }

  static RegionSpec custom(int n, std::vector<Cell> cells) {
    RegionSpec s{n, RegionKind::Custom, 0, std::move(cells)};
    std::sort(s.cells.begin(), s.cells.end(), [](Cell a, Cell b) {
      return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    return s;
  }

 private:
  static void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
  }
};

// A suitably connected assignment of tiles to a region's cells
// (one element of the region's quasimosaic set).
struct Filling {
  const RegionSpec* spec = nullptr;
  std::vector<Tile> tiles;  // parallel to spec->cells

  Tile at_cell(std::size_t k) const { return tiles[k]; }
};

namespace region_detail {

inline constexpr signed char kUnset = -1;

struct Grid {
  int n;
  std::vector<char> present;        // cell participates in edge matching
  std::vector<signed char> tile;    // assigned tile index or kUnset

  explicit Grid(int n)
      : n(n), present(std::size_t(n) * n, 0), tile(std::size_t(n) * n, kUnset) {}

  std::size_t idx(int r, int c) const { return std::size_t(r - 1) * n + (c - 1); }
};

inline EdgeConstraint constrain_toward(const Grid& g, int r, int c, Side from_side) {
  if (r < 1 || r > g.n || c < 1 || c > g.n) return EdgeConstraint::Forbidden;
  std::size_t i = g.idx(r, c);
  if (!g.present[i] || g.tile[i] == kUnset) return EdgeConstraint::Free;
  CpProfile p = profile_of(tile_from_index(g.tile[i]));
  bool cp = false;
  switch (from_side) {  // the neighbor's edge facing back at us
    case Side::Top: cp = p.bottom; break;
    case Side::Bottom: cp = p.top; break;
    case Side::Left: cp = p.right; break;
    case Side::Right: cp = p.left; break;
  }
  return cp ? EdgeConstraint::Required : EdgeConstraint::Forbidden;
}

inline EdgeConstraintSet constraints_at(const Grid& g, int r, int c) {
  return EdgeConstraintSet{
      .top = constrain_toward(g, r - 1, c, Side::Top),
      .bottom = constrain_toward(g, r + 1, c, Side::Bottom),
      .left = constrain_toward(g, r, c - 1, Side::Left),
      .right = constrain_toward(g, r, c + 1, Side::Right),
  };
}

// Depth-first fill of `order[k..]`; candidates in ascending tile index, so
// traversal is lexicographic. `visit` returns false to abort.
template <class V>
bool walk(Grid& g, const std::vector<Cell>& order, std::size_t k, V&& visit) {
  if (k == order.size()) return visit();
  auto [r, c] = order[k];
  TileSet cand = tiles_compatible(constraints_at(g, r, c));
  std::size_t i = g.idx(r, c);
  for (int ti = 0; ti < kTileCount; ++ti) {
    if (!cand.contains(tile_from_index(ti))) continue;
    g.tile[i] = static_cast<signed char>(ti);
    if (!walk(g, order, k + 1, visit)) {
      g.tile[i] = kUnset;
      return false;
    }
  }
  g.tile[i] = kUnset;
  return true;
}

inline Grid make_region_grid(const RegionSpec& spec) {
  Grid g(spec.n);
  for (const Cell& cell : spec.cells) g.present[g.idx(cell.row, cell.col)] = 1;
  return g;
}

}  // namespace region_detail

// Exact number of suitably connected fillings of the region, by backtracking
// in row-major cell order. An empty region counts 1.
inline BigCount count_fillings(const RegionSpec& spec) {
  region_detail::Grid g = region_detail::make_region_grid(spec);
  BigCount total = 0;
  region_detail::walk(g, spec.cells, 0, [&] {
    ++total;
    return true;
  });
  return total;
}

// Visits every filling exactly once in lexicographic order. The visitor
// receives a reused Filling buffer and returns false to abort early.
// Returns true iff the traversal completed.
template <class Visitor>
bool enumerate_fillings(const RegionSpec& spec, Visitor&& visitor) {
  region_detail::Grid g = region_detail::make_region_grid(spec);
  Filling f;
  f.spec = &spec;
  f.tiles.resize(spec.cells.size());
  return region_detail::walk(g, spec.cells, 0, [&] {
    for (std::size_t k = 0; k < spec.cells.size(); ++k)
      f.tiles[k] = tile_from_index(g.tile[g.idx(spec.cells[k].row, spec.cells[k].col)]);
    return bool(visitor(static_cast<const Filling&>(f)));
  });
}

// Same count, split at a fixed prefix depth and merged by summation.
// Exercises the parallel-decomposition contract: the total is a sum over
// disjoint subtrees and independent of how they are scheduled.
inline BigCount count_fillings_split(const RegionSpec& spec, std::size_t depth) {
  depth = std::min(depth, spec.cells.size());
  region_detail::Grid g = region_detail::make_region_grid(spec);
  std::vector<Cell> prefix(spec.cells.begin(), spec.cells.begin() + depth);
  std::vector<Cell> suffix(spec.cells.begin() + depth, spec.cells.end());
  BigCount total = 0;
  region_detail::walk(g, prefix, 0, [&] {
    BigCount sub = 0;
    region_detail::walk(g, suffix, 0, [&] {
      ++sub;
      return true;
    });
    total += sub;
    return true;
  });
  return total;
}

// Fraction of fillings carrying a connection point on the given edge,
// in lowest terms. The edge must belong to a region cell; errors if the
// region has no fillings.
inline ExactRational edge_cp_fraction(const RegionSpec& spec, EdgeRef edge) {
  EdgeRef e = edge.canonical();
  auto in_region = [&](int r, int c) {
    return std::find(spec.cells.begin(), spec.cells.end(), Cell{r, c}) !=
           spec.cells.end();
  };
  // Pick a region cell incident to the edge; the canonical owner may face
  // the region from outside.
  int r = e.row, c = e.col;
  Side side = e.side;
  if (!in_region(r, c)) {
    if (side == Side::Bottom && in_region(r + 1, c)) {
      r += 1;
      side = Side::Top;
    } else if (side == Side::Right && in_region(r, c + 1)) {
      c += 1;
      side = Side::Left;
    } else {
      throw std::invalid_argument("edge_cp_fraction: edge not on a region cell");
    }
  }
  std::size_t cell_index =
      std::find(spec.cells.begin(), spec.cells.end(), Cell{r, c}) - spec.cells.begin();
  BigCount total = 0, with_cp = 0;
  enumerate_fillings(spec, [&](const Filling& f) {
    ++total;
    CpProfile p = profile_of(f.tiles[cell_index]);
    bool cp = side == Side::Top ? p.top
              : side == Side::Bottom ? p.bottom
              : side == Side::Left ? p.left
                                   : p.right;
    if (cp) ++with_cp;
    return true;
  });
  if (total == 0) throw std::domain_error("edge_cp_fraction: region has no fillings");
  return ExactRational(with_cp) / ExactRational(total);
}

// Number of ways to assign tiles to all cells outside the region so the
// completed n x n mosaic is valid.
inline BigCount extension_count(const Filling& f) {
  const RegionSpec& spec = *f.spec;
  region_detail::Grid g(spec.n);
  std::fill(g.present.begin(), g.present.end(), 1);
  for (std::size_t k = 0; k < spec.cells.size(); ++k)
    g.tile[g.idx(spec.cells[k].row, spec.cells[k].col)] =
        static_cast<signed char>(index_of(f.tiles[k]));
  // The filled cells must already be mutually consistent and boundary-clean.
  std::vector<Cell> rest;
  for (int r = 1; r <= spec.n; ++r)
    for (int c = 1; c <= spec.n; ++c) {
      if (g.tile[g.idx(r, c)] != region_detail::kUnset) {
        Tile t = tile_from_index(g.tile[g.idx(r, c)]);
        if (!satisfies(profile_of(t), region_detail::constraints_at(g, r, c)))
          return 0;
      } else {
        rest.push_back({r, c});
      }
    }
  BigCount total = 0;
  region_detail::walk(g, rest, 0, [&] {
    ++total;
    return true;
  });
  return total;
}

// Materializes a Filling of the Full region as a Mosaic.
inline Mosaic to_mosaic(const Filling& f) {
  const RegionSpec& spec = *f.spec;
  Mosaic m(spec.n);
  for (std::size_t k = 0; k < spec.cells.size(); ++k)
    m.set(spec.cells[k].row, spec.cells[k].col, f.tiles[k]);
  return m;
}

}  // namespace kmosaic
