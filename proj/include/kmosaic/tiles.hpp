#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace kmosaic {

// The 11 mosaic tiles. T0 is blank; T1..T4 are single arcs; T5/T6 are
// straight lines; T7/T8 are double arcs; T9/T10 are crossings.
enum class Tile : std::uint8_t {
  T0, T1, T2, T3, T4, T5, T6, T7, T8, T9, T10
};

inline constexpr int kTileCount = 11;

constexpr int index_of(Tile t) { return static_cast<int>(t); }
constexpr Tile tile_from_index(int i) { return static_cast<Tile>(i); }

inline std::string tile_name(Tile t) { return "T" + std::to_string(index_of(t)); }

// Which tile edges carry a connection point.
struct CpProfile {
  bool top = false, bottom = false, left = false, right = false;

  constexpr int count() const { return int(top) + int(bottom) + int(left) + int(right); }
  constexpr bool operator==(const CpProfile&) const = default;

  // One counterclockwise quarter turn: top edge moves to the left, etc.
  constexpr CpProfile rotated_ccw() const {
    return CpProfile{.top = right, .bottom = left, .left = top, .right = bottom};
  }
};

// Profile table. Arc endpoints:
//   T1 = (left,bottom), T2 = (bottom,right), T3 = (top,right), T4 = (top,left),
//   T5 = horizontal line, T6 = vertical line, T7/T8 double arcs, T9/T10 crossings.
inline constexpr std::array<CpProfile, kTileCount> kTileProfiles = {{
    {false, false, false, false},  // T0
    {false, true, true, false},    // T1
    {false, true, false, true},    // T2
    {true, false, false, true},    // T3
    {true, false, true, false},    // T4
    {false, false, true, true},    // T5
    {true, true, false, false},    // T6
    {true, true, true, true},      // T7
    {true, true, true, true},      // T8
    {true, true, true, true},      // T9
    {true, true, true, true},      // T10
}};

constexpr CpProfile profile_of(Tile t) { return kTileProfiles[index_of(t)]; }

enum class EdgeConstraint : std::uint8_t { Free, Required, Forbidden };

struct EdgeConstraintSet {
  EdgeConstraint top = EdgeConstraint::Free;
  EdgeConstraint bottom = EdgeConstraint::Free;
  EdgeConstraint left = EdgeConstraint::Free;
  EdgeConstraint right = EdgeConstraint::Free;

  constexpr bool operator==(const EdgeConstraintSet&) const = default;
};

constexpr bool edge_ok(bool cp, EdgeConstraint c) {
  return c == EdgeConstraint::Free || (cp == (c == EdgeConstraint::Required));
}

constexpr bool satisfies(const CpProfile& p, const EdgeConstraintSet& c) {
  return edge_ok(p.top, c.top) && edge_ok(p.bottom, c.bottom) &&
         edge_ok(p.left, c.left) && edge_ok(p.right, c.right);
}

// Small set of tiles, bitmask-backed.
class TileSet {
 public:
  constexpr TileSet() = default;
  explicit constexpr TileSet(std::uint16_t bits) : bits_(bits) {}

  constexpr bool contains(Tile t) const { return bits_ & (1u << index_of(t)); }
  constexpr void insert(Tile t) { bits_ |= std::uint16_t(1u << index_of(t)); }
  constexpr int size() const { return __builtin_popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint16_t bits() const { return bits_; }
  constexpr bool operator==(const TileSet&) const = default;

  std::vector<Tile> to_vector() const {
    std::vector<Tile> v;
    for (int i = 0; i < kTileCount; ++i)
      if (bits_ & (1u << i)) v.push_back(tile_from_index(i));
    return v;
  }

 private:
  std::uint16_t bits_ = 0;
};

// All tiles whose profile has a connection point on every Required edge and
// none on any Forbidden edge.
constexpr TileSet tiles_compatible(const EdgeConstraintSet& c) {
  TileSet s;
  for (int i = 0; i < kTileCount; ++i)
    if (satisfies(kTileProfiles[i], c)) s.insert(tile_from_index(i));
  return s;
}

// Rotation under one counterclockwise quarter turn. Arcs cycle
// T4 -> T1 -> T2 -> T3 -> T4; lines and the 4-cp pairs swap.
inline constexpr std::array<Tile, kTileCount> kRotateCcw = {
    Tile::T0, Tile::T2, Tile::T3, Tile::T4, Tile::T1,
    Tile::T6, Tile::T5, Tile::T8, Tile::T7, Tile::T10, Tile::T9};

constexpr Tile rotate_tile(Tile t, int quarter_turns) {
  int q = ((quarter_turns % 4) + 4) % 4;
  Tile r = t;
  for (int i = 0; i < q; ++i) r = kRotateCcw[index_of(r)];
  return r;
}

}  // namespace kmosaic
