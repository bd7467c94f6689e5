#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "kmosaic/arith.hpp"
#include "kmosaic/tiles.hpp"

namespace kmosaic {

struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultMaxFrontierN = 20;

// Multiplicity of each realized connection-point profile class. The
// defaults are the tile multiplicities: one tile per 0-cp and 2-cp
// profile, four tiles (T7..T10) for the all-cp profile.
struct ProfileWeights {
  // Indexed by profile mask: top | bottom<<1 | left<<2 | right<<3.
  std::array<BigCount, 16> by_mask{};

  ProfileWeights() {
    for (int m = 0; m < 16; ++m)
      by_mask[m] = (__builtin_popcount(m) % 2) ? 0 : 1;
    by_mask[15] = 4;
  }

  static constexpr int mask(bool top, bool bottom, bool left, bool right) {
    return int(top) | int(bottom) << 1 | int(left) << 2 | int(right) << 3;
  }

  BigCount& blank() { return by_mask[0]; }
  BigCount& all_cp() { return by_mask[15]; }

  void set_two_cp_all(const BigCount& w) {
    for (int m = 1; m < 15; ++m)
      if (__builtin_popcount(m) == 2) by_mask[m] = w;
  }
};

struct FrontierStats {
  std::size_t max_live_states = 0;  // peak nonzero entries in a state table
};

// Frontier (broken-profile) sweep over cells in row-major order. The state
// is n pending-connection-point bits on the horizontal edges crossing the
// frontier plus one carry bit for the vertical edge left of the in-progress
// cell; counts start and end in the all-false state.
inline BigCount count_weighted(int n, const ProfileWeights& w,
                               int max_n = kDefaultMaxFrontierN,
                               FrontierStats* stats = nullptr) {
  if (n < 1) throw std::invalid_argument("count_weighted: n must be positive");
  if (n > max_n)
    throw ResourceLimitError("count_weighted: n = " + std::to_string(n) +
                             " exceeds configured maximum " + std::to_string(max_n));
  const std::size_t nstates = std::size_t(1) << (n + 1);
  const std::uint32_t carry_bit = 1u << n;
  std::vector<BigCount> cur(nstates), next(nstates);
  cur[0] = 1;
  std::size_t max_live = 1;
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      std::size_t live = 0;
      for (std::size_t s = 0; s < nstates; ++s) {
        if (cur[s] == 0) continue;
        ++live;
        bool top = (s >> col) & 1;
        bool left = s & carry_bit;
        for (int bottom = 0; bottom <= 1; ++bottom) {
          if (row == n - 1 && bottom) continue;  // outer boundary below
          for (int right = 0; right <= 1; ++right) {
            if (col == n - 1 && right) continue;  // outer boundary at right
            const BigCount& pw = w.by_mask[ProfileWeights::mask(top, left, bottom, right)];
            if (pw == 0) continue;
            std::size_t t = s;
            t = bottom ? (t | (std::size_t(1) << col)) : (t & ~(std::size_t(1) << col));
            t = right ? (t | carry_bit) : (t & ~std::size_t(carry_bit));
            next[t] += cur[s] * pw;
          }
        }
      }
      max_live = std::max(max_live, live);
      for (std::size_t s = 0; s < nstates; ++s) cur[s] = 0;
      cur.swap(next);
    }
    // carry is false across a row boundary by construction (right edge of
    // the last column is outer boundary)
  }
  if (stats) stats->max_live_states = max_live;
  return cur[0];
}

// D_n: the exact number of knot n-mosaics.
inline BigCount count_knot_mosaics(int n, int max_n = kDefaultMaxFrontierN,
                                   FrontierStats* stats = nullptr) {
  return count_weighted(n, ProfileWeights{}, max_n, stats);
}

}  // namespace kmosaic
