#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "kmosaic/arith.hpp"
#include "kmosaic/tiles.hpp"

namespace kmosaic {

// d1 = 2^(2n-3): fillings of the first row and column (indices 1..n-1).
inline BigCount d1_closed(int n) {
  if (n < 3) throw std::invalid_argument("d1_closed: n must be >= 3");
  return pow_big(2, 2ul * n - 3);
}

// p_j: fraction of second-row prefixes whose tile M(2,j) has a right
// connection point. Recurrence p_j = (2 + 3 p_{j-1}) / (4 + 3 p_{j-1})
// from p_2 = 7/11.
inline ExactRational p_recurrence(int j) {
  if (j < 2) throw std::invalid_argument("p_recurrence: j must be >= 2");
  ExactRational p(7, 11);
  for (int k = 3; k <= j; ++k) p = (2 + 3 * p) / (4 + 3 * p);
  return p;
}

// Closed form p_j = (2*6^j - 2) / (3*6^j + 2).
inline ExactRational p_closed(int j) {
  if (j < 2) throw std::invalid_argument("p_closed: j must be >= 2");
  BigCount sixj = pow_big(6, static_cast<unsigned long>(j));
  return ExactRational(2 * sixj - 2) / ExactRational(3 * sixj + 2);
}

// d2 = (2/275) * (9*6^(n-2) + 1)^2. Exact rational; integral only for
// some n (already non-integral at n = 4).
inline ExactRational d2_closed(int n) {
  if (n < 3) throw std::invalid_argument("d2_closed: n must be >= 3");
  ExactRational base(9 * pow_big(6, static_cast<unsigned long>(n - 2)) + 1);
  return ExactRational(2, 275) * base * base;
}

// Product form d1 * 11/4 * prod_{j=2}^{n-2} (2 + 3/2 p_j)^2, which the
// closed form above telescopes from.
inline ExactRational d2_product_form(int n) {
  if (n < 3) throw std::invalid_argument("d2_product_form: n must be >= 3");
  ExactRational d = ExactRational(d1_closed(n)) * ExactRational(11, 4);
  for (int j = 2; j <= n - 2; ++j) {
    ExactRational m = 2 + ExactRational(3, 2) * p_closed(j);
    d *= m * m;
  }
  return d;
}

struct BoundPair {
  ExactRational lower, upper;
};

// d2 * 2^((n-3)^2) <= D_n <= d2 * (22/5)^((n-3)^2). The 4.4 is kept exact
// as 22/5; reproducing 1537 <= D_4 <= 3380 needs exact ceiling/flooring.
inline BoundPair bounds(int n) {
  if (n < 3) throw std::invalid_argument("bounds: n must be >= 3");
  ExactRational d2 = d2_closed(n);
  unsigned long e = static_cast<unsigned long>(n - 3) * (n - 3);
  return BoundPair{d2 * pow_rat(ExactRational(2), e),
                   d2 * pow_rat(ExactRational(22, 5), e)};
}

// Number of center-block fillings of a 4-mosaic consistent with one
// pattern of the four central edges. Bit k of `pattern` says whether
// central edge k carries a connection point; edges in order: vertical
// between M22|M23, vertical between M32|M33, horizontal between M22/M32,
// horizontal between M23/M33.
inline BigCount dc_pattern_count(unsigned pattern) {
  bool v_top = pattern & 1, v_bot = pattern & 2, h_left = pattern & 4,
       h_right = pattern & 8;
  auto req = [](bool cp) {
    return cp ? EdgeConstraint::Required : EdgeConstraint::Forbidden;
  };
  // Each center cell is constrained only on its two central edges.
  std::array<EdgeConstraintSet, 4> cells = {{
      {.bottom = req(h_left), .right = req(v_top)},    // M22
      {.bottom = req(h_right), .left = req(v_top)},    // M23
      {.top = req(h_left), .right = req(v_bot)},       // M32
      {.top = req(h_right), .left = req(v_bot)},       // M33
  }};
  BigCount prod = 1;
  for (const auto& c : cells) prod *= tiles_compatible(c).size();
  return prod;
}

// d_c: iterates all 16 central-edge patterns for real, rather than
// transcribing the sum 5^4 + 4*5^2*2^2 + 4*5*2^3 + 7*2^4.
inline BigCount dc_casework() {
  BigCount total = 0;
  for (unsigned pattern = 0; pattern < 16; ++pattern)
    total += dc_pattern_count(pattern);
  return total;
}

// D_4 = 2 * d_c: each center-block filling extends in exactly two ways.
inline BigCount d4_from_casework() { return 2 * dc_casework(); }

}  // namespace kmosaic
