#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace kmosaic {

// Counts overflow 64 bits quickly (D_n already needs ~40 bits at n = 6),
// so everything on a counting path is arbitrary precision.
using BigCount = mpz_class;

// Always canonical: gcd(num, den) = 1, den > 0. mpq_class maintains this.
using ExactRational = mpq_class;

inline BigCount pow_big(const BigCount& base, unsigned long exp) {
  BigCount r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline ExactRational pow_rat(const ExactRational& base, unsigned long exp) {
  ExactRational r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), exp);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), exp);
  // num and den were coprime, so their powers are too.
  return r;
}

inline BigCount floor_rat(const ExactRational& q) {
  BigCount r;
  mpz_fdiv_q(r.get_mpz_t(), mpq_numref(q.get_mpq_t()), mpq_denref(q.get_mpq_t()));
  return r;
}

inline BigCount ceil_rat(const ExactRational& q) {
  BigCount r;
  mpz_cdiv_q(r.get_mpz_t(), mpq_numref(q.get_mpq_t()), mpq_denref(q.get_mpq_t()));
  return r;
}

// Fixed-point decimal rendering of a nonnegative rational, truncated.
// Trailing zeros are kept so output columns are stable.
inline std::string decimal_string(const ExactRational& q, unsigned digits = 6) {
  if (sgn(q) < 0) throw std::invalid_argument("decimal_string: negative value");
  BigCount scaled = floor_rat(q * pow_big(10, digits));
  std::string s = scaled.get_str();
  if (digits == 0) return s;
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  return s;
}

}  // namespace kmosaic
