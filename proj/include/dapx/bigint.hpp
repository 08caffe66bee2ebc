#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dapx {

using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int gcd_all(const std::vector<Int>& v) {
  Int g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

inline Int pow_int(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline Rat pow_rat(const Rat& b, unsigned long e) {
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), b.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), b.get_den().get_mpz_t(), e);
  return r;  // already canonical: num/den coprime stays coprime under powers
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int floor_rat(const Rat& r) { return floor_div(r.get_num(), r.get_den()); }
inline Int ceil_rat(const Rat& r) { return ceil_div(r.get_num(), r.get_den()); }

// Nearest integer; half ties round toward +infinity (deterministic everywhere).
inline Int round_rat(const Rat& r) { return floor_rat(r + Rat(1, 2)); }

inline Int isqrt_floor(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline int sign(const Rat& r) { return sgn(r); }
inline Rat abs_rat(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Parses "a/b", plain integers, and decimal literals ("1.25", "-0.3") as exact rationals.
std::optional<Rat> parse_rat(const std::string& s);

// a/b form; integers print without the slash.
std::string rat_to_string(const Rat& r);

// Fixed number of significant decimal digits, exact digit extraction (no doubles).
std::string rat_to_decimal(const Rat& r, int sig_digits);

}  // namespace dapx
