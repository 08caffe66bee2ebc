#pragma once

#include <vector>

#include "dapx/exact.hpp"
#include "dapx/interval.hpp"

namespace dapx {

struct UnsupportedExact : std::runtime_error {
  UnsupportedExact() : std::runtime_error("no field-exact comparable form for this norm") {}
};

enum class NormKind { Euclidean, Sup, L1, Lp };

struct NormSpec {
  NormKind kind = NormKind::Euclidean;
  int dim = 1;
  Rat p = 2;  // Lp only; must be > 1

  static NormSpec parse(const std::string& selector, int dim);  // "euclid"|"sup"|"l1"|"lp:<p>"
  std::string selector() const;
};

// Exact-comparable magnitude: value == ||x||^power. Two magnitudes from the
// same NormSpec order exactly like the norms themselves.
struct Magnitude {
  ExactReal value;
  unsigned power = 1;
};

inline Ordering compare(const Magnitude& a, const Magnitude& b) {
  return compare(a.value, b.value);
}

// Exact-comparable norm of x (sup/L1: the norm; Euclidean / even-integer Lp:
// the p-th power). Throws UnsupportedExact for other Lp.
Magnitude norm_magnitude(const NormSpec& spec, const std::vector<ExactReal>& x);

// Interval enclosure of ||x|| itself (any Lp with p > 1).
FloatInterval norm_interval(const NormSpec& spec, const std::vector<ExactReal>& x, long bits);

struct NearestResult {
  Magnitude distance;                    // <y> = min over p in Z^d
  std::vector<std::vector<Int>> points;  // every minimizer, lexicographically sorted
  bool tie() const { return points.size() > 1; }
};

// Certified nearest integer points: evaluates the 2^d cell corners around y,
// then exhausts the box ||p - y||_inf <= r*/c1. Complete for every norm here.
NearestResult nearest_int_points(const NormSpec& spec, const std::vector<ExactReal>& y);

// Lebesgue volume of the unit ball. Sup/L1 have exact rational values, which
// `exact` reports when non-null.
FloatInterval ball_volume(const NormSpec& spec, Rat* exact = nullptr, mpfr_prec_t prec = 128);

// (c1, c2) with c1 ||x||_inf <= ||x|| <= c2 ||x||_inf; c1 is exactly 1 for all
// shipped norms. c2_upper is a certified rational upper bound for pruning;
// c2 is the tight value as an enclosure.
struct EquivalenceConstants {
  Rat c1;
  Rat c2_upper;
  FloatInterval c2;
};
EquivalenceConstants equivalence_constants(const NormSpec& spec);

}  // namespace dapx
