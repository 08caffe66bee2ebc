#pragma once

#include <memory>

#include "dapx/poly.hpp"

namespace dapx {

struct PrecisionExhausted : std::runtime_error {
  PrecisionExhausted() : std::runtime_error("precision cap exhausted in exact comparison") {}
};

// Default refinement cap, in bits of interval width, before a comparison gives up.
// Exhaustion signals a representation bug, not an expected outcome.
inline long& precision_cap_bits() {
  static long cap = 4096;
  return cap;
}

// A real algebraic number: irreducible primitive integer minpoly of degree >= 2
// plus an isolating interval containing exactly one real root.
class AlgebraicReal {
 public:
  AlgebraicReal(Poly minpoly, RatInterval isolating);

  const Poly& minpoly() const { return minpoly_; }
  const RatInterval& isolating_interval() const { return isolating_; }
  // Current cached enclosure (refined monotonically, never widened).
  RatInterval enclosure() const { return cached_; }

  // Refine until the cached interval has width <= w; returns it.
  const RatInterval& refine(const Rat& w);
  // Refine until width <= 2^-bits.
  const RatInterval& refine_bits(long bits);

  // Sign of the root. An irreducible minpoly of degree >= 2 has nonzero
  // constant term, so the root itself is never zero.
  int sign();

 private:
  void bisect_once();
  Poly minpoly_;
  Poly deriv_;
  RatInterval isolating_;
  RatInterval cached_;
  int sign_at_lo_;
};

}  // namespace dapx
