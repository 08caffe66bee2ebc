#include "dapx/algebraic.hpp"

namespace dapx {

namespace {

Rat dyadic_down(const Rat& r, long bits) {
  Int scale = pow_int(2, bits);
  return Rat(floor_rat(r * Rat(scale)), scale);
}
Rat dyadic_up(const Rat& r, long bits) {
  Int scale = pow_int(2, bits);
  return Rat(ceil_rat(r * Rat(scale)), scale);
}

}  // namespace

AlgebraicReal::AlgebraicReal(Poly minpoly, RatInterval isolating)
    : minpoly_(std::move(minpoly)), deriv_(minpoly_.derivative()), isolating_(isolating),
      cached_(isolating) {
  if (minpoly_.degree() < 2) throw std::invalid_argument("AlgebraicReal needs degree >= 2");
  sign_at_lo_ = sgn(minpoly_.eval(isolating_.lo));
  int sign_at_hi = sgn(minpoly_.eval(isolating_.hi));
  if (sign_at_lo_ == 0 || sign_at_hi == 0 || sign_at_lo_ == sign_at_hi)
    throw std::invalid_argument("interval does not isolate a root by sign change");
}

void AlgebraicReal::bisect_once() {
  Rat m = cached_.mid();
  int sm = sgn(minpoly_.eval(m));
  // sm = 0 impossible: irreducible minpoly of degree >= 2 has no rational root
  if (sm == sign_at_lo_)
    cached_.lo = m;
  else
    cached_.hi = m;
}

const RatInterval& AlgebraicReal::refine(const Rat& w) {
  if (!(w > 0)) throw std::invalid_argument("refine width must be positive");
  // Phase 1: bisect until the derivative has definite sign on the enclosure.
  while (cached_.width() > w) {
    RatInterval dv = deriv_.eval(cached_);
    if (dv.definite_sign() != 0) break;
    bisect_once();
  }
  if (cached_.width() <= w) return cached_;
  // Phase 2: interval Newton with outward dyadic rounding; quadratic convergence.
  long bits = 8;
  {
    Rat ww = cached_.width();
    while (ww < 1) {
      ww *= 2;
      ++bits;
    }
  }
  while (cached_.width() > w) {
    RatInterval dv = deriv_.eval(cached_);
    if (dv.definite_sign() == 0) {
      bisect_once();
      continue;
    }
    bits = bits * 2 + 16;
    Rat m = cached_.mid();
    Rat fm = minpoly_.eval(m);
    // N = m - fm / dv, as an interval
    Rat a = fm / dv.lo, b = fm / dv.hi;
    RatInterval step = a < b ? RatInterval{a, b} : RatInterval{b, a};
    RatInterval next{m - step.hi, m - step.lo};
    // intersect with current and round endpoints outward to dyadics
    Rat lo = std::max(next.lo, cached_.lo), hi = std::min(next.hi, cached_.hi);
    if (!(lo <= hi)) {  // numerical degeneracy; fall back to bisection
      bisect_once();
      continue;
    }
    lo = dyadic_down(lo, bits);
    hi = dyadic_up(hi, bits);
    if (lo < cached_.lo) lo = cached_.lo;
    if (hi > cached_.hi) hi = cached_.hi;
    bool progressed = (lo > cached_.lo) || (hi < cached_.hi);
    cached_.lo = lo;
    cached_.hi = hi;
    sign_at_lo_ = sgn(minpoly_.eval(cached_.lo));
    if (sign_at_lo_ == 0) throw std::logic_error("rational root of irreducible minpoly");
    if (!progressed) bisect_once();
  }
  return cached_;
}

const RatInterval& AlgebraicReal::refine_bits(long bits) {
  return refine(Rat(Int(1), pow_int(2, bits)));
}

int AlgebraicReal::sign() {
  if (sgn(cached_.lo) > 0) return 1;
  if (sgn(cached_.hi) < 0) return -1;
  // zero is not a root; refine until the enclosure clears zero
  long bits = 16;
  while (cached_.contains_zero()) {
    if (bits > precision_cap_bits()) throw PrecisionExhausted();
    refine_bits(bits);
    bits *= 2;
  }
  return sgn(cached_.lo) > 0 ? 1 : -1;
}

}  // namespace dapx
