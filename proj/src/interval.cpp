#include "dapx/interval.hpp"

namespace dapx {

std::string enclosure_to_decimal(const RatInterval& iv, int sig_digits) {
  if (iv.is_point()) return rat_to_decimal(iv.lo, sig_digits);
  Rat m = iv.mid();
  Rat w = iv.width();
  Rat scale = abs_rat(m);
  if (scale == 0) scale = Rat(1);
  // Demand one decimal order of slack below the last printed digit.
  Rat tol = scale / pow_rat(Rat(10), sig_digits + 1);
  if (w > tol)
    throw std::runtime_error("enclosure too wide for " + std::to_string(sig_digits) +
                             " significant digits");
  return rat_to_decimal(m, sig_digits);
}

}  // namespace dapx
