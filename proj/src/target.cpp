#include "dapx/target.hpp"

namespace dapx {

bool TargetVector::all_rational() const {
  for (const auto& c : coords)
    if (!c.is_rational()) return false;
  return true;
}

Int TargetVector::denominator_lcm() const {
  Int l = 1;
  for (const auto& c : coords) {
    Int d = c.rat().get_den();
    l = l / gcd(l, d) * d;
  }
  return l;
}

TargetVector TargetVector::from_strings(const std::vector<std::string>& texts) {
  TargetVector t;
  for (const auto& s : texts) {
    ExactReal x = parse_exact(s);
    if (!x.is_rational()) {
      if (t.field_handle) {
        // force all algebraic coordinates into one field or fail loudly
        if (!NumberField::same_field(*t.field_handle, *x.field())) throw IncompatibleFields();
        x = ExactReal(FieldElem(t.field_handle, x.elem().coeffs()));
      } else {
        t.field_handle = x.field();
      }
    }
    t.coords.push_back(std::move(x));
  }
  return t;
}

TargetVector random_dyadic_target(int dim, int bits, uint64_t seed) {
  SplitMix64 rng(seed);
  TargetVector t;
  Int den = pow_int(2, bits);
  for (int i = 0; i < dim; ++i) {
    Int num = 0;
    for (int b = 0; b < bits; b += 64) {
      uint64_t w = rng.next();
      int take = std::min(64, bits - b);
      if (take < 64) w >>= (64 - take);
      num <<= take;
      Int lo;
      mpz_import(lo.get_mpz_t(), 1, 1, sizeof(w), 0, 0, &w);
      num |= lo;
    }
    Rat r(num, den);
    r.canonicalize();
    t.coords.push_back(ExactReal(std::move(r)));
  }
  return t;
}

}  // namespace dapx
