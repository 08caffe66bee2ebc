#pragma once

#include <cstdint>

#include "dapx/norms.hpp"

namespace dapx {

// Target vector theta in R^d, held exactly.
struct TargetVector {
  std::vector<ExactReal> coords;
  FieldPtr field_handle;  // set when any coordinate is a field element

  int dim() const { return (int)coords.size(); }
  bool all_rational() const;
  // lcm of coordinate denominators (valid when all_rational)
  Int denominator_lcm() const;

  static TargetVector from_strings(const std::vector<std::string>& texts);
};

// Deterministic 64-bit generator (splitmix64); identical streams on every
// platform, unlike the distributions in <random>.
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

// Random dyadic target: each coordinate is k / 2^bits with k uniform in
// [0, 2^bits), fully determined by the seed.
TargetVector random_dyadic_target(int dim, int bits, uint64_t seed);

}  // namespace dapx
