#pragma once

#include <optional>

#include "dapx/target.hpp"

namespace dapx {

struct ApproxVector {
  std::vector<Int> p;
  Int q;
  bool tie = false;        // several p minimize at this q (best sequences only)
  bool primitive = true;   // gcd(p_1..p_d, q) == 1
  std::vector<std::vector<Int>> tied_p;  // every minimizer when tie

  bool operator==(const ApproxVector& o) const { return p == o.p && q == o.q; }
};

struct ApproxSequence {
  std::vector<ApproxVector> entries;
  bool terminated = false;  // theta rational and the sequence provably complete
  Int q_max_scanned = 0;
};

// Displacement disp(theta, v) = q^(1/d) (p - q theta): certified coordinate
// enclosures plus an exact-comparable norm power. `norm_power.value` equals
// ||disp||^norm_power.power exactly, so thresholds compare via eps^power.
struct Displacement {
  std::vector<RatInterval> coords;
  Magnitude norm_power;
};

// ||disp(theta,(p,q))||^w as an exact magnitude; w depends on spec and d.
Magnitude disp_norm_magnitude(const NormSpec& spec, const TargetVector& theta,
                              const std::vector<Int>& p, const Int& q);

// the w for this spec/d, so callers can compare against eps^w
unsigned disp_norm_power(const NormSpec& spec);

Displacement displacement(const TargetVector& theta, const ApproxVector& v, const NormSpec& spec,
                          long bits = 80);

// Best approximations with q <= q_max: for every q' < q, <q theta> < <q' theta>,
// and ||q theta - p|| = <q theta>. Lexicographically smallest p is the
// representative when tied; all minimizers are retained in tied_p.
ApproxSequence best_approximations(const TargetVector& theta, const NormSpec& spec,
                                   const Int& q_max, int threads = 1);

// Primitive (p, q) with q <= q_max and q^(1/d) ||p - q theta|| <= eps, decided
// exactly; ordered by q then lexicographically by p.
ApproxSequence eps_approximations(const TargetVector& theta, const NormSpec& spec, const Rat& eps,
                                  const Int& q_max, int threads = 1);

// Independent brute-force oracle: direct scan over q' < v.q using
// nearest_int_points, no shared state with the sequence builders.
bool is_best(const TargetVector& theta, const NormSpec& spec, const ApproxVector& v);

}  // namespace dapx
