#pragma once

// Internal exact scan engines shared by approx (sequences) and section
// (visit events). Linear scan over q with per-q nearest-point distances,
// incremental fractional-part tracking, and exact comparisons throughout.
// Rational targets run on integer numerators modulo the common denominator;
// algebraic targets run on fixed-point dyadic enclosures of the fractional
// parts with an exact field-arithmetic fallback for near-ties.

#include <optional>

#include "dapx/approx.hpp"

namespace dapx::scan {

struct Hit {
  Int q;
  std::vector<Int> p;
  Magnitude dist;        // ||p - q theta||^w, w = dist_power(spec)
  bool is_nearest;       // dist == <q theta>
  bool below_record;     // dist < min_{q' < q} <q' theta>, strict
  int solutions_at_q;    // number of hits sharing this q
};

struct BestHit {
  Int q;
  std::vector<std::vector<Int>> minimizers;  // lexicographically sorted
  Magnitude dist;
};

struct Request {
  const TargetVector* theta = nullptr;
  NormSpec spec;
  Int q_max;
  std::optional<Rat> bound;  // emit hits with q^(1/d) ||p - q theta|| <= bound
  bool track_best = false;
  int threads = 1;
};

struct Result {
  std::vector<Hit> hits;
  std::vector<BestHit> bests;
};

// w with dist = ||x||^w: 1 for sup/L1, 2 for Euclidean, p for even-integer Lp.
unsigned dist_power(const NormSpec& spec);

Result run(const Request& req);

}  // namespace dapx::scan
