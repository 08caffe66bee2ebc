#pragma once

#include "dapx/section.hpp"

namespace dapx {

// Deep cross-section streaming: visit events far beyond the linear-scan range.
//
// d = 1: walks the slow continued-fraction (Stern-Brocot) expansion of theta.
// Every (p, q) with q |q theta - p| <= 1 lies on that path, so the stream is
// complete whenever r0 <= 1 (which default_r0 gives for d = 1).
//
// d = 2: advances a reduced basis of the sheared lattice {(p - q theta, q)}
// through multiplicative windows q in (Q, C*Q], enumerating candidates inside
// a certified ball and verifying membership exactly. A shallow scan seeds the
// prefix and the running record.
//
// Events carry the same exact flags as section::visits.
struct DeepConfig {
  size_t max_events = 1000;
  Int q_ceiling = 0;      // 0: unlimited (stop on max_events)
  int window_factor = 16; // d = 2 window ratio C
  Int shallow_until = 4096;
};

std::vector<VisitEvent> deep_visits(const TargetVector& theta, const CrossSectionGeometry& geom,
                                    const DeepConfig& cfg);

}  // namespace dapx
