#pragma once

#include "dapx/approx.hpp"
#include "dapx/observables.hpp"

namespace dapx {

struct EpsilonExceedsR0 : std::runtime_error {
  EpsilonExceedsR0() : std::runtime_error("eps filter exceeds the section radius r0") {}
};
struct OutOfChart : std::runtime_error {
  OutOfChart() : std::runtime_error("(x, y) outside the d=1 chart domain") {}
};

// Smallest rational of the form k/1000 with 2 V r^d >= 2^n (so the cylinder
// C_r catches a primitive vector of every lattice), then max'ed with eps.
Rat default_r0(const NormSpec& spec, int n, const Rat& eps = Rat(0));

struct CrossSectionGeometry {
  NormSpec spec;
  Rat r0;
  int d() const { return spec.dim; }
  int n() const { return spec.dim + 1; }

  static CrossSectionGeometry make(const NormSpec& spec, const Rat& eps = Rat(0)) {
    return {spec, default_r0(spec, spec.dim + 1, eps)};
  }
};

struct VisitEvent {
  Int q;
  std::vector<Int> p;
  Magnitude disp_norm;  // ||disp||^L, L = disp_norm_power(spec)
  bool in_sharp = true;
  bool in_B = false;
  double t() const;                      // (1/d) log q
  RatInterval t_enclosure(long bits) const;
  int dim = 1;
};

// One event per primitive (p, q), q <= q_max, with q^(1/d)||p - q theta|| <= r0,
// sorted by q then p. in_sharp counts solutions at equal q; in_B applies the
// cylinder-emptiness condition with exact comparisons.
std::vector<VisitEvent> visits(const TargetVector& theta, const CrossSectionGeometry& geom,
                               const Int& q_max, int threads = 1);

// Oracle form: true iff no primitive (p', q') outside {+-(p,q)} with
// 0 <= |q'| <= q and ||p' - q' theta|| <= ||p - q theta|| (closed cylinder).
bool in_B(const TargetVector& theta, const CrossSectionGeometry& geom, const ApproxVector& v);

enum class SectionSubset { B, Eps, Sharp, All };
std::vector<VisitEvent> subset_filter(const std::vector<VisitEvent>& events,
                                      const CrossSectionGeometry& geom, SectionSubset which,
                                      const Rat& eps = Rat(0));

struct PrefixAlignment {
  bool matched = false;
  size_t index_a = 0, index_b = 0;  // minimal k0, l0 with identical tails
};
// Mismatch (matched == false) is a bug signal, not a data condition.
PrefixAlignment prefix_equivalence_check(const std::vector<ApproxVector>& a,
                                         const std::vector<VisitEvent>& b);

// t-gaps between consecutive events: (1/d) log(q_{k+1}/q_k), as doubles
// computed from the exact rational ratios.
std::vector<double> gaps(const std::vector<VisitEvent>& events, int d);

struct D1Report {
  bool in_section = false;  // |x| <= r0 = 1
  bool in_S_eps = false;
  bool in_B = false;
};
// Explicit d=1 chart: Lambda_{x,y} = u_x h_y Z^2 is in B iff
// -1/(1+y) <= x <= 1/(2-y); S_eps membership is |x| <= eps.
D1Report d1_coordinates(const Rat& x, const Rat& y, const Rat& eps);
// Independent check by direct lattice-point enumeration in the cylinders.
D1Report d1_coordinates_by_enumeration(const Rat& x, const Rat& y, const Rat& eps);

}  // namespace dapx
