#include "dapx/section.hpp"

#include <cmath>

#include "scan.hpp"

namespace dapx {

Rat default_r0(const NormSpec& spec, int n, const Rat& eps) {
  if (n != spec.dim + 1) throw std::invalid_argument("n must equal dim + 1");
  int d = spec.dim;
  Rat vol_exact;
  FloatInterval vol = ball_volume(spec, &vol_exact, 192);
  Int k;
  if (vol_exact != 0) {
    // smallest k with (k/1000)^d >= 2^(n-1) / V: k^d * Vnum >= 2^(n-1) * Vden * 1000^d
    Int rhs = pow_int(2, n - 1) * vol_exact.get_den() * pow_int(1000, d);
    const Int& vnum = vol_exact.get_num();
    Int root;
    mpz_root(root.get_mpz_t(), Int(ceil_div(rhs, vnum)).get_mpz_t(), d);
    k = root;
    while (pow_int(k, d) * vnum < rhs) ++k;
  } else {
    // enclosure route: k = ceil(1000 * (2^(n-1)/V)^(1/d)) from the upper bound
    Rat vlo = vol.mid_rat() - vol.width_rat();
    Rat bound_pow = pow_rat(Rat(2), n - 1) / vlo;  // upper bound of 2^(n-1)/V
    FloatInterval broot = FloatInterval::from_rat(bound_pow, 192).root_pos(d);
    Rat upper = broot.mid_rat() + broot.width_rat();
    k = ceil_rat(upper * 1000);
  }
  Rat r0(k, 1000);
  r0.canonicalize();
  return r0 < eps ? eps : r0;
}

double VisitEvent::t() const {
  // (1/d) log q via the exact bit length plus a double correction
  long exp2 = (long)mpz_sizeinbase(q.get_mpz_t(), 2) - 1;
  Int shifted = q >> std::max<long>(0, exp2 - 52);
  double mant = shifted.get_d() * std::pow(2.0, std::max<long>(0, exp2 - 52) - exp2);
  return (exp2 * std::log(2.0) + std::log(mant)) / dim;
}

RatInterval VisitEvent::t_enclosure(long bits) const {
  FloatInterval l = FloatInterval::log_of_int(q, bits + 16);
  FloatInterval scaled = l.scale(1.0 / dim);
  Rat m = scaled.mid_rat(), w = scaled.width_rat();
  return {m - w, m + w};
}

std::vector<VisitEvent> visits(const TargetVector& theta, const CrossSectionGeometry& geom,
                               const Int& q_max, int threads) {
  scan::Request req;
  req.theta = &theta;
  req.spec = geom.spec;
  req.q_max = q_max;
  req.bound = geom.r0;
  req.track_best = false;
  req.threads = threads;
  scan::Result r = scan::run(req);
  std::vector<VisitEvent> out;
  out.reserve(r.hits.size());
  unsigned L = disp_norm_power(geom.spec);
  unsigned w = scan::dist_power(geom.spec);
  int d = geom.d();
  for (auto& h : r.hits) {
    VisitEvent e;
    e.dim = d;
    e.q = h.q;
    e.in_sharp = h.solutions_at_q == 1;
    // ||disp||^L = q^(L/d) * dist^L = q^(L/d) * (dist^w)^(L/w)
    ExactReal v = pow(h.dist.value, L / w) * ExactReal(Rat(pow_int(h.q, L / (unsigned)d)));
    e.disp_norm = Magnitude{v, L};
    // cylinder-emptiness: strictly below the record, unique at its q, nearest,
    // and below the shortest nonzero integer vector (the q' = 0 face)
    e.in_B = h.below_record && h.is_nearest && h.solutions_at_q == 1 &&
             compare(h.dist.value, ExactReal(Rat(1))) == Ordering::Less;
    e.p = std::move(h.p);
    out.push_back(std::move(e));
  }
  return out;
}

bool in_B(const TargetVector& theta, const CrossSectionGeometry& geom, const ApproxVector& v) {
  const NormSpec& spec = geom.spec;
  std::vector<ExactReal> diff;
  for (int i = 0; i < spec.dim; ++i)
    diff.push_back(ExactReal(Rat(v.p[i])) - theta.coords[i] * ExactReal(Rat(v.q)));
  Magnitude dist = norm_magnitude(spec, diff);
  // q' = 0 face: a nonzero integer vector of norm <= dist exists iff dist >= 1
  if (compare(dist.value, ExactReal(Rat(1))) != Ordering::Less) return false;
  // q' = q: p must be the unique nearest point
  std::vector<ExactReal> qth;
  for (int i = 0; i < spec.dim; ++i) qth.push_back(theta.coords[i] * ExactReal(Rat(v.q)));
  NearestResult nr = nearest_int_points(spec, qth);
  if (compare(dist, nr.distance) != Ordering::Equal) return false;
  if (nr.points.size() != 1) return false;
  // 1 <= q' < q: closed cylinder must be empty
  for (Int qp = 1; qp < v.q; ++qp) {
    std::vector<ExactReal> y;
    for (int i = 0; i < spec.dim; ++i) y.push_back(theta.coords[i] * ExactReal(Rat(qp)));
    NearestResult pr = nearest_int_points(spec, y);
    if (compare(pr.distance.value, dist.value) != Ordering::Greater) return false;
  }
  return true;
}

std::vector<VisitEvent> subset_filter(const std::vector<VisitEvent>& events,
                                      const CrossSectionGeometry& geom, SectionSubset which,
                                      const Rat& eps) {
  std::vector<VisitEvent> out;
  if (which == SectionSubset::Eps && eps > geom.r0) throw EpsilonExceedsR0();
  for (const auto& e : events) {
    switch (which) {
      case SectionSubset::All: out.push_back(e); break;
      case SectionSubset::Sharp:
        if (e.in_sharp) out.push_back(e);
        break;
      case SectionSubset::B:
        if (e.in_B && e.in_sharp) out.push_back(e);
        break;
      case SectionSubset::Eps: {
        Rat bound = pow_rat(eps, e.disp_norm.power);
        if (compare(e.disp_norm.value, ExactReal(bound)) != Ordering::Greater) out.push_back(e);
        break;
      }
    }
  }
  return out;
}

PrefixAlignment prefix_equivalence_check(const std::vector<ApproxVector>& a,
                                         const std::vector<VisitEvent>& b) {
  PrefixAlignment out;
  size_t i = a.size(), j = b.size();
  size_t matched = 0;
  while (i > 0 && j > 0) {
    const auto& x = a[i - 1];
    const auto& y = b[j - 1];
    if (x.q != y.q || x.p != y.p) break;
    --i;
    --j;
    ++matched;
  }
  if (matched == 0 && !(a.empty() && b.empty())) {
    out.matched = false;
    return out;
  }
  out.matched = true;
  out.index_a = i;
  out.index_b = j;
  return out;
}

std::vector<double> gaps(const std::vector<VisitEvent>& events, int d) {
  std::vector<double> out;
  for (size_t k = 0; k + 1 < events.size(); ++k) {
    Rat ratio(events[k + 1].q, events[k].q);
    ratio.canonicalize();
    out.push_back(std::log(ratio.get_d()) / d);
  }
  return out;
}

D1Report d1_coordinates(const Rat& x, const Rat& y, const Rat& eps) {
  if (!(abs_rat(x) < 1) || y < 0 || y >= 1) throw OutOfChart();
  D1Report r;
  r.in_section = true;  // |x| < 1 = r0
  r.in_S_eps = abs_rat(x) <= eps;
  Rat f1 = Rat(-1) / (1 + y);
  Rat f2 = Rat(1) / (2 - y);
  r.in_B = f1 <= x && x <= f2;
  return r;
}

D1Report d1_coordinates_by_enumeration(const Rat& x, const Rat& y, const Rat& eps) {
  if (!(abs_rat(x) < 1) || y < 0 || y >= 1) throw OutOfChart();
  // Lambda_{x,y} = {(m(1+xy) + nx, my + n)}; v(Lambda) = (x, 1) at (m,n) = (0,1).
  // B fails iff some (m,n) outside {0, +-(0,1)} has |my + n| <= 1 and
  // |m(1+xy) + nx| <= |x|.
  D1Report r;
  r.in_section = true;
  r.in_S_eps = abs_rat(x) <= eps;
  r.in_B = true;
  for (long m = -3; m <= 3; ++m)
    for (long n = -4; n <= 4; ++n) {
      if (m == 0 && (n == 0 || n == 1 || n == -1)) continue;
      Rat vert = Rat(m) * y + Rat(n);
      if (abs_rat(vert) > 1) continue;
      Rat horiz = Rat(m) * (1 + x * y) + Rat(n) * x;
      if (abs_rat(horiz) <= abs_rat(x)) r.in_B = false;
    }
  return r;
}

}  // namespace dapx
