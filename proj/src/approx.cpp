#include "dapx/approx.hpp"

#include "scan.hpp"

namespace dapx {

unsigned disp_norm_power(const NormSpec& spec) {
  // ||disp||^L with L = lcm(d, w): exact because q^(L/d) and dist^L are exact
  unsigned w = scan::dist_power(spec);
  unsigned d = (unsigned)spec.dim;
  return d / std::__gcd(d, w) * w;
}

Magnitude disp_norm_magnitude(const NormSpec& spec, const TargetVector& theta,
                              const std::vector<Int>& p, const Int& q) {
  std::vector<ExactReal> e;
  for (int i = 0; i < spec.dim; ++i)
    e.push_back(ExactReal(Rat(p[i])) - theta.coords[i] * ExactReal(Rat(q)));
  Magnitude m = norm_magnitude(spec, e);  // value = dist^w
  unsigned L = disp_norm_power(spec);
  // ||disp||^L = q^(L/d) * dist^L = q^(L/d) * value^(L/w)
  ExactReal v = pow(m.value, L / m.power) * ExactReal(Rat(pow_int(q, L / (unsigned)spec.dim)));
  return {v, L};
}

Displacement displacement(const TargetVector& theta, const ApproxVector& v, const NormSpec& spec,
                          long bits) {
  int d = theta.dim();
  Displacement out;
  // q^(1/d) as an enclosure
  FloatInterval qroot = FloatInterval::from_rat(Rat(v.q), bits + 32).root_pos(d);
  Rat qlo = qroot.mid_rat() - qroot.width_rat(), qhi = qroot.mid_rat() + qroot.width_rat();
  if (qlo < 0) qlo = 0;
  for (int i = 0; i < d; ++i) {
    ExactReal diff = ExactReal(Rat(v.p[i])) - theta.coords[i] * ExactReal(Rat(v.q));
    RatInterval e = diff.enclosure(bits + 16);
    RatInterval scaled = RatInterval{qlo, qhi} * e;  // interval product handles signs
    out.coords.push_back(scaled);
  }
  out.norm_power = disp_norm_magnitude(spec, theta, v.p, v.q);
  return out;
}

namespace {

ApproxVector make_entry(scan::BestHit&& bh) {
  ApproxVector v;
  v.q = bh.q;
  v.p = bh.minimizers.front();
  v.tie = bh.minimizers.size() > 1;
  if (v.tie) v.tied_p = std::move(bh.minimizers);
  Int g = v.q;
  for (const auto& x : v.p) g = gcd(g, x);
  v.primitive = g == 1;
  return v;
}

}  // namespace

ApproxSequence best_approximations(const TargetVector& theta, const NormSpec& spec,
                                   const Int& q_max, int threads) {
  scan::Request req;
  req.theta = &theta;
  req.spec = spec;
  req.q_max = q_max;
  req.track_best = true;
  req.threads = threads;
  scan::Result r = scan::run(req);
  ApproxSequence seq;
  seq.q_max_scanned = q_max;
  for (auto& b : r.bests) seq.entries.push_back(make_entry(std::move(b)));
  seq.terminated = theta.all_rational() && q_max >= theta.denominator_lcm();
  return seq;
}

ApproxSequence eps_approximations(const TargetVector& theta, const NormSpec& spec, const Rat& eps,
                                  const Int& q_max, int threads) {
  if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
  scan::Request req;
  req.theta = &theta;
  req.spec = spec;
  req.q_max = q_max;
  req.bound = eps;
  req.threads = threads;
  scan::Result r = scan::run(req);
  ApproxSequence seq;
  seq.q_max_scanned = q_max;
  for (auto& h : r.hits) {
    ApproxVector v;
    v.q = h.q;
    v.p = std::move(h.p);
    v.primitive = true;  // engines emit primitive hits only
    v.tie = false;
    seq.entries.push_back(std::move(v));
  }
  if (theta.all_rational()) {
    // provably complete once q_max passes both the zero-distance denominator
    // and the largest q a nonzero distance (>= 1/D) can reach the bound at
    Int D = theta.denominator_lcm();
    Rat epsD = eps * Rat(D);
    Int qbound = floor_div(pow_int(epsD.get_num(), spec.dim), pow_int(epsD.get_den(), spec.dim));
    seq.terminated = q_max >= D && q_max >= qbound;
  }
  return seq;
}

bool is_best(const TargetVector& theta, const NormSpec& spec, const ApproxVector& v) {
  if (v.q < 1) return false;
  // dist(v) must equal <q theta>
  std::vector<ExactReal> qth;
  for (int i = 0; i < spec.dim; ++i) qth.push_back(theta.coords[i] * ExactReal(Rat(v.q)));
  NearestResult nr = nearest_int_points(spec, qth);
  std::vector<ExactReal> diff;
  for (int i = 0; i < spec.dim; ++i) diff.push_back(qth[i] - ExactReal(Rat(v.p[i])));
  Magnitude dv = norm_magnitude(spec, diff);
  if (compare(dv, nr.distance) != Ordering::Equal) return false;
  // strict improvement over every smaller q
  for (Int qp = 1; qp < v.q; ++qp) {
    std::vector<ExactReal> y;
    for (int i = 0; i < spec.dim; ++i) y.push_back(theta.coords[i] * ExactReal(Rat(qp)));
    NearestResult pr = nearest_int_points(spec, y);
    if (compare(dv.value, pr.distance.value) != Ordering::Less) return false;
  }
  return true;
}

}  // namespace dapx
