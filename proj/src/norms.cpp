#include "dapx/norms.hpp"

#include <algorithm>

namespace dapx {

NormSpec NormSpec::parse(const std::string& selector, int dim) {
  NormSpec s;
  s.dim = dim;
  if (selector == "euclid")
    s.kind = NormKind::Euclidean;
  else if (selector == "sup")
    s.kind = NormKind::Sup;
  else if (selector == "l1")
    s.kind = NormKind::L1;
  else if (selector.rfind("lp:", 0) == 0) {
    s.kind = NormKind::Lp;
    auto p = parse_rat(selector.substr(3));
    if (!p || !(*p > 1)) throw std::invalid_argument("lp:<p> needs rational p > 1");
    s.p = *p;
  } else {
    throw std::invalid_argument("unknown norm selector: " + selector);
  }
  return s;
}

std::string NormSpec::selector() const {
  switch (kind) {
    case NormKind::Euclidean: return "euclid";
    case NormKind::Sup: return "sup";
    case NormKind::L1: return "l1";
    case NormKind::Lp: return "lp:" + rat_to_string(p);
  }
  return "?";
}

Magnitude norm_magnitude(const NormSpec& spec, const std::vector<ExactReal>& x) {
  if ((int)x.size() != spec.dim) throw std::invalid_argument("dimension mismatch");
  switch (spec.kind) {
    case NormKind::Sup: {
      ExactReal best = abs(x[0]);
      for (size_t i = 1; i < x.size(); ++i) {
        ExactReal a = abs(x[i]);
        if (less(best, a)) best = a;
      }
      return {best, 1};
    }
    case NormKind::L1: {
      ExactReal s = abs(x[0]);
      for (size_t i = 1; i < x.size(); ++i) s = s + abs(x[i]);
      return {s, 1};
    }
    case NormKind::Euclidean: {
      ExactReal s = x[0] * x[0];
      for (size_t i = 1; i < x.size(); ++i) s = s + x[i] * x[i];
      return {s, 2};
    }
    case NormKind::Lp: {
      if (spec.p.get_den() != 1 || spec.p.get_num() % 2 != 0) throw UnsupportedExact();
      unsigned long pe = spec.p.get_num().get_ui();
      ExactReal s = pow(x[0], pe);
      for (size_t i = 1; i < x.size(); ++i) s = s + pow(x[i], pe);
      return {s, (unsigned)pe};
    }
  }
  throw std::logic_error("unreachable");
}

FloatInterval norm_interval(const NormSpec& spec, const std::vector<ExactReal>& x, long bits) {
  mpfr_prec_t prec = (mpfr_prec_t)std::max<long>(64, bits + 16);
  auto abs_iv = [&](const ExactReal& v) {
    RatInterval e = v.enclosure(bits + 8);
    Rat lo = e.lo, hi = e.hi;
    if (sgn(lo) < 0 && sgn(hi) < 0) std::swap(lo, hi), lo = -lo, hi = -hi;
    else if (sgn(lo) < 0) {
      hi = std::max(Rat(-lo), hi);
      lo = 0;
    }
    return FloatInterval::from_rat_interval({lo, hi}, prec);
  };
  switch (spec.kind) {
    case NormKind::Sup: {
      RatInterval best{Rat(0), Rat(0)};
      bool first = true;
      for (const auto& v : x) {
        RatInterval e = v.enclosure(bits + 8);
        Rat lo = e.lo < 0 && e.hi < 0 ? -e.hi : (e.lo < 0 ? Rat(0) : e.lo);
        Rat hi = std::max(abs_rat(e.lo), abs_rat(e.hi));
        if (first || lo > best.lo) best.lo = std::max(best.lo, lo);
        best.hi = std::max(best.hi, hi);
        first = false;
      }
      return FloatInterval::from_rat_interval(best, prec);
    }
    case NormKind::L1: {
      FloatInterval s(prec);
      for (const auto& v : x) s = s + abs_iv(v);
      return s;
    }
    case NormKind::Euclidean: {
      Magnitude m = norm_magnitude(spec, x);
      return FloatInterval::from_rat_interval(m.value.enclosure(bits + 8), prec).root_pos(2);
    }
    case NormKind::Lp: {
      // sum |x_i|^p via mpfr pow, then the 1/p root
      FloatInterval s(prec);
      FloatInterval q = FloatInterval::from_rat(spec.p, prec);
      mpfr_t acc_lo, acc_hi, t, pw;
      mpfr_inits2(prec, acc_lo, acc_hi, t, pw, (mpfr_ptr) nullptr);
      mpfr_set_zero(acc_lo, 1);
      mpfr_set_zero(acc_hi, 1);
      mpfr_set_q(pw, spec.p.get_mpq_t(), MPFR_RNDN);
      for (const auto& v : x) {
        RatInterval e = v.enclosure(bits + 8);
        Rat alo = e.lo < 0 && e.hi < 0 ? -e.hi : (e.lo < 0 ? Rat(0) : e.lo);
        Rat ahi = std::max(abs_rat(e.lo), abs_rat(e.hi));
        mpfr_set_q(t, alo.get_mpq_t(), MPFR_RNDD);
        mpfr_pow(t, t, pw, MPFR_RNDD);
        mpfr_add(acc_lo, acc_lo, t, MPFR_RNDD);
        mpfr_set_q(t, ahi.get_mpq_t(), MPFR_RNDU);
        mpfr_pow(t, t, pw, MPFR_RNDU);
        mpfr_add(acc_hi, acc_hi, t, MPFR_RNDU);
      }
      // root: x^(1/p)
      mpfr_t invp;
      mpfr_init2(invp, prec);
      mpfr_set_q(invp, Rat(spec.p.get_den(), spec.p.get_num()).get_mpq_t(), MPFR_RNDN);
      mpfr_pow(acc_lo, acc_lo, invp, MPFR_RNDD);
      mpfr_pow(acc_hi, acc_hi, invp, MPFR_RNDU);
      mpq_t qq;
      mpq_init(qq);
      mpfr_get_q(qq, acc_lo);
      Rat rlo(qq);
      mpfr_get_q(qq, acc_hi);
      Rat rhi(qq);
      mpq_clear(qq);
      mpfr_clears(acc_lo, acc_hi, t, pw, invp, (mpfr_ptr) nullptr);
      return FloatInterval::from_rat_interval({rlo, rhi}, prec);
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

Int floor_exact(const ExactReal& y) {
  if (y.is_rational()) return floor_rat(y.rat());
  long bits = 16;
  for (;;) {
    RatInterval e = y.enclosure(bits);
    Int flo = floor_rat(e.lo), fhi = floor_rat(e.hi);
    if (flo == fhi) return flo;
    // irrational values never sit on integers, so this resolves
    bits *= 2;
    if (bits > precision_cap_bits()) throw PrecisionExhausted();
  }
}

}  // namespace

NearestResult nearest_int_points(const NormSpec& spec, const std::vector<ExactReal>& y) {
  int d = spec.dim;
  if ((int)y.size() != (size_t)d) throw std::invalid_argument("dimension mismatch");
  std::vector<Int> base(d);
  for (int i = 0; i < d; ++i) base[i] = floor_exact(y[i]);

  auto diff = [&](const std::vector<Int>& p) {
    std::vector<ExactReal> v;
    v.reserve(d);
    for (int i = 0; i < d; ++i) v.push_back(y[i] - ExactReal(Rat(p[i])));
    return v;
  };

  // corner pass over the 2^d cell corners
  Magnitude best;
  bool have = false;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    std::vector<Int> p = base;
    for (int i = 0; i < d; ++i)
      if (mask & (1u << i)) p[i] += 1;
    Magnitude m = norm_magnitude(spec, diff(p));
    if (!have || compare(m, best) == Ordering::Less) {
      best = m;
      have = true;
    }
  }

  // box exhaustion: ||p - y||_inf <= r*/c1, certified complete
  EquivalenceConstants eq = equivalence_constants(spec);
  // rational upper bound R >= r*/c1 from an enclosure of r*
  RatInterval renc = best.value.enclosure(32);
  Rat rstar_upper = renc.hi;
  // undo the power: take the power-th root, rounded up
  Rat R;
  {
    FloatInterval f = FloatInterval::from_rat(rstar_upper, 96).root_pos(best.power);
    // outward rational bound
    R = f.mid_rat() + f.width_rat() + Rat(1, 1024);
  }
  R = R / eq.c1;
  std::vector<Int> lo(d), hi(d);
  for (int i = 0; i < d; ++i) {
    // p_i in [y_i - R, y_i + R]; bound via a rational enclosure of y_i
    RatInterval e = y[i].enclosure(16);
    lo[i] = ceil_rat(e.lo - R) - 1;
    hi[i] = floor_rat(e.hi + R) + 1;
  }
  NearestResult out;
  out.distance = best;
  std::vector<Int> p = lo;
  for (;;) {
    Magnitude m = norm_magnitude(spec, diff(p));
    Ordering c = compare(m, out.distance);
    if (c == Ordering::Less) {
      out.distance = m;
      out.points.clear();
      out.points.push_back(p);
    } else if (c == Ordering::Equal) {
      out.points.push_back(p);
    }
    int i = 0;
    while (i < d && p[i] == hi[i]) p[i++] = lo[i];
    if (i == d) break;
    p[i] += 1;
  }
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  return out;
}

FloatInterval ball_volume(const NormSpec& spec, Rat* exact, mpfr_prec_t prec) {
  if (exact) *exact = 0;
  int d = spec.dim;
  switch (spec.kind) {
    case NormKind::Sup: {
      Rat v = pow_rat(Rat(2), d);
      if (exact) *exact = v;
      return FloatInterval::from_rat(v, prec);
    }
    case NormKind::L1: {
      Rat fact = 1;
      for (int i = 2; i <= d; ++i) fact *= i;
      Rat v = pow_rat(Rat(2), d) / fact;
      if (exact) *exact = v;
      return FloatInterval::from_rat(v, prec);
    }
    case NormKind::Euclidean: {
      // pi^(d/2) / Gamma(d/2 + 1)
      mpfr_t lo, hi, g, half;
      mpfr_inits2(prec, lo, hi, g, half, (mpfr_ptr) nullptr);
      mpfr_const_pi(lo, MPFR_RNDD);
      mpfr_const_pi(hi, MPFR_RNDU);
      mpfr_set_d(half, d / 2.0, MPFR_RNDN);
      mpfr_pow(lo, lo, half, MPFR_RNDD);
      mpfr_pow(hi, hi, half, MPFR_RNDU);
      mpfr_set_d(half, d / 2.0 + 1.0, MPFR_RNDN);
      mpfr_gamma(g, half, MPFR_RNDD);
      mpfr_div(hi, hi, g, MPFR_RNDU);
      mpfr_gamma(g, half, MPFR_RNDU);
      mpfr_div(lo, lo, g, MPFR_RNDD);
      mpq_t q;
      mpq_init(q);
      mpfr_get_q(q, lo);
      Rat rlo(q);
      mpfr_get_q(q, hi);
      Rat rhi(q);
      mpq_clear(q);
      mpfr_clears(lo, hi, g, half, (mpfr_ptr) nullptr);
      return FloatInterval::from_rat_interval({rlo, rhi}, prec);
    }
    case NormKind::Lp: {
      // (2 Gamma(1 + 1/p))^d / Gamma(1 + d/p)
      mpfr_t lo, hi, t, arg;
      mpfr_inits2(prec, lo, hi, t, arg, (mpfr_ptr) nullptr);
      Rat invp = Rat(spec.p.get_den(), spec.p.get_num());
      mpfr_set_q(arg, Rat(invp + 1).get_mpq_t(), MPFR_RNDN);
      mpfr_gamma(t, arg, MPFR_RNDD);
      mpfr_mul_ui(t, t, 2, MPFR_RNDD);
      mpfr_pow_ui(lo, t, d, MPFR_RNDD);
      mpfr_gamma(t, arg, MPFR_RNDU);
      mpfr_mul_ui(t, t, 2, MPFR_RNDU);
      mpfr_pow_ui(hi, t, d, MPFR_RNDU);
      mpfr_set_q(arg, Rat(invp * d + 1).get_mpq_t(), MPFR_RNDN);
      mpfr_gamma(t, arg, MPFR_RNDU);
      mpfr_div(lo, lo, t, MPFR_RNDD);
      mpfr_gamma(t, arg, MPFR_RNDD);
      mpfr_div(hi, hi, t, MPFR_RNDU);
      mpq_t q;
      mpq_init(q);
      mpfr_get_q(q, lo);
      Rat rlo(q);
      mpfr_get_q(q, hi);
      Rat rhi(q);
      mpq_clear(q);
      mpfr_clears(lo, hi, t, arg, (mpfr_ptr) nullptr);
      return FloatInterval::from_rat_interval({rlo, rhi}, prec);
    }
  }
  throw std::logic_error("unreachable");
}

EquivalenceConstants equivalence_constants(const NormSpec& spec) {
  EquivalenceConstants e;
  e.c1 = 1;
  int d = spec.dim;
  switch (spec.kind) {
    case NormKind::Sup:
      e.c2_upper = 1;
      e.c2 = FloatInterval::from_rat(Rat(1));
      break;
    case NormKind::L1:
      e.c2_upper = d;
      e.c2 = FloatInterval::from_rat(Rat(d));
      break;
    case NormKind::Euclidean: {
      // sqrt(d), exact when d is a perfect square
      Int s = isqrt_floor(Int(d));
      if (s * s == d) {
        e.c2_upper = Rat(s);
        e.c2 = FloatInterval::from_rat(Rat(s));
      } else {
        FloatInterval f = FloatInterval::from_rat(Rat(d), 96).root_pos(2);
        e.c2 = f;
        e.c2_upper = f.mid_rat() + f.width_rat();
      }
      break;
    }
    case NormKind::Lp: {
      // d^(1/p)
      mpfr_t lo, hi, pw;
      mpfr_inits2(96, lo, hi, pw, (mpfr_ptr) nullptr);
      mpfr_set_q(pw, Rat(spec.p.get_den(), spec.p.get_num()).get_mpq_t(), MPFR_RNDN);
      mpfr_set_ui(lo, d, MPFR_RNDD);
      mpfr_set_ui(hi, d, MPFR_RNDU);
      mpfr_pow(lo, lo, pw, MPFR_RNDD);
      mpfr_pow(hi, hi, pw, MPFR_RNDU);
      mpq_t q;
      mpq_init(q);
      mpfr_get_q(q, lo);
      Rat rlo(q);
      mpfr_get_q(q, hi);
      Rat rhi(q);
      mpq_clear(q);
      mpfr_clears(lo, hi, pw, (mpfr_ptr) nullptr);
      e.c2 = FloatInterval::from_rat_interval({rlo, rhi}, 96);
      e.c2_upper = rhi;
      break;
    }
  }
  return e;
}

}  // namespace dapx
