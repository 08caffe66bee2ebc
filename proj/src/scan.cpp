#include "scan.hpp"

#include <algorithm>
#include <thread>

namespace dapx::scan {

unsigned dist_power(const NormSpec& spec) {
  switch (spec.kind) {
    case NormKind::Sup:
    case NormKind::L1: return 1;
    case NormKind::Euclidean: return 2;
    case NormKind::Lp:
      if (spec.p.get_den() == 1 && spec.p.get_num() % 2 == 0) return (unsigned)spec.p.get_num().get_ui();
      throw UnsupportedExact();
  }
  throw std::logic_error("unreachable");
}

namespace {

// ---------- shared emission plumbing ----------

bool vec_primitive(const std::vector<Int>& p, const Int& q) {
  Int g = q;
  for (const auto& x : p) g = gcd(g, x);
  return g == 1;
}

struct RawHit {
  Int q;
  std::vector<Int> p;
  Rat dist_value;  // ||p - q theta||^w as an exact rational (rational engine)
  ExactReal dist_exact;  // field engine fills this instead
  bool exact_is_field = false;
  bool is_nearest = true;
  bool below_record = false;
  // merge bookkeeping: raw numerator for record comparisons (rational engine)
  Int rawN;
};

struct RawBest {
  Int q;
  std::vector<std::vector<Int>> minimizers;
  Rat dist_value;
  ExactReal dist_exact;
  bool exact_is_field = false;
  Int rawN;
};

struct ChunkOut {
  std::vector<RawHit> hits;
  std::vector<RawBest> records;  // strictly improving within the chunk
};

// membership exponents: N^(d/g) * q^(w/g) * Rden^(wd/g) <= Rnum^(wd/g) * D^(wd/g)
struct MemberTest {
  unsigned ed, ew;  // d/g, w/g
  Int rhs;          // Rnum^(wd/g) * Dscale^(wd/g)
  Int rden_pow;     // Rden^(wd/g)
  bool enabled = false;

  void init(unsigned w, unsigned d, const Rat& R, const Int& Dscale_pow_w) {
    // Dscale_pow_w = D^w: the dist numerator N sits over D^w
    unsigned g = std::__gcd(w, d);
    ed = d / g;
    ew = w / g;
    // condition: dist^w = N / D^w;  q^(1/d) dist <= R
    //   <=> N^(d/g) * q^(w/g) * Rden^(w*d/g) <= Rnum^(w*d/g) * (D^w)^(d/g)
    rhs = pow_int(R.get_num(), (unsigned long)w * ed) * pow_int(Dscale_pow_w, ed);
    rden_pow = pow_int(R.get_den(), (unsigned long)w * ed);
    enabled = true;
  }
  // lhs: N over D^w
  bool pass(const Int& N, const Int& q) const {
    Int lhs = pow_int(N, ed) * pow_int(q, ew) * rden_pow;
    return lhs <= rhs;
  }
};

// ---------- rational engine ----------

struct RationalEngine {
  const Request& req;
  int d;
  unsigned w;
  Int D;                    // common denominator
  std::vector<Int> A;      // fractional numerators, in [0, D)
  std::vector<Int> Ifloor;  // integer parts of theta
  MemberTest member;
  Int q_wide;               // q <= q_wide: enumerate non-nearest candidates
  long window;              // coordinate offset window for the wide branch

  explicit RationalEngine(const Request& r) : req(r) {
    d = r.theta->dim();
    w = dist_power(r.spec);
    D = r.theta->denominator_lcm();
    for (const auto& c : r.theta->coords) {
      const Rat& x = c.rat();
      Int ip = floor_rat(x);
      Ifloor.push_back(ip);
      Rat frac = x - Rat(ip);
      A.push_back(Int(frac.get_num() * (D / frac.get_den())));
    }
    if (r.bound) {
      member.init(w, d, *r.bound, pow_int(D, w));
      // radius R / q^(1/d) >= 1/2  <=>  q <= (2R)^d
      Rat twoR = *r.bound * 2;
      Int num = pow_int(twoR.get_num(), d), den = pow_int(twoR.get_den(), d);
      q_wide = floor_div(num, den);
      window = (long)std::max<long>(1, (long)ceil_rat(*r.bound).get_si() + 1);
    } else {
      q_wide = 0;
      window = 0;
    }
  }

  Int combineN(const std::vector<Int>& m) const {
    switch (req.spec.kind) {
      case NormKind::Sup: {
        Int best = m[0];
        for (int i = 1; i < d; ++i)
          if (m[i] > best) best = m[i];
        return best;
      }
      case NormKind::L1: {
        Int s = m[0];
        for (int i = 1; i < d; ++i) s += m[i];
        return s;
      }
      case NormKind::Euclidean: {
        Int s = m[0] * m[0];
        for (int i = 1; i < d; ++i) s += m[i] * m[i];
        return s;
      }
      case NormKind::Lp: {
        Int s = pow_int(m[0], w);
        for (int i = 1; i < d; ++i) s += pow_int(m[i], w);
        return s;
      }
    }
    throw std::logic_error("unreachable");
  }

  Rat dist_value_of(const Int& N) const { return Rat(N, pow_int(D, w)); }

  // nearest k_i and p_i from the fractional numerator c_i at step q
  std::vector<Int> nearest_p(const Int& q, const std::vector<Int>& c,
                             const std::vector<int>& choice) const {
    std::vector<Int> p(d);
    for (int i = 0; i < d; ++i) {
      Int full = q * A[i];
      Int base = (full - c[i]) / D;
      Int two_c = c[i] * 2;
      int up = two_c > D ? 1 : (two_c < D ? 0 : choice[i]);
      p[i] = base + up + q * Ifloor[i];
    }
    return p;
  }

  ChunkOut run_chunk(const Int& q_from, const Int& q_to) const {
    ChunkOut out;
    std::vector<Int> c(d);
    for (int i = 0; i < d; ++i) c[i] = (q_from - 1) * A[i] % D;
    std::optional<Int> record;  // chunk-local record numerator
    std::vector<Int> m(d);
    for (Int q = q_from; q <= q_to; ++q) {
      for (int i = 0; i < d; ++i) {
        c[i] += A[i];
        if (c[i] >= D) c[i] -= D;
        Int other = D - c[i];
        m[i] = c[i] <= other ? c[i] : other;
      }
      Int N = combineN(m);
      bool improves = !record || N < *record;
      bool tied_coord = false;
      for (int i = 0; i < d; ++i)
        if (c[i] * 2 == D) tied_coord = true;

      if (req.track_best && improves) {
        RawBest rb;
        rb.q = q;
        rb.rawN = N;
        rb.dist_value = dist_value_of(N);
        if (!tied_coord) {
          rb.minimizers.push_back(nearest_p(q, c, std::vector<int>(d, 0)));
        } else {
          // cross product over tied coordinates
          std::vector<int> choice(d, 0);
          std::vector<int> tied;
          for (int i = 0; i < d; ++i)
            if (c[i] * 2 == D) tied.push_back(i);
          for (unsigned msk = 0; msk < (1u << tied.size()); ++msk) {
            for (size_t t = 0; t < tied.size(); ++t) choice[tied[t]] = (msk >> t) & 1;
            rb.minimizers.push_back(nearest_p(q, c, choice));
          }
          std::sort(rb.minimizers.begin(), rb.minimizers.end());
        }
        out.records.push_back(std::move(rb));
        record = N;
      } else if (!req.track_best && improves) {
        // hits still need record bookkeeping
        RawBest rb;
        rb.q = q;
        rb.rawN = N;
        out.records.push_back(std::move(rb));
        record = N;
      }

      if (!req.bound) continue;

      if (q <= q_wide) {
        // wide branch: enumerate all candidate integer points in the window
        std::vector<std::vector<Int>> cands;
        std::vector<Int> mm(d);
        std::vector<long> offs(d, -window);
        for (;;) {
          bool any = true;
          for (int i = 0; i < d && any; ++i) {
            Int diff = c[i] - Int(offs[i]) * D;
            mm[i] = abs(diff);
          }
          Int Ncand = combineN(mm);
          if (member.pass(Ncand, q)) {
            std::vector<Int> p(d);
            for (int i = 0; i < d; ++i) {
              Int full = q * A[i];
              Int base = (full - c[i]) / D;
              p[i] = base + Int(offs[i]) + q * Ifloor[i];
            }
            if (vec_primitive(p, q)) {
              RawHit h;
              h.q = q;
              h.rawN = Ncand;
              h.dist_value = dist_value_of(Ncand);
              h.is_nearest = (Ncand == N);
              h.p = std::move(p);
              out.hits.push_back(std::move(h));
            }
          }
          int i = 0;
          while (i < d && offs[i] == window + 1) offs[i++] = -window;
          if (i == d) break;
          ++offs[i];
        }
      } else {
        // nearest-only branch (ties cannot reach the bound here)
        if (member.pass(N, q)) {
          std::vector<Int> p = nearest_p(q, c, std::vector<int>(d, 0));
          if (vec_primitive(p, q)) {
            RawHit h;
            h.q = q;
            h.rawN = N;
            h.dist_value = dist_value_of(N);
            h.is_nearest = true;
            h.p = std::move(p);
            out.hits.push_back(std::move(h));
          }
        }
      }
    }
    return out;
  }
};

}  // namespace

// ---------- field (enclosure) engine ----------

namespace {

struct FieldEngine {
  const Request& req;
  int d;
  unsigned w;
  long P;            // fractional-part fixed-point precision
  Int scale;         // 2^P
  Int half_scale;    // 2^(P-1)
  MemberTest member_exact;  // exact test on rationals, used by the fallback

  // per-coordinate: exact rational channel or dyadic interval channel
  struct Coord {
    bool rational;
    // rational channel
    Int num, den, cnum;  // frac = num/den, running cnum = q*num mod den
    // dyadic channel
    Int lo, hi;    // running enclosure of frac(q * theta_i) * 2^P, may exceed scale until shifted
    Int tlo, thi;  // enclosure of frac(theta_i) * 2^P
    Int wraps;     // subtracted multiples of the scale
    Int ifloor;    // floor(theta_i)
  };
  std::vector<Coord> coords;

  Rat bound_rhs_exact;          // R^(w d / g), exact, for the fallback comparison
  Int rhs_lo, rhs_hi;           // dyadic bracket of the membership RHS at scale^(w * d/g)
  Int rden_pow;                 // Rden^(w d / g), multiplies the dyadic lhs
  unsigned ed, ew;
  Int q_wide;
  long window;

  explicit FieldEngine(const Request& r) : req(r) {
    d = r.theta->dim();
    w = dist_power(r.spec);
    long qbits = mpz_sizeinbase(r.q_max.get_mpz_t(), 2);
    P = qbits + 192;
    scale = pow_int(2, P);
    half_scale = scale / 2;
    for (const auto& th : r.theta->coords) {
      Coord co;
      if (th.is_rational()) {
        co.rational = true;
        co.ifloor = floor_rat(th.rat());
        Rat frac = th.rat() - Rat(co.ifloor);
        co.den = frac.get_den();
        co.num = frac.get_num();
        co.cnum = 0;
      } else {
        co.rational = false;
        RatInterval e = th.elem().enclosure(P + 8);
        Int fl = floor_rat(e.lo);
        if (floor_rat(e.hi) != fl) {
          // straddles an integer; irrational, so refinement resolves it
          e = th.elem().enclosure(P + 64);
          fl = floor_rat(e.lo);
          if (floor_rat(e.hi) != fl) throw PrecisionExhausted();
        }
        co.ifloor = fl;
        Rat flo = e.lo - Rat(fl), fhi = e.hi - Rat(fl);
        co.tlo = floor_rat(flo * Rat(scale));
        co.thi = ceil_rat(fhi * Rat(scale));
        co.lo = 0;
        co.hi = 0;
        co.wraps = 0;
      }
      coords.push_back(std::move(co));
    }
    unsigned g = std::__gcd(w, (unsigned)d);
    ed = d / g;
    ew = w / g;
    if (r.bound) {
      const Rat& R = *r.bound;
      // exact RHS: (Rnum^w * D^w)^(d/g) with D = scale (dyadic channel) — the
      // dyadic channel compares N_enclosure (over scale^w) directly:
      //   N^(d/g) * q^(w/g) * Rden^(wd/g) <= Rnum^(wd/g) * scale^(w d/g)
      Int rhs = pow_int(R.get_num(), (unsigned long)w * ed) * pow_int(scale, (unsigned long)w * ed);
      rhs_lo = rhs;
      rhs_hi = rhs;
      rden_pow = pow_int(R.get_den(), (unsigned long)w * ed);
      bound_rhs_exact = pow_rat(R, (unsigned long)w * ed);
      Rat twoR = R * 2;
      q_wide = floor_div(pow_int(twoR.get_num(), d), pow_int(twoR.get_den(), d));
      window = (long)std::max<long>(1, (long)ceil_rat(R).get_si() + 1);
    } else {
      q_wide = 0;
      window = 0;
    }
  }

  // exact distance magnitude ||p - q theta||^w via field arithmetic
  ExactReal exact_dist(const Int& q, const std::vector<Int>& p) const {
    std::vector<ExactReal> e;
    for (int i = 0; i < d; ++i)
      e.push_back(req.theta->coords[i] * ExactReal(Rat(q)) - ExactReal(Rat(p[i])));
    return norm_magnitude(req.spec, e).value;
  }

  bool member_pass_exact(const ExactReal& distw, const Int& q) const {
    // distw^(d/g) * q^(w/g) <= R^(w d / g)
    ExactReal lhs = pow(distw, ed) * ExactReal(Rat(pow_int(q, ew)));
    return compare(lhs, ExactReal(bound_rhs_exact)) != Ordering::Greater;
  }

  struct DistIv {
    Int lo, hi;  // N enclosure over scale^w
  };

  // per-coordinate |frac| distance enclosure over `scale`
  void coord_dist(const Coord& co, Int& mlo, Int& mhi) const {
    if (co.rational) {
      // exact rational distance num/den: round outward onto the dyadic grid
      Int other = co.den - co.cnum;
      const Int& mnum = co.cnum <= other ? co.cnum : other;
      // m = mnum/den; over scale: mnum * scale / den
      Int t = mnum * scale;
      mlo = floor_div(t, co.den);
      mhi = ceil_div(t, co.den);
      return;
    }
    // enclosure [lo, hi] of frac*scale (possibly beyond [0, scale))
    Int klo = floor_div(co.lo * 2 + scale, scale * 2);  // round(lo/scale)
    Int khi = floor_div(co.hi * 2 + scale, scale * 2);
    if (klo == khi) {
      Int a = abs(co.lo - klo * scale), b = abs(co.hi - klo * scale);
      if (sgn(co.lo - klo * scale) != sgn(co.hi - klo * scale)) {
        mlo = 0;
        mhi = std::max(a, b);
      } else {
        mlo = std::min(a, b);
        mhi = std::max(a, b);
      }
    } else {
      // enclosure crosses a half-integer: distance tops out at scale/2
      Int a = abs(co.lo - klo * scale), b = abs(co.hi - khi * scale);
      mlo = std::min(a, b);
      mhi = half_scale;
    }
  }

  DistIv combine(const std::vector<Int>& mlo, const std::vector<Int>& mhi) const {
    DistIv r;
    switch (req.spec.kind) {
      case NormKind::Sup: {
        r.lo = mlo[0];
        r.hi = mhi[0];
        for (int i = 1; i < d; ++i) {
          if (mlo[i] > r.lo) r.lo = mlo[i];
          if (mhi[i] > r.hi) r.hi = mhi[i];
        }
        return r;
      }
      case NormKind::L1: {
        r.lo = mlo[0];
        r.hi = mhi[0];
        for (int i = 1; i < d; ++i) {
          r.lo += mlo[i];
          r.hi += mhi[i];
        }
        return r;
      }
      case NormKind::Euclidean: {
        r.lo = mlo[0] * mlo[0];
        r.hi = mhi[0] * mhi[0];
        for (int i = 1; i < d; ++i) {
          r.lo += mlo[i] * mlo[i];
          r.hi += mhi[i] * mhi[i];
        }
        return r;
      }
      default: throw UnsupportedExact();
    }
  }

  // p of the nearest point; needs the enclosure to determine rounding, falls
  // back to exact arithmetic when it straddles
  std::vector<Int> nearest_p(const Int& q) const {
    std::vector<Int> p(d);
    for (int i = 0; i < d; ++i) {
      const Coord& co = coords[i];
      if (co.rational) {
        Int full = q * co.num;
        Int base = (full - co.cnum) / co.den;
        Int two_c = co.cnum * 2;
        int up = two_c > co.den ? 1 : 0;  // exact half ties take the lower point
        p[i] = base + up + q * co.ifloor;
        continue;
      }
      Int klo = floor_div(co.lo * 2 + scale, scale * 2);
      Int khi = floor_div(co.hi * 2 + scale, scale * 2);
      if (klo != khi) {
        // resolve exactly: compare frac(q theta_i) with k + 1/2
        ExactReal v = req.theta->coords[i] * ExactReal(Rat(q));
        ExactReal t = v - ExactReal(Rat(Int(2 * (co.wraps + klo) + 1) + 2 * q * co.ifloor, Int(2)));
        khi = t.sign() > 0 ? khi : klo;
        klo = khi;
      }
      p[i] = co.wraps + klo + q * co.ifloor;
    }
    return p;
  }

  ChunkOut run(const Int& q_from, const Int& q_to) {
    // initialize running state at q_from - 1
    for (auto& co : coords) {
      if (co.rational) {
        co.cnum = (q_from - 1) * co.num % co.den;
      } else {
        Int qm1 = q_from - 1;
        co.lo = co.tlo * qm1;
        co.hi = co.thi * qm1;
        co.wraps = floor_div(co.lo, scale);
        co.lo -= co.wraps * scale;
        co.hi -= co.wraps * scale;
      }
    }
    ChunkOut out;
    std::optional<ExactReal> record_exact;
    Int rec_lo, rec_hi;  // dyadic cache of the record over scale^w
    bool have_rec = false;
    std::vector<Int> mlo(d), mhi(d);

    for (Int q = q_from; q <= q_to; ++q) {
      for (int i = 0; i < d; ++i) {
        Coord& co = coords[i];
        if (co.rational) {
          co.cnum += co.num;
          if (co.cnum >= co.den) co.cnum -= co.den;
        } else {
          co.lo += co.tlo;
          co.hi += co.thi;
          if (co.lo >= scale) {
            co.lo -= scale;
            co.hi -= scale;
            co.wraps += 1;
          }
        }
        coord_dist(coords[i], mlo[i], mhi[i]);
      }
      DistIv N = combine(mlo, mhi);

      // record comparison: decisive via enclosures, else exact
      int cmp;  // -1: below record, 0: needs exact, 1: not below
      if (!have_rec)
        cmp = -1;
      else if (N.hi < rec_lo)
        cmp = -1;
      else if (N.lo >= rec_hi)
        cmp = 1;
      else
        cmp = 0;
      ExactReal dist_ex;
      bool have_ex = false;
      std::vector<Int> np;
      bool have_np = false;
      if (cmp == 0) {
        np = nearest_p(q);
        have_np = true;
        dist_ex = exact_dist(q, np);
        have_ex = true;
        cmp = compare(dist_ex, *record_exact) == Ordering::Less ? -1 : 1;
      }
      bool improves = cmp == -1;
      if (improves) {
        if (!have_np) {
          np = nearest_p(q);
          have_np = true;
        }
        if (!have_ex) {
          dist_ex = exact_dist(q, np);
          have_ex = true;
        }
        RawBest rb;
        rb.q = q;
        rb.dist_exact = dist_ex;
        rb.exact_is_field = true;
        if (req.track_best) rb.minimizers.push_back(np);
        out.records.push_back(std::move(rb));
        record_exact = dist_ex;
        RatInterval re = dist_ex.enclosure((long)w * P + 8);
        Int sw = pow_int(scale, w);
        rec_lo = floor_rat(re.lo * Rat(sw));
        rec_hi = ceil_rat(re.hi * Rat(sw));
        have_rec = true;
      }

      if (!req.bound) continue;

      auto emit = [&](std::vector<Int> p, const ExactReal& dist, bool nearest) {
        if (!vec_primitive(p, q)) return;
        RawHit h;
        h.q = q;
        h.p = std::move(p);
        h.dist_exact = dist;
        h.exact_is_field = true;
        h.is_nearest = nearest;
        out.hits.push_back(std::move(h));
      };

      if (q <= q_wide) {
        // small q: enumerate the candidate window exactly
        if (!have_np) {
          np = nearest_p(q);
          have_np = true;
        }
        std::vector<long> offs(d, -window);
        for (;;) {
          std::vector<Int> p(d);
          for (int i = 0; i < d; ++i) p[i] = np[i] + Int(offs[i]);
          ExactReal dx = exact_dist(q, p);
          if (member_pass_exact(dx, q)) {
            bool nearest = true;
            if (have_ex)
              nearest = compare(dx, dist_ex) == Ordering::Equal;
            else {
              ExactReal nd = exact_dist(q, np);
              nearest = compare(dx, nd) == Ordering::Equal;
            }
            emit(p, dx, nearest);
          }
          int i = 0;
          while (i < d && offs[i] == window) offs[i++] = -window;
          if (i == d) break;
          ++offs[i];
        }
      } else {
        // decisive enclosure test, exact on the boundary band
        Int lhs_min = pow_int(N.lo, ed) * pow_int(q, ew) * rden_pow;
        Int lhs_max = pow_int(N.hi, ed) * pow_int(q, ew) * rden_pow;
        if (lhs_max <= rhs_lo) {
          // certainly a member
          if (!have_np) {
            np = nearest_p(q);
            have_np = true;
          }
          if (!have_ex) {
            dist_ex = exact_dist(q, np);
            have_ex = true;
          }
          emit(np, dist_ex, true);
        } else if (lhs_min > rhs_hi) {
          // certainly not: even the smallest possible lhs exceeds the bound
        } else {
          // boundary band: exact decision
          if (!have_np) {
            np = nearest_p(q);
            have_np = true;
          }
          if (!have_ex) {
            dist_ex = exact_dist(q, np);
            have_ex = true;
          }
          if (member_pass_exact(dist_ex, q)) emit(np, dist_ex, true);
        }
      }
    }
    return out;
  }
};

}  // namespace

// ---------- merge and public entry ----------

Result run(const Request& req) {
  if (req.theta == nullptr || req.theta->dim() != req.spec.dim)
    throw std::invalid_argument("scan: dimension mismatch");
  if (req.q_max < 1) throw std::invalid_argument("scan: q_max >= 1 required");

  bool rational = req.theta->all_rational();
  std::vector<ChunkOut> chunks;
  int nthreads = std::max(1, req.threads);
  Int total = req.q_max;
  int nchunks = rational ? std::max(1, nthreads) : 1;
  if (Int(nchunks) > total) nchunks = 1;

  if (rational) {
    RationalEngine eng(req);
    chunks.resize(nchunks);
    std::vector<std::thread> pool;
    Int step = total / nchunks;
    for (int t = 0; t < nchunks; ++t) {
      Int from = Int(t) * step + 1;
      Int to = t == nchunks - 1 ? total : Int(t + 1) * step;
      pool.emplace_back([&eng, &chunks, t, from, to]() { chunks[t] = eng.run_chunk(from, to); });
    }
    for (auto& th : pool) th.join();
  } else {
    FieldEngine eng(req);
    chunks.push_back(eng.run(1, total));
  }

  // merge with global record replay
  Result res;
  std::optional<Int> recN;
  std::optional<ExactReal> recX;
  unsigned w = dist_power(req.spec);
  for (auto& ch : chunks) {
    size_t ri = 0, hi_ = 0;
    auto rec_below_hit = [&](const RawHit& h) {
      if (rational) return !recN || h.rawN < *recN;
      return !recX || compare(h.dist_exact, *recX) == Ordering::Less;
    };
    while (ri < ch.records.size() || hi_ < ch.hits.size()) {
      Int qr = ri < ch.records.size() ? ch.records[ri].q : Int(-1);
      Int qh = hi_ < ch.hits.size() ? ch.hits[hi_].q : Int(-1);
      bool take_hit;
      if (qh < 0)
        take_hit = false;
      else if (qr < 0)
        take_hit = true;
      else
        take_hit = qh <= qr;  // hits at q before records at q: record excludes same-q
      if (take_hit) {
        RawHit& h = ch.hits[hi_++];
        h.below_record = rec_below_hit(h);
        Hit out;
        out.q = h.q;
        out.p = std::move(h.p);
        out.dist = Magnitude{h.exact_is_field ? h.dist_exact : ExactReal(h.dist_value), w};
        out.is_nearest = h.is_nearest;
        out.below_record = h.below_record;
        out.solutions_at_q = 1;
        res.hits.push_back(std::move(out));
      } else {
        RawBest& b = ch.records[ri++];
        bool improves;
        if (rational)
          improves = !recN || b.rawN < *recN;
        else
          improves = !recX || compare(b.dist_exact, *recX) == Ordering::Less;
        if (improves) {
          if (rational)
            recN = b.rawN;
          else
            recX = b.dist_exact;
          if (req.track_best) {
            BestHit bh;
            bh.q = b.q;
            bh.minimizers = std::move(b.minimizers);
            bh.dist = Magnitude{b.exact_is_field ? b.dist_exact : ExactReal(b.dist_value), w};
            res.bests.push_back(std::move(bh));
          }
        }
      }
    }
  }
  // fill solutions_at_q by grouping equal q
  for (size_t i = 0; i < res.hits.size();) {
    size_t j = i;
    while (j < res.hits.size() && res.hits[j].q == res.hits[i].q) ++j;
    for (size_t k = i; k < j; ++k) res.hits[k].solutions_at_q = (int)(j - i);
    // sort the group by p for deterministic order
    std::sort(res.hits.begin() + i, res.hits.begin() + j,
              [](const Hit& a, const Hit& b) { return a.p < b.p; });
    i = j;
  }
  return res;
}

}  // namespace dapx::scan
