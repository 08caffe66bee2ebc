#pragma once

#include <mpfr.h>

#include <stdexcept>
#include <string>

#include "dapx/bigint.hpp"

namespace dapx {

// Closed interval with exact rational endpoints.
struct RatInterval {
  Rat lo, hi;

  RatInterval() : lo(0), hi(0) {}
  RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}
  static RatInterval point(const Rat& x) { return {x, x}; }

  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  bool is_point() const { return lo == hi; }

  RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
  RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
  RatInterval operator*(const RatInterval& o) const {
    Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    Rat mn = a, mx = a;
    for (const Rat* v : {&b, &c, &d}) {
      if (*v < mn) mn = *v;
      if (*v > mx) mx = *v;
    }
    return {mn, mx};
  }
  RatInterval operator*(const Rat& s) const {
    return s >= 0 ? RatInterval{lo * s, hi * s} : RatInterval{hi * s, lo * s};
  }
  RatInterval operator+(const Rat& s) const { return {lo + s, hi + s}; }
  RatInterval operator-(const Rat& s) const { return {lo - s, hi - s}; }

  // sign of every point if uniform, 0 if the interval straddles zero
  int definite_sign() const {
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
    return 0;
  }
};

// Outward-rounded interval on top of MPFR, for logs and transcendental constants.
class FloatInterval {
 public:
  explicit FloatInterval(mpfr_prec_t prec = 128) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }
  FloatInterval(const FloatInterval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  FloatInterval& operator=(const FloatInterval& o) {
    if (this != &o) {
      mpfr_set_prec(lo_, o.prec_);
      mpfr_set_prec(hi_, o.prec_);
      prec_ = o.prec_;
      mpfr_set(lo_, o.lo_, MPFR_RNDD);
      mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
  }
  ~FloatInterval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  static FloatInterval from_rat(const Rat& r, mpfr_prec_t prec = 128) {
    FloatInterval x(prec);
    mpfr_set_q(x.lo_, r.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(x.hi_, r.get_mpq_t(), MPFR_RNDU);
    return x;
  }
  static FloatInterval from_rat_interval(const RatInterval& r, mpfr_prec_t prec = 128) {
    FloatInterval x(prec);
    mpfr_set_q(x.lo_, r.lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(x.hi_, r.hi.get_mpq_t(), MPFR_RNDU);
    return x;
  }
  static FloatInterval log_of_int(const Int& n, mpfr_prec_t prec = 128) {
    FloatInterval x(prec);
    mpfr_t t;
    mpfr_init2(t, prec + 32);
    mpfr_set_z(t, n.get_mpz_t(), MPFR_RNDD);
    mpfr_log(x.lo_, t, MPFR_RNDD);
    mpfr_set_z(t, n.get_mpz_t(), MPFR_RNDU);
    mpfr_log(x.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return x;
  }
  static FloatInterval pi(mpfr_prec_t prec = 128) {
    FloatInterval x(prec);
    mpfr_const_pi(x.lo_, MPFR_RNDD);
    mpfr_const_pi(x.hi_, MPFR_RNDU);
    return x;
  }

  FloatInterval operator+(const FloatInterval& o) const {
    FloatInterval r(prec_);
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
  }
  FloatInterval operator-(const FloatInterval& o) const {
    FloatInterval r(prec_);
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
  }
  FloatInterval mul_pos(const FloatInterval& o) const {  // both operands >= 0
    FloatInterval r(prec_);
    mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_mul(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
  }
  FloatInterval div_pos(const FloatInterval& o) const {  // o > 0
    FloatInterval r(prec_);
    mpfr_div(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_div(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
  }
  FloatInterval scale(double s) const {
    FloatInterval r(prec_);
    if (s >= 0) {
      mpfr_mul_d(r.lo_, lo_, s, MPFR_RNDD);
      mpfr_mul_d(r.hi_, hi_, s, MPFR_RNDU);
    } else {
      mpfr_mul_d(r.lo_, hi_, s, MPFR_RNDD);
      mpfr_mul_d(r.hi_, lo_, s, MPFR_RNDU);
    }
    return r;
  }
  // x^(1/k) for x >= 0
  FloatInterval root_pos(unsigned long k) const {
    FloatInterval r(prec_);
    mpfr_rootn_ui(r.lo_, lo_, k, MPFR_RNDD);
    mpfr_rootn_ui(r.hi_, hi_, k, MPFR_RNDU);
    return r;
  }

  double mid_double() const {
    mpfr_t m;
    mpfr_init2(m, prec_);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    double d = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return d;
  }
  Rat mid_rat() const {
    mpq_t q;
    mpq_init(q);
    mpfr_t m;
    mpfr_init2(m, prec_);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    mpfr_get_q(q, m);
    Rat r(q);
    mpq_clear(q);
    mpfr_clear(m);
    return r;
  }
  Rat width_rat() const {
    mpfr_t w;
    mpfr_init2(w, prec_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    mpq_t q;
    mpq_init(q);
    mpfr_get_q(q, w);
    Rat r(q);
    mpq_clear(q);
    mpfr_clear(w);
    return r;
  }

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_, hi_;
};

// 18 significant digits from a certified rational enclosure; throws if the
// enclosure is too wide to pin them down.
std::string enclosure_to_decimal(const RatInterval& iv, int sig_digits = 18);

}  // namespace dapx
