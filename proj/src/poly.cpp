#include "dapx/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>

namespace dapx {

Rat Poly::eval(const Rat& x) const {
  Rat r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

RatInterval Poly::eval(const RatInterval& x) const {
  RatInterval r = RatInterval::point(Rat(0));
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

Poly Poly::derivative() const {
  std::vector<Rat> d;
  for (size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * Rat((long)i));
  return Poly(std::move(d));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> r(std::max(c.size(), o.c.size()), Rat(0));
  for (size_t i = 0; i < c.size(); ++i) r[i] += c[i];
  for (size_t i = 0; i < o.c.size(); ++i) r[i] += o.c[i];
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Rat> r(std::max(c.size(), o.c.size()), Rat(0));
  for (size_t i = 0; i < c.size(); ++i) r[i] += c[i];
  for (size_t i = 0; i < o.c.size(); ++i) r[i] -= o.c[i];
  return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rat> r(c.size() + o.c.size() - 1, Rat(0));
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
  return Poly(std::move(r));
}

Poly Poly::scale(const Rat& s) const {
  std::vector<Rat> r = c;
  for (auto& x : r) x *= s;
  return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& o) const {
  Poly rem = *this, quot;
  quot.c.assign(c.size(), Rat(0));
  while (!rem.is_zero() && rem.degree() >= o.degree()) {
    int k = rem.degree() - o.degree();
    Rat f = rem.lead() / o.lead();
    quot.c[k] += f;
    for (size_t i = 0; i < o.c.size(); ++i) rem.c[i + k] -= f * o.c[i];
    rem.trim();
  }
  quot.trim();
  return {quot, rem};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scale(1 / lead());
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 1) return p;
  Poly g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) return p;
  return p.divmod(g).first;
}

std::vector<Int> primitive_int_coeffs(const Poly& p) {
  Int den = 1;
  for (const auto& x : p.c) {
    Int d = x.get_den();
    den = den / gcd(den, d) * d;
  }
  std::vector<Int> r;
  for (const auto& x : p.c) r.push_back(Int(x.get_num() * (den / x.get_den())));
  Int g = gcd_all(r);
  if (g == 0) return r;
  for (auto& x : r) x /= g;
  if (!r.empty() && sgn(r.back()) < 0)
    for (auto& x : r) x = -x;
  return r;
}

Poly poly_from_int(const std::vector<Int>& c) {
  std::vector<Rat> r;
  for (const auto& x : c) r.push_back(Rat(x));
  return Poly(std::move(r));
}

Rat cauchy_bound(const Poly& p) {
  Rat b = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rat t = abs_rat(p.c[i] / p.lead());
    if (t > b) b = t;
  }
  return b + 1;
}

SturmChain::SturmChain(const Poly& squarefree) {
  seq.push_back(squarefree);
  seq.push_back(squarefree.derivative());
  while (!seq.back().is_zero()) {
    Poly r = seq[seq.size() - 2].divmod(seq.back()).second;
    seq.push_back(r.scale(Rat(-1)));
  }
  seq.pop_back();
}

int SturmChain::variations(const Rat& x) const {
  int v = 0, prev = 0;
  for (const auto& p : seq) {
    int s = p.is_zero() ? 0 : sgn(p.eval(x));
    if (s != 0) {
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
  }
  return v;
}

int SturmChain::count_roots(const Rat& a, const Rat& b) const {
  return variations(a) - variations(b);
}

std::vector<RatInterval> isolate_real_roots(const Poly& squarefree) {
  std::vector<RatInterval> out;
  if (squarefree.degree() <= 0) return out;
  SturmChain chain(squarefree);
  Rat bound = cauchy_bound(squarefree);
  std::function<void(Rat, Rat, int)> go = [&](Rat lo, Rat hi, int count) {
    if (count == 0) return;
    if (count == 1) {
      out.push_back({lo, hi});
      return;
    }
    Rat mid = (lo + hi) / 2;
    if (squarefree.eval(mid) == 0) {
      // nudge the split point off the root
      mid += (hi - lo) / 64;
    }
    int left = chain.count_roots(lo, mid);
    go(lo, mid, left);
    go(mid, hi, count - left);
  };
  int total = chain.count_roots(-bound, bound);
  go(-bound, bound, total);
  std::sort(out.begin(), out.end(),
            [](const RatInterval& a, const RatInterval& b) { return a.lo < b.lo; });
  return out;
}

Rat resultant(const Poly& a, const Poly& b) {
  int m = a.degree(), n = b.degree();
  if (m < 0 || n < 0) return 0;
  if (m == 0) return pow_rat(a.c[0], n);
  if (n == 0) return pow_rat(b.c[0], m);
  int N = m + n;
  std::vector<std::vector<Rat>> s(N, std::vector<Rat>(N, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = a.c[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = b.c[n - j];
  // Gaussian elimination with exact rationals
  Rat det = 1;
  for (int col = 0; col < N; ++col) {
    int piv = -1;
    for (int r = col; r < N; ++r)
      if (s[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      std::swap(s[piv], s[col]);
      det = -det;
    }
    det *= s[col][col];
    Rat inv = 1 / s[col][col];
    for (int r = col + 1; r < N; ++r) {
      if (s[r][col] == 0) continue;
      Rat f = s[r][col] * inv;
      for (int c2 = col; c2 < N; ++c2) s[r][c2] -= f * s[col][c2];
    }
  }
  return det;
}

Rat discriminant(const Poly& p) {
  int n = p.degree();
  Rat r = resultant(p, p.derivative()) / p.lead();
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

bool has_rational_root(const Poly& p) {
  auto zc = primitive_int_coeffs(p);
  if (zc.empty()) return true;
  if (zc[0] == 0) return true;  // root 0
  // candidates r/s with r | c0, s | lead
  auto divisors = [](const Int& n) {
    std::vector<Int> d;
    Int a = abs(n);
    for (Int i = 1; i * i <= a; ++i)
      if (a % i == 0) {
        d.push_back(i);
        d.push_back(a / i);
      }
    return d;
  };
  Poly pz = poly_from_int(zc);
  for (const Int& r : divisors(zc[0]))
    for (const Int& s : divisors(zc.back())) {
      Rat cand(r, s);
      cand.canonicalize();
      if (pz.eval(cand) == 0 || pz.eval(-cand) == 0) return true;
    }
  return false;
}

namespace {

// polynomial arithmetic in GF(p)[x], dense ascending, p < 2^31
using ModPoly = std::vector<uint64_t>;

void mtrim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly mmod(ModPoly a, const ModPoly& f, uint64_t p) {
  while (a.size() >= f.size() && !a.empty()) {
    uint64_t lead = a.back();
    if (lead == 0) {
      a.pop_back();
      continue;
    }
    // f is monic
    size_t shift = a.size() - f.size();
    for (size_t i = 0; i < f.size(); ++i) {
      uint64_t sub = (lead * f[i]) % p;
      a[shift + i] = (a[shift + i] + p - sub) % p;
    }
    mtrim(a);
  }
  return a;
}

ModPoly mmul(const ModPoly& a, const ModPoly& b, const ModPoly& f, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  mtrim(r);
  return mmod(std::move(r), f, p);
}

ModPoly mgcd(ModPoly a, ModPoly b, uint64_t p) {
  auto inv = [&](uint64_t x) {
    uint64_t r = 1, e = p - 2, base = x % p;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };
  mtrim(a);
  mtrim(b);
  while (!b.empty()) {
    // a mod b, with b made monic on the fly
    uint64_t bi = inv(b.back());
    ModPoly bm = b;
    for (auto& x : bm) x = x * bi % p;
    ModPoly r = mmod(a, bm, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^k) mod f by iterating Frobenius
ModPoly frobenius_power(const ModPoly& f, uint64_t p, int k) {
  ModPoly x = {0, 1};
  ModPoly cur = mmod(x, f, p);
  for (int it = 0; it < k; ++it) {
    // cur := cur^p mod f via square-and-multiply on exponent p
    ModPoly result = {1};
    ModPoly base = cur;
    uint64_t e = p;
    while (e) {
      if (e & 1) result = mmul(result, base, f, p);
      base = mmul(base, base, f, p);
      e >>= 1;
    }
    cur = std::move(result);
  }
  return cur;
}

bool irreducible_mod_p(const std::vector<Int>& zc, uint64_t p) {
  int n = (int)zc.size() - 1;
  if (Int(zc.back() % p) == 0) return false;  // degree drops
  uint64_t leadinv;
  {
    uint64_t lead = mpz_fdiv_ui(zc.back().get_mpz_t(), p);
    uint64_t r = 1, e = p - 2, base = lead;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    leadinv = r;
  }
  ModPoly f(n + 1);
  for (int i = 0; i <= n; ++i) f[i] = mpz_fdiv_ui(zc[i].get_mpz_t(), p) * leadinv % p;
  f[n] = 1;
  // squarefree mod p required for the test
  ModPoly df;
  for (int i = 1; i <= n; ++i) df.push_back(f[i] * (uint64_t)(i % p) % p);
  mtrim(df);
  ModPoly g = mgcd(f, df, p);
  if (g.size() != 1) return false;
  // Rabin: x^(p^n) == x mod f, and gcd(x^(p^(n/t)) - x, f) = 1 for prime t | n
  ModPoly xpn = frobenius_power(f, p, n);
  ModPoly x = {0, 1};
  ModPoly diff = xpn;
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = (diff[1] + p - 1) % p;
  mtrim(diff);
  if (!diff.empty()) return false;
  for (int t = 2; t <= n; ++t) {
    if (n % t != 0) continue;
    bool tprime = true;
    for (int u = 2; u * u <= t; ++u)
      if (t % u == 0) tprime = false;
    if (!tprime) continue;
    ModPoly xq = frobenius_power(f, p, n / t);
    ModPoly d2 = xq;
    if (d2.size() < 2) d2.resize(2, 0);
    d2[1] = (d2[1] + p - 1) % p;
    mtrim(d2);
    ModPoly g2 = mgcd(f, d2, p);
    if (g2.size() != 1) return false;
  }
  return true;
}

}  // namespace

bool modp_irreducible_certificate(const Poly& p, int prime_budget) {
  auto zc = primitive_int_coeffs(p);
  if ((int)zc.size() - 1 < 1) return false;
  static const uint64_t primes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                                    47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101};
  int tried = 0;
  for (uint64_t q : primes) {
    if (tried++ >= prime_budget) break;
    if (irreducible_mod_p(zc, q)) return true;
  }
  return false;
}

bool has_factor_from_real_roots(const Poly& p, const std::vector<RatInterval>& roots) {
  auto zc = primitive_int_coeffs(p);
  int n = (int)zc.size() - 1;
  if ((int)roots.size() != n) return true;  // caller guarantees all-real; mismatch = not our case
  Poly pz = poly_from_int(zc);
  Poly dpz = pz.derivative();
  // refine each root to width 2^-80 (Newton-free bisection is fine at this size)
  std::vector<RatInterval> rs = roots;
  Rat target(Int(1), pow_int(2, 80));
  for (auto& iv : rs) {
    int slo = sgn(pz.eval(iv.lo));
    while (iv.width() > target) {
      Rat m = iv.mid();
      int sm = sgn(pz.eval(m));
      if (sm == 0) {
        iv = RatInterval::point(m);
        break;
      }
      if (sm == slo)
        iv.lo = m;
      else
        iv.hi = m;
    }
  }
  Rat lead(zc.back());
  // subsets of size 1..n/2: build candidate factor lead * prod (x - r_i),
  // round coefficients to nearest integer, verify by exact division
  int half = n / 2;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int bits = __builtin_popcount(mask);
    if (bits < 1 || bits > half) continue;
    std::vector<RatInterval> coeffs = {RatInterval::point(Rat(1))};
    for (int i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) continue;
      // multiply by (x - r_i)
      std::vector<RatInterval> next(coeffs.size() + 1, RatInterval::point(Rat(0)));
      for (size_t j = 0; j < coeffs.size(); ++j) {
        next[j + 1] = next[j + 1] + coeffs[j];
        next[j] = next[j] - coeffs[j] * rs[i];
      }
      coeffs = std::move(next);
    }
    std::vector<Rat> cand(coeffs.size());
    bool ok = true;
    for (size_t j = 0; j + 1 < coeffs.size(); ++j) {
      RatInterval scaled = coeffs[j] * lead;
      Int nearest = round_rat(scaled.mid());
      if (abs_rat(scaled.mid() - Rat(nearest)) > Rat(1, 4)) {
        ok = false;  // not close to an integer: this subset gives no integer factor
        break;
      }
      cand[j] = Rat(nearest) / lead;
    }
    if (!ok) continue;
    cand.back() = 1;
    Poly candidate = Poly(std::move(cand));
    auto [q, r] = pz.divmod(candidate);
    (void)q;
    if (r.is_zero()) return true;
  }
  return false;
}

}  // namespace dapx
