#pragma once

#include <vector>

#include "dapx/interval.hpp"

namespace dapx {

// Dense univariate polynomial over Q, coefficients in ascending degree.
// Invariant: no trailing zero coefficient (zero polynomial = empty vector).
struct Poly {
  std::vector<Rat> c;

  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return (int)c.size() - 1; }  // -1 for zero poly
  const Rat& lead() const { return c.back(); }

  Rat eval(const Rat& x) const;
  RatInterval eval(const RatInterval& x) const;

  Poly derivative() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scale(const Rat& s) const;
  // division with remainder; o must be nonzero
  std::pair<Poly, Poly> divmod(const Poly& o) const;
  Poly monic() const;
};

Poly poly_gcd(Poly a, Poly b);            // monic gcd
Poly squarefree_part(const Poly& p);      // p / gcd(p, p')

// Integer-coefficient view: primitive part with positive leading coefficient.
std::vector<Int> primitive_int_coeffs(const Poly& p);
Poly poly_from_int(const std::vector<Int>& c);

// Cauchy root bound: all real roots lie in (-B, B).
Rat cauchy_bound(const Poly& p);

// Sturm chain of a squarefree polynomial.
struct SturmChain {
  std::vector<Poly> seq;
  explicit SturmChain(const Poly& squarefree);
  int variations(const Rat& x) const;
  // number of roots in (a, b]
  int count_roots(const Rat& a, const Rat& b) const;
};

// Isolating intervals (lo, hi] ... represented closed [lo,hi] with sign change,
// for all real roots of a squarefree polynomial, in ascending order.
std::vector<RatInterval> isolate_real_roots(const Poly& squarefree);

// Resultant of two rational polynomials (Sylvester determinant, exact).
Rat resultant(const Poly& a, const Poly& b);

// Discriminant of p: (-1)^(n(n-1)/2) * res(p, p') / lead(p).
Rat discriminant(const Poly& p);

// Building blocks for the irreducibility decision in realfield::make_field.
bool has_rational_root(const Poly& p);
// Tries small primes for a mod-p irreducibility certificate; true means
// certified irreducible over Q, false means inconclusive.
bool modp_irreducible_certificate(const Poly& p, int prime_budget = 25);
// Exact factor test for polynomials whose roots are all real: reconstructs
// candidate integer factors from root subsets and verifies by division.
// `roots` must isolate every real root. Returns true iff a proper factor exists.
bool has_factor_from_real_roots(const Poly& p, const std::vector<RatInterval>& roots);

}  // namespace dapx
