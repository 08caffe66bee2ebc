#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "dapx/algebraic.hpp"

namespace dapx {

struct DivideByZero : std::runtime_error {
  DivideByZero() : std::runtime_error("division by certified zero") {}
};
struct IncompatibleFields : std::runtime_error {
  IncompatibleFields() : std::runtime_error("operands live in different number fields") {}
};

// A number field Q(beta) presented by an irreducible primitive integer minpoly
// and an isolated real root beta. Elements are polynomials in beta of degree < n.
class NumberField {
 public:
  NumberField(Poly minpoly, RatInterval root_interval);

  int degree() const { return minpoly_.degree(); }
  const Poly& minpoly() const { return minpoly_; }

  // Enclosure of beta with width <= 2^-bits. Serialized internally.
  RatInterval root_enclosure(long bits);
  const RatInterval& isolating_interval() const { return isolating_; }

  // True iff both fields present the same minpoly and isolate the same root.
  static bool same_field(NumberField& a, NumberField& b);

  // rows 0..n-2: coefficients of beta^(n+i) reduced to degree < n
  const std::vector<std::vector<Rat>>& power_reductions() const { return powers_; }

 private:
  Poly minpoly_;
  RatInterval isolating_;
  AlgebraicReal root_;
  std::vector<std::vector<Rat>> powers_;
  std::mutex mu_;
};

using FieldPtr = std::shared_ptr<NumberField>;

// Element of a number field; empty field pointer is disallowed (rationals are
// represented by the caller, see exact.hpp).
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(FieldPtr field, std::vector<Rat> coeffs);
  static FieldElem from_rat(const FieldPtr& field, const Rat& r);
  static FieldElem generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const;  // valid when is_rational()

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;  // DivideByZero on zero divisor
  FieldElem operator-() const;
  FieldElem operator*(const Rat& s) const;
  FieldElem operator+(const Rat& s) const;

  bool operator==(const FieldElem& o) const;

  // Exact sign; refines the generator enclosure as needed.
  int sign() const;
  // Enclosure of the real value with width <= 2^-bits.
  RatInterval enclosure(long bits) const;

 private:
  void check_same(const FieldElem& o) const;
  FieldPtr field_;
  std::vector<Rat> coeffs_;
};

}  // namespace dapx
