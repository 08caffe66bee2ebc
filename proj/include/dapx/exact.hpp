#pragma once

#include <variant>

#include "dapx/field.hpp"

namespace dapx {

enum class Ordering { Less, Equal, Greater };

// Exact real: a rational or an element of one shared number field.
// Mixed-field arithmetic is rejected (IncompatibleFields); rationals embed
// into any field on demand.
class ExactReal {
 public:
  ExactReal() : v_(Rat(0)) {}
  ExactReal(Rat r) : v_(std::move(r)) {}            // NOLINT: implicit by design
  ExactReal(FieldElem e);                            // NOLINT: collapses rational elements
  ExactReal(long n) : v_(Rat(n)) {}                  // NOLINT

  bool is_rational() const { return std::holds_alternative<Rat>(v_); }
  const Rat& rat() const { return std::get<Rat>(v_); }
  const FieldElem& elem() const { return std::get<FieldElem>(v_); }
  FieldPtr field() const { return is_rational() ? nullptr : elem().field(); }

  ExactReal operator+(const ExactReal& o) const;
  ExactReal operator-(const ExactReal& o) const;
  ExactReal operator*(const ExactReal& o) const;
  ExactReal operator/(const ExactReal& o) const;
  ExactReal operator-() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  RatInterval enclosure(long bits) const;
  double to_double() const;

 private:
  std::variant<Rat, FieldElem> v_;
};

Ordering compare(const ExactReal& a, const ExactReal& b);
inline bool less(const ExactReal& a, const ExactReal& b) {
  return compare(a, b) == Ordering::Less;
}

ExactReal abs(const ExactReal& x);
ExactReal pow(const ExactReal& x, unsigned long e);

// Textual target grammar: decimal literals, "a/b" rationals, and
// alg(coeffs=[c0,...,cn], lo=a, hi=b) for real algebraic numbers (coeffs in
// ascending degree; [lo,hi] must isolate exactly one real root).
// Linear algebraics collapse to rationals. Serialization round-trips exactly.
ExactReal parse_exact(const std::string& text);
std::string serialize_exact(const ExactReal& x);

}  // namespace dapx
