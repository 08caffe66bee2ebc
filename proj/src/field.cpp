#include "dapx/field.hpp"

namespace dapx {

NumberField::NumberField(Poly minpoly, RatInterval root_interval)
    : minpoly_(std::move(minpoly)), isolating_(root_interval), root_(minpoly_, root_interval) {
  int n = minpoly_.degree();
  // beta^n = -(c_0 + c_1 beta + ... + c_{n-1} beta^{n-1}) / c_n, then climb
  std::vector<Rat> base(n);
  for (int i = 0; i < n; ++i) base[i] = -minpoly_.c[i] / minpoly_.lead();
  powers_.push_back(base);
  for (int k = 1; k < n - 1; ++k) {
    const auto& prev = powers_.back();
    std::vector<Rat> next(n, Rat(0));
    // multiply prev by beta: shift, then reduce the overflow coefficient
    Rat overflow = prev[n - 1];
    for (int i = n - 1; i >= 1; --i) next[i] = prev[i - 1];
    next[0] = 0;
    for (int i = 0; i < n; ++i) next[i] += overflow * base[i];
    powers_.push_back(std::move(next));
  }
}

RatInterval NumberField::root_enclosure(long bits) {
  std::lock_guard<std::mutex> lock(mu_);
  return root_.refine_bits(bits);
}

bool NumberField::same_field(NumberField& a, NumberField& b) {
  if (&a == &b) return true;
  if (primitive_int_coeffs(a.minpoly_) != primitive_int_coeffs(b.minpoly_)) return false;
  // same squarefree polynomial: roots are equal or separated
  long bits = 16;
  for (;;) {
    RatInterval ea = a.root_enclosure(bits), eb = b.root_enclosure(bits);
    if (ea.lo >= b.isolating_interval().lo && ea.hi <= b.isolating_interval().hi) return true;
    if (ea.hi < eb.lo || eb.hi < ea.lo) return false;
    bits *= 2;
    if (bits > precision_cap_bits()) throw PrecisionExhausted();
  }
}

FieldElem::FieldElem(FieldPtr field, std::vector<Rat> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  coeffs_.resize(field_->degree(), Rat(0));
}

FieldElem FieldElem::from_rat(const FieldPtr& field, const Rat& r) {
  std::vector<Rat> c(field->degree(), Rat(0));
  c[0] = r;
  return FieldElem(field, std::move(c));
}

FieldElem FieldElem::generator(const FieldPtr& field) {
  std::vector<Rat> c(field->degree(), Rat(0));
  c[1] = 1;
  return FieldElem(field, std::move(c));
}

bool FieldElem::is_zero() const {
  for (const auto& x : coeffs_)
    if (x != 0) return false;
  return true;
}

bool FieldElem::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rat FieldElem::rational_value() const { return coeffs_[0]; }

void FieldElem::check_same(const FieldElem& o) const {
  if (field_ != o.field_) throw IncompatibleFields();
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same(o);
  std::vector<Rat> c = coeffs_;
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
  return FieldElem(field_, std::move(c));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  check_same(o);
  std::vector<Rat> c = coeffs_;
  for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs_[i];
  return FieldElem(field_, std::move(c));
}

FieldElem FieldElem::operator-() const {
  std::vector<Rat> c = coeffs_;
  for (auto& x : c) x = -x;
  return FieldElem(field_, std::move(c));
}

FieldElem FieldElem::operator*(const Rat& s) const {
  std::vector<Rat> c = coeffs_;
  for (auto& x : c) x *= s;
  return FieldElem(field_, std::move(c));
}

FieldElem FieldElem::operator+(const Rat& s) const {
  std::vector<Rat> c = coeffs_;
  c[0] += s;
  return FieldElem(field_, std::move(c));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same(o);
  int n = field_->degree();
  std::vector<Rat> prod(2 * n - 1, Rat(0));
  for (int i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (o.coeffs_[j] == 0) continue;
      prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  std::vector<Rat> c(prod.begin(), prod.begin() + n);
  const auto& pw = field_->power_reductions();
  for (int k = n; k < 2 * n - 1; ++k) {
    if (prod[k] == 0) continue;
    const auto& row = pw[k - n];
    for (int i = 0; i < n; ++i) c[i] += prod[k] * row[i];
  }
  return FieldElem(field_, std::move(c));
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
  check_same(o);
  if (o.is_zero()) throw DivideByZero();
  // invert via extended Euclid in Q[x] modulo the minpoly
  Poly f = field_->minpoly().monic();
  Poly g{std::vector<Rat>(o.coeffs_)};
  Poly r0 = f, r1 = g;
  Poly s0, s1{{Rat(1)}};
  while (!r1.is_zero()) {
    auto [q, r2] = r0.divmod(r1);
    Poly s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 = gcd(f, g); irreducible f and deg g < deg f force deg r0 = 0
  Rat inv_lead = 1 / r0.c[0];
  std::vector<Rat> invc(field_->degree(), Rat(0));
  for (size_t i = 0; i < s0.c.size(); ++i) invc[i] = s0.c[i] * inv_lead;
  return *this * FieldElem(field_, std::move(invc));
}

bool FieldElem::operator==(const FieldElem& o) const {
  check_same(o);
  return coeffs_ == o.coeffs_;
}

RatInterval FieldElem::enclosure(long bits) const {
  // Horner in the generator enclosure, refining until narrow enough.
  long root_bits = bits + 16;
  Rat target(Int(1), pow_int(2, bits));
  for (;;) {
    RatInterval b = field_->root_enclosure(root_bits);
    RatInterval acc = RatInterval::point(Rat(0));
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * b + *it;
    if (acc.width() <= target) return acc;
    root_bits *= 2;
    if (root_bits > 64 * (precision_cap_bits() + bits + 64))
      throw PrecisionExhausted();
  }
}

int FieldElem::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return sgn(coeffs_[0]);
  long bits = 32;
  for (;;) {
    RatInterval e = enclosure(bits);
    int s = e.definite_sign();
    if (s != 0) return s;
    if (sgn(e.lo) == 0 && sgn(e.hi) == 0) return 0;
    bits *= 2;
    if (bits > precision_cap_bits()) throw PrecisionExhausted();
  }
}

}  // namespace dapx
