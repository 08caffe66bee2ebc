#include "dapx/exact.hpp"

#include <sstream>

namespace dapx {

ExactReal::ExactReal(FieldElem e) {
  if (e.is_rational())
    v_ = e.rational_value();
  else
    v_ = std::move(e);
}

namespace {

// Lift operands into a common representation and apply.
template <class FR, class FF>
ExactReal combine(const ExactReal& a, const ExactReal& b, FR&& on_rat, FF&& on_field) {
  if (a.is_rational() && b.is_rational()) return ExactReal(on_rat(a.rat(), b.rat()));
  if (!a.is_rational() && !b.is_rational()) {
    if (a.elem().field() != b.elem().field()) {
      if (!NumberField::same_field(*a.elem().field(), *b.elem().field()))
        throw IncompatibleFields();
      FieldElem bred(a.elem().field(), b.elem().coeffs());
      return ExactReal(on_field(a.elem(), bred));
    }
    return ExactReal(on_field(a.elem(), b.elem()));
  }
  if (a.is_rational()) {
    FieldElem ar = FieldElem::from_rat(b.elem().field(), a.rat());
    return ExactReal(on_field(ar, b.elem()));
  }
  FieldElem br = FieldElem::from_rat(a.elem().field(), b.rat());
  return ExactReal(on_field(a.elem(), br));
}

}  // namespace

ExactReal ExactReal::operator+(const ExactReal& o) const {
  return combine(*this, o, [](const Rat& x, const Rat& y) { return Rat(x + y); },
                 [](const FieldElem& x, const FieldElem& y) { return x + y; });
}
ExactReal ExactReal::operator-(const ExactReal& o) const {
  return combine(*this, o, [](const Rat& x, const Rat& y) { return Rat(x - y); },
                 [](const FieldElem& x, const FieldElem& y) { return x - y; });
}
ExactReal ExactReal::operator*(const ExactReal& o) const {
  return combine(*this, o, [](const Rat& x, const Rat& y) { return Rat(x * y); },
                 [](const FieldElem& x, const FieldElem& y) { return x * y; });
}
ExactReal ExactReal::operator/(const ExactReal& o) const {
  if (o.sign() == 0) throw DivideByZero();
  return combine(*this, o, [](const Rat& x, const Rat& y) { return Rat(x / y); },
                 [](const FieldElem& x, const FieldElem& y) { return x / y; });
}
ExactReal ExactReal::operator-() const {
  if (is_rational()) return ExactReal(Rat(-rat()));
  return ExactReal(-elem());
}

int ExactReal::sign() const { return is_rational() ? sgn(rat()) : elem().sign(); }

RatInterval ExactReal::enclosure(long bits) const {
  if (is_rational()) return RatInterval::point(rat());
  return elem().enclosure(bits);
}

double ExactReal::to_double() const {
  if (is_rational()) return rat().get_d();
  return elem().enclosure(64).mid().get_d();
}

Ordering compare(const ExactReal& a, const ExactReal& b) {
  int s = (a - b).sign();
  return s < 0 ? Ordering::Less : (s == 0 ? Ordering::Equal : Ordering::Greater);
}

ExactReal abs(const ExactReal& x) { return x.sign() < 0 ? -x : x; }

ExactReal pow(const ExactReal& x, unsigned long e) {
  ExactReal r(Rat(1)), base = x;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

}  // namespace

ExactReal parse_exact(const std::string& text) {
  std::string s = strip(text);
  if (s.rfind("alg(", 0) == 0) {
    if (s.back() != ')') throw std::invalid_argument("unterminated alg(...)");
    std::string body = s.substr(4, s.size() - 5);
    auto lb = body.find('['), rb = body.find(']');
    if (body.find("coeffs=") == std::string::npos || lb == std::string::npos ||
        rb == std::string::npos)
      throw std::invalid_argument("alg(...) needs coeffs=[...]");
    std::vector<Rat> coeffs;
    {
      std::stringstream ss(body.substr(lb + 1, rb - lb - 1));
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        auto r = parse_rat(strip(tok));
        if (!r) throw std::invalid_argument("bad coefficient in alg(...)");
        coeffs.push_back(*r);
      }
    }
    Rat lo, hi;
    bool have_lo = false, have_hi = false;
    {
      std::string rest = body.substr(rb + 1);
      std::stringstream ss(rest);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        tok = strip(tok);
        if (tok.empty()) continue;
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("expected key=value");
        std::string key = strip(tok.substr(0, eq));
        auto val = parse_rat(strip(tok.substr(eq + 1)));
        if (!val) throw std::invalid_argument("bad bound in alg(...)");
        if (key == "lo") {
          lo = *val;
          have_lo = true;
        } else if (key == "hi") {
          hi = *val;
          have_hi = true;
        } else {
          throw std::invalid_argument("unknown key in alg(...): " + key);
        }
      }
    }
    if (!have_lo || !have_hi) throw std::invalid_argument("alg(...) needs lo= and hi=");
    Poly p{std::move(coeffs)};
    if (p.degree() < 1) throw std::invalid_argument("constant polynomial in alg(...)");
    if (p.degree() == 1) {
      Rat root = -p.c[0] / p.c[1];
      if (!(lo <= root && root <= hi))
        throw std::invalid_argument("alg(...) interval must contain exactly one root");
      return ExactReal(root);
    }
    Poly sf = squarefree_part(p);
    auto zc = primitive_int_coeffs(sf);
    Poly pz = poly_from_int(zc);
    if (has_rational_root(pz))
      throw std::invalid_argument("alg(...) polynomial has a rational factor");
    auto roots = isolate_real_roots(pz);
    int inside = 0;
    RatInterval chosen;
    for (auto& r : roots) {
      // refine the isolator into [lo,hi] if it straddles the ends
      AlgebraicReal ar(pz, r);
      RatInterval e = ar.refine((hi - lo) / 4);
      if (e.lo >= lo && e.hi <= hi) {
        ++inside;
        chosen = r;
      } else if (!(e.hi < lo || e.lo > hi)) {
        throw std::invalid_argument("alg(...) interval does not isolate: root near boundary");
      }
    }
    if (inside != 1) throw std::invalid_argument("alg(...) interval must contain exactly one root");
    // verify irreducibility (cheap certificates; reducible inputs rejected above
    // for rational factors; higher-degree factors are caught here)
    if (!modp_irreducible_certificate(pz)) {
      auto all = isolate_real_roots(pz);
      if ((int)all.size() == pz.degree() && has_factor_from_real_roots(pz, all))
        throw std::invalid_argument("alg(...) polynomial is reducible");
      // not totally real and no certificate: accept only with a proof
      if ((int)all.size() != pz.degree())
        throw std::invalid_argument("cannot certify irreducibility of alg(...) polynomial");
    }
    auto field = std::make_shared<NumberField>(pz, chosen);
    return ExactReal(FieldElem::generator(field));
  }
  auto r = parse_rat(s);
  if (!r) throw std::invalid_argument("cannot parse exact real: " + text);
  return ExactReal(*r);
}

std::string serialize_exact(const ExactReal& x) {
  if (x.is_rational()) return rat_to_string(x.rat());
  const FieldElem& e = x.elem();
  // Minimal polynomial of the element: smallest k with a linear dependency
  // among 1, e, ..., e^k, found by exact Gaussian elimination.
  int n = e.field()->degree();
  std::vector<std::vector<Rat>> pows;
  FieldElem acc = FieldElem::from_rat(e.field(), Rat(1));
  pows.push_back(acc.coeffs());
  for (int k = 1; k <= n; ++k) {
    acc = acc * e;
    pows.push_back(acc.coeffs());
  }
  Poly minp;
  for (int k = 1; k <= n && minp.is_zero(); ++k) {
    // solve sum_{j<k} x_j e^j = -e^k exactly
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(k + 1, Rat(0)));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < k; ++j) a[i][j] = pows[j][i];
      a[i][k] = -pows[k][i];
    }
    // row reduce [A | b]
    int row = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < k && row < n; ++col) {
      int pr = -1;
      for (int r = row; r < n; ++r)
        if (a[r][col] != 0) { pr = r; break; }
      if (pr < 0) continue;
      std::swap(a[pr], a[row]);
      Rat inv = 1 / a[row][col];
      for (int c = col; c <= k; ++c) a[row][c] *= inv;
      for (int r = 0; r < n; ++r) {
        if (r == row || a[r][col] == 0) continue;
        Rat f = a[r][col];
        for (int c = col; c <= k; ++c) a[r][c] -= f * a[row][c];
      }
      pivot_col.push_back(col);
      ++row;
    }
    bool consistent = true;
    for (int r = row; r < n; ++r)
      if (a[r][k] != 0) consistent = false;
    if (!consistent) continue;
    std::vector<Rat> coeff(k + 1, Rat(0));
    coeff[k] = 1;
    for (size_t pi = 0; pi < pivot_col.size(); ++pi) coeff[pivot_col[pi]] = -a[pi][k];
    // negate: we solved e^k = sum x_j e^j, so minpoly = y^k - sum x_j y^j
    for (int j = 0; j < k; ++j) coeff[j] = -coeff[j];
    minp = Poly(std::move(coeff));
  }
  if (minp.is_zero()) throw std::logic_error("failed to compute element minpoly");
  auto zc = primitive_int_coeffs(minp);
  Poly pz = poly_from_int(zc);
  // Shrink the printed interval until it isolates this root of the minpoly.
  SturmChain chain(pz);
  long bits = 32;
  RatInterval iv = e.enclosure(bits);
  while (chain.count_roots(iv.lo, iv.hi) != 1) {
    bits *= 2;
    if (bits > precision_cap_bits()) throw PrecisionExhausted();
    iv = e.enclosure(bits);
  }
  std::string s = "alg(coeffs=[";
  for (size_t i = 0; i < zc.size(); ++i) {
    if (i) s += ",";
    s += zc[i].get_str();
  }
  s += "], lo=" + rat_to_string(iv.lo) + ", hi=" + rat_to_string(iv.hi) + ")";
  return s;
}

}  // namespace dapx
