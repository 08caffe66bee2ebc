#include "dapx/realfield.hpp"

namespace dapx {

RatInterval TotallyRealField::root_enclosure(int j, long bits) const {
  if (refiners_.empty()) {
    for (int i = 0; i < degree; ++i)
      refiners_.push_back(std::make_shared<AlgebraicReal>(minpoly, root_isolators[i]));
  }
  return refiners_[j]->refine_bits(bits);
}

RealFieldPtr make_field(const std::vector<Int>& coeffs_desc, int identity_root) {
  if (coeffs_desc.empty() || coeffs_desc.front() == 0)
    throw std::invalid_argument("leading coefficient must be nonzero");
  int n = (int)coeffs_desc.size() - 1;
  if (n < 3) throw DegreeTooSmall();
  if (n > 6) throw std::invalid_argument("degree capped at 6 for desk scale");
  std::vector<Rat> asc(coeffs_desc.size());
  for (size_t i = 0; i < coeffs_desc.size(); ++i) asc[i] = Rat(coeffs_desc[coeffs_desc.size() - 1 - i]);
  Poly p{std::move(asc)};
  Poly pz = poly_from_int(primitive_int_coeffs(p));
  // squarefree (repeated factors mean reducible)
  if (poly_gcd(pz, pz.derivative()).degree() > 0) throw NotIrreducible();
  if (has_rational_root(pz)) throw NotIrreducible();
  auto roots = isolate_real_roots(pz);
  if ((int)roots.size() != n) throw NotTotallyReal();
  if (!modp_irreducible_certificate(pz) && has_factor_from_real_roots(pz, roots))
    throw NotIrreducible();
  auto f = std::make_shared<TotallyRealField>();
  f->minpoly = pz;
  f->degree = n;
  f->root_isolators = roots;
  f->identity_index = identity_root < 0 ? n - 1 : identity_root;
  if (f->identity_index < 0 || f->identity_index >= n)
    throw std::invalid_argument("identity root index out of range");
  f->field = std::make_shared<NumberField>(pz, roots[f->identity_index]);
  return f;
}

TargetVector FieldVector::to_target() const {
  TargetVector t;
  t.field_handle = field->field;
  for (const auto& c : components) t.coords.push_back(ExactReal(c));
  return t;
}

FieldVector standard_vector(const RealFieldPtr& field) {
  FieldVector v;
  v.field = field;
  FieldElem beta = FieldElem::generator(field->field);
  FieldElem acc = beta;
  for (int i = 1; i < field->degree; ++i) {
    v.components.push_back(acc);
    acc = acc * beta;
  }
  v.spanning_certificate = true;  // the power basis spans by definition
  return v;
}

FieldVector custom_vector(const RealFieldPtr& field, const std::vector<std::vector<Rat>>& rows) {
  int n = field->degree, d = n - 1;
  if ((int)rows.size() != d) throw std::invalid_argument("need d = n - 1 component rows");
  FieldVector v;
  v.field = field;
  for (const auto& r : rows) {
    std::vector<Rat> c = r;
    c.resize(n, Rat(0));
    v.components.push_back(FieldElem(field->field, std::move(c)));
  }
  // rank of {1, alpha_1, ..., alpha_d} over Q must be n
  RatMat m(n, std::vector<Rat>(n, Rat(0)));
  m[0][0] = 1;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < n; ++i) m[j][i] = v.components[j - 1].coeffs()[i];
  if (det_rat(m) == 0) throw std::invalid_argument("components do not span the field with 1");
  v.spanning_certificate = true;
  return v;
}

std::vector<RatInterval> geometric_embedding(const RealFieldPtr& field, const FieldElem& e,
                                             long bits) {
  int n = field->degree;
  Poly g{std::vector<Rat>(e.coeffs())};
  std::vector<RatInterval> out;
  for (int j = 0; j < n; ++j) {
    if (j == field->identity_index) continue;
    long rb = bits + 16;
    RatInterval val;
    for (;;) {
      RatInterval root = field->root_enclosure(j, rb);
      val = g.eval(root);
      if (val.width() <= Rat(Int(1), pow_int(2, bits))) break;
      rb *= 2;
      if (rb > 64 * precision_cap_bits()) throw PrecisionExhausted();
    }
    out.push_back(val);
  }
  out.push_back(e.enclosure(bits));  // identity embedding last
  return out;
}

namespace {

// interval determinant with refinement handled by the caller
RatInterval det_interval(std::vector<std::vector<RatInterval>> m) {
  int n = (int)m.size();
  RatInterval det = RatInterval::point(Rat(1));
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[col][r].definite_sign() != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return {Rat(-1), Rat(1)};  // cannot certify; caller refines
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(m[j][piv], m[j][col]);
      det = det * Rat(-1);
    }
    det = det * m[col][col];
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      if (m[col][r].definite_sign() == 0 && m[col][r].lo == 0 && m[col][r].hi == 0) continue;
      // sound quotient enclosure f = m[col][r] / pivot (pivot sign-definite)
      const RatInterval& piv_iv = m[col][col];
      Rat q1 = m[col][r].lo / piv_iv.lo, q2 = m[col][r].lo / piv_iv.hi;
      Rat q3 = m[col][r].hi / piv_iv.lo, q4 = m[col][r].hi / piv_iv.hi;
      Rat qlo = std::min(std::min(q1, q2), std::min(q3, q4));
      Rat qhi = std::max(std::max(q1, q2), std::max(q3, q4));
      RatInterval f{qlo, qhi};
      for (int j = col; j < n; ++j) m[j][r] = m[j][r] - f * m[j][col];
    }
  }
  return det;
}

}  // namespace

GAlphaResult galpha(const FieldVector& v, long bits) {
  if (!v.spanning_certificate) throw std::invalid_argument("spanning certificate required");
  int n = v.field->degree;
  GAlphaResult out;
  long b = bits;
  for (;;) {
    out.cols.clear();
    for (const auto& a : v.components) out.cols.push_back(geometric_embedding(v.field, a, b));
    // last column sigma(1) = (1, ..., 1)
    out.cols.push_back(std::vector<RatInterval>(n, RatInterval::point(Rat(1))));
    out.det = det_interval(out.cols);
    if (out.det.definite_sign() != 0) {
      out.bits_used = b;
      return out;
    }
    b *= 2;
    if (b > 64 * precision_cap_bits()) throw PrecisionExhausted();
  }
}

BAlphaResult Balpha(const FieldVector& v, long bits) {
  if (!v.spanning_certificate) throw std::invalid_argument("spanning certificate required");
  int n = v.field->degree, d = n - 1;
  BAlphaResult out;
  long b = bits;
  for (;;) {
    out.B.assign(d, std::vector<RatInterval>(d));
    for (int i = 0; i < d; ++i) {
      auto emb = geometric_embedding(v.field, v.components[i], b);  // sigma_1..sigma_{n-1}, id
      RatInterval self = emb[n - 1];
      for (int j = 0; j < d; ++j) out.B[i][j] = emb[j] - self;  // column i, row j
    }
    out.det_B = det_interval(out.B);
    if (out.det_B.definite_sign() != 0) break;
    b *= 2;
    if (b > 64 * precision_cap_bits()) throw PrecisionExhausted();
  }
  out.bits_used = b;
  // c1 = |det B|^(-1/n)
  Rat alo = abs_rat(out.det_B.definite_sign() > 0 ? out.det_B.lo : out.det_B.hi);
  Rat ahi = abs_rat(out.det_B.definite_sign() > 0 ? out.det_B.hi : out.det_B.lo);
  if (alo > ahi) std::swap(alo, ahi);
  FloatInterval inv_root =
      FloatInterval::from_rat_interval({alo, ahi}, 256).root_pos(n);
  // c1 = 1 / root
  Rat rlo = inv_root.mid_rat() - inv_root.width_rat();
  Rat rhi = inv_root.mid_rat() + inv_root.width_rat();
  out.c1 = {1 / rhi, 1 / rlo};
  out.hbar.assign(n, std::vector<RatInterval>(n, RatInterval::point(Rat(0))));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) out.hbar[i][j] = out.B[i][j] * out.c1;
  out.hbar[n - 1][n - 1] = out.c1;
  RatInterval dh = det_interval(out.hbar);
  Rat l = abs_rat(dh.lo), h = abs_rat(dh.hi);
  if (l > h) std::swap(l, h);
  if (dh.contains_zero()) l = 0;
  out.det_hbar_abs = {l, h};
  return out;
}

EpsZeroEstimate eps_zero_estimate(const FieldVector& v, const NormSpec& spec, const Int& q_max,
                                  int threads) {
  if (q_max < 100) throw std::invalid_argument("q_max >= 100 required");
  TargetVector theta = v.to_target();
  Rat r0 = default_r0(spec, spec.dim + 1);
  EpsZeroEstimate out;
  for (int attempt = 0; attempt < 4; ++attempt) {
    CrossSectionGeometry geom{spec, r0};
    auto events = visits(theta, geom, q_max, threads);
    out.visit_count = events.size();
    Int tail_from = q_max / 10;
    const VisitEvent* best = nullptr;
    const VisitEvent* tail_best = nullptr;
    for (const auto& e : events) {
      if (!best || compare(e.disp_norm.value, best->disp_norm.value) == Ordering::Less) best = &e;
      if (e.q > tail_from &&
          (!tail_best || compare(e.disp_norm.value, tail_best->disp_norm.value) == Ordering::Less))
        tail_best = &e;
    }
    if (!best || !tail_best) {
      r0 = r0 * 2;  // widen the section until the tail window is populated
      continue;
    }
    unsigned L = best->disp_norm.power;
    auto to_double = [&](const Magnitude& m) {
      RatInterval e = m.value.enclosure(96);
      return FloatInterval::from_rat_interval(e, 128).root_pos(L).mid_double();
    };
    out.running_min = to_double(best->disp_norm);
    out.tail_min = to_double(tail_best->disp_norm);
    out.argmin_q = best->q;
    out.tail_argmin_q = tail_best->q;
    return out;
  }
  throw std::runtime_error("eps_zero_estimate: no visits found in the tail window");
}

}  // namespace dapx
