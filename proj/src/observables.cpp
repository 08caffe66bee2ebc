#include "dapx/observables.hpp"

namespace dapx {

namespace {

Rat reduce_mod1_centered(const Rat& c) {
  // representative in [-1/2, 1/2), half goes down to -1/2
  return c - Rat(floor_rat(c + Rat(1, 2)));
}

void check_v(const std::vector<Int>& v) {
  if (v.size() < 2) throw std::invalid_argument("need n = d+1 >= 2 coordinates");
  if (v.back() == 0) throw ZeroVertical();
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g != 1) throw NotPrimitive();
}

struct ProjectionData {
  ProjectedLattice lat;
  std::vector<Rat> functional;  // on the reduced basis columns
};

ProjectionData project_with_functional(const std::vector<Int>& v) {
  check_v(v);
  int n = (int)v.size(), d = n - 1;
  Int q = abs(v.back());
  IntMat U = unimodular_completion(v);
  // completion columns are U[0..d-1]; U[n-1] == v
  RatMat basis_h(d, std::vector<Rat>(d));
  std::vector<Rat> c(d);
  for (int j = 0; j < d; ++j) {
    Rat cj = Rat(U[j][n - 1], v.back());
    cj.canonicalize();
    c[j] = cj;
    for (int i = 0; i < d; ++i) basis_h[j][i] = Rat(U[j][i]) - cj * Rat(v[i]);
  }
  RatMat gram = gram_of(basis_h);
  IntMat T = reduce_gram(gram);
  // transform basis columns and functional values by T
  RatMat rb(d, std::vector<Rat>(d, Rat(0)));
  std::vector<Rat> rc(d, Rat(0));
  for (int j = 0; j < d; ++j)
    for (int r = 0; r < d; ++r) {
      if (T[j][r] == 0) continue;
      Rat t(T[j][r]);
      for (int i = 0; i < d; ++i) rb[j][i] += t * basis_h[r][i];
      rc[j] += t * c[r];
    }
  ProjectionData out;
  out.lat.d = d;
  out.lat.q = q;
  out.lat.basis_h = std::move(rb);
  out.lat.gram = std::move(gram);
  out.lat.source_v = v;
  out.lat.reduced = true;
  out.functional = std::move(rc);
  return out;
}

}  // namespace

Rat ProjectedLattice::sys_pow2d() const {
  Rat r = shortest_sq(gram);
  return Rat(q * q) * pow_rat(r, d);
}

double ProjectedLattice::sys() const {
  FloatInterval f = FloatInterval::from_rat(sys_pow2d(), 96).root_pos(2 * (unsigned long)d);
  return f.mid_double();
}

ProjectedLattice project_lattice(const std::vector<Int>& v) {
  return project_with_functional(v).lat;
}

LiftClass lift_functional(const std::vector<Int>& v) {
  ProjectionData pd = project_with_functional(v);
  LiftClass out;
  out.lattice = std::move(pd.lat);
  out.functional.reserve(pd.functional.size());
  for (const auto& c : pd.functional) out.functional.push_back(reduce_mod1_centered(c));
  out.normalized = true;
  if (out.lattice.d == 1) {
    GcdLift gl = shortest_gcd_lift(v[0], v[1]);
    out.torus_d1 = gl.f;
  }
  return out;
}

RatMat reconstruct(const ProjectedLattice& lat, const std::vector<Rat>& f,
                   const std::vector<Int>& v) {
  if (v.back() == 0) throw ZeroVertical();
  int d = lat.d, n = d + 1;
  RatMat basis(n, std::vector<Rat>(n, Rat(0)));
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) basis[j][i] = lat.basis_h[j][i] + f[j] * Rat(v[i]);
    basis[j][n - 1] = f[j] * Rat(v[n - 1]);
  }
  for (int i = 0; i < n; ++i) basis[n - 1][i] = Rat(v[i]);
  return basis;
}

LiftClass rho_lift(const std::vector<Int>& v) {
  check_v(v);
  int n = (int)v.size(), d = n - 1;
  if (v.back() < 1) throw ZeroVertical();  // rho is stated for q >= 1
  Int q = v.back();
  // L = a_t u(-p/q) Z^n has columns (q^(1/d) e_i, 0) and (-q^(1/d) p/q, 1/q).
  // e_n lies in L with coefficient vector exactly v; complete and read off the
  // horizontal parts (over the common scale q^(1/d)) and vertical parts.
  IntMat U = unimodular_completion(v);
  RatMat basis_h(d, std::vector<Rat>(d));
  std::vector<Rat> c(d);
  for (int j = 0; j < d; ++j) {
    Rat cn = Rat(U[j][n - 1], q);
    cn.canonicalize();
    c[j] = cn;  // vertical part of the j-th basis vector = lift value
    for (int i = 0; i < d; ++i) basis_h[j][i] = Rat(U[j][i]) - cn * Rat(v[i]);
  }
  RatMat gram = gram_of(basis_h);
  IntMat T = reduce_gram(gram);
  RatMat rb(d, std::vector<Rat>(d, Rat(0)));
  std::vector<Rat> rc(d, Rat(0));
  for (int j = 0; j < d; ++j)
    for (int r = 0; r < d; ++r) {
      if (T[j][r] == 0) continue;
      Rat t(T[j][r]);
      for (int i = 0; i < d; ++i) rb[j][i] += t * basis_h[r][i];
      rc[j] += t * c[r];
    }
  LiftClass out;
  out.lattice.d = d;
  out.lattice.q = q;
  out.lattice.basis_h = std::move(rb);
  out.lattice.gram = std::move(gram);
  out.lattice.source_v = v;
  out.lattice.reduced = true;
  for (const auto& cc : rc) out.functional.push_back(reduce_mod1_centered(cc));
  out.normalized = true;
  if (d == 1) out.torus_d1 = shortest_gcd_lift(v[0], v[1]).f;
  return out;
}

GcdLift shortest_gcd_lift(const Int& p, const Int& q) {
  if (gcd(p, q) != 1) throw NotCoprime();
  Int g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  // p s + q t = 1; we need p v - q u = 1: (u, v) = (-t, s)
  Int u0 = -t, v0 = s;
  Rat denom(p * p + q * q);
  Rat f0 = Rat(p * u0 + q * v0) / denom;
  Int k = floor_rat(f0 + Rat(1, 2));
  Rat f = f0 - Rat(k);  // class representative in [-1/2, 1/2)
  Int k_choice = -k;
  if (f == Rat(-1, 2)) k_choice = -k + 1;  // boundary tie: pick the vector with f >= 0
  GcdLift out;
  out.u = u0 + k_choice * p;
  out.v = v0 + k_choice * q;
  out.f = f;
  return out;
}

ResidueProfile residues(const std::vector<Int>& v, const std::vector<long>& moduli) {
  ResidueProfile out;
  for (long m : moduli) {
    if (m < 2) throw std::invalid_argument("modulus must be >= 2");
    std::vector<long> cls;
    Int g = m;
    for (const auto& x : v) {
      long r = (long)mpz_fdiv_ui(x.get_mpz_t(), (unsigned long)m);
      cls.push_back(r);
      g = gcd(g, Int(r));
    }
    out.moduli.push_back(m);
    out.residues.push_back(std::move(cls));
    out.primitive_mod_m.push_back(g == 1);
  }
  return out;
}

bool primitive_mod_m_by_definition(const std::vector<long>& cls, long m) {
  // a is non-primitive iff a = b * d for some non-unit b
  for (long b = 0; b < m; ++b) {
    long gb = (long)mpz_gcd_ui(nullptr, Int(m).get_mpz_t(), (unsigned long)(b == 0 ? m : b));
    if (gb == 1) continue;  // b is a unit
    // does there exist d with a_i = b d_i (mod m) for all i?
    bool all = true;
    for (long a : cls) {
      bool solvable = false;
      for (long dd = 0; dd < m && !solvable; ++dd)
        if ((b * dd) % m == a) solvable = true;
      if (!solvable) {
        all = false;
        break;
      }
    }
    if (all) return false;
  }
  return true;
}

ShapeInvariants shape_invariants(const ProjectedLattice& lat) {
  ShapeInvariants s;
  s.sys_pow2d = lat.sys_pow2d();
  s.sys = lat.sys();
  s.gram_scaled_numeric_free = lat.gram;
  s.q = lat.q;
  return s;
}

bool lattices_equal(const RatMat& a, const RatMat& b) {
  int d = (int)a.size();
  // solve a X = b exactly; lattices equal iff X is integer with |det X| = 1
  RatMat aug = a;
  RatMat x = b;
  // Gaussian elimination on columns-as-vectors: build matrix form
  // rows i, columns j: aug[j][i]
  std::vector<int> perm(d);
  for (int i = 0; i < d; ++i) perm[i] = i;
  RatMat M(d, std::vector<Rat>(d));
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) M[j][i] = aug[j][i];
  RatMat R = x;
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    for (int r = col; r < d; ++r)
      if (M[col][r] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return false;
    if (piv != col) {
      for (int j = 0; j < d; ++j) std::swap(M[j][piv], M[j][col]);
      for (int j = 0; j < d; ++j) std::swap(R[j][piv], R[j][col]);
    }
    Rat inv = 1 / M[col][col];
    for (int j = 0; j < d; ++j) {
      M[j][col] *= inv;
      R[j][col] *= inv;
    }
    for (int r = 0; r < d; ++r) {
      if (r == col || M[col][r] == 0) continue;
      Rat fpiv = M[col][r];
      for (int j = 0; j < d; ++j) {
        M[j][r] -= fpiv * M[j][col];
        R[j][r] -= fpiv * R[j][col];
      }
    }
  }
  IntMat X(d, std::vector<Int>(d));
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) {
      if (R[j][i].get_den() != 1) return false;
      X[j][i] = R[j][i].get_num();
    }
  Int dx = det_int(X);
  return dx == 1 || dx == -1;
}

}  // namespace dapx
