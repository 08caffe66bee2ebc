#pragma once

#include "dapx/approx.hpp"
#include "dapx/lattice.hpp"

namespace dapx {

struct NotPrimitive : std::runtime_error {
  NotPrimitive() : std::runtime_error("vector is not primitive") {}
};
struct ZeroVertical : std::runtime_error {
  ZeroVertical() : std::runtime_error("last coordinate must be nonzero") {}
};
struct NotCoprime : std::runtime_error {
  NotCoprime() : std::runtime_error("gcd(p, q) != 1") {}
};

// Covolume-one projection of Z^n along v onto the horizontal space.
// True basis = q^(1/d) * basis_h with rational basis_h, so the Gram of the
// true basis is q^(2/d) * gram: exact for every d via d-th powers.
struct ProjectedLattice {
  int d = 0;
  Int q;               // |v_n|
  RatMat basis_h;      // columns: horizontal projections of the completion, reduced
  RatMat gram;         // Gram of basis_h (reduced, canonical form)
  std::vector<Int> source_v;
  bool reduced = true;

  // (sys)^(2d) = q^2 * shortest_sq(gram)^d, exact; also a double for histograms
  Rat sys_pow2d() const;
  double sys() const;
};

struct LiftClass {
  ProjectedLattice lattice;
  std::vector<Rat> functional;  // f'(column_i) for the reduced basis columns, in [-1/2, 1/2)
  bool normalized = true;
  // d = 1 chart: the shortest-gcd-solution coordinate of Cor-RR form,
  // equal to the class up to the (p,q)-dependent chart change
  Rat torus_d1 = 0;
};

struct ResidueProfile {
  std::vector<long> moduli;
  std::vector<std::vector<long>> residues;  // per modulus: (p_1..p_d, q) mod m
  std::vector<bool> primitive_mod_m;
};

// v = (p_1..p_d, q) primitive with q >= 1.
ProjectedLattice project_lattice(const std::vector<Int>& v);
LiftClass lift_functional(const std::vector<Int>& v);

// Lattice basis of the reconstruction {|v_n|^(-1/d) x + (f(x)+k) v}: columns
// b_i = basis_h_i + f_i v and v itself; exact rational n x n matrix.
RatMat reconstruct(const ProjectedLattice& lat, const std::vector<Rat>& f,
                   const std::vector<Int>& v);

// The same data as (project_lattice, lift_functional), built independently by
// deforming Z^n with the shear u(-p/q) and the diagonal rescaling that moves v
// to e_n; used to check the commuting diagram.
LiftClass rho_lift(const std::vector<Int>& v);

struct GcdLift {
  Int u, v;   // shortest solution of p*v - q*u = 1
  Rat f;      // (p u + q v) / (p^2 + q^2), reduced into [-1/2, 1/2)
};
GcdLift shortest_gcd_lift(const Int& p, const Int& q);

ResidueProfile residues(const std::vector<Int>& v, const std::vector<long>& moduli);

// primitive (mod m) by definition: no b outside (Z/m)^x with a = b * d
bool primitive_mod_m_by_definition(const std::vector<long>& cls, long m);

struct ShapeInvariants {
  Rat sys_pow2d;  // (sys)^(2d) exact
  double sys;
  RatMat gram_scaled_numeric_free;  // reduced gram of basis_h (scale q^(2/d) implied)
  Int q;
};
ShapeInvariants shape_invariants(const ProjectedLattice& lat);

// Exact equality of two lattices given by rational bases (columns).
bool lattices_equal(const RatMat& a, const RatMat& b);

}  // namespace dapx
