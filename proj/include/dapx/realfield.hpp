#pragma once

#include "dapx/section.hpp"

namespace dapx {

struct NotIrreducible : std::runtime_error {
  NotIrreducible() : std::runtime_error("polynomial is reducible over Q") {}
};
struct NotTotallyReal : std::runtime_error {
  NotTotallyReal() : std::runtime_error("polynomial is not totally real") {}
};
struct DegreeTooSmall : std::runtime_error {
  DegreeTooSmall() : std::runtime_error("need degree >= 3 (d >= 2)") {}
};

// Totally real number field presented by an integer minpoly with all roots
// real; the identity embedding is realized by a chosen root (default largest).
class TotallyRealField {
 public:
  Poly minpoly;                       // primitive integer coefficients
  int degree = 0;                     // n
  std::vector<RatInterval> root_isolators;  // ascending
  int identity_index = 0;
  FieldPtr field;                     // Q(beta) with beta = the identity root

  // enclosure of root j (ascending order) with width <= 2^-bits
  RatInterval root_enclosure(int j, long bits) const;

 private:
  mutable std::vector<std::shared_ptr<AlgebraicReal>> refiners_;
  friend std::shared_ptr<TotallyRealField> make_field(const std::vector<Int>&, int);
};

using RealFieldPtr = std::shared_ptr<TotallyRealField>;

// coeffs: leading coefficient first (descending powers), as on the CLI.
// identity_root: index into the ascending real roots; -1 picks the largest.
RealFieldPtr make_field(const std::vector<Int>& coeffs_desc, int identity_root = -1);

struct FieldVector {
  RealFieldPtr field;
  std::vector<FieldElem> components;  // alpha_1 .. alpha_d, d = n - 1
  bool spanning_certificate = false;

  TargetVector to_target() const;
};

// alpha_i = beta^i (power vector): spanning holds by the power basis.
FieldVector standard_vector(const RealFieldPtr& field);
// components given by coefficient rows in the power basis; spanning certified
// by an exact rank computation, throws if it fails.
FieldVector custom_vector(const RealFieldPtr& field, const std::vector<std::vector<Rat>>& rows);

// sigma(beta) = (sigma_1(beta), ..., sigma_{n-1}(beta), beta): all embeddings,
// identity last, as certified enclosures of width <= 2^-bits.
std::vector<RatInterval> geometric_embedding(const RealFieldPtr& field, const FieldElem& e,
                                             long bits);

struct GAlphaResult {
  std::vector<std::vector<RatInterval>> cols;  // n x n, columns sigma(alpha_i), sigma(1)
  RatInterval det;                             // certified nonzero
  long bits_used = 0;
};
GAlphaResult galpha(const FieldVector& v, long bits = 96);

struct BAlphaResult {
  std::vector<std::vector<RatInterval>> B;     // d x d, b_ij = sigma_j(alpha_i) - alpha_i
  RatInterval det_B;                           // certified nonzero
  RatInterval c1;                              // |det B|^(-1/n)
  std::vector<std::vector<RatInterval>> hbar;  // c1 * diag(B, 1), n x n
  RatInterval det_hbar_abs;                    // |det hbar|, should enclose 1
  long bits_used = 0;
};
BAlphaResult Balpha(const FieldVector& v, long bits = 96);

struct EpsZeroEstimate {
  double running_min = 0;   // min over q <= q_max of q^(1/d) <q alpha>
  double tail_min = 0;      // min over q in (q_max/10, q_max]
  Int argmin_q;
  Int tail_argmin_q;
  size_t visit_count = 0;
};
EpsZeroEstimate eps_zero_estimate(const FieldVector& v, const NormSpec& spec, const Int& q_max,
                                  int threads = 1);

}  // namespace dapx
