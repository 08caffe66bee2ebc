#pragma once

#include <vector>

#include "dapx/bigint.hpp"

namespace dapx {

using RatMat = std::vector<std::vector<Rat>>;  // column-major: M[j] is column j
using IntMat = std::vector<std::vector<Int>>;

Rat det_rat(const RatMat& m);
Int det_int(const IntMat& m);
RatMat mat_mul(const RatMat& a, const RatMat& b);
RatMat gram_of(const RatMat& basis);  // basis columns, Gram G_ij = <b_i, b_j>

// Deterministic unimodular completion: U in SL_n(Z) with last column v
// (v primitive). Extended-Euclid row reduction with a fixed pivot order.
IntMat unimodular_completion(const std::vector<Int>& v);

// Exact basis reduction on a rational Gram, d <= 3: Lagrange for d = 2,
// greedy pair/triple reduction for d = 3. Returns U with G' = U^T G U and
// rewrites G in place. The reduced form is canonicalized (diagonal ascending,
// off-diagonal sign convention) up to the finite symmetry left over.
IntMat reduce_gram(RatMat& G);

// Squared length of the shortest nonzero vector of the lattice with (reduced)
// Gram G, certified by exhaustive enumeration below the first basis vector.
Rat shortest_sq(const RatMat& G);

// All coefficient vectors c != 0 with Q(c) <= bound (quadratic form G), up to
// sign (one of {c, -c} reported). Exact Fincke-Pohst with rational pivots.
std::vector<std::vector<Int>> enumerate_below(const RatMat& G, const Rat& bound);

}  // namespace dapx
