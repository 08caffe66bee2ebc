#include "dapx/lattice.hpp"

#include <algorithm>
#include <functional>

namespace dapx {

Rat det_rat(const RatMat& m) {
  int n = (int)m.size();
  RatMat a = m;
  Rat det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[col][r] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(a[c][piv], a[c][col]);
      det = -det;
    }
    det *= a[col][col];
    for (int c = col + 1; c < n; ++c) {
      if (a[c][col] == 0) continue;
      Rat f = a[c][col] / a[col][col];
      for (int r = col; r < n; ++r) a[c][r] -= f * a[col][r];
    }
  }
  return det;
}

Int det_int(const IntMat& m) {
  RatMat r(m.size());
  for (size_t j = 0; j < m.size(); ++j)
    for (const auto& x : m[j]) r[j].push_back(Rat(x));
  Rat d = det_rat(r);
  return d.get_num();
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  int n = (int)a[0].size(), k = (int)a.size(), m = (int)b.size();
  RatMat r(m, std::vector<Rat>(n, Rat(0)));
  for (int j = 0; j < m; ++j)
    for (int t = 0; t < k; ++t) {
      if (b[j][t] == 0) continue;
      for (int i = 0; i < n; ++i) r[j][i] += a[t][i] * b[j][t];
    }
  return r;
}

RatMat gram_of(const RatMat& basis) {
  int d = (int)basis.size();
  RatMat g(d, std::vector<Rat>(d, Rat(0)));
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      Rat s = 0;
      for (size_t k = 0; k < basis[i].size(); ++k) s += basis[i][k] * basis[j][k];
      g[i][j] = s;
      g[j][i] = s;
    }
  return g;
}

IntMat unimodular_completion(const std::vector<Int>& v) {
  int n = (int)v.size();
  std::vector<Int> w = v;
  IntMat S(n, std::vector<Int>(n, Int(0)));  // S starts as identity, tracks inverse ops
  for (int i = 0; i < n; ++i) S[i][i] = 1;
  // row ops on w; inverse column ops on S, so that S * (current w) = v
  auto row_sub = [&](int i, int j, const Int& k) {
    // w_i -= k w_j  =>  col_j of S += k col_i
    w[i] -= k * w[j];
    for (int r = 0; r < n; ++r) S[j][r] += k * S[i][r];
  };
  auto row_swap = [&](int i, int j) {
    std::swap(w[i], w[j]);
    std::swap(S[i], S[j]);  // inverse of a row swap is the column swap
  };
  for (int i = 0; i < n - 1; ++i) {
    while (w[i] != 0) {
      if (w[n - 1] == 0) {
        row_swap(i, n - 1);
        continue;
      }
      Int k = floor_div(w[n - 1], w[i]);
      row_sub(n - 1, i, k);
      row_swap(i, n - 1);
    }
  }
  if (w[n - 1] < 0) {
    w[n - 1] = -w[n - 1];
    for (int r = 0; r < n; ++r) S[n - 1][r] = -S[n - 1][r];
  }
  // primitivity makes the final pivot 1
  if (w[n - 1] != 1) throw std::invalid_argument("unimodular_completion: vector not primitive");
  if (det_int(S) < 0)
    for (int r = 0; r < n; ++r) S[0][r] = -S[0][r];
  return S;
}

namespace {

Int round_div(const Rat& a) { return round_rat(a); }

}  // namespace

IntMat reduce_gram(RatMat& G) {
  int d = (int)G.size();
  IntMat U(d, std::vector<Int>(d, Int(0)));
  for (int i = 0; i < d; ++i) U[i][i] = 1;
  if (d == 1) return U;

  // exact incremental updates; U tracks the column operations
  auto colop = [&](int dst, int src, const Int& k) {  // b_dst += k b_src
    if (k == 0) return;
    Rat kk(k);
    Rat gss = G[src][src], gds = G[dst][src];
    Rat ndd = G[dst][dst] + 2 * kk * gds + kk * kk * gss;
    for (int i = 0; i < d; ++i) {
      if (i == dst) continue;
      G[dst][i] += kk * G[src][i];
      G[i][dst] = G[dst][i];
    }
    G[dst][dst] = ndd;
    for (int r = 0; r < d; ++r) U[dst][r] += k * U[src][r];
  };
  auto colswap = [&](int i, int j) {
    std::swap(U[i], U[j]);
    std::swap(G[i], G[j]);
    for (int r = 0; r < d; ++r) std::swap(G[r][i], G[r][j]);
  };
  auto colneg = [&](int j) {
    for (int r = 0; r < d; ++r) U[j][r] = -U[j][r];
    for (int i = 0; i < d; ++i) {
      if (i == j) continue;
      G[j][i] = -G[j][i];
      G[i][j] = G[j][i];
    }
  };

  bool changed = true;
  int guard = 0;
  while (changed && guard++ < 100000) {
    changed = false;
    for (int i = 0; i + 1 < d; ++i) {  // selection order by diagonal
      int m = i;
      for (int j = i + 1; j < d; ++j)
        if (G[j][j] < G[m][m]) m = j;
      if (m != i) {
        colswap(i, m);
        changed = true;
      }
    }
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        if (i == j || G[i][i] == 0) continue;
        Int k = round_div(G[j][i] / G[i][i]);
        if (k != 0) {
          Rat before = G[j][j];
          colop(j, i, -k);
          if (G[j][j] < before) changed = true;
        }
      }
    if (d == 3) {
      // local plane search for a shorter third vector
      for (int dx = -1; dx <= 1; ++dx)
        for (int dy = -1; dy <= 1; ++dy) {
          if (dx == 0 && dy == 0) continue;
          Rat kx(dx), ky(dy);
          Rat nd = G[2][2] + 2 * kx * G[2][0] + 2 * ky * G[2][1] + kx * kx * G[0][0] +
                   ky * ky * G[1][1] + 2 * kx * ky * G[1][0];
          if (nd < G[2][2]) {
            colop(2, 0, Int(dx));
            colop(2, 1, Int(dy));
            changed = true;
          }
        }
    }
  }
  if (d >= 2 && G[1][0] < 0) colneg(1);
  if (d == 3) {
    if (G[2][0] < 0) colneg(2);
  }
  return U;
}

std::vector<std::vector<Int>> enumerate_below(const RatMat& G, const Rat& bound) {
  int d = (int)G.size();
  // exact Cholesky: Q(x) = sum_i D_i (x_i + sum_{j>i} mu_ji x_j)^2
  RatMat mu(d, std::vector<Rat>(d, Rat(0)));
  std::vector<Rat> D(d);
  {
    RatMat g = G;
    for (int i = 0; i < d; ++i) {
      D[i] = g[i][i];
      if (!(D[i] > 0)) throw std::invalid_argument("enumerate_below: Gram not positive definite");
      for (int j = i + 1; j < d; ++j) mu[j][i] = g[j][i] / D[i];
      for (int j = i + 1; j < d; ++j)
        for (int k = i + 1; k < d; ++k) g[j][k] -= mu[j][i] * mu[k][i] * D[i];
    }
  }
  std::vector<std::vector<Int>> out;
  std::vector<Int> x(d, Int(0));
  // recursive descent from the last coordinate
  std::function<void(int, Rat, std::vector<Rat>&)> go = [&](int i, Rat rem, std::vector<Rat>& shift) {
    // rem: remaining budget; shift[i]: sum_{j>i} mu_ji x_j
    if (i < 0) {
      bool nonzero = false;
      for (const auto& c : x)
        if (c != 0) nonzero = true;
      if (!nonzero) return;
      // report one of {x, -x}: first nonzero coefficient positive
      std::vector<Int> c = x;
      for (int k = d - 1; k >= 0; --k)
        if (c[k] != 0) {
          if (c[k] < 0)
            for (auto& y : c) y = -y;
          break;
        }
      out.push_back(c);
      return;
    }
    // D_i (x_i + shift_i)^2 <= rem
    Rat lim = rem / D[i];
    // |x_i + s| <= sqrt(lim): integer range via floor(sqrt())
    Int num = lim.get_num(), den = lim.get_den();
    Int r = isqrt_floor(num * den);  // floor(sqrt(lim * den^2)) = floor(den * sqrt(lim))
    Rat radius(r + 1, den);          // radius >= sqrt(lim), safe outer bound
    Rat s = shift[i];
    Int lo = ceil_rat(-s - radius), hi = floor_rat(-s + radius);
    for (Int xi = lo; xi <= hi; ++xi) {
      Rat t = Rat(xi) + s;
      Rat used = D[i] * t * t;
      if (used > rem) continue;
      x[i] = xi;
      std::vector<Rat> shift2 = shift;
      for (int j = 0; j < i; ++j) shift2[j] += mu[i][j] * Rat(xi);
      go(i - 1, rem - used, shift2);
    }
    x[i] = 0;
  };
  std::vector<Rat> shift(d, Rat(0));
  go(d - 1, bound, shift);
  // dedupe (x vs -x already canonical) and sort
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rat shortest_sq(const RatMat& G) {
  Rat best = G[0][0];
  for (size_t i = 1; i < G.size(); ++i)
    if (G[i][i] < best) best = G[i][i];
  auto all = enumerate_below(G, best);
  for (const auto& c : all) {
    Rat q = 0;
    int d = (int)G.size();
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) q += Rat(c[i]) * Rat(c[j]) * G[j][i];
    if (q < best) best = q;
  }
  return best;
}

}  // namespace dapx
