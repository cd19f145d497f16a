#pragma once

#include <string_view>
#include <vector>

#include "cyclo/error.hpp"
#include "cyclo/gaussint.hpp"
#include "cyclo/hermitian.hpp"
#include "cyclo/poly.hpp"
#include "cyclo/sturm.hpp"

namespace cyclo {

/// det(xI - H), computed division-free (Berkowitz) over Z[i]. The result has
/// rational integer coefficients because H is Hermitian; anything else throws
/// InternalError.
inline IntPoly char_poly(const HermMatrix& h) {
  const int n = h.size();
  // coefficient vectors below are highest degree first
  std::vector<GaussInt> p{GaussInt(1)};
  for (int r = 1; r <= n; ++r) {
    const int k = r - 1;  // index of the new row/column
    std::vector<GaussInt> col;
    col.reserve(r + 1);
    col.emplace_back(1);
    col.push_back(-h(k, k));
    // -R A^j C for j = 0 .. r-2, with R = row k, C = column k restricted to 0..k-1
    std::vector<GaussInt> v(k);
    for (int a = 0; a < k; ++a) v[a] = h(a, k);
    for (int j = 0; j + 2 <= r; ++j) {
      GaussInt s;
      for (int a = 0; a < k; ++a)
        if (!v[a].is_zero() && !h(k, a).is_zero()) s += h(k, a) * v[a];
      col.push_back(-s);
      if (j + 3 <= r) {
        std::vector<GaussInt> w(k);
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b)
            if (!v[b].is_zero() && !h(a, b).is_zero()) w[a] += h(a, b) * v[b];
        v = std::move(w);
      }
    }
    std::vector<GaussInt> next(r + 1);
    for (int i = 0; i <= r; ++i)
      for (int t = 0; t <= i && t < r; ++t)
        if (!col[i - t].is_zero() && !p[t].is_zero()) next[i] += col[i - t] * p[t];
    p = std::move(next);
  }
  std::vector<BigInt> coeffs(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p[i].is_real())
      throw InternalError("characteristic polynomial coefficient is not a rational integer: " +
                          p[i].to_string());
    coeffs[p.size() - 1 - i] = p[i].re();
  }
  return IntPoly(std::move(coeffs));
}

/// Spectral radius compared with 2.
enum class RadiusClass { LessThan2, Exactly2, GreaterThan2 };

inline std::string_view to_string(RadiusClass r) {
  switch (r) {
    case RadiusClass::LessThan2: return "LessThan2";
    case RadiusClass::Exactly2: return "Exactly2";
    case RadiusClass::GreaterThan2: return "GreaterThan2";
  }
  return "?";
}

/// Radius class of a polynomial with only real roots.
inline RadiusClass radius_class(const IntPoly& p) {
  if (p.degree() <= 0) return RadiusClass::LessThan2;
  const SturmChain chain(p);
  const Bound lo = Bound::at(-2), hi = Bound::at(2);
  if (chain.count(lo, hi, true, true) != chain.count_all()) return RadiusClass::GreaterThan2;
  return chain.is_root(lo) || chain.is_root(hi) ? RadiusClass::Exactly2 : RadiusClass::LessThan2;
}

inline RadiusClass radius_class(const HermMatrix& h) { return radius_class(char_poly(h)); }

/// True iff every eigenvalue of H is strictly greater than bound.
inline bool min_eigen_exceeds(const HermMatrix& h,
                              const QuadRational& bound = QuadRational::sqrt2(-1)) {
  if (h.size() == 0) return true;
  return count_roots_in(char_poly(h), Bound::neg_inf(), Bound::at(bound), false, true) == 0;
}

/// Rank of a Hermitian matrix over Q(i) by exact Gaussian elimination.
inline int rank(const HermMatrix& m) {
  const int n = m.size();
  std::vector<std::vector<GaussRational>> a(n, std::vector<GaussRational>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) a[x][y] = GaussRational(m(x, y));
  int r = 0;
  for (int c = 0; c < n && r < n; ++c) {
    int piv = -1;
    for (int x = r; x < n; ++x)
      if (!a[x][c].is_zero()) {
        piv = x;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[r]);
    for (int x = r + 1; x < n; ++x) {
      if (a[x][c].is_zero()) continue;
      const GaussRational f = a[x][c] / a[r][c];
      for (int y = c; y < n; ++y) a[x][y] = a[x][y] - f * a[r][y];
    }
    ++r;
  }
  return r;
}

struct DisplacedRank {
  int rank = 0;
  /// False when rho(H) > 2, i.e. 2I - H is not positive semidefinite and the
  /// rank has no lattice meaning.
  bool precondition_met = true;
};

/// Rank of 2I - H, the rank of the Gaussian lattice generated by a
/// squared-norm-2 realization of -H.
inline DisplacedRank displaced_rank(const HermMatrix& h) {
  return {rank(h.shifted(2)), radius_class(h) != RadiusClass::GreaterThan2};
}

}  // namespace cyclo
