#pragma once

// Independent oracles and generators shared by the unit tests. Nothing here
// calls the search or elimination code it is used to check.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "cyclo/cyclo.hpp"

namespace cyclo::testing {

inline Digraph random_digraph(std::mt19937_64& rng, int n, double density = 0.5) {
  std::bernoulli_distribution present(density);
  std::uniform_int_distribution<int> kind(1, 3);
  std::vector<PairState> states(static_cast<std::size_t>(pair_count(n)), PairState::None);
  for (auto& s : states)
    if (present(rng)) s = static_cast<PairState>(kind(rng));
  return Digraph::from_pair_states(n, std::move(states));
}

inline Digraph random_connected_digraph(std::mt19937_64& rng, int n, double density = 0.5) {
  for (;;) {
    Digraph d = random_digraph(rng, n, density);
    if (d.is_connected()) return d;
  }
}

inline std::vector<Unit> random_phases(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> e(0, 3);
  std::vector<Unit> p(n);
  for (auto& u : p) u = unit_from_exponent(e(rng));
  return p;
}

inline SwitchingWitness random_witness(std::mt19937_64& rng, int n, bool allow_negation) {
  SwitchingWitness w = SwitchingWitness::identity(n);
  std::shuffle(w.perm.begin(), w.perm.end(), rng);
  w.phases = random_phases(rng, n);
  w.conjugated = std::bernoulli_distribution(0.5)(rng);
  w.negated = allow_negation && std::bernoulli_distribution(0.5)(rng);
  return w;
}

/// Exhaustive search over every permutation, phase vector (first phase fixed
/// to 1, which loses nothing since a global phase cancels), conjugation and
/// optionally negation. Entries are compared directly.
inline bool brute_force_equivalent(const HermMatrix& a, const HermMatrix& b, bool allow_negation) {
  const int n = a.size();
  if (b.size() != n) return false;
  if (n == 0) return true;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const int phase_codes = 1 << (2 * (n - 1));
  do {
    for (int cj = 0; cj < 2; ++cj)
      for (int neg = 0; neg < (allow_negation ? 2 : 1); ++neg)
        for (int code = 0; code < phase_codes; ++code) {
          std::vector<GaussInt> ph(n, GaussInt(1));
          for (int x = 1; x < n; ++x) ph[x] = GaussInt(unit_from_exponent((code >> (2 * (x - 1))) & 3));
          bool ok = true;
          for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y) {
              GaussInt v = cj ? a(x, y).conj() : a(x, y);
              v = ph[x] * v * ph[y].conj();
              if (neg) v = -v;
              ok = v == b(perm[x], perm[y]);
            }
          if (ok) return true;
        }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Characteristic polynomial by the Faddeev-LeVerrier recursion over Q(i):
/// M_0 = 0, c_n = 1, M_k = H M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(H M_k) / k.
inline IntPoly leverrier_char_poly(const HermMatrix& h) {
  const int n = h.size();
  using Mat = std::vector<std::vector<GaussRational>>;
  Mat a(n, std::vector<GaussRational>(n)), m(n, std::vector<GaussRational>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) a[x][y] = GaussRational(h(x, y));
  std::vector<GaussRational> c(n + 1);
  c[n] = GaussRational(Rational(1));
  for (int k = 1; k <= n; ++k) {
    Mat next(n, std::vector<GaussRational>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        GaussRational s;
        for (int z = 0; z < n; ++z) s = s + a[x][z] * m[z][y];
        if (x == y) s = s + c[n - k + 1];
        next[x][y] = s;
      }
    m = std::move(next);
    GaussRational tr;
    for (int x = 0; x < n; ++x)
      for (int z = 0; z < n; ++z) tr = tr + a[x][z] * m[z][x];
    c[n - k] = GaussRational(Rational(-1) / k) * tr;
  }
  std::vector<BigInt> coeffs;
  for (const auto& v : c) {
    if (!v.im.is_zero() || boost::multiprecision::denominator(v.re) != 1)
      throw InternalError("oracle produced a non-integer coefficient");
    coeffs.push_back(boost::multiprecision::numerator(v.re));
  }
  return IntPoly(std::move(coeffs));
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return Json::parse(in);
}

inline std::string data_path(const std::string& name) { return std::string(CYCLO_DATA_DIR) + "/" + name; }
inline std::string golden_path(const std::string& name) { return std::string(CYCLO_GOLDEN_DIR) + "/" + name; }

}  // namespace cyclo::testing
