#pragma once

#include <array>
#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclo/digraph.hpp"
#include "cyclo/equivalence.hpp"
#include "cyclo/error.hpp"
#include "cyclo/gaussint.hpp"
#include "cyclo/hermitian.hpp"
#include "cyclo/signed_graph.hpp"

namespace cyclo {

/// Vector in Z[i]^k with the Hermitian form <u, v> = sum u_j conj(v_j).
struct GaussVector {
  std::vector<GaussInt> coords;

  GaussVector() = default;
  explicit GaussVector(int dim) : coords(dim) {}

  int dimension() const noexcept { return static_cast<int>(coords.size()); }

  /// Standard basis vector e_j (0-based) of Z[i]^k.
  static GaussVector basis(int dim, int j) {
    GaussVector v(dim);
    v.coords.at(j) = GaussInt(1);
    return v;
  }

  friend GaussVector operator+(GaussVector a, const GaussVector& b) {
    for (int j = 0; j < a.dimension(); ++j) a.coords[j] += b.coords.at(j);
    return a;
  }
  friend GaussVector operator-(GaussVector a, const GaussVector& b) {
    for (int j = 0; j < a.dimension(); ++j) a.coords[j] -= b.coords.at(j);
    return a;
  }
  friend GaussVector operator*(const GaussInt& s, GaussVector a) {
    for (auto& c : a.coords) c = s * c;
    return a;
  }
  friend bool operator==(const GaussVector&, const GaussVector&) = default;

  std::string to_string() const {
    std::string s = "(";
    for (int j = 0; j < dimension(); ++j) s += (j ? ", " : "") + coords[j].to_string();
    return s + ")";
  }
};

inline GaussInt inner(const GaussVector& u, const GaussVector& v) {
  if (u.dimension() != v.dimension()) throw ContractViolation("inner product of vectors of different dimension");
  GaussInt s;
  for (int j = 0; j < u.dimension(); ++j)
    if (!u.coords[j].is_zero() && !v.coords[j].is_zero()) s += u.coords[j] * v.coords[j].conj();
  return s;
}

/// G(x, y) = <v_x, v_y> - 2 delta(x, y). Every vector must have squared norm
/// 2; with `adjacency_class` every off-diagonal entry must lie in {0, +-1, +-i}.
inline HermMatrix displaced_gram(const std::vector<GaussVector>& vs, bool adjacency_class = true) {
  const int n = static_cast<int>(vs.size());
  for (const auto& v : vs) {
    if (v.dimension() != vs.front().dimension()) throw ContractViolation("vectors of different dimension");
    if (inner(v, v) != GaussInt(2)) throw BadRoot("vector " + v.to_string() + " does not have squared norm 2");
  }
  HermMatrix g(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      const GaussInt z = inner(vs[x], vs[y]);
      if (adjacency_class && !z.is_zero() && !z.is_unit())
        throw NotAdjacencyClass("entry " + z.to_string() + " between " + vs[x].to_string() + " and " +
                                vs[y].to_string());
      g.set(x, y, z);
    }
  return g;
}

/// The two parameters of the infinite families with spectral radius 2.
enum class Twist { One, I };

enum class SporadicName { S8Dagger, S14, S16 };

inline std::string_view to_string(SporadicName s) {
  switch (s) {
    case SporadicName::S8Dagger: return "S8dagger";
    case SporadicName::S14: return "S14";
    case SporadicName::S16: return "S16";
  }
  return "?";
}

enum class Family {
  Delta1,
  DeltaI,
  Sporadic,
  Dn,
  Ctilde,
  Ctilde1,  ///< one arc replaced by a digon
  Ctilde2,  ///< a digon followed by a reversed arc
  Path,
  Cycle,
  Square,
  Y,
  Utilde1,
  Utilde6,
  CanonicalU,
  SignedU,
  SignedO,
  SignedQ,
  Complete,
};

/// Family name plus integer parameters. Sporadic carries the SporadicName
/// as its single parameter.
struct CatalogRef {
  Family family = Family::Path;
  std::vector<int> params;

  static CatalogRef delta1(int k) { return {Family::Delta1, {k}}; }
  static CatalogRef delta_i(int k) { return {Family::DeltaI, {k}}; }
  static CatalogRef delta(Twist x, int k) { return x == Twist::One ? delta1(k) : delta_i(k); }
  static CatalogRef sporadic(SporadicName s) { return {Family::Sporadic, {static_cast<int>(s)}}; }
  static CatalogRef dn(int n) { return {Family::Dn, {n}}; }
  static CatalogRef ctilde(int n) { return {Family::Ctilde, {n}}; }
  static CatalogRef ctilde1(int n) { return {Family::Ctilde1, {n}}; }
  static CatalogRef ctilde2(int n) { return {Family::Ctilde2, {n}}; }
  static CatalogRef path(int n) { return {Family::Path, {n}}; }
  static CatalogRef cycle(int n) { return {Family::Cycle, {n}}; }
  static CatalogRef square(int a1, int a2, int a3, int a4) { return {Family::Square, {a1, a2, a3, a4}}; }
  static CatalogRef y(int a, int b, int c) { return {Family::Y, {a, b, c}}; }
  static CatalogRef utilde1() { return {Family::Utilde1, {}}; }
  static CatalogRef utilde6() { return {Family::Utilde6, {}}; }
  static CatalogRef canonical_u(int i) { return {Family::CanonicalU, {i}}; }
  static CatalogRef signed_u(int i) { return {Family::SignedU, {i}}; }
  static CatalogRef signed_o(int two_k) { return {Family::SignedO, {two_k}}; }
  static CatalogRef signed_q(int h, int k) { return {Family::SignedQ, {h, k}}; }
  static CatalogRef complete(int n) { return {Family::Complete, {n}}; }

  SporadicName sporadic_name() const { return static_cast<SporadicName>(params.at(0)); }

  bool is_signed() const {
    return family == Family::SignedU || family == Family::SignedO || family == Family::SignedQ;
  }

  std::string to_string() const;
  static CatalogRef parse(std::string_view text);

  friend bool operator==(const CatalogRef&, const CatalogRef&) = default;
};

namespace detail {

struct FamilyName {
  Family family;
  std::string_view name;
  int arity;
};

inline constexpr std::array<FamilyName, 18> kFamilyNames{{
    {Family::Delta1, "Delta1", 1},
    {Family::DeltaI, "DeltaI", 1},
    {Family::Sporadic, "Sporadic", 1},
    {Family::Dn, "Dn", 1},
    {Family::Ctilde, "Ctilde", 1},
    {Family::Ctilde1, "Ctilde'", 1},
    {Family::Ctilde2, "Ctilde''", 1},
    {Family::Path, "Path", 1},
    {Family::Cycle, "Cycle", 1},
    {Family::Square, "Square", 4},
    {Family::Y, "Y", 3},
    {Family::Utilde1, "Utilde1", 0},
    {Family::Utilde6, "Utilde6", 0},
    {Family::CanonicalU, "CanonicalU", 1},
    {Family::SignedU, "SignedU", 1},
    {Family::SignedO, "SignedO", 1},
    {Family::SignedQ, "SignedQ", 2},
    {Family::Complete, "Complete", 1},
}};

inline const FamilyName& family_entry(Family f) {
  for (const auto& e : kFamilyNames)
    if (e.family == f) return e;
  throw InternalError("unknown family");
}

}  // namespace detail

inline std::string CatalogRef::to_string() const {
  const auto& e = detail::family_entry(family);
  std::string s(e.name);
  if (e.arity == 0) return s;
  s += "(";
  if (family == Family::Sporadic) {
    s += cyclo::to_string(sporadic_name());
  } else {
    for (std::size_t j = 0; j < params.size(); ++j) s += (j ? "," : "") + std::to_string(params[j]);
  }
  return s + ")";
}

/// Parses the to_string form, e.g. "Delta1(4)", "Square(3,1,0,0)",
/// "Sporadic(S14)", "Utilde1".
inline CatalogRef CatalogRef::parse(std::string_view text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  const auto open = t.find('(');
  const std::string name = t.substr(0, open);
  for (const auto& e : detail::kFamilyNames) {
    if (e.name != name) continue;
    CatalogRef ref{e.family, {}};
    if (e.arity == 0) {
      if (open != std::string::npos && t != name + "()") throw ParseError("family " + name + " takes no parameters");
      return ref;
    }
    if (open == std::string::npos || t.back() != ')') throw ParseError("expected parameters in '" + t + "'");
    const std::string inside = t.substr(open + 1, t.size() - open - 2);
    if (e.family == Family::Sporadic) {
      for (auto s : {SporadicName::S8Dagger, SporadicName::S14, SporadicName::S16})
        if (inside == cyclo::to_string(s) || (s == SporadicName::S8Dagger && inside == "S8"))
          return sporadic(s);
      throw ParseError("unknown sporadic matrix '" + inside + "'");
    }
    std::size_t pos = 0;
    while (pos <= inside.size()) {
      const auto comma = std::min(inside.find(',', pos), inside.size());
      const std::string item = inside.substr(pos, comma - pos);
      try {
        std::size_t used = 0;
        ref.params.push_back(std::stoi(item, &used));
        if (used != item.size()) throw ParseError("bad integer '" + item + "'");
      } catch (const std::logic_error&) {
        throw ParseError("bad integer '" + item + "' in '" + t + "'");
      }
      pos = comma + 1;
    }
    if (static_cast<int>(ref.params.size()) != e.arity)
      throw ParseError(name + " takes " + std::to_string(e.arity) + " parameter(s)");
    return ref;
  }
  throw ParseError("unknown family '" + name + "'");
}

namespace detail {

inline void require_k(int k) {
  if (k < 3) throw ParamRange("k must be at least 3 (k = " + std::to_string(k) + ")");
}

// e_p for 1-based p, read modulo k
inline GaussVector e(int k, int p) { return GaussVector::basis(k, ((p - 1) % k + k) % k); }

inline const GaussInt& unit_i() {
  static const GaussInt v(0, 1);
  return v;
}

}  // namespace detail

/// Vectors defining T_2k^(x): first all u_p, then all w_p, where
/// x = 1: u_p = e_p + e_{p+1}, w_p = e_p - e_{p+1} (p = 1..k, indices mod k);
/// x = i: same for p < k, and u_k = i e_k + e_1, w_k = i e_k - e_1.
inline std::vector<GaussVector> t_vectors(Twist x, int k) {
  detail::require_k(k);
  using detail::e;
  std::vector<GaussVector> plus, minus;
  for (int p = 1; p <= k; ++p) {
    if (p == k && x == Twist::I) {
      plus.push_back(detail::unit_i() * e(k, k) + e(k, 1));
      minus.push_back(detail::unit_i() * e(k, k) - e(k, 1));
    } else {
      plus.push_back(e(k, p) + e(k, p + 1));
      minus.push_back(e(k, p) - e(k, p + 1));
    }
  }
  plus.insert(plus.end(), minus.begin(), minus.end());
  return plus;
}

inline HermMatrix t_matrix(Twist x, int k) { return displaced_gram(t_vectors(x, k)); }

/// Vectors whose displaced Gram matrix is H(Delta_2k^(x)), listed column by
/// column (vertex 2c and 2c + 1 form column c):
///   x = 1, k even: e_p +- e_{p+1} (p even), i(e_p +- e_{p+1}) (p odd)
///   x = 1, k odd:  as above for p < k, then i(e_k + e_1), -i(e_k - e_1)
///   x = i, k odd:  as above for p < k, then i e_k +- e_1
///   x = i, k even: as above for p < k - 1, then +-i e_{k-1} + i e_k, then i e_k +- e_1
inline std::vector<GaussVector> delta_vectors(Twist x, int k) {
  detail::require_k(k);
  using detail::e;
  const GaussInt& i = detail::unit_i();
  std::vector<GaussVector> out;
  auto pair = [&](const GaussVector& a, const GaussVector& b) {
    out.push_back(a);
    out.push_back(b);
  };
  auto column = [&](int p) {
    const GaussInt s = p % 2 == 0 ? GaussInt(1) : i;
    pair(s * (e(k, p) + e(k, p + 1)), s * (e(k, p) - e(k, p + 1)));
  };
  if (x == Twist::One) {
    for (int p = 1; p < k; ++p) column(p);
    if (k % 2 == 0) column(k);
    else pair(i * (e(k, k) + e(k, 1)), GaussInt(0, -1) * (e(k, k) - e(k, 1)));
    return out;
  }
  const int plain = k % 2 == 1 ? k : k - 1;
  for (int p = 1; p < plain; ++p) column(p);
  if (k % 2 == 0) pair(i * e(k, k - 1) + i * e(k, k), GaussInt(0, -1) * e(k, k - 1) + i * e(k, k));
  pair(i * e(k, k) + e(k, 1), i * e(k, k) - e(k, 1));
  return out;
}

inline Digraph delta_family(Twist x, int k) {
  const HermMatrix h = displaced_gram(delta_vectors(x, k));
  try {
    return Digraph::from_hermitian(h);
  } catch (const InvalidAdjacency& err) {
    throw NotAdjacencyClass(std::string("delta_family vector set is not a digraph matrix: ") + err.what());
  }
}

namespace detail {

inline HermMatrix from_code_rows(const std::vector<std::vector<int>>& re, const std::vector<std::vector<int>>& im) {
  std::vector<std::vector<GaussInt>> rows(re.size());
  for (std::size_t x = 0; x < re.size(); ++x)
    for (std::size_t y = 0; y < re.size(); ++y) rows[x].emplace_back(re[x][y], im[x][y]);
  return HermMatrix::from_rows(rows);
}

inline std::vector<std::vector<int>> circulant(const std::vector<int>& first_row) {
  const int n = static_cast<int>(first_row.size());
  std::vector<std::vector<int>> m(n, std::vector<int>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m[r][c] = first_row[((c - r) % n + n) % n];
  return m;
}

inline std::vector<std::vector<int>> mat_mul(const std::vector<std::vector<int>>& a,
                                             const std::vector<std::vector<int>>& b) {
  const std::size_t n = a.size();
  std::vector<std::vector<int>> c(n, std::vector<int>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z = 0; z < n; ++z)
      for (std::size_t y = 0; y < n; ++y) c[x][y] += a[x][z] * b[z][y];
  return c;
}

}  // namespace detail

inline HermMatrix sporadic_matrix(SporadicName name) {
  using detail::circulant;
  switch (name) {
    case SporadicName::S8Dagger: {
      // real and imaginary parts, row by row
      const std::vector<std::vector<int>> re{
          {0, -1, -1, 0, 1, 0, 0, 0}, {-1, 0, 0, -1, 0, 1, 0, 0}, {-1, 0, 0, 1, 0, 0, 1, 0},
          {0, -1, 1, 0, 0, 0, 0, 1},  {1, 0, 0, 0, 0, 1, 1, 0},   {0, 1, 0, 0, 1, 0, 0, 1},
          {0, 0, 1, 0, 1, 0, 0, -1},  {0, 0, 0, 1, 0, 1, -1, 0}};
      const std::vector<std::vector<int>> im{
          {0, 0, 0, 1, 0, 0, 0, 0},  {0, 0, 1, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0, 0, 0},
          {-1, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, -1}, {0, 0, 0, 0, 0, 0, -1, 0},
          {0, 0, 0, 0, 0, 1, 0, 0},  {0, 0, 0, 0, 1, 0, 0, 0}};
      return detail::from_code_rows(re, im);
    }
    case SporadicName::S14: {
      const auto m = circulant({1, 1, 0, 1, 0, 0, -1});
      std::vector<std::vector<int>> re(14, std::vector<int>(14)), im = re;
      for (int r = 0; r < 7; ++r)
        for (int c = 0; c < 7; ++c) {
          re[r][7 + c] = m[r][c];
          re[7 + c][r] = m[r][c];
        }
      return detail::from_code_rows(re, im);
    }
    case SporadicName::S16: {
      const auto c = circulant({0, 1, 0, 0, 0, 0, 0, 0});
      const auto c2 = detail::mat_mul(c, c);
      const auto c3 = detail::mat_mul(c2, c);
      const auto c5 = detail::mat_mul(c3, c2);
      std::vector<std::vector<int>> re(16, std::vector<int>(16)), im = re;
      for (int r = 0; r < 8; ++r)
        for (int s = 0; s < 8; ++s) {
          re[r][s] = c[r][s] + c[s][r];
          re[r][8 + s] = -c[r][s] + c[s][r];
          re[8 + r][s] = c[r][s] - c[s][r];
          re[8 + r][8 + s] = c3[r][s] + c5[r][s];
        }
      return detail::from_code_rows(re, im);
    }
  }
  throw InternalError("unknown sporadic matrix");
}

/// The explicit diagonal matrices D1, D2 relating a sporadic matrix S to the
/// Hermitian adjacency matrix of its digraph:
///   S8dagger: D1 S D1* = -D2* conj(S) D2
///   S14:      D1 S D1* = -D1* S D1       (D2 = D1)
///   S16:      D1 S D1* = -D2 S D2*
struct SporadicDiagonals {
  std::vector<Unit> d1;
  std::vector<Unit> d2;
};

inline SporadicDiagonals sporadic_diagonals(SporadicName name) {
  constexpr Unit o = Unit::One, i = Unit::I, m = Unit::MinusOne, mi = Unit::MinusI;
  switch (name) {
    case SporadicName::S8Dagger: return {{mi, i, i, o, o, o, o, mi}, {o, o, o, mi, i, mi, mi, m}};
    case SporadicName::S14: {
      std::vector<Unit> d(7, o);
      d.resize(14, i);
      return {d, d};
    }
    case SporadicName::S16: {
      std::vector<Unit> d1(8, i);
      d1.resize(16, o);
      std::vector<Unit> d2;
      for (int j = 0; j < 8; ++j) d2.push_back(j % 2 == 0 ? i : mi);
      for (int j = 0; j < 8; ++j) d2.push_back(j % 2 == 0 ? o : m);
      return {d1, d2};
    }
  }
  throw InternalError("unknown sporadic matrix");
}

/// Both sides of the sporadic identities as witnesses from S to H(Delta):
/// `direct` is D1 S D1*, `negated` is the right-hand side.
struct SporadicWitnesses {
  SwitchingWitness direct;
  SwitchingWitness negated;
};

inline SporadicWitnesses sporadic_witnesses(SporadicName name) {
  const auto [d1, d2] = sporadic_diagonals(name);
  SporadicWitnesses w{SwitchingWitness::diagonal(d1), {}};
  std::vector<Unit> conj_d2;
  for (Unit u : d2) conj_d2.push_back(conj(u));
  switch (name) {
    case SporadicName::S8Dagger:
      w.negated = SwitchingWitness::diagonal(conj_d2);
      w.negated.conjugated = true;
      break;
    case SporadicName::S14: w.negated = SwitchingWitness::diagonal(conj_d2); break;
    case SporadicName::S16: w.negated = SwitchingWitness::diagonal(d2); break;
  }
  w.negated.negated = true;
  return w;
}

inline Digraph sporadic_digraph(SporadicName name) {
  return Digraph::from_hermitian(apply(sporadic_witnesses(name).direct, sporadic_matrix(name)));
}

namespace detail {

inline void require(bool ok, const CatalogRef& ref, std::string_view what) {
  if (!ok) throw ParamRange(ref.to_string() + ": " + std::string(what));
}

// cycle 0 -> 1 -> ... -> n-1 -> 0
inline Digraph directed_cycle(int n) {
  Digraph d(n);
  for (int x = 0; x < n; ++x) d.add_arc(x, (x + 1) % n);
  return d;
}

// appends a directed path of `len` new vertices leaving `root`
inline void attach_path(Digraph& d, int root, int len, int& next) {
  int prev = root;
  for (int j = 0; j < len; ++j) {
    d.add_arc(prev, next);
    prev = next++;
  }
}

inline SignedGraph signed_from_edges(int n, const std::vector<std::array<int, 3>>& edges) {
  SignedGraph s(n);
  for (const auto& [x, y, sg] : edges) s.set_sign(x, y, sg);
  return s;
}

}  // namespace detail

/// Vertex names used in the figures of U_1 .. U_11, indexed by vertex.
inline std::vector<std::string> signed_u_labels(int i) {
  switch (i) {
    case 1: return {"a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4"};
    case 2: return {"a0", "a1", "a2", "a3", "a4", "b0", "b1", "b2"};
    case 3: return {"a0", "a1", "a2", "a3", "a4", "a5", "b1", "b2"};
    case 4: return {"a0", "a1", "a2", "a3", "a4", "b0", "b1", "b2"};
    case 5: return {"a0", "a1", "a2", "a3", "a4", "a5", "a6", "b2"};
    case 6: return {"0", "60", "120", "180", "240", "300", "x+", "x-"};
    case 7: return {"-30", "30", "90", "150", "210", "270", "y+", "y-"};
    case 8: return {"a-1", "a0", "a1", "a2", "b0", "b1", "c0", "c1"};
    case 9: return {"a0", "b0", "c0", "d0", "a1", "b1", "c1", "d1"};
    case 10: return {"a0", "a1", "a2", "a3", "b0", "b1", "b2", "b3"};
    case 11: return {"a0", "a1", "a2", "a3", "b1", "b2", "b3", "b4"};
    default: throw ParamRange("SignedU index must be in 1..11");
  }
}

inline SignedGraph signed_family(const CatalogRef& ref) {
  using detail::require;
  using detail::signed_from_edges;
  const auto& p = ref.params;
  switch (ref.family) {
    case Family::SignedU: {
      require(p.at(0) >= 1 && p[0] <= 11, ref, "index must be in 1..11");
      constexpr int N = -1;
      switch (p[0]) {
        case 1:
          return signed_from_edges(8, {{0, 4, 1}, {1, 5, 1}, {2, 6, N}, {3, 7, 1}, {0, 1, 1}, {1, 2, 1},
                                       {2, 3, 1}, {3, 0, N}, {4, 5, N}, {5, 6, 1}, {6, 7, 1}, {7, 4, 1}});
        case 2:
          return signed_from_edges(8, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {5, 6, 1}, {6, 7, 1},
                                       {1, 6, 1}, {2, 7, N}});
        case 3:
          return signed_from_edges(8, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {6, 7, 1},
                                       {1, 6, 1}, {2, 7, N}});
        case 4:
          return signed_from_edges(8, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {5, 6, 1}, {6, 7, 1},
                                       {0, 5, 1}, {1, 6, N}, {2, 7, 1}});
        case 5:
          return signed_from_edges(8, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {5, 6, 1},
                                       {2, 7, 1}});
        case 6:
          return signed_from_edges(8, {{0, 1, 1}, {1, 2, 1}, {2, 3, N}, {3, 4, 1}, {4, 5, 1}, {5, 0, 1},
                                       {0, 6, 1}, {3, 7, 1}});
        case 7:
          return signed_from_edges(8, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, N}, {4, 5, 1}, {5, 0, 1},
                                       {3, 6, 1}, {6, 7, 1}, {7, 4, 1}});
        case 8:
          return signed_from_edges(8, {{0, 1, 1}, {1, 4, N}, {1, 6, 1}, {2, 4, 1}, {2, 6, 1}, {2, 3, N},
                                       {3, 5, 1}, {3, 7, 1}, {4, 5, 1}, {6, 7, 1}});
        case 9:
          return signed_from_edges(8, {{0, 1, 1}, {1, 2, N}, {2, 3, 1}, {3, 0, 1}, {0, 4, 1}, {1, 5, 1},
                                       {2, 6, 1}, {3, 7, 1}});
        case 10:
          return signed_from_edges(8, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {4, 5, 1}, {5, 6, N}, {6, 7, 1},
                                       {0, 4, N}, {1, 5, 1}, {2, 6, 1}, {3, 7, N}});
        case 11:
          return signed_from_edges(8, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {4, 5, 1}, {5, 6, 1}, {6, 7, 1},
                                       {1, 4, 1}, {2, 5, N}, {3, 6, 1}});
      }
      break;
    }
    case Family::SignedO: {
      const int n = p.at(0);
      require(n >= 4 && n % 2 == 0, ref, "cycle length must be even and at least 4");
      SignedGraph s(n);
      for (int x = 0; x + 1 < n; ++x) s.add_positive(x, x + 1);
      s.add_negative(n - 1, 0);
      return s;
    }
    case Family::SignedQ: {
      const int h = p.at(0), k = p.at(1);
      require(h >= 0 && k >= 0 && h + k >= 4, ref, "needs h, k >= 0 and h + k >= 4");
      // b0 = 0, b- = 1, b+ = 2, b1 = 3, then the h-path at b0, then the k-path at b1
      SignedGraph s(4 + h + k);
      s.add_positive(0, 1);
      s.add_negative(0, 2);
      s.add_positive(1, 3);
      s.add_positive(2, 3);
      int next = 4;
      for (const auto& [root, len] : {std::pair{0, h}, std::pair{3, k}}) {
        int prev = root;
        for (int j = 0; j < len; ++j) {
          s.add_positive(prev, next);
          prev = next++;
        }
      }
      return s;
    }
    default: break;
  }
  throw ParamRange(ref.to_string() + " is not a signed-graph family");
}

/// Digraph of any digraph family. Vertices follow cycle order for cycles;
/// attached paths are appended in attachment order.
inline Digraph small_family(const CatalogRef& ref) {
  using detail::require;
  const auto& p = ref.params;
  switch (ref.family) {
    case Family::Delta1:
    case Family::DeltaI:
      return delta_family(ref.family == Family::Delta1 ? Twist::One : Twist::I, p.at(0));
    case Family::Sporadic: return sporadic_digraph(ref.sporadic_name());
    case Family::Dn:
    case Family::Ctilde:
    case Family::Ctilde1:
    case Family::Ctilde2: {
      const int n = p.at(0);
      require(n >= 3, ref, "cycle length must be at least 3");
      Digraph d = detail::directed_cycle(n);
      if (ref.family == Family::Ctilde || ref.family == Family::Ctilde2) d.add_arc(0, n - 1);
      if (ref.family == Family::Ctilde1 || ref.family == Family::Ctilde2) d.add_digon(0, 1);
      return d;
    }
    case Family::Path: {
      const int n = p.at(0);
      require(n >= 1, ref, "path needs at least one vertex");
      Digraph d(n);
      for (int x = 0; x + 1 < n; ++x) d.add_digon(x, x + 1);
      return d;
    }
    case Family::Cycle: {
      const int n = p.at(0);
      require(n >= 3, ref, "cycle length must be at least 3");
      Digraph d(n);
      for (int x = 0; x < n; ++x) d.add_digon(x, (x + 1) % n);
      return d;
    }
    case Family::Complete: {
      const int n = p.at(0);
      require(n >= 1, ref, "complete graph needs at least one vertex");
      Digraph d(n);
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) d.add_digon(x, y);
      return d;
    }
    case Family::Square: {
      for (int a : p) require(a >= 0, ref, "path lengths must be nonnegative");
      Digraph d(4 + p[0] + p[1] + p[2] + p[3]);
      d.add_arc(0, 1);
      d.add_arc(1, 2);
      d.add_arc(2, 3);
      d.add_arc(0, 3);
      int next = 4;
      for (int v = 0; v < 4; ++v) detail::attach_path(d, v, p[v], next);
      return d;
    }
    case Family::Y: {
      for (int a : p) require(a >= 1, ref, "arm lengths must be at least 1");
      Digraph d(1 + p[0] + p[1] + p[2]);
      int next = 1;
      for (int a : p) {
        int prev = 0;
        for (int j = 0; j < a; ++j) {
          d.add_digon(prev, next);
          prev = next++;
        }
      }
      return d;
    }
    case Family::Utilde1:
    case Family::Utilde6: {
      Digraph d(4);
      d.add_arc(0, 1);
      d.add_arc(1, 2);
      d.add_arc(2, 0);
      d.add_digon(0, 3);
      if (ref.family == Family::Utilde1) {
        d.add_digon(1, 3);
        d.add_digon(2, 3);
      }
      return d;
    }
    case Family::CanonicalU: return canonical_digraph(signed_family(CatalogRef::signed_u(p.at(0))));
    default: break;
  }
  throw ParamRange(ref.to_string() + " is not a digraph family");
}

}  // namespace cyclo
