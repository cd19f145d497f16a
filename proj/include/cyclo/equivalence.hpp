#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/digraph.hpp"
#include "cyclo/error.hpp"
#include "cyclo/gaussint.hpp"
#include "cyclo/hermitian.hpp"
#include "cyclo/poly.hpp"
#include "cyclo/spectrum.hpp"

namespace cyclo {

/// Monomial unitary (permutation plus unit phases) with optional entrywise
/// conjugation and negation. Applied to a source matrix S it produces
///
///   T(perm[x], perm[y]) = s * phases[x] * op(S)(x, y) * conj(phases[y])
///
/// with op = conjugation when `conjugated` and s = -1 when `negated`.
struct SwitchingWitness {
  std::vector<int> perm;
  std::vector<Unit> phases;
  bool conjugated = false;
  bool negated = false;

  int size() const noexcept { return static_cast<int>(perm.size()); }

  static SwitchingWitness identity(int n) {
    SwitchingWitness w;
    w.perm.resize(n);
    std::iota(w.perm.begin(), w.perm.end(), 0);
    w.phases.assign(n, Unit::One);
    return w;
  }

  /// Diagonal switching by the given phases.
  static SwitchingWitness diagonal(std::vector<Unit> phases) {
    SwitchingWitness w = identity(static_cast<int>(phases.size()));
    w.phases = std::move(phases);
    return w;
  }

  friend bool operator==(const SwitchingWitness&, const SwitchingWitness&) = default;
};

inline void check_witness_shape(const SwitchingWitness& w, int n) {
  if (w.size() != n || static_cast<int>(w.phases.size()) != n)
    throw ContractViolation("witness size does not match matrix order");
  std::vector<char> seen(n, 0);
  for (int v : w.perm) {
    if (v < 0 || v >= n || seen[v]) throw ContractViolation("witness perm is not a permutation");
    seen[v] = 1;
  }
}

inline HermMatrix apply(const SwitchingWitness& w, const HermMatrix& s) {
  const int n = s.size();
  check_witness_shape(w, n);
  HermMatrix t(n);
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      GaussInt v = w.conjugated ? s(x, y).conj() : s(x, y);
      if (v.is_zero()) continue;
      v = GaussInt(w.phases[x]) * v * GaussInt(conj(w.phases[y]));
      if (w.negated) v = -v;
      t.set(w.perm[x], w.perm[y], v);
    }
  return t;
}

inline bool verifies(const SwitchingWitness& w, const HermMatrix& source, const HermMatrix& target) {
  return source.size() == target.size() && w.size() == source.size() && apply(w, source) == target;
}

/// Witness mapping the target of w back to its source.
inline SwitchingWitness inverse(const SwitchingWitness& w) {
  const int n = w.size();
  SwitchingWitness r;
  r.perm.assign(n, 0);
  r.phases.assign(n, Unit::One);
  r.conjugated = w.conjugated;
  r.negated = w.negated;
  for (int x = 0; x < n; ++x) {
    r.perm[w.perm[x]] = x;
    r.phases[w.perm[x]] = w.conjugated ? w.phases[x] : conj(w.phases[x]);
  }
  return r;
}

/// Witness for "apply first, then second".
inline SwitchingWitness compose(const SwitchingWitness& first, const SwitchingWitness& second) {
  const int n = first.size();
  if (second.size() != n) throw ContractViolation("composing witnesses of different sizes");
  SwitchingWitness r;
  r.perm.resize(n);
  r.phases.resize(n);
  r.conjugated = first.conjugated != second.conjugated;
  r.negated = first.negated != second.negated;
  for (int x = 0; x < n; ++x) {
    const int mid = first.perm[x];
    r.perm[x] = second.perm[mid];
    const Unit p = second.conjugated ? conj(first.phases[x]) : first.phases[x];
    r.phases[x] = second.phases[mid] * p;
  }
  return r;
}

namespace detail {

// Entries of adjacency-class matrices as small codes: 0 for zero, 1 + e for
// i^e. Code order 0 < 1 < i < -1 < -i is the canonical-form entry order.
using Code = std::int8_t;

constexpr Code kZero = 0;
constexpr Code unit_code(int exponent) noexcept { return static_cast<Code>(1 + (((exponent % 4) + 4) % 4)); }
constexpr int code_exponent(Code c) noexcept { return c - 1; }
constexpr Code code_scale(Code c, int exponent) noexcept {
  return c == kZero ? kZero : unit_code(code_exponent(c) + exponent);
}
constexpr Code code_conj(Code c) noexcept { return c == kZero ? kZero : unit_code(-code_exponent(c)); }

struct CodeMatrix {
  int n = 0;
  std::vector<Code> c;

  Code operator()(int x, int y) const { return c[static_cast<std::size_t>(x) * n + y]; }
  Code& at(int x, int y) { return c[static_cast<std::size_t>(x) * n + y]; }

  static CodeMatrix from(const HermMatrix& h) {
    if (!h.is_adjacency_class())
      throw ContractViolation("equivalence search needs a zero-diagonal matrix with entries in {0, +-1, +-i}");
    CodeMatrix m{h.size(), std::vector<Code>(static_cast<std::size_t>(h.size()) * h.size(), kZero)};
    for (int x = 0; x < h.size(); ++x)
      for (int y = 0; y < h.size(); ++y)
        if (const auto u = h(x, y).as_unit()) m.at(x, y) = unit_code(exponent(*u));
    return m;
  }

  CodeMatrix transformed(bool conjugate, bool negate) const {
    CodeMatrix m = *this;
    for (auto& v : m.c) {
      if (conjugate) v = code_conj(v);
      if (negate) v = code_scale(v, 2);
    }
    return m;
  }

  HermMatrix to_matrix() const {
    HermMatrix h(n);
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        if ((*this)(x, y) != kZero) h.set(x, y, GaussInt(unit_from_exponent(code_exponent((*this)(x, y)))));
    return h;
  }

  friend bool operator==(const CodeMatrix&, const CodeMatrix&) = default;
};

/// Per-vertex invariants preserved by every monomial conjugation: the
/// diagonals of H^2 .. H^K (real integers).
inline std::vector<std::vector<long long>> vertex_signatures(const CodeMatrix& m) {
  const int n = m.n;
  const int kmax = std::min(n, 8);
  std::vector<long long> re(static_cast<std::size_t>(n) * n), im(re.size());
  std::vector<long long> hre(re.size()), him(re.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Code c = m(x, y);
      if (c == kZero) continue;
      static constexpr int kRe[4] = {1, 0, -1, 0};
      static constexpr int kIm[4] = {0, 1, 0, -1};
      hre[x * n + y] = kRe[code_exponent(c)];
      him[x * n + y] = kIm[code_exponent(c)];
    }
  re = hre;
  im = him;
  std::vector<std::vector<long long>> sig(n);
  for (int k = 2; k <= kmax; ++k) {
    std::vector<long long> nre(re.size(), 0), nim(re.size(), 0);
    for (int x = 0; x < n; ++x)
      for (int z = 0; z < n; ++z) {
        const long long ar = re[x * n + z], ai = im[x * n + z];
        if (ar == 0 && ai == 0) continue;
        for (int y = 0; y < n; ++y) {
          const long long br = hre[z * n + y], bi = him[z * n + y];
          if (br == 0 && bi == 0) continue;
          nre[x * n + y] += ar * br - ai * bi;
          nim[x * n + y] += ar * bi + ai * br;
        }
      }
    re = std::move(nre);
    im = std::move(nim);
    for (int x = 0; x < n; ++x) sig[x].push_back(re[x * n + x]);
  }
  return sig;
}

/// Backtracking search for an injective map phi and phases d with
/// T(phi x, phi y) = d_x S(x, y) conj(d_y) for all x != y. With `bijective`
/// the map must be onto (same order); otherwise it is an induced embedding.
class EmbeddingSearch {
 public:
  EmbeddingSearch(const CodeMatrix& source, const CodeMatrix& target, bool bijective)
      : s_(source), t_(target), bijective_(bijective) {
    sadj_ = adjacency(s_);
    tadj_ = adjacency(t_);
    if (bijective_) {
      ssig_ = vertex_signatures(s_);
      tsig_ = vertex_signatures(t_);
    }
    build_order();
  }

  struct Result {
    std::vector<int> map;  ///< source vertex -> target vertex
    std::vector<Unit> phases;
  };

  std::optional<Result> run() {
    if (s_.n > t_.n || (bijective_ && s_.n != t_.n)) return std::nullopt;
    if (bijective_) {
      auto count = [](std::vector<std::vector<long long>> v) {
        std::sort(v.begin(), v.end());
        return v;
      };
      if (count(ssig_) != count(tsig_)) return std::nullopt;
    }
    map_.assign(s_.n, -1);
    phase_.assign(s_.n, 0);
    used_.assign(t_.n, 0);
    if (!extend(0)) return std::nullopt;
    Result r;
    r.map = map_;
    for (int e : phase_) r.phases.push_back(unit_from_exponent(e));
    return r;
  }

 private:
  static std::vector<std::vector<int>> adjacency(const CodeMatrix& m) {
    std::vector<std::vector<int>> adj(m.n);
    for (int x = 0; x < m.n; ++x)
      for (int y = 0; y < m.n; ++y)
        if (x != y && m(x, y) != kZero) adj[x].push_back(y);
    return adj;
  }

  void build_order() {
    std::vector<char> seen(s_.n, 0);
    parent_.assign(s_.n, -1);
    while (static_cast<int>(order_.size()) < s_.n) {
      int root = -1;
      for (int x = 0; x < s_.n; ++x) {
        if (seen[x]) continue;
        if (root < 0 || sadj_[x].size() > sadj_[root].size()) root = x;
      }
      seen[root] = 1;
      std::size_t head = order_.size();
      order_.push_back(root);
      while (head < order_.size()) {
        const int x = order_[head++];
        for (int y : sadj_[x])
          if (!seen[y]) {
            seen[y] = 1;
            parent_[y] = x;
            order_.push_back(y);
          }
      }
    }
    position_.assign(s_.n, 0);
    for (int i = 0; i < s_.n; ++i) position_[order_[i]] = i;
  }

  bool compatible(int x, int c) const {
    if (bijective_) return tadj_[c].size() == sadj_[x].size() && tsig_[c] == ssig_[x];
    if (tadj_[c].size() < sadj_[x].size()) return false;
    int pending = 0;
    for (int y : sadj_[x]) pending += position_[y] > position_[x];
    int free = 0;
    for (int u : tadj_[c]) free += !used_[u];
    return free >= pending;
  }

  bool consistent(int t, int x, int c, int dx) const {
    for (int j = 0; j < t; ++j) {
      const int y = order_[j];
      const Code want = code_scale(code_scale(s_(x, y), dx), -phase_[y]);
      if (t_(c, map_[y]) != want) return false;
    }
    return true;
  }

  bool extend(int t) {
    if (t == s_.n) return true;
    const int x = order_[t];
    const int p = parent_[x];
    auto attempt = [&](int c) {
      if (used_[c] || !compatible(x, c)) return false;
      int dx = 0;
      if (p >= 0) {
        const Code tc = t_(map_[p], c);
        if (tc == kZero) return false;
        dx = (((phase_[p] + code_exponent(s_(p, x)) - code_exponent(tc)) % 4) + 4) % 4;
      }
      if (!consistent(t, x, c, dx)) return false;
      map_[x] = c;
      phase_[x] = dx;
      used_[c] = 1;
      if (extend(t + 1)) return true;
      used_[c] = 0;
      map_[x] = -1;
      return false;
    };
    if (p >= 0) {
      for (int c : tadj_[map_[p]])
        if (attempt(c)) return true;
    } else {
      for (int c = 0; c < t_.n; ++c)
        if (attempt(c)) return true;
    }
    return false;
  }

  const CodeMatrix& s_;
  const CodeMatrix& t_;
  bool bijective_;
  std::vector<std::vector<int>> sadj_, tadj_;
  std::vector<std::vector<long long>> ssig_, tsig_;
  std::vector<int> order_, parent_, position_;
  std::vector<int> map_, phase_;
  std::vector<char> used_;
};

inline IntPoly char_poly_of_negation(const IntPoly& p) {
  // det(xI + H) = (-1)^n det(-xI - H)
  IntPoly r = p.reflected();
  return p.degree() % 2 == 1 ? -r : r;
}

inline std::optional<SwitchingWitness> search_equivalence(const HermMatrix& h1, const HermMatrix& h2,
                                                          bool allow_negation) {
  if (h1.size() != h2.size()) return std::nullopt;
  const CodeMatrix a = CodeMatrix::from(h1);
  const CodeMatrix b = CodeMatrix::from(h2);
  const IntPoly p1 = char_poly(h1);
  const IntPoly p2 = char_poly(h2);
  for (const bool neg : {false, true}) {
    if (neg && !allow_negation) break;
    if ((neg ? char_poly_of_negation(p1) : p1) != p2) continue;
    for (const bool cj : {false, true}) {
      const CodeMatrix src = a.transformed(cj, neg);
      if (cj && src == a.transformed(false, neg)) continue;  // real matrix: conjugation is a no-op
      EmbeddingSearch search(src, b, true);
      if (auto r = search.run()) {
        SwitchingWitness w{r->map, r->phases, cj, neg};
        if (!verifies(w, h1, h2)) throw InternalError("equivalence witness failed re-verification");
        return w;
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// A witness that h2 = Q h1 Q* or h2 = Q conj(h1) Q* for a monomial unit
/// matrix Q, if one exists.
inline std::optional<SwitchingWitness> strong_equiv(const HermMatrix& h1, const HermMatrix& h2) {
  return detail::search_equivalence(h1, h2, false);
}

/// As strong_equiv, but h2 may also be matched against -h1.
inline std::optional<SwitchingWitness> equiv(const HermMatrix& h1, const HermMatrix& h2) {
  return detail::search_equivalence(h1, h2, true);
}

inline std::optional<SwitchingWitness> switching_equiv(const Digraph& d1, const Digraph& d2) {
  return strong_equiv(d1.hermitian_adjacency(), d2.hermitian_adjacency());
}

enum class EquivMode { Strong, Equiv };

/// Largest order accepted by canonical_form.
inline constexpr int kCanonicalSizeCap = 16;

struct CanonicalForm {
  HermMatrix matrix;
  SwitchingWitness witness;  ///< maps the input onto `matrix`
};

namespace detail {

struct CanonState {
  int op = 0;
  std::vector<int> order;
  std::vector<std::int8_t> phase;  // -1 while free
  std::vector<std::vector<int>> cells;
};

inline constexpr std::size_t kCanonicalStateCap = 2'000'000;

}  // namespace detail

/// Lexicographically least matrix, read row-major with the entry order
/// 0 < 1 < i < -1 < -i, over all monomial conjugations of h (and of conj(h),
/// and of -h / -conj(h) in Equiv mode). Two matrices get the same form iff
/// they are (strongly) equivalent.
inline CanonicalForm canonical_form_with_witness(const HermMatrix& h, EquivMode mode = EquivMode::Strong) {
  using namespace detail;
  const int n = h.size();
  if (n > kCanonicalSizeCap)
    throw CapExceeded("canonical_form supports at most " + std::to_string(kCanonicalSizeCap) + " vertices");
  const CodeMatrix base = CodeMatrix::from(h);
  std::vector<std::pair<bool, bool>> ops{{false, false}, {true, false}};
  if (mode == EquivMode::Equiv) {
    ops.emplace_back(false, true);
    ops.emplace_back(true, true);
  }
  std::vector<CodeMatrix> mats;
  std::vector<std::pair<bool, bool>> kept;
  for (auto [cj, neg] : ops) {
    CodeMatrix m = base.transformed(cj, neg);
    if (std::find(mats.begin(), mats.end(), m) != mats.end()) continue;
    mats.push_back(std::move(m));
    kept.emplace_back(cj, neg);
  }
  std::vector<int> component(n);
  {
    Graph g(n);
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        if (base(x, y) != kZero) g.add_edge(x, y);
    component = g.component_ids();
  }
  std::vector<CanonState> states;
  for (int k = 0; k < static_cast<int>(mats.size()); ++k) {
    CanonState s;
    s.op = k;
    s.phase.assign(n, -1);
    if (n > 0) {
      s.cells.emplace_back(n);
      std::iota(s.cells[0].begin(), s.cells[0].end(), 0);
    }
    states.push_back(std::move(s));
  }

  for (int r = 0; r < n; ++r) {
    std::vector<Code> best;
    std::vector<CanonState> next;
    std::vector<Code> row;
    for (const CanonState& st : states) {
      const CodeMatrix& m = mats[st.op];
      for (const int v : st.cells[0]) {
        std::vector<int> options;
        if (st.phase[v] >= 0) {
          options.push_back(st.phase[v]);
        } else {
          // a global phase per component is free, so only the first vertex
          // placed in a component may be fixed to 1
          bool component_phased = false;
          for (int u = 0; u < n; ++u)
            if (component[u] == component[v] && st.phase[u] >= 0) component_phased = true;
          if (component_phased) options = {0, 1, 2, 3};
          else options = {0};
        }
        for (const int dv : options) {
          // entry of row r for every remaining vertex, then sort within cells
          std::vector<std::vector<std::pair<Code, int>>> split;
          row.clear();
          for (std::size_t ci = 0; ci < st.cells.size(); ++ci) {
            std::vector<std::pair<Code, int>> entries;
            for (int u : st.cells[ci]) {
              if (u == v) continue;
              const Code a = m(v, u);
              Code e = kZero;
              if (a != kZero) e = st.phase[u] >= 0 ? code_scale(code_scale(a, dv), -st.phase[u]) : unit_code(0);
              entries.emplace_back(e, u);
            }
            std::sort(entries.begin(), entries.end());
            for (const auto& [e, u] : entries) row.push_back(e);
            split.push_back(std::move(entries));
          }
          if (!next.empty()) {
            if (row > best) continue;
            if (row < best) next.clear();
          }
          best = row;
          CanonState child;
          child.op = st.op;
          child.order = st.order;
          child.order.push_back(v);
          child.phase = st.phase;
          child.phase[v] = static_cast<std::int8_t>(dv);
          for (auto& entries : split) {
            std::size_t i = 0;
            while (i < entries.size()) {
              std::size_t j = i;
              std::vector<int> cell;
              while (j < entries.size() && entries[j].first == entries[i].first) {
                const int u = entries[j].second;
                const Code a = m(v, u);
                if (a != kZero && child.phase[u] < 0)
                  child.phase[u] = static_cast<std::int8_t>((((dv + code_exponent(a)) % 4) + 4) % 4);
                cell.push_back(u);
                ++j;
              }
              child.cells.push_back(std::move(cell));
              i = j;
            }
          }
          next.push_back(std::move(child));
          if (next.size() > kCanonicalStateCap)
            throw CapExceeded("canonical_form search exceeded its state budget");
        }
      }
    }
    states = std::move(next);
  }

  const CanonState& leaf = states.front();
  const auto [cj, neg] = kept[leaf.op];
  SwitchingWitness w;
  w.perm.assign(n, 0);
  w.phases.assign(n, Unit::One);
  w.conjugated = cj;
  w.negated = neg;
  for (int pos = 0; pos < n; ++pos) {
    const int v = leaf.order[pos];
    w.perm[v] = pos;
    w.phases[v] = unit_from_exponent(std::max<int>(leaf.phase[v], 0));
  }
  HermMatrix result = apply(w, h);
  return {std::move(result), std::move(w)};
}

inline HermMatrix canonical_form(const HermMatrix& h, EquivMode mode = EquivMode::Strong) {
  return canonical_form_with_witness(h, mode).matrix;
}

/// Vertex subset of the container (ascending) and a witness mapping H(d)
/// onto the induced subdigraph on that subset.
struct Containment {
  std::vector<int> subset;
  SwitchingWitness witness;
};

/// Finds an induced subdigraph of `container` switching equivalent to `d`.
inline std::optional<Containment> contains_up_to_switching(const Digraph& d, const Digraph& container) {
  if (d.size() > container.size()) return std::nullopt;
  const HermMatrix hs = d.hermitian_adjacency();
  const HermMatrix ht = container.hermitian_adjacency();
  const auto src = detail::CodeMatrix::from(hs);
  const auto tgt = detail::CodeMatrix::from(ht);
  for (const bool cj : {false, true}) {
    const auto op = src.transformed(cj, false);
    if (cj && op == src) continue;
    detail::EmbeddingSearch search(op, tgt, false);
    const auto r = search.run();
    if (!r) continue;
    Containment c;
    c.subset = r->map;
    std::sort(c.subset.begin(), c.subset.end());
    c.witness.conjugated = cj;
    c.witness.phases = r->phases;
    for (int img : r->map)
      c.witness.perm.push_back(static_cast<int>(std::lower_bound(c.subset.begin(), c.subset.end(), img) -
                                                c.subset.begin()));
    if (!verifies(c.witness, hs, ht.principal_submatrix(c.subset)))
      throw InternalError("containment witness failed re-verification");
    return c;
  }
  return std::nullopt;
}

}  // namespace cyclo
