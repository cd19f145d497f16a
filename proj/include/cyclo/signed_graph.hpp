#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/digraph.hpp"
#include "cyclo/error.hpp"
#include "cyclo/hermitian.hpp"
#include "cyclo/poly.hpp"
#include "cyclo/spectrum.hpp"

namespace cyclo {

/// Undirected graph whose edges carry a sign +1 or -1.
class SignedGraph {
 public:
  SignedGraph() = default;
  explicit SignedGraph(int n) : n_(n), sign_(static_cast<std::size_t>(pair_count(n)), 0) {
    if (n < 0) throw ContractViolation("negative vertex count");
  }

  int size() const noexcept { return n_; }

  /// 0 when x and y are not adjacent.
  int sign(int x, int y) const {
    check_pair(x, y);
    return sign_[pair_index(x, y)];
  }
  void set_sign(int x, int y, int s) {
    check_pair(x, y);
    if (s < -1 || s > 1) throw ContractViolation("edge sign must be -1, 0 or +1");
    sign_[pair_index(x, y)] = static_cast<std::int8_t>(s);
  }
  void add_positive(int x, int y) { set_sign(x, y, 1); }
  void add_negative(int x, int y) { set_sign(x, y, -1); }

  std::vector<std::pair<int, int>> edges_with_sign(int s) const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < n_; ++x)
      for (int y = x + 1; y < n_; ++y)
        if (sign_[pair_index(x, y)] == s) out.emplace_back(x, y);
    return out;
  }
  std::vector<std::pair<int, int>> positive_edges() const { return edges_with_sign(1); }
  std::vector<std::pair<int, int>> negative_edges() const { return edges_with_sign(-1); }

  HermMatrix adjacency_matrix() const {
    HermMatrix a(n_);
    for (int y = 1; y < n_; ++y)
      for (int x = 0; x < y; ++x)
        if (const int s = sign_[pair_index(x, y)]; s != 0) a.set(x, y, GaussInt(s));
    return a;
  }

  /// Reads a real symmetric matrix with entries in {0, +-1} and zero diagonal.
  static SignedGraph from_adjacency(const HermMatrix& a) {
    SignedGraph s(a.size());
    for (int x = 0; x < a.size(); ++x) {
      if (!a(x, x).is_zero()) throw NotAdjacencyClass("signed graph matrix has a nonzero diagonal");
      for (int y = x + 1; y < a.size(); ++y) {
        const GaussInt& z = a(x, y);
        if (z.is_zero()) continue;
        if (!z.is_real() || (z.re() != 1 && z.re() != -1))
          throw NotAdjacencyClass("entry " + z.to_string() + " is not a signed-graph entry");
        s.set_sign(x, y, static_cast<int>(z.re()));
      }
    }
    return s;
  }

  Graph underlying_graph() const {
    Graph g(n_);
    for (int y = 1; y < n_; ++y)
      for (int x = 0; x < y; ++x)
        if (sign_[pair_index(x, y)] != 0) g.add_edge(x, y);
    return g;
  }
  bool is_connected() const { return underlying_graph().is_connected(); }
  bool is_bipartite() const { return underlying_graph().bipartition().has_value(); }

  SignedGraph induced(std::span<const int> w) const {
    SignedGraph s(static_cast<int>(w.size()));
    for (int a = 0; a < s.size(); ++a)
      for (int b = a + 1; b < s.size(); ++b) s.set_sign(a, b, sign(w[a], w[b]));
    return s;
  }

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  void check_pair(int x, int y) const {
    if (x < 0 || y < 0 || x >= n_ || y >= n_ || x == y)
      throw ContractViolation("invalid vertex pair (" + std::to_string(x) + "," + std::to_string(y) +
                              ")");
  }

  int n_ = 0;
  std::vector<std::int8_t> sign_;
};

/// Signed graph on 2n vertices with adjacency [[A, B], [B^T, A]] where
/// H(d) = A + iB. Vertex x of d becomes x (first copy) and n + x (second).
inline SignedGraph associated_signed_graph(const Digraph& d) {
  const int n = d.size();
  SignedGraph s(2 * n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      switch (d.state(x, y)) {
        case PairState::None: break;
        case PairState::Digon:
          s.add_positive(x, y);
          s.add_positive(n + x, n + y);
          break;
        case PairState::Forward:  // arc x -> y
          s.add_positive(x, n + y);
          s.add_negative(n + x, y);
          break;
        case PairState::Backward:  // arc y -> x
          s.add_positive(y, n + x);
          s.add_negative(n + y, x);
          break;
      }
    }
  return s;
}

/// A connected component together with its vertices in the ambient graph.
struct SignedComponent {
  SignedGraph graph;
  std::vector<int> vertices;  ///< ambient vertex of each component vertex, ascending
};

/// Connected components, ordered by lowest ambient vertex; vertex order inside
/// each component follows the ambient order.
inline std::vector<SignedComponent> components(const SignedGraph& s) {
  const auto id = s.underlying_graph().component_ids();
  int count = 0;
  for (int c : id) count = std::max(count, c + 1);
  std::vector<SignedComponent> out(count);
  for (int x = 0; x < s.size(); ++x) out[id[x]].vertices.push_back(x);
  for (auto& c : out) c.graph = s.induced(c.vertices);
  return out;
}

/// Digraph with H = D* A(S) D, D = diag(1 on the part holding the lowest
/// vertex, i on the other part).
inline Digraph canonical_digraph(const SignedGraph& s) {
  const Graph g = s.underlying_graph();
  if (!g.is_connected()) throw ContractViolation("canonical_digraph requires a connected signed graph");
  const auto part = g.bipartition();
  if (!part) throw ContractViolation("canonical_digraph requires a bipartite signed graph");
  Digraph d(s.size());
  for (int x = 0; x < s.size(); ++x)
    for (int y = x + 1; y < s.size(); ++y) {
      const int sg = s.sign(x, y);
      if (sg == 0) continue;
      // entry conj(d_x) * sg * d_y; the side-0 endpoint contributes 1
      const bool x_first = (*part)[x] == 0;
      const int value = x_first ? sg : -sg;  // coefficient of i at (x, y)
      if (value > 0) d.add_arc(x, y);
      else d.add_arc(y, x);
    }
  return d;
}

inline IntPoly signed_char_poly(const SignedGraph& s) { return char_poly(s.adjacency_matrix()); }

}  // namespace cyclo
