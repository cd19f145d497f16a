#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/error.hpp"
#include "cyclo/gaussint.hpp"
#include "cyclo/hermitian.hpp"

namespace cyclo {

/// State of an unordered vertex pair {x, y} with x < y.
enum class PairState : std::uint8_t {
  None = 0,
  Digon = 1,
  Forward = 2,   ///< arc x -> y
  Backward = 3,  ///< arc y -> x
};

/// Index of the pair {x, y} (x != y) in colex order: (0,1), (0,2), (1,2),
/// (0,3), ... so the pairs inside the first m vertices come first.
constexpr int pair_index(int x, int y) noexcept {
  if (x > y) std::swap(x, y);
  return y * (y - 1) / 2 + x;
}
constexpr int pair_count(int n) noexcept { return n * (n - 1) / 2; }

/// Simple undirected graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(n) {}

  int size() const noexcept { return static_cast<int>(adj_.size()); }
  void add_edge(int x, int y) {
    if (x == y) throw ContractViolation("loops are not allowed");
    if (has_edge(x, y)) return;
    adj_.at(x).push_back(y);
    adj_.at(y).push_back(x);
    std::sort(adj_[x].begin(), adj_[x].end());
    std::sort(adj_[y].begin(), adj_[y].end());
  }
  bool has_edge(int x, int y) const {
    const auto& a = adj_.at(x);
    return std::binary_search(a.begin(), a.end(), y);
  }
  const std::vector<int>& neighbors(int x) const { return adj_.at(x); }
  int degree(int x) const { return static_cast<int>(adj_.at(x).size()); }
  int edge_count() const {
    int m = 0;
    for (const auto& a : adj_) m += static_cast<int>(a.size());
    return m / 2;
  }
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < size(); ++x)
      for (int y : adj_[x])
        if (x < y) out.emplace_back(x, y);
    return out;
  }

  /// Component id per vertex, ids assigned in order of lowest vertex.
  std::vector<int> component_ids() const {
    std::vector<int> id(size(), -1);
    int next = 0;
    for (int s = 0; s < size(); ++s) {
      if (id[s] >= 0) continue;
      std::queue<int> q;
      q.push(s);
      id[s] = next;
      while (!q.empty()) {
        const int x = q.front();
        q.pop();
        for (int y : adj_[x])
          if (id[y] < 0) {
            id[y] = next;
            q.push(y);
          }
      }
      ++next;
    }
    return id;
  }
  bool is_connected() const {
    const auto id = component_ids();
    return std::all_of(id.begin(), id.end(), [](int c) { return c == 0; });
  }

  /// 2-coloring with the lowest vertex of each component colored 0, or
  /// nullopt if some component is not bipartite.
  std::optional<std::vector<int>> bipartition() const {
    std::vector<int> color(size(), -1);
    for (int s = 0; s < size(); ++s) {
      if (color[s] >= 0) continue;
      color[s] = 0;
      std::queue<int> q;
      q.push(s);
      while (!q.empty()) {
        const int x = q.front();
        q.pop();
        for (int y : adj_[x]) {
          if (color[y] < 0) {
            color[y] = 1 - color[x];
            q.push(y);
          } else if (color[y] == color[x]) {
            return std::nullopt;
          }
        }
      }
    }
    return color;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<int>> adj_;
};

/// Digraph without loops: every unordered pair is empty, a digon, or one arc.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n) : n_(n), pairs_(static_cast<std::size_t>(pair_count(n)), PairState::None) {
    if (n < 0) throw ContractViolation("negative vertex count");
  }

  int size() const noexcept { return n_; }

  /// State of {x, y} seen from x: Forward means x -> y.
  PairState state(int x, int y) const {
    check_pair(x, y);
    const PairState s = pairs_[pair_index(x, y)];
    if (x < y || s == PairState::None || s == PairState::Digon) return s;
    return s == PairState::Forward ? PairState::Backward : PairState::Forward;
  }

  void set_state(int x, int y, PairState s) {
    check_pair(x, y);
    if (x > y) {
      std::swap(x, y);
      if (s == PairState::Forward) s = PairState::Backward;
      else if (s == PairState::Backward) s = PairState::Forward;
    }
    pairs_[pair_index(x, y)] = s;
  }
  void add_digon(int x, int y) { set_state(x, y, PairState::Digon); }
  void add_arc(int tail, int head) { set_state(tail, head, PairState::Forward); }

  bool adjacent(int x, int y) const { return state(x, y) != PairState::None; }

  /// Raw pair states in pair_index order.
  std::span<const PairState> pair_states() const noexcept { return pairs_; }
  static Digraph from_pair_states(int n, std::vector<PairState> states) {
    if (static_cast<int>(states.size()) != pair_count(n))
      throw ContractViolation("pair-state vector has the wrong length");
    Digraph d(n);
    d.pairs_ = std::move(states);
    return d;
  }

  /// Hermitian adjacency entry for the ordered pair (x, y).
  GaussInt entry(int x, int y) const {
    if (x == y) return {};
    switch (state(x, y)) {
      case PairState::None: return {};
      case PairState::Digon: return GaussInt(1);
      case PairState::Forward: return GaussInt(0, 1);
      case PairState::Backward: return GaussInt(0, -1);
    }
    return {};
  }

  HermMatrix hermitian_adjacency() const {
    HermMatrix h(n_);
    for (int y = 1; y < n_; ++y)
      for (int x = 0; x < y; ++x)
        if (pairs_[pair_index(x, y)] != PairState::None) h.set(x, y, entry(x, y));
    return h;
  }

  /// Inverse of hermitian_adjacency. Entries must be 0, 1, i or -i off the
  /// diagonal and 0 on it.
  static Digraph from_hermitian(const HermMatrix& h) {
    Digraph d(h.size());
    for (int x = 0; x < h.size(); ++x) {
      if (!h(x, x).is_zero())
        throw InvalidAdjacency("nonzero diagonal entry " + h(x, x).to_string() + " at (" +
                               std::to_string(x) + "," + std::to_string(x) + ")");
      for (int y = x + 1; y < h.size(); ++y) {
        const GaussInt& z = h(x, y);
        if (z.is_zero()) continue;
        const auto u = z.as_unit();
        if (!u || *u == Unit::MinusOne)
          throw InvalidAdjacency("entry " + z.to_string() + " at (" + std::to_string(x) + "," +
                                 std::to_string(y) + ") is not in {0, 1, i, -i}");
        d.set_state(x, y, *u == Unit::One ? PairState::Digon : *u == Unit::I ? PairState::Forward
                                                                              : PairState::Backward);
      }
    }
    return d;
  }

  /// Induced subdigraph on the listed vertices, renumbered in list order.
  Digraph subdigraph(std::span<const int> w) const {
    for (std::size_t a = 0; a < w.size(); ++a) {
      if (w[a] < 0 || w[a] >= n_)
        throw ContractViolation("subdigraph vertex out of range: " + std::to_string(w[a]));
      for (std::size_t b = 0; b < a; ++b)
        if (w[a] == w[b]) throw ContractViolation("repeated vertex in subdigraph");
    }
    Digraph d(static_cast<int>(w.size()));
    for (int a = 0; a < d.size(); ++a)
      for (int b = a + 1; b < d.size(); ++b) d.set_state(a, b, state(w[a], w[b]));
    return d;
  }

  /// Arcs reversed, digons kept; H(converse) = conj(H).
  Digraph converse() const {
    Digraph d = *this;
    for (auto& s : d.pairs_) {
      if (s == PairState::Forward) s = PairState::Backward;
      else if (s == PairState::Backward) s = PairState::Forward;
    }
    return d;
  }

  Graph underlying_graph() const {
    Graph g(n_);
    for (int y = 1; y < n_; ++y)
      for (int x = 0; x < y; ++x)
        if (pairs_[pair_index(x, y)] != PairState::None) g.add_edge(x, y);
    return g;
  }

  bool is_connected() const { return underlying_graph().is_connected(); }

  /// True iff some cycle of the underlying graph uses an odd number of arcs.
  /// Equivalent to a parity labelling p with p(x) + p(y) = [xy is an arc]
  /// (mod 2) failing to exist on the connected digraph.
  bool has_odd_arc_cycle() const {
    if (!is_connected()) throw ContractViolation("has_odd_arc_cycle requires a connected digraph");
    std::vector<int> parity(n_, -1);
    if (n_ == 0) return false;
    parity[0] = 0;
    std::queue<int> q;
    q.push(0);
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int y = 0; y < n_; ++y) {
        if (y == x) continue;
        const PairState s = state(x, y);
        if (s == PairState::None) continue;
        const int want = parity[x] ^ (s == PairState::Digon ? 0 : 1);
        if (parity[y] < 0) {
          parity[y] = want;
          q.push(y);
        } else if (parity[y] != want) {
          return true;
        }
      }
    }
    return false;
  }

  std::vector<std::pair<int, int>> digons() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < n_; ++x)
      for (int y = x + 1; y < n_; ++y)
        if (state(x, y) == PairState::Digon) out.emplace_back(x, y);
    return out;
  }
  /// Arcs as (tail, head).
  std::vector<std::pair<int, int>> arcs() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < n_; ++x)
      for (int y = x + 1; y < n_; ++y) {
        const PairState s = state(x, y);
        if (s == PairState::Forward) out.emplace_back(x, y);
        else if (s == PairState::Backward) out.emplace_back(y, x);
      }
    return out;
  }

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  void check_pair(int x, int y) const {
    if (x < 0 || y < 0 || x >= n_ || y >= n_)
      throw ContractViolation("vertex out of range in pair (" + std::to_string(x) + "," +
                              std::to_string(y) + ")");
    if (x == y) throw ContractViolation("loops are not allowed");
  }

  int n_ = 0;
  std::vector<PairState> pairs_;
};

}  // namespace cyclo
