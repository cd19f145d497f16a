#pragma once

#include <span>
#include <string>
#include <vector>

#include "cyclo/error.hpp"
#include "cyclo/gaussint.hpp"

namespace cyclo {

/// Square Hermitian matrix over Z[i]. Hermitian symmetry is checked on
/// construction; every mutation goes through set(), which keeps it.
class HermMatrix {
 public:
  HermMatrix() = default;
  explicit HermMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n) {
    if (n < 0) throw ContractViolation("negative matrix order");
  }

  /// Builds from row-major rows; throws ContractViolation unless square and
  /// Hermitian.
  static HermMatrix from_rows(const std::vector<std::vector<GaussInt>>& rows) {
    const int n = static_cast<int>(rows.size());
    HermMatrix m(n);
    for (int x = 0; x < n; ++x) {
      if (static_cast<int>(rows[x].size()) != n)
        throw ContractViolation("matrix is not square");
      for (int y = 0; y < n; ++y) m.at(x, y) = rows[x][y];
    }
    for (int x = 0; x < n; ++x)
      for (int y = x; y < n; ++y)
        if (m(y, x) != m(x, y).conj())
          throw ContractViolation("matrix is not Hermitian at (" + std::to_string(x) + "," +
                                  std::to_string(y) + ")");
    return m;
  }

  static HermMatrix identity(int n, const BigInt& scale = 1) {
    HermMatrix m(n);
    for (int x = 0; x < n; ++x) m.at(x, x) = GaussInt(scale);
    return m;
  }

  int size() const noexcept { return n_; }
  const GaussInt& operator()(int x, int y) const { return e_[index(x, y)]; }

  /// Sets entry (x,y) and its mirror. Diagonal values must be real.
  void set(int x, int y, const GaussInt& v) {
    if (x == y) {
      if (!v.is_real()) throw ContractViolation("diagonal entry of a Hermitian matrix must be real");
      at(x, x) = v;
      return;
    }
    at(x, y) = v;
    at(y, x) = v.conj();
  }

  HermMatrix principal_submatrix(std::span<const int> vertices) const {
    const int k = static_cast<int>(vertices.size());
    HermMatrix m(k);
    for (int a = 0; a < k; ++a) {
      check(vertices[a]);
      for (int b = 0; b < k; ++b) m.at(a, b) = (*this)(vertices[a], vertices[b]);
    }
    return m;
  }

  HermMatrix conjugated() const {
    HermMatrix m(n_);
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k].conj();
    return m;
  }

  HermMatrix negated() const {
    HermMatrix m(n_);
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = -e_[k];
    return m;
  }

  /// c*I - H.
  HermMatrix shifted(const BigInt& c) const {
    HermMatrix m = negated();
    for (int x = 0; x < n_; ++x) m.at(x, x) += GaussInt(c);
    return m;
  }

  bool has_zero_diagonal() const {
    for (int x = 0; x < n_; ++x)
      if (!(*this)(x, x).is_zero()) return false;
    return true;
  }

  /// Zero diagonal and every off-diagonal entry in {0, +-1, +-i}.
  bool is_adjacency_class() const {
    if (!has_zero_diagonal()) return false;
    for (const auto& z : e_)
      if (!z.is_zero() && !z.is_unit()) return false;
    return true;
  }

  friend bool operator==(const HermMatrix&, const HermMatrix&) = default;

  std::string to_string() const {
    std::string s;
    for (int x = 0; x < n_; ++x) {
      s += x == 0 ? "[[" : " [";
      for (int y = 0; y < n_; ++y) {
        if (y) s += ", ";
        s += (*this)(x, y).to_string();
      }
      s += x + 1 == n_ ? "]]" : "]\n";
    }
    if (n_ == 0) s = "[]";
    return s;
  }

 private:
  std::size_t index(int x, int y) const {
    check(x);
    check(y);
    return static_cast<std::size_t>(x) * n_ + y;
  }
  void check(int x) const {
    if (x < 0 || x >= n_) throw ContractViolation("vertex index out of range: " + std::to_string(x));
  }
  GaussInt& at(int x, int y) { return e_[index(x, y)]; }

  int n_ = 0;
  std::vector<GaussInt> e_;
};

}  // namespace cyclo
