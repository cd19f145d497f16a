#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/error.hpp"
#include "cyclo/gaussint.hpp"

namespace cyclo {

/// Dense univariate polynomial over Z, coefficients stored constant term
/// first. The zero polynomial has no coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPoly(std::initializer_list<int> coeffs) {
    for (int v : coeffs) c_.emplace_back(v);
    trim();
  }

  static IntPoly monomial(int degree, BigInt coeff = 1) {
    std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1);
    c.back() = std::move(coeff);
    return IntPoly(std::move(c));
  }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return c_; }
  BigInt coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : BigInt(0);
  }
  const BigInt& leading() const {
    if (c_.empty()) throw ContractViolation("leading coefficient of the zero polynomial");
    return c_.back();
  }

  IntPoly derivative() const {
    std::vector<BigInt> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
    return IntPoly(std::move(d));
  }

  /// p(-x).
  IntPoly reflected() const {
    std::vector<BigInt> d = c_;
    for (std::size_t k = 1; k < d.size(); k += 2) d[k] = -d[k];
    return IntPoly(std::move(d));
  }

  /// gcd of coefficients, nonnegative; 0 for the zero polynomial.
  BigInt content() const {
    BigInt g = 0;
    for (const auto& v : c_) g = boost::multiprecision::gcd(g, v);
    return abs(g);
  }

  /// Divides by the content; keeps the sign of the leading coefficient.
  IntPoly primitive_part() const {
    if (is_zero()) return {};
    const BigInt g = content();
    std::vector<BigInt> d = c_;
    for (auto& v : d) v /= g;
    return IntPoly(std::move(d));
  }

  IntPoly operator-() const {
    std::vector<BigInt> d = c_;
    for (auto& v : d) v = -v;
    return IntPoly(std::move(d));
  }
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> d(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    return IntPoly(std::move(d));
  }
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> d(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(d));
  }
  friend IntPoly operator*(const BigInt& s, const IntPoly& p) {
    std::vector<BigInt> d = p.c_;
    for (auto& v : d) v *= s;
    return IntPoly(std::move(d));
  }
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// Sign of p(v) for rational v: -1, 0 or +1.
  int sign_at(const Rational& v) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + Rational(*it);
    return acc.sign();
  }

  /// Human-readable form, highest degree first, e.g. "x^3 - 3x".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
      const BigInt& v = c_[k];
      if (v.is_zero()) continue;
      const bool neg = v < 0;
      const BigInt mag = abs(v);
      if (s.empty()) s += neg ? "-" : "";
      else s += neg ? " - " : " + ";
      if (mag != 1 || k == 0) s += mag.str();
      if (k >= 1) s += "x";
      if (k >= 2) s += "^" + std::to_string(k);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<BigInt> c_;
};

/// Pseudo-remainder of a by b scaled by |lc(b)|^(deg a - deg b + 1), so the
/// remainder keeps the sign of the true remainder over Q.
inline IntPoly signed_pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw ContractViolation("pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  const BigInt lb = b.leading();
  const int db = b.degree();
  std::vector<BigInt> r = a.coefficients();
  int steps = 0;
  for (int k = a.degree(); k >= db; --k) {
    const BigInt lead = r[k];
    for (auto& v : r) v *= lb;
    if (!lead.is_zero())
      for (int j = 0; j <= db; ++j) r[k - db + j] -= lead * b.coeff(j);
    ++steps;
  }
  IntPoly rem(std::move(r));
  // multiplied by lb^steps; undo a negative factor
  if (lb < 0 && steps % 2 == 1) rem = -rem;
  return rem;
}

/// Exact quotient a / b in Z[x]; throws InternalError if b does not divide a.
inline IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw ContractViolation("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw InternalError("inexact polynomial division");
  std::vector<BigInt> r = a.coefficients();
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const BigInt& lb = b.leading();
  for (int k = a.degree(); k >= b.degree(); --k) {
    if (r[k].is_zero()) continue;
    if (r[k] % lb != 0) throw InternalError("inexact polynomial division");
    const BigInt t = r[k] / lb;
    q[k - b.degree()] = t;
    for (int j = 0; j <= b.degree(); ++j) r[k - b.degree() + j] -= t * b.coeff(j);
  }
  for (const auto& v : r)
    if (!v.is_zero()) throw InternalError("inexact polynomial division");
  return IntPoly(std::move(q));
}

/// Primitive gcd with positive leading coefficient (primitive PRS).
inline IntPoly gcd(IntPoly a, IntPoly b) {
  if (a.is_zero() && b.is_zero()) return {};
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = signed_pseudo_remainder(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  return a.leading() < 0 ? -a : a;
}

/// p / gcd(p, p'), primitive with positive leading coefficient.
inline IntPoly square_free_part(const IntPoly& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : IntPoly{1};
  const IntPoly g = gcd(p, p.derivative());
  IntPoly q = divide_exact(p.primitive_part(), g);
  return q.leading() < 0 ? -q : q;
}

/// Yun's square-free decomposition: pairs (f_m, m) with p = c * prod f_m^m,
/// every f_m square-free, primitive, pairwise coprime and nonconstant.
inline std::vector<std::pair<IntPoly, int>> square_free_decomposition(const IntPoly& p) {
  std::vector<std::pair<IntPoly, int>> out;
  if (p.degree() <= 0) return out;
  const IntPoly f = p.primitive_part();
  const IntPoly a = gcd(f, f.derivative());
  IntPoly b = divide_exact(f, a);
  IntPoly d = divide_exact(f.derivative(), a) - b.derivative();
  // b and d are divided by the same g each round, so their relative scaling
  // stays exact over Z.
  for (int m = 1; b.degree() > 0; ++m) {
    const IntPoly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, m);
    b = divide_exact(b, g);
    d = divide_exact(d, g) - b.derivative();
  }
  return out;
}

}  // namespace cyclo
