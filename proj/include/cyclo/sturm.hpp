#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cyclo/error.hpp"
#include "cyclo/gaussint.hpp"
#include "cyclo/poly.hpp"

namespace cyclo {

/// a + b*sqrt(2) with rational a, b.
struct QuadRational {
  Rational a;
  Rational b;

  QuadRational() = default;
  QuadRational(Rational a_, Rational b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}  // NOLINT
  QuadRational(int v) : a(v) {}  // NOLINT

  static QuadRational sqrt2(const Rational& scale = 1) { return {0, scale}; }

  /// Exact sign: compares a^2 with 2b^2 when a and b disagree.
  int sign() const {
    const int sa = a.sign();
    const int sb = b.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    const Rational lhs = a * a;
    const Rational rhs = 2 * b * b;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
  }

  friend QuadRational operator+(const QuadRational& x, const QuadRational& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend QuadRational operator-(const QuadRational& x, const QuadRational& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend QuadRational operator*(const QuadRational& x, const QuadRational& y) {
    return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend bool operator==(const QuadRational&, const QuadRational&) = default;

  std::string to_string() const {
    if (b.is_zero()) return a.str();
    std::string s = a.is_zero() ? "" : a.str() + (b > 0 ? "+" : "");
    return s + b.str() + "*sqrt2";
  }
};

/// Sign of p(v), evaluated by Horner's rule in Q(sqrt 2).
inline int sign_at(const IntPoly& p, const QuadRational& v) {
  if (v.b.is_zero()) return p.sign_at(v.a);
  QuadRational acc;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * v + QuadRational(Rational(*it));
  return acc.sign();
}

/// Interval endpoint: a finite element of Q(sqrt 2) or +-infinity.
struct Bound {
  enum class Kind { NegInf, Finite, PosInf };
  Kind kind = Kind::Finite;
  QuadRational value;

  static Bound neg_inf() { return {Kind::NegInf, {}}; }
  static Bound pos_inf() { return {Kind::PosInf, {}}; }
  static Bound at(QuadRational v) { return {Kind::Finite, std::move(v)}; }

  bool finite() const { return kind == Kind::Finite; }
};

inline int compare(const Bound& x, const Bound& y) {
  auto rank = [](const Bound& b) { return b.kind == Bound::Kind::NegInf ? 0 : b.kind == Bound::Kind::Finite ? 1 : 2; };
  if (rank(x) != rank(y)) return rank(x) < rank(y) ? -1 : 1;
  if (!x.finite()) return 0;
  return (x.value - y.value).sign();
}

/// Sturm chain of the square-free part of a nonzero polynomial. Counts are of
/// distinct real roots.
class SturmChain {
 public:
  explicit SturmChain(const IntPoly& p) {
    if (p.is_zero()) throw ContractViolation("Sturm chain of the zero polynomial");
    IntPoly q = square_free_part(p);
    chain_.push_back(q);
    if (q.degree() <= 0) return;
    chain_.push_back(q.derivative().primitive_part());
    while (chain_.back().degree() > 0) {
      IntPoly r = -signed_pseudo_remainder(chain_[chain_.size() - 2], chain_.back());
      if (r.is_zero()) break;
      chain_.push_back(r.primitive_part());
    }
  }

  const IntPoly& square_free() const { return chain_.front(); }
  const std::vector<IntPoly>& polynomials() const { return chain_; }

  /// Number of sign changes of the chain at b, zeros skipped.
  int variations(const Bound& b) const {
    int changes = 0;
    int prev = 0;
    for (const auto& s : chain_) {
      int v;
      if (b.kind == Bound::Kind::Finite) {
        v = sign_at(s, b.value);
      } else {
        v = s.leading().sign();
        if (b.kind == Bound::Kind::NegInf && s.degree() % 2 == 1) v = -v;
      }
      if (v == 0) continue;
      if (prev != 0 && v != prev) ++changes;
      prev = v;
    }
    return changes;
  }

  bool is_root(const Bound& b) const { return b.finite() && sign_at(chain_.front(), b.value) == 0; }

  /// Distinct roots in the interval from lo to hi; closed_lo / closed_hi select
  /// whether finite endpoints are included.
  int count(const Bound& lo, const Bound& hi, bool closed_lo, bool closed_hi) const {
    const int cmp = compare(lo, hi);
    if (cmp > 0) throw ContractViolation("empty interval: lo > hi");
    if (cmp == 0) return closed_lo && closed_hi && is_root(lo) ? 1 : 0;
    // V(lo) - V(hi) counts roots in (lo, hi]
    int n = variations(lo) - variations(hi);
    if (!closed_hi && is_root(hi)) --n;
    if (closed_lo && is_root(lo)) ++n;
    return n;
  }

  int count_all() const { return count(Bound::neg_inf(), Bound::pos_inf(), false, false); }

 private:
  std::vector<IntPoly> chain_;
};

/// Distinct real roots of p between lo and hi.
inline int count_roots_in(const IntPoly& p, const Bound& lo, const Bound& hi, bool closed_lo,
                          bool closed_hi) {
  return SturmChain(p).count(lo, hi, closed_lo, closed_hi);
}

/// Real roots of p between lo and hi, counted with multiplicity.
inline int count_roots_with_multiplicity(const IntPoly& p, const Bound& lo, const Bound& hi,
                                         bool closed_lo, bool closed_hi) {
  if (p.is_zero()) throw ContractViolation("root count of the zero polynomial");
  int total = 0;
  for (const auto& [factor, mult] : square_free_decomposition(p))
    total += mult * SturmChain(factor).count(lo, hi, closed_lo, closed_hi);
  return total;
}

}  // namespace cyclo
