#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "cyclo/error.hpp"

namespace cyclo {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// One of the four units of Z[i], stored as the exponent e in i^e.
enum class Unit : std::uint8_t { One = 0, I = 1, MinusOne = 2, MinusI = 3 };

constexpr Unit unit_from_exponent(int e) noexcept {
  return static_cast<Unit>(((e % 4) + 4) % 4);
}
constexpr int exponent(Unit u) noexcept { return static_cast<int>(u); }
constexpr Unit operator*(Unit a, Unit b) noexcept {
  return unit_from_exponent(exponent(a) + exponent(b));
}
constexpr Unit conj(Unit u) noexcept { return unit_from_exponent(-exponent(u)); }
constexpr Unit negate(Unit u) noexcept { return u * Unit::MinusOne; }

inline std::string_view to_string(Unit u) noexcept {
  switch (u) {
    case Unit::One: return "1";
    case Unit::I: return "i";
    case Unit::MinusOne: return "-1";
    case Unit::MinusI: return "-i";
  }
  return "?";
}

inline Unit parse_unit(std::string_view s) {
  if (s == "1") return Unit::One;
  if (s == "i") return Unit::I;
  if (s == "-1") return Unit::MinusOne;
  if (s == "-i") return Unit::MinusI;
  throw ParseError("not a unit of Z[i]: '" + std::string(s) + "'");
}

/// Exact Gaussian integer re + im*i.
class GaussInt {
 public:
  GaussInt() = default;
  GaussInt(BigInt re, BigInt im = 0) : re_(std::move(re)), im_(std::move(im)) {}
  GaussInt(int re, int im = 0) : re_(re), im_(im) {}
  GaussInt(Unit u) {  // NOLINT(google-explicit-constructor)
    switch (u) {
      case Unit::One: re_ = 1; break;
      case Unit::I: im_ = 1; break;
      case Unit::MinusOne: re_ = -1; break;
      case Unit::MinusI: im_ = -1; break;
    }
  }

  static GaussInt i() { return {0, 1}; }

  const BigInt& re() const noexcept { return re_; }
  const BigInt& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const noexcept { return im_.is_zero(); }

  GaussInt conj() const { return {re_, -im_}; }
  BigInt norm() const { return re_ * re_ + im_ * im_; }

  std::optional<Unit> as_unit() const {
    if (im_.is_zero()) {
      if (re_ == 1) return Unit::One;
      if (re_ == -1) return Unit::MinusOne;
    } else if (re_.is_zero()) {
      if (im_ == 1) return Unit::I;
      if (im_ == -1) return Unit::MinusI;
    }
    return std::nullopt;
  }
  bool is_unit() const { return as_unit().has_value(); }

  GaussInt operator-() const { return {-re_, -im_}; }
  GaussInt& operator+=(const GaussInt& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussInt& operator-=(const GaussInt& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussInt& operator*=(const GaussInt& o) { return *this = *this * o; }

  friend GaussInt operator+(GaussInt a, const GaussInt& b) { return a += b; }
  friend GaussInt operator-(GaussInt a, const GaussInt& b) { return a -= b; }
  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.im_.is_zero() && b.im_.is_zero()) return {a.re_ * b.re_};
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend bool operator==(const GaussInt&, const GaussInt&) = default;

  /// a / b when b divides a in Z[i]; nullopt otherwise (including b == 0).
  friend std::optional<GaussInt> exact_div(const GaussInt& a, const GaussInt& b) {
    const BigInt n = b.norm();
    if (n.is_zero()) return std::nullopt;
    const GaussInt num = a * b.conj();
    if (num.re_ % n != 0 || num.im_ % n != 0) return std::nullopt;
    return GaussInt{num.re_ / n, num.im_ / n};
  }

  /// Canonical text form: "0", "3", "-i", "2-3i", "i", "-5i".
  std::string to_string() const {
    if (im_.is_zero()) return re_.str();
    std::string imag;
    if (im_ == 1) imag = "i";
    else if (im_ == -1) imag = "-i";
    else imag = im_.str() + "i";
    if (re_.is_zero()) return imag;
    if (imag.front() != '-') imag = "+" + imag;
    return re_.str() + imag;
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussInt& z) {
    return os << z.to_string();
  }

 private:
  BigInt re_;
  BigInt im_;
};

/// Element of Q(i), used by exact elimination and root-basis factorization.
struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
  GaussRational(const GaussInt& z) : re(z.re()), im(z.im()) {}  // NOLINT

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  GaussRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  GaussRational operator-() const { return {-re, -im}; }
  friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
    const Rational n = b.norm();
    if (n.is_zero()) throw ContractViolation("division by zero in Q(i)");
    const GaussRational num = a * b.conj();
    return {num.re / n, num.im / n};
  }
  friend bool operator==(const GaussRational&, const GaussRational&) = default;

  std::string to_string() const {
    if (im.is_zero()) return re.str();
    const std::string imag = im.str() + "i";
    if (re.is_zero()) return imag;
    return re.str() + (im > 0 ? "+" : "") + imag;
  }
};

}  // namespace cyclo
