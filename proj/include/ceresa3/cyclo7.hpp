#pragma once

#include "ceresa3/rational.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <array>
#include <complex>
#include <string>

namespace ceresa3 {

using HighReal = boost::multiprecision::mpfr_float;

/// Sets the default mpfr working precision for the lifetime of the guard.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned digits10)
      : saved_(HighReal::default_precision()) {
    HighReal::default_precision(digits10);
  }
  ~ScopedPrecision() { HighReal::default_precision(saved_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned saved_;
};

struct HighComplex {
  HighReal re;
  HighReal im;
  std::complex<double> to_complex() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }
};

/// Element c0 + c1 z + ... + c5 z^5 of Q(z), z = exp(2 pi i / 7).
///
/// The power basis 1..z^5 together with 1 + z + ... + z^6 = 0 gives every
/// element a unique representative, so equality is coefficient equality.
class Cyclo7 {
 public:
  using Coeffs = std::array<Rational, 6>;

  Cyclo7() = default;
  Cyclo7(Rational r) { c_[0] = std::move(r); }  // NOLINT(google-explicit-constructor)
  Cyclo7(long r) : Cyclo7(Rational(r)) {}        // NOLINT(google-explicit-constructor)
  explicit Cyclo7(Coeffs c) : c_(std::move(c)) {}

  /// z^k for any integer k.
  static Cyclo7 zeta(long k);
  /// sqrt(-7) = z + z^2 + z^4 - z^3 - z^5 - z^6.
  static Cyclo7 sqrt_minus7();

  const Coeffs& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Constant coefficient; only meaningful when is_rational().
  const Rational& rational_part() const { return c_[0]; }

  /// Image under the automorphism z -> z^k, k coprime to 7.
  Cyclo7 galois(int k) const;
  /// Complex conjugate (z -> z^6).
  Cyclo7 conj() const { return galois(6); }
  /// Field norm down to Q.
  Rational norm() const;
  /// Throws std::domain_error for zero.
  Cyclo7 inverse() const;

  Cyclo7& operator+=(const Cyclo7& o);
  Cyclo7& operator-=(const Cyclo7& o);
  Cyclo7& operator*=(const Cyclo7& o);
  Cyclo7& operator/=(const Cyclo7& o) { return *this *= o.inverse(); }

  friend Cyclo7 operator+(Cyclo7 a, const Cyclo7& b) { return a += b; }
  friend Cyclo7 operator-(Cyclo7 a, const Cyclo7& b) { return a -= b; }
  friend Cyclo7 operator*(Cyclo7 a, const Cyclo7& b) { return a *= b; }
  friend Cyclo7 operator/(Cyclo7 a, const Cyclo7& b) { return a /= b; }
  friend Cyclo7 operator-(const Cyclo7& a);
  friend bool operator==(const Cyclo7& a, const Cyclo7& b) = default;

  /// Human readable form such as "1 + 1/2*z^3".
  std::string str() const;

 private:
  Coeffs c_;
};

Cyclo7 pow(const Cyclo7& base, unsigned exponent);

/// Numerical value under z -> exp(2 pi i / 7) with absolute error below
/// 10^-precision_digits. Requires precision_digits >= 1.
HighComplex cyclo_embed(const Cyclo7& x, unsigned precision_digits);

}  // namespace ceresa3
