#include "ceresa3/cyclo7.hpp"

#include <boost/math/constants/constants.hpp>

#include <stdexcept>

namespace ceresa3 {

namespace {

// Reduces a coefficient vector indexed by exponent mod 7 onto the power basis
// using z^6 = -(1 + z + ... + z^5).
Cyclo7::Coeffs reduce(const std::array<Rational, 7>& full) {
  Cyclo7::Coeffs out;
  for (int i = 0; i < 6; ++i) out[i] = full[i] - full[6];
  return out;
}

int mod7(long k) {
  const long r = k % 7;
  return static_cast<int>(r < 0 ? r + 7 : r);
}

}  // namespace

Cyclo7 Cyclo7::zeta(long k) {
  std::array<Rational, 7> full;
  full[mod7(k)] = 1;
  return Cyclo7(reduce(full));
}

Cyclo7 Cyclo7::sqrt_minus7() {
  return zeta(1) + zeta(2) + zeta(4) - zeta(3) - zeta(5) - zeta(6);
}

bool Cyclo7::is_zero() const {
  for (const auto& c : c_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool Cyclo7::is_rational() const {
  for (int i = 1; i < 6; ++i) {
    if (!c_[i].is_zero()) return false;
  }
  return true;
}

Cyclo7 Cyclo7::galois(int k) const {
  if (mod7(k) == 0) throw std::invalid_argument("galois exponent must be coprime to 7");
  std::array<Rational, 7> full;
  for (int i = 0; i < 6; ++i) full[mod7(static_cast<long>(i) * k)] += c_[i];
  return Cyclo7(reduce(full));
}

Rational Cyclo7::norm() const {
  Cyclo7 prod = *this;
  for (int k = 2; k <= 6; ++k) prod *= galois(k);
  if (!prod.is_rational()) throw std::logic_error("cyclotomic norm is not rational");
  return prod.rational_part();
}

Cyclo7 Cyclo7::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Cyclo7 cofactor(1);
  for (int k = 2; k <= 6; ++k) cofactor *= galois(k);
  const Cyclo7 n = *this * cofactor;
  if (!n.is_rational()) throw std::logic_error("cyclotomic norm is not rational");
  const Rational inv = n.rational_part().inverse();
  for (auto& c : cofactor.c_) c *= inv;
  return cofactor;
}

Cyclo7& Cyclo7::operator+=(const Cyclo7& o) {
  for (int i = 0; i < 6; ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclo7& Cyclo7::operator-=(const Cyclo7& o) {
  for (int i = 0; i < 6; ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclo7& Cyclo7::operator*=(const Cyclo7& o) {
  std::array<Rational, 7> full;
  for (int i = 0; i < 6; ++i) {
    if (c_[i].is_zero()) continue;
    for (int j = 0; j < 6; ++j) {
      if (o.c_[j].is_zero()) continue;
      full[(i + j) % 7] += c_[i] * o.c_[j];
    }
  }
  c_ = reduce(full);
  return *this;
}

Cyclo7 operator-(const Cyclo7& a) {
  Cyclo7 r = a;
  for (auto& c : r.c_) c = -c;
  return r;
}

std::string Cyclo7::str() const {
  std::string out;
  for (int i = 0; i < 6; ++i) {
    if (c_[i].is_zero()) continue;
    std::string coeff = c_[i].str();
    if (!out.empty()) {
      if (coeff[0] == '-') {
        out += " - ";
        coeff.erase(0, 1);
      } else {
        out += " + ";
      }
    }
    if (i == 0) {
      out += coeff;
    } else {
      if (coeff != "1") out += (coeff == "-1" ? std::string("-") : coeff + "*");
      out += i == 1 ? std::string("z") : "z^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

Cyclo7 pow(const Cyclo7& base, unsigned exponent) {
  Cyclo7 result(1);
  Cyclo7 b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

HighComplex cyclo_embed(const Cyclo7& x, unsigned precision_digits) {
  if (precision_digits < 1) throw std::invalid_argument("precision must be at least 1 digit");
  // Guard digits cover the six-term sum and the rational-to-float conversion.
  ScopedPrecision guard(precision_digits + 10);
  const HighReal angle = 2 * boost::math::constants::pi<HighReal>() / 7;
  HighComplex out{HighReal(0), HighReal(0)};
  for (int k = 0; k < 6; ++k) {
    const Rational& c = x.coeffs()[k];
    if (c.is_zero()) continue;
    const HighReal value =
        HighReal(c.numerator().get_str()) / HighReal(c.denominator().get_str());
    out.re += value * cos(angle * k);
    out.im += value * sin(angle * k);
  }
  return out;
}

}  // namespace ceresa3
