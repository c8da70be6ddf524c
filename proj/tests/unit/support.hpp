#pragma once

#include "ceresa3/matrix.hpp"
#include "ceresa3/elimination.hpp"
#include "ceresa3/quartic.hpp"
#include "ceresa3/rational.hpp"

#include <random>

namespace testing {

using ceresa3::Matrix;
using ceresa3::Rational;

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20240607);
  return engine;
}

inline Rational random_rational(long range = 9, long max_den = 5) {
  std::uniform_int_distribution<long> num(-range, range), den(1, max_den);
  return Rational(num(rng()), den(rng()));
}

inline Matrix<Rational> random_matrix(std::size_t r, std::size_t c) {
  Matrix<Rational> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_rational();
  return m;
}

inline Matrix<Rational> random_invertible(std::size_t n) {
  for (;;) {
    auto m = random_matrix(n, n);
    if (!ceresa3::determinant(m).is_zero()) return m;
  }
}

inline ceresa3::QuarticCoefficients random_quartic() {
  ceresa3::MonomialMap m;
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; i + j <= 4; ++j) m[{i, j, 4 - i - j}] = random_rational();
  return ceresa3::QuarticCoefficients::from_monomials(m);
}

}  // namespace testing
