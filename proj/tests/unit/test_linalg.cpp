#include "ceresa3/cyclo7.hpp"
#include "ceresa3/elimination.hpp"
#include "support.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

using namespace ceresa3;
using testing::random_matrix;

namespace {

// Leibniz expansion; independent of elimination.
Rational leibniz_det(const Matrix<Rational>& m) {
  std::vector<std::size_t> perm(m.rows());
  std::iota(perm.begin(), perm.end(), 0);
  Rational total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < perm.size(); ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("determinant agrees with the Leibniz formula", "[linalg][property]") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      const auto m = random_matrix(n, n);
      CHECK(determinant(m) == leibniz_det(m));
    }
}

TEST_CASE("rank of a product of thin factors", "[linalg][property]") {
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t r = 1 + trial % 4;
    const auto a = random_matrix(6, r), b = random_matrix(r, 7);
    const auto m = a * b;
    const std::size_t k = rank(m);
    CHECK(k <= r);
    CHECK(k == rank(m, PivotRule::last_nonzero));
    CHECK(k == rank(m.transpose()));
    const auto ker = kernel_basis(m);
    CHECK(ker.cols() == m.cols() - k);
    CHECK((m * ker).is_zero());
    CHECK(rank(ker) == ker.cols());
    const auto img = image_basis(m);
    CHECK(img.cols() == k);
    CHECK(in_column_span(img, m));
  }
}

TEST_CASE("inverse of random invertible matrices", "[linalg][property]") {
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = testing::random_invertible(4);
    CHECK(g * inverse(g) == Matrix<Rational>::identity(4));
    CHECK(inverse(g) * g == Matrix<Rational>::identity(4));
  }
  const Matrix<Rational> singular{{1, 2}, {2, 4}};
  CHECK_THROWS_AS(inverse(singular), std::domain_error);
  CHECK(determinant(singular).is_zero());
}

TEST_CASE("shape errors are reported", "[linalg]") {
  const Matrix<Rational> a(2, 3), b(2, 3);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK_THROWS_AS(a + Matrix<Rational>(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(determinant(a), std::invalid_argument);
  CHECK_THROWS_AS(trace(a), std::invalid_argument);
  CHECK_THROWS_AS((Matrix<Rational>{{1, 2}, {3}}), std::invalid_argument);
}

TEST_CASE("kronecker product is multiplicative", "[linalg][property]") {
  const auto a = random_matrix(2, 2), b = random_matrix(3, 3), c = random_matrix(2, 2), d = random_matrix(3, 3);
  CHECK(kronecker(a * c, b * d) == kronecker(a, b) * kronecker(c, d));
  CHECK(trace(kronecker(a, b)) == trace(a) * trace(b));
}

TEST_CASE("elimination over Q(zeta_7)", "[linalg]") {
  const Cyclo7 z = Cyclo7::zeta(1);
  const Matrix<Cyclo7> m{{z, z * z}, {z * z, pow(z, 3)}};  // rank 1
  CHECK(rank(m) == 1);
  CHECK(determinant(m).is_zero());
  const Matrix<Cyclo7> g{{z, 1}, {0, Cyclo7::zeta(3)}};
  CHECK(determinant(g) == pow(z, 4));
  CHECK(g * inverse(g) == Matrix<Cyclo7>::identity(2));
}
