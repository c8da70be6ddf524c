#include "ceresa3/multilinear.hpp"
#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace ceresa3;
using testing::random_invertible;
using testing::random_matrix;

namespace {

BasedSpace coords(const std::string& prefix, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return BasedSpace(labels);
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t c = 1;
  for (std::size_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace

TEST_CASE("power dimensions and labels", "[multilinear]") {
  const auto b = coords("x", 3);
  for (std::size_t k = 1; k <= 5; ++k) CHECK(sym_power(b, k).dim() == binomial(k + 2, k));
  for (std::size_t k = 1; k <= 3; ++k) CHECK(ext_power(b, k).dim() == binomial(3, k));
  CHECK_THROWS_AS(ext_power(b, 4), std::domain_error);
  const auto s2 = sym_power(b, 2);
  CHECK(s2.labels() == std::vector<std::string>{"x0^2", "x0*x1", "x0*x2", "x1^2", "x1*x2", "x2^2"});
  CHECK(ext_power(b, 2).label(2) == "x1∧x2");
  CHECK(dual_space(b).dim() == 3);
  CHECK(tensor_space(b, coords("e", 2)).dim() == 6);
  CHECK(direct_sum(b, coords("e", 2)).dim() == 5);
  CHECK_THROWS_AS(BasedSpace({"a", "a"}), std::invalid_argument);
  CHECK_THROWS_AS(b.index_of("y"), std::out_of_range);
}

TEST_CASE("multiset and subset indices follow enumeration order", "[multilinear]") {
  for (std::size_t k = 0; k <= 4; ++k) {
    const auto ms = multisets(4, k);
    for (std::size_t i = 0; i < ms.size(); ++i) CHECK(multiset_index(4, ms[i]) == i);
    const auto ss = subsets(4, k);
    for (std::size_t i = 0; i < ss.size(); ++i) CHECK(subset_index(4, ss[i]) == i);
  }
}

TEST_CASE("induced maps are functorial", "[multilinear][property]") {
  const auto w = coords("x", 3);
  for (int trial = 0; trial < 10; ++trial) {
    const LinMap<Rational> g(w, w, random_invertible(3)), h(w, w, random_invertible(3));
    const auto gh = compose(g, h);
    for (auto [c, k] : {std::pair{Construction::sym, 2UL}, {Construction::sym, 4UL}, {Construction::ext, 2UL},
                        {Construction::dual, 1UL}, {Construction::tensor, 2UL}}) {
      CHECK(induced_map(gh, c, k).matrix == induced_map(g, c, k).matrix * induced_map(h, c, k).matrix);
    }
  }
}

TEST_CASE("traces of induced maps follow Newton identities", "[multilinear][property]") {
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = random_matrix(3, 3);
    const Rational t1 = trace(g), t2 = trace(g * g), t3 = trace(g * g * g);
    CHECK(trace(sym_power_matrix(g, 2)) == (t1 * t1 + t2) / Rational(2));
    CHECK(trace(ext_power_matrix(g, 2)) == (t1 * t1 - t2) / Rational(2));
    CHECK(trace(sym_power_matrix(g, 3)) == (t1 * t1 * t1 + Rational(3) * t1 * t2 + Rational(2) * t3) / Rational(6));
    CHECK(ext_power_matrix(g, 3)(0, 0) == determinant(g));
  }
}

TEST_CASE("induced_map rejects singular maps", "[multilinear]") {
  const auto w = coords("x", 2);
  const LinMap<Rational> g(w, w, Matrix<Rational>{{1, 1}, {1, 1}});
  CHECK_THROWS_AS(induced_map(g, Construction::sym, 2), std::invalid_argument);
  CHECK_THROWS_AS(LinMap<Rational>(w, w, Matrix<Rational>(3, 2)), std::invalid_argument);
  const LinMap<Rational> f(coords("y", 3), w, Matrix<Rational>(2, 3));
  CHECK_THROWS_AS(compose(f, g), std::invalid_argument);
}

TEST_CASE("quotient by a relation subspace", "[multilinear]") {
  const auto w = coords("v", 4);
  const Matrix<Rational> rel{{1, 0}, {1, 1}, {0, 1}, {0, 0}};  // spans v0+v1, v1+v2
  const QuotientSpace<Rational> q(w, rel);
  CHECK(q.dim() == 2);
  CHECK((q.projection() * rel).is_zero());
  CHECK(q.projection() * q.inclusion() == Matrix<Rational>::identity(2));
  CHECK(rank(q.projection()) == 2);

  // Maps preserving span(rel): block upper triangular in a basis starting with rel.
  const Matrix<Rational> s{{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}};
  auto adapted = [&s]() {
    auto u = random_matrix(4, 4);
    for (std::size_t i = 2; i < 4; ++i)
      for (std::size_t j = 0; j < 2; ++j) u(i, j) = 0;
    return s * u * inverse(s);
  };
  const auto a = adapted(), b = adapted();
  REQUIRE(in_column_span(rel, a * rel));
  REQUIRE(in_column_span(rel, b * rel));
  CHECK(q.descend(a * b) == q.descend(a) * q.descend(b));
}
