#include "ceresa3/ggcomplex.hpp"
#include "ceresa3/quartic.hpp"
#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace ceresa3;
using testing::random_quartic;
using testing::random_rational;

namespace {

Rational factorial(int n) {
  Rational r(1);
  for (int i = 2; i <= n; ++i) r *= Rational(i);
  return r;
}

// Pairing oracle: Q(e_i e_j, e_k e_l) = ∂_i∂_j∂_k∂_l f / 24 = c_K K! / 24, with
// K the exponent vector of the multiset {i,j,k,l}.
Rational pairing_oracle(const QuarticCoefficients& f, std::size_t u, std::size_t v) {
  Exponent k{0, 0, 0};
  ++k[kFormBasis[u][0]];
  ++k[kFormBasis[u][1]];
  ++k[kFormBasis[v][0]];
  ++k[kFormBasis[v][1]];
  const auto mono = f.monomials();
  const auto it = mono.find(k);
  if (it == mono.end()) return Rational(0);
  return it->second * factorial(k[0]) * factorial(k[1]) * factorial(k[2]) / Rational(24);
}

Rational evaluate(const QuarticCoefficients& f, const std::array<Rational, 3>& x) {
  Rational s;
  for (const auto& [e, c] : f.monomials()) s += c * pow(x[0], e[0]) * pow(x[1], e[1]) * pow(x[2], e[2]);
  return s;
}

DegreeTwoElement random_h() {
  DegreeTwoElement h;
  for (std::size_t i = 0; i < 3; ++i) {
    h.p[i] = random_rational();
    h.q[i] = random_rational();
  }
  return h;
}

}  // namespace

TEST_CASE("monomial convention", "[quartic]") {
  const auto k = klein_quartic();
  CHECK(k.b(1, 0) == Rational(1, 4));
  CHECK(k.b(2, 1) == Rational(1, 4));
  CHECK(k.b(0, 2) == Rational(1, 4));
  CHECK(k.b(0, 1).is_zero());
  CHECK(k.monomials().size() == 3);
  CHECK(fermat_quartic().a(2) == Rational(1));

  QuarticCoefficients f;
  f.c(0, 2) = Rational(1, 6);
  f.d(1) = Rational(1, 12);
  const auto m = f.monomials();
  CHECK(m.at({2, 0, 2}) == Rational(1));
  CHECK(m.at({1, 2, 1}) == Rational(1));
  CHECK(f.c(2, 0) == f.c(0, 2));
  CHECK_THROWS_AS(f.b(1, 1), std::out_of_range);
  CHECK_THROWS_AS(f.c(1, 1), std::out_of_range);
  CHECK_THROWS_AS(QuarticCoefficients::from_monomials({{{2, 2, 1}, 1}}), std::invalid_argument);
}

TEST_CASE("parsing quartic dictionaries", "[quartic]") {
  const auto f = parse_quartic({{"3,1,0", "1"}, {"0,3,1", "1"}, {"1,0,3", "1"}});
  CHECK(f == klein_quartic());
  CHECK(parse_exponent("0,4,0") == Exponent{0, 4, 0});
  CHECK(exponent_key({1, 2, 1}) == "1,2,1");
  CHECK_THROWS_AS(parse_quartic({{"1,1,1", "1"}}), std::invalid_argument);
  CHECK_THROWS_AS(parse_quartic({{"a,1,3", "1"}}), std::invalid_argument);
  CHECK_THROWS_AS(parse_quartic({{"4,0,0", "1/0"}}), std::invalid_argument);
}

TEST_CASE("Q_C matches the polarization oracle", "[quartic][property]") {
  std::vector<QuarticCoefficients> samples = {klein_quartic(), fermat_quartic()};
  for (int i = 0; i < 50; ++i) samples.push_back(random_quartic());
  for (const auto& f : samples) {
    const auto q = qc_matrix(f);
    for (std::size_t u = 0; u < 6; ++u)
      for (std::size_t v = 0; v < 6; ++v) CHECK(q(u, v) == pairing_oracle(f, u, v));
    CHECK(q.multiset_determined());
  }
}

TEST_CASE("Klein and Fermat forms", "[quartic]") {
  const auto k = summarize(qc_matrix(klein_quartic()));
  CHECK(k.rank == 6);
  CHECK(k.det == Rational(-1, 4096));
  CHECK(k.det * pow(Rational(12), 6) == Rational(-729));
  const auto f = summarize(qc_matrix(fermat_quartic()));
  CHECK(f.rank == 3);
  CHECK(f.det.is_zero());
}

TEST_CASE("Q_C is linear", "[quartic][property]") {
  for (int i = 0; i < 20; ++i) {
    const auto f = random_quartic(), g = random_quartic();
    const Rational s = random_rational();
    CHECK(qc_matrix(f + s * g) == qc_matrix(f) + s * qc_matrix(g));
  }
}

TEST_CASE("round trip through the form", "[quartic][property]") {
  CHECK(quartic_from_form(qc_matrix(klein_quartic())) == klein_quartic());
  CHECK(quartic_from_form(qc_matrix(fermat_quartic())) == fermat_quartic());
  for (int i = 0; i < 100; ++i) {
    const auto f = random_quartic();
    CHECK(quartic_from_form(qc_matrix(f)) == f);
  }
  DegreeTwoElement h;
  h.p[0] = 1;
  CHECK_THROWS_AS(quartic_from_form(rc_matrix(h)), std::invalid_argument);
}

TEST_CASE("R_C on e0^2", "[quartic]") {
  DegreeTwoElement h;
  h.p[0] = 1;
  const auto r = rc_matrix(h);
  CHECK(r.entry(1, 1, 2, 2) == Rational(4));
  CHECK(r.entry(2, 2, 1, 1) == Rational(4));
  CHECK(r.entry(1, 2, 1, 2) == Rational(-2));
  CHECK(rank(r.matrix()) == 3);
  // Every other entry vanishes.
  std::size_t nonzero = 0;
  for (std::size_t u = 0; u < 6; ++u)
    for (std::size_t v = 0; v < 6; ++v)
      if (!r(u, v).is_zero()) ++nonzero;
  CHECK(nonzero == 3);
}

TEST_CASE("R_C is linear with no quartic component", "[quartic][property]") {
  for (int i = 0; i < 20; ++i) {
    const auto h1 = random_h(), h2 = random_h();
    DegreeTwoElement sum;
    for (std::size_t k = 0; k < 3; ++k) {
      sum.p[k] = h1.p[k] + h2.p[k];
      sum.q[k] = h1.q[k] + h2.q[k];
    }
    CHECK(rc_matrix(sum) == rc_matrix(h1) + rc_matrix(h2));
    CHECK(split_form(rc_matrix(h1).matrix()).q_part.matrix().is_zero());
    const auto f = random_quartic();
    const auto d = dc_matrix(f, h1);
    CHECK(d.form == qc_matrix(f) + rc_matrix(h1));
  }
  CHECK(rc_matrix(DegreeTwoElement{}).matrix().is_zero());
}

TEST_CASE("coordinate changes: substitution and the twisted form law", "[quartic][property]") {
  for (int i = 0; i < 50; ++i) {
    const auto f = random_quartic();
    const auto g = testing::random_invertible(3);
    const auto cc = change_coordinates(f, g);

    // (f ∘ g)(x) = f(g x) at a random rational point.
    std::array<Rational, 3> x{random_rational(), random_rational(), random_rational()}, gx;
    for (std::size_t r = 0; r < 3; ++r) gx[r] = g(r, 0) * x[0] + g(r, 1) * x[1] + g(r, 2) * x[2];
    CHECK(evaluate(cc.quartic, x) == evaluate(f, gx));

    const auto s2g = sym2_form_basis_matrix(g);
    const Rational det = determinant(g);
    CHECK(qc_matrix(cc.quartic).matrix() == s2g.transpose() * qc_matrix(f).matrix() * s2g);
    CHECK(qc_matrix(cc.quartic) == det * cc.q_matrix);
  }
  CHECK_THROWS_AS(change_coordinates(klein_quartic(), Matrix<Rational>(3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(change_coordinates(klein_quartic(), Matrix<Rational>::identity(2)), std::invalid_argument);
}

TEST_CASE("sym2_form_basis_matrix is multiplicative", "[quartic][property]") {
  for (int i = 0; i < 10; ++i) {
    const auto g = testing::random_invertible(3), h = testing::random_invertible(3);
    CHECK(sym2_form_basis_matrix(g * h) == sym2_form_basis_matrix(g) * sym2_form_basis_matrix(h));
  }
}
