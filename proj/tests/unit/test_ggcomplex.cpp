#include "ceresa3/ggcomplex.hpp"
#include "ceresa3/quartic.hpp"
#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace ceresa3;

namespace {

const GGContext& ctx() {
  static const GGContext c;
  return c;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t c = 1;
  for (std::size_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// dim Gr^L V: words with 1 - L factors from A, less the θ∧H relations in the
// two middle levels.
std::size_t graded_dim(int level) {
  if (level > 1 || level < -2) return 0;
  const std::size_t a = static_cast<std::size_t>(1 - level);
  const std::size_t words = binomial(3, a) * binomial(3, 3 - a);
  return (level == 0 || level == -1) ? words - 3 : words;
}

Matrix<Rational> flatten(const std::vector<Matrix<Rational>>& forms) {
  Matrix<Rational> out(36, forms.size());
  for (std::size_t k = 0; k < forms.size(); ++k)
    for (std::size_t i = 0; i < 36; ++i) out(i, k) = forms[k](i / 6, i % 6);
  return out;
}

}  // namespace

TEST_CASE("term dimensions match the graded-piece count", "[ggcomplex]") {
  for (int p = 0; p < 3; ++p) {
    const auto c = build_complex(ctx(), p);
    const auto d = c.term_dims();
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(d[j] == graded_dim(p - static_cast<int>(j)) * binomial(6, j));
    }
  }
  CHECK(ctx().graded_piece(0).dim() == 6);
  CHECK(ctx().graded_piece(-1).dim() == 6);
  CHECK_THROWS_AS(build_complex(ctx(), 3), std::invalid_argument);
}

TEST_CASE("homology of the three complexes", "[ggcomplex]") {
  const std::array<std::array<std::size_t, 3>, 3> expected = {{{0, 15, 0}, {0, 0, 55}, {0, 0, 84}}};
  for (int p = 0; p < 3; ++p) {
    const auto c = build_complex(ctx(), p);
    CHECK((c.differentials[1].matrix * c.differentials[0].matrix).is_zero());
    const auto h = homology_dims(c);
    CHECK(h == expected[p]);
    const auto d = c.term_dims();
    // Euler characteristic.
    CHECK(static_cast<long>(d[0]) - static_cast<long>(d[1]) + static_cast<long>(d[2]) ==
          static_cast<long>(h[0]) - static_cast<long>(h[1]) + static_cast<long>(h[2]));
  }
}

TEST_CASE("nabla kills the symplectic form", "[ggcomplex]") {
  CHECK((ctx().nabla_wedge(2) * ctx().theta()).is_zero());
  CHECK(!(ctx().nabla_on_H().matrix.is_zero()));
}

TEST_CASE("differentials commute with GL(B)", "[ggcomplex][property]") {
  std::array<GGComplex, 3> cs = {build_complex(ctx(), 0), build_complex(ctx(), 1), build_complex(ctx(), 2)};
  for (int trial = 0; trial < 8; ++trial) {
    const auto g = testing::random_invertible(3);
    const auto h = testing::random_invertible(3);
    for (const auto& c : cs) {
      for (std::size_t j = 0; j < 2; ++j) {
        CHECK(c.differentials[j].matrix * term_action(ctx(), c, j, g) ==
              term_action(ctx(), c, j + 1, g) * c.differentials[j].matrix);
      }
      CHECK(term_action(ctx(), c, 1, g * h) == term_action(ctx(), c, 1, g) * term_action(ctx(), c, 1, h));
    }
  }
}

TEST_CASE("h_action preserves theta", "[ggcomplex][property]") {
  for (int trial = 0; trial < 5; ++trial) {
    const auto g = testing::random_invertible(3);
    const auto on_h = GGContext::h_action(g);
    CHECK(ext_power_matrix(on_h, 2) * ctx().theta() == ctx().theta());
  }
}

TEST_CASE("cocycle and coboundary dimensions", "[ggcomplex]") {
  const auto cs = cocycle_spaces(build_complex(ctx(), 0));
  CHECK(cs.cocycle_dim == 21);
  CHECK(cs.coboundary_dim == 6);
  CHECK_THROWS_AS(cocycle_spaces(build_complex(ctx(), 1)), std::invalid_argument);
}

TEST_CASE("the two isomorphisms are invertible", "[ggcomplex]") {
  const auto iso = lemrep_isos(ctx());
  CHECK(iso.first.matrix.rows() == 6);
  CHECK(rank(iso.first.matrix) == 6);
  CHECK(rank(iso.second.matrix) == 6);
  CHECK(rank(iso.first_unquotiented.matrix) == 6);
  CHECK(rank(iso.second_unquotiented.matrix) == 6);
}

TEST_CASE("cocycles give symmetric forms, coboundaries the remainder part", "[ggcomplex]") {
  const auto c0 = build_complex(ctx(), 0);
  const auto cs = cocycle_spaces(c0);
  std::vector<Matrix<Rational>> cocycle_forms, coboundary_forms, rc_forms;
  for (std::size_t k = 0; k < cs.cocycles.cols(); ++k) {
    const auto f = cocycle_to_form(ctx(), cs.cocycles.column(k));
    CHECK(f.symmetric);
    cocycle_forms.push_back(f.matrix);
  }
  // All of Sym²(S²A).
  CHECK(rank(flatten(cocycle_forms)) == 21);

  for (std::size_t k = 0; k < cs.coboundaries.cols(); ++k) {
    const auto f = cocycle_to_form(ctx(), cs.coboundaries.column(k));
    CHECK(split_form(f.matrix).q_part.matrix().is_zero());
    coboundary_forms.push_back(f.matrix);
  }
  for (std::size_t k = 0; k < 6; ++k) {
    DegreeTwoElement h;
    if (k < 3) h.p[k] = 1;
    else h.q[k - 3] = 1;
    rc_forms.push_back(rc_matrix(h).matrix());
  }
  const auto cob = flatten(coboundary_forms), rcs = flatten(rc_forms);
  CHECK(rank(cob) == 6);
  CHECK(rank(hstack(cob, rcs)) == 6);

  // A degree-1 element outside ker d1 reads as an asymmetric form.
  Matrix<Rational> z(36, 1);
  bool found = false;
  for (std::size_t i = 0; i < 36 && !found; ++i) {
    z = Matrix<Rational>(36, 1);
    z(i, 0) = 1;
    if (!(c0.differentials[1].matrix * z).is_zero()) found = true;
  }
  REQUIRE(found);
  CHECK(!cocycle_to_form(ctx(), z).symmetric);
}

TEST_CASE("split_form separates the quartic part", "[ggcomplex][property]") {
  for (int trial = 0; trial < 20; ++trial) {
    const auto q = qc_matrix(testing::random_quartic());
    const auto s = split_form(q.matrix());
    CHECK(s.q_part == q);
    CHECK(s.r_part.matrix().is_zero());

    DegreeTwoElement h;
    for (std::size_t i = 0; i < 3; ++i) {
      h.p[i] = testing::random_rational();
      h.q[i] = testing::random_rational();
    }
    const auto d = qc_matrix(testing::random_quartic()) + rc_matrix(h);
    const auto sd = split_form(d.matrix());
    CHECK(sd.q_part + sd.r_part == d);
    CHECK(sd.q_part.multiset_determined());
  }
  CHECK_THROWS_AS(split_form(Matrix<Rational>{{1, 2}, {3, 4}}), std::invalid_argument);
}
