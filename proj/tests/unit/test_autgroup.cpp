#include "ceresa3/autgroup.hpp"
#include "ceresa3/elimination.hpp"
#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace ceresa3;

namespace {

// Order-2 element -(1/√−7)[z^a − z^{−a}], a = [1,2,4][(i+j) mod 3].
CycloMatrix involution() {
  const Cyclo7 s = Cyclo7::sqrt_minus7().inverse();
  const int exps[3] = {1, 2, 4};
  CycloMatrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const int a = exps[(i + j) % 3];
      m(i, j) = -(Cyclo7::zeta(a) - Cyclo7::zeta(-a)) * s;
    }
  return m;
}

const MatrixGroup& subgroup21() {
  static const MatrixGroup g = closure(klein_subgroup_generators());
  return g;
}

const MatrixGroup& klein_group() {
  static const MatrixGroup g = [] {
    auto gens = klein_subgroup_generators();
    gens.push_back(involution());
    return closure(gens);
  }();
  return g;
}

const MatrixGroup& trivial_group() {
  static const MatrixGroup g = closure({});
  return g;
}

}  // namespace

TEST_CASE("closure orders", "[autgroup]") {
  CHECK(trivial_group().order() == 1);
  CHECK(closure({CycloMatrix::identity(3)}).order() == 1);
  CHECK(subgroup21().order() == 21);
  CHECK(involution() * involution() == CycloMatrix::identity(3));
  CHECK(klein_group().order() == 168);
}

TEST_CASE("without the sign the closure doubles", "[autgroup]") {
  auto gens = klein_subgroup_generators();
  gens.push_back(involution() * Cyclo7(-1));
  const auto g = closure(gens);
  CHECK(g.order() == 336);
  CHECK(g.contains(CycloMatrix::identity(3) * Cyclo7(-1)));
}

TEST_CASE("closure errors", "[autgroup]") {
  const CycloMatrix infinite{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK_THROWS_WITH(closure({infinite}, 50), "group too large or not finite");
  CHECK_THROWS_AS(closure({CycloMatrix(3, 3)}), std::invalid_argument);
  CHECK_THROWS_AS(closure({CycloMatrix::identity(2)}), std::invalid_argument);
  CHECK_THROWS_WITH(closure(klein_subgroup_generators(), 20), "group too large or not finite");
}

TEST_CASE("group axioms by exhaustive products", "[autgroup][slow]") {
  CHECK(subgroup21().is_closed());
  CHECK(klein_group().is_closed());
  for (const auto& g : klein_group().elements()) CHECK(klein_group().contains(inverse(g)));
}

TEST_CASE("Klein group has determinant one", "[autgroup]") {
  for (const auto& g : klein_group().elements()) CHECK(determinant(g) == Cyclo7(1));
  CHECK(trivial_multiplicity(klein_group(), Module::detA) == 1);
  CHECK(trivial_multiplicity(klein_group(), Module::detB) == 1);
}

TEST_CASE("quartic preservation certificates", "[autgroup]") {
  const auto k21 = preserves_quartic(subgroup21(), klein_quartic());
  CHECK(k21.preserved);
  CHECK(k21.all_scalars_one());
  CHECK(!preserves_quartic(subgroup21(), fermat_quartic()).preserved);
  CHECK(preserves_quartic(trivial_group(), testing::random_quartic()).preserved);

  const auto k168 = preserves_quartic(klein_group(), klein_quartic());
  CHECK(k168.preserved);
  CHECK(k168.all_scalars_one());
  CHECK(k168.scalars.size() == 168);

  // x0^4 under diag(z, 1, 1) picks up z^4.
  QuarticCoefficients f;
  f.a(0) = 1;
  const auto g = closure({CycloMatrix{{Cyclo7::zeta(1), 0, 0}, {0, 1, 0}, {0, 0, 1}}});
  const auto cert = preserves_quartic(g, f);
  CHECK(cert.preserved);
  CHECK(!cert.all_scalars_one());
  CHECK(cert.scalars[1] == Cyclo7::zeta(4));
}

TEST_CASE("substitution matches the rational coordinate change", "[autgroup][property]") {
  for (int i = 0; i < 10; ++i) {
    const auto f = testing::random_quartic();
    const auto g = testing::random_invertible(3);
    CycloMatrix gc(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) gc(r, c) = Cyclo7(g(r, c));
    CHECK(substitute(quartic_vector(f), gc) == quartic_vector(change_coordinates(f, g).quartic));
  }
}

TEST_CASE("trivial multiplicities for the Klein group", "[autgroup]") {
  CHECK(trivial_multiplicity(klein_group(), Module::B) == 0);
  CHECK(trivial_multiplicity(klein_group(), Module::A) == 0);
  CHECK(trivial_multiplicity(klein_group(), Module::S2A_detB) == 0);
  CHECK(trivial_multiplicity(klein_group(), Module::S4B) == 1);
  CHECK(character_norm(klein_group(), Module::B) == Rational(1));
  CHECK(character_norm(klein_group(), Module::A) == Rational(1));
  CHECK(character_norm(klein_group(), Module::S2A_detB) == Rational(1));
  CHECK(trivial_multiplicity(trivial_group(), Module::S4B) == 15);
}

TEST_CASE("invariant subspaces", "[autgroup]") {
  const auto line = invariant_subspace(klein_group(), Module::S4B);
  REQUIRE(line.cols() == 1);
  CHECK(proportionality_factor(line, quartic_vector(klein_quartic())).has_value());
  CHECK(invariant_subspace(klein_group(), Module::S2A_detB).cols() == 0);
  CHECK(invariant_subspace(trivial_group(), Module::B).cols() == 3);
  CHECK(invariant_subspace(subgroup21(), Module::S4B).cols() ==
        trivial_multiplicity(subgroup21(), Module::S4B));
}

TEST_CASE("averaging projector is idempotent", "[autgroup][property]") {
  for (Module m : {Module::B, Module::S2A_detB, Module::S4B}) {
    const auto p = averaging_projector(subgroup21(), [m](const CycloMatrix& g) { return module_action(m, g); });
    CHECK(p * p == p);
  }
  const auto pb = averaging_projector(klein_group(), [](const CycloMatrix& g) { return module_action(Module::B, g); });
  CHECK(pb * pb == pb);
  CHECK(pb.is_zero());
}

TEST_CASE("multiplicity is additive on direct sums", "[autgroup][property]") {
  const std::array<Module, 6> all = {Module::B, Module::A, Module::S2A_detB, Module::S4B, Module::detA, Module::detB};
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int trial = 0; trial < 6; ++trial) {
    const Module m = all[pick(testing::rng())], n = all[pick(testing::rng())];
    const Representation sum = [m, n](const CycloMatrix& g) {
      return block_diagonal(module_action(m, g), module_action(n, g));
    };
    CHECK(trivial_multiplicity(subgroup21(), sum) ==
          trivial_multiplicity(subgroup21(), m) + trivial_multiplicity(subgroup21(), n));
  }
  const Representation b_plus_det = [](const CycloMatrix& g) {
    return block_diagonal(module_action(Module::B, g), module_action(Module::detA, g));
  };
  CHECK(trivial_multiplicity(klein_group(), b_plus_det) == 1);
}

TEST_CASE("a non-representation is rejected", "[autgroup]") {
  // Constant matrix with non-integral average trace.
  const Representation bogus = [](const CycloMatrix&) { return CycloMatrix{{Cyclo7(Rational(1, 2))}}; };
  CHECK_THROWS_WITH(trivial_multiplicity(subgroup21(), bogus), "inconsistent group action");
  CHECK_THROWS_AS(parse_module("C"), std::invalid_argument);
  CHECK(parse_module("S2A_detB") == Module::S2A_detB);
}
