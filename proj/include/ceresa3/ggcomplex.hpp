#pragma once

#include "ceresa3/forms.hpp"
#include "ceresa3/multilinear.hpp"
#include "ceresa3/rational.hpp"

#include <array>
#include <map>
#include <vector>

namespace ceresa3 {

/// H = A ⊕ B with bases e0,e1,e2 and x0,x1,x2, <x_i, e_j> = δ_ij, the
/// symplectic element θ = Σ e_i ∧ x_i, and the Hodge-graded pieces of
/// V = Λ³H / θ∧H.
///
/// Index conventions: H index 0..2 is e0..e2 and 3..5 is x0..x2; S²B uses the
/// lexicographic monomial order of sym_power; Λ^k uses sorted subsets.
class GGContext {
 public:
  GGContext();

  const BasedSpace& A() const { return a_; }
  const BasedSpace& B() const { return b_; }
  const BasedSpace& H() const { return h_; }
  const BasedSpace& S2B() const { return s2b_; }
  const BasedSpace& wedge3H() const { return wedge3_; }

  /// θ as a column vector in Λ²H.
  Matrix<Rational> theta() const;

  /// ∇ : H → A ⊗ S²B, x_k ↦ Σ_i e_i ⊗ x_i x_k, e_i ↦ 0.
  LinMap<Rational> nabla_on_H() const;

  /// Derivation extension Λ^k H → Λ^k H ⊗ S²B (row index w * 6 + s).
  Matrix<Rational> nabla_wedge(std::size_t k) const;

  /// Gr_F^level V for level in {-2,-1,0,1}: the quotient of the span of the
  /// Λ³H basis vectors with 1 - level factors from A by the matching piece of θ∧H.
  const QuotientSpace<Rational>& graded_piece(int level) const;
  /// Λ³H indices spanning the ambient space of graded_piece(level).
  const std::vector<std::size_t>& piece_indices(int level) const;

  /// Action on H of g ∈ GL(B): g on B, the contragredient g^{-T} on A.
  static Matrix<Rational> h_action(const Matrix<Rational>& g);

 private:
  BasedSpace a_, b_, h_, s2b_, wedge3_;
  std::map<int, std::vector<std::size_t>> piece_indices_;
  std::map<int, QuotientSpace<Rational>> pieces_;
};

/// Gr_F^p(V ⊗ Λ^• S²B): terms Gr_F^{p-j} V ⊗ Λ^j S²B for j = 0, 1, 2.
struct GGComplex {
  int p = 0;
  std::array<int, 3> levels{};
  std::array<BasedSpace, 3> terms;
  std::array<LinMap<Rational>, 2> differentials;

  std::array<std::size_t, 3> term_dims() const {
    return {terms[0].dim(), terms[1].dim(), terms[2].dim()};
  }
};

/// Throws std::invalid_argument for p outside {0,1,2} and std::logic_error if
/// the differentials fail to compose to zero.
GGComplex build_complex(const GGContext& ctx, int p);

std::array<std::size_t, 2> differential_ranks(const GGComplex& c);
std::array<std::size_t, 3> homology_dims(const GGComplex& c);

/// Induced action of g ∈ GL(B) on the degree-j term.
Matrix<Rational> term_action(const GGContext& ctx, const GGComplex& c, std::size_t degree,
                             const Matrix<Rational>& g);

struct CocycleSpaces {
  std::size_t cocycle_dim = 0;
  std::size_t coboundary_dim = 0;
  Matrix<Rational> cocycles;      // columns: basis of ker d1
  Matrix<Rational> coboundaries;  // columns: basis of im d0
};

/// Requires the p = 0 complex.
CocycleSpaces cocycle_spaces(const GGComplex& p0);

/// The isomorphisms (Λ²A⊗B)/θA ≅ S²B⊗detA and (A⊗Λ²B)/θB ≅ S²A⊗detB with the
/// determinant lines trivialized by vol_A and vol_B. S²A is in kFormBasis
/// order, S²B in lexicographic order.
struct LemRepIsos {
  LinMap<Rational> first;
  LinMap<Rational> second;
  LinMap<Rational> first_unquotiented;   // Λ²A⊗B → S²B
  LinMap<Rational> second_unquotiented;  // A⊗Λ²B → S²A
};

LemRepIsos lemrep_isos(const GGContext& ctx);

struct CocycleForm {
  Matrix<Rational> matrix;  // 6x6 on kFormBasis of S²A
  bool symmetric = false;
};

/// Reads a degree-1 element of the p = 0 complex as a bilinear form on S²A
/// through the first isomorphism and the degree-2 pairing. Symmetric exactly
/// on cocycles.
CocycleForm cocycle_to_form(const GGContext& ctx, const Matrix<Rational>& z);

struct FormSplit {
  SymmetricForm6 q_part;  // S⁴ component
  SymmetricForm6 r_part;  // remainder, the S²Λ² component
};

/// Throws std::invalid_argument for an asymmetric matrix.
FormSplit split_form(const Matrix<Rational>& m);

}  // namespace ceresa3
