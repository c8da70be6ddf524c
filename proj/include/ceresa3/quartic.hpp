#pragma once

#include "ceresa3/forms.hpp"
#include "ceresa3/matrix.hpp"
#include "ceresa3/rational.hpp"

#include <array>
#include <map>
#include <string>

namespace ceresa3 {

/// Exponent vector (i, j, k) of x0^i x1^j x2^k.
using Exponent = std::array<int, 3>;
/// Ternary form as monomial -> coefficient; absent monomials are zero.
using MonomialMap = std::map<Exponent, Rational>;

/// Quartic f = Σ a_j x_j⁴ + 4 Σ_{j≠k} b_jk x_j x_k³ + 6 Σ_{j<k} c_jk x_j²x_k²
///           + 12 Σ_j d_j x_j² x_k x_l   ({j,k,l} = {0,1,2}).
class QuarticCoefficients {
 public:
  QuarticCoefficients() = default;

  Rational& a(std::size_t j) { return a_.at(j); }
  const Rational& a(std::size_t j) const { return a_.at(j); }
  /// j ≠ k; coefficient attached to x_j x_k³.
  Rational& b(std::size_t j, std::size_t k);
  const Rational& b(std::size_t j, std::size_t k) const;
  /// j ≠ k, symmetric in (j, k).
  Rational& c(std::size_t j, std::size_t k);
  const Rational& c(std::size_t j, std::size_t k) const;
  Rational& d(std::size_t j) { return d_.at(j); }
  const Rational& d(std::size_t j) const { return d_.at(j); }

  /// The 15 monomial coefficients (zero entries omitted).
  MonomialMap monomials() const;
  /// Inverse of monomials(); throws std::invalid_argument when an exponent
  /// vector does not have degree 4.
  static QuarticCoefficients from_monomials(const MonomialMap& monomials);

  bool is_zero() const;

  friend QuarticCoefficients operator+(const QuarticCoefficients& x, const QuarticCoefficients& y);
  friend QuarticCoefficients operator*(const Rational& s, const QuarticCoefficients& x);
  friend bool operator==(const QuarticCoefficients& x, const QuarticCoefficients& y) = default;

 private:
  std::array<Rational, 3> a_;
  std::array<std::array<Rational, 3>, 3> b_;  // diagonal unused
  std::array<Rational, 3> c_;                 // (0,1), (0,2), (1,2)
  std::array<Rational, 3> d_;
};

/// h = Σ p_j e_j² + 2 Σ_{j<k} q_jk e_j e_k ∈ S²A.
struct DegreeTwoElement {
  std::array<Rational, 3> p;
  std::array<Rational, 3> q;  // q01, q02, q12

  const Rational& q_at(std::size_t j, std::size_t k) const;
  bool is_zero() const;
};

/// Parses {"i,j,k": "p/q", ...}. Keys must be three non-negative integers
/// summing to 4.
QuarticCoefficients parse_quartic(const std::map<std::string, std::string>& monomials);
Exponent parse_exponent(const std::string& key);
std::string exponent_key(const Exponent& e);

QuarticCoefficients klein_quartic();
QuarticCoefficients fermat_quartic();

/// Gram matrix of Q_C on e0², e1², e2², e0e1, e0e2, e1e2.
SymmetricForm6 qc_matrix(const QuarticCoefficients& f);

/// R_C through S²A → S²Λ²B → (S²B)^{⊗2} → bilinear forms, using a ↦ a⌟vol_B
/// and the degree-2 pairing.
SymmetricForm6 rc_matrix(const DegreeTwoElement& h);

struct FormSummary {
  SymmetricForm6 form;
  std::size_t rank = 0;
  Rational det;
};

FormSummary summarize(const SymmetricForm6& form);

/// D_C = Q_C + R_C.
FormSummary dc_matrix(const QuarticCoefficients& f, const DegreeTwoElement& h);

/// Inverse of qc_matrix. Throws std::invalid_argument("form has nonzero
/// R-component") unless the form is multiset-determined.
QuarticCoefficients quartic_from_form(const SymmetricForm6& q);

struct CoordinateChange {
  QuarticCoefficients quartic;  // f ∘ g, i.e. x ↦ g x on the points of P(A)
  SymmetricForm6 q_matrix;      // (S²g)ᵀ Q (S²g) det(g)⁻¹
};

/// Throws std::invalid_argument for a singular or non-3x3 g.
CoordinateChange change_coordinates(const QuarticCoefficients& f, const Matrix<Rational>& g);

/// Matrix of the map induced by g on S²A in kFormBasis order.
Matrix<Rational> sym2_form_basis_matrix(const Matrix<Rational>& g);

}  // namespace ceresa3
