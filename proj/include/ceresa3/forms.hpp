#pragma once

#include "ceresa3/matrix.hpp"
#include "ceresa3/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace ceresa3 {

/// Basis of S^2 of a 3-dimensional space in the order
/// v0^2, v1^2, v2^2, v0v1, v0v2, v1v2 used for all 6x6 forms.
inline constexpr std::array<std::array<std::size_t, 2>, 6> kFormBasis = {
    {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}, {1, 2}}};

/// Position of v_i v_j in kFormBasis.
std::size_t form_index(std::size_t i, std::size_t j);

/// Position of v_i v_j in the lexicographic monomial order
/// v0^2, v0v1, v0v2, v1^2, v1v2, v2^2 produced by sym_power.
std::size_t lex_index(std::size_t i, std::size_t j);

/// Labels of kFormBasis for a variable prefix ("e" gives "e0^2", ..., "e1*e2").
std::vector<std::string> form_labels(const std::string& prefix);

/// <x_a x_b, e_c e_d> = δ_ac δ_bd + δ_ad δ_bc (sum over S_2).
long degree2_pairing(std::array<std::size_t, 2> x, std::array<std::size_t, 2> e);

/// Levi-Civita symbol on {0,1,2}.
int levi_civita(std::size_t i, std::size_t j, std::size_t k);

/// Symmetric 6x6 rational matrix on kFormBasis of S^2 A.
class SymmetricForm6 {
 public:
  SymmetricForm6() : m_(6, 6) {}
  /// Throws std::invalid_argument unless m is 6x6 and symmetric.
  explicit SymmetricForm6(Matrix<Rational> m);

  const Matrix<Rational>& matrix() const { return m_; }
  const Rational& operator()(std::size_t u, std::size_t v) const { return m_(u, v); }

  /// Value on e_i e_j ⊗ e_k e_l.
  const Rational& entry(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return m_(form_index(i, j), form_index(k, l));
  }

  /// True when entry(i,j,k,l) depends only on the multiset {i,j,k,l}, i.e. the
  /// form comes from a quartic in S^4.
  bool multiset_determined() const;

  friend SymmetricForm6 operator+(const SymmetricForm6& a, const SymmetricForm6& b) {
    return SymmetricForm6(a.m_ + b.m_);
  }
  friend SymmetricForm6 operator-(const SymmetricForm6& a, const SymmetricForm6& b) {
    return SymmetricForm6(a.m_ - b.m_);
  }
  friend SymmetricForm6 operator*(const Rational& s, const SymmetricForm6& a) { return SymmetricForm6(a.m_ * s); }
  friend bool operator==(const SymmetricForm6& a, const SymmetricForm6& b) = default;

 private:
  Matrix<Rational> m_;
};

}  // namespace ceresa3
