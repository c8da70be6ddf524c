#pragma once

#include "ceresa3/cyclo7.hpp"
#include "ceresa3/matrix.hpp"
#include "ceresa3/quartic.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace ceresa3 {

using CycloMatrix = Matrix<Cyclo7>;

/// Finite group of invertible 3x3 matrices over Q(z7). Elements act on A
/// (points of the plane); B carries the contragredient.
class MatrixGroup {
 public:
  const std::vector<CycloMatrix>& elements() const { return elements_; }
  const std::vector<CycloMatrix>& generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }

  bool contains(const CycloMatrix& g) const { return index_.count(key(g)) > 0; }

  /// Exhaustive check that every product of two elements is an element.
  bool is_closed() const;

  /// Canonical string for dedupe (coefficients are canonical, so exact).
  static std::string key(const CycloMatrix& g);

 private:
  friend MatrixGroup closure(const std::vector<CycloMatrix>& generators, std::size_t cap);
  std::vector<CycloMatrix> elements_;
  std::vector<CycloMatrix> generators_;
  std::unordered_map<std::string, std::size_t> index_;
};

inline constexpr std::size_t kDefaultClosureCap = 10000;

/// Breadth-first closure starting from the identity. Throws
/// std::invalid_argument for a non-3x3 or singular generator and
/// std::runtime_error("group too large or not finite") past the cap.
MatrixGroup closure(const std::vector<CycloMatrix>& generators, std::size_t cap = kDefaultClosureCap);

/// Coefficients of a ternary quartic on the lexicographic basis of S⁴B.
using QuarticVector = Matrix<Cyclo7>;
QuarticVector quartic_vector(const QuarticCoefficients& f);

/// f ∘ g as a coefficient vector (substitution x ↦ g x).
QuarticVector substitute(const QuarticVector& f, const CycloMatrix& g);

struct PreservationCertificate {
  bool preserved = true;
  /// λ_g with f ∘ g = λ_g f, per element in group order; empty when f ∘ g is
  /// not proportional to f.
  std::vector<std::optional<Cyclo7>> scalars;
  bool all_scalars_one() const;
};

/// f is preserved when every f ∘ g equals λ_g f for a root of unity λ_g.
/// The zero quartic is preserved with all λ = 1.
PreservationCertificate preserves_quartic(const MatrixGroup& g, const QuarticCoefficients& f);

enum class Module { B, A, S2A_detB, S4B, detA, detB };

std::string module_name(Module m);
/// Accepts the names produced by module_name ("B", "A", "S2A_detB", "S4B",
/// "detA", "detB"); throws std::invalid_argument otherwise.
Module parse_module(const std::string& name);

/// Matrix of g on the module; symmetric powers use the lexicographic monomial
/// basis.
CycloMatrix module_action(Module m, const CycloMatrix& g);

using Representation = std::function<CycloMatrix(const CycloMatrix&)>;

/// (1/|G|) Σ χ(g). Throws std::runtime_error("inconsistent group action")
/// unless the average is a non-negative rational integer.
std::size_t trivial_multiplicity(const MatrixGroup& g, const Representation& rho);
std::size_t trivial_multiplicity(const MatrixGroup& g, Module m);

/// (1/|G|) Σ χ(g) conj(χ(g)); equals 1 exactly for an irreducible module.
Rational character_norm(const MatrixGroup& g, const Representation& rho);
Rational character_norm(const MatrixGroup& g, Module m);

/// Averaging projector (1/|G|) Σ ρ(g).
CycloMatrix averaging_projector(const MatrixGroup& g, const Representation& rho);

/// Columns spanning the image of the averaging projector (possibly zero
/// columns).
CycloMatrix invariant_subspace(const MatrixGroup& g, Module m);

/// Generators of the order-21 subgroup: diag(z⁴, z², z) and the coordinate
/// cycle.
std::vector<CycloMatrix> klein_subgroup_generators();

/// c with v = c w, or nullopt when w is zero or v is not a multiple of w.
std::optional<Cyclo7> proportionality_factor(const QuarticVector& v, const QuarticVector& w);

}  // namespace ceresa3
