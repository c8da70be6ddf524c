#pragma once

#include "ceresa3/cyclo7.hpp"
#include "ceresa3/elimination.hpp"
#include "ceresa3/matrix.hpp"
#include "ceresa3/rational.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace ceresa3 {

enum class ScalarField { rational, cyclo7 };

template <class T>
constexpr ScalarField field_of();
template <>
constexpr ScalarField field_of<Rational>() { return ScalarField::rational; }
template <>
constexpr ScalarField field_of<Cyclo7>() { return ScalarField::cyclo7; }

/// Finite-dimensional space with an ordered basis of distinct labels.
class BasedSpace {
 public:
  BasedSpace() = default;
  BasedSpace(std::vector<std::string> labels, ScalarField field = ScalarField::rational);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  ScalarField field() const { return field_; }
  /// Throws std::out_of_range for an unknown label.
  std::size_t index_of(const std::string& label) const;

  friend bool operator==(const BasedSpace& a, const BasedSpace& b) {
    return a.labels_ == b.labels_ && a.field_ == b.field_;
  }

 private:
  std::vector<std::string> labels_;
  ScalarField field_ = ScalarField::rational;
  std::map<std::string, std::size_t> index_;
};

/// Sorted index tuples of length k with entries in [0, n): nondecreasing for
/// symmetric powers, strictly increasing for exterior powers. Lexicographic.
std::vector<std::vector<std::size_t>> multisets(std::size_t n, std::size_t k);
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

/// Position of a sorted tuple inside the corresponding enumeration.
std::size_t multiset_index(std::size_t n, const std::vector<std::size_t>& sorted);
std::size_t subset_index(std::size_t n, const std::vector<std::size_t>& sorted);

/// Degree-k monomials in the labels, e.g. "x0^2", "x0*x1".
BasedSpace sym_power(const BasedSpace& space, std::size_t k);
/// Sorted k-subsets, e.g. "e0∧e1". Throws std::domain_error when k > dim.
BasedSpace ext_power(const BasedSpace& space, std::size_t k);
BasedSpace dual_space(const BasedSpace& space);
BasedSpace tensor_space(const BasedSpace& a, const BasedSpace& b);
BasedSpace direct_sum(const BasedSpace& a, const BasedSpace& b);

/// Exact linear map; matrix is codomain.dim() x domain.dim().
template <ExactField T>
struct LinMap {
  BasedSpace domain;
  BasedSpace codomain;
  Matrix<T> matrix;

  LinMap() = default;
  LinMap(BasedSpace dom, BasedSpace cod, Matrix<T> m)
      : domain(std::move(dom)), codomain(std::move(cod)), matrix(std::move(m)) {
    if (matrix.rows() != codomain.dim() || matrix.cols() != domain.dim()) {
      throw std::invalid_argument("matrix shape " + matrix.shape() + " does not match spaces " +
                                  std::to_string(codomain.dim()) + "x" + std::to_string(domain.dim()));
    }
  }

  static LinMap identity(const BasedSpace& space) {
    return LinMap(space, space, Matrix<T>::identity(space.dim()));
  }
};

/// outer ∘ inner
template <ExactField T>
LinMap<T> compose(const LinMap<T>& outer, const LinMap<T>& inner) {
  if (!(outer.domain == inner.codomain)) throw std::invalid_argument("compose: spaces do not match");
  return LinMap<T>(inner.domain, outer.codomain, outer.matrix * inner.matrix);
}

template <ExactField T>
struct RankResult {
  std::size_t rank = 0;
  Matrix<T> kernel;  // columns in domain coordinates
  Matrix<T> image;   // columns in codomain coordinates
};

template <ExactField T>
RankResult<T> exact_rank(const LinMap<T>& map) {
  RankResult<T> out;
  out.kernel = kernel_basis(map.matrix);
  out.image = image_basis(map.matrix);
  out.rank = out.image.cols();
  return out;
}

/// Matrix of S^k(g) on the monomial basis of sym_power: column of a monomial
/// x_{i1}...x_{ik} holds the expansion of (g x_{i1})...(g x_{ik}).
template <ExactField T>
Matrix<T> sym_power_matrix(const Matrix<T>& g, std::size_t k) {
  if (!g.is_square()) throw std::invalid_argument("sym_power_matrix needs a square matrix");
  const std::size_t n = g.rows();
  const auto basis = multisets(n, k);
  Matrix<T> out(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    std::map<std::vector<std::size_t>, T> poly{{{}, T(1)}};
    for (std::size_t factor : basis[col]) {
      std::map<std::vector<std::size_t>, T> next;
      for (const auto& [mono, coeff] : poly) {
        for (std::size_t i = 0; i < n; ++i) {
          if (g(i, factor).is_zero()) continue;
          auto m = mono;
          m.insert(std::upper_bound(m.begin(), m.end(), i), i);
          auto it = next.find(m);
          const T term = coeff * g(i, factor);
          if (it == next.end()) next.emplace(std::move(m), term);
          else it->second = it->second + term;
        }
      }
      poly = std::move(next);
    }
    for (const auto& [mono, coeff] : poly) out(multiset_index(n, mono), col) = coeff;
  }
  return out;
}

/// Matrix of Λ^k(g) on sorted subsets: entries are k x k minors.
template <ExactField T>
Matrix<T> ext_power_matrix(const Matrix<T>& g, std::size_t k) {
  if (!g.is_square()) throw std::invalid_argument("ext_power_matrix needs a square matrix");
  const auto basis = subsets(g.rows(), k);
  Matrix<T> out(basis.size(), basis.size());
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (std::size_t c = 0; c < basis.size(); ++c) {
      Matrix<T> minor(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) minor(i, j) = g(basis[r][i], basis[c][j]);
      out(r, c) = determinant(minor);
    }
  return out;
}

enum class Construction { sym, ext, dual, tensor };

/// Induced action of an invertible g on S^k W, Λ^k W, W^∨ (contragredient) or
/// W^{⊗k}. Functorial: induced(gh) = induced(g) induced(h).
template <ExactField T>
LinMap<T> induced_map(const LinMap<T>& g, Construction construction, std::size_t k = 1) {
  if (!(g.domain == g.codomain)) throw std::invalid_argument("induced_map needs an endomorphism");
  if (rank(g.matrix) != g.domain.dim()) throw std::invalid_argument("induced_map: map is not invertible");
  switch (construction) {
    case Construction::sym: {
      auto space = sym_power(g.domain, k);
      return LinMap<T>(space, space, sym_power_matrix(g.matrix, k));
    }
    case Construction::ext: {
      auto space = ext_power(g.domain, k);
      return LinMap<T>(space, space, ext_power_matrix(g.matrix, k));
    }
    case Construction::dual: {
      auto space = dual_space(g.domain);
      return LinMap<T>(space, space, inverse(g.matrix).transpose());
    }
    case Construction::tensor: {
      if (k == 0) throw std::invalid_argument("tensor power needs k >= 1");
      BasedSpace space = g.domain;
      Matrix<T> m = g.matrix;
      for (std::size_t i = 1; i < k; ++i) {
        space = tensor_space(space, g.domain);
        m = kronecker(m, g.matrix);
      }
      return LinMap<T>(space, space, m);
    }
  }
  throw std::logic_error("unknown construction");
}

/// Quotient of an ambient space by the image of a relation map, with a basis
/// given by ambient labels complementary to the echelon pivots of the relations.
template <ExactField T>
class QuotientSpace {
 public:
  QuotientSpace(BasedSpace ambient, const Matrix<T>& relations) : ambient_(std::move(ambient)) {
    if (relations.rows() != ambient_.dim()) throw std::invalid_argument("relations not in ambient space");
    const auto ech = row_reduce(relations.transpose());
    std::vector<bool> is_pivot(ambient_.dim(), false);
    for (auto c : ech.pivots) is_pivot[c] = true;
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < ambient_.dim(); ++j) {
      if (is_pivot[j]) continue;
      complement_.push_back(j);
      labels.push_back("[" + ambient_.label(j) + "]");
    }
    space_ = BasedSpace(std::move(labels), ambient_.field());
    relation_rows_ = Matrix<T>(ech.pivots.size(), ambient_.dim());
    for (std::size_t r = 0; r < ech.pivots.size(); ++r)
      for (std::size_t j = 0; j < ambient_.dim(); ++j) relation_rows_(r, j) = ech.rref(r, j);

    std::vector<std::size_t> position(ambient_.dim(), 0);
    for (std::size_t q = 0; q < complement_.size(); ++q) position[complement_[q]] = q;
    projection_ = Matrix<T>(complement_.size(), ambient_.dim());
    inclusion_ = Matrix<T>(ambient_.dim(), complement_.size());
    for (std::size_t q = 0; q < complement_.size(); ++q) {
      projection_(q, complement_[q]) = T(1);
      inclusion_(complement_[q], q) = T(1);
    }
    // A pivot coordinate v_p is rewritten as -sum_c rref(p, c) v_c over the free columns.
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
      const std::size_t p = ech.pivots[r];
      for (std::size_t q = 0; q < complement_.size(); ++q)
        projection_(q, p) = -relation_rows_(r, complement_[q]);
    }
  }

  const BasedSpace& ambient() const { return ambient_; }
  const BasedSpace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  /// Ambient indices of the basis vectors kept in the quotient.
  const std::vector<std::size_t>& complement() const { return complement_; }
  /// dim x ambient.dim; kernel is exactly the relation span.
  const Matrix<T>& projection() const { return projection_; }
  /// ambient.dim x dim; projection * inclusion = identity.
  const Matrix<T>& inclusion() const { return inclusion_; }
  /// Rows spanning the relation subspace in reduced echelon form.
  const Matrix<T>& relation_rows() const { return relation_rows_; }

  /// Induced endomorphism of the quotient from one preserving the relations.
  Matrix<T> descend(const Matrix<T>& ambient_map) const { return projection_ * ambient_map * inclusion_; }

 private:
  BasedSpace ambient_;
  BasedSpace space_;
  std::vector<std::size_t> complement_;
  Matrix<T> relation_rows_;
  Matrix<T> projection_;
  Matrix<T> inclusion_;
};

}  // namespace ceresa3
