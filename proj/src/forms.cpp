#include "ceresa3/forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace ceresa3 {

std::size_t form_index(std::size_t i, std::size_t j) {
  if (i > 2 || j > 2) throw std::out_of_range("form_index: index out of range");
  if (i > j) std::swap(i, j);
  if (i == j) return i;
  return i == 0 ? (j == 1 ? 3 : 4) : 5;
}

std::size_t lex_index(std::size_t i, std::size_t j) {
  if (i > 2 || j > 2) throw std::out_of_range("lex_index: index out of range");
  if (i > j) std::swap(i, j);
  static constexpr std::size_t table[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
  return table[i][j];
}

std::vector<std::string> form_labels(const std::string& prefix) {
  std::vector<std::string> out;
  for (const auto& [i, j] : kFormBasis) {
    if (i == j) out.push_back(prefix + std::to_string(i) + "^2");
    else out.push_back(prefix + std::to_string(i) + "*" + prefix + std::to_string(j));
  }
  return out;
}

long degree2_pairing(std::array<std::size_t, 2> x, std::array<std::size_t, 2> e) {
  long v = 0;
  if (x[0] == e[0] && x[1] == e[1]) ++v;
  if (x[0] == e[1] && x[1] == e[0]) ++v;
  return v;
}

int levi_civita(std::size_t i, std::size_t j, std::size_t k) {
  if (i == j || j == k || i == k) return 0;
  // Even permutations of (0,1,2) are its cyclic rotations.
  if ((i == 0 && j == 1) || (i == 1 && j == 2) || (i == 2 && j == 0)) return 1;
  return -1;
}

SymmetricForm6::SymmetricForm6(Matrix<Rational> m) : m_(std::move(m)) {
  if (m_.rows() != 6 || m_.cols() != 6) throw std::invalid_argument("form must be 6x6, got " + m_.shape());
  if (!m_.is_symmetric()) throw std::invalid_argument("form is not symmetric");
}

bool SymmetricForm6::multiset_determined() const {
  for (std::size_t u = 0; u < 6; ++u)
    for (std::size_t v = 0; v < 6; ++v) {
      std::array<std::size_t, 4> idx{kFormBasis[u][0], kFormBasis[u][1], kFormBasis[v][0], kFormBasis[v][1]};
      std::sort(idx.begin(), idx.end());
      // Canonical pairing of the sorted multiset: {i0 i1} x {i2 i3}.
      if (!(m_(u, v) == entry(idx[0], idx[1], idx[2], idx[3]))) return false;
    }
  return true;
}

}  // namespace ceresa3
