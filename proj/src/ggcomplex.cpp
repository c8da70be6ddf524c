#include "ceresa3/ggcomplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace ceresa3 {

namespace {

constexpr std::size_t kH = 6;    // dim H
constexpr std::size_t kS2 = 6;   // dim S²B

bool is_a(std::size_t h) { return h < 3; }

// Sorts a wedge word in place; returns the permutation sign, or 0 on a repeat.
int sort_wedge(std::vector<std::size_t>& word) {
  int sign = 1;
  for (std::size_t i = 1; i < word.size(); ++i)
    for (std::size_t j = i; j > 0 && word[j - 1] >= word[j]; --j) {
      if (word[j - 1] == word[j]) return 0;
      std::swap(word[j - 1], word[j]);
      sign = -sign;
    }
  return sign;
}

// ω ∧ s for a sorted subset ω of S²B indices; returns sign (0 if s ∈ ω).
int wedge_right(const std::vector<std::size_t>& omega, std::size_t s, std::vector<std::size_t>& out) {
  if (std::find(omega.begin(), omega.end(), s) != omega.end()) return 0;
  out = omega;
  const auto pos = std::upper_bound(out.begin(), out.end(), s);
  const auto passed = static_cast<std::size_t>(out.end() - pos);
  out.insert(pos, s);
  return passed % 2 == 0 ? 1 : -1;
}

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t c = 1;
  for (std::size_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

BasedSpace wedge_s2b_space(const GGContext& ctx, std::size_t j) {
  if (j == 0) return BasedSpace({"1"});
  return ext_power(ctx.S2B(), j);
}

Matrix<Rational> restrict_to(const Matrix<Rational>& m, const std::vector<std::size_t>& idx) {
  Matrix<Rational> out(idx.size(), idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) out(r, c) = m(idx[r], idx[c]);
  return out;
}

}  // namespace

GGContext::GGContext()
    : a_({"e0", "e1", "e2"}),
      b_({"x0", "x1", "x2"}),
      h_({"e0", "e1", "e2", "x0", "x1", "x2"}),
      s2b_(sym_power(b_, 2)),
      wedge3_(ext_power(h_, 3)) {
  const auto basis = subsets(kH, 3);
  for (std::size_t w = 0; w < basis.size(); ++w) {
    const auto n_a = static_cast<int>(std::count_if(basis[w].begin(), basis[w].end(), is_a));
    piece_indices_[1 - n_a].push_back(w);
  }
  // θ∧h for h ∈ B lands in the one-A piece (level 0); for h ∈ A in the two-A piece (level -1).
  const Matrix<Rational> th = theta();
  const auto pairs = subsets(kH, 2);
  for (int level = -2; level <= 1; ++level) {
    const auto& idx = piece_indices_[level];
    std::vector<std::string> labels;
    for (auto w : idx) labels.push_back(wedge3_.label(w));
    Matrix<Rational> relations(idx.size(), 0);
    if (level == 0 || level == -1) {
      const std::size_t first = level == 0 ? 3 : 0;
      relations = Matrix<Rational>(idx.size(), 3);
      for (std::size_t k = 0; k < 3; ++k) {
        for (std::size_t pr = 0; pr < pairs.size(); ++pr) {
          if (th(pr, 0).is_zero()) continue;
          std::vector<std::size_t> word{pairs[pr][0], pairs[pr][1], first + k};
          const int sign = sort_wedge(word);
          if (sign == 0) continue;
          const auto w = subset_index(kH, word);
          const auto pos = std::find(idx.begin(), idx.end(), w) - idx.begin();
          relations(static_cast<std::size_t>(pos), k) += th(pr, 0) * Rational(sign);
        }
      }
    }
    pieces_.emplace(level, QuotientSpace<Rational>(BasedSpace(std::move(labels)), relations));
  }
}

Matrix<Rational> GGContext::theta() const {
  Matrix<Rational> th(binom(kH, 2), 1);
  for (std::size_t i = 0; i < 3; ++i) th(subset_index(kH, {i, i + 3}), 0) = 1;
  return th;
}

LinMap<Rational> GGContext::nabla_on_H() const {
  const BasedSpace target = tensor_space(a_, s2b_);
  Matrix<Rational> m(target.dim(), kH);
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t i = 0; i < 3; ++i) m(i * kS2 + lex_index(i, k), 3 + k) += 1;
  return LinMap<Rational>(h_, target, m);
}

Matrix<Rational> GGContext::nabla_wedge(std::size_t k) const {
  const auto basis = subsets(kH, k);
  Matrix<Rational> out(basis.size() * kS2, basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    for (std::size_t m = 0; m < k; ++m) {
      const std::size_t h = basis[col][m];
      if (is_a(h)) continue;
      for (std::size_t i = 0; i < 3; ++i) {
        auto word = basis[col];
        word[m] = i;
        const int sign = sort_wedge(word);
        if (sign == 0) continue;
        out(subset_index(kH, word) * kS2 + lex_index(i, h - 3), col) += Rational(sign);
      }
    }
  }
  return out;
}

const QuotientSpace<Rational>& GGContext::graded_piece(int level) const {
  const auto it = pieces_.find(level);
  if (it == pieces_.end()) throw std::out_of_range("no graded piece at level " + std::to_string(level));
  return it->second;
}

const std::vector<std::size_t>& GGContext::piece_indices(int level) const {
  const auto it = piece_indices_.find(level);
  if (it == piece_indices_.end()) throw std::out_of_range("no graded piece at level " + std::to_string(level));
  return it->second;
}

Matrix<Rational> GGContext::h_action(const Matrix<Rational>& g) {
  if (g.rows() != 3 || g.cols() != 3) throw std::invalid_argument("GL(B) element must be 3x3");
  return block_diagonal(inverse(g).transpose(), g);
}

GGComplex build_complex(const GGContext& ctx, int p) {
  if (p < 0 || p > 2) throw std::invalid_argument("p must be 0, 1 or 2");
  GGComplex c;
  c.p = p;
  auto has_piece = [](int level) { return level >= -2 && level <= 1; };
  for (std::size_t j = 0; j < 3; ++j) {
    const int level = p - static_cast<int>(j);
    c.levels[j] = level;
    const BasedSpace wedge = wedge_s2b_space(ctx, j);
    c.terms[j] = has_piece(level) ? tensor_space(ctx.graded_piece(level).space(), wedge) : BasedSpace();
  }

  const Matrix<Rational> nabla3 = ctx.nabla_wedge(3);
  for (std::size_t j = 0; j < 2; ++j) {
    Matrix<Rational> d(c.terms[j + 1].dim(), c.terms[j].dim());
    if (d.rows() > 0 && d.cols() > 0) {
      const auto& src = ctx.graded_piece(c.levels[j]);
      const auto& dst = ctx.graded_piece(c.levels[j + 1]);
      const auto& src_idx = ctx.piece_indices(c.levels[j]);
      const auto& dst_idx = ctx.piece_indices(c.levels[j + 1]);
      const auto omegas = j == 0 ? std::vector<std::vector<std::size_t>>{{}} : subsets(kS2, j);
      const std::size_t n_next = binom(kS2, j + 1);
      for (std::size_t q = 0; q < src.dim(); ++q) {
        for (std::size_t o = 0; o < omegas.size(); ++o) {
          const std::size_t col = q * omegas.size() + o;
          for (std::size_t a = 0; a < src_idx.size(); ++a) {
            const Rational& va = src.inclusion()(a, q);
            if (va.is_zero()) continue;
            for (std::size_t row = 0; row < nabla3.rows(); ++row) {
              const Rational& nv = nabla3(row, src_idx[a]);
              if (nv.is_zero()) continue;
              const std::size_t w = row / kS2;
              const std::size_t s = row % kS2;
              const auto pos_it = std::find(dst_idx.begin(), dst_idx.end(), w);
              if (pos_it == dst_idx.end()) throw std::logic_error("∇ left the expected Hodge level");
              const auto pos = static_cast<std::size_t>(pos_it - dst_idx.begin());
              std::vector<std::size_t> next;
              const int sign = wedge_right(omegas[o], s, next);
              if (sign == 0) continue;
              const std::size_t oi = subset_index(kS2, next);
              const Rational coeff = va * nv * Rational(sign);
              for (std::size_t q2 = 0; q2 < dst.dim(); ++q2) {
                const Rational& pr = dst.projection()(q2, pos);
                if (pr.is_zero()) continue;
                d(q2 * n_next + oi, col) += coeff * pr;
              }
            }
          }
        }
      }
    }
    c.differentials[j] = LinMap<Rational>(c.terms[j], c.terms[j + 1], std::move(d));
  }
  if (!(c.differentials[1].matrix * c.differentials[0].matrix).is_zero()) {
    throw std::logic_error("d∘d ≠ 0 in complex p=" + std::to_string(p));
  }
  return c;
}

std::array<std::size_t, 2> differential_ranks(const GGComplex& c) {
  return {rank(c.differentials[0].matrix), rank(c.differentials[1].matrix)};
}

std::array<std::size_t, 3> homology_dims(const GGComplex& c) {
  const auto r = differential_ranks(c);
  const auto dims = c.term_dims();
  return {dims[0] - r[0], dims[1] - r[1] - r[0], dims[2] - r[1]};
}

Matrix<Rational> term_action(const GGContext& ctx, const GGComplex& c, std::size_t degree,
                             const Matrix<Rational>& g) {
  if (degree > 2) throw std::out_of_range("complex degree must be 0, 1 or 2");
  if (c.terms[degree].dim() == 0) return Matrix<Rational>(0, 0);
  const Matrix<Rational> wedge3 = ext_power_matrix(GGContext::h_action(g), 3);
  const int level = c.levels[degree];
  const Matrix<Rational> piece = ctx.graded_piece(level).descend(restrict_to(wedge3, ctx.piece_indices(level)));
  if (degree == 0) return piece;
  return kronecker(piece, ext_power_matrix(sym_power_matrix(g, 2), degree));
}

CocycleSpaces cocycle_spaces(const GGComplex& p0) {
  if (p0.p != 0) throw std::invalid_argument("cocycle_spaces needs the p=0 complex");
  CocycleSpaces out;
  out.cocycles = kernel_basis(p0.differentials[1].matrix);
  out.coboundaries = image_basis(p0.differentials[0].matrix);
  out.cocycle_dim = out.cocycles.cols();
  out.coboundary_dim = out.coboundaries.cols();
  return out;
}

LemRepIsos lemrep_isos(const GGContext& ctx) {
  const auto basis = subsets(kH, 3);
  const auto& idx1 = ctx.piece_indices(-1);  // e_i ∧ e_j ∧ x_l
  const auto& idx2 = ctx.piece_indices(0);   // e_i ∧ x_j ∧ x_k

  Matrix<Rational> first(6, idx1.size());
  for (std::size_t c = 0; c < idx1.size(); ++c) {
    const auto& w = basis[idx1[c]];
    const std::size_t i = w[0], j = w[1], l = w[2] - 3;
    for (std::size_t k = 0; k < 3; ++k) {
      const int eps = levi_civita(i, j, k);
      if (eps != 0) first(lex_index(k, l), c) += Rational(eps);
    }
  }
  Matrix<Rational> second(6, idx2.size());
  for (std::size_t c = 0; c < idx2.size(); ++c) {
    const auto& w = basis[idx2[c]];
    const std::size_t i = w[0], j = w[1] - 3, k = w[2] - 3;
    for (std::size_t l = 0; l < 3; ++l) {
      const int eps = levi_civita(j, k, l);
      if (eps != 0) second(form_index(i, l), c) += Rational(eps);
    }
  }

  const BasedSpace s2a(form_labels("e"));
  const auto& q1 = ctx.graded_piece(-1);
  const auto& q2 = ctx.graded_piece(0);
  LemRepIsos out;
  out.first_unquotiented = LinMap<Rational>(q1.ambient(), ctx.S2B(), first);
  out.second_unquotiented = LinMap<Rational>(q2.ambient(), s2a, second);
  out.first = LinMap<Rational>(q1.space(), ctx.S2B(), first * q1.inclusion());
  out.second = LinMap<Rational>(q2.space(), s2a, second * q2.inclusion());
  return out;
}

CocycleForm cocycle_to_form(const GGContext& ctx, const Matrix<Rational>& z) {
  const auto iso = lemrep_isos(ctx).first.matrix;
  const std::size_t n = iso.cols();
  if (z.rows() != n * kS2 || z.cols() != 1) {
    throw std::invalid_argument("cocycle_to_form expects a " + std::to_string(n * kS2) + "x1 vector");
  }
  const auto lex = multisets(3, 2);
  // Z[α][s]: coefficient of (S²B)_α ⊗ (S²B)_s.
  Matrix<Rational> zz(kS2, kS2);
  for (std::size_t alpha = 0; alpha < kS2; ++alpha)
    for (std::size_t q = 0; q < n; ++q) {
      if (iso(alpha, q).is_zero()) continue;
      for (std::size_t s = 0; s < kS2; ++s) zz(alpha, s) += iso(alpha, q) * z(q * kS2 + s, 0);
    }
  // P[α][u] = <(S²B)_α, (S²A)_u>
  Matrix<Rational> pairing(kS2, 6);
  for (std::size_t alpha = 0; alpha < kS2; ++alpha)
    for (std::size_t u = 0; u < 6; ++u)
      pairing(alpha, u) = degree2_pairing({lex[alpha][0], lex[alpha][1]}, kFormBasis[u]);
  CocycleForm out;
  out.matrix = pairing.transpose() * zz * pairing;
  out.symmetric = out.matrix.is_symmetric();
  return out;
}

FormSplit split_form(const Matrix<Rational>& m) {
  const SymmetricForm6 form(m);
  Matrix<Rational> q(6, 6);
  for (std::size_t u = 0; u < 6; ++u)
    for (std::size_t v = 0; v < 6; ++v) {
      const std::size_t i = kFormBasis[u][0], j = kFormBasis[u][1];
      const std::size_t k = kFormBasis[v][0], l = kFormBasis[v][1];
      q(u, v) = (form.entry(i, j, k, l) + form.entry(i, k, j, l) + form.entry(i, l, j, k)) / Rational(3);
    }
  SymmetricForm6 q_part(std::move(q));
  return {q_part, form - q_part};
}

}  // namespace ceresa3
