#include "ceresa3/quartic.hpp"

#include "ceresa3/elimination.hpp"
#include "ceresa3/multilinear.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <vector>

namespace ceresa3 {

namespace {

std::size_t c_slot(std::size_t j, std::size_t k) {
  if (j == k || j > 2 || k > 2) throw std::out_of_range("c_jk needs distinct indices in 0..2");
  if (j > k) std::swap(j, k);
  return j == 0 ? (k == 1 ? 0 : 1) : 2;
}

std::vector<std::size_t> exponent_to_multiset(const Exponent& e) {
  std::vector<std::size_t> m;
  for (std::size_t i = 0; i < 3; ++i)
    for (int n = 0; n < e[i]; ++n) m.push_back(i);
  return m;
}

Exponent multiset_to_exponent(const std::vector<std::size_t>& m) {
  Exponent e{0, 0, 0};
  for (auto i : m) ++e[i];
  return e;
}

}  // namespace

Rational& QuarticCoefficients::b(std::size_t j, std::size_t k) {
  if (j == k) throw std::out_of_range("b_jk needs j != k");
  return b_.at(j).at(k);
}

const Rational& QuarticCoefficients::b(std::size_t j, std::size_t k) const {
  if (j == k) throw std::out_of_range("b_jk needs j != k");
  return b_.at(j).at(k);
}

Rational& QuarticCoefficients::c(std::size_t j, std::size_t k) { return c_[c_slot(j, k)]; }
const Rational& QuarticCoefficients::c(std::size_t j, std::size_t k) const { return c_[c_slot(j, k)]; }

MonomialMap QuarticCoefficients::monomials() const {
  MonomialMap out;
  auto put = [&out](Exponent e, const Rational& v) {
    if (!v.is_zero()) out[e] = v;
  };
  for (std::size_t j = 0; j < 3; ++j) {
    Exponent e{0, 0, 0};
    e[j] = 4;
    put(e, a_[j]);
  }
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = 0; k < 3; ++k) {
      if (j == k) continue;
      Exponent e{0, 0, 0};
      e[j] = 1;
      e[k] = 3;
      put(e, Rational(4) * b_[j][k]);
    }
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = j + 1; k < 3; ++k) {
      Exponent e{0, 0, 0};
      e[j] = 2;
      e[k] = 2;
      put(e, Rational(6) * c(j, k));
    }
  for (std::size_t j = 0; j < 3; ++j) {
    Exponent e{1, 1, 1};
    e[j] = 2;
    put(e, Rational(12) * d_[j]);
  }
  return out;
}

QuarticCoefficients QuarticCoefficients::from_monomials(const MonomialMap& monomials) {
  QuarticCoefficients f;
  for (const auto& [e, v] : monomials) {
    if (e[0] < 0 || e[1] < 0 || e[2] < 0 || e[0] + e[1] + e[2] != 4) {
      throw std::invalid_argument("monomial " + exponent_key(e) + " is not of degree 4");
    }
    std::array<std::size_t, 5> by_count{};  // number of variables with each exponent
    for (int x : e) ++by_count[static_cast<std::size_t>(x)];
    auto var_with = [&e](int power) {
      return static_cast<std::size_t>(std::find(e.begin(), e.end(), power) - e.begin());
    };
    if (by_count[4] == 1) {
      f.a(var_with(4)) += v;
    } else if (by_count[3] == 1) {
      f.b(var_with(1), var_with(3)) += v / Rational(4);
    } else if (by_count[2] == 2) {
      const std::size_t zero = var_with(0);
      const std::size_t j = zero == 0 ? 1 : 0;
      const std::size_t k = zero == 2 ? 1 : 2;
      f.c(j, k) += v / Rational(6);
    } else {
      f.d(var_with(2)) += v / Rational(12);
    }
  }
  return f;
}

bool QuarticCoefficients::is_zero() const { return monomials().empty(); }

QuarticCoefficients operator+(const QuarticCoefficients& x, const QuarticCoefficients& y) {
  QuarticCoefficients out;
  for (std::size_t j = 0; j < 3; ++j) {
    out.a_[j] = x.a_[j] + y.a_[j];
    out.c_[j] = x.c_[j] + y.c_[j];
    out.d_[j] = x.d_[j] + y.d_[j];
    for (std::size_t k = 0; k < 3; ++k) out.b_[j][k] = x.b_[j][k] + y.b_[j][k];
  }
  return out;
}

QuarticCoefficients operator*(const Rational& s, const QuarticCoefficients& x) {
  QuarticCoefficients out;
  for (std::size_t j = 0; j < 3; ++j) {
    out.a_[j] = s * x.a_[j];
    out.c_[j] = s * x.c_[j];
    out.d_[j] = s * x.d_[j];
    for (std::size_t k = 0; k < 3; ++k) out.b_[j][k] = s * x.b_[j][k];
  }
  return out;
}

const Rational& DegreeTwoElement::q_at(std::size_t j, std::size_t k) const { return q[c_slot(j, k)]; }

bool DegreeTwoElement::is_zero() const {
  for (std::size_t i = 0; i < 3; ++i)
    if (!p[i].is_zero() || !q[i].is_zero()) return false;
  return true;
}

Exponent parse_exponent(const std::string& key) {
  Exponent e{};
  std::size_t start = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t end = i < 2 ? key.find(',', start) : key.size();
    if (end == std::string::npos) throw std::invalid_argument("bad exponent key '" + key + "'");
    const char* first = key.data() + start;
    const char* last = key.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, e[i]);
    if (ec != std::errc() || ptr != last || e[i] < 0) throw std::invalid_argument("bad exponent key '" + key + "'");
    start = end + 1;
  }
  return e;
}

std::string exponent_key(const Exponent& e) {
  return std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]);
}

QuarticCoefficients parse_quartic(const std::map<std::string, std::string>& monomials) {
  MonomialMap parsed;
  for (const auto& [key, value] : monomials) {
    const Exponent e = parse_exponent(key);
    if (e[0] + e[1] + e[2] != 4) throw std::invalid_argument("monomial " + key + " is not of degree 4");
    parsed[e] += Rational::parse(value);
  }
  return QuarticCoefficients::from_monomials(parsed);
}

QuarticCoefficients klein_quartic() {
  // x0³x1 + x1³x2 + x2³x0
  return QuarticCoefficients::from_monomials({{{3, 1, 0}, 1}, {{0, 3, 1}, 1}, {{1, 0, 3}, 1}});
}

QuarticCoefficients fermat_quartic() {
  return QuarticCoefficients::from_monomials({{{4, 0, 0}, 1}, {{0, 4, 0}, 1}, {{0, 0, 4}, 1}});
}

SymmetricForm6 qc_matrix(const QuarticCoefficients& f) {
  const auto& a0 = f.a(0); const auto& a1 = f.a(1); const auto& a2 = f.a(2);
  const auto& c01 = f.c(0, 1); const auto& c02 = f.c(0, 2); const auto& c12 = f.c(1, 2);
  const auto& d0 = f.d(0); const auto& d1 = f.d(1); const auto& d2 = f.d(2);
  const auto& b10 = f.b(1, 0); const auto& b20 = f.b(2, 0); const auto& b01 = f.b(0, 1);
  const auto& b21 = f.b(2, 1); const auto& b02 = f.b(0, 2); const auto& b12 = f.b(1, 2);
  // clang-format off
  return SymmetricForm6(Matrix<Rational>{
      {a0,  c01, c02, b10, b20, d0 },
      {c01, a1,  c12, b01, d1,  b21},
      {c02, c12, a2,  d2,  b02, b12},
      {b10, b01, d2,  c01, d0,  d1 },
      {b20, d1,  b02, d0,  c02, d2 },
      {d0,  b21, b12, d1,  d2,  c12}});
  // clang-format on
}

namespace {

struct Bivector {
  std::size_t j, k;  // j < k
  Rational coeff;
};

// e_l ⌟ (x0∧x1∧x2)
std::vector<Bivector> contract_volume(std::size_t l) {
  std::vector<Bivector> out;
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = j + 1; k < 3; ++k) {
      const int eps = levi_civita(l, j, k);
      if (eps != 0) out.push_back({j, k, Rational(eps)});
    }
  return out;
}

}  // namespace

SymmetricForm6 rc_matrix(const DegreeTwoElement& h) {
  // S²A element as coefficients on kFormBasis.
  std::array<Rational, 6> coeff;
  for (std::size_t j = 0; j < 3; ++j) coeff[form_index(j, j)] = h.p[j];
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = j + 1; k < 3; ++k) coeff[form_index(j, k)] = Rational(2) * h.q_at(j, k);

  // T[α][β] on (S²B)^{⊗2}, lexicographic.
  Matrix<Rational> t(6, 6);
  for (std::size_t u = 0; u < 6; ++u) {
    if (coeff[u].is_zero()) continue;
    const auto lhs = contract_volume(kFormBasis[u][0]);
    const auto rhs = contract_volume(kFormBasis[u][1]);
    for (const auto& w : lhs)
      for (const auto& w2 : rhs) {
        const Rational c = coeff[u] * w.coeff * w2.coeff;
        const std::size_t b1 = w.j, b2 = w.k, b1p = w2.j, b2p = w2.k;
        t(lex_index(b1, b1p), lex_index(b2, b2p)) += c;
        t(lex_index(b2, b2p), lex_index(b1, b1p)) += c;
        t(lex_index(b1, b2p), lex_index(b2, b1p)) -= c;
        t(lex_index(b2, b1p), lex_index(b1, b2p)) -= c;
      }
  }
  const auto lex = multisets(3, 2);
  Matrix<Rational> pairing(6, 6);
  for (std::size_t alpha = 0; alpha < 6; ++alpha)
    for (std::size_t u = 0; u < 6; ++u)
      pairing(alpha, u) = degree2_pairing({lex[alpha][0], lex[alpha][1]}, kFormBasis[u]);
  return SymmetricForm6(pairing.transpose() * t * pairing);
}

FormSummary summarize(const SymmetricForm6& form) {
  return {form, rank(form.matrix()), determinant(form.matrix())};
}

FormSummary dc_matrix(const QuarticCoefficients& f, const DegreeTwoElement& h) {
  return summarize(qc_matrix(f) + rc_matrix(h));
}

QuarticCoefficients quartic_from_form(const SymmetricForm6& q) {
  if (!q.multiset_determined()) throw std::invalid_argument("form has nonzero R-component");
  QuarticCoefficients f;
  for (std::size_t j = 0; j < 3; ++j) {
    f.a(j) = q.entry(j, j, j, j);
    const std::size_t k = (j + 1) % 3, l = (j + 2) % 3;
    f.d(j) = q.entry(j, j, k, l);
    for (std::size_t m = 0; m < 3; ++m)
      if (m != j) f.b(j, m) = q.entry(m, m, m, j);
  }
  f.c(0, 1) = q.entry(0, 0, 1, 1);
  f.c(0, 2) = q.entry(0, 0, 2, 2);
  f.c(1, 2) = q.entry(1, 1, 2, 2);
  return f;
}

Matrix<Rational> sym2_form_basis_matrix(const Matrix<Rational>& g) {
  if (g.rows() != 3 || g.cols() != 3) throw std::invalid_argument("expected a 3x3 matrix");
  Matrix<Rational> out(6, 6);
  for (std::size_t col = 0; col < 6; ++col) {
    const std::size_t i = kFormBasis[col][0], j = kFormBasis[col][1];
    // (g e_i)(g e_j) = Σ_{k,l} g_ki g_lj e_k e_l
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t l = 0; l < 3; ++l) out(form_index(k, l), col) += g(k, i) * g(l, j);
  }
  return out;
}

CoordinateChange change_coordinates(const QuarticCoefficients& f, const Matrix<Rational>& g) {
  if (g.rows() != 3 || g.cols() != 3) throw std::invalid_argument("coordinate change must be 3x3");
  const Rational det_g = determinant(g);
  if (det_g.is_zero()) throw std::invalid_argument("coordinate change is singular");

  // Substitution x_i ↦ Σ_j g_ij x_j acts on S⁴B through S⁴(gᵀ).
  const auto basis = multisets(3, 4);
  Matrix<Rational> coeffs(basis.size(), 1);
  for (const auto& [e, v] : f.monomials()) coeffs(multiset_index(3, exponent_to_multiset(e)), 0) = v;
  const Matrix<Rational> image = sym_power_matrix(g.transpose(), 4) * coeffs;
  MonomialMap substituted;
  for (std::size_t m = 0; m < basis.size(); ++m)
    if (!image(m, 0).is_zero()) substituted[multiset_to_exponent(basis[m])] = image(m, 0);

  const Matrix<Rational> s2g = sym2_form_basis_matrix(g);
  Matrix<Rational> q = s2g.transpose() * qc_matrix(f).matrix() * s2g;
  q *= det_g.inverse();
  return {QuarticCoefficients::from_monomials(substituted), SymmetricForm6(std::move(q))};
}

}  // namespace ceresa3
