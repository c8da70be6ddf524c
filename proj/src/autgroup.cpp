#include "ceresa3/autgroup.hpp"

#include "ceresa3/elimination.hpp"
#include "ceresa3/multilinear.hpp"

#include <deque>
#include <stdexcept>

namespace ceresa3 {

std::string MatrixGroup::key(const CycloMatrix& g) {
  std::string out;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      for (const auto& c : g(i, j).coeffs()) {
        out += c.str();
        out += ',';
      }
      out += ';';
    }
  return out;
}

bool MatrixGroup::is_closed() const {
  for (const auto& x : elements_)
    for (const auto& y : elements_)
      if (!contains(x * y)) return false;
  return true;
}

MatrixGroup closure(const std::vector<CycloMatrix>& generators, std::size_t cap) {
  for (const auto& g : generators) {
    if (g.rows() != 3 || g.cols() != 3) throw std::invalid_argument("closure: generator is not 3x3");
    if (determinant(g).is_zero()) throw std::invalid_argument("closure: generator is singular");
  }
  MatrixGroup group;
  group.generators_ = generators;
  auto add = [&group, cap](CycloMatrix m) -> bool {
    auto k = MatrixGroup::key(m);
    if (group.index_.count(k)) return false;
    if (group.elements_.size() >= cap) throw std::runtime_error("group too large or not finite");
    group.index_.emplace(std::move(k), group.elements_.size());
    group.elements_.push_back(std::move(m));
    return true;
  };
  add(CycloMatrix::identity(3));
  // Finite order makes closure under products enough for inverses.
  for (std::size_t next = 0; next < group.elements_.size(); ++next) {
    for (const auto& s : generators) add(group.elements_[next] * s);
  }
  return group;
}

QuarticVector quartic_vector(const QuarticCoefficients& f) {
  QuarticVector v(15, 1);
  for (const auto& [e, c] : f.monomials()) {
    std::vector<std::size_t> m;
    for (std::size_t i = 0; i < 3; ++i)
      for (int n = 0; n < e[i]; ++n) m.push_back(i);
    v(multiset_index(3, m), 0) = Cyclo7(c);
  }
  return v;
}

QuarticVector substitute(const QuarticVector& f, const CycloMatrix& g) {
  return sym_power_matrix(g.transpose(), 4) * f;
}

std::optional<Cyclo7> proportionality_factor(const QuarticVector& v, const QuarticVector& w) {
  std::optional<Cyclo7> c;
  for (std::size_t i = 0; i < w.rows(); ++i) {
    if (w(i, 0).is_zero()) continue;
    c = v(i, 0) / w(i, 0);
    break;
  }
  if (!c) return std::nullopt;
  if (!(v == w * *c)) return std::nullopt;
  return c;
}

bool PreservationCertificate::all_scalars_one() const {
  for (const auto& s : scalars)
    if (!s || !(*s == Cyclo7(1))) return false;
  return true;
}

PreservationCertificate preserves_quartic(const MatrixGroup& g, const QuarticCoefficients& f) {
  PreservationCertificate cert;
  const QuarticVector v = quartic_vector(f);
  const bool zero = v.is_zero();
  for (const auto& h : g.elements()) {
    if (zero) {
      cert.scalars.emplace_back(Cyclo7(1));
      continue;
    }
    auto lambda = proportionality_factor(substitute(v, h), v);
    // Roots of unity in Q(z7) are ±z^k, all of order dividing 14.
    if (!lambda || !(pow(*lambda, 14) == Cyclo7(1))) {
      cert.preserved = false;
      cert.scalars.emplace_back(std::nullopt);
    } else {
      cert.scalars.push_back(std::move(*lambda));
    }
  }
  return cert;
}

std::string module_name(Module m) {
  switch (m) {
    case Module::B: return "B";
    case Module::A: return "A";
    case Module::S2A_detB: return "S2A_detB";
    case Module::S4B: return "S4B";
    case Module::detA: return "detA";
    case Module::detB: return "detB";
  }
  return "?";
}

Module parse_module(const std::string& name) {
  for (Module m : {Module::B, Module::A, Module::S2A_detB, Module::S4B, Module::detA, Module::detB})
    if (module_name(m) == name) return m;
  throw std::invalid_argument("unknown module '" + name + "' (expected B, A, S2A_detB, S4B, detA, detB)");
}

CycloMatrix module_action(Module m, const CycloMatrix& g) {
  switch (m) {
    case Module::A: return g;
    case Module::B: return inverse(g).transpose();
    case Module::S2A_detB: return sym_power_matrix(g, 2) * determinant(g).inverse();
    case Module::S4B: return sym_power_matrix(inverse(g).transpose(), 4);
    case Module::detA: return CycloMatrix{{determinant(g)}};
    case Module::detB: return CycloMatrix{{determinant(g).inverse()}};
  }
  throw std::logic_error("unreachable module");
}

namespace {

Representation as_representation(Module m) {
  return [m](const CycloMatrix& g) { return module_action(m, g); };
}

}  // namespace

std::size_t trivial_multiplicity(const MatrixGroup& g, const Representation& rho) {
  Cyclo7 sum;
  for (const auto& h : g.elements()) sum += trace(rho(h));
  const Cyclo7 avg = sum / Cyclo7(static_cast<long>(g.order()));
  if (!avg.is_rational() || !avg.rational_part().is_integer() || avg.rational_part().sign() < 0) {
    throw std::runtime_error("inconsistent group action");
  }
  return avg.rational_part().raw().get_num().get_ui();
}

std::size_t trivial_multiplicity(const MatrixGroup& g, Module m) {
  return trivial_multiplicity(g, as_representation(m));
}

Rational character_norm(const MatrixGroup& g, const Representation& rho) {
  Cyclo7 sum;
  for (const auto& h : g.elements()) {
    const Cyclo7 chi = trace(rho(h));
    sum += chi * chi.conj();
  }
  const Cyclo7 avg = sum / Cyclo7(static_cast<long>(g.order()));
  if (!avg.is_rational()) throw std::runtime_error("inconsistent group action");
  return avg.rational_part();
}

Rational character_norm(const MatrixGroup& g, Module m) { return character_norm(g, as_representation(m)); }

CycloMatrix averaging_projector(const MatrixGroup& g, const Representation& rho) {
  CycloMatrix p;
  for (const auto& h : g.elements()) {
    if (p.rows() == 0) p = rho(h);
    else p += rho(h);
  }
  return p * Cyclo7(Rational(1, static_cast<long>(g.order())));
}

CycloMatrix invariant_subspace(const MatrixGroup& g, Module m) {
  return image_basis(averaging_projector(g, as_representation(m)));
}

std::vector<CycloMatrix> klein_subgroup_generators() {
  const Cyclo7 z4 = Cyclo7::zeta(4), z2 = Cyclo7::zeta(2), z1 = Cyclo7::zeta(1);
  CycloMatrix diag{{z4, 0, 0}, {0, z2, 0}, {0, 0, z1}};
  CycloMatrix cycle{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  return {diag, cycle};
}

}  // namespace ceresa3
