#include "ceresa3/io.hpp"

#include <fstream>

namespace ceresa3::io {

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  try {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  throw InputError("expected a rational literal, got " + j.dump());
}

json to_json(const Cyclo7& c) {
  json out = json::array();
  for (const auto& r : c.coeffs()) out.push_back(to_json(r));
  return out;
}

Cyclo7 cyclo_from_json(const json& j) {
  if (!j.is_array() || j.size() != 6) throw InputError("expected 6 cyclotomic coefficients, got " + j.dump());
  Cyclo7::Coeffs c;
  for (std::size_t i = 0; i < 6; ++i) c[i] = rational_from_json(j[i]);
  return Cyclo7(c);
}

namespace {

template <class T, class F>
Matrix<T> matrix_from_json(const json& j, F&& entry) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw InputError("expected a matrix, got " + j.dump());
  Matrix<T> m(j.size(), j[0].size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != m.cols()) throw InputError("ragged matrix");
    for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = entry(j[i][k]);
  }
  return m;
}

Real3x3 real3x3(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 3) throw InputError(std::string("tau.") + what + " must be 3x3");
  Real3x3 out{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!j[i].is_array() || j[i].size() != 3) throw InputError(std::string("tau.") + what + " must be 3x3");
    for (std::size_t k = 0; k < 3; ++k) {
      if (!j[i][k].is_number()) throw InputError(std::string("tau.") + what + " entries must be numbers");
      out[i][k] = j[i][k].get<double>();
    }
  }
  return out;
}

}  // namespace

Matrix<Rational> rational_matrix_from_json(const json& j) { return matrix_from_json<Rational>(j, rational_from_json); }

CycloMatrix cyclo_matrix_from_json(const json& j) { return matrix_from_json<Cyclo7>(j, cyclo_from_json); }

std::vector<CycloMatrix> generators_from_json(const json& j) {
  if (j.is_object() && !j.contains("generators")) throw InputError("generator document needs a \"generators\" list");
  const json& list = j.is_object() ? j.at("generators") : j;
  if (!list.is_array()) throw InputError("generators must be a list of matrices");
  std::vector<CycloMatrix> out;
  for (const auto& m : list) out.push_back(cyclo_matrix_from_json(m));
  return out;
}

QuarticCoefficients quartic_from_json(const json& j) {
  if (!j.is_object() || !j.contains("monomials") || !j["monomials"].is_object()) {
    throw InputError("quartic must be {\"monomials\": {...}}");
  }
  MonomialMap m;
  try {
    for (const auto& [key, value] : j["monomials"].items()) {
      const Exponent e = parse_exponent(key);
      if (e[0] + e[1] + e[2] != 4) throw InputError("monomial " + key + " is not of degree 4");
      m[e] += rational_from_json(value);
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return QuarticCoefficients::from_monomials(m);
}

json to_json(const QuarticCoefficients& f) {
  json mono = json::object();
  for (const auto& [e, v] : f.monomials()) mono[exponent_key(e)] = to_json(v);
  return {{"monomials", mono}};
}

DegreeTwoElement degree_two_from_json(const json& j) {
  DegreeTwoElement h;
  for (const char* key : {"p", "q"}) {
    if (!j.contains(key) || !j[key].is_array() || j[key].size() != 3) {
      throw InputError(std::string("degree-two element needs a 3-entry \"") + key + "\" array");
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    h.p[i] = rational_from_json(j["p"][i]);
    h.q[i] = rational_from_json(j["q"][i]);
  }
  return h;
}

json to_json(const DegreeTwoElement& h) {
  json p = json::array(), q = json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    p.push_back(to_json(h.p[i]));
    q.push_back(to_json(h.q[i]));
  }
  return {{"p", p}, {"q", q}};
}

json to_json(const FormSummary& s) {
  return {{"matrix", matrix_to_json(s.form.matrix())}, {"rank", s.rank}, {"det", to_json(s.det)}};
}

PeriodMatrix period_matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im")) throw InputError("tau must be {\"re\": ..., \"im\": ...}");
  try {
    return PeriodMatrix(real3x3(j["re"], "re"), real3x3(j["im"], "im"));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

json to_json(const PeriodMatrix& tau) { return {{"re", tau.re()}, {"im", tau.im()}}; }

json to_json(const Complex& z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json to_json(const ThetaChar& c) { return {{"mu", c.mu}, {"nu", c.nu}}; }

}  // namespace ceresa3::io
