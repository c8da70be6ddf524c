#pragma once

#include "ceresa3/autgroup.hpp"
#include "ceresa3/cyclo7.hpp"
#include "ceresa3/matrix.hpp"
#include "ceresa3/quartic.hpp"
#include "ceresa3/rational.hpp"
#include "ceresa3/theta.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace ceresa3::io {

using nlohmann::json;

/// Errors from malformed input documents.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::filesystem::path& path);

json to_json(const Rational& r);
/// Accepts "p", "p/q" or a JSON integer.
Rational rational_from_json(const json& j);

json to_json(const Cyclo7& c);  // array of 6 rational strings
Cyclo7 cyclo_from_json(const json& j);

template <ExactField T>
json matrix_to_json(const Matrix<T>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix<Rational> rational_matrix_from_json(const json& j);
CycloMatrix cyclo_matrix_from_json(const json& j);

/// Either a list of matrices or {"generators": [...]}.
std::vector<CycloMatrix> generators_from_json(const json& j);

/// {"monomials": {"i,j,k": "p/q", ...}}
QuarticCoefficients quartic_from_json(const json& j);
json to_json(const QuarticCoefficients& f);

/// {"p": [p0, p1, p2], "q": [q01, q02, q12]}
DegreeTwoElement degree_two_from_json(const json& j);
json to_json(const DegreeTwoElement& h);

/// {"matrix": 6x6 rational strings, "rank": n, "det": "p/q"}
json to_json(const FormSummary& s);

/// {"re": 3x3, "im": 3x3}; validation errors surface as InputError.
PeriodMatrix period_matrix_from_json(const json& j);
json to_json(const PeriodMatrix& tau);

json to_json(const Complex& z);  // {"re": x, "im": y}
json to_json(const ThetaChar& c);  // {"mu": [...], "nu": [...]}

}  // namespace ceresa3::io
