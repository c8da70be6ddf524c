#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace ceresa3 {

/// Characteristic (a, b) = (mu/2, nu/2) with mu, nu ∈ {0,1}³.
struct ThetaChar {
  std::array<int, 3> mu{};
  std::array<int, 3> nu{};

  int parity() const { return (mu[0] * nu[0] + mu[1] * nu[1] + mu[2] * nu[2]) % 2; }
  bool is_even() const { return parity() == 0; }
  /// "[mu0 mu1 mu2; nu0 nu1 nu2]".
  std::string str() const;

  friend bool operator==(const ThetaChar&, const ThetaChar&) = default;
};

std::vector<ThetaChar> enumerate_all();  // 64, mu-major
std::vector<ThetaChar> enumerate_even();  // 36
std::vector<ThetaChar> enumerate_odd();   // 28

using Real3x3 = std::array<std::array<double, 3>, 3>;
using Complex = std::complex<double>;

/// Point of the Siegel upper half space 𝔥₃.
class PeriodMatrix {
 public:
  /// Throws std::invalid_argument unless re and im are symmetric to 1e-12 and
  /// im is positive definite.
  PeriodMatrix(const Real3x3& re, const Real3x3& im);

  static PeriodMatrix diagonal_i();  // i·I₃

  const Real3x3& re() const { return re_; }
  const Real3x3& im() const { return im_; }
  Complex operator()(std::size_t i, std::size_t j) const { return {re_[i][j], im_[i][j]}; }

  /// Certified lower bound for the smallest eigenvalue of Im τ.
  double lambda_lower_bound() const { return lambda_; }

  PeriodMatrix plus_real(const std::array<std::array<long, 3>, 3>& b) const;  // τ + B
  PeriodMatrix plus_imag_diagonal(std::size_t j, double t) const;            // τ + i t E_jj
  PeriodMatrix minus_inverse() const;                                         // −τ⁻¹
  PeriodMatrix conjugate_by_permutation(const std::array<std::size_t, 3>& perm) const;  // PᵀτP
  Complex determinant() const;

 private:
  Real3x3 re_{}, im_{};
  double lambda_ = 0;
};

/// Lower bound for λ_min of a symmetric positive definite 3x3 matrix: the
/// smallest Gershgorin endpoint when positive, else bisection with leading
/// minors. Throws std::invalid_argument when m is not positive definite.
double min_eigenvalue_lower_bound(const Real3x3& m);

/// Half-width R of the summation box {n : |n_i + a_i| ≤ R} making the Gaussian
/// tail below eps. Throws std::runtime_error("precision unreachable") past the
/// radius cap.
double truncation_radius(double lambda, double eps);
inline constexpr double kMaxRadius = 40.0;

struct ThetaValue {
  Complex value;
  double log_abs = 0;  // log|value|, carried separately so tiny values survive
  double eps = 0;      // absolute error bound
  double radius = 0;
  unsigned digits = 0;  // working precision; 0 means IEEE double
};

/// Digits chosen for eps when the caller passes digits = 0: double down to
/// 1e-13, multiprecision below.
unsigned working_digits(double eps, unsigned digits);

/// θ[a;b](τ) = Σ_n exp(πi (n+a)ᵀτ(n+a) + 2πi (n+a)ᵀ b) for real a, b.
ThetaValue theta_with_characteristic(const std::array<double, 3>& a, const std::array<double, 3>& b,
                                     const PeriodMatrix& tau, double eps, unsigned digits = 0);

/// Theta null; odd characteristics return exactly 0 without summation.
ThetaValue theta_constant(const ThetaChar& alpha, const PeriodMatrix& tau, double eps, unsigned digits = 0);

struct Chi18Value {
  Complex value;
  double log_abs = 0;
  double error_bound = 0;  // Π(|θ|+e) − Π|θ|
  bool relative = false;   // error_bound ≤ eps·|value| was achieved
  std::vector<ThetaValue> factors;  // in enumerate_even() order
};

/// Product of the 36 even theta nulls.
Chi18Value chi18(const PeriodMatrix& tau, double eps, unsigned digits = 0);

inline constexpr double kDefaultHyperellipticThreshold = 1e-8;

struct MinNull {
  ThetaChar alpha;
  double modulus = 0;
  bool hyperelliptic_candidate = false;
};

MinNull min_theta_null(const PeriodMatrix& tau, double eps, double threshold = kDefaultHyperellipticThreshold);

struct TransformReport {
  std::string kind;
  double lhs = 0;  // |χ₁₈| at the transformed point
  double rhs = 0;  // predicted modulus
  double relative_deviation = 0;
  double phase = 0;  // argument of the ratio, reported only
};

/// |χ₁₈(τ+B)| against |χ₁₈(τ)| for integral symmetric B.
TransformReport transform_translation(const PeriodMatrix& tau, const std::array<std::array<long, 3>, 3>& b,
                                      double eps);
/// |χ₁₈(−τ⁻¹)| against |det τ|¹⁸ |χ₁₈(τ)|.
TransformReport transform_inversion(const PeriodMatrix& tau, double eps);

struct SlopeFit {
  double slope = 0;
  double intercept = 0;
  double residual = 0;  // root mean square
};

/// Least-squares line through (x, y). Throws std::invalid_argument for fewer
/// than two points or constant x.
SlopeFit fit_slope(const std::vector<double>& x, const std::vector<double>& y);

struct CuspSample {
  double t = 0;
  double neg_log_abs = 0;  // −log|χ₁₈|
};

struct CuspOrder {
  SlopeFit fit;
  std::vector<CuspSample> samples;
  unsigned digits = 0;
};

inline constexpr unsigned kCuspMinDigits = 30;

/// Slope of −log|χ₁₈(τ₀ + i t E_jj)| against 2πt over the upper half of the
/// samples. Throws std::runtime_error("increase precision or lower t") when a
/// factor falls below the absolute precision floor, std::invalid_argument for
/// non-increasing samples.
CuspOrder cusp_order(const PeriodMatrix& tau0, const std::vector<double>& t_samples, std::size_t direction = 0,
                     unsigned digits = kCuspMinDigits);

/// Same fit applied to the t-independent value −log|χ₁₈(τ₀)|.
CuspOrder cusp_control(const PeriodMatrix& tau0, const std::vector<double>& t_samples,
                       unsigned digits = kCuspMinDigits);

/// i·I₃ with real off-diagonal entries (τ01, τ02, τ12) = (0.1, 0.05, 0.1).
PeriodMatrix generic_period_matrix();

}  // namespace ceresa3
