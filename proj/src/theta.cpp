#include "ceresa3/theta.hpp"

#include "ceresa3/cyclo7.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace ceresa3 {

std::string ThetaChar::str() const {
  std::string s = "[";
  for (int i = 0; i < 3; ++i) s += std::to_string(mu[i]) + (i < 2 ? " " : "; ");
  for (int i = 0; i < 3; ++i) s += std::to_string(nu[i]) + (i < 2 ? " " : "]");
  return s;
}

std::vector<ThetaChar> enumerate_all() {
  std::vector<ThetaChar> out;
  for (int m = 0; m < 8; ++m)
    for (int n = 0; n < 8; ++n) {
      ThetaChar c;
      for (int i = 0; i < 3; ++i) {
        c.mu[i] = (m >> (2 - i)) & 1;
        c.nu[i] = (n >> (2 - i)) & 1;
      }
      out.push_back(c);
    }
  return out;
}

std::vector<ThetaChar> enumerate_even() {
  std::vector<ThetaChar> out;
  for (const auto& c : enumerate_all())
    if (c.is_even()) out.push_back(c);
  return out;
}

std::vector<ThetaChar> enumerate_odd() {
  std::vector<ThetaChar> out;
  for (const auto& c : enumerate_all())
    if (!c.is_even()) out.push_back(c);
  return out;
}

namespace {

constexpr double kSymmetryTolerance = 1e-12;
constexpr double kDoubleFloor = 1e-13;

std::array<double, 3> leading_minors(const Real3x3& m) {
  const double d1 = m[0][0];
  const double d2 = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  const double d3 = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                    m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                    m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return {d1, d2, d3};
}

bool positive_definite(const Real3x3& m) {
  const auto d = leading_minors(m);
  return d[0] > 0 && d[1] > 0 && d[2] > 0;
}

void check_symmetric(const Real3x3& m, const char* what) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      if (!std::isfinite(m[i][j]) || !std::isfinite(m[j][i]) || !std::isfinite(m[i][i])) {
        throw std::invalid_argument(std::string("period matrix: non-finite entry in ") + what);
      }
      if (std::abs(m[i][j] - m[j][i]) > kSymmetryTolerance) {
        throw std::invalid_argument(std::string("period matrix: ") + what + " is not symmetric");
      }
    }
}

}  // namespace

double min_eigenvalue_lower_bound(const Real3x3& m) {
  if (!positive_definite(m)) throw std::invalid_argument("period matrix: imaginary part is not positive definite");
  double gersh = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 3; ++i) {
    double r = 0;
    for (int j = 0; j < 3; ++j)
      if (j != i) r += std::abs(m[i][j]);
    gersh = std::min(gersh, m[i][i] - r);
  }
  if (gersh > 0) return gersh;
  double lo = 0;
  double hi = std::min({m[0][0], m[1][1], m[2][2]});
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    Real3x3 shifted = m;
    for (int i = 0; i < 3; ++i) shifted[i][i] -= mid;
    (positive_definite(shifted) ? lo : hi) = mid;
  }
  return lo * (1 - 1e-9);
}

PeriodMatrix::PeriodMatrix(const Real3x3& re, const Real3x3& im) : re_(re), im_(im) {
  check_symmetric(re_, "real part");
  check_symmetric(im_, "imaginary part");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < i; ++j) {
      re_[i][j] = re_[j][i];
      im_[i][j] = im_[j][i];
    }
  lambda_ = min_eigenvalue_lower_bound(im_);
}

PeriodMatrix PeriodMatrix::diagonal_i() {
  return PeriodMatrix(Real3x3{}, Real3x3{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
}

PeriodMatrix generic_period_matrix() {
  return PeriodMatrix(Real3x3{{{0, 0.1, 0.05}, {0.1, 0, 0.1}, {0.05, 0.1, 0}}},
                      Real3x3{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
}

PeriodMatrix PeriodMatrix::plus_real(const std::array<std::array<long, 3>, 3>& b) const {
  Real3x3 re = re_;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (b[i][j] != b[j][i]) throw std::invalid_argument("translation matrix must be symmetric");
      re[i][j] += static_cast<double>(b[i][j]);
    }
  return PeriodMatrix(re, im_);
}

PeriodMatrix PeriodMatrix::plus_imag_diagonal(std::size_t j, double t) const {
  if (j > 2) throw std::out_of_range("direction must be 0, 1 or 2");
  Real3x3 im = im_;
  im[j][j] += t;
  return PeriodMatrix(re_, im);
}

Complex PeriodMatrix::determinant() const {
  const auto& t = *this;
  return t(0, 0) * (t(1, 1) * t(2, 2) - t(1, 2) * t(2, 1)) - t(0, 1) * (t(1, 0) * t(2, 2) - t(1, 2) * t(2, 0)) +
         t(0, 2) * (t(1, 0) * t(2, 1) - t(1, 1) * t(2, 0));
}

PeriodMatrix PeriodMatrix::minus_inverse() const {
  const auto& t = *this;
  const Complex det = determinant();
  std::array<std::array<Complex, 3>, 3> adj;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj[i][j] = t(r0, c0) * t(r1, c1) - t(r0, c1) * t(r1, c0);
    }
  Real3x3 re{}, im{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      // Symmetrize away rounding.
      const Complex v = -0.5 * (adj[i][j] + adj[j][i]) / det;
      re[i][j] = v.real();
      im[i][j] = v.imag();
    }
  return PeriodMatrix(re, im);
}

PeriodMatrix PeriodMatrix::conjugate_by_permutation(const std::array<std::size_t, 3>& perm) const {
  Real3x3 re{}, im{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      re[i][j] = re_[perm[i]][perm[j]];
      im[i][j] = im_[perm[i]][perm[j]];
    }
  return PeriodMatrix(re, im);
}

double truncation_radius(double lambda, double eps) {
  if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
  if (!(lambda > 0)) throw std::runtime_error("precision unreachable");
  const double pi = std::numbers::pi;
  const double s1 = 2 + 1 / std::sqrt(lambda);
  // log of 3 T(R) S1², T(R) = 2 e^{-πλR²}(1 + 1/(2πλR)).
  auto log_tail = [&](double r) {
    return std::log(6 * s1 * s1) - pi * lambda * r * r + std::log1p(1 / (2 * pi * lambda * r));
  };
  const double target = std::log(eps);
  for (double r = 0.5; r <= kMaxRadius; r += 0.25)
    if (log_tail(r) < target) return r;
  throw std::runtime_error("precision unreachable");
}

unsigned working_digits(double eps, unsigned digits) {
  if (digits > 0) return digits;
  if (eps >= kDoubleFloor) return 0;
  return static_cast<unsigned>(std::ceil(-std::log10(eps))) + 5;
}

namespace {

template <class Real>
Real pi_of() {
  if constexpr (std::is_same_v<Real, double>) return std::numbers::pi;
  else return boost::math::constants::pi<Real>();
}

template <class Real>
struct Sum {
  Real re = 0;
  Real im = 0;
};

template <class Real>
Sum<Real> theta_series(const std::array<double, 3>& a, const std::array<double, 3>& b, const PeriodMatrix& tau,
                       double radius) {
  using std::cos;
  using std::exp;
  using std::sin;
  const Real pi = pi_of<Real>();
  std::array<std::array<Real, 3>, 3> x, y;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      x[i][j] = Real(tau.re()[i][j]);
      y[i][j] = Real(tau.im()[i][j]);
    }
  std::array<long, 3> lo{}, hi{};
  for (int i = 0; i < 3; ++i) {
    lo[i] = static_cast<long>(std::ceil(-radius - a[i]));
    hi[i] = static_cast<long>(std::floor(radius - a[i]));
  }
  Sum<Real> s;
  std::array<Real, 3> m, bb;
  for (int i = 0; i < 3; ++i) bb[i] = Real(b[i]);
  for (long n0 = lo[0]; n0 <= hi[0]; ++n0) {
    m[0] = Real(n0) + Real(a[0]);
    for (long n1 = lo[1]; n1 <= hi[1]; ++n1) {
      m[1] = Real(n1) + Real(a[1]);
      for (long n2 = lo[2]; n2 <= hi[2]; ++n2) {
        m[2] = Real(n2) + Real(a[2]);
        Real qx = 0, qy = 0, lin = 0;
        for (int i = 0; i < 3; ++i) {
          lin += m[i] * bb[i];
          for (int j = 0; j < 3; ++j) {
            qx += m[i] * x[i][j] * m[j];
            qy += m[i] * y[i][j] * m[j];
          }
        }
        const Real mag = exp(-pi * qy);
        const Real phase = pi * qx + 2 * pi * lin;
        s.re += mag * cos(phase);
        s.im += mag * sin(phase);
      }
    }
  }
  return s;
}

ThetaValue evaluate(const std::array<double, 3>& a, const std::array<double, 3>& b, const PeriodMatrix& tau,
                    double eps, unsigned digits) {
  ThetaValue v;
  v.eps = eps;
  v.radius = truncation_radius(tau.lambda_lower_bound(), eps);
  v.digits = working_digits(eps, digits);
  if (v.digits == 0) {
    const auto s = theta_series<double>(a, b, tau, v.radius);
    v.value = {s.re, s.im};
    v.log_abs = std::log(std::abs(v.value));
  } else {
    const ScopedPrecision guard(v.digits + 10);
    const auto s = theta_series<HighReal>(a, b, tau, v.radius);
    v.value = {static_cast<double>(s.re), static_cast<double>(s.im)};
    const HighReal norm2 = s.re * s.re + s.im * s.im;
    v.log_abs = norm2 == 0 ? -std::numeric_limits<double>::infinity() : static_cast<double>(log(norm2) / 2);
  }
  return v;
}

std::array<double, 3> halves(const std::array<int, 3>& bits) {
  return {bits[0] / 2.0, bits[1] / 2.0, bits[2] / 2.0};
}

}  // namespace

ThetaValue theta_with_characteristic(const std::array<double, 3>& a, const std::array<double, 3>& b,
                                     const PeriodMatrix& tau, double eps, unsigned digits) {
  return evaluate(a, b, tau, eps, digits);
}

ThetaValue theta_constant(const ThetaChar& alpha, const PeriodMatrix& tau, double eps, unsigned digits) {
  if (!alpha.is_even()) {
    ThetaValue v;
    v.value = 0;
    v.log_abs = -std::numeric_limits<double>::infinity();
    v.eps = eps;
    v.digits = working_digits(eps, digits);
    return v;
  }
  return evaluate(halves(alpha.mu), halves(alpha.nu), tau, eps, digits);
}

namespace {

Chi18Value assemble(std::vector<ThetaValue> factors, double eps) {
  Chi18Value out;
  out.value = 1;
  out.log_abs = 0;
  double log_error_factor = 0;  // Σ log(1 + e/|θ|)
  bool any_zero = false;
  double product_plus = 1;
  for (const auto& f : factors) {
    out.value *= f.value;
    out.log_abs += f.log_abs;
    const double m = std::abs(f.value);
    product_plus *= m + f.eps;
    if (m == 0) any_zero = true;
    else log_error_factor += std::log1p(f.eps / m);
  }
  out.error_bound = any_zero ? product_plus : std::exp(out.log_abs) * std::expm1(log_error_factor);
  out.relative = !any_zero && std::expm1(log_error_factor) <= eps;
  out.factors = std::move(factors);
  return out;
}

std::vector<ThetaValue> even_factors(const PeriodMatrix& tau, double eps, unsigned digits) {
  std::vector<ThetaValue> out;
  for (const auto& c : enumerate_even()) out.push_back(theta_constant(c, tau, eps, digits));
  return out;
}

}  // namespace

Chi18Value chi18(const PeriodMatrix& tau, double eps, unsigned digits) {
  if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
  // Absolute pass, then a relative pass once every factor is resolved.
  const double eps1 = eps / 72;
  auto factors = even_factors(tau, eps1, digits);
  double m_min = std::numeric_limits<double>::infinity();
  for (const auto& f : factors) m_min = std::min(m_min, std::abs(f.value));
  if (m_min > 100 * eps1 && m_min < 1) factors = even_factors(tau, eps1 * m_min, digits);
  return assemble(std::move(factors), eps);
}

MinNull min_theta_null(const PeriodMatrix& tau, double eps, double threshold) {
  MinNull out;
  out.modulus = std::numeric_limits<double>::infinity();
  for (const auto& c : enumerate_even()) {
    const double m = std::abs(theta_constant(c, tau, eps).value);
    if (m < out.modulus) {
      out.modulus = m;
      out.alpha = c;
    }
  }
  out.hyperelliptic_candidate = out.modulus < threshold;
  return out;
}

TransformReport transform_translation(const PeriodMatrix& tau, const std::array<std::array<long, 3>, 3>& b,
                                      double eps) {
  const auto before = chi18(tau, eps);
  const auto after = chi18(tau.plus_real(b), eps);
  TransformReport r;
  r.kind = "translation";
  r.lhs = std::exp(after.log_abs);
  r.rhs = std::exp(before.log_abs);
  r.relative_deviation = std::abs(std::expm1(after.log_abs - before.log_abs));
  r.phase = std::arg(after.value / before.value);
  return r;
}

TransformReport transform_inversion(const PeriodMatrix& tau, double eps) {
  const auto before = chi18(tau, eps);
  const auto after = chi18(tau.minus_inverse(), eps);
  const Complex det = tau.determinant();
  const double log_rhs = 18 * std::log(std::abs(det)) + before.log_abs;
  TransformReport r;
  r.kind = "inversion";
  r.lhs = std::exp(after.log_abs);
  r.rhs = std::exp(log_rhs);
  r.relative_deviation = std::abs(std::expm1(after.log_abs - log_rhs));
  r.phase = std::arg(after.value / (std::pow(det, 18) * before.value));
  return r;
}

SlopeFit fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_slope needs at least two points");
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0) throw std::invalid_argument("fit_slope needs distinct x values");
  SlopeFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (f.intercept + f.slope * x[i]);
    ss += r * r;
  }
  f.residual = std::sqrt(ss / n);
  return f;
}

namespace {

void check_samples(const std::vector<double>& t) {
  if (t.size() < 2) throw std::invalid_argument("cusp_order needs at least two samples");
  for (std::size_t i = 1; i < t.size(); ++i)
    if (!(t[i] > t[i - 1])) throw std::invalid_argument("t samples must be increasing");
}

double neg_log_chi18_hp(const PeriodMatrix& tau, unsigned digits) {
  const double eps = std::pow(10.0, -static_cast<double>(digits));
  // Each factor must keep at least six significant digits.
  const double floor = 1e6 * eps;
  double total = 0;
  for (const auto& c : enumerate_even()) {
    const auto v = theta_constant(c, tau, eps, digits);
    if (!(v.log_abs > std::log(floor))) throw std::runtime_error("increase precision or lower t");
    total -= v.log_abs;
  }
  return total;
}

CuspOrder fit_upper_half(std::vector<CuspSample> samples, unsigned digits) {
  std::vector<double> x, y;
  for (std::size_t i = samples.size() / 2; i < samples.size(); ++i) {
    x.push_back(2 * std::numbers::pi * samples[i].t);
    y.push_back(samples[i].neg_log_abs);
  }
  return {fit_slope(x, y), std::move(samples), digits};
}

}  // namespace

CuspOrder cusp_order(const PeriodMatrix& tau0, const std::vector<double>& t_samples, std::size_t direction,
                     unsigned digits) {
  check_samples(t_samples);
  digits = std::max(digits, kCuspMinDigits);
  std::vector<CuspSample> samples;
  for (double t : t_samples) samples.push_back({t, neg_log_chi18_hp(tau0.plus_imag_diagonal(direction, t), digits)});
  return fit_upper_half(std::move(samples), digits);
}

CuspOrder cusp_control(const PeriodMatrix& tau0, const std::vector<double>& t_samples, unsigned digits) {
  check_samples(t_samples);
  digits = std::max(digits, kCuspMinDigits);
  const double value = neg_log_chi18_hp(tau0, digits);
  std::vector<CuspSample> samples;
  for (double t : t_samples) samples.push_back({t, value});
  return fit_upper_half(std::move(samples), digits);
}

}  // namespace ceresa3
