#include "zline/formbuilder.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zline/entire.hpp"
#include "zline/errors.hpp"

namespace zline {

namespace {
constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

// F(x,k) = int_0^1 sin(2 pi x (1-u)) exp(2 pi i k u) du
Complex mode_integral(double x, int k) {
  return (cyc(x - k) - cyc(-x - k)) / (2.0 * kI);
}

Complex mode_integral_dx(double x, int k) {
  return (cyc_prime(x - k) + cyc_prime(-x - k)) / (2.0 * kI);
}
}  // namespace

std::complex<double> DistributionSpec::fourier(int k) const {
  const int m = std::abs(k);
  if (m >= static_cast<int>(coeffs.size())) return {0.0, 0.0};
  std::complex<double> a{coeffs[m][0], coeffs[m][1]};
  return k >= 0 ? a : std::conj(a);
}

void DistributionSpec::validate() const {
  if (!(L > 0.0)) throw std::invalid_argument("DistributionSpec: L must be positive");
  if (!coeffs.empty() && coeffs[0][1] != 0.0)
    throw std::invalid_argument("DistributionSpec: y_0 must be zero (a_0 real)");
}

double psi_eval(const DistributionSpec& dist, double x) {
  dist.validate();
  Complex acc{0.0, 0.0};
  const int Ns = dist.support();
  for (int k = -Ns; k <= Ns; ++k) acc += dist.fourier(k) * mode_integral(x, k);
  return dist.delta_weight / kPi * std::sin(2.0 * kPi * x) + dist.L / kPi * acc.real();
}

double psi_derivative_eval(const DistributionSpec& dist, double x) {
  dist.validate();
  Complex acc{0.0, 0.0};
  const int Ns = dist.support();
  for (int k = -Ns; k <= Ns; ++k) acc += dist.fourier(k) * mode_integral_dx(x, k);
  return 2.0 * dist.delta_weight * std::cos(2.0 * kPi * x) + dist.L / kPi * acc.real();
}

QuadraticFormStructure QuadraticFormStructure::zero(int N) {
  if (N < 0) throw std::invalid_argument("QuadraticFormStructure: N must be >= 0");
  QuadraticFormStructure q;
  q.N = N;
  q.a.assign(2 * N + 1, 0.0);
  q.b.assign(2 * N + 1, 0.0);
  q.lambda.resize(2 * N + 1);
  for (int j = -N; j <= N; ++j) q.lambda[j + N] = static_cast<double>(j);
  return q;
}

bool QuadraticFormStructure::has_integer_lambda(double tol) const {
  for (int j = -N; j <= N; ++j)
    if (std::abs(at_lambda(j) - j) > tol) return false;
  return true;
}

Eigen::MatrixXd QuadraticFormStructure::materialize() const {
  const int n = 2 * N + 1;
  Eigen::MatrixXd M(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      M(i, j) = (i == j) ? a[i] : (b[i] - b[j]) / (lambda[i] - lambda[j]);
    }
  }
  return M;
}

void QuadraticFormStructure::validate(double tol) const {
  const int n = 2 * N + 1;
  if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n ||
      static_cast<int>(lambda.size()) != n)
    throw DimensionMismatch("QuadraticFormStructure: array sizes do not match N");
  double scale = 1.0;
  for (double v : a) scale = std::max(scale, std::abs(v));
  for (double v : b) scale = std::max(scale, std::abs(v));
  for (int i = -N; i <= N; ++i) {
    if (std::abs(at_a(-i) - at_a(i)) > tol * scale)
      throw std::invalid_argument("QuadraticFormStructure: a must be even in the index");
    if (std::abs(at_b(-i) + at_b(i)) > tol * scale)
      throw std::invalid_argument("QuadraticFormStructure: b must be odd in the index");
    if (std::abs(at_lambda(-i) + at_lambda(i)) > tol)
      throw std::invalid_argument("QuadraticFormStructure: lambda must be antisymmetric");
  }
  for (int i = 1; i < n; ++i)
    if (!(lambda[i] > lambda[i - 1]))
      throw std::invalid_argument("QuadraticFormStructure: lambda must be strictly increasing");
}

QuadraticFormStructure build_form(const DistributionSpec& dist, int N) {
  if (N < 0) throw std::invalid_argument("build_form: N must be >= 0");
  dist.validate();
  if (std::abs(dist.L - 1.0) > 1e-14)
    throw std::invalid_argument("build_form: matrix assembly requires L = 1");
  QuadraticFormStructure q = QuadraticFormStructure::zero(N);
  for (int i = -N; i <= N; ++i) {
    q.at_b(i) = psi_eval(dist, static_cast<double>(i));
    q.at_a(i) = psi_derivative_eval(dist, static_cast<double>(i));
  }
  return q;
}

DistributionSpec recover_distribution(const QuadraticFormStructure& Q) {
  Q.validate(1e-10);
  if (!Q.has_integer_lambda(1e-10))
    throw std::invalid_argument("recover_distribution: requires lambda_j = j");
  const int N = Q.N;

  // psi(n) = y_n / pi at integers, and b_n = psi(n).
  std::vector<double> y(N + 1, 0.0);
  for (int n = 1; n <= N; ++n) y[n] = kPi * Q.at_b(n);

  // Invert the diagonal formula: q_nn includes the delta contribution 2w plus
  // x_n - y_n/(2 pi n) + sum_{k>0, k!=n} y_k 2k / (pi (n^2 - k^2)).
  std::vector<double> xt(N + 1, 0.0);
  for (int n = 0; n <= N; ++n) {
    double tail = 0.0;
    if (n == 0) {
      for (int k = 1; k <= N; ++k) tail -= 2.0 * y[k] / (kPi * k);
      xt[0] = Q.at_a(0) - tail;
    } else {
      for (int k = 1; k <= N; ++k) {
        if (k == n) continue;
        tail += y[k] * 2.0 * k / (kPi * (static_cast<double>(n) * n - static_cast<double>(k) * k));
      }
      xt[n] = Q.at_a(n) + y[n] / (2.0 * kPi * n) - tail;
    }
  }

  // The outermost entry carries only the delta weight when the Fourier
  // support is strictly inside the window.
  const double w = xt[N] / 2.0;
  DistributionSpec d;
  d.L = 1.0;
  d.delta_weight = w;
  d.coeffs.resize(N + 1);
  for (int n = 0; n <= N; ++n) d.coeffs[n] = {xt[n] - 2.0 * w, y[n]};

  double scale = 1.0;
  for (int n = 0; n <= N; ++n)
    scale = std::max({scale, std::abs(d.coeffs[n][0]), std::abs(d.coeffs[n][1])});
  while (d.coeffs.size() > 1 &&
         std::abs(d.coeffs.back()[0]) <= 1e-12 * scale &&
         std::abs(d.coeffs.back()[1]) <= 1e-12 * scale)
    d.coeffs.pop_back();
  return d;
}

QuadraticFormStructure delta_shift(const QuadraticFormStructure& Q, double c) {
  QuadraticFormStructure out = Q;
  for (double& v : out.a) v += 2.0 * c;
  return out;
}

}  // namespace zline
