#ifndef ZLINE_FORMBUILDER_HPP
#define ZLINE_FORMBUILDER_HPP

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <vector>

namespace zline {

// A real distribution on [0, L]: an explicit Dirac-mass weight at 0 plus a
// finite table of Fourier coefficients a_k = x_k + i y_k, k = 0..N_support,
// with a_{-k} = conj(a_k) implied. y_0 must vanish (a_0 real).
struct DistributionSpec {
  double L = 1.0;
  double delta_weight = 0.0;
  std::vector<std::array<double, 2>> coeffs;  // (x_k, y_k), k = 0..N_support

  int support() const { return static_cast<int>(coeffs.size()) - 1; }
  std::complex<double> fourier(int k) const;  // a_k, zero outside the support
  void validate() const;
};

// The structured symmetric matrix q_ii = a_i, q_ij = (b_i - b_j)/(lambda_i - lambda_j),
// indices running over -N..N (stored at offset i+N). lambda defaults to j.
struct QuadraticFormStructure {
  int N = 0;
  std::vector<double> a;       // diagonal, size 2N+1
  std::vector<double> b;       // off-diagonal generators, size 2N+1
  std::vector<double> lambda;  // model eigenvalues, size 2N+1

  double& at_a(int i) { return a[i + N]; }
  double& at_b(int i) { return b[i + N]; }
  double at_a(int i) const { return a[i + N]; }
  double at_b(int i) const { return b[i + N]; }
  double at_lambda(int i) const { return lambda[i + N]; }

  static QuadraticFormStructure zero(int N);  // integer lambda, a = b = 0
  bool has_integer_lambda(double tol = 1e-12) const;
  Eigen::MatrixXd materialize() const;
  void validate(double tol = 1e-12) const;  // parity + simple antisymmetric spectrum
};

// psi(x) = (1/pi) int_0^L sin(2 pi x (1 - y/L)) D(y) dy, evaluated mode by mode
// in closed form; removable singularities at integer x handled by limits.
double psi_eval(const DistributionSpec& dist, double x);
double psi_derivative_eval(const DistributionSpec& dist, double x);

// q_mn = (psi(m) - psi(n))/(m - n), q_nn = psi'(n). Requires L = 1.
QuadraticFormStructure build_form(const DistributionSpec& dist, int N);

// Inverse of build_form for forms with integer lambda. The Fourier support of
// the result is assumed strictly inside the window (the outermost diagonal
// correction is attributed to the delta weight).
DistributionSpec recover_distribution(const QuadraticFormStructure& Q);

// Adds c * delta_0 to the underlying distribution: a_i += 2c.
QuadraticFormStructure delta_shift(const QuadraticFormStructure& Q, double c);

}  // namespace zline

#endif
