#ifndef ZLINE_ZEROS_HPP
#define ZLINE_ZEROS_HPP

#include <complex>
#include <span>
#include <vector>

namespace zline {

// P(s) = sum_k xi_k prod_{j != k} (lambda_j - s) in the monomial basis.
struct KernelPolynomial {
  std::vector<double> xi;
  std::vector<double> lambda;
  std::vector<double> coeffs;  // coeffs[k] multiplies s^k

  double eval(double s) const;
};

struct ZeroReport {
  std::vector<std::complex<double>> zeros;
  double max_abs_imag = 0.0;
  bool certified_real = false;
  double tol = 0.0;
};

// Coefficient assembly with compensated accumulation; throws RepeatedLambda.
KernelPolynomial build_p(std::span<const double> xi, std::span<const double> lambda);

// Companion-matrix roots plus the reality certificate
// |Im z| <= tol * (1 + |z|). Throws DegenerateDegree.
ZeroReport poly_roots(const KernelPolynomial& P, double tol_real = 1e-7);

// xi indexed -N..N (size 2N+1): the entire transform of
// xi(x) = sum xi_k exp(2 pi i k x) on [0,1], zero outside.
std::complex<double> xi_hat_eval(std::span<const double> xi, std::complex<double> z);

// Zero set of xi_hat inside |Re z| <= search_radius: the surviving lattice
// points 2 pi m plus 2 pi times the roots of P. Each zero is verified by
// direct evaluation against tol_eval * ||xi||.
ZeroReport xi_hat_zeros(std::span<const double> xi, double search_radius,
                        double tol_real = 1e-7, double tol_eval = 1e-8);

// F(f^sigma)(s) for f with Fourier coefficients fhat(n), n = -M..M, on [0,L]:
// sum fhat(n) (-1)^n sinc(L s / 2 - n pi). Exact at the lattice s = 2 pi n / L.
std::complex<double> shannon_transform(std::span<const std::complex<double>> fhat,
                                       double L, std::complex<double> s);

}  // namespace zline

#endif
