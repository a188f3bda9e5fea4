#include "zline/polyroots.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace zline {

namespace {

// Parlett-Reinsch balancing with powers of two, applied before the
// Hessenberg-QR iteration. Eigen's eigensolvers do not balance, and the
// companion matrices of high-degree kernel polynomials need it.
void balance(Eigen::MatrixXcd& A) {
  const int n = static_cast<int>(A.rows());
  constexpr double radix = 2.0;
  bool converged = false;
  while (!converged) {
    converged = true;
    for (int i = 0; i < n; ++i) {
      double c = 0.0, r = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(A(j, i));
        r += std::abs(A(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double f = 1.0;
      const double s = c + r;
      while (c < r / radix) {
        c *= radix;
        r /= radix;
        f *= radix;
      }
      while (c >= r * radix) {
        c /= radix;
        r *= radix;
        f /= radix;
      }
      if ((c + r) < 0.95 * s && f != 1.0) {
        converged = false;
        A.row(i) /= f;
        A.col(i) *= f;
      }
    }
  }
}

}  // namespace

std::vector<std::complex<double>> companion_roots(
    const std::vector<std::complex<double>>& coeffs) {
  const int deg = static_cast<int>(coeffs.size()) - 1;
  if (deg < 0 || coeffs[deg] == std::complex<double>(0.0, 0.0))
    throw std::invalid_argument("companion_roots: zero leading coefficient");
  if (deg == 0) return {};
  if (deg == 1) return {-coeffs[0] / coeffs[1]};

  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) C(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) C(i, deg - 1) = -coeffs[i] / coeffs[deg];
  balance(C);

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("companion_roots: eigensolver failed");
  std::vector<std::complex<double>> roots(deg);
  for (int i = 0; i < deg; ++i) roots[i] = es.eigenvalues()(i);
  return roots;
}

std::vector<std::complex<double>> companion_roots(const std::vector<double>& coeffs) {
  std::vector<std::complex<double>> c(coeffs.begin(), coeffs.end());
  return companion_roots(c);
}

}  // namespace zline
