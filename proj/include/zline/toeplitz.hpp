#ifndef ZLINE_TOEPLITZ_HPP
#define ZLINE_TOEPLITZ_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace zline {

// Hermitian Toeplitz matrix of size n+1 given by its first column c_0..c_n,
// T_jk = c_{j-k} with c_{-m} = conj(c_m). c_0 must be real.
struct HermitianToeplitz {
  std::vector<std::complex<double>> c;

  int dim() const { return static_cast<int>(c.size()); }
  std::complex<double> entry(int j, int k) const {
    const int m = j - k;
    return m >= 0 ? c[m] : std::conj(c[-m]);
  }
  Eigen::MatrixXcd materialize() const;
  void validate() const;

  // T = V diag(weights) V* for unit-circle nodes: c_m = sum_k w_k z_k^m.
  static HermitianToeplitz from_nodes(const std::vector<std::complex<double>>& nodes,
                                      const std::vector<double>& weights, int size);
};

struct CFDecomposition {
  std::vector<std::complex<double>> nodes;  // sorted by principal argument in [0, 2pi)
  std::vector<double> weights;
  double reconstruction_error = 0.0;  // relative Frobenius
  double max_modulus_deviation = 0.0;
  double node_condition = 0.0;
};

enum class Symmetry { palindromic, antipalindromic, neither };

struct RootReport {
  std::vector<std::complex<double>> roots;
  double max_modulus_deviation = 0.0;
};

// Unit vector spanning ker T when the numerical kernel (eigenvalues below
// tol * ||T||) is one-dimensional. Throws NotPSD / KernelDimensionNotOne.
Eigen::VectorXcd kernel_vector(const HermitianToeplitz& T, double tol = 1e-10);

// Roots of P(z) = sum_j xi_j z^j, with the deviation of |z| from 1 reported.
RootReport kernel_polynomial_roots(const Eigen::VectorXcd& xi, double tol = 1e-9);

// Classifies xi_{n-j} = +xi_j / -xi_j (conjugated in the complex case).
Symmetry palindrome_check(const Eigen::VectorXcd& xi, double tol);

// Carathéodory-Fejér node/weight decomposition of a rank-deficient PSD
// Toeplitz matrix via the kernel polynomial of the leading principal block.
CFDecomposition cf_decompose(const HermitianToeplitz& T, double tol = 1e-10);

}  // namespace zline

#endif
