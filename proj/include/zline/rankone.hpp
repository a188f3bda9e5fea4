#ifndef ZLINE_RANKONE_HPP
#define ZLINE_RANKONE_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "zline/formbuilder.hpp"

namespace zline {

// Diagonal model operator with antisymmetric simple spectrum and grading
// given by the index flip.
struct ModelOperator {
  Eigen::VectorXd lambda;  // indices -N..N, lambda_{-j} = -lambda_j, increasing

  int N() const { return static_cast<int>(lambda.size() / 2); }
  Eigen::MatrixXd materialize() const { return lambda.asDiagonal(); }
  void validate(double tol = 1e-12) const;

  static ModelOperator integers(int N);  // lambda_j = j
};

// D' = D - |D xi><eta| with eta the all-ones vector and <eta|xi> = 1.
struct RankOneModifiedOperator {
  ModelOperator base;
  Eigen::VectorXd xi;      // normalized so eta.dot(xi) == 1
  Eigen::MatrixXd dprime;  // materialized D'
};

// Max-norm residual of D Q - Q D = |beta><eta| - |eta><beta|.
double commutator_residual(const QuadraticFormStructure& Q, const ModelOperator& D);

// Builds D' from a kernel vector of Q. Throws NotInKernel, NotEven,
// EtaOrthogonal. Also checks Q D xi = -beta.
RankOneModifiedOperator build_dprime(const QuadraticFormStructure& Q,
                                     const ModelOperator& D,
                                     const Eigen::VectorXd& xi_raw,
                                     double tol = 1e-8);

// Max over a deterministic probe basis of |<Q D'f, g> - <Q f, D'g>|.
double q_selfadjoint_residual(const QuadraticFormStructure& Q,
                              const RankOneModifiedOperator& Dp,
                              unsigned seed = 12345);

// Relative residual of Det(D' - s) against
// -s * sum_j xi_j * prod_{i != j}(lambda_i - s).
double det_identity_residual(const RankOneModifiedOperator& Dp,
                             std::complex<double> s);

// Eigenvalues of the dense (nonsymmetric) D'.
std::vector<std::complex<double>> dprime_spectrum(const RankOneModifiedOperator& Dp);

}  // namespace zline

#endif
