#include "zline/rankone.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "zline/errors.hpp"

namespace zline {

void ModelOperator::validate(double tol) const {
  const Eigen::Index n = lambda.size();
  if (n % 2 == 0 || n == 0)
    throw DimensionMismatch("ModelOperator: lambda must have odd size");
  const double scale = std::max(lambda.cwiseAbs().maxCoeff(), 1.0);
  for (Eigen::Index j = 0; j < n; ++j)
    if (std::abs(lambda[j] + lambda[n - 1 - j]) > tol * scale)
      throw Error("ModelOperator: spectrum not antisymmetric");
  for (Eigen::Index j = 0; j + 1 < n; ++j)
    if (!(lambda[j] < lambda[j + 1])) throw NotSimple(lambda[j + 1] - lambda[j]);
}

ModelOperator ModelOperator::integers(int N) {
  ModelOperator D;
  D.lambda.resize(2 * N + 1);
  for (int j = -N; j <= N; ++j) D.lambda[j + N] = static_cast<double>(j);
  return D;
}

double commutator_residual(const QuadraticFormStructure& Q, const ModelOperator& D) {
  const int n = 2 * Q.N + 1;
  if (D.lambda.size() != n)
    throw DimensionMismatch("commutator_residual: index ranges differ");
  for (int i = 0; i < n; ++i)
    if (std::abs(Q.lambda[i] - D.lambda[i]) > 1e-12 * std::max(1.0, std::abs(D.lambda[i])))
      throw DimensionMismatch("commutator_residual: lambda mismatch");

  const Eigen::MatrixXd M = Q.materialize();
  const Eigen::MatrixXd C = D.lambda.asDiagonal() * M - M * D.lambda.asDiagonal();
  double res = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      res = std::max(res, std::abs(C(i, j) - (Q.b[i] - Q.b[j])));
  return res;
}

RankOneModifiedOperator build_dprime(const QuadraticFormStructure& Q,
                                     const ModelOperator& D,
                                     const Eigen::VectorXd& xi_raw, double tol) {
  const int n = 2 * Q.N + 1;
  if (xi_raw.size() != n || D.lambda.size() != n)
    throw DimensionMismatch("build_dprime: size mismatch");

  const Eigen::MatrixXd M = Q.materialize();
  const double qn = M.norm();
  const double xn = xi_raw.norm();
  const double ker_res = (M * xi_raw).norm();
  if (ker_res > tol * std::max(qn, 1.0) * xn) throw NotInKernel(ker_res);

  double even_dev = 0.0;
  for (int i = 0; i < n; ++i)
    even_dev = std::max(even_dev, std::abs(xi_raw[i] - xi_raw[n - 1 - i]));
  if (even_dev > tol * xn) throw NotEven(even_dev);

  const double s = xi_raw.sum();
  if (std::abs(s) <= tol * xn) throw EtaOrthogonal();

  RankOneModifiedOperator Dp;
  Dp.base = D;
  Dp.xi = xi_raw / s;
  const Eigen::VectorXd dxi = D.lambda.cwiseProduct(Dp.xi);
  Dp.dprime = Eigen::MatrixXd(D.lambda.asDiagonal());
  Dp.dprime.noalias() -= dxi * Eigen::RowVectorXd::Ones(n);

  // Q D xi = -beta must hold whenever xi spans ker Q.
  Eigen::VectorXd beta(n);
  for (int i = 0; i < n; ++i) beta[i] = Q.b[i];
  const double id_res = (M * dxi + beta).norm();
  if (id_res > tol * std::max(qn, 1.0) * std::max(dxi.norm(), 1.0))
    throw Error("build_dprime: Q D xi = -beta identity violated");
  return Dp;
}

double q_selfadjoint_residual(const QuadraticFormStructure& Q,
                              const RankOneModifiedOperator& Dp, unsigned seed) {
  const int n = static_cast<int>(Dp.dprime.rows());
  const Eigen::MatrixXd M = Q.materialize();
  // <Q D'f, g> - <Q f, D'g> = f^T (A^T - A) g with A = Q D'.
  const Eigen::MatrixXd A = M * Dp.dprime;
  const Eigen::MatrixXd S = A.transpose() - A;

  std::vector<Eigen::VectorXd> probes;
  probes.reserve(n + 20);
  for (int i = 0; i < n; ++i) probes.push_back(Eigen::VectorXd::Unit(n, i));
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int k = 0; k < 20; ++k) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = gauss(rng);
    probes.push_back(v.normalized());
  }

  double res = 0.0;
  for (const auto& f : probes)
    for (const auto& g : probes) res = std::max(res, std::abs(f.dot(S * g)));
  return res;
}

double det_identity_residual(const RankOneModifiedOperator& Dp,
                             std::complex<double> s) {
  const int n = static_cast<int>(Dp.dprime.rows());
  Eigen::MatrixXcd A = Dp.dprime.cast<std::complex<double>>();
  for (int i = 0; i < n; ++i) A(i, i) -= s;
  const std::complex<double> lhs = Eigen::PartialPivLU<Eigen::MatrixXcd>(A).determinant();

  std::complex<double> rhs{0.0, 0.0};
  double mag = 0.0;
  for (int j = 0; j < n; ++j) {
    std::complex<double> term{Dp.xi[j], 0.0};
    double tmag = std::abs(Dp.xi[j]);
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      const std::complex<double> fac = Dp.base.lambda[i] - s;
      term *= fac;
      tmag *= std::abs(fac);
    }
    rhs += term;
    mag += tmag;
  }
  rhs *= -s;
  mag *= std::max(std::abs(s), 1.0);
  return std::abs(lhs - rhs) / std::max(mag, 1.0);
}

std::vector<std::complex<double>> dprime_spectrum(const RankOneModifiedOperator& Dp) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(Dp.dprime, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw Error("dprime_spectrum: eigensolver failed to converge");
  const auto ev = es.eigenvalues();
  std::vector<std::complex<double>> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), [](auto a, auto b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

}  // namespace zline
