#include "zline/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zline/errors.hpp"
#include "zline/polyroots.hpp"

namespace zline {

namespace {
using Cx = std::complex<double>;

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solve(const HermitianToeplitz& T) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(T.materialize());
  if (es.info() != Eigen::Success)
    throw std::runtime_error("toeplitz: eigensolver failed");
  return es;
}
}  // namespace

Eigen::MatrixXcd HermitianToeplitz::materialize() const {
  const int n = dim();
  Eigen::MatrixXcd M(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) M(j, k) = entry(j, k);
  return M;
}

void HermitianToeplitz::validate() const {
  if (c.empty()) throw std::invalid_argument("HermitianToeplitz: empty coefficients");
  if (std::abs(c[0].imag()) > 1e-14 * std::max(1.0, std::abs(c[0])))
    throw std::invalid_argument("HermitianToeplitz: c_0 must be real");
}

HermitianToeplitz HermitianToeplitz::from_nodes(const std::vector<Cx>& nodes,
                                                const std::vector<double>& weights,
                                                int size) {
  if (nodes.size() != weights.size())
    throw std::invalid_argument("from_nodes: nodes/weights size mismatch");
  HermitianToeplitz T;
  T.c.resize(size);
  for (int m = 0; m < size; ++m) {
    Cx acc{0.0, 0.0};
    for (size_t k = 0; k < nodes.size(); ++k)
      acc += weights[k] * std::pow(nodes[k], m);
    T.c[m] = acc;
  }
  T.c[0] = Cx(T.c[0].real(), 0.0);
  return T;
}

Eigen::VectorXcd kernel_vector(const HermitianToeplitz& T, double tol) {
  T.validate();
  const auto es = solve(T);
  const auto& ev = es.eigenvalues();
  const double scale = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  if (ev(0) < -tol * std::max(scale, 1.0)) throw NotPSD(ev(0));
  int kdim = 0;
  while (kdim < ev.size() && ev(kdim) < tol * std::max(scale, 1.0)) ++kdim;
  if (kdim != 1) throw KernelDimensionNotOne(kdim);
  return es.eigenvectors().col(0);
}

RootReport kernel_polynomial_roots(const Eigen::VectorXcd& xi, double tol) {
  const int n = static_cast<int>(xi.size()) - 1;
  if (n < 1) throw std::invalid_argument("kernel_polynomial_roots: need degree >= 1");
  const double scale = xi.cwiseAbs().maxCoeff();
  if (std::abs(xi(0)) <= tol * scale || std::abs(xi(n)) <= tol * scale)
    throw LeadingOrTrailingZero();
  std::vector<Cx> coeffs(n + 1);
  for (int j = 0; j <= n; ++j) coeffs[j] = xi(j);
  RootReport rep;
  rep.roots = companion_roots(coeffs);
  for (const Cx& z : rep.roots)
    rep.max_modulus_deviation = std::max(rep.max_modulus_deviation, std::abs(std::abs(z) - 1.0));
  return rep;
}

Symmetry palindrome_check(const Eigen::VectorXcd& xi, double tol) {
  const int n = static_cast<int>(xi.size()) - 1;
  const double norm2 = xi.squaredNorm();
  if (norm2 == 0.0) return Symmetry::neither;
  // The flip factor: xi_{n-j} = sigma conj(xi_j) with |sigma| = 1 for kernel
  // vectors of rank-deficient PSD Toeplitz matrices; sigma = +-1 in the real case.
  Cx sigma{0.0, 0.0};
  for (int j = 0; j <= n; ++j) sigma += xi(n - j) * xi(j);
  sigma /= norm2;
  double dev = 0.0;
  for (int j = 0; j <= n; ++j)
    dev = std::max(dev, std::abs(xi(n - j) - sigma * std::conj(xi(j))));
  const double scale = std::sqrt(norm2);
  if (dev > tol * scale || std::abs(std::abs(sigma) - 1.0) > tol) return Symmetry::neither;
  if (std::abs(sigma - Cx(1.0, 0.0)) <= tol) return Symmetry::palindromic;
  if (std::abs(sigma + Cx(1.0, 0.0)) <= tol) return Symmetry::antipalindromic;
  return Symmetry::neither;
}

CFDecomposition cf_decompose(const HermitianToeplitz& T, double tol) {
  T.validate();
  const int n1 = T.dim();
  const auto es = solve(T);
  const auto& ev = es.eigenvalues();
  const double lmax = ev(ev.size() - 1);
  const double scale = std::max(std::abs(ev(0)), std::abs(lmax));
  if (ev(0) < -tol * std::max(scale, 1.0)) throw NotPSD(ev(0));
  int rank = 0;
  for (int i = 0; i < ev.size(); ++i)
    if (ev(i) > tol * std::max(scale, 1.0)) ++rank;
  if (rank == n1) throw RankDeficiencyNotDetected();

  // Nodes from the kernel polynomial of the leading (r+1) x (r+1) block.
  HermitianToeplitz lead;
  lead.c.assign(T.c.begin(), T.c.begin() + rank + 1);
  const Eigen::VectorXcd xi = kernel_vector(lead, tol);
  RootReport roots = kernel_polynomial_roots(xi);

  CFDecomposition cf;
  cf.nodes = roots.roots;
  cf.max_modulus_deviation = roots.max_modulus_deviation;
  std::sort(cf.nodes.begin(), cf.nodes.end(), [](const Cx& u, const Cx& v) {
    auto arg0 = [](const Cx& z) {
      double a = std::arg(z);
      return a < 0 ? a + 2.0 * std::numbers::pi : a;
    };
    return arg0(u) < arg0(v);
  });

  double min_sep = 4.0;
  for (size_t i = 0; i < cf.nodes.size(); ++i)
    for (size_t j = i + 1; j < cf.nodes.size(); ++j)
      min_sep = std::min(min_sep, std::abs(cf.nodes[i] - cf.nodes[j]));

  // Weights from the real least-squares system sum_k w_k z_k^m = c_m, m = 0..n.
  const int r = static_cast<int>(cf.nodes.size());
  Eigen::MatrixXd A(2 * n1, r);
  Eigen::VectorXd rhs(2 * n1);
  for (int m = 0; m < n1; ++m) {
    for (int k = 0; k < r; ++k) {
      const Cx p = std::pow(cf.nodes[k], m);
      A(2 * m, k) = p.real();
      A(2 * m + 1, k) = p.imag();
    }
    rhs(2 * m) = T.c[m].real();
    rhs(2 * m + 1) = T.c[m].imag();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double cond = svd.singularValues()(0) /
                      std::max(svd.singularValues()(svd.singularValues().size() - 1),
                               1e-300);
  cf.node_condition = cond;
  if (min_sep < 1e-8 || cond > 1e12) throw IllConditionedNodes(cond);
  const Eigen::VectorXd w = svd.solve(rhs);
  cf.weights.assign(w.data(), w.data() + r);

  const HermitianToeplitz rec = HermitianToeplitz::from_nodes(cf.nodes, cf.weights, n1);
  cf.reconstruction_error =
      (rec.materialize() - T.materialize()).norm() / std::max(T.materialize().norm(), 1e-300);
  return cf;
}

}  // namespace zline
