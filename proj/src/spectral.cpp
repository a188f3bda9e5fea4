#include "zline/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "zline/errors.hpp"
#include "zline/zeros.hpp"

namespace zline {

EigenDecomposition sym_eig(const Eigen::MatrixXd& A, double sym_tol) {
  if (A.rows() != A.cols()) throw DimensionMismatch("sym_eig: matrix not square");
  const double scale = std::max(A.cwiseAbs().maxCoeff(), 1.0);
  const double dev = (A - A.transpose()).cwiseAbs().maxCoeff();
  if (dev > sym_tol * scale) throw NotSymmetric(dev);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
  if (es.info() != Eigen::Success)
    throw Error("sym_eig: eigensolver failed to converge");
  return {es.eigenvalues(), es.eigenvectors()};
}

Parity parity_of(const Eigen::VectorXd& v, double tol) {
  const Eigen::Index n = v.size();
  const double nrm = v.norm();
  if (nrm == 0.0) return Parity::mixed;
  double even_dev = 0.0, odd_dev = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    even_dev = std::max(even_dev, std::abs(v[i] - v[n - 1 - i]));
    odd_dev = std::max(odd_dev, std::abs(v[i] + v[n - 1 - i]));
  }
  if (even_dev <= tol * nrm) return Parity::even;
  if (odd_dev <= tol * nrm) return Parity::odd;
  return Parity::mixed;
}

EigenPair extremal_pair(const Eigen::MatrixXd& A, Which which, double gap_tol) {
  const EigenDecomposition ed = sym_eig(A);
  const Eigen::Index n = ed.values.size();
  if (gap_tol < 0.0) gap_tol = 1e-8 * std::max(A.cwiseAbs().maxCoeff(), 1.0);

  EigenPair p;
  if (which == Which::min) {
    p.value = ed.values[0];
    p.vector = ed.vectors.col(0);
    p.gap = (n > 1) ? ed.values[1] - ed.values[0] : std::numeric_limits<double>::infinity();
  } else {
    p.value = ed.values[n - 1];
    p.vector = ed.vectors.col(n - 1);
    p.gap = (n > 1) ? ed.values[n - 1] - ed.values[n - 2]
                    : std::numeric_limits<double>::infinity();
  }
  if (p.gap < gap_tol) throw NotSimple(p.gap);
  p.parity = parity_of(p.vector);
  return p;
}

TruncationLadderReport truncation_sweep(const DistributionSpec& dist,
                                        const std::vector<int>& N_list,
                                        double gap_tol, double tol_real) {
  TruncationLadderReport rep;
  double prev = std::numeric_limits<double>::infinity();
  for (int N : N_list) {
    const QuadraticFormStructure Q = build_form(dist, N);
    const Eigen::MatrixXd A = Q.materialize();

    LadderRung rung;
    rung.N = N;
    EigenPair p;
    try {
      p = extremal_pair(A, Which::min, gap_tol);
      rung.simple = true;
    } catch (const NotSimple& e) {
      const EigenDecomposition ed = sym_eig(A);
      p.value = ed.values[0];
      p.vector = ed.vectors.col(0);
      p.gap = (ed.values.size() > 1) ? ed.values[1] - ed.values[0] : 0.0;
      p.parity = parity_of(p.vector);
      rung.simple = false;
    }
    rung.lambda_min = p.value;
    rung.gap = p.gap;
    rung.parity = p.parity;

    if (rung.simple && rung.parity == Parity::even) {
      // Shift the form so the minimizer sits in the kernel, then certify
      // that the associated polynomial has only real roots.
      std::vector<double> xi(p.vector.data(), p.vector.data() + p.vector.size());
      std::vector<double> lambda(2 * N + 1);
      for (int j = -N; j <= N; ++j) lambda[j + N] = static_cast<double>(j);
      const KernelPolynomial P = build_p(xi, lambda);
      const ZeroReport zr = poly_roots(P, tol_real);
      rung.max_imag_root = zr.max_abs_imag;
      rung.zero_certified = zr.certified_real;
      rung.zero_pipeline_ran = true;
    }

    if (rung.lambda_min > prev + 1e-12 * std::max(std::abs(prev), 1.0))
      rep.monotone = false;
    prev = rung.lambda_min;
    rep.rungs.push_back(rung);
  }
  return rep;
}

const char* to_string(Parity p) {
  switch (p) {
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    default: return "mixed";
  }
}

}  // namespace zline
