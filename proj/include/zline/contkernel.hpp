#ifndef ZLINE_CONTKERNEL_HPP
#define ZLINE_CONTKERNEL_HPP

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "zline/spectral.hpp"
#include "zline/toeplitz.hpp"

namespace zline {

// Even real continuous kernel h on [-L, L].
struct ContinuousKernel {
  std::function<double(double)> h;
  double L = 1.0;

  // Probes evenness on a grid; throws NotEven on failure.
  void validate(int probe_points = 257, double tol = 1e-12) const;
};

// Normalized step function sum_j a_j chi_{[j alpha, (j+1) alpha)} on [0, L].
struct StepEigenvector {
  double alpha = 0.0;
  Eigen::VectorXd a;  // unit L^2 norm: alpha * |a|^2 = 1
  double eigenvalue = 0.0;
  double gap = 0.0;

  std::complex<double> transform(std::complex<double> s) const;
};

struct StepZeroSet {
  std::vector<std::complex<double>> zeros;  // within the search window
  double max_abs_imag = 0.0;
  double max_eval = 0.0;  // max |xi_hat_n| over the reported zeros
};

struct ConvergenceRung {
  int N_steps = 0;
  double eigenvalue = 0.0;
  double gap = 0.0;
  double l2_distance_prev = 0.0;  // sign-aligned, NaN on the first rung
  double max_abs_imag = 0.0;
};

struct ConvergenceReport {
  std::vector<ConvergenceRung> rungs;
  bool distances_decreasing = true;
};

// T_{n,m} = alpha * h(|n-m| alpha), alpha = L / N_steps.
HermitianToeplitz discretize(const ContinuousKernel& k, int N_steps);

StepEigenvector step_eigen(const HermitianToeplitz& T, double L, Which which,
                           double gap_tol = -1.0);

// Zeros of the step transform with |Re s| <= window:
// the lattice 2 pi n / alpha (n != 0) plus i Log(z_k)/alpha + 2 pi n / alpha
// over the roots z_k of P.
StepZeroSet step_zeros(const StepEigenvector& xi, double window);

// Exact L^2([0,L]) distance between two step functions (possibly on
// different partitions), after aligning the sign of b.
double step_l2_distance(const StepEigenvector& a, const StepEigenvector& b,
                        double L);

ConvergenceReport convergence_study(const ContinuousKernel& k,
                                    const std::vector<int>& ladder,
                                    double window = 40.0);

}  // namespace zline

#endif
