#ifndef ZLINE_REPLAB_HPP
#define ZLINE_REPLAB_HPP

#include <Eigen/Dense>
#include <boost/rational.hpp>
#include <vector>

namespace zline {

using Rat = boost::rational<long long>;

// Entry mu_{n,m}: central 3x3 block, diagonal 2/(1-n^2), borders 1/(-1-n)
// and 1/(-1+n); zero elsewhere.
Rat mu_entry(long long n, long long m);

std::vector<std::vector<Rat>> mu_matrix_rational(int N);
Eigen::MatrixXd mu_matrix(int N);

// The compression mu(N) compared against the printed 9x9 table at N = 4.
bool mu_table_check();

struct McReport {
  Eigen::Matrix3d M;
  Eigen::Vector3d eigs_computed;      // ascending
  Eigen::Vector3d eigs_closed_form;   // ascending
  double eig_deviation = 0.0;
  double vec_deviation = 0.0;  // max over the three closed-form eigenvectors
};

McReport matrix_mc(double c);

struct LimitRung {
  int N = 0;
  double lambda_max = 0.0;
  double lambda_min = 0.0;
  double gap_max = 0.0;  // |lambda_max - 8/3|
  double gap_min = 0.0;  // |lambda_min + 8/5|
  double overlap_max = 0.0;  // top eigenvector vs sin/cos(pi x) Fourier data
  double overlap_min = 0.0;  // bottom eigenvector vs sin/cos(3 pi x)
};

struct LimitsReport {
  std::vector<LimitRung> rungs;
  bool gaps_max_decreasing = true;
  bool gaps_min_decreasing = true;
};

LimitsReport appendix_limits(const std::vector<int>& N_list);

// h^+(s) = 2 pi cos(s/2) / (pi^2 - s^2), with the removable points at +-pi.
double hplus(double s);

struct ScanCell {
  double u = 0.0, v = 0.0;
  bool feasible = false;
  bool realroot_ok = false;
};

struct RegionMap {
  std::vector<ScanCell> cells;
  int counterexamples = 0;  // feasible but real-root condition fails
  // Max |v_boundary - f(u)| over columns with 0 < u < 3 sqrt(2), in units
  // of the grid spacing.
  double boundary_deviation_cells = 0.0;
};

// Scan of the (u, v) plane (w = 1): existence of a nonzero PSD
// mu(a, b, y, z, t) with u e1 + v e2 + w e3 in its kernel, versus the
// real-root region.
RegionMap n2_positivity_scan(int grid, double lo = -5.0, double hi = 5.0);

bool realroot_region(double u, double v);  // w = 1 case split
double boundary_f(double u);               // the separating curve on (0, 3 sqrt 2)

struct OddWindow {
  double lo = 0.0, hi = 0.0;
};

struct OddScanReport {
  std::vector<double> feasible_beta;
  std::vector<OddWindow> windows;
  int violations = 0;  // feasible beta with v = -cot(beta) inside (-2, -1/2)
};

// Scan beta over (-pi, pi] at the given step; for each beta decide whether
// some (a, y) satisfies the three positivity conditions.
OddScanReport odd_kernel_scan(double step = 1e-3);

// Sign test for nonnegativity of all roots of a real-rooted monic
// polynomial (coeffs ascending, leading coefficient 1).
bool monic_nonneg_roots_check(const std::vector<double>& coeffs);

}  // namespace zline

#endif
