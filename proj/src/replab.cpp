#include "zline/replab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "zline/errors.hpp"

namespace zline {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
}  // namespace

Rat mu_entry(long long n, long long m) {
  const bool nc = (n >= -1 && n <= 1), mc = (m >= -1 && m <= 1);
  if (nc && mc) {
    // central block, rows/cols ordered -1, 0, 1
    static const Rat block[3][3] = {{{1, 2}, {-1, 1}, {-1, 1}},
                                    {{-1, 1}, {2, 1}, {-1, 1}},
                                    {{-1, 1}, {-1, 1}, {1, 2}}};
    return block[n + 1][m + 1];
  }
  if (n == m) return {2, 1 - n * n};
  if (m == -1 || n == -1) {
    const long long k = (m == -1) ? n : m;
    return {1, -1 - k};
  }
  if (m == 1 || n == 1) {
    const long long k = (m == 1) ? n : m;
    return {1, -1 + k};
  }
  return {0, 1};
}

std::vector<std::vector<Rat>> mu_matrix_rational(int N) {
  if (N < 1) throw DimensionMismatch("mu_matrix_rational: N >= 1 required");
  const int n = 2 * N + 1;
  std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M[i][j] = mu_entry(i - N, j - N);
  return M;
}

Eigen::MatrixXd mu_matrix(int N) {
  const auto R = mu_matrix_rational(N);
  const int n = 2 * N + 1;
  Eigen::MatrixXd M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      M(i, j) = boost::rational_cast<double>(R[i][j]);
  return M;
}

bool mu_table_check() {
  // The 9x9 compression, rows/cols -4..4.
  static const Rat table[9][9] = {
      {{-2, 15}, {0, 1}, {0, 1}, {1, 3}, {0, 1}, {-1, 5}, {0, 1}, {0, 1}, {0, 1}},
      {{0, 1}, {-1, 4}, {0, 1}, {1, 2}, {0, 1}, {-1, 4}, {0, 1}, {0, 1}, {0, 1}},
      {{0, 1}, {0, 1}, {-2, 3}, {1, 1}, {0, 1}, {-1, 3}, {0, 1}, {0, 1}, {0, 1}},
      {{1, 3}, {1, 2}, {1, 1}, {1, 2}, {-1, 1}, {-1, 1}, {-1, 3}, {-1, 4}, {-1, 5}},
      {{0, 1}, {0, 1}, {0, 1}, {-1, 1}, {2, 1}, {-1, 1}, {0, 1}, {0, 1}, {0, 1}},
      {{-1, 5}, {-1, 4}, {-1, 3}, {-1, 1}, {-1, 1}, {1, 2}, {1, 1}, {1, 2}, {1, 3}},
      {{0, 1}, {0, 1}, {0, 1}, {-1, 3}, {0, 1}, {1, 1}, {-2, 3}, {0, 1}, {0, 1}},
      {{0, 1}, {0, 1}, {0, 1}, {-1, 4}, {0, 1}, {1, 2}, {0, 1}, {-1, 4}, {0, 1}},
      {{0, 1}, {0, 1}, {0, 1}, {-1, 5}, {0, 1}, {1, 3}, {0, 1}, {0, 1}, {-2, 15}}};
  const auto M = mu_matrix_rational(4);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j)
      if (M[i][j] != table[i][j]) return false;
  return true;
}

McReport matrix_mc(double c) {
  McReport rep;
  rep.M << 0, -1, -1, -1, c, -1, -1, -1, 0;

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(rep.M);
  rep.eigs_computed = es.eigenvalues();

  const double r = std::sqrt(c * c + 2 * c + 9);
  Eigen::Vector3d cf(1.0, (c - 1 - r) / 2, (c - 1 + r) / 2);
  std::sort(cf.data(), cf.data() + 3);
  rep.eigs_closed_form = cf;
  rep.eig_deviation = (rep.eigs_computed - cf).cwiseAbs().maxCoeff();

  const double X = -(-r + c - 3) / (r + c + 3);
  const double Y = -(-r - c + 3) / (r - c - 3);
  const Eigen::Vector3d vecs[3] = {{-1, 0, 1}, {1, X, 1}, {1, Y, 1}};
  const double vals[3] = {1.0, (c - 1 - r) / 2, (c - 1 + r) / 2};
  for (int k = 0; k < 3; ++k) {
    const Eigen::Vector3d v = vecs[k].normalized();
    rep.vec_deviation =
        std::max(rep.vec_deviation, (rep.M * v - vals[k] * v).cwiseAbs().maxCoeff());
  }
  return rep;
}

namespace {
// Fourier data on [0, 1]: sin(pi x) -> 2/(pi(1-4n^2)) (real even);
// cos(pi x) -> 4n/(pi(1-4n^2)) after dividing by i (real odd);
// sin(3 pi x) -> 6/(pi(9-4n^2)); cos(3 pi x) -> 4n/(pi(9-4n^2)).
Eigen::VectorXd fourier_vector(int N, int mode, bool odd_part) {
  const int n = 2 * N + 1;
  Eigen::VectorXd f(n);
  for (int j = -N; j <= N; ++j) {
    const double den = kPi * (mode * mode - 4.0 * j * j);
    f[j + N] = odd_part ? 4.0 * j / den : 2.0 * mode / den;
  }
  return f.normalized();
}

double best_overlap(const Eigen::VectorXd& v, int mode) {
  const int N = static_cast<int>(v.size() / 2);
  const double o_even = std::abs(v.dot(fourier_vector(N, mode, false)));
  const double o_odd = std::abs(v.dot(fourier_vector(N, mode, true)));
  return std::max(o_even, o_odd);
}
}  // namespace

LimitsReport appendix_limits(const std::vector<int>& N_list) {
  LimitsReport rep;
  double prev_max = std::numeric_limits<double>::infinity();
  double prev_min = std::numeric_limits<double>::infinity();
  for (int N : N_list) {
    const Eigen::MatrixXd M = mu_matrix(N);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
    LimitRung r;
    r.N = N;
    const int n = 2 * N + 1;
    r.lambda_max = es.eigenvalues()[n - 1];
    r.lambda_min = es.eigenvalues()[0];
    r.gap_max = std::abs(r.lambda_max - 8.0 / 3.0);
    r.gap_min = std::abs(r.lambda_min + 8.0 / 5.0);
    r.overlap_max = best_overlap(es.eigenvectors().col(n - 1), 1);
    r.overlap_min = best_overlap(es.eigenvectors().col(0), 3);
    if (r.gap_max >= prev_max) rep.gaps_max_decreasing = false;
    if (r.gap_min >= prev_min) rep.gaps_min_decreasing = false;
    prev_max = r.gap_max;
    prev_min = r.gap_min;
    rep.rungs.push_back(r);
  }
  return rep;
}

double hplus(double s) {
  const double d = kPi * kPi - s * s;
  if (std::abs(d) < 1e-6) {
    // limit at s = +-pi via l'Hopital
    return kPi * std::sin(s / 2) / (2.0 * s);
  }
  return 2.0 * kPi * std::cos(s / 2) / d;
}

namespace {
// sigma/alpha blocks of mu(a,b,y,z,t) in the even/odd bases.
Eigen::Matrix3d sigma_block(double a, double b, double y, double z, double t) {
  Eigen::Matrix3d S;
  S << t, kSqrt2 * a, b / kSqrt2,
       kSqrt2 * a, a + y + t, -(2.0 / 3.0) * (a - 2 * b),
       b / kSqrt2, -(2.0 / 3.0) * (a - 2 * b), b / 2 + z + t;
  return S;
}

Eigen::Matrix2d alpha_block(double a, double b, double y, double z, double t) {
  Eigen::Matrix2d A;
  A << (2 * z - b) / 2 + t, -(2.0 / 3.0) * (2 * a - b),
       -(2.0 / 3.0) * (2 * a - b), -a + t + y;
  return A;
}

// y, z, t eliminated so that u e1 + v e2 + w e3 lies in the kernel (w = 1).
void kernel_subspace(double u, double v, double a, double b, double& y,
                     double& z, double& t) {
  const double w = 1.0;
  y = b * w * (3 * kSqrt2 * v - 8 * u) / (6 * u * v) -
      a * (3 * kSqrt2 * u * u + 3 * u * v - 2 * u * w - 3 * kSqrt2 * v * v) /
          (3 * u * v);
  z = a * v * (2 * u + 3 * kSqrt2 * w) / (3 * u * w) -
      b * (3 * kSqrt2 * u * u + 8 * u * v + 3 * u * w - 3 * kSqrt2 * w * w) /
          (6 * u * w);
  t = -kSqrt2 * a * v / u - b * w / (kSqrt2 * u);
}

// Feasibility margin at direction (a, b): the kernel must be exactly the
// span of xi.  sigma annihilates xi by construction, so the requirement is
// that its second-smallest eigenvalue and both eigenvalues of alpha are
// strictly positive.  Degenerate rays where an extra kernel vector appears
// do not count (they escape the real-root region).
double strict_margin(double u, double v, double a, double b) {
  double y, z, t;
  kernel_subspace(u, v, a, b, y, z, t);
  const Eigen::Matrix3d S = sigma_block(a, b, y, z, t);
  const Eigen::Matrix2d A = alpha_block(a, b, y, z, t);
  const double scale =
      std::max({S.cwiseAbs().maxCoeff(), A.cwiseAbs().maxCoeff(), 1.0});
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> esS(S);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> esA(A);
  return std::min(esS.eigenvalues()[1], esA.eigenvalues()[0]) / scale;
}

bool psd_at(double u, double v, double a, double b) {
  return strict_margin(u, v, a, b) > 1e-7;
}

// The matrix is linear in (a, b), so the PSD elements of the kernel
// subspace form a convex cone; a nonzero PSD element exists iff some
// direction on the unit circle is PSD.
bool feasible_at(double u, double v) {
  constexpr int kCoarse = 720;
  for (int i = 0; i < kCoarse; ++i) {
    const double th = 2 * kPi * i / kCoarse;
    if (psd_at(u, v, std::cos(th), std::sin(th))) return true;
  }
  // refine around the least-infeasible direction
  double best = -std::numeric_limits<double>::infinity(), best_th = 0.0;
  for (int i = 0; i < kCoarse; ++i) {
    const double th = 2 * kPi * i / kCoarse;
    const double m = strict_margin(u, v, std::cos(th), std::sin(th));
    if (m > best) {
      best = m;
      best_th = th;
    }
  }
  double span = 2 * kPi / kCoarse;
  for (int pass = 0; pass < 24; ++pass) {
    bool improved = false;
    for (int i = -8; i <= 8; ++i) {
      const double th = best_th + span * i / 8.0;
      const double m = strict_margin(u, v, std::cos(th), std::sin(th));
      if (m > 1e-7) return true;
      if (m > best) {
        best = m;
        best_th = th;
        improved = true;
      }
    }
    span /= 4.0;
    if (!improved && span < 1e-14) break;
  }
  return false;
}
}  // namespace

bool realroot_region(double u, double v) {
  if (u < 0.0) return v < (-u - kSqrt2) / kSqrt2;
  if (u > 0.0 && u < 3 * kSqrt2) return v > (-5 * u - kSqrt2) / (4 * kSqrt2);
  if (u >= 3 * kSqrt2) return v > (-u - kSqrt2) / kSqrt2;
  return false;  // u = 0 excluded
}

double boundary_f(double u) {
  return (-3 * kSqrt2 * u - 2) / 8 + std::sqrt(3.0) * std::sqrt(u) /
                                         (2 * std::pow(2.0, 0.25));
}

RegionMap n2_positivity_scan(int grid, double lo, double hi) {
  RegionMap map;
  map.cells.reserve(static_cast<size_t>(grid) * grid);
  const double h = (hi - lo) / grid;
  for (int i = 0; i < grid; ++i) {
    const double u = lo + h * (i + 0.5);  // cell centers keep off the axes
    double min_feasible_v = std::numeric_limits<double>::quiet_NaN();
    for (int j = 0; j < grid; ++j) {
      const double v = lo + h * (j + 0.5);
      ScanCell cell;
      cell.u = u;
      cell.v = v;
      cell.feasible = feasible_at(u, v);
      cell.realroot_ok = realroot_region(u, v);
      if (cell.feasible && !cell.realroot_ok) ++map.counterexamples;
      if (cell.feasible && std::isnan(min_feasible_v)) min_feasible_v = v;
      map.cells.push_back(cell);
    }
    if (u > 0.0 && u < 3 * kSqrt2 && !std::isnan(min_feasible_v)) {
      const double f = boundary_f(u);
      if (f >= lo && f <= hi) {
        const double dev = std::abs(min_feasible_v - h / 2 - f) / h;
        map.boundary_deviation_cells = std::max(map.boundary_deviation_cells, dev);
      }
    }
  }
  return map;
}

namespace {
// The three positivity conditions of the odd-kernel case, as functions of
// (a, y) for fixed beta. cond1 factors as f1(a) * f2(y); cond2 and cond3
// are linear in y for fixed a.
struct OddConditions {
  double s, c;  // sin(beta), cos(beta)
  explicit OddConditions(double beta) : s(std::sin(beta)), c(std::cos(beta)) {}

  double f1(double a) const {
    return 0.125 * (4 * a * s + c * (3 * s * s - 2 * a));
  }
  double f2(double y) const {
    return 4 * s * s * s - 4 * y * s + c * (8 * y - 11 * s * s);
  }
  // cond2 = c2y(a) * y + c2c(a)
  double c2y(double a) const { return -4 * a - 0.75 * 2 * s * c - 1.0; }
  double c2c(double a) const {
    const double s2 = 2 * s * c, c2 = c * c - s * s;
    const double s4 = 2 * s2 * c2, c4 = c2 * c2 - s2 * s2;
    return -3.25 * a * s2 - (2 * a + 0.5) * c2 + 5 * a + 0.75 * s2 -
           0.375 * s4 + (33.0 / 64.0) * c4 - 1.0 / 64.0;
  }
  // cond3 = y <= 5a + c3c
  double c3c() const { return 2 * s * s + c * c + 1.5 * s * c; }
};

struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool empty = false;
  void cap_hi(double x) { hi = std::min(hi, x); }
  void cap_lo(double x) { lo = std::max(lo, x); }
  bool ok() const { return !empty && lo <= hi; }
};

// For fixed beta and a: intersect the y-constraints exactly.
bool odd_feasible_at_a(const OddConditions& oc, double a) {
  constexpr double kEps = 1e-12;
  Interval iv;
  iv.cap_hi(5 * a + oc.c3c());  // cond3

  const double cy = oc.c2y(a), cc = oc.c2c(a);  // cond2: cy*y + cc >= 0
  if (std::abs(cy) < kEps) {
    if (cc < -kEps) return false;
  } else if (cy > 0) {
    iv.cap_lo(-cc / cy);
  } else {
    iv.cap_hi(-cc / cy);
  }

  const double g1 = oc.f1(a);  // cond1: f1(a) * f2(y) >= 0
  if (std::abs(g1) >= kEps) {
    // f2(y) = (8c - 4s) y + (4s^3 - 11 s^2 c)
    const double fy = 8 * oc.c - 4 * oc.s;
    const double fc = 4 * oc.s * oc.s * oc.s - 11 * oc.s * oc.s * oc.c;
    const double want = g1 > 0 ? 1.0 : -1.0;  // sign required of f2
    if (std::abs(fy) < kEps) {
      if (want * fc < -kEps) return false;
    } else if (want * fy > 0) {
      iv.cap_lo(-fc / fy);
    } else {
      iv.cap_hi(-fc / fy);
    }
  }
  return iv.ok();
}

bool odd_feasible(double beta) {
  const OddConditions oc(beta);
  // 1-D scan over a, plus the root of f1 (where cond1 degenerates).
  const double denom = 2 * oc.c - 4 * oc.s;
  if (std::abs(denom) > 1e-12) {
    const double astar = 3 * oc.s * oc.s * oc.c / denom;
    if (std::abs(astar) < 1e6 && odd_feasible_at_a(oc, astar)) return true;
  }
  for (int i = 0; i <= 4000; ++i) {
    const double a = -10.0 + 20.0 * i / 4000.0;
    if (odd_feasible_at_a(oc, a)) return true;
  }
  return false;
}
}  // namespace

OddScanReport odd_kernel_scan(double step) {
  OddScanReport rep;
  const int n = static_cast<int>(std::round(2 * kPi / step));
  bool prev = false;
  double window_start = 0.0;
  for (int i = 1; i <= n; ++i) {
    const double beta = -kPi + 2 * kPi * i / n;
    if (std::abs(std::sin(beta)) < 1e-9) continue;  // cot pole
    const bool feas = odd_feasible(beta);
    if (feas) {
      rep.feasible_beta.push_back(beta);
      const double v = -1.0 / std::tan(beta);
      if (v > -2.0 + 1e-9 && v < -0.5 - 1e-9) ++rep.violations;
      if (!prev) window_start = beta;
    } else if (prev) {
      rep.windows.push_back({window_start, beta - 2 * kPi / n});
    }
    prev = feas;
  }
  if (prev) rep.windows.push_back({window_start, kPi});
  return rep;
}

bool monic_nonneg_roots_check(const std::vector<double>& coeffs) {
  if (coeffs.empty() || std::abs(coeffs.back() - 1.0) > 1e-12)
    throw Error("monic_nonneg_roots_check: polynomial must be monic");
  const int n = static_cast<int>(coeffs.size()) - 1;
  for (int j = 1; j <= n; ++j) {
    const double aj = coeffs[n - j];
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    if (sign * aj < -1e-12) return false;
  }
  return true;
}

}  // namespace zline
