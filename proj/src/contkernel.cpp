#include "zline/contkernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "zline/entire.hpp"
#include "zline/errors.hpp"
#include "zline/polyroots.hpp"

namespace zline {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

void ContinuousKernel::validate(int probe_points, double tol) const {
  if (!h || !(L > 0.0)) throw Error("ContinuousKernel: missing h or L <= 0");
  double scale = 1.0, dev = 0.0;
  for (int i = 0; i < probe_points; ++i) {
    const double x = L * i / (probe_points - 1.0);
    scale = std::max(scale, std::abs(h(x)));
    dev = std::max(dev, std::abs(h(x) - h(-x)));
  }
  if (dev > tol * scale) throw NotEven(dev);
}

HermitianToeplitz discretize(const ContinuousKernel& k, int N_steps) {
  if (N_steps < 2) throw DimensionMismatch("discretize: N_steps >= 2 required");
  k.validate();
  const double alpha = k.L / N_steps;
  HermitianToeplitz T;
  T.c.resize(N_steps);
  for (int j = 0; j < N_steps; ++j) T.c[j] = alpha * k.h(j * alpha);
  return T;
}

StepEigenvector step_eigen(const HermitianToeplitz& T, double L, Which which,
                           double gap_tol) {
  const int n = T.dim();
  const Eigen::MatrixXcd M = T.materialize();
  if (M.imag().cwiseAbs().maxCoeff() > 1e-12 * std::max(M.real().cwiseAbs().maxCoeff(), 1.0))
    throw NotSymmetric(M.imag().cwiseAbs().maxCoeff());
  const EigenPair p = extremal_pair(M.real(), which, gap_tol);

  StepEigenvector xi;
  xi.alpha = L / n;
  xi.a = p.vector / std::sqrt(xi.alpha);  // unit L^2 norm
  xi.eigenvalue = p.value;
  xi.gap = p.gap;
  return xi;
}

std::complex<double> StepEigenvector::transform(std::complex<double> s) const {
  const std::complex<double> z = std::exp(std::complex<double>(0.0, -1.0) * s * alpha);
  std::complex<double> P{0.0, 0.0};
  for (Eigen::Index j = a.size(); j-- > 0;) P = P * z + a[j];
  return P * (alpha * eps(alpha * s));
}

StepZeroSet step_zeros(const StepEigenvector& xi, double window) {
  StepZeroSet out;
  const double alpha = xi.alpha;
  const double period = kTwoPi / alpha;

  // chi_0-hat lattice zeros.
  const int mmax = static_cast<int>(std::floor(window / period));
  for (int m = -mmax; m <= mmax; ++m)
    if (m != 0) out.zeros.emplace_back(period * m, 0.0);

  // Roots of P(z), mapped through z = exp(-i s alpha).
  std::vector<std::complex<double>> coeffs(xi.a.data(), xi.a.data() + xi.a.size());
  const auto zroots = companion_roots(coeffs);
  for (const auto& z : zroots) {
    if (std::abs(z) == 0.0) continue;
    const std::complex<double> base =
        std::complex<double>(0.0, 1.0) * std::log(z) / alpha;
    const int n_lo = static_cast<int>(std::ceil((-window - base.real()) / period));
    const int n_hi = static_cast<int>(std::floor((window - base.real()) / period));
    for (int n = n_lo; n <= n_hi; ++n)
      out.zeros.push_back(base + std::complex<double>(period * n, 0.0));
  }

  for (const auto& s : out.zeros) {
    out.max_abs_imag = std::max(out.max_abs_imag, std::abs(s.imag()));
    out.max_eval = std::max(out.max_eval, std::abs(xi.transform(s)));
  }
  return out;
}

double step_l2_distance(const StepEigenvector& a, const StepEigenvector& b,
                        double L) {
  const auto value = [](const StepEigenvector& f, double x) {
    const int j = std::min<int>(static_cast<int>(x / f.alpha),
                                static_cast<int>(f.a.size()) - 1);
    return f.a[j];
  };
  // Sign alignment: make <a, b> >= 0.
  double inner = 0.0, acc = 0.0;
  const int na = static_cast<int>(a.a.size()), nb = static_cast<int>(b.a.size());
  std::vector<double> pts;
  pts.reserve(na + nb + 1);
  for (int j = 0; j <= na; ++j) pts.push_back(j * a.alpha);
  for (int j = 0; j <= nb; ++j) pts.push_back(j * b.alpha);
  pts.push_back(L);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](double x, double y) { return std::abs(x - y) < 1e-15; }),
            pts.end());

  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i] >= L) break;
    const double mid = 0.5 * (pts[i] + std::min(pts[i + 1], L));
    const double w = std::min(pts[i + 1], L) - pts[i];
    inner += w * value(a, mid) * value(b, mid);
  }
  const double sign = inner >= 0.0 ? 1.0 : -1.0;
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i] >= L) break;
    const double mid = 0.5 * (pts[i] + std::min(pts[i + 1], L));
    const double w = std::min(pts[i + 1], L) - pts[i];
    const double d = value(a, mid) - sign * value(b, mid);
    acc += w * d * d;
  }
  return std::sqrt(acc);
}

ConvergenceReport convergence_study(const ContinuousKernel& k,
                                    const std::vector<int>& ladder,
                                    double window) {
  ConvergenceReport rep;
  StepEigenvector prev;
  bool have_prev = false;
  double prev_dist = std::numeric_limits<double>::infinity();
  for (int N : ladder) {
    const HermitianToeplitz T = discretize(k, N);
    const StepEigenvector xi = step_eigen(T, k.L, Which::max);
    ConvergenceRung rung;
    rung.N_steps = N;
    rung.eigenvalue = xi.eigenvalue;
    rung.gap = xi.gap;
    rung.l2_distance_prev = std::numeric_limits<double>::quiet_NaN();
    if (have_prev) {
      rung.l2_distance_prev = step_l2_distance(prev, xi, k.L);
      if (std::isfinite(prev_dist) &&
          rung.l2_distance_prev > prev_dist + 1e-12)
        rep.distances_decreasing = false;
      prev_dist = rung.l2_distance_prev;
    }
    rung.max_abs_imag = step_zeros(xi, window).max_abs_imag;
    rep.rungs.push_back(rung);
    prev = xi;
    have_prev = true;
  }
  return rep;
}

}  // namespace zline
