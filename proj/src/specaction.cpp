#include "zline/specaction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "zline/errors.hpp"

namespace zline {

namespace {
constexpr double kClusterTol = 1e-9;

double factorial(int m) {
  double r = 1.0;
  for (int k = 2; k <= m; ++k) r *= k;
  return r;
}

// Gauss-Legendre nodes/weights on [0, 1] via Newton on Legendre P_n.
void gauss_legendre01(int n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  for (int i = 0; i < n; ++i) {
    double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (t * p1 - p0) / (t * t - 1.0);
      const double dt = p1 / pp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    x[i] = 0.5 * (1.0 - t);  // map [-1,1] -> [0,1], reversed order is fine
    w[i] = 1.0 / ((1.0 - t * t) * pp * pp);
  }
}

double simplex_integral(const SmoothFunction& f, std::span<const double> pts,
                        int level, double budget, double arg,
                        const std::vector<double>& qx, const std::vector<double>& qw,
                        int order) {
  // Integrates f^{(n)}(x_0 + sum s_i (x_i - x_0)) over s_1 + ... + s_n <= budget.
  if (level > static_cast<int>(pts.size()) - 1) return f.deriv(arg, order);
  double acc = 0.0;
  for (size_t q = 0; q < qx.size(); ++q) {
    const double s = budget * qx[q];
    acc += budget * qw[q] *
           simplex_integral(f, pts, level + 1, budget - s,
                            arg + s * (pts[level] - pts[0]), qx, qw, order);
  }
  return acc;
}
}  // namespace

double SmoothFunction::deriv(double x, int k) const {
  if (k > max_order) throw DerivativeUnavailable(k);
  return eval(x, k);
}

SmoothFunction SmoothFunction::shifted(int k) const {
  if (k > max_order) throw DerivativeUnavailable(k);
  SmoothFunction g;
  g.max_order = max_order - k;
  g.eval = [base = eval, k](double x, int m) { return base(x, m + k); };
  return g;
}

SmoothFunction make_polynomial(std::vector<double> coeffs) {
  SmoothFunction f;
  f.max_order = 1 << 20;  // derivatives of every order are exact
  f.eval = [c = std::move(coeffs)](double x, int k) {
    double acc = 0.0;
    for (size_t j = c.size(); j-- > static_cast<size_t>(k);) {
      double fac = 1.0;
      for (size_t m = 0; m < static_cast<size_t>(k); ++m) fac *= double(j - m);
      acc = acc * x + c[j] * fac;
    }
    return acc;
  };
  return f;
}

double divided_difference(const SmoothFunction& f, std::span<const double> points) {
  const int n = static_cast<int>(points.size());
  if (n == 0) throw DimensionMismatch("divided_difference: empty point list");
  std::vector<double> x(points.begin(), points.end());
  std::sort(x.begin(), x.end());

  // Newton table over sorted points with the confluent rule at clusters.
  std::vector<double> d(n);
  for (int i = 0; i < n; ++i) d[i] = f.deriv(x[i], 0);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < n - j; ++i) {
      const double den = x[i + j] - x[i];
      if (std::abs(den) < kClusterTol)
        d[i] = f.deriv(x[i], j) / factorial(j);
      else
        d[i] = (d[i + 1] - d[i]) / den;
    }
  }
  return d[0];
}

double hermite_dd(const SmoothFunction& f, std::span<const double> points,
                  int quadrature_order) {
  const int n = static_cast<int>(points.size()) - 1;
  if (n < 0) throw DimensionMismatch("hermite_dd: empty point list");
  if (n == 0) return f.deriv(points[0], 0);
  std::vector<double> qx, qw;
  gauss_legendre01(quadrature_order, qx, qw);
  return simplex_integral(f, points, 1, 1.0, points[0], qx, qw, n);
}

double gateaux_n(const SmoothFunction& f, const Eigen::VectorXd& lambda,
                 const Eigen::MatrixXd& R, int n) {
  const int m = static_cast<int>(lambda.size());
  if (R.rows() != m || R.cols() != m)
    throw DimensionMismatch("gateaux_n: R size mismatch");
  const double lscale = std::max(lambda.cwiseAbs().maxCoeff(), 1.0);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (std::abs(lambda[i] - lambda[j]) <= 1e-12 * lscale)
        throw NotSimple(std::abs(lambda[i] - lambda[j]));

  if (n == 1) {
    double acc = 0.0;
    for (int j = 0; j < m; ++j) acc += R(j, j) * f.deriv(lambda[j], 1);
    return acc;
  }
  if (n != 2) throw Error("gateaux_n: only n in {1, 2} supported");

  const SmoothFunction fp = f.shifted(1);
  double form_a = 0.0, form_b = 0.0, scale = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const double rr = R(i, j) * R(j, i);
      const double p2[] = {lambda[i], lambda[j]};
      const double p3[] = {lambda[i], lambda[j], lambda[i]};
      const double va = divided_difference(fp, p2);
      const double vb = 2.0 * divided_difference(f, p3);
      form_a += rr * va;
      form_b += rr * vb;
      scale += std::abs(rr) * std::max(std::abs(va), std::abs(vb));
    }
  if (std::abs(form_a - form_b) > 1e-8 * std::max(scale, 1.0))
    throw Error("gateaux_n: divided-difference forms disagree");
  return form_a;
}

double trace_oracle(std::span<const double> f_poly, const Eigen::VectorXd& D,
                    const Eigen::MatrixXd& R, double t) {
  const int m = static_cast<int>(D.size());
  if (R.rows() != m || R.cols() != m)
    throw DimensionMismatch("trace_oracle: R size mismatch");
  Eigen::MatrixXd A = Eigen::MatrixXd(D.asDiagonal()) + t * R;
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(m, m);
  for (size_t k = f_poly.size(); k-- > 0;) {
    P = P * A;
    P.diagonal().array() += f_poly[k];
  }
  return P.trace();
}

}  // namespace zline
