#ifndef ZLINE_TESTS_TESTUTIL_HPP
#define ZLINE_TESTS_TESTUTIL_HPP

#include <cmath>
#include <functional>
#include <vector>

namespace testutil {

// Gauss-Legendre nodes/weights on [-1, 1] via Newton on P_n.
inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double dp = n * (t * p1 - p0) / (t * t - 1.0);
      const double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) {
        w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
        break;
      }
    }
    x[i] = t;
  }
}

// Composite 24-point Gauss-Legendre on [a, b].
template <typename F>
double integrate(F&& f, double a, double b, int panels = 8) {
  static std::vector<double> gx, gw;
  if (gx.empty()) gauss_legendre(24, gx, gw);
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + (b - a) * p / panels;
    const double hi = a + (b - a) * (p + 1) / panels;
    const double mid = (lo + hi) / 2, half = (hi - lo) / 2;
    for (size_t i = 0; i < gx.size(); ++i) total += gw[i] * half * f(mid + half * gx[i]);
  }
  return total;
}

}  // namespace testutil

#endif
