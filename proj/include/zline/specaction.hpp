#ifndef ZLINE_SPECACTION_HPP
#define ZLINE_SPECACTION_HPP

#include <Eigen/Dense>
#include <functional>
#include <span>
#include <vector>

namespace zline {

// Smooth function with explicit derivative callables: eval(x, k) returns
// f^{(k)}(x) for 0 <= k <= max_order.
struct SmoothFunction {
  std::function<double(double, int)> eval;
  int max_order = 0;

  double operator()(double x) const { return eval(x, 0); }
  double deriv(double x, int k) const;  // throws DerivativeUnavailable

  // Shifted function g = f^{(k)} with max_order reduced accordingly.
  SmoothFunction shifted(int k) const;
};

// Polynomial with exact derivatives of every order (coeffs ascending).
SmoothFunction make_polynomial(std::vector<double> coeffs);

// Divided difference f[x_0, ..., x_n]; repeated points handled by the
// confluent rule (cluster threshold 1e-9). Permutation-invariant.
double divided_difference(const SmoothFunction& f, std::span<const double> points);

// Hermite-Genocchi simplex-integral evaluation via nested Gauss-Legendre.
double hermite_dd(const SmoothFunction& f, std::span<const double> points,
                  int quadrature_order = 24);

// n-th derivative of t -> tr f(D + tR) at t = 0 for n in {1, 2}.
// lambda must be simple. For n = 2 both equivalent divided-difference forms
// are evaluated and cross-checked.
double gateaux_n(const SmoothFunction& f, const Eigen::VectorXd& lambda,
                 const Eigen::MatrixXd& R, int n);

// tr f(D + tR) for polynomial f, via Horner on matrices.
double trace_oracle(std::span<const double> f_poly, const Eigen::VectorXd& D,
                    const Eigen::MatrixXd& R, double t);

}  // namespace zline

#endif
