#include "zline/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zline/entire.hpp"
#include "zline/errors.hpp"
#include "zline/polyroots.hpp"

namespace zline {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// coeffs += term, compensated (Kahan) per coefficient.
struct CompensatedPoly {
  std::vector<double> sum, comp;
  explicit CompensatedPoly(size_t n) : sum(n, 0.0), comp(n, 0.0) {}
  void add(const std::vector<double>& term) {
    for (size_t i = 0; i < term.size(); ++i) {
      const double y = term[i] - comp[i];
      const double t = sum[i] + y;
      comp[i] = (t - sum[i]) - y;
      sum[i] = t;
    }
  }
};
}  // namespace

namespace {
// Product-form evaluation of P and P' at complex s; numerically stable for
// the wide coefficient ranges that the monomial form develops at large N.
void eval_product_form(const std::vector<double>& xi,
                       const std::vector<double>& lambda, std::complex<double> s,
                       std::complex<double>& p, std::complex<double>& dp) {
  const size_t n = lambda.size();
  p = dp = 0.0;
  for (size_t k = 0; k < n; ++k) {
    std::complex<double> q = xi[k], dq = 0.0;
    for (size_t j = 0; j < n; ++j) {
      if (j == k) continue;
      const std::complex<double> f = lambda[j] - s;
      dq = dq * f - q;
      q *= f;
    }
    p += q;
    dp += dq;
  }
}
}  // namespace

double KernelPolynomial::eval(double s) const {
  double acc = 0.0;
  for (size_t k = coeffs.size(); k-- > 0;) acc = acc * s + coeffs[k];
  return acc;
}

KernelPolynomial build_p(std::span<const double> xi, std::span<const double> lambda) {
  if (xi.size() != lambda.size() || xi.empty())
    throw DimensionMismatch("build_p: xi and lambda must have equal nonzero size");
  const size_t n = lambda.size();
  double lscale = 0.0;
  for (double l : lambda) lscale = std::max(lscale, std::abs(l));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (std::abs(lambda[i] - lambda[j]) <= 1e-12 * std::max(lscale, 1.0))
        throw RepeatedLambda();

  CompensatedPoly acc(n);
  std::vector<double> term;
  term.reserve(n);
  for (size_t k = 0; k < n; ++k) {
    term.assign(1, xi[k]);
    for (size_t j = 0; j < n; ++j) {
      if (j == k) continue;
      // multiply by (lambda_j - s)
      term.push_back(0.0);
      for (size_t m = term.size(); m-- > 1;)
        term[m] = lambda[j] * term[m] - term[m - 1];
      term[0] *= lambda[j];
    }
    term.resize(n, 0.0);
    acc.add(term);
  }

  KernelPolynomial P;
  P.xi.assign(xi.begin(), xi.end());
  P.lambda.assign(lambda.begin(), lambda.end());
  P.coeffs = std::move(acc.sum);
  return P;
}

ZeroReport poly_roots(const KernelPolynomial& P, double tol_real) {
  // The leading coefficient is (up to sign) sum xi_k, so degeneracy has to
  // be judged against ||xi||: the lower coefficients carry products of the
  // lambda and dwarf it for perfectly healthy polynomials.
  double scale = 0.0;
  if (!P.xi.empty()) {
    for (double x : P.xi) scale += std::abs(x);
  } else {
    for (double c : P.coeffs) scale = std::max(scale, std::abs(c));
  }
  if (scale == 0.0 || std::abs(P.coeffs.back()) <= 1e-12 * scale)
    throw DegenerateDegree();
  ZeroReport rep;
  rep.tol = tol_real;
  rep.zeros = companion_roots(P.coeffs);
  if (!P.xi.empty() && P.xi.size() == P.lambda.size()) {
    // polish the companion roots in the product form
    for (auto& z : rep.zeros) {
      for (int it = 0; it < 20; ++it) {
        std::complex<double> p, dp;
        eval_product_form(P.xi, P.lambda, z, p, dp);
        if (std::abs(dp) == 0.0) break;
        const std::complex<double> step = p / dp;
        z -= step;
        if (std::abs(step) <= 1e-15 * (1.0 + std::abs(z))) break;
      }
    }
  }
  double maxmod = 0.0;
  for (const auto& z : rep.zeros) {
    rep.max_abs_imag = std::max(rep.max_abs_imag, std::abs(z.imag()));
    maxmod = std::max(maxmod, std::abs(z));
  }
  rep.certified_real = rep.max_abs_imag <= tol_real * (1.0 + maxmod);
  return rep;
}

std::complex<double> xi_hat_eval(std::span<const double> xi, std::complex<double> z) {
  if (xi.size() % 2 == 0) throw DimensionMismatch("xi_hat_eval: xi must have odd size");
  const int N = static_cast<int>(xi.size() / 2);
  std::complex<double> acc{0.0, 0.0};
  for (int j = -N; j <= N; ++j) acc += xi[j + N] * eps(z - kTwoPi * j);
  return acc;
}

ZeroReport xi_hat_zeros(std::span<const double> xi, double search_radius,
                        double tol_real, double tol_eval) {
  if (xi.size() % 2 == 0) throw DimensionMismatch("xi_hat_zeros: xi must have odd size");
  const int N = static_cast<int>(xi.size() / 2);
  double norm = 0.0;
  for (double v : xi) norm += v * v;
  norm = std::sqrt(norm);
  if (norm == 0.0) throw std::invalid_argument("xi_hat_zeros: zero vector");
  std::vector<double> u(xi.begin(), xi.end());
  for (double& v : u) v /= norm;

  ZeroReport rep;
  rep.tol = tol_real;

  // Lattice zeros of sin(z/2) that survive pole cancellation.
  const int mmax = static_cast<int>(std::floor(search_radius / kTwoPi));
  for (int m = -mmax; m <= mmax; ++m) {
    if (m == 0) continue;
    const std::complex<double> z{kTwoPi * m, 0.0};
    if (std::abs(xi_hat_eval(u, z)) <= tol_eval) rep.zeros.push_back(z);
  }

  // The remaining zeros are 2 pi times the roots of P.
  std::vector<double> lambda(2 * N + 1);
  for (int j = -N; j <= N; ++j) lambda[j + N] = static_cast<double>(j);
  const KernelPolynomial P = build_p(u, lambda);
  const ZeroReport proots = poly_roots(P, tol_real);
  for (const auto& r : proots.zeros) {
    const std::complex<double> z = kTwoPi * r;
    if (std::abs(z.real()) <= search_radius) rep.zeros.push_back(z);
  }

  double maxmod = 0.0;
  for (const auto& z : rep.zeros) {
    rep.max_abs_imag = std::max(rep.max_abs_imag, std::abs(z.imag()));
    maxmod = std::max(maxmod, std::abs(z));
  }
  rep.certified_real = rep.max_abs_imag <= tol_real * (1.0 + maxmod);
  return rep;
}

std::complex<double> shannon_transform(std::span<const std::complex<double>> fhat,
                                       double L, std::complex<double> s) {
  if (fhat.size() % 2 == 0)
    throw DimensionMismatch("shannon_transform: fhat must have odd size");
  if (!(L > 0.0)) throw std::invalid_argument("shannon_transform: L must be positive");
  const int M = static_cast<int>(fhat.size() / 2);
  std::complex<double> acc{0.0, 0.0};
  for (int n = -M; n <= M; ++n) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    acc += fhat[n + M] * sign * csinc(L * s / 2.0 - std::numbers::pi * n);
  }
  return acc;
}

}  // namespace zline
