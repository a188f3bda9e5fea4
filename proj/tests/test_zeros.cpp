#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>
#include <zline/errors.hpp>
#include <zline/zeros.hpp>

#include "testutil.hpp"

using namespace zline;
using cplx = std::complex<double>;

TEST_CASE("build_p matches direct evaluation at random points") {
  std::mt19937 rng(31);
  std::normal_distribution<double> g;
  std::vector<double> xi(7), lambda = {-3, -2, -1, 0, 1, 2, 3};
  for (double& x : xi) x = g(rng);
  const auto P = build_p(xi, lambda);
  REQUIRE(P.coeffs.size() == 7);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int t = 0; t < 25; ++t) {
    const double s = u(rng);
    double direct = 0.0;
    for (size_t k = 0; k < xi.size(); ++k) {
      double prod = xi[k];
      for (size_t j = 0; j < lambda.size(); ++j)
        if (j != k) prod *= lambda[j] - s;
      direct += prod;
    }
    CHECK(P.eval(s) == doctest::Approx(direct).epsilon(1e-11));
  }
  CHECK_THROWS_AS(build_p(std::vector<double>{1.0, 1.0},
                          std::vector<double>{0.5, 0.5}),
                  RepeatedLambda);
}

TEST_CASE("the (1, x, 1) family: (2+x) s^2 - x") {
  const std::vector<double> lambda = {-1, 0, 1};
  for (double x : {0.5, 1.0, -0.5, -2.5}) {
    const auto P = build_p(std::vector<double>{1.0, x, 1.0}, lambda);
    CHECK(P.coeffs[2] == doctest::Approx(2.0 + x));
    CHECK(P.coeffs[1] == doctest::Approx(0.0).scale(1.0));
    CHECK(P.coeffs[0] == doctest::Approx(-x).scale(1.0));
    const auto zr = poly_roots(P);
    const bool want_real = x * (x + 2.0) >= 0.0;
    CHECK(zr.certified_real == want_real);
    if (want_real) {
      const double r = std::sqrt(x / (2.0 + x));
      double best = 1e9;
      for (const auto& z : zr.zeros) best = std::min(best, std::abs(z - cplx(r, 0)));
      CHECK(best < 1e-10);
    }
  }
  CHECK_THROWS_AS(
      poly_roots(build_p(std::vector<double>{1.0, -2.0, 1.0}, lambda)),
      DegenerateDegree);  // sum xi = 0 kills the degree
}

TEST_CASE("xi_hat matches quadrature at complex arguments") {
  std::mt19937 rng(41);
  std::normal_distribution<double> g;
  std::vector<double> xi(5);
  for (double& x : xi) x = g(rng);
  const int N = 2;
  const auto integrand = [&](double x, cplx z) {
    cplx f = 0.0;
    for (int j = -N; j <= N; ++j) f += xi[j + N] * std::exp(cplx(0, 2 * M_PI * j * x));
    return f * std::exp(cplx(0, -1.0) * z * x);
  };
  for (cplx z : {cplx(0.7, 0.0), cplx(3.9, 1.2), cplx(-11.0, -0.4), cplx(0.0, 0.0)}) {
    const cplx direct(
        testutil::integrate([&](double x) { return integrand(x, z).real(); }, 0, 1, 12),
        testutil::integrate([&](double x) { return integrand(x, z).imag(); }, 0, 1, 12));
    CHECK(std::abs(xi_hat_eval(xi, z) - direct) < 1e-11);
  }
}

TEST_CASE("xi_hat at lattice points picks out coefficients") {
  const std::vector<double> xi = {0.4, 0.0, 1.3, -0.2, 0.9};
  for (int m = -2; m <= 2; ++m) {
    const cplx v = xi_hat_eval(xi, cplx(2 * M_PI * m, 0.0));
    CHECK(std::abs(v - cplx(xi[m + 2], 0.0)) < 1e-14);
  }
}

TEST_CASE("zero set: lattice survivors plus scaled P-roots") {
  // xi_1 = 0, so 2 pi is a lattice zero; remaining zeros come from P.
  const std::vector<double> xi = {0.3, 1.0, 0.5, 0.0, 0.3};
  const auto rep = xi_hat_zeros(xi, 30.0);
  bool has_lattice = false;
  for (const auto& z : rep.zeros) {
    CHECK(std::abs(xi_hat_eval(xi, z)) < 1e-7);
    if (std::abs(z - cplx(2 * M_PI, 0.0)) < 1e-8) has_lattice = true;
  }
  CHECK(has_lattice);
}

TEST_CASE("shannon transform: exact on the lattice, quadrature off it") {
  std::mt19937 rng(53);
  std::normal_distribution<double> g;
  const int M = 3;
  std::vector<cplx> fhat(2 * M + 1);
  for (int n = -M; n <= M; ++n) fhat[n + M] = cplx(g(rng), g(rng));
  // make the function real: fhat(-n) = conj(fhat(n))
  for (int n = 1; n <= M; ++n) fhat[M - n] = std::conj(fhat[M + n]);
  fhat[M] = cplx(fhat[M].real(), 0.0);
  const double L = 1.0;

  const auto direct = [&](cplx s) {
    const double re = testutil::integrate(
        [&](double x) {
          double f = 0.0;
          for (int n = -M; n <= M; ++n)
            f += (fhat[n + M] * std::exp(cplx(0, 2 * M_PI * n * x / L))).real();
          return f * std::cos(s.real() * x) * std::exp(s.imag() * x);
        },
        0.0, L, 12);
    const double im = testutil::integrate(
        [&](double x) {
          double f = 0.0;
          for (int n = -M; n <= M; ++n)
            f += (fhat[n + M] * std::exp(cplx(0, 2 * M_PI * n * x / L))).real();
          return -f * std::sin(s.real() * x) * std::exp(s.imag() * x);
        },
        0.0, L, 12);
    // the transform is taken of the recentered function on [-L/2, L/2]
    return std::exp(cplx(0, 1) * s * (L / 2)) * cplx(re, im);
  };

  for (int n = -M; n <= M; ++n) {
    const cplx s(2 * M_PI * n / L, 0.0);
    CHECK(std::abs(shannon_transform(fhat, L, s) - direct(s)) < 1e-12);
  }
  for (cplx s : {cplx(1.3, 0.0), cplx(-7.7, 0.5), cplx(25.0, -1.0)})
    CHECK(std::abs(shannon_transform(fhat, L, s) - direct(s)) < 1e-9);
}
