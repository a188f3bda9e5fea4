#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <zline/errors.hpp>
#include <zline/specaction.hpp>
#include <zline/suites.hpp>

using namespace zline;

TEST_CASE("divided differences of monomials are complete homogeneous sums") {
  // f = x^4 over 3 nodes: dd = h_2(x0, x1, x2)
  // f = x^3 over 3 nodes: h_1 = x0 + x1 + x2; f = x^4: h_2 = sum_{i<=j} x_i x_j
  const std::vector<double> pts = {0.5, -1.25, 2.0};
  CHECK(divided_difference(make_polynomial({0, 0, 0, 1}), pts) ==
        doctest::Approx(pts[0] + pts[1] + pts[2]).epsilon(1e-13));
  double h2 = 0.0;
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = i; j < 3; ++j) h2 += pts[i] * pts[j];
  CHECK(divided_difference(make_polynomial({0, 0, 0, 0, 1}), pts) ==
        doctest::Approx(h2).epsilon(1e-13));
}

TEST_CASE("permutation invariance") {
  const auto f = make_polynomial({1.0, -0.3, 0.0, 2.0, 0.7});
  std::vector<double> pts = {0.1, 1.4, -2.2, 0.9};
  const double base = divided_difference(f, pts);
  std::mt19937 rng(5);
  for (int t = 0; t < 10; ++t) {
    std::shuffle(pts.begin(), pts.end(), rng);
    CHECK(divided_difference(f, pts) ==
          doctest::Approx(base).epsilon(1e-13));
  }
}

TEST_CASE("confluent limits reduce to derivatives") {
  const auto f = make_polynomial({0.0, 1.0, -1.5, 0.25});
  const double x = 0.8;
  const double fp = 1.0 - 3.0 * x + 0.75 * x * x;
  CHECK(divided_difference(f, std::vector<double>{x, x}) ==
        doctest::Approx(fp).epsilon(1e-12));
  const double fpp = -3.0 + 1.5 * x;
  CHECK(divided_difference(f, std::vector<double>{x, x, x}) ==
        doctest::Approx(fpp / 2.0).epsilon(1e-12));
}

TEST_CASE("recursion agrees with Hermite simplex quadrature") {
  std::mt19937 rng(77);
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_int_distribution<int> ord(2, 5);
  for (int t = 0; t < 30; ++t) {
    std::vector<double> coeffs(7);
    for (double& c : coeffs) c = g(rng);
    const auto f = make_polynomial(coeffs);
    std::vector<double> pts(ord(rng));
    for (double& p : pts) p = u(rng);
    const double a = divided_difference(f, pts);
    const double b = hermite_dd(f, pts);
    CHECK(a == doctest::Approx(b).epsilon(1e-9));
  }
}

TEST_CASE("first and second trace derivatives against eigen-decomposition") {
  // tr f(A) via sym_eig as the independent route
  std::mt19937 rng(13);
  std::normal_distribution<double> g;
  const std::vector<double> poly = {0.3, -1.0, 0.5, 0.2, -0.1};
  const int m = 5;
  Eigen::VectorXd D(m);
  D << -2.0, -0.7, 0.1, 1.1, 2.3;
  Eigen::MatrixXd R(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) R(i, j) = g(rng);

  const auto f = make_polynomial(poly);
  for (int n : {1, 2}) {
    const double gat = gateaux_n(f, D, R, n);
    const double fd = suites::richardson_derivative(poly, D, R, n);
    CHECK(gat == doctest::Approx(fd).epsilon(1e-8));
  }
}

TEST_CASE("degenerate base spectrum is rejected") {
  const auto f = make_polynomial({0.0, 1.0, 1.0});
  Eigen::VectorXd D(3);
  D << 0.5, 0.5, 1.0;
  Eigen::MatrixXd R = Eigen::MatrixXd::Identity(3, 3);
  CHECK_THROWS_AS(gateaux_n(f, D, R, 2), NotSimple);
}

TEST_CASE("batch suite: finite differences and the certified identity") {
  const auto res = suites::run_specaction_suite(40, 909);
  CHECK(res.fd_cases == 40);
  CHECK(res.certified > 0);
  CHECK(res.pass());
}
