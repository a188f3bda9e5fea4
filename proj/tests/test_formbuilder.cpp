#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <zline/errors.hpp>
#include <zline/formbuilder.hpp>

#include "testutil.hpp"

using namespace zline;

namespace {

// The density belonging to the coefficient table (without the point mass).
double density(const DistributionSpec& d, double y) {
  double s = d.coeffs.empty() ? 0.0 : d.coeffs[0][0];
  for (size_t k = 1; k < d.coeffs.size(); ++k)
    s += 2.0 * (d.coeffs[k][0] * std::cos(2 * M_PI * k * y / d.L) -
                d.coeffs[k][1] * std::sin(2 * M_PI * k * y / d.L));
  return s;
}

double psi_quadrature(const DistributionSpec& d, double x) {
  const double integral = testutil::integrate(
      [&](double y) { return std::sin(2 * M_PI * x * (1.0 - y / d.L)) * density(d, y); },
      0.0, d.L, 16);
  return (d.delta_weight * std::sin(2 * M_PI * x) + integral) / M_PI;
}

DistributionSpec sample_dist(unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  DistributionSpec d;
  d.delta_weight = g(rng);
  d.coeffs = {{g(rng), 0.0}, {g(rng), g(rng)}, {g(rng), g(rng)}, {g(rng), g(rng)}};
  return d;
}

}  // namespace

TEST_CASE("psi matches quadrature, including integer points") {
  const DistributionSpec d = sample_dist(7);
  for (double x : {0.3, 1.0, -2.0, 2.71, 0.0, 5.0, -3.5}) {
    CHECK(psi_eval(d, x) == doctest::Approx(psi_quadrature(d, x)).epsilon(1e-11));
  }
}

TEST_CASE("psi derivative matches central differences") {
  const DistributionSpec d = sample_dist(11);
  const double h = 1e-5;
  for (double x : {0.4, 1.0, 3.0, -1.25}) {
    const double fd = (psi_eval(d, x + h) - psi_eval(d, x - h)) / (2 * h);
    CHECK(psi_derivative_eval(d, x) == doctest::Approx(fd).epsilon(1e-7));
  }
}

TEST_CASE("point mass alone gives the constant-diagonal form") {
  DistributionSpec d;
  d.delta_weight = 1.0;
  d.coeffs = {{0.0, 0.0}};
  const auto Q = build_form(d, 5);
  for (int i = -5; i <= 5; ++i) {
    CHECK(Q.at_a(i) == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(Q.at_b(i) == doctest::Approx(0.0).scale(1.0).epsilon(1e-13));
  }
}

TEST_CASE("point mass plus one sine mode: closed-form diagonal") {
  const double b = 0.37;
  DistributionSpec d;
  d.delta_weight = 1.0;
  d.coeffs = {{0.0, 0.0}, {0.0, -M_PI * b}};  // 2 pi b sin(2 pi y)
  const auto Q = build_form(d, 6);
  for (int n = -6; n <= 6; ++n) {
    const double want =
        (std::abs(n) == 1) ? 2.0 + b / 2.0 : 2.0 + 2.0 * b / (1.0 - double(n) * n);
    CHECK(Q.at_a(n) == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("materialize realizes the divided-difference structure") {
  const DistributionSpec d = sample_dist(3);
  const auto Q = build_form(d, 4);
  const Eigen::MatrixXd M = Q.materialize();
  CHECK((M - M.transpose()).cwiseAbs().maxCoeff() < 1e-14);
  for (int i = -4; i <= 4; ++i)
    for (int j = -4; j <= 4; ++j) {
      if (i == j) {
        CHECK(M(i + 4, i + 4) == doctest::Approx(Q.at_a(i)));
      } else {
        CHECK(M(i + 4, j + 4) ==
              doctest::Approx((Q.at_b(i) - Q.at_b(j)) / double(i - j)));
      }
    }
}

TEST_CASE("off-diagonal entries are symmetric differences of psi") {
  const DistributionSpec d = sample_dist(19);
  const auto Q = build_form(d, 4);
  const Eigen::MatrixXd M = Q.materialize();
  for (int m = -4; m <= 4; ++m)
    for (int n = m + 1; n <= 4; ++n) {
      const double want = (psi_quadrature(d, m) - psi_quadrature(d, n)) / (m - n);
      CHECK(M(m + 4, n + 4) == doctest::Approx(want).epsilon(1e-10));
    }
}

TEST_CASE("round trip through recover_distribution") {
  const DistributionSpec d = sample_dist(23);
  const auto Q = build_form(d, 8);
  const DistributionSpec back = recover_distribution(Q);
  CHECK(back.delta_weight == doctest::Approx(d.delta_weight).epsilon(1e-10));
  REQUIRE(back.coeffs.size() >= d.coeffs.size());
  for (size_t k = 0; k < d.coeffs.size(); ++k) {
    CHECK(back.coeffs[k][0] == doctest::Approx(d.coeffs[k][0]).scale(1.0).epsilon(1e-10));
    CHECK(back.coeffs[k][1] == doctest::Approx(d.coeffs[k][1]).scale(1.0).epsilon(1e-10));
  }
  for (size_t k = d.coeffs.size(); k < back.coeffs.size(); ++k) {
    CHECK(std::abs(back.coeffs[k][0]) < 1e-10);
    CHECK(std::abs(back.coeffs[k][1]) < 1e-10);
  }
}

TEST_CASE("delta_shift adds 2c to the diagonal only") {
  const DistributionSpec d = sample_dist(5);
  const auto Q = build_form(d, 6);
  const auto S = delta_shift(Q, 0.75);
  for (int i = -6; i <= 6; ++i) {
    CHECK(S.at_a(i) == doctest::Approx(Q.at_a(i) + 1.5));
    CHECK(S.at_b(i) == doctest::Approx(Q.at_b(i)));
  }
  const DistributionSpec back = recover_distribution(S);
  CHECK(back.delta_weight == doctest::Approx(d.delta_weight + 0.75).epsilon(1e-10));
}

TEST_CASE("validation rejects malformed input") {
  DistributionSpec bad;
  bad.coeffs = {{1.0, 0.5}};  // a_0 must be real
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  auto Q = QuadraticFormStructure::zero(2);
  Q.at_a(1) = 1.0;  // breaks even symmetry of the diagonal
  CHECK_THROWS_AS(Q.validate(), std::invalid_argument);

  auto Q2 = QuadraticFormStructure::zero(2);
  Q2.lambda[0] = Q2.lambda[1];  // repeated model eigenvalue
  CHECK_THROWS_AS(Q2.validate(), std::invalid_argument);
}
